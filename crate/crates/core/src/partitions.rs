//! Integer partitions and compositions.
//!
//! Partitions label both the irreducible characters of the symmetric groups
//! and the types of set families. Everything here is a pure function on
//! small value objects.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(m^n)`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if m == 0 {
            return Partition::empty();
        }
        Partition(vec![m; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.largest() + 1];
        for &p in &self.0 {
            mult[p] += 1;
        }
        mult
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated descending integers, e.g. `6,2,2,2`. The empty
/// string and `()` parse to the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// A finite sequence of non-negative integers with trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Composition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.iter().all(|&e| e > 0)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition(self.0.clone()))
    }

    /// Dominance of compositions by partial sums.
    pub fn dominates(&self, other: &Composition) -> Result<bool> {
        partial_sums_dominate(&self.0, &other.0)
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

fn partial_sums_dominate(p: &[usize], q: &[usize]) -> Result<bool> {
    let (wp, wq) = (p.iter().sum::<usize>(), q.iter().sum::<usize>());
    if wp != wq {
        return Err(Error::IncomparableWeights {
            left: wp,
            right: wq,
        });
    }
    let (mut sp, mut sq) = (0usize, 0usize);
    for i in 0..p.len().max(q.len()) {
        sp += p.get(i).copied().unwrap_or(0);
        sq += q.get(i).copied().unwrap_or(0);
        if sp < sq {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn conjugate(p: &Partition) -> Partition {
    let mut out = Vec::with_capacity(p.largest());
    for i in 1..=p.largest() {
        out.push(p.0.iter().take_while(|&&x| x >= i).count());
    }
    Partition(out)
}

/// `p ⊵ q` in the dominance order. Unequal weights are an error.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    partial_sums_dominate(&p.0, &q.0)
}

/// `p ⊳ q`: dominance with `p != q`.
pub fn strictly_dominates(p: &Partition, q: &Partition) -> Result<bool> {
    Ok(p != q && dominates(p, q)?)
}

/// The partition whose multiset of parts is the union of those of `p` and `q`.
pub fn union_parts(p: &Partition, q: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(p.len() + q.len());
    parts.extend_from_slice(&p.0);
    parts.extend_from_slice(&q.0);
    Partition::from_unsorted(parts)
}

/// `(m^n) ⋆ nu`: for each `i`, remove `nu_i` boxes from column `m+1-i` of the
/// `n × m` rectangle (taken from the lowest rows) and add `nu_i` boxes to row `i`.
pub fn star(m: usize, n: usize, nu: &Partition) -> Result<Partition> {
    let invalid = |reason: &str| Error::InvalidNu {
        m,
        n,
        nu: nu.parts().to_vec(),
        reason: reason.to_string(),
    };
    if m == 0 || n == 0 {
        return Err(invalid("m and n must be positive"));
    }
    if nu.weight() != n - 1 {
        return Err(invalid("nu must be a partition of n-1"));
    }
    let k = nu.len();
    if k > m {
        return Err(invalid("nu has more than m parts"));
    }
    if k + nu.largest() > n {
        return Err(invalid("k + nu_1 exceeds n"));
    }
    let mut rows = vec![m; n];
    for (i, &take) in nu.parts().iter().enumerate() {
        let column = m - i; // 1-based column m+1-i
        let mut remaining = take;
        for row in rows.iter_mut().rev() {
            if remaining == 0 {
                break;
            }
            if *row == column {
                *row -= 1;
                remaining -= 1;
            }
        }
        if remaining > 0 {
            return Err(invalid("column too short"));
        }
    }
    for (i, &add) in nu.parts().iter().enumerate() {
        rows[i] += add;
    }
    Partition::new(rows.into_iter().filter(|&r| r > 0).collect())
        .map_err(|_| invalid("construction did not produce a partition"))
}

/// The `nu` with `star(m, n, nu) == lam`, if there is one.
pub fn star_preimage(m: usize, n: usize, lam: &Partition) -> Option<Partition> {
    if n == 0 || lam.weight() != m * n {
        return None;
    }
    partitions_of(n - 1)
        .filter(|nu| nu.len() <= m)
        .find(|nu| star(m, n, nu).as_ref() == Ok(lam))
}

/// `p - (c^k)`: subtract `c` from every part and drop zeros.
pub fn subtract_rect(p: &Partition, c: usize) -> Result<Partition> {
    if p.0.iter().any(|&x| x < c) {
        return Err(Error::RectangleTooWide {
            partition: p.0.clone(),
            width: c,
        });
    }
    Ok(Partition(
        p.0.iter().map(|&x| x - c).filter(|&x| x > 0).collect(),
    ))
}

/// All partitions obtained from `p` by moving a single box to a higher row.
///
/// Each result strictly dominates `p`. These are the one-box steps along which
/// the two-families-of-a-larger-type construction proceeds; every dominance
/// cover of `p` is among them.
pub fn raise_one_box(p: &Partition) -> Vec<Partition> {
    let mut rows = p.0.clone();
    rows.push(0);
    let mut out = Vec::new();
    for from in 1..rows.len() {
        if rows[from] == 0 {
            continue;
        }
        for to in 0..from {
            let mut r = rows.clone();
            r[from] -= 1;
            r[to] += 1;
            if r.windows(2).all(|w| w[0] >= w[1]) {
                out.push(Partition(r.into_iter().filter(|&x| x > 0).collect()));
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// The dominance-minimal elements of `labels` (all of one weight).
pub fn minimal_elements<'a, I>(labels: I) -> Vec<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let mut all: Vec<Partition> = labels.into_iter().cloned().collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.dedup();
    all.iter()
        .filter(|lam| {
            !all.iter()
                .any(|mu| strictly_dominates(lam, mu).unwrap_or(false))
        })
        .cloned()
        .collect()
}

/// Partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // rightmost part larger than one
        let mut ones = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.pop() {
            let cap = last - 1;
            let mut rest = ones + 1 + cap;
            while rest > 0 {
                let piece = rest.min(cap);
                succ.push(piece);
                rest -= piece;
            }
            self.next = Some(succ);
        }
        Some(Partition(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[])), p(&[]));
        assert_eq!(conjugate(&p(&[5, 4, 2, 1])), p(&[4, 3, 2, 2, 1]));
        assert_eq!(conjugate(&p(&[6, 2, 2, 2])), p(&[4, 4, 1, 1, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        let a = p(&[4, 4, 4]);
        let b = p(&[5, 4, 2, 1]);
        assert!(!dominates(&a, &b).unwrap());
        assert!(!dominates(&b, &a).unwrap());
        assert!(dominates(&b, &b).unwrap());
        assert!(dominates(
            &p(&[7, 6, 6, 6, 6, 2, 2, 2, 2, 1]),
            &p(&[7, 6, 6, 6, 4, 4, 2, 2, 2, 1])
        )
        .unwrap());
    }

    #[test]
    fn dominance_rejects_unequal_weights() {
        let err = dominates(&p(&[3]), &p(&[2, 1, 1])).unwrap_err();
        assert!(err.to_string().contains("incomparable weights"));
    }

    #[test]
    fn union_examples() {
        assert_eq!(
            union_parts(&p(&[5, 2]), &p(&[3, 2, 2, 1, 1])),
            p(&[5, 3, 2, 2, 2, 1, 1])
        );
        assert_eq!(union_parts(&p(&[3, 1]), &p(&[])), p(&[3, 1]));
        assert_eq!(
            union_parts(&p(&[6, 6, 6, 6, 1]), &p(&[7, 2, 2, 2, 2])),
            p(&[7, 6, 6, 6, 6, 2, 2, 2, 2, 1])
        );
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            star(5, 8, &p(&[4, 2, 1])).unwrap(),
            p(&[9, 7, 6, 5, 4, 4, 3, 2])
        );
        assert_eq!(star(5, 5, &p(&[2, 1, 1])).unwrap(), p(&[7, 6, 6, 4, 2]));
        assert_eq!(star(3, 5, &p(&[3, 1])).unwrap(), p(&[6, 4, 2, 2, 1]));
        for n in 1..=10 {
            let nu = if n == 1 { p(&[]) } else { p(&[n - 1]) };
            assert_eq!(star(1, n, &nu).unwrap(), p(&[n]));
        }
    }

    #[test]
    fn star_rejects_bad_nu() {
        assert!(matches!(
            star(3, 5, &p(&[2, 1])),
            Err(Error::InvalidNu { .. })
        ));
        assert!(matches!(
            star(2, 5, &p(&[2, 1, 1])),
            Err(Error::InvalidNu { .. })
        ));
    }

    #[test]
    fn star_preimage_roundtrip() {
        let lam = star(5, 5, &p(&[2, 1, 1])).unwrap();
        assert_eq!(star_preimage(5, 5, &lam), Some(p(&[2, 1, 1])));
        assert_eq!(star_preimage(3, 6, &p(&[5, 5, 5, 1, 1, 1])), None);
    }

    #[test]
    fn subtract_rect_examples() {
        assert_eq!(subtract_rect(&p(&[5, 5, 3]), 3).unwrap(), p(&[2, 2]));
        assert_eq!(subtract_rect(&p(&[4, 1]), 0).unwrap(), p(&[4, 1]));
        assert_eq!(subtract_rect(&p(&[3, 3, 3]), 3).unwrap(), p(&[]));
        assert!(subtract_rect(&p(&[5, 2]), 3).is_err());
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![p(&[])]);
        assert_eq!(
            partitions_of(4).collect::<Vec<_>>(),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "6,2,2,2".parse().unwrap();
        assert_eq!(q, p(&[6, 2, 2, 2]));
        assert_eq!(q.to_string(), "(6,2,2,2)");
        assert!("2,3".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&q).unwrap(), "[6,2,2,2]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn raise_one_box_steps_up() {
        let lam = p(&[2, 2]);
        assert_eq!(raise_one_box(&lam), vec![p(&[3, 1])]);
        for mu in raise_one_box(&p(&[3, 2, 2, 1])) {
            assert!(strictly_dominates(&mu, &p(&[3, 2, 2, 1])).unwrap());
        }
    }
}
