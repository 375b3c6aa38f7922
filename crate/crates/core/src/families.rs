//! Set families of shape `(m^n)`: types, closedness, closure and enumeration.
//!
//! A set family is a collection of `n` distinct `m`-subsets of the naturals.
//! It is *closed* when it is a down-set for majorization, and its *type* is
//! the conjugate of its membership-count vector whenever that vector is
//! weakly decreasing (which closed families guarantee).
//!
//! Closed families of `n` sets are exactly the order ideals of size `n` in the
//! majorization poset. They are enumerated by adding sets in lexicographic
//! order: lexicographic order is a linear extension of majorization, so every
//! ideal is produced once, as its sorted list of members.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partitions::{conjugate, minimal_elements, Composition, Partition};
use crate::subsets::{self, downset, lower_covers, MSubset};

/// `n` distinct `m`-subsets, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct SetFamily {
    m: usize,
    sets: Vec<MSubset>,
}

/// Wire form: `{"m": 3, "n": 4, "sets": [[1,2,3], …]}`.
#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    m: usize,
    #[serde(default)]
    n: Option<usize>,
    sets: Vec<MSubset>,
}

impl TryFrom<FamilyRepr> for SetFamily {
    type Error = Error;

    fn try_from(r: FamilyRepr) -> Result<Self> {
        if let Some(n) = r.n.filter(|&n| n != r.sets.len()) {
            return Err(Error::InvalidFamily(format!(
                "declared n = {n} but {} sets given",
                r.sets.len()
            )));
        }
        SetFamily::new(r.m, r.sets)
    }
}

impl From<SetFamily> for FamilyRepr {
    fn from(f: SetFamily) -> Self {
        FamilyRepr {
            m: f.m,
            n: Some(f.sets.len()),
            sets: f.sets,
        }
    }
}

impl SetFamily {
    pub fn new(m: usize, mut sets: Vec<MSubset>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidFamily("m must be positive".into()));
        }
        if sets.is_empty() {
            return Err(Error::InvalidFamily(
                "a family needs at least one set".into(),
            ));
        }
        if let Some(bad) = sets.iter().find(|s| s.len() != m) {
            return Err(Error::InvalidFamily(format!(
                "{bad} does not have {m} elements"
            )));
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily(format!("{} appears twice", w[0])));
        }
        Ok(SetFamily { m, sets })
    }

    /// Convenience constructor from raw element lists; `m` is read off the first set.
    pub fn from_lists(lists: &[&[usize]]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| MSubset::from_unsorted(l.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        let m = sets.first().map_or(0, MSubset::len);
        SetFamily::new(m, sets)
    }

    pub(crate) fn from_sorted_unchecked(m: usize, sets: Vec<MSubset>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        SetFamily { m, sets }
    }

    /// The union of the downsets of `generators`.
    pub fn union_of_downsets(generators: &[MSubset]) -> Result<Self> {
        let m = generators
            .first()
            .map(MSubset::len)
            .ok_or_else(|| Error::InvalidFamily("no generators".into()))?;
        let mut all = BTreeSet::new();
        for g in generators {
            if g.len() != m {
                return Err(Error::CardinalityMismatch {
                    left: m,
                    right: g.len(),
                });
            }
            all.extend(downset(g).sets);
        }
        Ok(SetFamily::from_sorted_unchecked(
            m,
            all.into_iter().collect(),
        ))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of member sets.
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[MSubset] {
        &self.sets
    }

    pub fn contains(&self, x: &MSubset) -> bool {
        self.sets.binary_search(x).is_ok()
    }

    pub fn max_entry(&self) -> usize {
        self.sets.iter().map(MSubset::max).max().unwrap_or(0)
    }

    /// Members not majorized by any other member.
    pub fn maximal_elements(&self) -> Vec<MSubset> {
        self.sets
            .iter()
            .filter(|x| {
                !self
                    .sets
                    .iter()
                    .any(|y| y != *x && subsets::majorizes(x, y).unwrap_or(false))
            })
            .cloned()
            .collect()
    }

    /// `self` with `remove` taken out and `add` put in.
    pub fn exchange(&self, remove: &[MSubset], add: &[MSubset]) -> Result<Self> {
        let mut sets: Vec<MSubset> = self
            .sets
            .iter()
            .filter(|s| !remove.contains(s))
            .cloned()
            .collect();
        if sets.len() + remove.len() != self.sets.len() {
            return Err(Error::InvalidFamily("removed set not in family".into()));
        }
        sets.extend(add.iter().cloned());
        SetFamily::new(self.m, sets)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// Type information about one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedFamilyReport {
    pub family: SetFamily,
    #[serde(rename = "type")]
    pub family_type: Option<Partition>,
    pub conj_type: Composition,
    pub closed: bool,
}

pub fn report(f: &SetFamily) -> TypedFamilyReport {
    let conj = conj_type(f);
    TypedFamilyReport {
        family: f.clone(),
        family_type: conj.to_partition().map(|c| conjugate(&c)),
        conj_type: conj,
        closed: is_closed(f),
    }
}

/// Entry `i` counts the member sets containing `i + 1`.
pub fn conj_type(f: &SetFamily) -> Composition {
    let mut counts = vec![0; f.max_entry()];
    for s in &f.sets {
        for &x in s.elements() {
            counts[x - 1] += 1;
        }
    }
    Composition::new(counts)
}

pub fn family_type(f: &SetFamily) -> Result<Partition> {
    let conj = conj_type(f);
    conj.to_partition()
        .map(|c| conjugate(&c))
        .ok_or_else(|| Error::NoWellDefinedType(conj.entries().to_vec()))
}

/// Closed iff every lower cover of every member is a member.
pub fn is_closed(f: &SetFamily) -> bool {
    f.sets
        .iter()
        .all(|y| lower_covers(y).iter().all(|x| f.contains(x)))
}

/// Pushes the family down until it is closed.
///
/// Each step replaces a member `A` containing `i+1` by `A \ {i+1} ∪ {i}` when
/// that set is absent; the first such move in lexicographic order of `(A, i)`
/// is taken. Every step raises the conjugate type in dominance, so the loop
/// terminates, and a closed input comes back unchanged.
pub fn close(f: &SetFamily) -> SetFamily {
    let mut sets: BTreeSet<MSubset> = f.sets.iter().cloned().collect();
    loop {
        let step = sets.iter().find_map(|a| {
            lower_covers(a)
                .into_iter()
                .find(|b| !sets.contains(b))
                .map(|b| (a.clone(), b))
        });
        match step {
            Some((a, b)) => {
                sets.remove(&a);
                sets.insert(b);
            }
            None => break,
        }
    }
    SetFamily::from_sorted_unchecked(f.m, sets.into_iter().collect())
}

/// Candidate sets for ideals of size `n`, with lower covers as indices.
struct Universe {
    sets: Vec<MSubset>,
    covers: Vec<Vec<usize>>,
}

impl Universe {
    fn new(m: usize, n: usize) -> Self {
        let sets = subsets::levels_up_to(m, n - 1);
        let index: HashMap<&MSubset, usize> =
            sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let covers = sets
            .iter()
            .map(|s| lower_covers(s).iter().map(|c| index[c]).collect())
            .collect();
        Universe { sets, covers }
    }

    fn extend(
        &self,
        n: usize,
        present: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == n {
            out.push(chosen.clone());
            return;
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        for j in start..self.sets.len() {
            if self.covers[j].iter().all(|&c| present[c]) {
                present[j] = true;
                chosen.push(j);
                self.extend(n, present, chosen, out);
                chosen.pop();
                present[j] = false;
            }
        }
    }

    /// All prefixes of length `depth` (or complete ideals, if shorter).
    fn prefixes(&self, n: usize, depth: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut present = vec![false; self.sets.len()];
        self.extend(depth.min(n), &mut present, &mut Vec::new(), &mut out);
        out
    }

    fn complete(&self, n: usize, prefix: &[usize]) -> Vec<Vec<usize>> {
        let mut present = vec![false; self.sets.len()];
        for &i in prefix {
            present[i] = true;
        }
        let mut out = Vec::new();
        self.extend(n, &mut present, &mut prefix.to_vec(), &mut out);
        out
    }
}

/// All closed families of shape `(m^n)`, sorted.
pub fn enumerate_closed(m: usize, n: usize, guards: &Guards) -> Result<Vec<SetFamily>> {
    guards.check_family_points(m, n)?;
    enumerate_closed_unbounded(m, n)
}

/// [`enumerate_closed`] without the size guard, for batch runs.
pub fn enumerate_closed_unbounded(m: usize, n: usize) -> Result<Vec<SetFamily>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidFamily("m and n must be positive".into()));
    }
    let universe = Universe::new(m, n);
    let prefixes = universe.prefixes(n, 6);
    let mut families: Vec<SetFamily> = prefixes
        .par_iter()
        .flat_map_iter(|p| universe.complete(n, p))
        .map(|idx| {
            SetFamily::from_sorted_unchecked(
                m,
                idx.iter().map(|&i| universe.sets[i].clone()).collect(),
            )
        })
        .collect();
    families.sort_unstable();
    Ok(families)
}

/// Every family of shape `(m^n)` and type `lam`, closed or not.
///
/// Backtracks over the `m`-subsets of `{1, …, lam_1}` in lexicographic order,
/// tracking how many more sets must contain each element.
pub fn enumerate_of_type(m: usize, n: usize, lam: &Partition) -> Vec<SetFamily> {
    if m == 0 || n == 0 || lam.weight() != m * n {
        return Vec::new();
    }
    let need: Vec<usize> = conjugate(lam).into_parts();
    let columns = need.len();
    if columns < m {
        return Vec::new();
    }
    let candidates = k_subsets(columns, m);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut remaining = need;
    backtrack_type(&candidates, 0, n, &mut remaining, &mut chosen, &mut out);
    out.into_iter()
        .map(|idx: Vec<usize>| {
            SetFamily::from_sorted_unchecked(
                m,
                idx.iter().map(|&i| candidates[i].clone()).collect(),
            )
        })
        .collect()
}

fn backtrack_type(
    candidates: &[MSubset],
    start: usize,
    n: usize,
    remaining: &mut [usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let left = n - chosen.len();
    if left == 0 {
        if remaining.iter().all(|&r| r == 0) {
            out.push(chosen.clone());
        }
        return;
    }
    if remaining.iter().any(|&r| r > left) {
        return;
    }
    for j in start..candidates.len() {
        let set = &candidates[j];
        // later candidates start at or after this one's minimum, so smaller
        // elements still owed can never be supplied
        let low = set.elements()[0];
        if remaining[..low - 1].iter().any(|&r| r > 0) {
            break;
        }
        if set.elements().iter().any(|&x| remaining[x - 1] == 0) {
            continue;
        }
        for &x in set.elements() {
            remaining[x - 1] -= 1;
        }
        chosen.push(j);
        backtrack_type(candidates, j + 1, n, remaining, chosen, out);
        chosen.pop();
        for &x in set.elements() {
            remaining[x - 1] += 1;
        }
    }
}

/// `k`-subsets of `{1, …, n}` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<MSubset> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<MSubset>) {
        if cur.len() == k {
            out.push(MSubset::from_sorted_unchecked(cur.clone()));
            return;
        }
        for x in next..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// A dominance-minimal type together with every family of that type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalType {
    #[serde(rename = "type")]
    pub lambda: Partition,
    /// Number of set families of this shape and type.
    pub multiplicity: usize,
    pub families: Vec<SetFamily>,
}

/// Dominance-minimal types of set families of shape `(m^n)`, in reverse
/// lexicographic order.
///
/// Minimal types are found among closed families: any family closes to one of
/// smaller or equal type. For each, every family of that type is listed, and
/// each must be closed.
pub fn minimal_types(m: usize, n: usize, guards: &Guards) -> Result<Vec<MinimalType>> {
    let closed = enumerate_closed(m, n, guards)?;
    minimal_types_from_closed(m, n, &closed)
}

pub(crate) fn minimal_types_from_closed(
    m: usize,
    n: usize,
    closed: &[SetFamily],
) -> Result<Vec<MinimalType>> {
    let mut types: BTreeMap<Partition, usize> = BTreeMap::new();
    for f in closed {
        let t = family_type(f)
            .map_err(|e| Error::Internal(format!("closed family {f} has no type: {e}")))?;
        *types.entry(t).or_default() += 1;
    }
    let minimal = minimal_elements(types.keys());
    minimal
        .into_par_iter()
        .map(|lambda| {
            let families = enumerate_of_type(m, n, &lambda);
            if let Some(bad) = families.iter().find(|f| !is_closed(f)) {
                return Err(Error::Internal(format!(
                    "family {bad} of minimal type {lambda} is not closed"
                )));
            }
            if families.len() < types[&lambda] {
                return Err(Error::Internal(format!(
                    "type search for {lambda} missed closed families"
                )));
            }
            Ok(MinimalType {
                multiplicity: families.len(),
                lambda,
                families,
            })
        })
        .collect()
}
