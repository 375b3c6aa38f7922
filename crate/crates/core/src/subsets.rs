//! The majorization order on `m`-subsets of the natural numbers.
//!
//! `X ⪯ Y` when the sorted elements satisfy `x_i <= y_i` for every `i`. The
//! poset is graded by [`level`] and explored locally through covers; it is
//! never materialized as a whole.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::SetFamily;

/// A finite set of positive integers, stored strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MSubset(Vec<usize>);

impl MSubset {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.first() == Some(&0) || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset(elements));
        }
        Ok(MSubset(elements))
    }

    /// Builds a subset from elements in any order; rejects zeros and repeats.
    pub fn from_unsorted(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        MSubset::new(elements)
    }

    /// `{1, …, m}`, the bottom of the poset.
    pub fn bottom(m: usize) -> Self {
        MSubset((1..=m).collect())
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<usize>) -> Self {
        debug_assert!(MSubset::new(elements.clone()).is_ok());
        MSubset(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// `self \ {from} ∪ {to}`, when `from` is present and `to` is not.
    pub fn replace(&self, from: usize, to: usize) -> Option<MSubset> {
        if to == 0 || !self.contains(from) || self.contains(to) {
            return None;
        }
        let mut e: Vec<usize> = self
            .0
            .iter()
            .map(|&x| if x == from { to } else { x })
            .collect();
        e.sort_unstable();
        Some(MSubset(e))
    }
}

impl TryFrom<Vec<usize>> for MSubset {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        MSubset::new(v)
    }
}

impl From<MSubset> for Vec<usize> {
    fn from(s: MSubset) -> Self {
        s.0
    }
}

impl fmt::Display for MSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl std::str::FromStr for MSubset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elements = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("subset {s:?}: {e}")))?;
        MSubset::new(elements)
    }
}

/// `x ⪯ y`: `x_i <= y_i` for every `i`.
pub fn majorizes(x: &MSubset, y: &MSubset) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::CardinalityMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.0.iter().zip(&y.0).all(|(a, b)| a <= b))
}

/// Rank in the poset: `Σ x - m(m+1)/2`.
pub fn level(x: &MSubset) -> usize {
    let m = x.len();
    x.0.iter().sum::<usize>() - m * (m + 1) / 2
}

/// Sets obtained by decrementing exactly one element, in lexicographic order.
pub fn lower_covers(x: &MSubset) -> Vec<MSubset> {
    let mut out = Vec::new();
    for i in 0..x.len() {
        let floor = if i == 0 { 0 } else { x.0[i - 1] };
        if x.0[i] - 1 > floor {
            let mut e = x.0.clone();
            e[i] -= 1;
            out.push(MSubset(e));
        }
    }
    out.sort_unstable();
    out
}

/// Sets obtained by incrementing exactly one element, in lexicographic order.
pub fn upper_covers(x: &MSubset) -> Vec<MSubset> {
    let mut out = Vec::new();
    for i in 0..x.len() {
        let ceiling = x.0.get(i + 1).copied().unwrap_or(usize::MAX);
        if x.0[i] + 1 < ceiling {
            let mut e = x.0.clone();
            e[i] += 1;
            out.push(MSubset(e));
        }
    }
    out.sort_unstable();
    out
}

/// `a^⪯`, every subset majorized by `a`, via breadth-first closure over
/// lower covers.
pub fn downset(a: &MSubset) -> SetFamily {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    seen.insert(a.clone());
    while let Some(x) = queue.pop_front() {
        for y in lower_covers(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    SetFamily::from_sorted_unchecked(a.len(), seen.into_iter().collect())
}

/// All `m`-subsets of level at most `max_level`, lexicographically sorted.
///
/// A closed family of `n` sets lives entirely in levels `0..n`, so this is the
/// search universe for closed-family enumeration.
pub fn levels_up_to(m: usize, max_level: usize) -> Vec<MSubset> {
    let bottom = MSubset::bottom(m);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([bottom.clone()]);
    seen.insert(bottom);
    while let Some(x) = queue.pop_front() {
        if level(&x) == max_level {
            continue;
        }
        for y in upper_covers(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Graphviz rendering of the Hasse diagram on `sets` (edges are covers).
pub fn hasse_dot(sets: &[MSubset]) -> String {
    let members: BTreeSet<&MSubset> = sets.iter().collect();
    let name = |s: &MSubset| {
        s.0.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out =
        String::from("digraph majorization {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let mut by_level: Vec<&MSubset> = sets.iter().collect();
    by_level.sort_by_key(|s| (level(s), (*s).clone()));
    for s in &by_level {
        out.push_str(&format!("  \"{}\";\n", name(s)));
    }
    for s in &by_level {
        for c in lower_covers(s) {
            if members.contains(&c) {
                out.push_str(&format!("  \"{}\" -> \"{}\";\n", name(&c), name(s)));
            }
        }
    }
    out.push_str("}\n");
    out
}
