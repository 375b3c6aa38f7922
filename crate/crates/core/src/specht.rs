//! Homomorphisms from Specht modules into Foulkes modules.
//!
//! For a partition `λ` the alphabet `A(λ)` holds the symbols `i_j` with
//! `1 <= i <= λ_1` and `1 <= j <= λ'_i`; the canonical tableau `t_λ` has
//! column `i` equal to `i_1, …, i_{λ'_i}`, so its column group permutes the
//! indices of symbols and leaves their numbers alone.
//!
//! A set family `P` of type `λ` gives an indexed set partition `u` of `A(λ)`,
//! and the image of the generating polytabloid is `u b_t = Σ sgn(τ) u τ` over
//! the column group. [`garnir_check`] evaluates the Garnir relations on that
//! image directly.
//!
//! Internally a set partition of `A(λ)` is held as a restricted growth string
//! over the alphabet positions: position `p` carries the label of its block,
//! blocks numbered in order of their smallest symbol. This is the same
//! canonical form as sorting blocks lexicographically.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::families::{family_type, is_closed, SetFamily};
use crate::partitions::{conjugate, Partition};
use crate::subsets::MSubset;

/// The symbol `number_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub number: usize,
    pub index: usize,
}

impl Symbol {
    pub fn new(number: usize, index: usize) -> Self {
        Symbol { number, index }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.number, self.index)
    }
}

/// Serialized as `["number", index]`.
impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.number.to_string(), self.index).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (number, index): (String, usize) = Deserialize::deserialize(d)?;
        let number = number.parse().map_err(de::Error::custom)?;
        Ok(Symbol { number, index })
    }
}

/// A set partition of an alphabet, blocks sorted internally and among
/// themselves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexedSetPartition {
    blocks: Vec<Vec<Symbol>>,
}

impl IndexedSetPartition {
    pub fn from_blocks(mut blocks: Vec<Vec<Symbol>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        IndexedSetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Symbol>] {
        &self.blocks
    }

    /// Replaces every symbol by its image.
    pub fn apply(&self, tau: &ColumnPermutation) -> Self {
        IndexedSetPartition::from_blocks(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&s| tau.image(s)).collect())
                .collect(),
        )
    }
}

impl fmt::Display for IndexedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, s) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// An integer combination of indexed set partitions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<IndexedSetPartition, i64>,
}

impl FormalSum {
    pub fn new() -> Self {
        FormalSum::default()
    }

    pub fn add(&mut self, u: IndexedSetPartition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(u);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coefficient(&self, u: &IndexedSetPartition) -> i64 {
        self.terms.get(u).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`FormalSum::is_empty`].
    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexedSetPartition, i64)> {
        self.terms.iter().map(|(u, &c)| (u, c))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: i64,
    blocks: IndexedSetPartition,
}

impl Serialize for FormalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(u, &coeff)| TermRepr {
            coeff,
            blocks: u.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<TermRepr> = Deserialize::deserialize(d)?;
        let mut sum = FormalSum::new();
        for t in terms {
            sum.add(IndexedSetPartition::from_blocks(t.blocks.blocks), t.coeff);
        }
        Ok(sum)
    }
}

/// A permutation of `A(λ)` fixing the number of every symbol. Only moved
/// symbols are recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPermutation {
    moved: BTreeMap<Symbol, Symbol>,
}

impl ColumnPermutation {
    pub fn identity() -> Self {
        ColumnPermutation {
            moved: BTreeMap::new(),
        }
    }

    /// The transposition swapping `i_a` and `i_b`.
    pub fn transposition(number: usize, a: usize, b: usize) -> Self {
        let mut moved = BTreeMap::new();
        if a != b {
            moved.insert(Symbol::new(number, a), Symbol::new(number, b));
            moved.insert(Symbol::new(number, b), Symbol::new(number, a));
        }
        ColumnPermutation { moved }
    }

    pub fn image(&self, s: Symbol) -> Symbol {
        self.moved.get(&s).copied().unwrap_or(s)
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }
}

/// `A(λ)` in (number, index) order.
pub fn alphabet(lam: &Partition) -> Vec<Symbol> {
    conjugate(lam)
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &height)| (1..=height).map(move |j| Symbol::new(i + 1, j)))
        .collect()
}

/// The indexed set partition attached to `f`: members in lexicographic order,
/// each element `i` getting the smallest index not yet used for `i`.
pub fn indexed_partition(f: &SetFamily) -> Result<IndexedSetPartition> {
    family_type(f)?;
    let mut used: HashMap<usize, usize> = HashMap::new();
    let blocks = f
        .sets()
        .iter()
        .map(|x| {
            x.elements()
                .iter()
                .map(|&i| {
                    let next = used.entry(i).or_insert(0);
                    *next += 1;
                    Symbol::new(i, *next)
                })
                .collect()
        })
        .collect();
    Ok(IndexedSetPartition::from_blocks(blocks))
}

/// The multiset of number-sets obtained by deleting indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedFamily {
    /// One entry per block, each sorted; the list itself is sorted.
    pub sets: Vec<Vec<usize>>,
    /// Some block holds two symbols with the same number.
    pub repeated_number: bool,
    /// Two blocks strip to the same number-set.
    pub repeated_set: bool,
}

impl StrippedFamily {
    /// The underlying set family, when the strip is a genuine one.
    pub fn to_family(&self) -> Option<SetFamily> {
        if self.repeated_number || self.repeated_set {
            return None;
        }
        let sets = self
            .sets
            .iter()
            .map(|s| MSubset::new(s.clone()))
            .collect::<Result<Vec<_>>>()
            .ok()?;
        let m = sets.first()?.len();
        SetFamily::new(m, sets).ok()
    }
}

pub fn strip_indices(u: &IndexedSetPartition) -> StrippedFamily {
    let mut repeated_number = false;
    let mut sets: Vec<Vec<usize>> = u
        .blocks
        .iter()
        .map(|b| {
            let mut nums: Vec<usize> = b.iter().map(|s| s.number).collect();
            nums.sort_unstable();
            repeated_number |= nums.windows(2).any(|w| w[0] == w[1]);
            nums
        })
        .collect();
    sets.sort_unstable();
    let repeated_set = sets.windows(2).any(|w| w[0] == w[1]);
    StrippedFamily {
        sets,
        repeated_number,
        repeated_set,
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `∏ λ'_i!`.
pub fn column_group_order(lam: &Partition) -> u128 {
    conjugate(lam)
        .parts()
        .iter()
        .map(|&h| factorial(h))
        .product()
}

/// Every element of the column group of `t_λ` with its sign.
pub fn column_group(
    lam: &Partition,
    guards: &Guards,
) -> Result<impl Iterator<Item = (ColumnPermutation, i64)>> {
    let layout = Layout::new(lam)?;
    guards.check_column_group(column_group_order(lam))?;
    let alpha = layout.alphabet.clone();
    Ok(layout.column_group().into_iter().map(move |(perm, sign)| {
        let moved = perm
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p != q as usize)
            .map(|(p, &q)| (alpha[p], alpha[q as usize]))
            .collect();
        (ColumnPermutation { moved }, sign)
    }))
}

/// All permutations of `0..k` as image vectors, with signs.
pub(crate) fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == k {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

type Key = Box<[u8]>;

/// Positions of `A(λ)` and the column structure of `t_λ`.
struct Layout {
    alphabet: Vec<Symbol>,
    /// Alphabet positions making up each column.
    columns: Vec<Vec<usize>>,
}

impl Layout {
    fn new(lam: &Partition) -> Result<Self> {
        let alphabet = alphabet(lam);
        if alphabet.len() > u8::MAX as usize {
            return Err(Error::GuardExceeded {
                what: "alphabet size",
                value: alphabet.len() as u128,
                limit: u8::MAX as u128,
                hint: "set partitions are stored with byte labels",
            });
        }
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); lam.largest()];
        for (p, s) in alphabet.iter().enumerate() {
            columns[s.number - 1].push(p);
        }
        Ok(Layout { alphabet, columns })
    }

    fn position(&self, s: Symbol) -> Option<usize> {
        self.alphabet.binary_search(&s).ok()
    }

    fn key_of(&self, u: &IndexedSetPartition) -> Result<Key> {
        let mut labels = vec![u8::MAX; self.alphabet.len()];
        for (b, block) in u.blocks.iter().enumerate() {
            for &s in block {
                let p = self
                    .position(s)
                    .ok_or_else(|| Error::Internal(format!("symbol {s} outside the alphabet")))?;
                labels[p] = b as u8;
            }
        }
        if labels.contains(&u8::MAX) {
            return Err(Error::Internal(
                "set partition does not cover the alphabet".into(),
            ));
        }
        Ok(canonical(&labels))
    }

    fn partition_of(&self, key: &[u8]) -> IndexedSetPartition {
        let blocks = key.iter().copied().max().map_or(0, |b| b as usize + 1);
        let mut out = vec![Vec::new(); blocks];
        for (p, &b) in key.iter().enumerate() {
            out[b as usize].push(self.alphabet[p]);
        }
        IndexedSetPartition::from_blocks(out)
    }

    /// Column group elements as position maps.
    fn column_group(&self) -> Vec<(Vec<u8>, i64)> {
        let n = self.alphabet.len();
        let mut group: Vec<(Vec<u8>, i64)> = vec![((0..n as u8).collect(), 1)];
        for col in &self.columns {
            let perms = permutations_with_sign(col.len());
            let mut next = Vec::with_capacity(group.len() * perms.len());
            for (base, sign) in &group {
                for (perm, s) in &perms {
                    let mut g = base.clone();
                    for (k, &target) in perm.iter().enumerate() {
                        g[col[k]] = col[target] as u8;
                    }
                    next.push((g, sign * s));
                }
            }
            group = next;
        }
        group
    }
}

/// Relabels blocks in order of first appearance.
fn canonical(labels: &[u8]) -> Key {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    labels
        .iter()
        .map(|&l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

/// The set partition obtained by sending position `p` to `perm[p]`.
fn act(key: &[u8], perm: &[u8]) -> Key {
    let mut out = vec![0u8; key.len()];
    for (p, &l) in key.iter().enumerate() {
        out[perm[p] as usize] = l;
    }
    canonical(&out)
}

fn accumulate(acc: &mut HashMap<Key, i64>, key: Key, coeff: i64) {
    let e = acc.entry(key).or_insert(0);
    *e += coeff;
}

fn merge(mut a: HashMap<Key, i64>, b: HashMap<Key, i64>) -> HashMap<Key, i64> {
    for (k, v) in b {
        accumulate(&mut a, k, v);
    }
    a
}

/// `u b_t` as a map from canonical keys to coefficients.
fn image_keys(layout: &Layout, u: &Key) -> HashMap<Key, i64> {
    let group = layout.column_group();
    let mut acc = group
        .par_chunks(4096)
        .map(|chunk| {
            let mut local = HashMap::new();
            for (tau, sign) in chunk {
                accumulate(&mut local, act(u, tau), *sign);
            }
            local
        })
        .reduce(HashMap::new, merge);
    acc.retain(|_, c| *c != 0);
    acc
}

fn prepare(f: &SetFamily, guards: &Guards) -> Result<(Partition, Layout, Key)> {
    let lam = family_type(f)?;
    guards.check_column_group(column_group_order(&lam))?;
    let layout = Layout::new(&lam)?;
    let u = indexed_partition(f)?;
    let key = layout.key_of(&u)?;
    Ok((lam, layout, key))
}

fn to_formal_sum(layout: &Layout, keys: &HashMap<Key, i64>) -> FormalSum {
    let mut sum = FormalSum::new();
    for (k, &c) in keys {
        sum.add(layout.partition_of(k), c);
    }
    sum
}

/// `e_{t_λ} f_P = u b_{t_λ}` for a closed family `P`.
pub fn hom_image(f: &SetFamily, guards: &Guards) -> Result<FormalSum> {
    if !is_closed(f) {
        return Err(Error::NotClosed);
    }
    hom_image_unverified(f, guards)
}

/// [`hom_image`] without the closedness requirement. For families that are
/// not closed the result is not known to define a homomorphism.
pub fn hom_image_unverified(f: &SetFamily, guards: &Guards) -> Result<FormalSum> {
    let (_, layout, u) = prepare(f, guards)?;
    Ok(to_formal_sum(&layout, &image_keys(&layout, &u)))
}

/// A Garnir relation that failed to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GarnirViolation {
    /// The left column `i` of the adjacent pair `(i, i+1)`.
    pub column: usize,
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
    /// Number of nonzero terms left in `u b_t Σ sgn(σ) σ`.
    pub residual_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GarnirReport {
    pub image_terms: usize,
    pub pairs_checked: usize,
    pub violation: Option<GarnirViolation>,
}

impl GarnirReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Checks `u b_t Σ_{σ ∈ S_{X∪Y}} sgn(σ) σ = 0` for every adjacent column pair
/// `(i, i+1)` and every `X` in column `i`, `Y` in column `i+1` with
/// `|X| + |Y| = λ'_i + 1`.
///
/// Larger pairs contain one of these, so only the minimal size is tried. The
/// family must have a well-defined type; it need not be closed, in which case
/// the outcome is reported without any claim attached.
pub fn garnir_check(f: &SetFamily, guards: &Guards) -> Result<GarnirReport> {
    if f.m().is_multiple_of(2) {
        return Err(Error::EvenM(f.m()));
    }
    let (lam, layout, u) = prepare(f, guards)?;
    let heights = conjugate(&lam).into_parts();

    let mut pairs = Vec::new();
    for i in 0..heights.len().saturating_sub(1) {
        let (a, b) = (heights[i], heights[i + 1]);
        for y_size in 1..=b {
            let x_size = a + 1 - y_size;
            if x_size == 0 || x_size > a {
                continue;
            }
            for x in subsets_of(&layout.columns[i], x_size) {
                for y in subsets_of(&layout.columns[i + 1], y_size) {
                    pairs.push((i, x.clone(), y));
                }
            }
        }
    }

    let work: u128 = pairs
        .iter()
        .map(|(_, x, y)| factorial(x.len() + y.len()))
        .sum::<u128>()
        .saturating_mul(column_group_order(&lam));
    guards.check_garnir_work(work)?;
    let image: Vec<(Key, i64)> = {
        let mut v: Vec<(Key, i64)> = image_keys(&layout, &u).into_iter().collect();
        v.sort_unstable();
        v
    };

    let perms_by_size: HashMap<usize, Vec<(Vec<usize>, i64)>> = pairs
        .iter()
        .map(|(_, x, y)| x.len() + y.len())
        .collect::<HashSet<_>>()
        .into_iter()
        .map(|k| (k, permutations_with_sign(k)))
        .collect();

    let residuals: Vec<usize> = pairs
        .par_iter()
        .map(|(_, x, y)| {
            let z: Vec<usize> = x.iter().chain(y).copied().collect();
            let perms = &perms_by_size[&z.len()];
            let mut acc: HashMap<Key, i64> = HashMap::new();
            let mut moved = vec![0u8; layout.alphabet.len()];
            for (term, coeff) in &image {
                for (sigma, sign) in perms {
                    moved.copy_from_slice(term);
                    for (k, &target) in sigma.iter().enumerate() {
                        moved[z[target]] = term[z[k]];
                    }
                    accumulate(&mut acc, canonical(&moved), coeff * sign);
                }
            }
            acc.values().filter(|&&c| c != 0).count()
        })
        .collect();

    let violation = pairs
        .iter()
        .zip(&residuals)
        .find(|(_, &r)| r > 0)
        .map(|((i, x, y), &r)| GarnirViolation {
            column: i + 1,
            x: x.iter().map(|&p| layout.alphabet[p]).collect(),
            y: y.iter().map(|&p| layout.alphabet[p]).collect(),
            residual_terms: r,
        });
    Ok(GarnirReport {
        image_terms: image.len(),
        pairs_checked: pairs.len(),
        violation,
    })
}

/// Outcome of [`verify_hom`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomVerification {
    #[serde(rename = "type")]
    pub lambda: Partition,
    pub closed: bool,
    /// Set when the family is not closed and the check was forced.
    pub unverified: bool,
    pub column_group_order: u128,
    pub image_terms: usize,
    pub unit_coefficients: bool,
    /// Every term of the image strips back to the family itself.
    pub strips_back: bool,
    pub garnir: GarnirReport,
}

impl HomVerification {
    pub fn passed(&self) -> bool {
        self.image_terms > 0 && self.unit_coefficients && self.strips_back && self.garnir.passed()
    }
}

/// Runs the Garnir check and inspects the image of the generating polytabloid.
///
/// Families that are not closed are refused with [`Error::NotClosed`] unless
/// `force` is set, in which case the report is marked unverified.
pub fn verify_hom(f: &SetFamily, guards: &Guards, force: bool) -> Result<HomVerification> {
    let closed = is_closed(f);
    if !closed && !force {
        return Err(Error::NotClosed);
    }
    let lambda = family_type(f)?;
    let garnir = garnir_check(f, guards)?;
    let image = hom_image_unverified(f, guards)?;
    let unit_coefficients = image.iter().all(|(_, c)| c.abs() == 1);
    let strips_back = image
        .iter()
        .all(|(u, _)| strip_indices(u).to_family().as_ref() == Some(f));
    Ok(HomVerification {
        column_group_order: column_group_order(&lambda),
        lambda,
        closed,
        unverified: !closed,
        image_terms: image.len(),
        unit_coefficients,
        strips_back,
        garnir,
    })
}

/// Whether the images of the given same-type closed families have pairwise
/// disjoint supports.
pub fn supports_disjoint(fs: &[SetFamily], guards: &Guards) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    let lam = family_type(first)?;
    for f in fs {
        if (f.m(), f.n()) != (first.m(), first.n()) {
            return Err(Error::MixedShapes(first.m(), first.n(), f.m(), f.n()));
        }
        let t = family_type(f)?;
        if t != lam {
            return Err(Error::MixedTypes(lam.into_parts(), t.into_parts()));
        }
        if !is_closed(f) {
            return Err(Error::NotClosed);
        }
    }
    let mut seen: HashSet<Key> = HashSet::new();
    for f in fs {
        let (_, layout, u) = prepare(f, guards)?;
        for k in image_keys(&layout, &u).into_keys() {
            if !seen.insert(k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
