//! Brute-force character computations for the symmetric groups.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule; Foulkes
//! characters (and their generalizations `φ^μ`) are permutation characters,
//! evaluated by counting the set partitions with block sizes `μ` fixed by a
//! permutation of each cycle type. Inner products are exact: the division by
//! `N!` is checked, never rounded.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partitions::{dominates, partitions_of, Partition};

/// The cycle type of a permutation of `{1, …, N}`; labels a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(p: Partition) -> Self {
        CycleType(p)
    }

    pub fn identity(n: usize) -> Self {
        CycleType(Partition::rectangle(1, n))
    }

    pub fn degree(&self) -> usize {
        self.0.weight()
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.0.parts().iter().filter(|&&c| c % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A permutation of `0..N` with this cycle type, cycles on consecutive points.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.degree());
        let mut start = 0;
        for &c in self.0.parts() {
            for k in 0..c {
                perm.push(start + (k + 1) % c);
            }
            start += c;
        }
        perm
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

/// All conjugacy classes of `S_n`.
pub fn cycle_types(n: usize) -> impl Iterator<Item = CycleType> {
    partitions_of(n).map(CycleType)
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Order of the centralizer: `∏ i^{a_i} a_i!`.
pub fn centralizer_order(rho: &CycleType) -> BigUint {
    rho.0
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (i, &a)| {
            acc * BigUint::from(i).pow(a as u32) * factorial(a)
        })
}

pub fn class_size(rho: &CycleType) -> BigUint {
    factorial(rho.degree()) / centralizer_order(rho)
}

static CHI_MEMO: Lazy<RwLock<HashMap<(Partition, Partition), i64>>> = Lazy::new(Default::default);

/// `χ^λ(ρ)` by border-strip removal.
pub fn chi_value(lam: &Partition, rho: &CycleType) -> Result<i64> {
    if lam.weight() != rho.degree() {
        return Err(Error::IncomparableWeights {
            left: lam.weight(),
            right: rho.degree(),
        });
    }
    Ok(murnaghan_nakayama(lam, rho.partition().parts()))
}

fn murnaghan_nakayama(lam: &Partition, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    if lam.len() == 1 || rest.is_empty() {
        // a single row only loses horizontal strips; a single strip must be
        // the whole diagram
        if rest.is_empty() {
            return rim_hooks(lam, r)
                .into_iter()
                .filter(|(mu, _)| mu.is_empty())
                .map(|(_, s)| s)
                .sum();
        }
        return 1;
    }
    let key = (
        lam.clone(),
        Partition::new(rho.to_vec()).expect("cycle type is a partition"),
    );
    if let Some(&v) = CHI_MEMO.read().get(&key) {
        return v;
    }
    let value = rim_hooks(lam, r)
        .into_iter()
        .map(|(mu, sign)| sign * murnaghan_nakayama(&mu, rest))
        .sum();
    CHI_MEMO.write().insert(key, value);
    value
}

/// Partitions left after removing a rim hook of length `r`, with the sign
/// `(-1)^{height}`.
fn rim_hooks(lam: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lam.len();
    let beta: Vec<usize> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .filter(|&x| x > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((
            Partition::new(parts).expect("beta-set gives a partition"),
            sign,
        ));
    }
    out
}

/// How fixed-point counts are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Assemble fixed set partitions from whole cycles.
    #[default]
    Assembled,
    /// Enumerate every set partition and test it.
    Naive,
}

/// `φ^μ(ρ)`: the number of set partitions of `{1, …, N}` with block sizes
/// `μ` fixed by a permutation of cycle type `ρ`.
pub fn foulkes_value(mu: &Partition, rho: &CycleType, guards: &Guards) -> Result<u64> {
    foulkes_value_with(mu, rho, guards, Method::Assembled)
}

pub fn foulkes_value_with(
    mu: &Partition,
    rho: &CycleType,
    guards: &Guards,
    method: Method,
) -> Result<u64> {
    if mu.weight() != rho.degree() {
        return Err(Error::IncomparableWeights {
            left: mu.weight(),
            right: rho.degree(),
        });
    }
    guards.check_oracle_points(mu.weight())?;
    let value = match method {
        Method::Assembled => assembled_count(mu, rho),
        Method::Naive => naive_count(mu, rho),
    };
    value
        .to_u64()
        .ok_or_else(|| Error::Internal("fixed-point count overflows u64".into()))
}

/// A fixed set partition is permuted blockwise. Grouping the cycles by the
/// block orbit they cover: an orbit of `L` blocks of size `b` is a union of
/// cycles whose lengths are multiples of `L`, each cycle meeting every block
/// of the orbit in `len / L` points, and there are `L^{cycles - 1}` ways to
/// interleave the cycles of one orbit.
fn assembled_count(mu: &Partition, rho: &CycleType) -> BigUint {
    let mut cycles = rho.partition().multiplicities();
    let mut demand = mu.multiplicities();
    let mut memo = HashMap::new();
    assemble(&mut cycles, &mut demand, &mut memo)
}

fn assemble(
    cycles: &mut Vec<usize>,
    demand: &mut Vec<usize>,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigUint>,
) -> BigUint {
    let Some(pivot) = (1..cycles.len()).rev().find(|&c| cycles[c] > 0) else {
        return if demand.iter().all(|&d| d == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    let key = (cycles.clone(), demand.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    cycles[pivot] -= 1;
    let mut total = BigUint::zero();
    for orbit in (1..=pivot).filter(|l| pivot % l == 0) {
        let lengths: Vec<usize> = (1..cycles.len())
            .filter(|&l| l % orbit == 0 && cycles[l] > 0)
            .collect();
        let mut picks = vec![0; lengths.len()];
        choose_companions(
            cycles,
            demand,
            memo,
            orbit,
            &lengths,
            0,
            pivot / orbit,
            &mut picks,
            BigUint::one(),
            &mut total,
        );
    }
    cycles[pivot] += 1;
    memo.insert(key, total.clone());
    total
}

#[allow(clippy::too_many_arguments)]
fn choose_companions(
    cycles: &mut Vec<usize>,
    demand: &mut Vec<usize>,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigUint>,
    orbit: usize,
    lengths: &[usize],
    at: usize,
    block: usize,
    picks: &mut Vec<usize>,
    weight: BigUint,
    total: &mut BigUint,
) {
    if block >= demand.len() {
        return;
    }
    if at == lengths.len() {
        if demand[block] < orbit {
            return;
        }
        demand[block] -= orbit;
        for (&l, &k) in lengths.iter().zip(picks.iter()) {
            cycles[l] -= k;
        }
        let rest = assemble(cycles, demand, memo);
        for (&l, &k) in lengths.iter().zip(picks.iter()) {
            cycles[l] += k;
        }
        demand[block] += orbit;
        *total += weight * rest;
        return;
    }
    let l = lengths[at];
    let available = cycles[l];
    for k in 0..=available {
        let grown = block + k * (l / orbit);
        if grown >= demand.len() {
            break;
        }
        picks[at] = k;
        let w = &weight * binomial(available, k) * BigUint::from(orbit).pow(k as u32);
        choose_companions(
            cycles,
            demand,
            memo,
            orbit,
            lengths,
            at + 1,
            grown,
            picks,
            w,
            total,
        );
    }
    picks[at] = 0;
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn naive_count(mu: &Partition, rho: &CycleType) -> BigUint {
    let g = rho.representative();
    let n = g.len();
    let mut labels = vec![usize::MAX; n];
    let mut demand = mu.multiplicities();
    let mut count = 0u64;
    naive_rec(&g, &mut labels, &mut demand, 0, &mut count);
    BigUint::from(count)
}

fn naive_rec(
    g: &[usize],
    labels: &mut [usize],
    demand: &mut [usize],
    blocks: usize,
    count: &mut u64,
) {
    let Some(first) = labels.iter().position(|&l| l == usize::MAX) else {
        if is_fixed(g, labels, blocks) {
            *count += 1;
        }
        return;
    };
    let free: Vec<usize> = (first + 1..labels.len())
        .filter(|&x| labels[x] == usize::MAX)
        .collect();
    for size in 1..demand.len() {
        if demand[size] == 0 || size - 1 > free.len() {
            continue;
        }
        demand[size] -= 1;
        labels[first] = blocks;
        for_each_combination(&free, size - 1, &mut |chosen| {
            for &x in chosen {
                labels[x] = blocks;
            }
            naive_rec(g, labels, demand, blocks + 1, count);
            for &x in chosen {
                labels[x] = usize::MAX;
            }
        });
        labels[first] = usize::MAX;
        demand[size] += 1;
    }
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

fn is_fixed(g: &[usize], labels: &[usize], blocks: usize) -> bool {
    let mut image = vec![usize::MAX; blocks];
    for (x, &gx) in g.iter().enumerate() {
        let (from, to) = (labels[x], labels[gx]);
        if image[from] == usize::MAX {
            image[from] = to;
        } else if image[from] != to {
            return false;
        }
    }
    true
}

/// Values of `φ^μ` on every class, in the order of [`cycle_types`].
fn foulkes_row(mu: &Partition, guards: &Guards, method: Method) -> Result<Vec<(CycleType, u64)>> {
    let classes: Vec<CycleType> = cycle_types(mu.weight()).collect();
    classes
        .into_par_iter()
        .map(|rho| foulkes_value_with(mu, &rho, guards, method).map(|v| (rho, v)))
        .collect()
}

/// `(1/N!) Σ |class| · a(ρ) · b(ρ)`, asserting exact divisibility.
fn pair_classes(values: &[(CycleType, BigInt, BigInt)]) -> Result<BigInt> {
    let n = values.first().map_or(0, |(rho, _, _)| rho.degree());
    let mut sum = BigInt::zero();
    for (rho, a, b) in values {
        sum += BigInt::from(class_size(rho)) * a * b;
    }
    let order = BigInt::from(factorial(n));
    if !(&sum % &order).is_zero() {
        return Err(Error::Internal(format!(
            "character inner product {sum}/{order} is not an integer"
        )));
    }
    Ok(sum / order)
}

/// `⟨φ^μ, χ^λ⟩`.
pub fn inner_product(mu: &Partition, lam: &Partition, guards: &Guards) -> Result<u64> {
    inner_product_with(mu, lam, guards, Method::Assembled)
}

pub fn inner_product_with(
    mu: &Partition,
    lam: &Partition,
    guards: &Guards,
    method: Method,
) -> Result<u64> {
    if mu.weight() != lam.weight() {
        return Err(Error::IncomparableWeights {
            left: mu.weight(),
            right: lam.weight(),
        });
    }
    let row = foulkes_row(mu, guards, method)?;
    let values = row
        .into_iter()
        .map(|(rho, phi)| {
            Ok((
                rho.clone(),
                BigInt::from(phi),
                BigInt::from(chi_value(lam, &rho)?),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    to_multiplicity(pair_classes(&values)?)
}

fn to_multiplicity(x: BigInt) -> Result<u64> {
    if x.is_negative() {
        return Err(Error::Internal(format!("negative multiplicity {x}")));
    }
    x.to_u64()
        .ok_or_else(|| Error::Internal("multiplicity overflows u64".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub lambda: Partition,
    pub mult: u64,
}

/// `φ^μ = Σ mult(λ) χ^λ`, zero multiplicities omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub mu: Partition,
    /// Reverse lexicographic order of labels.
    pub constituents: Vec<Constituent>,
    pub minimal: Vec<Partition>,
}

impl Decomposition {
    pub fn degree(&self) -> usize {
        self.mu.weight()
    }

    pub fn multiplicity(&self, lam: &Partition) -> u64 {
        self.constituents
            .iter()
            .find(|c| &c.lambda == lam)
            .map_or(0, |c| c.mult)
    }
}

pub fn decompose(mu: &Partition, guards: &Guards) -> Result<Decomposition> {
    decompose_with(mu, guards, Method::Assembled)
}

/// Full decomposition, checked against the degree `φ^μ(1)` and the norm
/// `⟨φ^μ, φ^μ⟩`.
pub fn decompose_with(mu: &Partition, guards: &Guards, method: Method) -> Result<Decomposition> {
    let row = foulkes_row(mu, guards, method)?;
    let labels: Vec<Partition> = partitions_of(mu.weight()).collect();
    let mults = labels
        .par_iter()
        .map(|lam| {
            let values = row
                .iter()
                .map(|(rho, phi)| {
                    Ok((
                        rho.clone(),
                        BigInt::from(*phi),
                        BigInt::from(chi_value(lam, rho)?),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            to_multiplicity(pair_classes(&values)?)
        })
        .collect::<Result<Vec<u64>>>()?;

    let identity = CycleType::identity(mu.weight());
    let degree = row
        .iter()
        .find(|(rho, _)| *rho == identity)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Internal("identity class missing".into()))?;
    let mut dimension = BigUint::zero();
    let mut squares = BigUint::zero();
    for (lam, &mult) in labels.iter().zip(&mults) {
        let dim = chi_value(lam, &identity)?;
        dimension += BigUint::from(mult) * BigUint::from(dim as u64);
        squares += BigUint::from(mult) * BigUint::from(mult);
    }
    if dimension != BigUint::from(degree) {
        return Err(Error::Internal(format!(
            "dimension check failed for {mu}: Σ mult·dim = {dimension}, φ(1) = {degree}"
        )));
    }
    let norm_values: Vec<(CycleType, BigInt, BigInt)> = row
        .iter()
        .map(|(rho, v)| (rho.clone(), BigInt::from(*v), BigInt::from(*v)))
        .collect();
    let norm = pair_classes(&norm_values)?;
    if norm != BigInt::from(squares.clone()) {
        return Err(Error::Internal(format!(
            "norm check failed for {mu}: ⟨φ,φ⟩ = {norm}, Σ mult² = {squares}"
        )));
    }

    let constituents: Vec<Constituent> = labels
        .into_iter()
        .zip(mults)
        .filter(|(_, mult)| *mult > 0)
        .map(|(lambda, mult)| Constituent { lambda, mult })
        .collect();
    let minimal = minimal_of(&constituents);
    Ok(Decomposition {
        mu: mu.clone(),
        constituents,
        minimal,
    })
}

fn minimal_of(constituents: &[Constituent]) -> Vec<Partition> {
    constituents
        .iter()
        .filter(|c| {
            !constituents
                .iter()
                .any(|d| d.lambda != c.lambda && dominates(&c.lambda, &d.lambda).unwrap_or(false))
        })
        .map(|c| c.lambda.clone())
        .collect()
}

/// Labels `λ` with nonzero multiplicity such that no `μ ⊲ λ` occurs.
pub fn minimal_constituents(d: &Decomposition) -> Vec<Partition> {
    minimal_of(&d.constituents)
}
