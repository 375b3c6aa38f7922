//! Minimal constituents of generalized Foulkes characters `φ^μ`.
//!
//! Write `μ` as a union of rectangles `(m(1)^{n(1)}) ∪ ⋯ ∪ (m(t)^{n(t)})`
//! with distinct `m(k)`. Every minimal constituent of `φ^μ` is a union
//! `ν(1) ∪ ⋯ ∪ ν(t)` of minimal constituents of the rectangular factors, but
//! not every such union is minimal, so the unions are filtered by dominance.

use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::Result;
use crate::families::minimal_types;
use crate::oracle::{decompose, Constituent};
use crate::partitions::{minimal_elements, union_parts, Partition};

/// One rectangle `(m^n)` of a union decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectFactor {
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectDecomposition {
    pub factors: Vec<RectFactor>,
}

impl RectDecomposition {
    pub fn recompose(&self) -> Partition {
        self.factors.iter().fold(Partition::empty(), |acc, f| {
            union_parts(&acc, &Partition::rectangle(f.m, f.n))
        })
    }
}

/// Groups equal parts, largest part size first.
pub fn rect_decompose(mu: &Partition) -> RectDecomposition {
    let mult = mu.multiplicities();
    RectDecomposition {
        factors: (1..mult.len())
            .rev()
            .filter(|&m| mult[m] > 0)
            .map(|m| RectFactor { m, n: mult[m] })
            .collect(),
    }
}

/// Minimal constituent labels of a rectangular factor `φ^{(m^n)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorLabels {
    pub m: usize,
    pub n: usize,
    pub labels: Vec<Partition>,
}

/// For even `m` the only minimal label is `(m^n)`; for odd `m` the labels are
/// the minimal types of set families of shape `(m^n)`.
pub fn factor_labels(m: usize, n: usize, guards: &Guards) -> Result<FactorLabels> {
    let labels = if m.is_multiple_of(2) {
        vec![Partition::rectangle(m, n)]
    } else {
        minimal_types(m, n, guards)?
            .into_iter()
            .map(|t| t.lambda)
            .collect()
    };
    Ok(FactorLabels { m, n, labels })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedReport {
    pub mu: Partition,
    pub factors: Vec<FactorLabels>,
    /// Every union of factor labels, before the dominance filter.
    pub candidates: Vec<Partition>,
    pub minimal: Vec<Partition>,
    pub oracle_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_minimal: Option<Vec<Partition>>,
    /// Oracle multiplicities of the returned labels.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_multiplicities: Option<Vec<Constituent>>,
}

impl GeneralizedReport {
    /// `true` unless the oracle ran and disagreed.
    pub fn consistent(&self) -> bool {
        self.oracle_minimal
            .as_ref()
            .is_none_or(|o| *o == self.minimal)
    }
}

/// All unions `ν(1) ∪ ⋯ ∪ ν(t)` of factor labels.
pub fn candidate_unions(
    mu: &Partition,
    guards: &Guards,
) -> Result<(Vec<FactorLabels>, Vec<Partition>)> {
    let factors = rect_decompose(mu)
        .factors
        .iter()
        .map(|f| factor_labels(f.m, f.n, guards))
        .collect::<Result<Vec<_>>>()?;
    let mut unions = vec![Partition::empty()];
    for f in &factors {
        unions = unions
            .iter()
            .flat_map(|u| f.labels.iter().map(move |l| union_parts(u, l)))
            .collect();
    }
    unions.sort_unstable_by(|a, b| b.cmp(a));
    unions.dedup();
    Ok((factors, unions))
}

/// Dominance-minimal unions of factor labels: the minimal constituents of `φ^μ`.
pub fn minimal_candidates(mu: &Partition, guards: &Guards) -> Result<Vec<Partition>> {
    let (_, unions) = candidate_unions(mu, guards)?;
    Ok(minimal_elements(&unions))
}

/// Builds the report, optionally comparing with the character oracle.
pub fn generalized_report(
    mu: &Partition,
    guards: &Guards,
    with_oracle: bool,
) -> Result<GeneralizedReport> {
    let (factors, candidates) = candidate_unions(mu, guards)?;
    let minimal = minimal_elements(&candidates);
    let mut report = GeneralizedReport {
        mu: mu.clone(),
        factors,
        candidates,
        minimal,
        oracle_checked: false,
        oracle_minimal: None,
        oracle_multiplicities: None,
    };
    if with_oracle {
        let d = decompose(mu, guards)?;
        report.oracle_multiplicities = Some(
            report
                .minimal
                .iter()
                .map(|l| Constituent {
                    lambda: l.clone(),
                    mult: d.multiplicity(l),
                })
                .collect(),
        );
        report.oracle_minimal = Some(d.minimal);
        report.oracle_checked = true;
    }
    Ok(report)
}

/// Compares [`minimal_candidates`] with the oracle's minimal constituents.
pub fn verify_against_oracle(mu: &Partition, guards: &Guards) -> Result<GeneralizedReport> {
    generalized_report(mu, guards, true)
}
