//! Tables of minimal constituents of `φ^(m^n)`.
//!
//! For odd `m` a row lists the minimal types of set families of shape
//! `(m^n)` with their multiplicities `d`; for even `m` it is the single label
//! `(m^n)` with multiplicity one. Rows with `m·n` small enough can be checked
//! against the character oracle.

use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::Result;
use crate::families::minimal_types;
use crate::oracle::{decompose, Constituent};
use crate::partitions::{strictly_dominates, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalEntry {
    #[serde(rename = "type")]
    pub lambda: Partition,
    pub d: u64,
}

/// What the oracle says about a row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    /// Minimal constituents with multiplicities, as computed by the oracle.
    pub minimal: Vec<Constituent>,
    /// Every label strictly dominated by a predicted label is absent.
    pub dominated_zero: bool,
    pub verified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub mismatches: Vec<String>,
}

impl OracleCheck {
    pub fn multiplicity(&self, lam: &Partition) -> u64 {
        self.minimal
            .iter()
            .find(|c| &c.lambda == lam)
            .map_or(0, |c| c.mult)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetRow {
    pub m: usize,
    pub n: usize,
    pub minimal: Vec<MinimalEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleCheck>,
}

/// The predicted minimal constituents of `φ^(m^n)`.
pub fn rectangle_row(m: usize, n: usize, guards: &Guards) -> Result<DatasetRow> {
    let minimal = if m.is_multiple_of(2) {
        vec![MinimalEntry {
            lambda: Partition::rectangle(m, n),
            d: 1,
        }]
    } else {
        minimal_types(m, n, guards)?
            .into_iter()
            .map(|t| MinimalEntry {
                lambda: t.lambda,
                d: t.multiplicity as u64,
            })
            .collect()
    };
    Ok(DatasetRow {
        m,
        n,
        minimal,
        oracle: None,
    })
}

/// Decomposes `φ^(m^n)` and compares its minimal constituents and their
/// multiplicities with `predicted`.
pub fn oracle_check(
    m: usize,
    n: usize,
    predicted: &[MinimalEntry],
    guards: &Guards,
) -> Result<OracleCheck> {
    let d = decompose(&Partition::rectangle(m, n), guards)?;
    let mut mismatches = Vec::new();
    let mut dominated_zero = true;
    for e in predicted {
        let got = d.multiplicity(&e.lambda);
        if got != e.d {
            mismatches.push(format!("{}: predicted {}, oracle {got}", e.lambda, e.d));
        }
        for c in &d.constituents {
            if strictly_dominates(&e.lambda, &c.lambda)? {
                dominated_zero = false;
                mismatches.push(format!("{} occurs below {}", c.lambda, e.lambda));
            }
        }
    }
    let mut predicted_labels: Vec<&Partition> = predicted.iter().map(|e| &e.lambda).collect();
    predicted_labels.sort_unstable_by(|a, b| b.cmp(a));
    let oracle_labels: Vec<&Partition> = d.minimal.iter().collect();
    if predicted_labels != oracle_labels {
        mismatches.push(format!(
            "minimal labels differ: predicted {:?}, oracle {:?}",
            predicted_labels
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            oracle_labels
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
        ));
    }
    let minimal = d
        .minimal
        .iter()
        .map(|l| Constituent {
            lambda: l.clone(),
            mult: d.multiplicity(l),
        })
        .collect();
    Ok(OracleCheck {
        minimal,
        dominated_zero,
        verified: mismatches.is_empty(),
        mismatches,
    })
}

/// Rows for every `(m, n)` with `m + n <= max_sum`, ordered by `m` then `n`.
/// Rows with `m·n <= oracle_max` are checked against the oracle; `progress`
/// receives one line per row.
pub fn build_dataset(
    max_sum: usize,
    oracle_max: Option<usize>,
    guards: &Guards,
    mut progress: impl FnMut(&str),
) -> Result<Vec<DatasetRow>> {
    let mut oracle_guards = *guards;
    if let Some(limit) = oracle_max {
        oracle_guards.oracle_points = oracle_guards.oracle_points.max(limit);
    }
    let mut rows = Vec::new();
    for m in 1..max_sum {
        for n in 1..=max_sum - m {
            progress(&format!("({m}^{n})"));
            let mut row = rectangle_row(m, n, guards)?;
            if oracle_max.is_some_and(|limit| m * n <= limit) {
                row.oracle = Some(oracle_check(m, n, &row.minimal, &oracle_guards)?);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}
