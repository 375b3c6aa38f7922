use crate::error::{Error, Result};

/// Environment variable overriding [`Guards::oracle_points`].
pub const GUARD_ENV: &str = "FOULKES_GUARD_POINTS";

/// Size limits separating desk-scale computations from batch jobs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `m·n` accepted by closed-family enumeration.
    pub family_points: usize,
    /// Largest degree `N` accepted by the character oracle.
    pub oracle_points: usize,
    /// Largest column-group order accepted by the Specht computations.
    pub column_group: u128,
    /// Largest `|C(t)| · Σ |X ∪ Y|!` accepted by the Garnir check.
    pub garnir_work: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            family_points: 36,
            oracle_points: 14,
            column_group: 1_000_000,
            garnir_work: 2_000_000_000,
        }
    }
}

impl Guards {
    /// Defaults, with the oracle limit taken from `FOULKES_GUARD_POINTS` when set.
    pub fn from_env() -> Self {
        let mut g = Guards::default();
        if let Some(points) = std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&p| p > 0)
        {
            g.oracle_points = points;
        }
        g
    }

    pub(crate) fn check_family_points(&self, m: usize, n: usize) -> Result<()> {
        check(
            "m·n",
            (m * n) as u128,
            self.family_points as u128,
            "raise the family guard to run this as a batch job",
        )
    }

    pub(crate) fn check_oracle_points(&self, points: usize) -> Result<()> {
        check(
            "oracle degree N",
            points as u128,
            self.oracle_points as u128,
            "set FOULKES_GUARD_POINTS to allow larger degrees (runtime grows quickly)",
        )
    }

    pub(crate) fn check_column_group(&self, order: u128) -> Result<()> {
        check(
            "column group order",
            order,
            self.column_group,
            "raise the column-group guard",
        )
    }
}

impl Guards {
    pub(crate) fn check_garnir_work(&self, work: u128) -> Result<()> {
        check(
            "Garnir work estimate",
            work,
            self.garnir_work,
            "raise the Garnir guard",
        )
    }
}

fn check(what: &'static str, value: u128, limit: u128, hint: &'static str) -> Result<()> {
    if value > limit {
        return Err(Error::GuardExceeded {
            what,
            value,
            limit,
            hint,
        });
    }
    Ok(())
}
