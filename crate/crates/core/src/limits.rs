//! Size guards for the enumerations whose cost grows super-exponentially.

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_weight`].
pub const MAX_WEIGHT_ENV: &str = "PMH_MAX_WEIGHT";

/// Configurable resource guards. Exceeding one yields [`Error::Resource`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Bound on packed-matrix shell enumeration: `Pack_n`, `K_{x,y}` parts,
    /// `θ` lengths, `K'` shells and `q_n`.
    pub max_weight: u64,
    /// Bound on the weight of inputs to `▲`, `▲_res` and the antipode
    /// (`Π (m_ij + 1)` raw splittings).
    pub coproduct_weight: u64,
    /// Bound on the degree of the internal-product table behind `δ` on QSym
    /// (`4^(n-1)` composition pairs).
    pub qsym_delta_weight: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_weight: 6,
            coproduct_weight: 24,
            qsym_delta_weight: 12,
        }
    }
}

impl Limits {
    /// Defaults, with `max_weight` taken from `PMH_MAX_WEIGHT` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(v) = std::env::var(MAX_WEIGHT_ENV) {
            limits.max_weight = v.trim().parse().map_err(|_| {
                Error::Usage(format!(
                    "{MAX_WEIGHT_ENV} must be a nonnegative integer, got {v:?}"
                ))
            })?;
        }
        Ok(limits)
    }

    /// Unbounded guards, for tests that size their own inputs.
    pub fn unbounded() -> Self {
        Self {
            max_weight: u64::MAX,
            coproduct_weight: u64::MAX,
            qsym_delta_weight: u64::MAX,
        }
    }

    pub(crate) fn check_shell(&self, guard: &'static str, value: u64) -> Result<()> {
        check(
            guard,
            value,
            self.max_weight,
            "--max-weight or PMH_MAX_WEIGHT",
        )
    }

    pub(crate) fn check_coproduct(&self, value: u64) -> Result<()> {
        check(
            "coproduct-weight",
            value,
            self.coproduct_weight,
            "Limits::coproduct_weight",
        )
    }

    pub(crate) fn check_qsym_delta(&self, value: u64) -> Result<()> {
        check(
            "qsym-delta-weight",
            value,
            self.qsym_delta_weight,
            "Limits::qsym_delta_weight",
        )
    }
}

fn check(guard: &'static str, value: u64, limit: u64, flag: &'static str) -> Result<()> {
    if value > limit {
        Err(Error::Resource {
            guard,
            value,
            limit,
            flag,
        })
    } else {
        Ok(())
    }
}
