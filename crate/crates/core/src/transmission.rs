//! Pairwise transmission likelihoods.
//!
//! Each family is parameterised by a rate `α` and a delay `τ = t_i - t_k`.
//! For all three families the log-survival and the hazard are linear in `α`:
//!
//! | family      | `y = log S`        | `H`            |
//! |-------------|--------------------|----------------|
//! | exponential | `-α τ`             | `α`            |
//! | Rayleigh    | `-α τ² / 2`        | `α τ`          |
//! | power law   | `-α log(τ/δ)`      | `α / τ`        |
//!
//! (power-law terms vanish for `τ <= δ`). Second `α`-derivatives are
//! therefore identically zero, and the likelihood code works with the two
//! per-delay weights `ψ(τ) = -∂y/∂α` and `φ(τ) = ∂H/∂α`.

use std::fmt;
use std::str::FromStr;

use rand::distr::{Distribution, Open01};
use rand::Rng;

use crate::error::{NetInfError, Result};

pub const DEFAULT_POWER_LAW_DELTA: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransmissionModel {
    Exponential,
    Rayleigh,
    /// Pareto delays supported on `τ > delta`.
    PowerLaw {
        delta: f64,
    },
}

impl TransmissionModel {
    pub fn power_law(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(NetInfError::InvalidParameter(format!("power-law cutoff must be positive, got {delta}")));
        }
        Ok(TransmissionModel::PowerLaw { delta })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            TransmissionModel::Exponential => "exp",
            TransmissionModel::Rayleigh => "ray",
            TransmissionModel::PowerLaw { .. } => "pow",
        }
    }

    /// `ψ(τ) = -∂y/∂α`, so that `y(τ; α) = -α ψ(τ)`.
    #[inline]
    pub fn survival_weight(&self, tau: f64) -> f64 {
        match *self {
            TransmissionModel::Exponential => tau,
            TransmissionModel::Rayleigh => 0.5 * tau * tau,
            TransmissionModel::PowerLaw { delta } => {
                if tau > delta {
                    (tau / delta).ln()
                } else {
                    0.0
                }
            }
        }
    }

    /// `φ(τ) = ∂H/∂α`, so that `H(τ; α) = α φ(τ)`.
    #[inline]
    pub fn hazard_weight(&self, tau: f64) -> f64 {
        match *self {
            TransmissionModel::Exponential => 1.0,
            TransmissionModel::Rayleigh => tau,
            TransmissionModel::PowerLaw { delta } => {
                if tau > delta {
                    1.0 / tau
                } else {
                    0.0
                }
            }
        }
    }

    fn delay(t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        if !(t_i > t_k) {
            return Err(NetInfError::Ordering { t_i, t_k });
        }
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(NetInfError::Domain(format!("rate must be nonnegative, got {alpha}")));
        }
        Ok(t_i - t_k)
    }

    /// `y(t_i | t_k; α) = log S`.
    pub fn log_survival(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        let tau = Self::delay(t_i, t_k, alpha)?;
        Ok(-alpha * self.survival_weight(tau))
    }

    /// `H(t_i | t_k; α) = f / S`.
    pub fn hazard(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        let tau = Self::delay(t_i, t_k, alpha)?;
        Ok(alpha * self.hazard_weight(tau))
    }

    /// `∂y/∂α`.
    pub fn d_log_survival(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        let tau = Self::delay(t_i, t_k, alpha)?;
        Ok(-self.survival_weight(tau))
    }

    /// `∂H/∂α`.
    pub fn d_hazard(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        let tau = Self::delay(t_i, t_k, alpha)?;
        Ok(self.hazard_weight(tau))
    }

    /// `∂²y/∂α²`; zero for every supported family.
    pub fn d2_log_survival(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        Self::delay(t_i, t_k, alpha).map(|_| 0.0)
    }

    /// `∂²H/∂α²`; zero for every supported family.
    pub fn d2_hazard(&self, t_i: f64, t_k: f64, alpha: f64) -> Result<f64> {
        Self::delay(t_i, t_k, alpha).map(|_| 0.0)
    }

    /// Closed-form delay density `f(τ; α)`.
    pub fn density(&self, tau: f64, alpha: f64) -> f64 {
        match *self {
            TransmissionModel::Exponential => alpha * (-alpha * tau).exp(),
            TransmissionModel::Rayleigh => alpha * tau * (-0.5 * alpha * tau * tau).exp(),
            TransmissionModel::PowerLaw { delta } => {
                if tau > delta {
                    alpha / delta * (tau / delta).powf(-alpha - 1.0)
                } else {
                    0.0
                }
            }
        }
    }

    /// `P(delay <= τ)`.
    pub fn cdf(&self, tau: f64, alpha: f64) -> f64 {
        if tau <= 0.0 {
            return 0.0;
        }
        1.0 - (-alpha * self.survival_weight(tau)).exp()
    }

    /// Draws a delay by inverting the survival function at a uniform `u ∈ (0,1)`.
    pub fn sample_delay<R: Rng + ?Sized>(&self, alpha: f64, rng: &mut R) -> Result<f64> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(NetInfError::InvalidParameter(format!("delay sampling needs a positive rate, got {alpha}")));
        }
        let u: f64 = Open01.sample(rng);
        Ok(self.delay_at_survival(u, alpha))
    }

    /// Inverse survival function: the `τ` with `S(τ; α) = u`.
    #[inline]
    pub(crate) fn delay_at_survival(&self, u: f64, alpha: f64) -> f64 {
        match *self {
            TransmissionModel::Exponential => -u.ln() / alpha,
            TransmissionModel::Rayleigh => (-2.0 * u.ln() / alpha).sqrt(),
            TransmissionModel::PowerLaw { delta } => delta * u.powf(-1.0 / alpha),
        }
    }
}

impl fmt::Display for TransmissionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransmissionModel::PowerLaw { delta } => write!(f, "pow:{delta}"),
            other => f.write_str(other.kind_name()),
        }
    }
}

impl FromStr for TransmissionModel {
    type Err = NetInfError;

    /// Parses `exp`, `ray`, `pow` or `pow:<delta>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exp" => Ok(TransmissionModel::Exponential),
            "ray" => Ok(TransmissionModel::Rayleigh),
            "pow" => TransmissionModel::power_law(DEFAULT_POWER_LAW_DELTA),
            other => {
                let delta = other
                    .strip_prefix("pow:")
                    .and_then(|d| d.parse::<f64>().ok())
                    .ok_or_else(|| NetInfError::InvalidParameter(format!("unknown transmission model `{other}`")))?;
                TransmissionModel::power_law(delta)
            }
        }
    }
}
