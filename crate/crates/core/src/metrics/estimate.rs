use crate::error::{Error, Result};

use super::{ulam_moves, Permutation};

/// What a budgeted Ulam estimator may report about the distance `D`
/// (in moves) between two permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateOutcome {
    /// Certifies `D < threshold`.
    Below(u64),
    /// Certifies `lower <= D <= estimate <= (1 + eps) D`.
    Value { estimate: u64, lower: u64 },
}

/// A Ulam distance estimator with a time budget tied to `threshold`.
///
/// Implementations must honour the [`EstimateOutcome`] contract: `Below`
/// only when the true distance is under the threshold, and a `Value`
/// estimate never below the true distance nor above `(1 + eps)` times it.
pub trait UlamEstimator: Sync {
    fn name(&self) -> &'static str;

    fn estimate(&self, sigma: &Permutation, tau: &Permutation, threshold: u64, eps: f64) -> Result<EstimateOutcome>;
}

/// Reference estimator: computes the distance exactly and branches on it.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactEstimator;

pub(crate) fn check_estimate_args(threshold: u64, eps: f64) -> Result<()> {
    if threshold < 1 {
        return Err(Error::InvalidParameter("estimate threshold must be at least 1".into()));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

impl UlamEstimator for ExactEstimator {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn estimate(&self, sigma: &Permutation, tau: &Permutation, threshold: u64, eps: f64) -> Result<EstimateOutcome> {
        check_estimate_args(threshold, eps)?;
        let d = ulam_moves(sigma, tau)? as u64;
        Ok(if d < threshold { EstimateOutcome::Below(threshold) } else { EstimateOutcome::Value { estimate: d, lower: d } })
    }
}

/// Runs the reference estimator.
pub fn ulam_estimate(sigma: &Permutation, tau: &Permutation, threshold: u64, eps: f64) -> Result<EstimateOutcome> {
    ExactEstimator.estimate(sigma, tau, threshold, eps)
}
