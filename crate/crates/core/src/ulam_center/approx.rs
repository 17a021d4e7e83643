use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{check_estimate_args, weighted_ulam, EstimateOutcome, ExactEstimator, UlamEstimator, Value};
use crate::solvers::{argmin, diagnostics, CenterResult, PermutationSet};

use super::compress::decompose;
use super::regime::{detect_regime, Regime};

/// `(1+eps)`-approximate Ulam 1-center with the exact reference estimator.
/// The radius is reported in moves.
pub fn ulam_center_approx(set: &PermutationSet, eps: f64) -> Result<CenterResult> {
    ulam_center_approx_with(set, eps, &ExactEstimator)
}

/// As [`ulam_center_approx`], with any estimator honouring the
/// [`EstimateOutcome`] contract for the High regime.
///
/// Low regime: exact. High regime: the returned candidate's true
/// eccentricity is at most `(1+eps)` times the optimum, and so is the
/// reported radius.
pub fn ulam_center_approx_with(set: &PermutationSet, eps: f64, estimator: &dyn UlamEstimator) -> Result<CenterResult> {
    check_estimate_args(1, eps)?;
    let regime = detect_regime(set)?;
    match regime {
        Regime::Low { scripts } => low_regime(set, &scripts),
        Regime::High { threshold, max_anchor_distance } => {
            high_regime(set, eps, estimator, threshold, max_anchor_distance)
        }
    }
}

fn low_regime(set: &PermutationSet, scripts: &[crate::metrics::EditScript]) -> Result<CenterResult> {
    let n = set.len();
    let positions: Vec<Vec<u32>> = set.perms().par_iter().map(|p| p.positions()).collect();
    let ecc: Vec<Value> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut worst = 0u64;
            for j in 0..n {
                if j == i {
                    continue;
                }
                let dec = decompose(
                    (set.get(i).as_slice(), &positions[i]),
                    (set.get(j).as_slice(), &positions[j]),
                    &scripts[i].moved,
                    &scripts[j].moved,
                    false,
                )?;
                let (a, b) = dec.compressed();
                worst = worst.max(weighted_ulam(&a, &b)? / 2);
            }
            Ok(Value::from(worst as usize))
        })
        .collect::<Result<_>>()?;
    let index = argmin(&ecc).ok_or(Error::Empty)?;
    let radius = ecc[index];
    Ok(CenterResult {
        index,
        radius,
        eccentricities: Some(ecc),
        diagnostics: diagnostics(&[
            ("algorithm", "ulam-approx".into()),
            ("regime", "low".into()),
            ("exact", "true".into()),
            ("anchor", "0".into()),
            ("radius_moves", radius.to_string()),
            ("radius_edit_ops", (2 * radius.as_int().unwrap_or(0)).to_string()),
        ]),
    })
}

fn high_regime(
    set: &PermutationSet,
    eps: f64,
    estimator: &dyn UlamEstimator,
    threshold: usize,
    max_anchor_distance: usize,
) -> Result<CenterResult> {
    let n = set.len();
    let theta = threshold as u64;
    // Every eccentricity is at least the optimum, which exceeds the
    // threshold, so each candidate's farthest partner yields a Value.
    let estimates: Vec<Value> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut mx: Option<u64> = None;
            for j in 0..n {
                if j == i {
                    continue;
                }
                match estimator.estimate(set.get(i), set.get(j), theta, eps)? {
                    EstimateOutcome::Below(_) => {}
                    EstimateOutcome::Value { estimate, .. } => mx = Some(mx.map_or(estimate, |m| m.max(estimate))),
                }
            }
            let mx = mx.ok_or_else(|| {
                Error::EstimatorContract(format!(
                    "every partner of candidate {i} reported below {theta}, but the radius must exceed it"
                ))
            })?;
            Ok(Value::from(mx as usize))
        })
        .collect::<Result<_>>()?;
    let index = argmin(&estimates).ok_or(Error::Empty)?;
    let radius = estimates[index];
    Ok(CenterResult {
        index,
        radius,
        eccentricities: None,
        diagnostics: diagnostics(&[
            ("algorithm", "ulam-approx".into()),
            ("regime", "high".into()),
            ("exact", "false".into()),
            ("estimator", estimator.name().into()),
            ("threshold", threshold.to_string()),
            ("max_anchor_distance", max_anchor_distance.to_string()),
            ("eps", eps.to_string()),
            ("radius_moves", radius.to_string()),
            ("radius_edit_ops", (2 * radius.as_int().unwrap_or(0)).to_string()),
        ]),
    })
}
