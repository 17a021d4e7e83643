use crate::error::{Error, Result};
use crate::metrics::{Metric, Value};
use crate::solvers::{brute_force_center, Coords, PointSet};

use super::HittingSetInstance;

/// The 0/1 point set built from a hitting-set instance, with its decision
/// thresholds on `p`-th power sums.
///
/// Layout: one point per `a` set, then one per `b` set, then the special
/// point. If some `a` set hits every `b` set, its point has eccentricity
/// power sum at most `3m`; otherwise every point has one of at least `3m+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpGadget {
    pub points: PointSet,
    pub m: usize,
    pub n_a: usize,
    pub n_b: usize,
    pub yes_threshold: u64,
    pub no_threshold: u64,
}

impl LpGadget {
    pub fn special_index(&self) -> usize {
        self.n_a + self.n_b
    }

    /// Minimum eccentricity power sum over the set, by brute force.
    pub fn min_eccentricity(&self) -> Result<Value> {
        Ok(brute_force_center(&self.points)?.radius)
    }

    /// Threshold test: `true` iff the minimum eccentricity power sum is at
    /// most `3m`.
    pub fn decide(&self) -> Result<bool> {
        Ok(self.min_eccentricity()? <= Value::Int(self.yes_threshold as i128))
    }
}

/// Embeds `inst` into `{0,1}^(5m+2)` under `metric` (`l_p` with finite
/// `p >= 1`, or Hamming).
pub fn hsc_to_lp(inst: &HittingSetInstance, metric: Metric) -> Result<LpGadget> {
    if !matches!(metric, Metric::Lp(_) | Metric::Hamming) {
        return Err(Error::InvalidMetric(format!("the gadget needs finite p, got {metric}")));
    }
    let m = inst.m;
    let dim = 5 * m + 2;
    let bit = |set: u64, e: usize| i64::from(HittingSetInstance::contains(set, e));
    let mut coords = Vec::with_capacity((inst.a.len() + inst.b.len() + 1) * dim);
    for &s in &inst.a {
        coords.extend((0..m).map(|e| bit(s, e)));
        coords.extend((0..m).map(|e| 1 - bit(s, e)));
        coords.extend(std::iter::repeat_n(0, 2 * m + 1));
        coords.extend(std::iter::repeat_n(1, m + 1));
    }
    for &t in &inst.b {
        coords.extend((0..m).map(|e| bit(t, e)));
        coords.extend(std::iter::repeat_n(0, m));
        coords.extend((0..m).map(|e| 1 - bit(t, e)));
        coords.extend(std::iter::repeat_n(0, 2 * m + 2));
    }
    coords.extend(std::iter::repeat_n(0, 3 * m));
    coords.extend(std::iter::repeat_n(1, 2 * m + 2));
    Ok(LpGadget {
        points: PointSet::new(dim, Coords::Int(coords), metric)?,
        m,
        n_a: inst.a.len(),
        n_b: inst.b.len(),
        yes_threshold: 3 * m as u64,
        no_threshold: 3 * m as u64 + 1,
    })
}
