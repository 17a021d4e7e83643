//! Exact 1-center, 1-median and diameter solvers.
//!
//! All solvers break ties by smallest index and combine parallel partial
//! results as `(value, index)` pairs, so their output does not depend on
//! the number of worker threads.

mod brute;
mod l1;
mod linf;
mod sets;

use std::collections::BTreeMap;

use crate::metrics::Value;

pub use brute::{
    brute_force_center, brute_force_diameter, brute_force_median, brute_force_solve, EditSpace, MetricSpace,
    Objective, Solution, UlamSpace,
};
pub use l1::{
    l1_center, l1_center_with_cap, l1_diameter, l1_diameter_with_cap, l1_eccentricity, signed_sums,
    signed_sums_with_cap, SignedSumTable, DEFAULT_DIM_CAP,
};
pub use linf::linf_center;
pub use sets::{Coords, PermutationSet, PointSet, StringSet};

/// Free-form key/value report attached to a result.
pub type Diagnostics = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq)]
pub struct CenterResult {
    pub index: usize,
    /// Maximum distance from `index` to any point, in the metric's order key
    /// (the `p`-th power sum for finite `p > 1`).
    pub radius: Value,
    pub eccentricities: Option<Vec<Value>>,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MedianResult {
    pub index: usize,
    /// Sum of distances from `index` to every point.
    pub cost: Value,
    pub costs: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiameterResult {
    pub i: usize,
    pub j: usize,
    pub value: Value,
}

/// Index of the smallest value, first one on ties.
pub(crate) fn argmin(values: &[Value]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, v) in values.iter().enumerate() {
        if best.is_none_or(|b| *v < values[b]) {
            best = Some(i);
        }
    }
    best
}

pub(crate) fn diagnostics(pairs: &[(&str, String)]) -> Diagnostics {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
