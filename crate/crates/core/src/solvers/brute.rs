use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{edit_distance, lis_len, lp_distance, Metric, Value};

use super::{argmin, diagnostics, CenterResult, DiameterResult, MedianResult, PermutationSet, PointSet, StringSet};

/// A finite indexed set with pairwise distances.
pub trait MetricSpace: Sync {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn metric(&self) -> Metric;

    /// An order-preserving key for `dist(i, j)`: the distance itself, or its
    /// `p`-th power for `l_p` with finite `p > 1`.
    fn distance_key(&self, i: usize, j: usize) -> Value;

    /// The distance itself, suitable for summing.
    fn distance(&self, i: usize, j: usize) -> Value {
        self.distance_key(i, j)
    }
}

impl MetricSpace for PointSet {
    fn len(&self) -> usize {
        PointSet::len(self)
    }

    fn metric(&self) -> Metric {
        PointSet::metric(self)
    }

    fn distance_key(&self, i: usize, j: usize) -> Value {
        lp_distance(self.point(i), self.point(j), self.metric()).expect("validated point set").power_sum
    }

    fn distance(&self, i: usize, j: usize) -> Value {
        let d = lp_distance(self.point(i), self.point(j), self.metric()).expect("validated point set");
        match (self.metric(), d.power_sum) {
            (Metric::Lp(p), _) if p != 1.0 => Value::Real(d.value),
            (_, key) => key,
        }
    }
}

/// Permutations under the Ulam metric, in moves or in insert/delete
/// operations.
pub struct UlamSpace<'a> {
    set: &'a PermutationSet,
    positions: Vec<Vec<u32>>,
    metric: Metric,
}

impl<'a> UlamSpace<'a> {
    pub fn new(set: &'a PermutationSet, metric: Metric) -> Result<Self> {
        if !matches!(metric, Metric::Ulam | Metric::UlamMoves) {
            return Err(Error::InvalidMetric(format!("{metric} does not apply to permutations")));
        }
        let positions = set.perms().iter().map(|p| p.positions()).collect();
        Ok(UlamSpace { set, positions, metric })
    }
}

impl MetricSpace for UlamSpace<'_> {
    fn len(&self) -> usize {
        self.set.len()
    }

    fn metric(&self) -> Metric {
        self.metric
    }

    fn distance_key(&self, i: usize, j: usize) -> Value {
        let pos = &self.positions[j];
        let seq: Vec<u32> = self.set.get(i).as_slice().iter().map(|&s| pos[s as usize]).collect();
        let moves = self.set.dim() - lis_len(&seq);
        Value::from(if self.metric == Metric::Ulam { 2 * moves } else { moves })
    }
}

/// Strings under edit distance.
pub struct EditSpace<'a> {
    set: &'a StringSet,
}

impl<'a> EditSpace<'a> {
    pub fn new(set: &'a StringSet) -> Self {
        EditSpace { set }
    }
}

impl MetricSpace for EditSpace<'_> {
    fn len(&self) -> usize {
        self.set.len()
    }

    fn metric(&self) -> Metric {
        Metric::Edit
    }

    fn distance_key(&self, i: usize, j: usize) -> Value {
        Value::from(edit_distance(self.set.get(i), self.set.get(j)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Center,
    Median,
    Diameter,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Center => "center",
            Objective::Median => "median",
            Objective::Diameter => "diameter",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "center" => Ok(Objective::Center),
            "median" => Ok(Objective::Median),
            "diameter" => Ok(Objective::Diameter),
            _ => Err(Error::InvalidParameter(format!("unknown objective '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Center(CenterResult),
    Median(MedianResult),
    Diameter(DiameterResult),
}

/// Exact optimum by scanning all `O(n^2)` pairs.
pub fn brute_force_solve(space: &dyn MetricSpace, objective: Objective) -> Result<Solution> {
    Ok(match objective {
        Objective::Center => Solution::Center(brute_force_center(space)?),
        Objective::Median => Solution::Median(brute_force_median(space)?),
        Objective::Diameter => Solution::Diameter(brute_force_diameter(space)?),
    })
}

pub fn brute_force_center(space: &dyn MetricSpace) -> Result<CenterResult> {
    let n = space.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let ecc: Vec<Value> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| space.distance_key(i, j)).max().expect("n >= 1"))
        .collect();
    let index = argmin(&ecc).expect("n >= 1");
    Ok(CenterResult {
        index,
        radius: ecc[index],
        eccentricities: Some(ecc),
        diagnostics: diagnostics(&[("algorithm", "brute".into())]),
    })
}

pub fn brute_force_median(space: &dyn MetricSpace) -> Result<MedianResult> {
    let n = space.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let costs: Vec<Value> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut total = space.distance(i, i).zero_like();
            for j in 0..n {
                total = total + space.distance(i, j);
            }
            total
        })
        .collect();
    let index = argmin(&costs).expect("n >= 1");
    Ok(MedianResult { index, cost: costs[index], costs })
}

/// Farthest pair, lexicographically smallest `(i, j)` with `i < j`.
pub fn brute_force_diameter(space: &dyn MetricSpace) -> Result<DiameterResult> {
    let n = space.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    // Per row: the largest distance and the first partner reaching it.
    let rows: Vec<(Value, usize)> = (0..n - 1)
        .into_par_iter()
        .map(|i| {
            let mut best = (space.distance_key(i, i + 1), i + 1);
            for j in i + 2..n {
                let v = space.distance_key(i, j);
                if v > best.0 {
                    best = (v, j);
                }
            }
            best
        })
        .collect();
    let mut i = 0;
    for (k, row) in rows.iter().enumerate() {
        if row.0 > rows[i].0 {
            i = k;
        }
    }
    Ok(DiameterResult { i, j: rows[i].1, value: rows[i].0 })
}
