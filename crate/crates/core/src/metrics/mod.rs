//! Distance functions.
//!
//! Every function here is pure, so any set of distance calls can be
//! evaluated concurrently.

mod edit;
mod estimate;
mod fenwick;
mod lp;
mod permutation;
mod ulam;
mod weighted;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use edit::{edit_distance, edit_distance_bounded, Bounded};
pub(crate) use estimate::check_estimate_args;
pub use estimate::{ulam_estimate, EstimateOutcome, ExactEstimator, UlamEstimator};
pub use fenwick::MaxFenwick;
pub use lp::{lp_distance, lp_distance_int, lp_distance_real, LpDistance, PointRef};
pub use permutation::Permutation;
pub use ulam::{lis_len, ulam_edit, ulam_edit_script, ulam_moves, EditScript};
pub use weighted::{weighted_ulam, WeightedSeq};

/// Which distance a point set, permutation set or string set is measured in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    /// `l_p` for a finite `p >= 1`.
    Lp(f64),
    /// Number of differing coordinates (`p = 0`).
    Hamming,
    Linf,
    /// Levenshtein distance.
    Edit,
    /// Ulam distance counted in insert/delete operations, `2 (d - LCS)`.
    Ulam,
    /// Ulam distance counted in character moves, `d - LCS`.
    UlamMoves,
}

impl Metric {
    pub const L1: Metric = Metric::Lp(1.0);

    /// Builds the `l_p` metric for `p` in `{0} ∪ [1, inf]`.
    pub fn lp(p: f64) -> Result<Metric> {
        if p == 0.0 {
            Ok(Metric::Hamming)
        } else if p == f64::INFINITY {
            Ok(Metric::Linf)
        } else if p.is_finite() && p >= 1.0 {
            Ok(Metric::Lp(p))
        } else {
            Err(Error::InvalidMetric(format!("p = {p} is outside {{0}} ∪ [1, inf]")))
        }
    }

    /// True for the metrics that apply to coordinate vectors.
    pub fn is_vector(self) -> bool {
        matches!(self, Metric::Lp(_) | Metric::Hamming | Metric::Linf)
    }

    pub fn is_l1(self) -> bool {
        self == Metric::L1
    }

    /// True when distances between integer inputs are themselves integers.
    pub fn is_integer_valued(self) -> bool {
        match self {
            Metric::Lp(p) => p == 1.0,
            _ => true,
        }
    }

    /// Converts an order key (see [`LpDistance::power_sum`]) back into a
    /// distance.
    pub fn root(self, key: Value) -> f64 {
        match self {
            Metric::Lp(p) if p != 1.0 => key.as_f64().powf(1.0 / p),
            _ => key.as_f64(),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Lp(p) => write!(f, "l{p}"),
            Metric::Hamming => f.write_str("hamming"),
            Metric::Linf => f.write_str("linf"),
            Metric::Edit => f.write_str("edit"),
            Metric::Ulam => f.write_str("ulam"),
            Metric::UlamMoves => f.write_str("ulam-moves"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    /// Accepts `l1`, `l2`, `l1.5`, `l0`, `hamming`, `linf`, `edit`, `ulam`
    /// and `ulam-moves`.
    fn from_str(s: &str) -> Result<Metric> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "linf" | "l-inf" => Ok(Metric::Linf),
            "edit" => Ok(Metric::Edit),
            "ulam" => Ok(Metric::Ulam),
            "ulam-moves" => Ok(Metric::UlamMoves),
            _ => {
                let p = s
                    .strip_prefix('l')
                    .and_then(|rest| rest.parse::<f64>().ok())
                    .ok_or_else(|| Error::InvalidMetric(format!("unknown metric '{s}'")))?;
                Metric::lp(p)
            }
        }
    }
}

/// An objective value: exact integer where the metric allows it, real
/// otherwise.
///
/// Values of one kind compare exactly; mixed comparisons go through `f64`.
#[derive(Debug, Clone, Copy)]
pub enum Value {
    Int(i128),
    Real(f64),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(v) => v as f64,
            Value::Real(v) => v,
        }
    }

    pub fn as_int(self) -> Option<i128> {
        match self {
            Value::Int(v) => Some(v),
            Value::Real(_) => None,
        }
    }

    pub fn zero_like(self) -> Value {
        match self {
            Value::Int(_) => Value::Int(0),
            Value::Real(_) => Value::Real(0.0),
        }
    }
}

impl std::ops::Add for Value {
    type Output = Value;

    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (a, b) => Value::Real(a.as_f64() + b.as_f64()),
        }
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => a.cmp(b),
            (Value::Real(a), Value::Real(b)) => a.total_cmp(b),
            (a, b) => a.as_f64().total_cmp(&b.as_f64()),
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Value {}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v as i128)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i128)
    }
}
