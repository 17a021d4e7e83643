use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::metrics::{Metric, Value};
use crate::solvers::{Objective, Solution};

/// What `solve` prints: one JSON object per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub objective: String,
    pub algorithm: String,
    pub metric: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[usize; 2]>,
    /// The objective value: a JSON integer when it is exact, a float
    /// otherwise.
    pub value: Json,
    pub value_real: f64,
    /// For `l_p` center and diameter with finite `p > 1`: the exact `p`-th
    /// power sum behind `value`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_sum: Option<Json>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eccentricities: Option<Vec<Json>>,
    pub diagnostics: BTreeMap<String, String>,
    pub wall_time_ms: f64,
}

/// JSON rendering of a value. Integers beyond `i64` become strings.
pub fn value_json(v: Value) -> Json {
    match v {
        Value::Int(x) => match i64::try_from(x) {
            Ok(x) => Json::from(x),
            Err(_) => Json::String(x.to_string()),
        },
        Value::Real(x) => serde_json::Number::from_f64(x).map_or(Json::Null, Json::Number),
    }
}

/// Distance behind an order key: the key itself unless it is a power sum.
fn rooted(metric: Metric, key: Value) -> Value {
    match metric {
        Metric::Lp(p) if p != 1.0 => Value::Real(metric.root(key)),
        _ => key,
    }
}

impl ResultRecord {
    pub fn from_solution(sol: &Solution, algorithm: &str, metric: Metric, n: usize, wall_time_ms: f64) -> ResultRecord {
        let has_power_sum = matches!(metric, Metric::Lp(p) if p != 1.0);
        let keyed = |key: Value| (rooted(metric, key), has_power_sum.then(|| value_json(key)));
        let (objective, index, pair, value, power_sum, ecc, diagnostics) = match sol {
            Solution::Center(c) => {
                let (value, power_sum) = keyed(c.radius);
                let ecc = c.eccentricities.as_ref().map(|e| e.iter().map(|&v| value_json(v)).collect());
                (Objective::Center, Some(c.index), None, value, power_sum, ecc, c.diagnostics.clone())
            }
            Solution::Median(m) => (Objective::Median, Some(m.index), None, m.cost, None, None, BTreeMap::new()),
            Solution::Diameter(d) => {
                let (value, power_sum) = keyed(d.value);
                (Objective::Diameter, None, Some([d.i, d.j]), value, power_sum, None, BTreeMap::new())
            }
        };
        ResultRecord {
            objective: objective.to_string(),
            algorithm: algorithm.to_string(),
            metric: metric.to_string(),
            n,
            index,
            pair,
            value: value_json(value),
            value_real: value.as_f64(),
            power_sum,
            eccentricities: ecc,
            diagnostics,
            wall_time_ms,
        }
    }
}
