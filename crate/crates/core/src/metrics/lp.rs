use crate::error::{Error, Result};

use super::{Metric, Value};

/// Borrowed view of one point's coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointRef<'a> {
    Int(&'a [i64]),
    Real(&'a [f64]),
}

impl PointRef<'_> {
    pub fn dim(&self) -> usize {
        match self {
            PointRef::Int(c) => c.len(),
            PointRef::Real(c) => c.len(),
        }
    }
}

/// An `l_p` distance together with its order-preserving key.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpDistance {
    /// The distance itself, `(sum |x_j - y_j|^p)^(1/p)`.
    pub value: f64,
    /// `sum |x_j - y_j|^p` for finite `p` (the count for Hamming, the maximum
    /// for `l_inf`). Exact whenever the coordinates and `p` are integers.
    pub power_sum: Value,
}

pub fn lp_distance(x: PointRef<'_>, y: PointRef<'_>, metric: Metric) -> Result<LpDistance> {
    match (x, y) {
        (PointRef::Int(a), PointRef::Int(b)) => lp_distance_int(a, b, metric),
        (PointRef::Real(a), PointRef::Real(b)) => lp_distance_real(a, b, metric),
        (PointRef::Int(a), PointRef::Real(b)) => {
            let a: Vec<f64> = a.iter().map(|&v| v as f64).collect();
            lp_distance_real(&a, b, metric)
        }
        (PointRef::Real(a), PointRef::Int(b)) => {
            let b: Vec<f64> = b.iter().map(|&v| v as f64).collect();
            lp_distance_real(a, &b, metric)
        }
    }
}

fn check(left: usize, right: usize, metric: Metric) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    if !metric.is_vector() {
        return Err(Error::InvalidMetric(format!("{metric} is not a vector metric")));
    }
    if let Metric::Lp(p) = metric {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::InvalidMetric(format!("p = {p}")));
        }
    }
    Ok(())
}

/// Integer exponent of `p` when it is small enough for exact `i128` powers.
fn integer_exponent(p: f64) -> Option<u32> {
    (p.fract() == 0.0 && p <= 64.0).then_some(p as u32)
}

pub fn lp_distance_int(x: &[i64], y: &[i64], metric: Metric) -> Result<LpDistance> {
    check(x.len(), y.len(), metric)?;
    let diffs = x.iter().zip(y).map(|(&a, &b)| a.abs_diff(b));
    match metric {
        Metric::Hamming => {
            let count = diffs.filter(|&d| d != 0).count();
            Ok(LpDistance { value: count as f64, power_sum: Value::from(count) })
        }
        Metric::Linf => {
            let max = diffs.max().unwrap_or(0) as i128;
            Ok(LpDistance { value: max as f64, power_sum: Value::Int(max) })
        }
        Metric::Lp(1.0) => {
            // A sum of fewer than 2^63 values below 2^64 fits in i128.
            let sum: i128 = diffs.map(|d| d as i128).sum();
            Ok(LpDistance { value: sum as f64, power_sum: Value::Int(sum) })
        }
        Metric::Lp(p) => {
            if let Some(k) = integer_exponent(p) {
                let mut sum: Option<i128> = Some(0);
                for d in diffs.clone() {
                    sum = sum.and_then(|s| (d as i128).checked_pow(k).and_then(|t| s.checked_add(t)));
                }
                if let Some(sum) = sum {
                    let value = (sum as f64).powf(1.0 / p);
                    return Ok(LpDistance { value, power_sum: Value::Int(sum) });
                }
            }
            let sum: f64 = diffs.map(|d| (d as f64).powf(p)).sum();
            Ok(LpDistance { value: sum.powf(1.0 / p), power_sum: Value::Real(sum) })
        }
        _ => unreachable!("checked above"),
    }
}

pub fn lp_distance_real(x: &[f64], y: &[f64], metric: Metric) -> Result<LpDistance> {
    check(x.len(), y.len(), metric)?;
    let diffs = x.iter().zip(y).map(|(&a, &b)| (a - b).abs());
    Ok(match metric {
        Metric::Hamming => {
            let count = diffs.filter(|&d| d != 0.0).count();
            LpDistance { value: count as f64, power_sum: Value::from(count) }
        }
        Metric::Linf => {
            let max = diffs.fold(0.0, f64::max);
            LpDistance { value: max, power_sum: Value::Real(max) }
        }
        Metric::Lp(p) => {
            let sum: f64 = if p == 1.0 { diffs.sum() } else { diffs.map(|d| d.powf(p)).sum() };
            let value = if p == 1.0 { sum } else { sum.powf(1.0 / p) };
            LpDistance { value, power_sum: Value::Real(sum) }
        }
        _ => unreachable!("checked above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four_five() {
        let d = lp_distance_int(&[0, 0], &[3, 4], Metric::Lp(2.0)).unwrap();
        assert_eq!(d.value, 5.0);
        assert_eq!(d.power_sum, Value::Int(25));
    }

    #[test]
    fn identity_under_every_p() {
        for m in [Metric::L1, Metric::Lp(2.0), Metric::Lp(3.5), Metric::Hamming, Metric::Linf] {
            let d = lp_distance_int(&[1, 7], &[1, 7], m).unwrap();
            assert_eq!(d.value, 0.0);
        }
    }

    #[test]
    fn hamming_counts_differences() {
        let d = lp_distance_int(&[0, 1, 1], &[1, 1, 0], Metric::Hamming).unwrap();
        assert_eq!(d.power_sum, Value::Int(2));
        assert_eq!(d.value, 2.0);
    }

    #[test]
    fn linf_is_max() {
        let d = lp_distance_int(&[0, 0, 0], &[-2, 5, 1], Metric::Linf).unwrap();
        assert_eq!(d.power_sum, Value::Int(5));
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            lp_distance_int(&[0, 0], &[1], Metric::L1),
            Err(Error::DimensionMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn non_vector_metric_rejected() {
        assert!(matches!(lp_distance_int(&[0], &[1], Metric::Edit), Err(Error::InvalidMetric(_))));
        assert!(matches!(lp_distance_int(&[0], &[1], Metric::Lp(0.5)), Err(Error::InvalidMetric(_))));
    }

    #[test]
    fn extreme_coordinates_do_not_wrap() {
        let d = lp_distance_int(&[i64::MIN], &[i64::MAX], Metric::L1).unwrap();
        assert_eq!(d.power_sum, Value::Int(u64::MAX as i128));
    }

    #[test]
    fn real_coordinates() {
        let d = lp_distance_real(&[0.5, 0.0], &[0.0, 1.5], Metric::L1).unwrap();
        assert_eq!(d.value, 2.0);
        let mixed = lp_distance(PointRef::Int(&[0, 0]), PointRef::Real(&[3.0, 4.0]), Metric::Lp(2.0)).unwrap();
        assert!((mixed.value - 5.0).abs() < 1e-12);
    }
}
