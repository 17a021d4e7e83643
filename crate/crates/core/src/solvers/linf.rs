use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{Metric, Value};

use super::{argmin, diagnostics, CenterResult, Coords, PointSet};

/// Exact `l_inf` 1-center in `O(nd)`.
///
/// The farthest point from `x` in coordinate `j` is at distance
/// `max(x_j - min_j, max_j - x_j)`, so per-coordinate extremes give every
/// eccentricity directly.
pub fn linf_center(points: &PointSet) -> Result<CenterResult> {
    if points.metric() != Metric::Linf {
        return Err(Error::InvalidMetric(format!("linf_center needs linf, got {}", points.metric())));
    }
    if points.is_empty() {
        return Err(Error::Empty);
    }
    let dim = points.dim();
    let ecc: Vec<Value> = match points.coords() {
        Coords::Int(c) => {
            let (lo, hi) = column_extremes(c, dim, i64::MAX, i64::MIN);
            c.par_chunks_exact(dim)
                .map(|x| {
                    let e = x
                        .iter()
                        .enumerate()
                        .map(|(j, &v)| v.abs_diff(lo[j]).max(hi[j].abs_diff(v)))
                        .max()
                        .unwrap_or(0);
                    Value::Int(e as i128)
                })
                .collect()
        }
        Coords::Real(c) => {
            let (lo, hi) = column_extremes(c, dim, f64::INFINITY, f64::NEG_INFINITY);
            c.par_chunks_exact(dim)
                .map(|x| {
                    let e = x.iter().enumerate().map(|(j, &v)| (v - lo[j]).max(hi[j] - v)).fold(0.0, f64::max);
                    Value::Real(e)
                })
                .collect()
        }
    };
    let index = argmin(&ecc).ok_or(Error::Empty)?;
    Ok(CenterResult {
        index,
        radius: ecc[index],
        eccentricities: Some(ecc),
        diagnostics: diagnostics(&[("algorithm", "linf-fast".into())]),
    })
}

fn column_extremes<T: Copy + PartialOrd>(coords: &[T], dim: usize, lo0: T, hi0: T) -> (Vec<T>, Vec<T>) {
    let mut lo = vec![lo0; dim];
    let mut hi = vec![hi0; dim];
    for row in coords.chunks_exact(dim) {
        for (j, &v) in row.iter().enumerate() {
            if v < lo[j] {
                lo[j] = v;
            }
            if v > hi[j] {
                hi[j] = v;
            }
        }
    }
    (lo, hi)
}
