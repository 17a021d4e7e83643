//! Exact `l_1` 1-center and diameter in `O(2^d n d)`.
//!
//! For a sign mask `i` over `d` coordinates (bit `j - 1` of `i` selects a
//! plus sign for coordinate `j`), let `f_i(u) = sum_{bit set} u_j -
//! sum_{bit clear} u_j`. Then `f_i(x) - f_i(y) <= l1(x, y)` for every mask,
//! with equality for the mask of coordinates where `x_j >= y_j`. Hence the
//! farthest point from `x` is `max_i (M_i - f_i(x))` with `M_i` the maximum
//! of `f_i` over the set, and one table of `2^d` maxima answers every
//! eccentricity query.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::{lp_distance_int, Metric, Value};

use super::{argmin, diagnostics, CenterResult, DiameterResult, PointSet};

/// Largest dimension accepted by default (a `2^24`-entry table).
pub const DEFAULT_DIM_CAP: usize = 24;

/// Masks per block when the table is filled in parallel.
const BLOCK_BITS: usize = 10;

/// Per-mask maxima of the signed sums and the first point attaining each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSumTable {
    dim: usize,
    maxima: Vec<i64>,
    argmax: Vec<u32>,
}

impl SignedSumTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maxima(&self) -> &[i64] {
        &self.maxima
    }

    pub fn argmax(&self) -> &[u32] {
        &self.argmax
    }

    /// `f_mask(u)` straight from the definition.
    pub fn evaluate(mask: usize, u: &[i64]) -> i64 {
        u.iter().enumerate().map(|(j, &x)| if (mask >> j) & 1 == 1 { x } else { -x }).sum()
    }

    /// `max_i (M_i - f_i(u))`, walking the masks in Gray-code order so each
    /// step changes `f` by one coordinate.
    fn farthest(&self, u: &[i64]) -> (i64, usize) {
        let mut f: i64 = -u.iter().sum::<i64>();
        let mut mask = 0usize;
        let mut best = (self.maxima[0] - f, 0usize);
        for k in 1..self.maxima.len() {
            let bit = k.trailing_zeros() as usize;
            mask ^= 1 << bit;
            if (mask >> bit) & 1 == 1 {
                f += 2 * u[bit];
            } else {
                f -= 2 * u[bit];
            }
            let gap = self.maxima[mask] - f;
            if gap > best.0 {
                best = (gap, mask);
            }
        }
        best
    }
}

fn check_input(points: &PointSet, cap: usize) -> Result<&[i64]> {
    if !points.metric().is_l1() {
        return Err(Error::InvalidMetric(format!("signed sums need l1, got {}", points.metric())));
    }
    let super::Coords::Int(coords) = points.coords() else {
        return Err(Error::IntegerCoordinatesRequired);
    };
    let dim = points.dim();
    if dim > cap {
        return Err(Error::DimensionOverCap { dim, cap });
    }
    // Differences of signed sums reach 2 d max|x|; keep another factor 2 spare.
    let max_abs = coords.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let limit = (i64::MAX as u64) / 4;
    if max_abs.checked_mul(dim as u64).is_none_or(|s| s > limit) {
        return Err(Error::CoordinateOverflow { max_abs, dim });
    }
    Ok(coords)
}

pub fn signed_sums(points: &PointSet) -> Result<SignedSumTable> {
    signed_sums_with_cap(points, DEFAULT_DIM_CAP)
}

pub fn signed_sums_with_cap(points: &PointSet, cap: usize) -> Result<SignedSumTable> {
    let coords = check_input(points, cap)?;
    let dim = points.dim();
    let size = 1usize << dim;
    let low = dim.min(BLOCK_BITS);
    let block = 1usize << low;

    let mut maxima = vec![i64::MIN; size];
    let mut argmax = vec![0u32; size];
    maxima.par_chunks_mut(block).zip(argmax.par_chunks_mut(block)).enumerate().for_each(|(b, (mx, am))| {
        let high = b << low;
        for (idx, u) in coords.chunks_exact(dim).enumerate() {
            // f for mask `high` with every low bit clear.
            let mut f = SignedSumTable::evaluate(high, u);
            let mut g = 0usize;
            for k in 0..block {
                if k > 0 {
                    let bit = k.trailing_zeros() as usize;
                    g ^= 1 << bit;
                    if (g >> bit) & 1 == 1 {
                        f += 2 * u[bit];
                    } else {
                        f -= 2 * u[bit];
                    }
                }
                if f > mx[g] {
                    mx[g] = f;
                    am[g] = idx as u32;
                }
            }
        }
    });
    Ok(SignedSumTable { dim, maxima, argmax })
}

/// Distance from point `x` to the farthest point of the set.
pub fn l1_eccentricity(points: &PointSet, x: usize, table: &SignedSumTable) -> Result<Value> {
    check_input(points, usize::MAX)?;
    if table.dim != points.dim() {
        return Err(Error::DimensionMismatch { left: table.dim, right: points.dim() });
    }
    let u = points.int_point(x).ok_or(Error::IntegerCoordinatesRequired)?;
    Ok(Value::from(table.farthest(u).0))
}

fn all_eccentricities(points: &PointSet, table: &SignedSumTable) -> Vec<Value> {
    (0..points.len())
        .into_par_iter()
        .map(|i| Value::from(table.farthest(points.int_point(i).expect("checked integer")).0))
        .collect()
}

pub fn l1_center(points: &PointSet) -> Result<CenterResult> {
    l1_center_with_cap(points, DEFAULT_DIM_CAP)
}

pub fn l1_center_with_cap(points: &PointSet, cap: usize) -> Result<CenterResult> {
    let table = signed_sums_with_cap(points, cap)?;
    let ecc = all_eccentricities(points, &table);
    let index = argmin(&ecc).ok_or(Error::Empty)?;
    Ok(CenterResult {
        index,
        radius: ecc[index],
        eccentricities: Some(ecc),
        diagnostics: diagnostics(&[("algorithm", "l1-fast".into()), ("masks", (1usize << points.dim()).to_string())]),
    })
}

pub fn l1_diameter(points: &PointSet) -> Result<DiameterResult> {
    l1_diameter_with_cap(points, DEFAULT_DIM_CAP)
}

/// Farthest pair, lexicographically smallest `(i, j)` with `i < j`.
pub fn l1_diameter_with_cap(points: &PointSet, cap: usize) -> Result<DiameterResult> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints(points.len()));
    }
    let table = signed_sums_with_cap(points, cap)?;
    let ecc = all_eccentricities(points, &table);
    let value = *ecc.iter().max().expect("n >= 2");
    // Any point of a farthest pair has eccentricity equal to the diameter.
    let i = ecc.iter().position(|&e| e == value).expect("max exists");
    let x = points.int_point(i).expect("checked integer");
    let dist = |j: usize| lp_distance_int(x, points.int_point(j).expect("checked integer"), Metric::L1).map(|d| d.power_sum);

    // Candidate from the extreme points, then the smallest index tying it.
    let mut bound = points.len();
    let f_x: Vec<i64> = (0..table.maxima.len()).map(|m| SignedSumTable::evaluate(m, x)).collect();
    for (mask, (&m, &arg)) in table.maxima.iter().zip(&table.argmax).enumerate() {
        let arg = arg as usize;
        if arg != i && Value::from(m - f_x[mask]) == value {
            bound = bound.min(arg);
        }
    }
    for j in 0..points.len() {
        if j > bound {
            break;
        }
        if j == i {
            continue;
        }
        if dist(j)? == value {
            return Ok(DiameterResult { i, j, value });
        }
    }
    unreachable!("the extreme point of the maximising mask is a witness")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rows: &[Vec<i64>]) -> PointSet {
        PointSet::from_int_rows(rows, Metric::L1).unwrap()
    }

    fn triangle() -> PointSet {
        set(&[vec![0, 0], vec![4, 0], vec![0, 4]])
    }

    #[test]
    fn single_point_signed_sum() {
        let t = signed_sums(&set(&[vec![5, -2]])).unwrap();
        assert_eq!(t.maxima()[3], 3);
        assert_eq!(t.maxima()[0], -3);
        assert_eq!(t.maxima()[1], 7);
    }

    #[test]
    fn triangle_table() {
        let t = signed_sums(&triangle()).unwrap();
        // Mask 1 is v = (1, 0): f = x - y, maximised by (4, 0).
        assert_eq!(t.maxima()[1], 4);
        assert_eq!(t.argmax()[1], 1);
    }

    #[test]
    fn complement_flips_sign() {
        let u = [3, -7, 11, 0, 5];
        for mask in 0..32 {
            assert_eq!(SignedSumTable::evaluate(31 ^ mask, &u), -SignedSumTable::evaluate(mask, &u));
        }
    }

    #[test]
    fn eccentricity_examples() {
        let p = set(&[vec![9]]);
        let t = signed_sums(&p).unwrap();
        assert_eq!(l1_eccentricity(&p, 0, &t).unwrap(), Value::Int(0));

        let p = triangle();
        let t = signed_sums(&p).unwrap();
        assert_eq!(l1_eccentricity(&p, 0, &t).unwrap(), Value::Int(4));

        let rows: Vec<Vec<i64>> = (0..10).map(|v| vec![v]).collect();
        let p = set(&rows);
        let t = signed_sums(&p).unwrap();
        assert_eq!(l1_eccentricity(&p, 4, &t).unwrap(), Value::Int(5));
    }

    #[test]
    fn center_examples() {
        let r = l1_center(&triangle()).unwrap();
        assert_eq!((r.index, r.radius), (0, Value::Int(4)));

        let r = l1_center(&set(&[vec![7]])).unwrap();
        assert_eq!((r.index, r.radius), (0, Value::Int(0)));

        let rows: Vec<Vec<i64>> = (0..10).map(|v| vec![v]).collect();
        let r = l1_center(&set(&rows)).unwrap();
        assert_eq!((r.index, r.radius), (4, Value::Int(5)));
    }

    #[test]
    fn diameter_examples() {
        let r = l1_diameter(&triangle()).unwrap();
        assert_eq!((r.i, r.j, r.value), (1, 2, Value::Int(8)));

        let r = l1_diameter(&set(&[vec![3, 3], vec![3, 3]])).unwrap();
        assert_eq!((r.i, r.j, r.value), (0, 1, Value::Int(0)));

        let rows: Vec<Vec<i64>> = (0..10).map(|v| vec![v]).collect();
        let r = l1_diameter(&set(&rows)).unwrap();
        assert_eq!((r.i, r.j, r.value), (0, 9, Value::Int(9)));
    }

    #[test]
    fn errors() {
        assert_eq!(l1_diameter(&set(&[vec![1]])), Err(Error::TooFewPoints(1)));
        let wide = set(&[vec![0; 5]]);
        assert_eq!(l1_center_with_cap(&wide, 4), Err(Error::DimensionOverCap { dim: 5, cap: 4 }));
        let huge = set(&[vec![i64::MAX / 2, 0]]);
        assert!(matches!(l1_center(&huge), Err(Error::CoordinateOverflow { .. })));
        let l2 = PointSet::from_int_rows(&[vec![0]], Metric::Lp(2.0)).unwrap();
        assert!(matches!(l1_center(&l2), Err(Error::InvalidMetric(_))));
        let real = PointSet::from_real_rows(&[vec![0.5]], Metric::L1).unwrap();
        assert_eq!(l1_center(&real), Err(Error::IntegerCoordinatesRequired));
    }

    #[test]
    fn blocked_fill_matches_definition() {
        // d = 12 exercises more than one block of masks.
        let rows: Vec<Vec<i64>> =
            (0..7i64).map(|r| (0..12i64).map(|c| (r * 37 + c * 11) % 23 - 11).collect()).collect();
        let p = set(&rows);
        let t = signed_sums(&p).unwrap();
        for mask in (0..1usize << 12).step_by(97) {
            let (best, arg) = rows
                .iter()
                .enumerate()
                .map(|(i, u)| (SignedSumTable::evaluate(mask, u), i))
                .fold((i64::MIN, 0), |acc, (v, i)| if v > acc.0 { (v, i) } else { acc });
            assert_eq!(t.maxima()[mask], best);
            assert_eq!(t.argmax()[mask] as usize, arg);
        }
    }
}
