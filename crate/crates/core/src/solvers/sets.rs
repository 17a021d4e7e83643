use crate::error::{Error, Result};
use crate::metrics::{Metric, Permutation, PointRef};

/// Flat row-major coordinate storage.
#[derive(Debug, Clone, PartialEq)]
pub enum Coords {
    Int(Vec<i64>),
    Real(Vec<f64>),
}

/// `n >= 1` points of a common dimension, measured in one vector metric.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    metric: Metric,
    coords: Coords,
}

fn check_metric(metric: Metric) -> Result<()> {
    if !metric.is_vector() {
        return Err(Error::InvalidMetric(format!("{metric} does not apply to points")));
    }
    Metric::lp(match metric {
        Metric::Lp(p) => p,
        _ => 1.0,
    })
    .map(|_| ())
}

impl PointSet {
    pub fn new(dim: usize, coords: Coords, metric: Metric) -> Result<Self> {
        check_metric(metric)?;
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        let len = match &coords {
            Coords::Int(c) => c.len(),
            Coords::Real(c) => c.len(),
        };
        if len == 0 {
            return Err(Error::Empty);
        }
        if len % dim != 0 {
            return Err(Error::DimensionMismatch { left: len % dim, right: dim });
        }
        if let Coords::Real(c) = &coords {
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidParameter("coordinates must be finite".into()));
            }
        }
        Ok(PointSet { dim, metric, coords })
    }

    pub fn from_int_rows(rows: &[Vec<i64>], metric: Metric) -> Result<Self> {
        let dim = rows.first().ok_or(Error::Empty)?.len();
        let mut flat = Vec::with_capacity(rows.len() * dim);
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: r.len() });
            }
            flat.extend_from_slice(r);
        }
        PointSet::new(dim, Coords::Int(flat), metric)
    }

    pub fn from_real_rows(rows: &[Vec<f64>], metric: Metric) -> Result<Self> {
        let dim = rows.first().ok_or(Error::Empty)?.len();
        let mut flat = Vec::with_capacity(rows.len() * dim);
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: r.len() });
            }
            flat.extend_from_slice(r);
        }
        PointSet::new(dim, Coords::Real(flat), metric)
    }

    /// Same points, different metric.
    pub fn with_metric(&self, metric: Metric) -> Result<Self> {
        check_metric(metric)?;
        Ok(PointSet { metric, ..self.clone() })
    }

    pub fn len(&self) -> usize {
        match &self.coords {
            Coords::Int(c) => c.len() / self.dim,
            Coords::Real(c) => c.len() / self.dim,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.coords, Coords::Int(_))
    }

    pub fn point(&self, i: usize) -> PointRef<'_> {
        let r = i * self.dim..(i + 1) * self.dim;
        match &self.coords {
            Coords::Int(c) => PointRef::Int(&c[r]),
            Coords::Real(c) => PointRef::Real(&c[r]),
        }
    }

    /// Row `i` as integers, if the coordinates are integral.
    pub fn int_point(&self, i: usize) -> Option<&[i64]> {
        match &self.coords {
            Coords::Int(c) => Some(&c[i * self.dim..(i + 1) * self.dim]),
            Coords::Real(_) => None,
        }
    }
}

/// `n >= 1` permutations of a common `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSet {
    dim: usize,
    perms: Vec<Permutation>,
}

impl PermutationSet {
    pub fn new(perms: Vec<Permutation>) -> Result<Self> {
        let dim = perms.first().ok_or(Error::Empty)?.len();
        if let Some(p) = perms.iter().find(|p| p.len() != dim) {
            return Err(Error::SymbolMismatch { left: dim, right: p.len() });
        }
        Ok(PermutationSet { dim, perms })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        PermutationSet::new(rows.into_iter().map(Permutation::new).collect::<Result<_>>()?)
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }
}

/// `n >= 1` byte strings, compared under edit distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringSet {
    strings: Vec<Vec<u8>>,
}

impl StringSet {
    pub fn new(strings: Vec<Vec<u8>>) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::Empty);
        }
        Ok(StringSet { strings })
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.strings[i]
    }

    /// Common length, if every string has the same one.
    pub fn uniform_len(&self) -> Option<usize> {
        let len = self.strings[0].len();
        self.strings.iter().all(|s| s.len() == len).then_some(len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_set_validation() {
        assert_eq!(PointSet::from_int_rows(&[], Metric::L1), Err(Error::Empty));
        assert!(PointSet::from_int_rows(&[vec![1, 2], vec![3]], Metric::L1).is_err());
        assert!(PointSet::from_int_rows(&[vec![1]], Metric::Edit).is_err());
        assert!(PointSet::from_int_rows(&[vec![1]], Metric::Lp(0.5)).is_err());
        let p = PointSet::from_int_rows(&[vec![1, 2], vec![3, 4]], Metric::L1).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.int_point(1), Some(&[3i64, 4][..]));
    }

    #[test]
    fn permutation_set_validation() {
        assert!(PermutationSet::from_rows(vec![vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(PermutationSet::from_rows(vec![]).is_err());
        assert_eq!(PermutationSet::from_rows(vec![vec![2, 1]]).unwrap().dim(), 2);
    }
}
