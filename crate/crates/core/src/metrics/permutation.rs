use std::fmt;

use crate::error::{Error, Result};

/// A sequence in which every symbol `1..=d` appears exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(seq: Vec<u32>) -> Result<Self> {
        let d = seq.len();
        let mut seen = vec![false; d + 1];
        for &s in &seq {
            let idx = s as usize;
            if s == 0 || idx > d {
                return Err(Error::NotAPermutation { len: d, reason: format!("symbol {s} out of range") });
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::NotAPermutation { len: d, reason: format!("symbol {s} repeated") });
            }
        }
        Ok(Permutation(seq))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// `positions()[s]` is the 0-based index of symbol `s`; slot 0 is unused.
    pub fn positions(&self) -> Vec<u32> {
        let mut pos = vec![0u32; self.0.len() + 1];
        for (i, &s) in self.0.iter().enumerate() {
            pos[s as usize] = i as u32;
        }
        pos
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![]).is_ok());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn positions_invert() {
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.positions(), vec![0, 1, 2, 0]);
    }
}
