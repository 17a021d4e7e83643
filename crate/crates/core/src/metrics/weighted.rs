use std::collections::HashMap;

use crate::error::{Error, Result};

use super::MaxFenwick;

/// A sequence of distinct super-symbols, each standing for a block of
/// `weight` original symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedSeq {
    symbols: Vec<u32>,
    weights: Vec<u64>,
}

impl WeightedSeq {
    pub fn new(symbols: Vec<u32>, weights: Vec<u64>) -> Result<Self> {
        if symbols.len() != weights.len() {
            return Err(Error::InvalidWeightedSeq(format!(
                "{} symbols but {} weights",
                symbols.len(),
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeightedSeq(format!("symbol {} has weight 0", symbols[i])));
        }
        let mut sorted = symbols.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidWeightedSeq(format!("symbol {} repeated", w[0])));
        }
        Ok(WeightedSeq { symbols, weights })
    }

    /// Every symbol with weight 1.
    pub fn unit(symbols: &[u32]) -> Result<Self> {
        WeightedSeq::new(symbols.to_vec(), vec![1; symbols.len()])
    }

    pub(crate) fn from_parts_unchecked(symbols: Vec<u32>, weights: Vec<u64>) -> Self {
        WeightedSeq { symbols, weights }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// Minimum total weight of insertions plus deletions turning `a` into `b`:
/// `W(a) + W(b) - 2 W*`, where `W*` is the heaviest common subsequence.
///
/// `W*` is a weighted longest increasing subsequence over the positions in
/// `b` of the shared symbols, read in `a` order, with a prefix-maximum tree:
/// `O(k log k)` for `k` super-symbols.
pub fn weighted_ulam(a: &WeightedSeq, b: &WeightedSeq) -> Result<u64> {
    let in_b: HashMap<u32, (usize, u64)> =
        b.symbols.iter().zip(&b.weights).enumerate().map(|(pos, (&s, &w))| (s, (pos, w))).collect();

    let mut tree = MaxFenwick::new(b.len());
    let mut heaviest = 0u64;
    for (&s, &w) in a.symbols.iter().zip(&a.weights) {
        let Some(&(pos, wb)) = in_b.get(&s) else { continue };
        if wb != w {
            return Err(Error::WeightMismatch { symbol: s, left: w, right: wb });
        }
        let best = tree.prefix_max(pos) + w;
        tree.update(pos, best);
        heaviest = heaviest.max(best);
    }
    Ok(a.total_weight() + b.total_weight() - 2 * heaviest)
}
