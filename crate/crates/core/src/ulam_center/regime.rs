use rayon::prelude::*;

use crate::error::Result;
use crate::metrics::{ulam_edit_script, EditScript};
use crate::solvers::PermutationSet;

/// `ceil(sqrt(d))`.
pub fn ceil_sqrt(d: usize) -> usize {
    let r = d.isqrt();
    if r * r == d {
        r
    } else {
        r + 1
    }
}

/// Largest distance from the anchor (in moves) that still selects the Low
/// regime: `2 ceil(sqrt(d))`.
pub fn low_regime_limit(d: usize) -> usize {
    2 * ceil_sqrt(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regime {
    /// Every permutation is within `2 ceil(sqrt(d))` moves of the anchor
    /// (index 0); `scripts[j]` turns the anchor into permutation `j`.
    Low { scripts: Vec<EditScript> },
    /// Some permutation is farther, so the optimal radius exceeds
    /// `threshold = ceil(sqrt(d))`.
    High { threshold: usize, max_anchor_distance: usize },
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Low { .. } => "low",
            Regime::High { .. } => "high",
        }
    }
}

/// Measures every permutation against the anchor and picks the regime.
///
/// If some permutation is more than `2 ceil(sqrt(d))` moves from the anchor,
/// then by the triangle inequality through the optimal center the optimal
/// radius is more than `ceil(sqrt(d))`.
pub fn detect_regime(set: &PermutationSet) -> Result<Regime> {
    let anchor = set.get(0);
    let scripts: Vec<EditScript> =
        set.perms().par_iter().map(|p| ulam_edit_script(anchor, p)).collect::<Result<_>>()?;
    let max_moves = scripts.iter().map(EditScript::moves).max().unwrap_or(0);
    let d = set.dim();
    Ok(if max_moves <= low_regime_limit(d) {
        Regime::Low { scripts }
    } else {
        Regime::High { threshold: ceil_sqrt(d), max_anchor_distance: max_moves }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::Permutation;

    #[test]
    fn ceil_sqrt_values() {
        let want = [0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4];
        for (d, &w) in want.iter().enumerate() {
            assert_eq!(ceil_sqrt(d), w, "d = {d}");
        }
        assert_eq!(ceil_sqrt(100), 10);
        assert_eq!(ceil_sqrt(101), 11);
    }

    #[test]
    fn identical_strings_are_low() {
        let s = PermutationSet::new(vec![Permutation::identity(9); 3]).unwrap();
        match detect_regime(&s).unwrap() {
            Regime::Low { scripts } => assert!(scripts.iter().all(|s| s.moved.is_empty())),
            r => panic!("{r:?}"),
        }
    }

    /// Moves the first `k` symbols of the identity to the end, in reverse,
    /// which costs exactly `k` moves.
    fn shifted(d: u32, k: u32) -> Permutation {
        let mut v: Vec<u32> = (k + 1..=d).collect();
        v.extend((1..=k).rev());
        Permutation::new(v).unwrap()
    }

    #[test]
    fn threshold_arithmetic() {
        let s = PermutationSet::new(vec![Permutation::identity(100), shifted(100, 25)]).unwrap();
        assert_eq!(detect_regime(&s).unwrap(), Regime::High { threshold: 10, max_anchor_distance: 25 });

        let s = PermutationSet::new(vec![Permutation::identity(100), shifted(100, 5), shifted(100, 3)]).unwrap();
        assert_eq!(detect_regime(&s).unwrap().name(), "low");

        let s = PermutationSet::new(vec![Permutation::identity(100), shifted(100, 20)]).unwrap();
        assert_eq!(detect_regime(&s).unwrap().name(), "low");
        let s = PermutationSet::new(vec![Permutation::identity(100), shifted(100, 21)]).unwrap();
        assert_eq!(detect_regime(&s).unwrap().name(), "high");
    }
}
