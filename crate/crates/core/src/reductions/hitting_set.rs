use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::rng;

/// Largest universe; every set is one machine word.
pub const MAX_UNIVERSE: usize = 63;

/// Two collections of subsets of `{0, .., m-1}`, stored as bit masks.
///
/// The question: does some set of `a` intersect every set of `b`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub m: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    /// The answer forced by a planted generator, if any.
    pub planted_answer: Option<bool>,
}

impl HittingSetInstance {
    pub fn new(m: usize, a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&m) {
            return Err(Error::InvalidParameter(format!("universe size {m} outside 1..={MAX_UNIVERSE}")));
        }
        let outside = !((1u64 << m) - 1);
        if a.iter().chain(&b).any(|s| s & outside != 0) {
            return Err(Error::InvalidParameter(format!("a set has elements outside the universe of size {m}")));
        }
        Ok(HittingSetInstance { m, a, b, planted_answer: None })
    }

    pub fn contains(set: u64, element: usize) -> bool {
        (set >> element) & 1 == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenMode {
    /// Every element joins every set independently with this probability.
    Random { density: f64 },
    /// Some `a` set is made to hit every `b` set.
    PlantedYes,
    /// Every `a` set is made to miss some `b` set.
    PlantedNo,
}

fn random_set(rng: &mut impl Rng, m: usize, density: f64) -> u64 {
    (0..m).filter(|_| rng.gen_bool(density)).fold(0u64, |s, e| s | (1 << e))
}

fn random_element(rng: &mut impl Rng, set: u64) -> usize {
    let elems: Vec<usize> = (0..64).filter(|&e| HittingSetInstance::contains(set, e)).collect();
    elems[rng.gen_range(0..elems.len())]
}

/// `n` sets on each side over a universe of size `m`, reproducible from
/// `seed`.
pub fn gen_hitting_set(n: usize, m: usize, mode: GenMode, seed: u64) -> Result<HittingSetInstance> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one set per side".into()));
    }
    if !(1..=MAX_UNIVERSE).contains(&m) {
        return Err(Error::InvalidParameter(format!("universe size {m} outside 1..={MAX_UNIVERSE}")));
    }
    let density = match mode {
        GenMode::Random { density } if !(0.0..=1.0).contains(&density) => {
            return Err(Error::InvalidParameter(format!("density {density} outside [0, 1]")));
        }
        GenMode::Random { density } => density,
        _ => 0.5,
    };
    let mut rng = rng(seed);
    let mut a: Vec<u64> = (0..n).map(|_| random_set(&mut rng, m, density)).collect();
    let mut b: Vec<u64> = (0..n).map(|_| random_set(&mut rng, m, density)).collect();
    let planted_answer = match mode {
        GenMode::Random { .. } => None,
        GenMode::PlantedYes => {
            let k = rng.gen_range(0..n);
            if a[k] == 0 {
                a[k] = 1 << rng.gen_range(0..m);
            }
            for t in b.iter_mut() {
                if *t & a[k] == 0 {
                    *t |= 1 << random_element(&mut rng, a[k]);
                }
            }
            Some(true)
        }
        GenMode::PlantedNo => {
            for s in &a {
                let t = rng.gen_range(0..n);
                b[t] &= !s;
            }
            Some(false)
        }
    };
    let mut inst = HittingSetInstance::new(m, a, b)?;
    inst.planted_answer = planted_answer;
    Ok(inst)
}

/// Exact answer by testing every `(a, b)` pair with one word operation.
pub fn hsc_brute_force(inst: &HittingSetInstance) -> bool {
    inst.a.par_iter().any(|&s| inst.b.iter().all(|&t| s & t != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_hits_everything() {
        let inst = HittingSetInstance::new(3, vec![0b111], vec![0b001]).unwrap();
        assert!(hsc_brute_force(&inst));
    }

    #[test]
    fn empty_a_set_misses() {
        let inst = HittingSetInstance::new(3, vec![0], vec![0b010]).unwrap();
        assert!(!hsc_brute_force(&inst));
        let inst = HittingSetInstance::new(3, vec![0], vec![]).unwrap();
        assert!(hsc_brute_force(&inst));
    }

    #[test]
    fn vacuous_when_b_empty() {
        let inst = HittingSetInstance::new(4, vec![0b1010, 0b0001], vec![]).unwrap();
        assert!(hsc_brute_force(&inst));
    }

    #[test]
    fn planted_no_small() {
        let inst = gen_hitting_set(2, 4, GenMode::PlantedNo, 7).unwrap();
        assert_eq!(inst.planted_answer, Some(false));
        assert!(!hsc_brute_force(&inst));
    }

    #[test]
    fn planted_answers_hold() {
        for seed in 0..200 {
            let n = 1 + (seed as usize % 17);
            let m = 1 + (seed as usize % 12);
            let yes = gen_hitting_set(n, m, GenMode::PlantedYes, seed).unwrap();
            assert!(hsc_brute_force(&yes), "seed {seed}");
            let no = gen_hitting_set(n, m, GenMode::PlantedNo, seed).unwrap();
            assert!(!hsc_brute_force(&no), "seed {seed}");
        }
    }

    #[test]
    fn random_has_no_planted_answer() {
        let inst = gen_hitting_set(8, 8, GenMode::Random { density: 0.5 }, 1).unwrap();
        assert_eq!(inst.planted_answer, None);
        assert_eq!(inst, gen_hitting_set(8, 8, GenMode::Random { density: 0.5 }, 1).unwrap());
    }

    #[test]
    fn parameter_checks() {
        assert!(gen_hitting_set(0, 3, GenMode::PlantedYes, 0).is_err());
        assert!(gen_hitting_set(3, 0, GenMode::PlantedYes, 0).is_err());
        assert!(gen_hitting_set(3, 64, GenMode::PlantedYes, 0).is_err());
        assert!(gen_hitting_set(3, 3, GenMode::Random { density: 1.5 }, 0).is_err());
        assert!(HittingSetInstance::new(2, vec![0b100], vec![]).is_err());
    }
}
