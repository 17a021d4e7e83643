//! Seeded random instances for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::metrics::{Metric, Permutation};
use crate::solvers::{Coords, PermutationSet, PointSet};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points with coordinates drawn uniformly from `[-range, range]`.
pub fn random_points(n: usize, dim: usize, range: i64, real: bool, metric: Metric, seed: u64) -> Result<PointSet> {
    if range < 0 {
        return Err(Error::InvalidParameter(format!("range {range} is negative")));
    }
    let mut rng = rng(seed);
    let coords = if real {
        let r = range as f64;
        Coords::Real((0..n * dim).map(|_| if r == 0.0 { 0.0 } else { rng.gen_range(-r..=r) }).collect())
    } else {
        Coords::Int((0..n * dim).map(|_| rng.gen_range(-range..=range)).collect())
    };
    PointSet::new(dim, coords, metric)
}

/// One permutation of `1..=d`: uniform, or the identity after `moves`
/// random character moves.
pub fn random_permutation(rng: &mut impl Rng, d: usize, moves: Option<usize>) -> Permutation {
    let mut v: Vec<u32> = (1..=d as u32).collect();
    match moves {
        None => v.shuffle(rng),
        Some(k) if d > 1 => {
            for _ in 0..k {
                let c = v.remove(rng.gen_range(0..d));
                v.insert(rng.gen_range(0..d), c);
            }
        }
        Some(_) => {}
    }
    Permutation::new(v).expect("shuffled identity")
}

pub fn random_permutations(n: usize, d: usize, moves: Option<usize>, seed: u64) -> Result<PermutationSet> {
    if d == 0 {
        return Err(Error::InvalidParameter("permutation length must be positive".into()));
    }
    let mut rng = rng(seed);
    PermutationSet::new((0..n).map(|_| random_permutation(&mut rng, d, moves)).collect())
}

/// `n` uniform bit vectors of length `d`.
pub fn random_bits(n: usize, d: usize, seed: u64) -> Vec<Vec<bool>> {
    let mut rng = rng(seed);
    (0..n).map(|_| (0..d).map(|_| rng.gen_bool(0.5)).collect()).collect()
}

/// `n` uniform strings over `{'0', '1'}` of length `len`.
pub fn random_binary_strings(n: usize, len: usize, seed: u64) -> Vec<Vec<u8>> {
    random_bits(n, len, seed).into_iter().map(|b| b.into_iter().map(|x| if x { b'1' } else { b'0' }).collect()).collect()
}
