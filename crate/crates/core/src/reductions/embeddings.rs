use rand::Rng;

use crate::error::{Error, Result};
use crate::metrics::{edit_distance_bounded, Bounded, Permutation};

use super::rng;

/// Seeds tried by [`make_edit_codec`] before giving up.
pub const MAX_CODEC_ATTEMPTS: u32 = 64;

/// Maps a bit vector of length `d` to a permutation of `1..=2d` whose Ulam
/// distances (in insert/delete operations) are twice the Hamming distances:
/// the pair `(2k-1, 2k)` is swapped exactly when bit `k` is set.
pub fn hamming_to_ulam(bits: &[bool]) -> Permutation {
    let mut seq = Vec::with_capacity(2 * bits.len());
    for (k, &b) in bits.iter().enumerate() {
        let odd = 2 * k as u32 + 1;
        if b {
            seq.extend([odd + 1, odd]);
        } else {
            seq.extend([odd, odd + 1]);
        }
    }
    Permutation::new(seq).expect("pairwise swaps of the identity")
}

/// Bit-to-string code whose edit distances equal Hamming distances.
///
/// Bit `i` becomes the block `a_i` followed by a random separator string
/// `l_i` of length `ceil(10 log2 d)`. Separators are pairwise at Hamming
/// and edit distance at least `ceil(L / 4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditCodec {
    pub d: usize,
    pub block_len: usize,
    pub blocks: Vec<Vec<u8>>,
    /// Seed requested by the caller.
    pub seed: u64,
    /// Seed that produced `blocks`.
    pub effective_seed: u64,
}

fn block_len(d: usize) -> usize {
    // The small offset keeps exact powers of two from rounding up.
    (10.0 * (d as f64).log2() - 1e-9).ceil() as usize
}

/// Draws per block before the whole codec is reseeded.
const DRAWS_PER_BLOCK: usize = 256;

fn far_enough(x: &[u8], y: &[u8], min_dist: usize) -> bool {
    let hamming = x.iter().zip(y).filter(|(a, b)| a != b).count();
    hamming >= min_dist && edit_distance_bounded(x, y, min_dist - 1) == Bounded::AboveThreshold
}

/// Draws separators from `seed`, reseeding until they are separated.
///
/// Blocks are drawn one at a time; a draw too close to an earlier block is
/// rejected. Redrawing the whole set instead almost never succeeds once
/// `d` is in the tens, since some pair among the `d^2 / 2` usually falls
/// short.
pub fn make_edit_codec(d: usize, seed: u64) -> Result<EditCodec> {
    if d < 4 {
        return Err(Error::InvalidParameter(format!("codec needs d >= 4, got {d}")));
    }
    let len = block_len(d);
    let min_dist = len.div_ceil(4);
    'attempt: for attempt in 0..MAX_CODEC_ATTEMPTS {
        let effective_seed = seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut rng = rng(effective_seed);
        let mut blocks: Vec<Vec<u8>> = Vec::with_capacity(d);
        while blocks.len() < d {
            let fits = (0..DRAWS_PER_BLOCK).find_map(|_| {
                let cand: Vec<u8> = (0..len).map(|_| if rng.gen_bool(0.5) { b'1' } else { b'0' }).collect();
                blocks.iter().all(|b| far_enough(b, &cand, min_dist)).then_some(cand)
            });
            match fits {
                Some(b) => blocks.push(b),
                None => continue 'attempt,
            }
        }
        return Ok(EditCodec { d, block_len: len, blocks, seed, effective_seed });
    }
    Err(Error::CodecSeparation { d, attempts: MAX_CODEC_ATTEMPTS })
}

impl EditCodec {
    /// Minimum pairwise separator distance enforced at construction.
    pub fn separation(&self) -> usize {
        self.block_len.div_ceil(4)
    }

    /// `a_1 l_1 a_2 l_2 ... a_d l_d` over `{'0', '1'}`.
    pub fn encode(&self, bits: &[bool]) -> Result<Vec<u8>> {
        if bits.len() != self.d {
            return Err(Error::DimensionMismatch { left: self.d, right: bits.len() });
        }
        let mut out = Vec::with_capacity(self.d * (self.block_len + 1));
        for (&b, block) in bits.iter().zip(&self.blocks) {
            out.push(if b { b'1' } else { b'0' });
            out.extend_from_slice(block);
        }
        Ok(out)
    }
}
