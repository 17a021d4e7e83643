//! Instance generators built from hardness reductions, each with the
//! ground-truth oracle or distance identity it is expected to satisfy.

mod embeddings;
mod hitting_set;
mod lp_gadget;
mod padding;

pub use embeddings::{hamming_to_ulam, make_edit_codec, EditCodec, MAX_CODEC_ATTEMPTS};
pub use hitting_set::{gen_hitting_set, hsc_brute_force, GenMode, HittingSetInstance, MAX_UNIVERSE};
pub use lp_gadget::{hsc_to_lp, LpGadget};
pub use padding::{pad_client, pad_facilities_edit, pad_facility, sink, PaddedInstance};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator every seeded construction draws from.
pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
