//! Seed derivation for reproducible, order-independent random streams.
//!
//! Every random quantity in the crate is drawn from a [`ChaCha8Rng`] keyed by
//! a base seed and selected by a stream counter, so work items can run in any
//! order (or in parallel) and still produce identical results.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Rng for work item `stream` under `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Folds several indices into one 64-bit seed (SplitMix64 finaliser per step).
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut state = 0x9E37_79B9_7F4A_7C15_u64;
    for &part in parts {
        state = splitmix(state ^ part);
    }
    state
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
