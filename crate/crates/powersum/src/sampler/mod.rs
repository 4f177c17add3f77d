//! Gaussian process sampling: exact (square-root factorization of the Gram
//! matrix, small groups only) and approximate (polynomial-cost feature
//! constructions).

pub mod exact;
pub mod features;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Independent substream `index` of the generator seeded with `seed`.
/// Substreams keyed this way make parallel sampling deterministic
/// regardless of scheduling.
pub(crate) fn substream(seed: u64, index: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
