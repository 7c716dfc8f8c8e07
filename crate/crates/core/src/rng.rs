//! Deterministic per-realization random streams.
//!
//! ChaCha is a counter-mode stream cipher with 2^64 independent streams per
//! key. Keying with the master seed and selecting the stream by realization
//! index gives every realization its own substream, so ensembles are
//! bit-reproducible regardless of thread count or execution order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// RNG for one realization of an ensemble.
pub fn realization_stream(master_seed: u64, realization: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(realization);
    rng
}
