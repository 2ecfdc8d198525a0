//! Workload builders shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lapsim::RequestSequence;

/// `m` uniform random requests over a list of size `n`.
pub fn random_requests(n: usize, m: usize, seed: u64) -> RequestSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<u32> = (0..m).map(|_| rng.random_range(1..=n as u32)).collect();
    RequestSequence::from_ids(&ids)
}
