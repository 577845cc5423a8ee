//! Seeded, named random streams.
//!
//! Every random object is drawn from its own ChaCha20 stream: the key comes
//! from the experiment seed, the 64-bit stream id from an FNV-1a hash of a
//! name such as `"trial/3/arrangement"`. Streams are independent of thread
//! scheduling and of which other objects an experiment draws, so adding a
//! new kind of draw never shifts existing ones.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// 64-bit FNV-1a.
pub fn fnv1a(name: &str) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    name.bytes().fold(OFFSET, |h, b| (h ^ b as u64).wrapping_mul(PRIME))
}

/// The stream `name` under `seed`.
pub fn stream(seed: u64, name: &str) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(name));
    rng
}
