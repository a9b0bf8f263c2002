use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded, replayable random stream.
///
/// Identical seeds and identical call sequences yield bit-identical output on
/// every platform (ChaCha8 is portable and endianness independent).
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Stream for one run of a multi-run experiment.
    pub fn derived(base: u64, run: u64, stream_id: u64) -> Self {
        Self::new(derive_seed(base, run, stream_id))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Mixes `(base, run, stream_id)` into an independent seed.
///
/// The mix is a chain of SplitMix64 finalizers:
/// `s = mix(mix(mix(base) ^ run) ^ stream_id)`. Changing any component gives
/// an unrelated seed, so adding a new stream id never perturbs existing ones.
pub fn derive_seed(base: u64, run: u64, stream_id: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(base) ^ run) ^ stream_id)
}
