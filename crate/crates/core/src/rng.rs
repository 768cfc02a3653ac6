use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded random stream. Identical seeds yield identical sample sequences
/// on every platform; a single `SeedRng` must not be shared across threads.
#[derive(Debug, Clone)]
pub struct SeedRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeedRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for SeedRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest);
    }
}

/// splitmix64 finalizer, used to derive independent per-cell seeds from a
/// base seed. Kept explicit (rather than hashing) so sweeps are bit-for-bit
/// reproducible from the documented recipe.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed for one experiment cell: fold `splitmix64` over the base
/// seed, the level index, the replicate index, and a stream tag.
pub fn derive_seed(base: u64, level_index: u64, replicate: u64, stream: u64) -> u64 {
    let mut h = splitmix64(base);
    h = splitmix64(h ^ level_index);
    h = splitmix64(h ^ replicate);
    h = splitmix64(h ^ stream);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SeedRng::new(7);
        let mut b = SeedRng::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = SeedRng::new(1);
        let mut b = SeedRng::new(2);
        let va: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let vb: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_ne!(va, vb);
    }

    #[test]
    fn range_draws_are_deterministic() {
        let mut a = SeedRng::new(99);
        let mut b = SeedRng::new(99);
        for _ in 0..50 {
            assert_eq!(a.random_range(0..1000), b.random_range(0..1000));
        }
    }

    // Pin the derivation recipe: these values must never change, or previously
    // recorded sweeps stop being reproducible.
    #[test]
    fn derive_seed_is_pinned() {
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(derive_seed(42, 0, 0, 0), derive_seed(42, 0, 0, 0));
        assert_ne!(derive_seed(42, 0, 0, 0), derive_seed(42, 0, 0, 1));
        assert_ne!(derive_seed(42, 0, 0, 0), derive_seed(42, 0, 1, 0));
        assert_ne!(derive_seed(42, 0, 0, 0), derive_seed(42, 1, 0, 0));
        assert_ne!(derive_seed(42, 0, 0, 0), derive_seed(43, 0, 0, 0));
    }
}
