//! SplitMix64 generator for reproducible key material.
//!
//! The exact update sequence is part of the file-format contract: a given
//! seed must produce the same key matrix on every platform and in every
//! implementation, so the generator is pinned here rather than delegated
//! to an external RNG crate.

/// SplitMix64 (Vigna). Non-cryptographic; used only for reproducible
/// key generation and seeded test corpora.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from the half-open range `[lo, hi)` via modulo
    /// rejection sampling. Panics if `lo >= hi`.
    pub fn uniform_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo < hi, "uniform_i64 requires lo < hi");
        let span = hi.wrapping_sub(lo) as u64;
        // Largest multiple of span below 2^64; draws at or above it are
        // rejected so the residues stay uniform.
        let limit = (u64::MAX / span) * span;
        loop {
            let z = self.next_u64();
            if z < limit {
                return lo.wrapping_add((z % span) as i64);
            }
        }
    }

    /// Uniform draw from `[0, n)`.
    pub fn uniform_usize(&mut self, n: usize) -> usize {
        self.uniform_i64(0, n as i64) as usize
    }
}
