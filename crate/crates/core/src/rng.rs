//! Seeded sampling. PCG32 (64-bit LCG state, MMIX multiplier
//! 6364136223846793005, XSH-RR output), seeded as `Pcg32::new(seed, STREAM)`.

use rand_core::Rng;
use rand_pcg::Pcg32;

/// Fixed PCG stream selector used for every sampled run.
pub const STREAM: u64 = 0x0a02_bdbf_7bb3_c0a7;

pub struct SampleRng(Pcg32);

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        Self(Pcg32::new(seed, STREAM))
    }

    pub fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    /// Uniform-ish value in `[0, bound)` by multiply-shift.
    pub fn below(&mut self, bound: u32) -> u32 {
        ((self.0.next_u32() as u64 * bound as u64) >> 32) as u32
    }

    /// `len` residues in `[0, q)`.
    pub fn residues(&mut self, q: u32, len: usize) -> Vec<u32> {
        (0..len).map(|_| self.below(q)).collect()
    }
}
