//! Reproducible pseudo-random instances.
//!
//! A 64-bit linear congruential generator
//! `state ← state · 6364136223846793005 + 1442695040888963407 (mod 2^64)`;
//! each draw returns the high 32 bits of the new state.

#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish value in `0..n` (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        (self.next_u32() as u64) % n
    }

    /// Integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.next_u32() & 1 == 1
    }

    /// Independent stream derived from this seed and a label.
    pub fn fork(&self, label: u64) -> Lcg64 {
        let mut g = Lcg64::new(self.state ^ label.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        g.next_u32();
        g
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_stream() {
        let mut g = Lcg64::new(0);
        let first = g.next_u32();
        assert_eq!(first, (LCG_INCREMENT >> 32) as u32);
        let mut h = Lcg64::new(0);
        assert_eq!(h.next_u32(), first);
    }
}
