//! Seed-reproducible random numbers.
//!
//! All "generic" choices in the crate are drawn from SplitMix64 so that a
//! report is reproducible from its printed seed on any platform.

/// SplitMix64 generator (Steele, Lea, Flood 2014).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from the inclusive range `[-bound, bound]`, by rejection.
    pub fn int_in(&mut self, bound: i64) -> i64 {
        assert!(bound >= 0);
        let span = 2 * bound as u64 + 1;
        let limit = u64::MAX - u64::MAX % span;
        loop {
            let v = self.next_u64();
            if v < limit {
                return (v % span) as i64 - bound;
            }
        }
    }

    /// Uniform draw from `[0, n)`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0);
        let span = n as u64;
        let limit = u64::MAX - u64::MAX % span;
        loop {
            let v = self.next_u64();
            if v < limit {
                return (v % span) as usize;
            }
        }
    }
}
