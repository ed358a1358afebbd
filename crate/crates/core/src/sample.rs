//! Reproducible random rationals, elements and matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Mat;
use crate::rational::Rat;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// A ChaCha8 stream keyed by a seed and a label, so every check draws from
/// its own sequence regardless of which other checks ran.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, tag: &str) -> Self {
        // FNV-1a over the tag, folded into the seed
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in tag.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed ^ h) }
    }

    /// Numerator in `[-5, 5]`, denominator in `[1, 4]`.
    pub fn rat(&mut self) -> Rat {
        Rat::new(self.rng.gen_range(-5..=5), self.rng.gen_range(1..=4))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Random coefficients for a nonempty basis, redrawn until nonzero.
    pub fn nonzero_coeffs(&mut self, k: usize) -> Vec<Rat> {
        assert!(k > 0, "no nonzero combination of an empty family");
        loop {
            let c: Vec<Rat> = (0..k).map(|_| self.rat()).collect();
            if c.iter().any(|x| !x.is_zero()) {
                return c;
            }
        }
    }

    pub fn combination(&mut self, basis: &[Vec<Rat>]) -> Vec<Rat> {
        let c = self.nonzero_coeffs(basis.len());
        crate::linalg::combine(&c, basis, basis[0].len())
    }

    pub fn symmetric(&mut self, n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = Rat::from_int(self.int(-3, 3));
                m[(i, j)] = x.clone();
                m[(j, i)] = x;
            }
        }
        m
    }

    /// Unit lower times unit upper triangular, shuffled by a row swap: always invertible.
    pub fn invertible(&mut self, n: usize) -> Mat {
        let mut l = Mat::identity(n);
        let mut u = Mat::identity(n);
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = self.rat();
                u[(j, i)] = self.rat();
            }
            u[(i, i)] = Rat::from_int(if self.rng.gen_bool(0.5) { 1 } else { -2 });
        }
        let mut p = l.mul(&u);
        if n >= 2 {
            let (a, b) = (self.index(n), self.index(n));
            if a != b {
                for k in 0..n {
                    let t = p[(a, k)].clone();
                    p[(a, k)] = p[(b, k)].clone();
                    p[(b, k)] = t;
                }
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant;

    #[test]
    fn reproducible_and_tagged() {
        let a: Vec<Rat> = (0..8).map({
            let mut s = Sampler::new(7, "x");
            move |_| s.rat()
        }).collect();
        let b: Vec<Rat> = (0..8).map({
            let mut s = Sampler::new(7, "x");
            move |_| s.rat()
        }).collect();
        let c: Vec<Rat> = (0..8).map({
            let mut s = Sampler::new(7, "y");
            move |_| s.rat()
        }).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn invertible_is_invertible() {
        let mut s = Sampler::new(1, "inv");
        for n in 1..8 {
            assert!(!determinant(&s.invertible(n)).is_zero());
        }
    }
}
