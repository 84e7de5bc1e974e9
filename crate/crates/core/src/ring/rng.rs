//! Deterministic pseudo-randomness for "general" choices, reproducible
//! bit-for-bit across runs and platforms.
//!
//! The generator is xorshift64* (shift triple 12/25/27, multiplier
//! 0x2545F4914F6CDD1D). Seeds are pre-mixed with splitmix64 so that any u64
//! (including 0) is a valid seed, and per-stage streams are derived by
//! splitmix-hashing a textual label into the parent seed.

use super::field::Fp;
use super::monomial::Monomial;
use super::poly::Poly;

#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        let mut s = splitmix64(seed);
        if s == 0 {
            s = 0x9E3779B97F4A7C15;
        }
        Rng { state: s }
    }

    /// Derives an independent stream for a named stage of a computation.
    pub fn derive(seed: u64, label: &str) -> Rng {
        let mut h = splitmix64(seed);
        for &b in label.as_bytes() {
            h = splitmix64(h ^ b as u64);
        }
        Rng::new(h)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform value in [0, n).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        // rejection sampling to avoid modulo bias
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    pub fn field_elem(&mut self, fp: Fp) -> u64 {
        self.below(fp.modulus())
    }

    pub fn nonzero_field_elem(&mut self, fp: Fp) -> u64 {
        1 + self.below(fp.modulus() - 1)
    }
}

/// Dense random homogeneous polynomial of the given degree.
pub fn random_poly_of_degree(fp: Fp, rng: &mut Rng, d: u32) -> Poly {
    let pairs: Vec<(Monomial, u64)> = Monomial::all_of_degree(d)
        .into_iter()
        .map(|m| (m, rng.field_elem(fp)))
        .collect();
    Poly::from_pairs(fp, pairs)
}

/// Random linear combination of the given polynomials.
pub fn random_combination(fp: Fp, rng: &mut Rng, basis: &[Poly]) -> Poly {
    let mut acc = Poly::zero();
    for f in basis {
        acc = acc.add(fp, &f.scale(fp, rng.field_elem(fp)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = Rng::derive(42, "stage");
        let mut d = Rng::derive(42, "stage");
        let mut e = Rng::derive(42, "other");
        let (x, y, z) = (c.next_u64(), d.next_u64(), e.next_u64());
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn zero_seed_is_fine() {
        let mut r = Rng::new(0);
        assert_ne!(r.next_u64(), 0);
    }
}
