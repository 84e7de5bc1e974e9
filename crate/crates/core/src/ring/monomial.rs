//! Monomials of F_p[x0..x4], packed into a single `u64` whose natural integer
//! order coincides with graded reverse-lexicographic order (degree first, ties
//! by grevlex). Layout, most significant to least:
//!
//! ```text
//!   bits 32..63   total degree
//!   bits 24..31   255 - e4
//!   bits 16..23   255 - e3
//!   bits  8..15   255 - e2
//!   bits  0..7    255 - e1
//! ```
//!
//! `e0` is implicit (degree minus the rest). With complemented exponents,
//! larger key means grevlex-larger, and multiplication is
//! `key(a) + key(b) - key(1)`.

use crate::NVARS;

const LOW: u64 = 0xFFFF_FFFF;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(LOW);

    pub fn from_exps(e: [u8; NVARS]) -> Monomial {
        let deg = e.iter().map(|&x| x as u64).sum::<u64>();
        let packed =
            ((e[4] as u64) << 24) | ((e[3] as u64) << 16) | ((e[2] as u64) << 8) | (e[1] as u64);
        Monomial((deg << 32) | (LOW - packed))
    }

    pub fn var(v: usize) -> Monomial {
        let mut e = [0u8; NVARS];
        e[v] = 1;
        Monomial::from_exps(e)
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        (self.0 >> 32) as u32
    }

    pub fn exps(&self) -> [u8; NVARS] {
        let packed = LOW - (self.0 & LOW);
        let e1 = (packed & 0xFF) as u8;
        let e2 = ((packed >> 8) & 0xFF) as u8;
        let e3 = ((packed >> 16) & 0xFF) as u8;
        let e4 = ((packed >> 24) & 0xFF) as u8;
        let rest = e1 as u32 + e2 as u32 + e3 as u32 + e4 as u32;
        let e0 = (self.deg() - rest) as u8;
        [e0, e1, e2, e3, e4]
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u8 {
        self.exps()[v]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 + other.0 - LOW)
    }

    /// Whether `self` divides `m`.
    #[inline]
    pub fn divides(&self, m: &Monomial) -> bool {
        if self.deg() > m.deg() {
            return false;
        }
        let a = self.exps();
        let b = m.exps();
        a.iter().zip(b.iter()).all(|(x, y)| x <= y)
    }

    /// Quotient `m / self`; caller must ensure divisibility.
    #[inline]
    pub fn quotient_into(&self, m: &Monomial) -> Monomial {
        debug_assert!(self.divides(m));
        Monomial(m.0 - self.0 + LOW)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let a = self.exps();
        let b = other.exps();
        let mut e = [0u8; NVARS];
        for v in 0..NVARS {
            e[v] = a[v].max(b[v]);
        }
        Monomial::from_exps(e)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        let a = self.exps();
        let b = other.exps();
        (0..NVARS).all(|v| a[v] == 0 || b[v] == 0)
    }

    /// All monomials of the given degree, in descending grevlex order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = [0u8; NVARS];
        fill(&mut out, &mut e, 0, d as i32);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

fn fill(out: &mut Vec<Monomial>, e: &mut [u8; NVARS], v: usize, rem: i32) {
    if v == NVARS - 1 {
        e[v] = rem as u8;
        out.push(Monomial::from_exps(*e));
        return;
    }
    for k in 0..=rem {
        e[v] = k as u8;
        fill(out, e, v + 1, rem - k);
    }
    e[v] = 0;
}

/// Number of monomials of degree `d` in 5 variables, C(d+4, 4).
pub fn dim_rd(d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    (d + 1) * (d + 2) * (d + 3) * (d + 4) / 24
}
