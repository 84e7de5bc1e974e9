//! Polynomials: term lists sorted strictly descending in grevlex, no zero
//! coefficients, no duplicate monomials. The zero polynomial is the empty
//! list and carries no degree.

use super::field::Fp;
use super::monomial::Monomial;
use crate::NVARS;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub m: Monomial,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: u64) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term {
                    m: Monomial::ONE,
                    c,
                }],
            }
        }
    }

    pub fn var(v: usize) -> Poly {
        Poly {
            terms: vec![Term {
                m: Monomial::var(v),
                c: 1,
            }],
        }
    }

    pub fn term(m: Monomial, c: u64) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term { m, c }],
            }
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_pairs(fp: Fp, pairs: impl IntoIterator<Item = (Monomial, u64)>) -> Poly {
        let mut v: Vec<(Monomial, u64)> = pairs.into_iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<Term> = Vec::with_capacity(v.len());
        for (m, c) in v {
            let c = c % fp.modulus();
            match terms.last_mut() {
                Some(t) if t.m == m => t.c = fp.add(t.c, c),
                _ => terms.push(Term { m, c }),
            }
            if let Some(t) = terms.last() {
                if t.c == 0 {
                    terms.pop();
                }
            }
        }
        Poly { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Total degree (of the leading term). None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.m.deg())
    }

    /// True iff every term has the same degree; returns that degree.
    /// The zero polynomial is homogeneous of undefined degree.
    pub fn is_homogeneous(&self) -> (bool, Option<u32>) {
        match self.terms.first() {
            None => (true, None),
            Some(first) => {
                let d = first.m.deg();
                (self.terms.iter().all(|t| t.m.deg() == d), Some(d))
            }
        }
    }

    pub fn add(&self, fp: Fp, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match b.m.cmp(&a.m) {
                std::cmp::Ordering::Less => {
                    out.push(*a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(*b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = fp.add(a.c, b.c);
                    if c != 0 {
                        out.push(Term { m: a.m, c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, fp: Fp) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    c: fp.neg(t.c),
                })
                .collect(),
        }
    }

    pub fn sub(&self, fp: Fp, other: &Poly) -> Poly {
        self.add(fp, &other.neg(fp))
    }

    pub fn scale(&self, fp: Fp, c: u64) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    c: fp.mul(t.c, c),
                })
                .collect(),
        }
    }

    /// self * (c * m); preserves term order.
    pub fn mul_term(&self, fp: Fp, m: &Monomial, c: u64) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m.mul(m),
                    c: fp.mul(t.c, c),
                })
                .collect(),
        }
    }

    pub fn mul(&self, fp: Fp, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        // convolve into a sorted accumulation
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                pairs.push((a.m.mul(&b.m), fp.mul(a.c, b.c)));
            }
        }
        Poly::from_pairs(fp, pairs)
    }

    /// Monic normalization (leading coefficient 1).
    pub fn monic(&self, fp: Fp) -> Poly {
        match self.lt() {
            None => Poly::zero(),
            Some(t) if t.c == 1 => self.clone(),
            Some(t) => self.scale(fp, fp.inv(t.c)),
        }
    }

    /// Partial derivative with respect to x_v.
    pub fn deriv(&self, fp: Fp, v: usize) -> Poly {
        let mut pairs = Vec::new();
        for t in &self.terms {
            let e = t.m.exps();
            if e[v] == 0 {
                continue;
            }
            let mut e2 = e;
            e2[v] -= 1;
            pairs.push((Monomial::from_exps(e2), fp.mul(t.c, e[v] as u64)));
        }
        Poly::from_pairs(fp, pairs)
    }

    /// Evaluate at a projective point given by coordinates in F_p.
    pub fn eval(&self, fp: Fp, pt: &[u64; NVARS]) -> u64 {
        let mut acc = 0u64;
        for t in &self.terms {
            let e = t.m.exps();
            let mut v = t.c;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    v = fp.mul(v, fp.pow(pt[i], ei as u64));
                }
            }
            acc = fp.add(acc, v);
        }
        acc
    }

    /// Apply an invertible linear change of coordinates x_i -> sum_j m[i][j] x_j.
    pub fn substitute_linear(&self, fp: Fp, images: &[Poly; NVARS]) -> Poly {
        let mut acc = Poly::zero();
        for t in &self.terms {
            let mut prod = Poly::constant(t.c);
            let e = t.m.exps();
            for (v, &ev) in e.iter().enumerate() {
                for _ in 0..ev {
                    prod = prod.mul(fp, &images[v]);
                }
            }
            acc = acc.add(fp, &prod);
        }
        acc
    }

    /// Checks the structural invariants (strictly descending, nonzero coeffs).
    pub fn is_normalized(&self, fp: Fp) -> bool {
        self.terms.iter().all(|t| t.c != 0 && t.c < fp.modulus())
            && self.terms.windows(2).all(|w| w[0].m > w[1].m)
    }
}
