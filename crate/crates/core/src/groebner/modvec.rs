//! Vectors in a graded free module ⊕ R(-t_i): term lists (component,
//! monomial, coefficient) sorted under a component-blocked term order.
//!
//! The order is parameterized by `split`: components below `split` form the
//! "upper" block and every upper term beats every lower term (an elimination
//! order between blocks, used for syzygy extraction). Within a block terms
//! compare by monomial (grevlex) with ties going to the smaller component.
//! `split >= rank` degenerates to the plain term-over-position order.

use crate::ring::field::Fp;
use crate::ring::monomial::Monomial;
use crate::ring::poly::Poly;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MTerm {
    pub comp: u32,
    pub m: Monomial,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MVec {
    pub terms: Vec<MTerm>,
}

#[inline]
pub fn term_cmp(split: u32, a: (u32, Monomial), b: (u32, Monomial)) -> Ordering {
    let ba = a.0 < split;
    let bb = b.0 < split;
    if ba != bb {
        return if ba {
            Ordering::Greater
        } else {
            Ordering::Less
        };
    }
    match a.1.cmp(&b.1) {
        Ordering::Equal => b.0.cmp(&a.0),
        o => o,
    }
}

impl MVec {
    pub fn zero() -> MVec {
        MVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    /// Unit vector e_comp scaled by a polynomial.
    pub fn from_poly(comp: u32, f: &Poly) -> MVec {
        MVec {
            terms: f
                .terms
                .iter()
                .map(|t| MTerm {
                    comp,
                    m: t.m,
                    c: t.c,
                })
                .collect(),
        }
    }

    /// Extract the polynomial sitting in one component.
    pub fn component(&self, comp: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| crate::ring::poly::Term { m: t.m, c: t.c })
                .collect(),
        }
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Internal degree of a homogeneous vector under the given twists
    /// (degree of m e_c is deg m + twists[c]).
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.terms
            .first()
            .map(|t| t.m.deg() as i64 + twists[t.comp as usize])
    }

    pub fn is_homogeneous(&self, twists: &[i64]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.m.deg() as i64 + twists[t.comp as usize] == d),
        }
    }

    pub fn sort(&mut self, split: u32) {
        self.terms
            .sort_unstable_by(|a, b| term_cmp(split, (b.comp, b.m), (a.comp, a.m)));
    }

    pub fn normalize(mut self, fp: Fp, split: u32) -> MVec {
        self.sort(split);
        let mut out: Vec<MTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            let c = t.c % fp.modulus();
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.m == t.m => {
                    last.c = fp.add(last.c, c);
                    if last.c == 0 {
                        out.pop();
                    }
                }
                _ => {
                    if c != 0 {
                        out.push(MTerm {
                            comp: t.comp,
                            m: t.m,
                            c,
                        });
                    }
                }
            }
        }
        MVec { terms: out }
    }

    /// self - (c * m) * other, both sorted under `split`.
    pub fn sub_mul(&self, fp: Fp, other: &MVec, m: &Monomial, c: u64, split: u32) -> MVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let bm = other.terms[j].m.mul(m);
            let bc = fp.neg(fp.mul(other.terms[j].c, c));
            let bcomp = other.terms[j].comp;
            match term_cmp(split, (a.comp, a.m), (bcomp, bm)) {
                Ordering::Greater => {
                    out.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(MTerm {
                        comp: bcomp,
                        m: bm,
                        c: bc,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let cc = fp.add(a.c, bc);
                    if cc != 0 {
                        out.push(MTerm {
                            comp: a.comp,
                            m: a.m,
                            c: cc,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let t = &other.terms[j];
            out.push(MTerm {
                comp: t.comp,
                m: t.m.mul(m),
                c: fp.neg(fp.mul(t.c, c)),
            });
            j += 1;
        }
        MVec { terms: out }
    }

    pub fn scale(&self, fp: Fp, c: u64) -> MVec {
        if c == 0 {
            return MVec::zero();
        }
        MVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp,
                    m: t.m,
                    c: fp.mul(t.c, c),
                })
                .collect(),
        }
    }

    pub fn monic(&self, fp: Fp) -> MVec {
        match self.lead() {
            None => MVec::zero(),
            Some(t) if t.c == 1 => self.clone(),
            Some(t) => self.scale(fp, fp.inv(t.c)),
        }
    }

    /// Shift all component indices by `offset`.
    pub fn shift_components(&self, offset: u32) -> MVec {
        MVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp + offset,
                    m: t.m,
                    c: t.c,
                })
                .collect(),
        }
    }
}
