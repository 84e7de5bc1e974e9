//! Hilbert series and Hilbert polynomials.
//!
//! The series numerator of R/I is computed combinatorially from the
//! lead-term monomial ideal by pivot recursion (independent of any free
//! resolution, so it double-checks Betti data). The Hilbert polynomial is
//! expanded exactly over the rationals.

use crate::groebner::{GradedPart, Ideal};
use crate::ring::monomial::{dim_rd, Monomial};
use crate::NVARS;

/// Numerator N(t) with HS(R/M) = N(t)/(1-t)^5, for the monomial ideal
/// generated by `gens`. Coefficients of t^k at index k.
pub fn monomial_ideal_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut gens = minimalize_monomials(gens);
    numerator_rec(&mut gens)
}

fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
}

fn numerator_rec(gens: &mut Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.deg() == 0) {
        return vec![0];
    }
    if gens.len() == 1 {
        let mut out = vec![0i64; gens[0].deg() as usize + 1];
        out[0] = 1;
        *out.last_mut().unwrap() = -1;
        return out;
    }
    // a bare variable among the generators kills that variable outright:
    // N(M) = (1 - t) * N(M without it); the remaining generators cannot
    // involve the variable since the input is inclusion-minimal
    if let Some(k) = gens.iter().position(|g| g.deg() == 1) {
        let mut rest: Vec<Monomial> = gens.clone();
        rest.remove(k);
        let inner = numerator_rec(&mut rest);
        let mut out = inner.clone();
        poly_sub_shifted(&mut out, &inner, 1, -1);
        while out.last() == Some(&0) {
            out.pop();
        }
        return out;
    }
    // pure powers of distinct variables: product formula
    if gens
        .iter()
        .all(|g| g.exps().iter().filter(|&&e| e > 0).count() == 1)
    {
        let mut vars_seen = [false; NVARS];
        let mut distinct = true;
        for g in gens.iter() {
            let v = g.exps().iter().position(|&e| e > 0).unwrap();
            if vars_seen[v] {
                distinct = false;
                break;
            }
            vars_seen[v] = true;
        }
        if distinct {
            let mut acc = vec![1i64];
            for g in gens.iter() {
                let d = g.deg() as usize;
                let mut factor = vec![0i64; d + 1];
                factor[0] = 1;
                factor[d] = -1;
                acc = mul_dense(&acc, &factor);
            }
            return acc;
        }
    }
    // pivot on the most frequent variable
    let mut count = [0usize; NVARS];
    for g in gens.iter() {
        for (v, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                count[v] += 1;
            }
        }
    }
    let pivot = count.iter().enumerate().max_by_key(|&(_, &c)| c).unwrap().0;
    // N(M) = N(M + (x)) + t * N(M : x)
    let mut plus: Vec<Monomial> = vec![Monomial::var(pivot)];
    for g in gens.iter() {
        if g.exp(pivot) == 0 {
            plus.push(*g);
        }
    }
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exps();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial::from_exps(e)
        })
        .collect();
    let mut plus = minimalize_monomials(&plus);
    colon = minimalize_monomials(&colon);
    let a = numerator_rec(&mut plus);
    let b = numerator_rec(&mut colon);
    let mut out = a;
    poly_sub_shifted(&mut out, &b, 1, 1);
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mul_dense(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// A polynomial with rational coefficients num[k]/den for t^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub num: Vec<i128>,
    pub den: i128,
}

impl QPoly {
    pub fn degree(&self) -> Option<usize> {
        self.num.iter().rposition(|&c| c != 0)
    }

    pub fn eval(&self, t: i64) -> i128 {
        let mut acc: i128 = 0;
        let mut pw: i128 = 1;
        for &c in &self.num {
            acc += c * pw;
            pw *= t as i128;
        }
        debug_assert!(acc % self.den == 0, "polynomial is integer-valued");
        acc / self.den
    }

    /// Coefficient of t^k as an exact rational times `scale`:
    /// returns num[k]*scale/den, asserting divisibility.
    pub fn coeff_times(&self, k: usize, scale: i128) -> i128 {
        let c = self.num.get(k).copied().unwrap_or(0) * scale;
        assert!(c % self.den == 0);
        c / self.den
    }
}

/// The Hilbert polynomial of R/I from the series numerator:
/// P(n) = sum_k N_k * C(n - k + 4, 4).
pub fn hilbert_polynomial_from_numerator(numer: &[i64]) -> QPoly {
    // C(n - k + 4, 4) = (n-k+1)(n-k+2)(n-k+3)(n-k+4) / 24
    let mut num = vec![0i128; 5];
    for (k, &c) in numer.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut f = vec![1i128];
        for off in 1..=4i128 {
            // multiply by (n + (off - k))
            let shift = off - k as i128;
            let mut g = vec![0i128; f.len() + 1];
            for (i, &a) in f.iter().enumerate() {
                g[i + 1] += a;
                g[i] += a * shift;
            }
            f = g;
        }
        for (i, &a) in f.iter().enumerate() {
            num[i] += a * c as i128;
        }
    }
    QPoly { num, den: 24 }
}

/// Numerical data extracted from an ideal's Hilbert series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// numerator of HS(R/I)
    pub numerator: Vec<i64>,
    /// Hilbert polynomial of R/I
    pub polynomial: QPoly,
    /// projective dimension of V(I): degree of the polynomial, -1 if empty
    pub dim: i64,
    /// degree of V(I): normalized leading coefficient
    pub degree: i64,
}

impl HilbertData {
    /// For a surface (dim 2): P(t) = (d/2)t^2 + ((d+2-2*pi)/2)t + chi.
    pub fn surface_invariants(&self) -> Option<SurfaceInvariants> {
        if self.dim != 2 {
            return None;
        }
        let d = self.degree;
        let linear = self.polynomial.coeff_times(1, 2); // 2 * linear coefficient
        let pi = (d + 2 - linear as i64) / 2;
        let chi = self.polynomial.eval(0) as i64;
        Some(SurfaceInvariants {
            degree: d,
            sectional_genus: pi,
            chi,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub degree: i64,
    pub sectional_genus: i64,
    pub chi: i64,
}

/// Hilbert data of R/I (`I` need not be saturated, but saturated input gives
/// the geometric invariants).
pub fn hilbert_data(ideal: &Ideal) -> HilbertData {
    let leads: Vec<Monomial> = ideal.gb().iter().map(|g| g.lt().unwrap().m).collect();
    let numerator = monomial_ideal_numerator(&leads);
    let polynomial = hilbert_polynomial_from_numerator(&numerator);
    let (dim, degree) = match polynomial.degree() {
        None => (-1, 0),
        Some(k) => {
            let mut fact = 1i128;
            for i in 1..=k as i128 {
                fact *= i;
            }
            let lead = polynomial.coeff_times(k, fact);
            (k as i64, lead as i64)
        }
    };
    HilbertData {
        numerator,
        polynomial,
        dim,
        degree,
    }
}

/// Hilbert function of R/I in one degree, by standard monomial count.
pub fn hilbert_function(ideal: &Ideal, n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        ideal.graded_piece_dim(n, GradedPart::Quotient)
    }
}

/// Consistency: the numerator predicts the Hilbert function in low degrees.
pub fn numerator_predicts_hf(numer: &[i64], n: i64) -> i64 {
    let mut acc = 0i64;
    for (k, &c) in numer.iter().enumerate() {
        acc += c * dim_rd(n - k as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::field::Fp;
    use crate::ring::parse::parse_poly;
    use crate::ring::poly::Poly;
    use crate::DEFAULT_PRIME;

    fn fp() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(fp(), s).unwrap()
    }

    #[test]
    fn zero_ideal_hilbert_polynomial_is_binomial() {
        let z = Ideal::zero(fp());
        let h = hilbert_data(&z);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.dim, 4);
        assert_eq!(h.degree, 1);
        for n in 0..6 {
            assert_eq!(h.polynomial.eval(n) as i64, dim_rd(n));
        }
    }

    #[test]
    fn plane_is_dim_two_degree_one() {
        let i = Ideal::new(fp(), vec![p("x0"), p("x1")]);
        let h = hilbert_data(&i);
        assert_eq!((h.dim, h.degree), (2, 1));
        let s = h.surface_invariants().unwrap();
        assert_eq!(s.degree, 1);
        assert_eq!(s.sectional_genus, 0);
        assert_eq!(s.chi, 1);
    }

    #[test]
    fn numerator_matches_hilbert_function_for_mixed_ideal() {
        let i = Ideal::new(fp(), vec![p("x0^2 - x1*x2"), p("x0*x1"), p("x3^3 - x4^3")]);
        let h = hilbert_data(&i);
        for n in 0..=9i64 {
            assert_eq!(
                numerator_predicts_hf(&h.numerator, n),
                hilbert_function(&i, n),
                "n={}",
                n
            );
        }
    }

    #[test]
    fn complete_intersection_numerator_is_product() {
        // (f, g) of degrees 2 and 3: N(t) = (1-t^2)(1-t^3)
        let i = Ideal::new(fp(), vec![p("x0^2 - x1*x4"), p("x2^3 - x0*x3*x4")]);
        let h = hilbert_data(&i);
        assert_eq!(h.numerator, vec![1, 0, -1, -1, 0, 1]);
    }

    #[test]
    fn quadric_threefold_invariants() {
        let i = Ideal::new(fp(), vec![p("x0*x4 - x1*x3 + x2^2")]);
        let h = hilbert_data(&i);
        assert_eq!((h.dim, h.degree), (3, 2));
    }
}
