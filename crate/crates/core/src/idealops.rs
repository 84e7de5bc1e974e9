//! Ideal-theoretic toolbox: sums, intersections, quotients, saturation,
//! random elements, dimension/degree, zero-scheme length and Jacobian
//! smoothness.
//!
//! Intersections and quotients are computed by syzygy runs on stacked
//! modules (no elimination variable), staying inside grevlex throughout.

use crate::groebner::engine::{minimal_generators, syzygies, GbEngine};
use crate::groebner::linalg::Mat;
use crate::groebner::modvec::{MTerm, MVec};
use crate::groebner::Ideal;
use crate::modres::hilbert::{hilbert_data, HilbertData};
use crate::ring::field::Fp;
use crate::ring::monomial::Monomial;
use crate::ring::poly::Poly;
use crate::ring::rng::Rng;
use crate::{Error, Result, NVARS};

/// Sum of ideals: generated by the union of the generators.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Ideal {
    let mut gens = a.gens().to_vec();
    gens.extend_from_slice(b.gens());
    Ideal::new(a.fp, gens)
}

/// Intersection of finitely many ideals by one syzygy run on
/// R ⊕ ... ⊕ R: syzygies of [(1,..,1), gens_1 in slot 1, gens_2 in slot 2, ...]
/// have as first coordinates exactly the elements of the intersection.
pub fn ideal_intersection_many(parts: &[&Ideal]) -> Ideal {
    assert!(!parts.is_empty());
    let fp = parts[0].fp;
    if parts.len() == 1 {
        return parts[0].clone();
    }
    if parts.iter().any(|i| i.is_zero_ideal()) {
        return Ideal::zero(fp);
    }
    let k = parts.len();
    let twists = vec![0i64; k];
    let mut cols: Vec<MVec> = Vec::new();
    let diag = MVec {
        terms: (0..k)
            .map(|j| MTerm {
                comp: j as u32,
                m: Monomial::ONE,
                c: 1,
            })
            .collect(),
    };
    cols.push(diag);
    for (j, part) in parts.iter().enumerate() {
        for g in part.gens() {
            cols.push(MVec::from_poly(j as u32, g));
        }
    }
    let syz = syzygies(fp, &twists, &cols);
    let gens: Vec<Poly> = syz
        .iter()
        .map(|s| s.component(0))
        .filter(|f| !f.is_zero())
        .collect();
    Ideal::new(fp, minimize_gens(fp, gens))
}

pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Ideal {
    ideal_intersection_many(&[a, b])
}

/// Colon ideal (I : J) = {f : f J ⊆ I}, by one syzygy run on ⊕_j R(deg h_j):
/// the column (h_1,..,h_s) plus per-slot generators of I.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Ideal {
    let fp = i.fp;
    if j.is_zero_ideal() {
        // I : 0 = R
        return Ideal::unit(fp);
    }
    if i.is_zero_ideal() {
        return Ideal::zero(fp);
    }
    let hs: Vec<&Poly> = j.gens().iter().collect();
    let s = hs.len();
    let twists: Vec<i64> = hs.iter().map(|h| -(h.degree().unwrap() as i64)).collect();
    let mut cols: Vec<MVec> = Vec::new();
    let mut diag_terms = Vec::new();
    for (jj, h) in hs.iter().enumerate() {
        for t in &h.terms {
            diag_terms.push(MTerm {
                comp: jj as u32,
                m: t.m,
                c: t.c,
            });
        }
    }
    cols.push(MVec { terms: diag_terms }.normalize(fp, s as u32));
    for jj in 0..s {
        for g in i.gens() {
            cols.push(MVec::from_poly(jj as u32, g));
        }
    }
    let syz = syzygies(fp, &twists, &cols);
    let gens: Vec<Poly> = syz
        .iter()
        .map(|v| v.component(0))
        .filter(|f| !f.is_zero())
        .collect();
    // (I : J) always contains I
    let mut all = gens;
    all.extend_from_slice(i.gens());
    Ideal::new(fp, minimize_gens(fp, all))
}

pub fn ideal_quotient_by_poly(i: &Ideal, f: &Poly) -> Ideal {
    ideal_quotient(i, &Ideal::new(i.fp, vec![f.clone()]))
}

/// A minimal generating subset (graded) of the given polynomials.
pub fn minimize_gens(fp: Fp, gens: Vec<Poly>) -> Vec<Poly> {
    let vecs: Vec<MVec> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| MVec::from_poly(0, g))
        .collect();
    minimal_generators(fp, &[0], &vecs)
        .into_iter()
        .map(|v| v.component(0))
        .collect()
}

/// The irrelevant maximal ideal (x0..x4).
pub fn irrelevant_ideal(fp: Fp) -> Ideal {
    Ideal::new(fp, (0..NVARS).map(Poly::var).collect())
}

/// Saturation I : m^infty. Defaults to colon by the last variable after a
/// seeded generic coordinate change (fast path), verified by J : x_v = J for
/// every variable; falls back to colonning by the full irrelevant ideal.
pub fn saturate(i: &Ideal) -> Ideal {
    saturate_seeded(i, 0x5a7)
}

pub fn saturate_seeded(i: &Ideal, seed: u64) -> Ideal {
    let fp = i.fp;
    if i.is_zero_ideal() || i.is_unit_ideal() {
        return i.clone();
    }
    let mut rng = Rng::derive(seed, "saturate-change");
    for _attempt in 0..3 {
        let (fwd, bwd) = random_linear_change(fp, &mut rng);
        let moved = Ideal::new(
            fp,
            i.gens()
                .iter()
                .map(|g| g.substitute_linear(fp, &fwd))
                .collect(),
        );
        let sat_moved = saturate_by_variable(&moved, NVARS - 1);
        let back = Ideal::new(
            fp,
            sat_moved
                .gens()
                .iter()
                .map(|g| g.substitute_linear(fp, &bwd))
                .collect(),
        );
        if is_saturated(&back) {
            return back;
        }
    }
    // full fallback: iterate colon by the irrelevant ideal
    let m = irrelevant_ideal(fp);
    let mut cur = i.clone();
    loop {
        let next = ideal_quotient(&cur, &m);
        if cur.contains_ideal(&next) {
            return cur;
        }
        cur = next;
    }
}

fn saturate_by_variable(i: &Ideal, v: usize) -> Ideal {
    let xv = Poly::var(v);
    let mut cur = i.clone();
    loop {
        let next = ideal_quotient_by_poly(&cur, &xv);
        if cur.contains_ideal(&next) {
            return cur;
        }
        cur = next;
    }
}

/// Saturation test: if the irrelevant ideal is associated to I, then
/// EVERY linear form is a zerodivisor on R/I, so I : l = I for a generic
/// linear form certifies saturation. A false negative (l inside another
/// associated prime) only costs a fallback pass, never a wrong answer.
pub fn is_saturated(i: &Ideal) -> bool {
    let fp = i.fp;
    let mut rng = Rng::derive(0x1dea, "saturation-check");
    (0..2).all(|_| {
        let mut l = Poly::zero();
        for v in 0..NVARS {
            l = l.add(fp, &Poly::var(v).scale(fp, rng.nonzero_field_elem(fp)));
        }
        let q = ideal_quotient_by_poly(i, &l);
        i.contains_ideal(&q)
    })
}

/// Seeded random invertible linear change of coordinates; returns the
/// forward and backward substitution images.
pub fn random_linear_change(fp: Fp, rng: &mut Rng) -> ([Poly; NVARS], [Poly; NVARS]) {
    loop {
        let mut m = [[0u64; NVARS]; NVARS];
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = rng.field_elem(fp);
            }
        }
        if let Some(minv) = invert_matrix(fp, &m) {
            let image = |mm: &[[u64; NVARS]; NVARS]| -> [Poly; NVARS] {
                std::array::from_fn(|i| {
                    let mut f = Poly::zero();
                    for (j, &c) in mm[i].iter().enumerate() {
                        f = f.add(fp, &Poly::var(j).scale(fp, c));
                    }
                    f
                })
            };
            return (image(&m), image(&minv));
        }
    }
}

fn invert_matrix(fp: Fp, m: &[[u64; NVARS]; NVARS]) -> Option<[[u64; NVARS]; NVARS]> {
    let n = NVARS;
    let mut a = Mat::zero(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            a.set(r, c, m[r][c]);
        }
        a.set(r, n + r, 1);
    }
    let pivots = a.row_reduce(fp);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    let mut out = [[0u64; NVARS]; NVARS];
    for r in 0..n {
        for c in 0..n {
            out[r][c] = a.at(r, n + c);
        }
    }
    Some(out)
}

/// Seeded random element of the degree-d piece of I.
pub fn random_in_degree(i: &Ideal, d: i64, rng: &mut Rng) -> Result<Poly> {
    let basis = i.graded_piece_basis(d);
    if basis.is_empty() {
        return Err(Error::Precondition(format!(
            "the degree-{} piece of the ideal is empty",
            d
        )));
    }
    let fp = i.fp;
    loop {
        let f = crate::ring::rng::random_combination(fp, rng, &basis);
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// (projective dimension of V(I), degree of V(I)) from the Hilbert
/// polynomial. The zero ideal gives (4, 1); empty vanishing locus (-1, 0).
pub fn dimension_and_degree(i: &Ideal) -> (i64, i64) {
    let h = hilbert_data(i);
    (h.dim, h.degree)
}

pub fn hilbert(i: &Ideal) -> HilbertData {
    hilbert_data(i)
}

/// Length of a finite scheme: the constant Hilbert polynomial. Errors on
/// positive-dimensional input.
pub fn zero_scheme_length(i: &Ideal) -> Result<i64> {
    let h = hilbert_data(i);
    if h.dim > 0 {
        return Err(Error::Precondition(format!(
            "zero_scheme_length of a {}-dimensional scheme",
            h.dim
        )));
    }
    if h.dim < 0 {
        return Ok(0);
    }
    Ok(h.polynomial.eval(0) as i64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothnessMode {
    /// Random minor combinations; a "smooth" answer is still a certificate.
    Probabilistic { trials: usize },
    /// Escalates trials, then falls back to the full minor ideal.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothnessVerdict {
    /// Certified: the ideal of the appended minor combinations plus I has an
    /// empty vanishing locus (its degree-d piece fills up).
    Smooth { empty_at_degree: i64, trials: usize },
    /// Certified singular: the full Jacobian-minor locus is nonempty, with
    /// the dimension of the singular locus.
    Singular { singular_locus_dim: i64 },
    /// Not certified smooth within the probabilistic budget.
    Suspect {
        scanned_to_degree: i64,
        trials: usize,
    },
}

impl SmoothnessVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothnessVerdict::Smooth { .. })
    }
}

/// Jacobian smoothness for a saturated ideal of a codimension-2 surface:
/// checks that V(I + 2x2 minors of the Jacobian) is empty. Random minor
/// combinations are grouped per degree so everything stays homogeneous; an
/// empty locus certifies smoothness regardless of the randomness.
pub fn smoothness_check(i: &Ideal, mode: SmoothnessMode, seed: u64) -> Result<SmoothnessVerdict> {
    let h = hilbert_data(i);
    if h.dim != 2 {
        return Err(Error::Precondition(format!(
            "smoothness_check expects a surface, got dimension {}",
            h.dim
        )));
    }
    let (trials, escalate) = match mode {
        SmoothnessMode::Probabilistic { trials } => (trials, false),
        SmoothnessMode::Exact => (8, true),
    };
    let minors = jacobian_minors(i);
    let mut rng = Rng::derive(seed, "smoothness");
    let combos = minor_combinations(i.fp, &minors, trials, &mut rng);
    match empty_locus_scan(i, &combos) {
        Some(d) => {
            return Ok(SmoothnessVerdict::Smooth {
                empty_at_degree: d,
                trials,
            })
        }
        None if !escalate => {
            return Ok(SmoothnessVerdict::Suspect {
                scanned_to_degree: scan_cap(i),
                trials,
            })
        }
        None => {}
    }
    let more = minor_combinations(i.fp, &minors, 3 * trials, &mut rng);
    if let Some(d) = empty_locus_scan(i, &more) {
        return Ok(SmoothnessVerdict::Smooth {
            empty_at_degree: d,
            trials: 4 * trials,
        });
    }
    // full minor ideal, exact verdict via the Hilbert polynomial
    let mut gens = i.gens().to_vec();
    gens.extend(minors);
    let full = Ideal::new(i.fp, gens);
    let hd = hilbert_data(&full);
    if hd.dim < 0 {
        Ok(SmoothnessVerdict::Smooth {
            empty_at_degree: scan_cap(i),
            trials: usize::MAX,
        })
    } else {
        Ok(SmoothnessVerdict::Singular {
            singular_locus_dim: hd.dim,
        })
    }
}

/// All 2x2 minors of the 5 x r Jacobian matrix of the generators.
pub fn jacobian_minors(i: &Ideal) -> Vec<Poly> {
    let fp = i.fp;
    let gens = i.gens();
    let jac: Vec<[Poly; NVARS]> = gens
        .iter()
        .map(|g| std::array::from_fn(|v| g.deriv(fp, v)))
        .collect();
    let mut out = Vec::new();
    for a in 0..gens.len() {
        for b in (a + 1)..gens.len() {
            for v in 0..NVARS {
                for w in (v + 1)..NVARS {
                    let m = jac[a][v]
                        .mul(fp, &jac[b][w])
                        .sub(fp, &jac[a][w].mul(fp, &jac[b][v]));
                    if !m.is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// `per_degree` random combinations within each minor degree class.
fn minor_combinations(fp: Fp, minors: &[Poly], per_degree: usize, rng: &mut Rng) -> Vec<Poly> {
    use std::collections::BTreeMap;
    let mut by_degree: BTreeMap<u32, Vec<&Poly>> = BTreeMap::new();
    for m in minors {
        by_degree.entry(m.degree().unwrap()).or_default().push(m);
    }
    let mut out = Vec::new();
    for (_, class) in by_degree {
        for _ in 0..per_degree {
            let mut acc = Poly::zero();
            for f in &class {
                acc = acc.add(fp, &f.scale(fp, rng.field_elem(fp)));
            }
            if !acc.is_zero() {
                out.push(acc);
            }
        }
    }
    out
}

fn scan_cap(i: &Ideal) -> i64 {
    let max_gen = i
        .gens()
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(4) as i64;
    2 * max_gen + 6
}

/// Incrementally extend a truncated basis of I + extra until some graded
/// piece of the quotient vanishes; returns that degree (an emptiness
/// certificate) or None at the cap.
fn empty_locus_scan(i: &Ideal, extra: &[Poly]) -> Option<i64> {
    let fp = i.fp;
    let mut gens: Vec<MVec> = i.gens().iter().map(|g| MVec::from_poly(0, g)).collect();
    gens.extend(extra.iter().map(|g| MVec::from_poly(0, g)));
    let start = gens
        .iter()
        .map(|v| v.degree(&[0]).unwrap())
        .max()
        .unwrap_or(0);
    let cap = scan_cap(i);
    let mut eng = GbEngine::new(fp, vec![0], 1, gens);
    let mut d = start;
    while d <= cap {
        eng.advance_to(d);
        let leads: Vec<Monomial> = eng.basis().iter().map(|v| v.lead().unwrap().m).collect();
        let quotient = Monomial::all_of_degree(d as u32)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count();
        if quotient == 0 {
            return Some(d);
        }
        d += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GradedPart;
    use crate::ring::parse::parse_poly;
    use crate::DEFAULT_PRIME;

    fn fp() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(fp(), s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(fp(), gens.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn sums() {
        let a = ideal(&["x0"]);
        let b = ideal(&["x1"]);
        assert!(ideal_sum(&a, &b).equals(&ideal(&["x0", "x1"])));
        assert!(ideal_sum(&a, &Ideal::zero(fp())).equals(&a));
        // two coordinate planes meet in the point [0:0:0:0:1]
        let p1 = ideal(&["x0", "x1"]);
        let p2 = ideal(&["x2", "x3"]);
        let s = ideal_sum(&p1, &p2);
        let (dim, deg) = dimension_and_degree(&s);
        assert_eq!((dim, deg), (0, 1));
    }

    #[test]
    fn intersections() {
        let a = ideal(&["x0"]);
        let b = ideal(&["x1"]);
        assert!(ideal_intersection(&a, &b).equals(&ideal(&["x0*x1"])));
        let c = ideal(&["x0", "x1"]);
        assert!(ideal_intersection(&c, &c).equals(&c));
        // two planes through a common line
        let p1 = ideal(&["x0", "x1"]);
        let p2 = ideal(&["x0", "x2"]);
        let want = ideal(&["x0", "x1*x2"]);
        let got = ideal_intersection(&p1, &p2);
        assert!(got.equals(&want));
        // Hilbert functions agree to degree 6
        for n in 0..=6 {
            assert_eq!(
                got.graded_piece_dim(n, GradedPart::Ideal),
                want.graded_piece_dim(n, GradedPart::Ideal)
            );
        }
    }

    #[test]
    fn quotients() {
        // (x0x1, x2) : (x0, x2) = (x1, x2)
        let i = ideal(&["x0*x1", "x2"]);
        let j = ideal(&["x0", "x2"]);
        let q = ideal_quotient(&i, &j);
        assert!(q.equals(&ideal(&["x1", "x2"])));
        // hand-check: f*x0 and f*x2 lie in I for f in {x1, x2}
        for f in [p("x1"), p("x2")] {
            assert!(i.contains(&f.mul(fp(), &p("x0"))));
            assert!(i.contains(&f.mul(fp(), &p("x2"))));
        }
        // I : R = I
        let r = Ideal::unit(fp());
        assert!(ideal_quotient(&i, &r).equals(&i));
        // I : I = R
        assert!(ideal_quotient(&i, &i).is_unit_ideal());
    }

    #[test]
    fn quotient_times_divisor_lands_in_ideal() {
        let i = ideal(&["x0^2 - x1*x2", "x3*x4"]);
        let j = ideal(&["x0", "x3"]);
        let q = ideal_quotient(&i, &j);
        for f in q.gens() {
            for h in j.gens() {
                assert!(i.contains(&f.mul(fp(), h)));
            }
        }
    }

    #[test]
    fn saturation_strips_irrelevant_torsion() {
        // x0 * (x0..x4): saturation is (x0)
        let i = ideal(&["x0^2", "x0*x1", "x0*x2", "x0*x3", "x0*x4"]);
        let s = saturate(&i);
        assert!(s.equals(&ideal(&["x0"])));
        // idempotent and containing
        let s2 = saturate(&s);
        assert!(s2.equals(&s));
        assert!(s.contains_ideal(&i));
    }

    #[test]
    fn saturation_of_saturated_is_identity() {
        let i = ideal(&["x0*x3 - x1*x2"]);
        assert!(saturate(&i).equals(&i));
    }

    #[test]
    fn random_elements_of_graded_pieces() {
        let mut rng = Rng::new(3);
        let i = ideal(&["x0"]);
        let f = random_in_degree(&i, 1, &mut rng).unwrap();
        assert_eq!(f.degree(), Some(1));
        assert!(i.contains(&f));
        // dim (x0,x1)_2 = 9
        let j = ideal(&["x0", "x1"]);
        assert_eq!(j.graded_piece_dim(2, GradedPart::Ideal), 9);
        let g = random_in_degree(&j, 2, &mut rng).unwrap();
        assert!(j.contains(&g));
        assert!(random_in_degree(&j, 0, &mut rng).is_err());
    }

    #[test]
    fn dimension_and_degree_basics() {
        assert_eq!(dimension_and_degree(&ideal(&["x0", "x1"])), (2, 1));
        assert_eq!(dimension_and_degree(&Ideal::zero(fp())), (4, 1));
        // cubic scroll: minors of a generic 2x3 linear matrix
        let scroll = ideal(&["x0*x3 - x1*x2", "x0*x4 - x1*x3", "x2*x4 - x3^2"]);
        assert_eq!(dimension_and_degree(&scroll), (2, 3));
    }

    #[test]
    fn zero_scheme_lengths() {
        let pt = ideal(&["x0", "x1", "x2", "x3"]);
        assert_eq!(zero_scheme_length(&pt).unwrap(), 1);
        let dbl = ideal(&["x0", "x1", "x2", "x3^2"]);
        assert_eq!(zero_scheme_length(&dbl).unwrap(), 2);
        assert!(zero_scheme_length(&ideal(&["x0", "x1"])).is_err());
    }

    #[test]
    fn smoothness_of_plane_and_singularity_of_cone() {
        let plane = ideal(&["x0", "x1"]);
        let v = smoothness_check(&plane, SmoothnessMode::Exact, 1).unwrap();
        assert!(v.is_smooth(), "{:?}", v);
        // quadric cone over a conic: singular at [0:0:0:0:1]
        let cone = ideal(&["x0*x2 - x1^2", "x3"]);
        let v = smoothness_check(&cone, SmoothnessMode::Exact, 1).unwrap();
        assert_eq!(
            v,
            SmoothnessVerdict::Singular {
                singular_locus_dim: 0
            }
        );
    }

    #[test]
    fn smooth_scroll_vs_twisted_cubic_cone() {
        // S(1,2) is smooth; the cone over the twisted cubic is singular at e4
        let scroll = ideal(&["x0*x3 - x1*x2", "x0*x4 - x1*x3", "x2*x4 - x3^2"]);
        let v = smoothness_check(&scroll, SmoothnessMode::Probabilistic { trials: 8 }, 2).unwrap();
        assert!(v.is_smooth(), "{:?}", v);
        let cone = ideal(&["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let v = smoothness_check(&cone, SmoothnessMode::Exact, 2).unwrap();
        assert_eq!(
            v,
            SmoothnessVerdict::Singular {
                singular_locus_dim: 0
            }
        );
    }

    #[test]
    fn saturated_detector() {
        assert!(is_saturated(&ideal(&["x0", "x1"])));
        assert!(!is_saturated(&ideal(&[
            "x0^2", "x0*x1", "x0*x2", "x0*x3", "x0*x4"
        ])));
    }
}
