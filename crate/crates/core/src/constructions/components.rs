//! Building blocks for the residual schemes: linear subspaces, cubic
//! scrolls with a prescribed directrix, the explicit multiplicity
//! structures on a plane, and Del Pezzo surfaces of degree 3 and 4.

use crate::groebner::Ideal;
use crate::idealops::{
    dimension_and_degree, random_in_degree, smoothness_check, zero_scheme_length, SmoothnessMode,
};
use crate::ring::field::Fp;
use crate::ring::monomial::Monomial;
use crate::ring::poly::Poly;
use crate::ring::rng::Rng;
use crate::{Error, Result, NVARS};

/// Ideal of the linear subspace cut out by independent linear forms.
pub fn linear_subspace(fp: Fp, forms: Vec<Poly>) -> Result<Ideal> {
    for f in &forms {
        if f.degree() != Some(1) {
            return Err(Error::Precondition(
                "linear_subspace expects linear forms".into(),
            ));
        }
    }
    if crate::cohomology::linear_span_dim(fp, &forms) != forms.len() {
        return Err(Error::Precondition("dependent linear forms".into()));
    }
    Ok(Ideal::new(fp, forms))
}

/// A random linear form with the given coefficients drawn from `rng`.
pub fn random_linear_form(fp: Fp, rng: &mut Rng) -> Poly {
    loop {
        let mut f = Poly::zero();
        for v in 0..NVARS {
            f = f.add(fp, &Poly::var(v).scale(fp, rng.field_elem(fp)));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random form of the given degree in the plane variables x2, x3, x4.
pub fn random_plane_form(fp: Fp, rng: &mut Rng, degree: u32) -> Poly {
    loop {
        let pairs: Vec<(Monomial, u64)> = Monomial::all_of_degree(degree)
            .into_iter()
            .filter(|m| {
                let e = m.exps();
                e[0] == 0 && e[1] == 0
            })
            .map(|m| (m, rng.field_elem(fp)))
            .collect();
        let f = Poly::from_pairs(fp, pairs);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random line: the row space of two random points; returns the three
/// cutting forms (the kernel of evaluation at the points).
pub fn random_line(fp: Fp, rng: &mut Rng) -> Vec<Poly> {
    use crate::groebner::linalg::Mat;
    loop {
        let mut m = Mat::zero(2, NVARS);
        for r in 0..2 {
            for c in 0..NVARS {
                m.set(r, c, rng.field_elem(fp));
            }
        }
        if m.clone().rank(fp) != 2 {
            continue;
        }
        let kernel = m.kernel_basis(fp);
        if kernel.len() != 3 {
            continue;
        }
        return kernel
            .into_iter()
            .map(|k| {
                let mut f = Poly::zero();
                for (v, &c) in k.iter().enumerate() {
                    f = f.add(fp, &Poly::var(v).scale(fp, c));
                }
                f
            })
            .collect();
    }
}

/// Random nonzero combination of the given forms (all of one degree).
pub fn random_span_element(fp: Fp, rng: &mut Rng, forms: &[Poly]) -> Poly {
    loop {
        let f = crate::ring::rng::random_combination(fp, rng, forms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A plane through the line cut out by `line_forms`: the vanishing of two
/// random independent combinations.
pub fn plane_through_line(fp: Fp, rng: &mut Rng, line_forms: &[Poly]) -> Ideal {
    loop {
        let a = random_span_element(fp, rng, line_forms);
        let b = random_span_element(fp, rng, line_forms);
        if crate::cohomology::linear_span_dim(fp, &[a.clone(), b.clone()]) == 2 {
            return Ideal::new(fp, vec![a, b]);
        }
    }
}

/// Data of a cubic scroll built around a prescribed directrix line.
pub struct Scroll {
    pub ideal: Ideal,
    /// the 2x3 matrix of linear forms whose minors cut the scroll
    pub matrix: [[Poly; 3]; 2],
    /// forms cutting the directrix line
    pub directrix: Vec<Poly>,
}

impl Scroll {
    /// The ruling line over [s:t]: common zeroes of t*row0 - s*row1.
    pub fn ruling(&self, fp: Fp, s: u64, t: u64) -> Result<Ideal> {
        let forms: Vec<Poly> = (0..3)
            .map(|j| {
                self.matrix[0][j]
                    .scale(fp, t)
                    .sub(fp, &self.matrix[1][j].scale(fp, s))
            })
            .collect();
        linear_subspace(fp, forms)
    }
}

/// Smooth cubic scroll having the given line as directrix: minors of
/// [[u0, a, b], [v0, c, d]] where u0, v0 complete the line's forms to a
/// basis and a..d are random combinations of the line's forms. Redraws
/// internally on degenerate choices (rank-droppy matrices, singular
/// scrolls).
pub fn cubic_scroll(fp: Fp, directrix_forms: &[Poly], rng: &mut Rng) -> Result<Scroll> {
    assert_eq!(directrix_forms.len(), 3);
    // complete to a basis of linear forms
    let (u0, v0) = complete_basis(fp, directrix_forms, rng)?;
    for _ in 0..24 {
        let a = random_span_element(fp, rng, directrix_forms);
        let b = random_span_element(fp, rng, directrix_forms);
        let c = random_span_element(fp, rng, directrix_forms);
        let d = random_span_element(fp, rng, directrix_forms);
        let matrix = [
            [u0.clone(), a.clone(), b.clone()],
            [v0.clone(), c.clone(), d.clone()],
        ];
        let minors = vec![
            u0.mul(fp, &c).sub(fp, &v0.mul(fp, &a)),
            u0.mul(fp, &d).sub(fp, &v0.mul(fp, &b)),
            a.mul(fp, &d).sub(fp, &b.mul(fp, &c)),
        ];
        let ideal = Ideal::new(fp, minors);
        if dimension_and_degree(&ideal) != (2, 3) {
            continue;
        }
        let verdict = smoothness_check(
            &ideal,
            SmoothnessMode::Probabilistic { trials: 4 },
            rng.next_u64(),
        )?;
        if !verdict.is_smooth() {
            continue;
        }
        return Ok(Scroll {
            ideal,
            matrix,
            directrix: directrix_forms.to_vec(),
        });
    }
    Err(Error::Precondition(
        "no smooth scroll found within the retry budget".into(),
    ))
}

fn complete_basis(fp: Fp, forms: &[Poly], rng: &mut Rng) -> Result<(Poly, Poly)> {
    for _ in 0..16 {
        let u0 = random_linear_form(fp, rng);
        let v0 = random_linear_form(fp, rng);
        let mut all = forms.to_vec();
        all.push(u0.clone());
        all.push(v0.clone());
        if crate::cohomology::linear_span_dim(fp, &all) == 5 {
            return Ok((u0, v0));
        }
    }
    Err(Error::Precondition(
        "could not complete the line's forms to a basis".into(),
    ))
}

/// The multiplicity-three structure on the plane {x0 = x1 = 0}:
/// I_T = (x0^2, x0 x1, x1^3, a x1^2 + b1 b2 b3 x0) with a quadric and three
/// linear forms in x2..x4 sharing no common factor.
pub fn triple_plane_structure(fp: Fp, a: &Poly, b: &[Poly; 3]) -> Result<Ideal> {
    if a.degree() != Some(2) {
        return Err(Error::Precondition("a must be a quadric".into()));
    }
    for bi in b {
        if bi.degree() != Some(1) {
            return Err(Error::Precondition("b_i must be linear".into()));
        }
    }
    let in_plane_vars = |f: &Poly| {
        f.terms.iter().all(|t| {
            let e = t.m.exps();
            e[0] == 0 && e[1] == 0
        })
    };
    if !in_plane_vars(a) || !b.iter().all(|bi| in_plane_vars(bi)) {
        return Err(Error::Precondition("a, b_i must live in x2..x4".into()));
    }
    let bprod = b[0].mul(fp, &b[1]).mul(fp, &b[2]);
    // no common factor: V(a, b1 b2 b3) on the plane must be finite (6 points)
    let test = Ideal::new(
        fp,
        vec![Poly::var(0), Poly::var(1), a.clone(), bprod.clone()],
    );
    let sat = crate::idealops::saturate(&test);
    let len = zero_scheme_length(&sat)
        .map_err(|_| Error::Precondition("a and b1 b2 b3 share a common factor".into()))?;
    if len != 6 {
        return Err(Error::Precondition(format!(
            "V(a) ∩ V(b1 b2 b3) has length {}, expected 6 distinct points",
            len
        )));
    }
    let x0 = Poly::var(0);
    let x1 = Poly::var(1);
    let gens = vec![
        x0.mul(fp, &x0),
        x0.mul(fp, &x1),
        x1.mul(fp, &x1).mul(fp, &x1),
        a.mul(fp, &x1.mul(fp, &x1)).add(fp, &bprod.mul(fp, &x0)),
    ];
    Ok(Ideal::new(fp, gens))
}

/// The multiplicity-four structure on the plane {x0 = x1 = 0}:
/// I_M = (x0,x1)^3 + (g x0^2 - f x0 x1, h x0^2 - f x1^2, h x0 x1 - g x1^2)
/// with quadrics f, g, h in x2..x4 without common factor.
pub fn quadruple_plane_structure(fp: Fp, f: &Poly, g: &Poly, h: &Poly) -> Result<Ideal> {
    for q in [f, g, h] {
        if q.degree() != Some(2) {
            return Err(Error::Precondition("f, g, h must be quadrics".into()));
        }
    }
    // common factor would make V(f,g,h) on the plane positive-dimensional
    let test = Ideal::new(
        fp,
        vec![Poly::var(0), Poly::var(1), f.clone(), g.clone(), h.clone()],
    );
    let (dim, _) = dimension_and_degree(&crate::idealops::saturate(&test));
    if dim > 0 {
        return Err(Error::Precondition("f, g, h share a common factor".into()));
    }
    let x0 = Poly::var(0);
    let x1 = Poly::var(1);
    let cube = |a: &Poly, b: &Poly, c: &Poly| a.mul(fp, b).mul(fp, c);
    let mut gens = vec![
        cube(&x0, &x0, &x0),
        cube(&x0, &x0, &x1),
        cube(&x0, &x1, &x1),
        cube(&x1, &x1, &x1),
    ];
    gens.push(
        g.mul(fp, &cube(&x0, &x0, &Poly::one()))
            .sub(fp, &f.mul(fp, &x0.mul(fp, &x1))),
    );
    gens.push(
        h.mul(fp, &x0.mul(fp, &x0))
            .sub(fp, &f.mul(fp, &x1.mul(fp, &x1))),
    );
    gens.push(
        h.mul(fp, &x0.mul(fp, &x1))
            .sub(fp, &g.mul(fp, &x1.mul(fp, &x1))),
    );
    Ok(Ideal::new(fp, gens))
}

/// Del Pezzo surface of degree 4: complete intersection of two quadrics,
/// optionally through prescribed subschemes; retried until smooth.
pub fn del_pezzo_quartic(fp: Fp, through: &[&Ideal], rng: &mut Rng) -> Result<Ideal> {
    let space: Ideal = match through.len() {
        0 => Ideal::zero(fp),
        1 => through[0].clone(),
        _ => {
            let refs: Vec<&Ideal> = through.to_vec();
            crate::idealops::ideal_intersection_many(&refs)
        }
    };
    let quadrics = if space.is_zero_ideal() {
        None
    } else {
        Some(space)
    };
    for _ in 0..24 {
        let (q1, q2) = match &quadrics {
            None => (
                crate::ring::rng::random_poly_of_degree(fp, rng, 2),
                crate::ring::rng::random_poly_of_degree(fp, rng, 2),
            ),
            Some(sp) => (random_in_degree(sp, 2, rng)?, random_in_degree(sp, 2, rng)?),
        };
        let ideal = Ideal::new(fp, vec![q1, q2]);
        if dimension_and_degree(&ideal) != (2, 4) {
            continue;
        }
        let verdict = smoothness_check(
            &ideal,
            SmoothnessMode::Probabilistic { trials: 4 },
            rng.next_u64(),
        )?;
        if verdict.is_smooth() {
            return Ok(ideal);
        }
    }
    Err(Error::Precondition(
        "no smooth quartic Del Pezzo within the retry budget".into(),
    ))
}

/// Del Pezzo surface of degree 3: a cubic surface in the hyperplane `h0`,
/// optionally containing the line cut by `line_forms` (which must lie in
/// the hyperplane); retried until smooth.
pub fn del_pezzo_cubic(
    fp: Fp,
    h0: &Poly,
    line_forms: Option<&[Poly]>,
    rng: &mut Rng,
) -> Result<Ideal> {
    for _ in 0..24 {
        let f3 = match line_forms {
            None => crate::ring::rng::random_poly_of_degree(fp, rng, 3),
            Some(forms) => {
                let line = Ideal::new(fp, forms.to_vec());
                random_in_degree(&line, 3, rng)?
            }
        };
        let ideal = Ideal::new(fp, vec![h0.clone(), f3.clone()]);
        if dimension_and_degree(&ideal) != (2, 3) {
            continue;
        }
        let verdict = smoothness_check(
            &ideal,
            SmoothnessMode::Probabilistic { trials: 4 },
            rng.next_u64(),
        )?;
        if verdict.is_smooth() {
            return Ok(ideal);
        }
    }
    Err(Error::Precondition(
        "no smooth cubic Del Pezzo within the retry budget".into(),
    ))
}
