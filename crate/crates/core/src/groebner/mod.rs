//! Reduced Groebner bases, normal forms, membership and graded-piece
//! dimensions for homogeneous ideals of R = F_p[x0..x4] under grevlex.

pub mod engine;
pub mod linalg;
pub mod modvec;

use crate::ring::field::Fp;
use crate::ring::monomial::{dim_rd, Monomial};
use crate::ring::parse::{parse_poly, poly_to_string};
use crate::ring::poly::Poly;
use crate::{Error, Result};
use engine::{module_gb, GbEngine};
use modvec::MVec;
use std::sync::OnceLock;

/// A homogeneous ideal with a lazily computed, cached reduced Groebner basis.
#[derive(Debug)]
pub struct Ideal {
    pub fp: Fp,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            fp: self.fp,
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Build from homogeneous generators (zero generators are dropped).
    pub fn new(fp: Fp, gens: Vec<Poly>) -> Ideal {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(g.is_homogeneous().0, "ideal generators must be homogeneous");
        }
        Ideal {
            fp,
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(fp: Fp) -> Ideal {
        Ideal::new(fp, Vec::new())
    }

    pub fn unit(fp: Fp) -> Ideal {
        Ideal::new(fp, vec![Poly::one()])
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gb().iter().any(|g| g.degree() == Some(0))
    }

    /// The reduced Groebner basis (computed once, cached).
    pub fn gb(&self) -> &[Poly] {
        self.gb
            .get_or_init(|| buchberger(self.fp, &self.gens, None))
    }

    /// Groebner basis valid for all graded pieces of degree <= d. Does not
    /// populate the cache unless the run happened to complete.
    pub fn gb_up_to(&self, d: i64) -> Vec<Poly> {
        if let Some(b) = self.gb.get() {
            return b.clone();
        }
        buchberger_up_to(self.fp, &self.gens, d)
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(self.fp, f, self.gb())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Containment of another ideal: every generator reduces to zero.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// dim over F_p of the degree-n piece of the ideal (or of R/I).
    pub fn graded_piece_dim(&self, n: i64, which: GradedPart) -> i64 {
        let total = dim_rd(n);
        if n < 0 {
            return 0;
        }
        let gb = self.gb();
        let leads: Vec<Monomial> = gb.iter().map(|g| g.lt().unwrap().m).collect();
        let in_ideal = Monomial::all_of_degree(n as u32)
            .into_iter()
            .filter(|m| leads.iter().any(|l| l.divides(m)))
            .count() as i64;
        match which {
            GradedPart::Ideal => in_ideal,
            GradedPart::Quotient => total - in_ideal,
        }
    }

    /// Same, but using a degree-truncated basis valid through n.
    pub fn graded_piece_dim_via(&self, gb: &[Poly], n: i64, which: GradedPart) -> i64 {
        if n < 0 {
            return 0;
        }
        let leads: Vec<Monomial> = gb.iter().map(|g| g.lt().unwrap().m).collect();
        let in_ideal = Monomial::all_of_degree(n as u32)
            .into_iter()
            .filter(|m| leads.iter().any(|l| l.divides(m)))
            .count() as i64;
        match which {
            GradedPart::Ideal => in_ideal,
            GradedPart::Quotient => dim_rd(n) - in_ideal,
        }
    }

    /// A basis of the degree-d graded piece I_d, as polynomials.
    pub fn graded_piece_basis(&self, d: i64) -> Vec<Poly> {
        graded_piece_basis_of(self.fp, self.gb(), d)
    }

    /// Monomials of degree n not in the lead-term ideal (a basis of (R/I)_n).
    pub fn standard_monomials(&self, n: u32) -> Vec<Monomial> {
        let leads: Vec<Monomial> = self.gb().iter().map(|g| g.lt().unwrap().m).collect();
        Monomial::all_of_degree(n)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradedPart {
    Ideal,
    Quotient,
}

/// Reduced Groebner basis of homogeneous generators under grevlex.
pub fn buchberger(fp: Fp, gens: &[Poly], cap: Option<i64>) -> Vec<Poly> {
    let vecs: Vec<MVec> = gens.iter().map(|g| MVec::from_poly(0, g)).collect();
    module_gb(fp, &[0], vecs, cap)
        .into_iter()
        .map(|v| v.component(0))
        .collect()
}

/// Basis valid for all graded pieces of degree <= d.
pub fn buchberger_up_to(fp: Fp, gens: &[Poly], d: i64) -> Vec<Poly> {
    buchberger(fp, gens, Some(d))
}

pub fn normal_form(fp: Fp, f: &Poly, gb: &[Poly]) -> Poly {
    let mut eng = GbEngine::new(
        fp,
        vec![0],
        1,
        gb.iter().map(|g| MVec::from_poly(0, g)).collect(),
    );
    // the basis is already a GB: installing generators runs no pairs of
    // smaller degree than f when we only ask for a normal form
    eng.install_only();
    eng.normal_form(MVec::from_poly(0, f)).component(0)
}

/// A basis of the degree-d piece of the ideal spanned by a Groebner basis.
pub fn graded_piece_basis_of(fp: Fp, gb: &[Poly], d: i64) -> Vec<Poly> {
    if d < 0 {
        return Vec::new();
    }
    // one monomial multiple of a basis element per lead monomial in lt(I)_d
    let leads: Vec<Monomial> = gb.iter().map(|g| g.lt().unwrap().m).collect();
    let mut out = Vec::new();
    for m in Monomial::all_of_degree(d as u32) {
        for (i, l) in leads.iter().enumerate() {
            if l.divides(&m) {
                let q = l.quotient_into(&m);
                out.push(gb[i].mul_term(fp, &q, 1));
                break;
            }
        }
    }
    out
}

/// `.ideal` file format: a header line, then one polynomial per line.
/// `#` starts a comment. Round-trips bit-exactly.
pub fn ideal_to_string(ideal: &Ideal) -> String {
    let mut s = format!("ring p={} vars=x0..x4 order=grevlex\n", ideal.fp.modulus());
    for g in ideal.gens() {
        s.push_str(&poly_to_string(ideal.fp, g));
        s.push('\n');
    }
    s
}

pub fn ideal_from_string(text: &str) -> Result<Ideal> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let header = header.trim();
    let rest = header
        .strip_prefix("ring p=")
        .ok_or_else(|| Error::Parse("missing 'ring p=...' header".into()))?;
    let (pstr, tail) = rest
        .split_once(' ')
        .ok_or_else(|| Error::Parse("malformed header".into()))?;
    if tail.trim() != "vars=x0..x4 order=grevlex" {
        return Err(Error::Parse(format!("unsupported ring spec: {}", tail)));
    }
    let p: u64 = pstr
        .parse()
        .map_err(|_| Error::Parse("bad modulus".into()))?;
    let fp = Fp::new(p)?;
    let mut gens = Vec::new();
    for line in lines {
        let line = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let f = parse_poly(fp, line)?;
        let (homog, _) = f.is_homogeneous();
        if !homog {
            return Err(Error::Parse(format!(
                "non-homogeneous polynomial: {}",
                line
            )));
        }
        if !f.is_zero() {
            gens.push(f);
        }
    }
    Ok(Ideal::new(fp, gens))
}
