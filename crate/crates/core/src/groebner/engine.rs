//! Buchberger engine for homogeneous submodules of graded free modules,
//! processing S-pairs in ascending internal degree so that a run capped at
//! degree d determines all graded pieces up to d.
//!
//! Pair bookkeeping follows Gebauer-Moller: criteria M and F prune new pairs,
//! criterion B prunes old ones. The coprimality (product) criterion is only
//! sound for plain ideals and is switched off for genuine module input.
//! Pair selection within a degree is by insertion index, so runs are
//! reproducible for a fixed input order.

use super::modvec::{term_cmp, MTerm, MVec};
use crate::ring::field::Fp;
use crate::ring::monomial::Monomial;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: i64,
    i: usize,
    j: usize,
}

#[derive(Debug)]
pub struct GbEngine {
    fp: Fp,
    pub twists: Vec<i64>,
    split: u32,
    product_criterion: bool,
    /// Schreyer mode: no S-pairs between two lower-block-leading elements.
    /// The lower elements collected from an upper-complete run still
    /// generate the elimination intersection, which is all syzygy
    /// extraction needs, at a fraction of the pair load.
    skip_lower_pairs: bool,
    basis: Vec<MVec>,
    // lead data mirrors `basis`
    lead: Vec<(u32, Monomial)>,
    by_comp: Vec<Vec<usize>>,
    pairs: BinaryHeap<Reverse<PairKey>>,
    pending: Vec<(i64, MVec)>, // inputs not yet absorbed, ascending degree
    next_pending: usize,
    pub done_through: i64,
    pub reductions: u64,
}

impl GbEngine {
    /// `split` components below this index form the eliminated block.
    pub fn new(fp: Fp, twists: Vec<i64>, split: u32, gens: Vec<MVec>) -> GbEngine {
        GbEngine::with_mode(fp, twists, split, gens, false)
    }

    pub fn with_mode(
        fp: Fp,
        twists: Vec<i64>,
        split: u32,
        gens: Vec<MVec>,
        skip_lower_pairs: bool,
    ) -> GbEngine {
        let rank = twists.len();
        let product_criterion = rank == 1;
        let mut pending: Vec<(i64, MVec)> = gens
            .into_iter()
            .map(|g| g.normalize(fp, split))
            .filter(|g| !g.is_zero())
            .map(|g| (g.degree(&twists).unwrap(), g))
            .collect();
        for (_, g) in &pending {
            assert!(
                g.is_homogeneous(&twists),
                "engine input must be homogeneous"
            );
        }
        pending.sort_by_key(|(d, _)| *d);
        GbEngine {
            fp,
            twists,
            split,
            product_criterion,
            skip_lower_pairs,
            basis: Vec::new(),
            lead: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            pairs: BinaryHeap::new(),
            pending,
            next_pending: 0,
            done_through: i64::MIN,
            reductions: 0,
        }
    }

    pub fn basis(&self) -> &[MVec] {
        &self.basis
    }

    /// Gebauer-Moller update: install element, prune pair set.
    fn update(&mut self, h: MVec) {
        let t = self.next_index();
        let (hc, hm) = {
            let l = h.lead().unwrap();
            (l.comp, l.m)
        };

        // candidate new pairs: same leading component
        let mut cand: Vec<usize> = if self.skip_lower_pairs && hc >= self.split {
            Vec::new()
        } else {
            self.by_comp[hc as usize].clone()
        };

        // criterion M: drop g1 when lcm(g2,h) strictly divides lcm(g1,h)
        let lcms: Vec<Monomial> = cand.iter().map(|&g| self.lead[g].1.lcm(&hm)).collect();
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            for b in 0..cand.len() {
                if a != b && lcms[b] != lcms[a] && lcms[b].divides(&lcms[a]) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // criterion F: among equal lcms keep the first
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in (a + 1)..cand.len() {
                if keep[b] && lcms[b] == lcms[a] {
                    keep[b] = false;
                }
            }
        }
        // product criterion (ideals only): coprime leads reduce to zero
        if self.product_criterion {
            for a in 0..cand.len() {
                if keep[a] && self.lead[cand[a]].1.coprime(&hm) {
                    keep[a] = false;
                }
            }
        }
        let mut new_pairs: Vec<PairKey> = Vec::new();
        let mut it = keep.iter();
        cand.retain(|_| *it.next().unwrap());
        for &g in &cand {
            new_pairs.push(PairKey {
                degree: self.lcm_degree_with(g, hm, hc),
                i: g,
                j: t,
            });
        }

        // criterion B on old pairs: lt(h) divides lcm(i,j) strictly on both sides
        let old: Vec<PairKey> = self.pairs.iter().map(|r| r.0).collect();
        self.pairs.clear();
        for p in old {
            let (ci, mi) = self.lead[p.i];
            let (_, mj) = self.lead[p.j];
            let lcm_ij = mi.lcm(&mj);
            let drop =
                ci == hc && hm.divides(&lcm_ij) && hm.lcm(&mi) != lcm_ij && hm.lcm(&mj) != lcm_ij;
            if !drop {
                self.pairs.push(Reverse(p));
            }
        }
        for p in new_pairs {
            self.pairs.push(Reverse(p));
        }

        self.by_comp[hc as usize].push(t);
        self.lead.push((hc, hm));
        self.basis.push(h);
    }

    fn next_index(&self) -> usize {
        self.basis.len()
    }

    fn lcm_degree_with(&self, g: usize, hm: Monomial, hc: u32) -> i64 {
        self.lead[g].1.lcm(&hm).deg() as i64 + self.twists[hc as usize]
    }

    /// Normal form against the current basis. In Schreyer mode the
    /// reduction stops as soon as the lead crosses into the lower block:
    /// the element is then a syzygy and its cofactor tail stays raw.
    pub fn normal_form(&mut self, mut v: MVec) -> MVec {
        let fp = self.fp;
        let split = self.split;
        let mut out: Vec<MTerm> = Vec::new();
        'outer: while let Some(&lt) = v.terms.first() {
            if self.skip_lower_pairs && lt.comp >= split {
                out.extend_from_slice(&v.terms);
                break;
            }
            for &gi in &self.by_comp[lt.comp as usize] {
                let (_, gm) = self.lead[gi];
                if gm.divides(&lt.m) {
                    let q = gm.quotient_into(&lt.m);
                    let g = &self.basis[gi];
                    let factor = fp.mul(lt.c, fp.inv(g.lead().unwrap().c));
                    v = v.sub_mul(fp, g, &q, factor, split);
                    self.reductions += 1;
                    continue 'outer;
                }
            }
            out.push(lt);
            v.terms.remove(0);
        }
        MVec { terms: out }
    }

    fn spoly(&self, i: usize, j: usize) -> MVec {
        let fp = self.fp;
        let (_, mi) = self.lead[i];
        let (_, mj) = self.lead[j];
        let lcm = mi.lcm(&mj);
        let qi = mi.quotient_into(&lcm);
        let qj = mj.quotient_into(&lcm);
        let gi = &self.basis[i];
        let gj = &self.basis[j];
        let ci = gi.lead().unwrap().c;
        let cj = gj.lead().unwrap().c;
        // (1/ci) qi gi - (1/cj) qj gj
        let a = gi.scale(fp, fp.inv(ci));
        let mut lifted = MVec {
            terms: a
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp,
                    m: t.m.mul(&qi),
                    c: t.c,
                })
                .collect(),
        };
        lifted = lifted.sub_mul(fp, &gj.scale(fp, fp.inv(cj)), &qj, 1, self.split);
        lifted
    }

    /// Process all inputs and pairs of internal degree <= cap.
    pub fn advance_to(&mut self, cap: i64) {
        loop {
            let next_input = self.pending.get(self.next_pending).map(|(d, _)| *d);
            let next_pair = self.pairs.peek().map(|r| r.0.degree);
            let next = match (next_input, next_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if next > cap {
                break;
            }
            // inputs first at equal degree
            if next_input == Some(next) {
                let v = self.pending[self.next_pending].1.clone();
                self.next_pending += 1;
                let r = self.normal_form(v);
                if !r.is_zero() {
                    let r = r.monic(self.fp);
                    self.update(r);
                }
                continue;
            }
            let Reverse(p) = self.pairs.pop().unwrap();
            let s = self.spoly(p.i, p.j);
            let r = self.normal_form(s);
            if !r.is_zero() {
                let r = r.monic(self.fp);
                self.update(r);
            }
            if std::env::var_os("SURFD10_GB_TRACE").is_some() && self.basis.len() % 50 == 0 {
                eprintln!(
                    "gb trace: degree {} basis {} pairs {} reductions {}",
                    next,
                    self.basis.len(),
                    self.pairs.len(),
                    self.reductions
                );
            }
        }
        self.done_through = self.done_through.max(cap);
    }

    pub fn run_to_completion(&mut self) {
        self.advance_to(i64::MAX - 1);
    }

    /// Install the pending inputs directly, skipping reduction and pair
    /// generation. Only sound when the inputs are already a Groebner basis;
    /// turns the engine into a plain normal-form reducer.
    pub fn install_only(&mut self) {
        while self.next_pending < self.pending.len() {
            let v = self.pending[self.next_pending].1.clone();
            self.next_pending += 1;
            let l = *v.lead().unwrap();
            self.by_comp[l.comp as usize].push(self.basis.len());
            self.lead.push((l.comp, l.m));
            self.basis.push(v.monic(self.fp));
        }
        self.pairs.clear();
    }

    pub fn is_complete(&self) -> bool {
        self.next_pending >= self.pending.len() && self.pairs.is_empty()
    }

    /// Inter-reduced, monic, canonically sorted basis. Only call after the
    /// run is complete (or accept a basis valid through the current cap).
    pub fn reduced_basis(&mut self) -> Vec<MVec> {
        let fp = self.fp;
        let split = self.split;
        // drop elements whose lead is divisible by another lead
        let n = self.basis.len();
        let mut alive = vec![true; n];
        for i in 0..n {
            if !alive[i] {
                continue;
            }
            for j in 0..n {
                if i == j || !alive[j] {
                    continue;
                }
                let (ci, mi) = self.lead[i];
                let (cj, mj) = self.lead[j];
                if ci == cj && mj.divides(&mi) && (mj != mi || j < i) {
                    alive[i] = false;
                    break;
                }
            }
        }
        let kept: Vec<MVec> = (0..n)
            .filter(|&i| alive[i])
            .map(|i| self.basis[i].clone())
            .collect();
        // tail-reduce each against the others; surviving leads are pairwise
        // indivisible, so the lead term always passes through untouched
        let mut out: Vec<MVec> = Vec::with_capacity(kept.len());
        for i in 0..kept.len() {
            let mut v = kept[i].clone();
            let mut acc: Vec<MTerm> = Vec::new();
            'terms: while let Some(&lt) = v.terms.first() {
                for (j, g) in kept.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let gl = g.lead().unwrap();
                    if gl.comp == lt.comp && gl.m.divides(&lt.m) {
                        let q = gl.m.quotient_into(&lt.m);
                        let factor = fp.mul(lt.c, fp.inv(gl.c));
                        v = v.sub_mul(fp, g, &q, factor, split);
                        continue 'terms;
                    }
                }
                acc.push(lt);
                v.terms.remove(0);
            }
            out.push(MVec { terms: acc }.monic(fp));
        }
        out.sort_by(|a, b| {
            let la = a.lead().unwrap();
            let lb = b.lead().unwrap();
            term_cmp(split, (la.comp, la.m), (lb.comp, lb.m))
        });
        out
    }
}

/// Reduced Groebner basis of a homogeneous submodule of ⊕R(-t_i) under the
/// term-over-position order, optionally truncated at internal degree `cap`.
pub fn module_gb(fp: Fp, twists: &[i64], gens: Vec<MVec>, cap: Option<i64>) -> Vec<MVec> {
    let split = twists.len() as u32;
    let mut eng = GbEngine::new(fp, twists.to_vec(), split, gens);
    match cap {
        Some(d) => eng.advance_to(d),
        None => eng.run_to_completion(),
    }
    eng.reduced_basis()
}

impl GbEngine {
    /// Append an input whose degree is at least every pending degree; used
    /// by the incremental minimal-generator filter.
    pub fn push_input(&mut self, v: MVec) {
        let v = v.normalize(self.fp, self.split);
        if v.is_zero() {
            return;
        }
        let d = v.degree(&self.twists).unwrap();
        if let Some(&(last, _)) = self.pending.last() {
            assert!(d >= last, "inputs must arrive in ascending degree");
        }
        self.pending.push((d, v));
    }
}

/// A minimal generating subset of the given homogeneous vectors: processed
/// by ascending degree, a vector is kept iff it is not in the submodule
/// generated by the vectors kept so far (graded Nakayama).
pub fn minimal_generators(fp: Fp, twists: &[i64], vectors: &[MVec]) -> Vec<MVec> {
    let split = twists.len() as u32;
    let mut sorted: Vec<(i64, usize)> = vectors
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (v.degree(twists).unwrap(), k))
        .collect();
    sorted.sort();
    let mut eng = GbEngine::new(fp, twists.to_vec(), split, Vec::new());
    let mut kept = Vec::new();
    for (d, k) in sorted {
        eng.advance_to(d);
        let v = vectors[k].clone().normalize(fp, split);
        if !eng.normal_form(v.clone()).is_zero() {
            kept.push(v.clone());
            eng.push_input(v);
            eng.advance_to(d);
        }
    }
    kept
}

/// Generators of the syzygy module of the given homogeneous vectors
/// v_1..v_m in ⊕R(-t_i): the result lives in ⊕R(-deg v_j).
///
/// Computed with one elimination-order run on the extended module
/// (ambient block ≫ tag block); the tag-block elements of the reduced basis
/// form a Groebner basis of Syz(v_1..v_m).
pub fn syzygies(fp: Fp, ambient_twists: &[i64], vectors: &[MVec]) -> Vec<MVec> {
    let n = ambient_twists.len() as u32;
    let mut twists = ambient_twists.to_vec();
    let mut ext: Vec<MVec> = Vec::with_capacity(vectors.len());
    for (k, v) in vectors.iter().enumerate() {
        let d = v
            .degree(ambient_twists)
            .expect("syzygies of the zero vector are the whole module; exclude zero generators");
        assert!(v.is_homogeneous(ambient_twists));
        twists.push(d);
        let mut w = v.clone();
        w.terms.push(MTerm {
            comp: n + k as u32,
            m: Monomial::ONE,
            c: 1,
        });
        ext.push(w);
    }
    let mut eng = GbEngine::with_mode(fp, twists, n, ext, true);
    eng.run_to_completion();
    let raw: Vec<MVec> = eng
        .basis()
        .iter()
        .filter(|g| g.lead().map_or(false, |t| t.comp >= n))
        .map(|g| {
            debug_assert!(g.terms.iter().all(|t| t.comp >= n));
            MVec {
                terms: g
                    .terms
                    .iter()
                    .map(|t| MTerm {
                        comp: t.comp - n,
                        m: t.m,
                        c: t.c,
                    })
                    .collect(),
            }
        })
        .collect();
    let tag_twists: Vec<i64> = vectors
        .iter()
        .map(|v| v.degree(ambient_twists).unwrap())
        .collect();
    minimal_generators(fp, &tag_twists, &raw)
}
