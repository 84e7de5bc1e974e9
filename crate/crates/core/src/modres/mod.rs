//! Graded free modules, module maps, syzygies, minimal free resolutions and
//! Betti tables.
//!
//! A map ⊕R(-s_j) -> ⊕R(-t_i) is a matrix of homogeneous polynomials with
//! entry (i,j) of degree s_j - t_i (or zero). Resolutions are computed by
//! iterated syzygies and then minimalized by cancelling unit entries.

pub mod hilbert;
pub mod presentation;

use crate::groebner::engine::syzygies;
use crate::groebner::linalg::Mat;
use crate::groebner::modvec::{MTerm, MVec};
use crate::ring::field::Fp;
use crate::ring::monomial::{dim_rd, Monomial};
use crate::ring::poly::Poly;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(twists: Vec<i64>) -> FreeModule {
        FreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Dimension of the degree-d graded piece.
    pub fn piece_dim(&self, d: i64) -> usize {
        self.twists.iter().map(|&t| dim_rd(d - t) as usize).sum()
    }

    /// Monomial basis of the degree-d piece as (component, monomial) pairs.
    pub fn piece_basis(&self, d: i64) -> Vec<(u32, Monomial)> {
        let mut out = Vec::new();
        for (k, &t) in self.twists.iter().enumerate() {
            if d - t < 0 {
                continue;
            }
            for m in Monomial::all_of_degree((d - t) as u32) {
                out.push((k as u32, m));
            }
        }
        out
    }

    pub fn dual(&self) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|&t| -t).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub fp: Fp,
    pub source: FreeModule,
    pub target: FreeModule,
    /// entries[row][col], row indexes the target, col the source
    pub entries: Vec<Vec<Poly>>,
}

impl ModuleMap {
    pub fn new(
        fp: Fp,
        source: FreeModule,
        target: FreeModule,
        entries: Vec<Vec<Poly>>,
    ) -> ModuleMap {
        assert_eq!(entries.len(), target.rank());
        for row in &entries {
            assert_eq!(row.len(), source.rank());
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    let (h, d) = e.is_homogeneous();
                    assert!(h, "map entries must be homogeneous");
                    assert_eq!(
                        d.unwrap() as i64,
                        source.twists[j] - target.twists[i],
                        "entry ({}, {}) has degree incompatible with the twists",
                        i,
                        j
                    );
                }
            }
        }
        ModuleMap {
            fp,
            source,
            target,
            entries,
        }
    }

    pub fn zero_map(fp: Fp, source: FreeModule, target: FreeModule) -> ModuleMap {
        let entries = vec![vec![Poly::zero(); source.rank()]; target.rank()];
        ModuleMap {
            fp,
            source,
            target,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .all(|row| row.iter().all(|e| e.is_zero()))
    }

    /// Column j as a vector in the target module.
    pub fn column(&self, j: usize) -> MVec {
        let mut terms = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for t in &row[j].terms {
                terms.push(MTerm {
                    comp: i as u32,
                    m: t.m,
                    c: t.c,
                });
            }
        }
        MVec { terms }.normalize(self.fp, self.target.rank() as u32)
    }

    pub fn columns(&self) -> Vec<MVec> {
        (0..self.source.rank()).map(|j| self.column(j)).collect()
    }

    /// Assemble a map with given target from column vectors; source twists
    /// are the column degrees.
    pub fn from_columns(fp: Fp, target: &FreeModule, cols: &[MVec]) -> ModuleMap {
        let twists: Vec<i64> = cols
            .iter()
            .map(|c| {
                c.degree(&target.twists)
                    .expect("zero column in map assembly")
            })
            .collect();
        let source = FreeModule::new(twists);
        let mut entries = vec![vec![Poly::zero(); source.rank()]; target.rank()];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..target.rank() {
                entries[i][j] = col.component(i as u32);
            }
        }
        ModuleMap::new(fp, source, target.clone(), entries)
    }

    pub fn transpose(&self) -> ModuleMap {
        let mut entries = vec![vec![Poly::zero(); self.target.rank()]; self.source.rank()];
        for i in 0..self.target.rank() {
            for j in 0..self.source.rank() {
                entries[j][i] = self.entries[i][j].clone();
            }
        }
        ModuleMap {
            fp: self.fp,
            source: self.target.dual(),
            target: self.source.dual(),
            entries,
        }
    }

    /// other ∘ self = zero check (self: F2 -> F1, other: F1 -> F0).
    pub fn composes_to_zero_with(&self, other: &ModuleMap) -> bool {
        let fp = self.fp;
        for i in 0..other.target.rank() {
            for j in 0..self.source.rank() {
                let mut acc = Poly::zero();
                for k in 0..self.target.rank() {
                    acc = acc.add(fp, &other.entries[i][k].mul(fp, &self.entries[k][j]));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of the degree-d piece of the map, rows/cols ordered by
    /// `piece_basis` of target and source.
    pub fn graded_matrix(&self, d: i64) -> Mat {
        let fp = self.fp;
        let src = self.source.piece_basis(d);
        let tgt = self.target.piece_basis(d);
        let index: BTreeMap<(u32, Monomial), usize> =
            tgt.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut mat = Mat::zero(tgt.len(), src.len());
        for (cidx, &(j, m)) in src.iter().enumerate() {
            // image of m * e_j
            for i in 0..self.target.rank() {
                let e = &self.entries[i][j as usize];
                for t in &e.terms {
                    let mm = t.m.mul(&m);
                    let ridx = index[&(i as u32, mm)];
                    mat.set(ridx, cidx, fp.add(mat.at(ridx, cidx), t.c));
                }
            }
        }
        mat
    }

    pub fn graded_rank(&self, d: i64) -> usize {
        self.graded_matrix(d).rank(self.fp)
    }

    pub fn has_unit_entry(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.degree() == Some(0) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Kernel generators of a degree-compatible map, as a map onto the kernel:
/// the returned map's image equals ker(phi), its target is phi's source.
pub fn syzygy_map(phi: &ModuleMap) -> ModuleMap {
    let fp = phi.fp;
    let cols: Vec<MVec> = phi.columns().into_iter().collect();
    // zero columns are syzygies e_j all by themselves; keep track
    let mut nonzero = Vec::new();
    let mut zero_cols = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if c.is_zero() {
            zero_cols.push(j);
        } else {
            nonzero.push((j, c.clone()));
        }
    }
    let vecs: Vec<MVec> = nonzero.iter().map(|(_, c)| c.clone()).collect();
    let syz = syzygies(fp, &phi.target.twists, &vecs);
    // re-embed into the full source (zero columns contribute unit syzygies)
    let mut out_cols: Vec<MVec> = Vec::new();
    for &j in &zero_cols {
        out_cols.push(MVec {
            terms: vec![MTerm {
                comp: j as u32,
                m: Monomial::ONE,
                c: 1,
            }],
        });
    }
    for s in syz {
        let mut v = MVec::zero();
        for t in &s.terms {
            let (orig, _) = nonzero[t.comp as usize];
            v.terms.push(MTerm {
                comp: orig as u32,
                m: t.m,
                c: t.c,
            });
        }
        out_cols.push(v.normalize(fp, phi.source.rank() as u32));
    }
    if out_cols.is_empty() {
        return ModuleMap::zero_map(fp, FreeModule::new(vec![]), phi.source.clone());
    }
    ModuleMap::from_columns(fp, &phi.source, &out_cols)
}

#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub fp: Fp,
    /// maps[k]: F_{k+1} -> F_k; maps[0] is a presentation of the resolved module
    pub maps: Vec<ModuleMap>,
}

impl FreeResolution {
    pub fn module(&self, k: usize) -> &FreeModule {
        if k == 0 {
            &self.maps[0].target
        } else {
            &self.maps[k - 1].source
        }
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn differentials_compose_to_zero(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[1].composes_to_zero_with(&w[0]))
    }

    /// Rank-count exactness at every interior step, for all degrees up to
    /// `max_degree`: dim ker(d_k)_n = dim im(d_{k+1})_n.
    pub fn is_exact_up_to(&self, max_degree: i64) -> bool {
        for k in 0..self.maps.len() - 1 {
            let d_k = &self.maps[k];
            let d_k1 = &self.maps[k + 1];
            let min_tw = d_k.source.twists.iter().copied().min().unwrap_or(0);
            for n in min_tw..=max_degree {
                let dim_src = d_k.source.piece_dim(n);
                let rk = d_k.graded_rank(n);
                let rk1 = d_k1.graded_rank(n);
                if dim_src - rk != rk1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Resolve the module presented by `d1` (or the submodule generated by its
/// columns) by iterated syzygies; stops when the kernel is zero or after
/// `max_length` maps.
pub fn resolve_from(d1: ModuleMap, max_length: usize) -> FreeResolution {
    let fp = d1.fp;
    let mut maps = vec![d1];
    while maps.len() < max_length {
        let last = maps.last().unwrap();
        if last.source.rank() == 0 {
            break;
        }
        let next = syzygy_map(last);
        if next.source.rank() == 0 {
            break;
        }
        maps.push(next);
    }
    FreeResolution { fp, maps }
}

/// Free resolution of a homogeneous ideal as a module: F0 surjects onto I
/// via the generator row. Returns the resolution together with the
/// (possibly non-minimal) generator row aligned with F0.
pub fn resolve_ideal(
    ideal: &crate::groebner::Ideal,
    max_length: usize,
) -> (Vec<Poly>, FreeResolution) {
    let fp = ideal.fp;
    let gens: Vec<Poly> = ideal.gens().to_vec();
    assert!(!gens.is_empty(), "resolving the zero ideal");
    let cols: Vec<MVec> = gens.iter().map(|g| MVec::from_poly(0, g)).collect();
    let syz = syzygies(fp, &[0], &cols);
    let f0 = FreeModule::new(gens.iter().map(|g| g.degree().unwrap() as i64).collect());
    let d1 = if syz.is_empty() {
        ModuleMap::zero_map(fp, FreeModule::new(vec![]), f0)
    } else {
        ModuleMap::from_columns(fp, &f0, &syz)
    };
    let res = resolve_from(d1, max_length);
    (gens, res)
}

/// Cancel all unit entries of the complex, keeping the embedding row
/// `gens` (aligned with F0) in sync. Yields the minimal resolution.
pub fn minimalize(mut gens: Vec<Poly>, res: FreeResolution) -> (Vec<Poly>, FreeResolution) {
    let fp = res.fp;
    let mut maps = res.maps;
    'scan: loop {
        for k in 0..maps.len() {
            if let Some((r, c)) = maps[k].has_unit_entry() {
                cancel_unit(fp, &mut gens, &mut maps, k, r, c);
                continue 'scan;
            }
        }
        break;
    }
    // drop trailing zero maps
    while maps.len() > 1 {
        let last = maps.last().unwrap();
        if last.source.rank() == 0 {
            maps.pop();
        } else {
            break;
        }
    }
    (gens, FreeResolution { fp, maps })
}

fn cancel_unit(
    fp: Fp,
    gens: &mut Vec<Poly>,
    maps: &mut Vec<ModuleMap>,
    k: usize,
    r: usize,
    c: usize,
) {
    let u = maps[k].entries[r][c].lt().unwrap().c;
    let uinv = fp.inv(u);

    // clear row r by column operations: col_j -= (d[r][j]/u) col_c
    let ncols = maps[k].source.rank();
    let nrows = maps[k].target.rank();
    let mut lambdas: Vec<Poly> = Vec::with_capacity(ncols);
    for j in 0..ncols {
        lambdas.push(maps[k].entries[r][j].scale(fp, uinv));
    }
    for j in 0..ncols {
        if j == c || lambdas[j].is_zero() {
            continue;
        }
        for i in 0..nrows {
            let sub = lambdas[j].mul(fp, &maps[k].entries[i][c]);
            maps[k].entries[i][j] = maps[k].entries[i][j].sub(fp, &sub);
        }
    }
    // propagate the basis change to the next map: row_c += sum lambda_j row_j
    if k + 1 < maps.len() {
        let next_cols = maps[k + 1].source.rank();
        for j in 0..ncols {
            if j == c || lambdas[j].is_zero() {
                continue;
            }
            for col in 0..next_cols {
                let add = lambdas[j].mul(fp, &maps[k + 1].entries[j][col]);
                maps[k + 1].entries[c][col] = maps[k + 1].entries[c][col].add(fp, &add);
            }
        }
        for col in 0..next_cols {
            assert!(
                maps[k + 1].entries[c][col].is_zero(),
                "cancelled source row of the next differential must vanish"
            );
        }
    }
    // substitute e_r out of the previous map (or the generator row):
    // col_i -= (d[i][c]/u) col_r for the map out of F_k
    let col_c_entries: Vec<Poly> = (0..nrows)
        .map(|i| maps[k].entries[i][c].scale(fp, uinv))
        .collect();
    if k == 0 {
        let g_r = gens[r].clone();
        for (i, coef) in col_c_entries.iter().enumerate() {
            if i == r || coef.is_zero() {
                continue;
            }
            gens[i] = gens[i].sub(fp, &coef.mul(fp, &g_r));
        }
        // the cancelled generator is now redundant
        gens.remove(r);
        // sanity: redundancy means g_r was a combination of the others
    } else {
        let prev = k - 1;
        let prev_rows = maps[prev].target.rank();
        for i in 0..nrows {
            if i == r || col_c_entries[i].is_zero() {
                continue;
            }
            for row in 0..prev_rows {
                let sub = col_c_entries[i].mul(fp, &maps[prev].entries[row][r].clone());
                maps[prev].entries[row][i] = maps[prev].entries[row][i].sub(fp, &sub);
            }
        }
        // drop column r of the previous map
        for row in 0..prev_rows {
            maps[prev].entries[row].remove(r);
        }
        maps[prev].source.twists.remove(r);
    }

    // delete row r and column c of maps[k]
    maps[k].entries.remove(r);
    for row in maps[k].entries.iter_mut() {
        row.remove(c);
    }
    maps[k].target.twists.remove(r);
    maps[k].source.twists.remove(c);

    // delete row c of maps[k+1]
    if k + 1 < maps.len() {
        maps[k + 1].entries.remove(c);
        maps[k + 1].target.twists.remove(c);
    }
}

/// Betti table: (homological step, twist) -> rank.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_pairs(pairs: &[(usize, i64, usize)]) -> BettiTable {
        let mut entries = BTreeMap::new();
        for &(i, j, r) in pairs {
            if r > 0 {
                entries.insert((i, j), r);
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Sum over steps of (-1)^i * (number of step-i summands).
    pub fn alternating_rank_sum(&self) -> i64 {
        let mut acc = 0i64;
        for (&(i, _), &r) in &self.entries {
            acc += if i % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        acc
    }

    /// Signed generating polynomial sum_i (-1)^i beta_{i,j} t^j as coefficients.
    pub fn alternating_twist_polynomial(&self) -> Vec<i64> {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out = vec![0i64; (max_j + 1).max(1) as usize];
        for (&(i, j), &r) in &self.entries {
            out[j as usize] += if i % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        out
    }
}

/// Betti numbers of a minimal resolution (step 0 = the resolved module's
/// generators, read off F0).
pub fn betti(res: &FreeResolution) -> BettiTable {
    for m in &res.maps {
        assert!(
            m.has_unit_entry().is_none(),
            "betti of a non-minimal resolution"
        );
    }
    let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut add = |i: usize, tw: &Vec<i64>| {
        for &t in tw {
            *entries.entry((i, t)).or_insert(0) += 1;
        }
    };
    add(0, &res.maps[0].target.twists);
    for (k, m) in res.maps.iter().enumerate() {
        if m.source.rank() > 0 {
            add(k + 1, &m.source.twists);
        }
    }
    BettiTable { entries }
}

/// Independent route to the Betti numbers: Tor via the constant strands of
/// any (not necessarily minimal) resolution. `gens` must have positive
/// degrees (Tor_0 then needs no augmentation strand).
pub fn betti_via_tor(gens: &[Poly], res: &FreeResolution) -> BettiTable {
    assert!(gens.iter().all(|g| g.degree().map_or(false, |d| d > 0)));
    let fp = res.fp;
    let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let steps = res.maps.len() + 1;
    for i in 0..steps {
        let fi = res.module(i);
        let twset: std::collections::BTreeSet<i64> = fi.twists.iter().copied().collect();
        for &j in &twset {
            let dim = fi.twists.iter().filter(|&&t| t == j).count() as i64;
            let rank_in = if i < res.maps.len() {
                constant_strand_rank(fp, &res.maps[i], j) as i64
            } else {
                0
            };
            let rank_out = if i == 0 {
                0
            } else {
                constant_strand_rank(fp, &res.maps[i - 1], j) as i64
            };
            let b = dim - rank_in - rank_out;
            assert!(b >= 0, "tor strand bookkeeping went negative");
            if b > 0 {
                *entries.entry((i, j)).or_insert(0) += b as usize;
            }
        }
    }
    BettiTable { entries }
}

fn constant_strand_rank(fp: Fp, m: &ModuleMap, j: i64) -> usize {
    let src: Vec<usize> = (0..m.source.rank())
        .filter(|&k| m.source.twists[k] == j)
        .collect();
    let tgt: Vec<usize> = (0..m.target.rank())
        .filter(|&k| m.target.twists[k] == j)
        .collect();
    if src.is_empty() || tgt.is_empty() {
        return 0;
    }
    let mut mat = Mat::zero(tgt.len(), src.len());
    for (c, &jj) in src.iter().enumerate() {
        for (r, &ii) in tgt.iter().enumerate() {
            let e = &m.entries[ii][jj];
            if e.degree() == Some(0) {
                mat.set(r, c, e.lt().unwrap().c);
            }
        }
    }
    mat.rank(fp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::ring::parse::parse_poly;
    use crate::DEFAULT_PRIME;

    fn fp() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(fp(), s).unwrap()
    }

    fn row_map(gens: &[&str]) -> ModuleMap {
        let polys: Vec<Poly> = gens.iter().map(|s| p(s)).collect();
        ModuleMap::new(
            fp(),
            FreeModule::new(polys.iter().map(|g| g.degree().unwrap() as i64).collect()),
            FreeModule::new(vec![0]),
            vec![polys],
        )
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let phi = row_map(&["x0", "x1"]);
        let syz = syzygy_map(&phi);
        assert_eq!(syz.source.rank(), 1);
        assert_eq!(syz.source.twists, vec![2]);
        // the syzygy is (x1, -x0) up to sign/scale
        let col = syz.column(0);
        let a = col.component(0);
        let b = col.component(1);
        assert!(a
            .mul(fp(), &p("x0"))
            .add(fp(), &b.mul(fp(), &p("x1")))
            .is_zero());
        assert!(!a.is_zero() && !b.is_zero());
    }

    #[test]
    fn koszul_syzygies_of_three_variables() {
        let phi = row_map(&["x0", "x1", "x2"]);
        let syz = syzygy_map(&phi);
        assert_eq!(syz.source.rank(), 3);
        assert!(syz.composes_to_zero_with(&phi));
    }

    #[test]
    fn hilbert_burch_for_generic_linear_2x3() {
        // rows of the matrix generate the syzygies of its 2x2 minors
        let rows = [[p("x0"), p("x2"), p("x3")], [p("x1"), p("x3"), p("x4")]];
        let minors = [
            rows[0][1]
                .mul(fp(), &rows[1][2])
                .sub(fp(), &rows[0][2].mul(fp(), &rows[1][1])),
            rows[0][2]
                .mul(fp(), &rows[1][0])
                .sub(fp(), &rows[0][0].mul(fp(), &rows[1][2])),
            rows[0][0]
                .mul(fp(), &rows[1][1])
                .sub(fp(), &rows[0][1].mul(fp(), &rows[1][0])),
        ];
        let phi = ModuleMap::new(
            fp(),
            FreeModule::new(vec![2, 2, 2]),
            FreeModule::new(vec![0]),
            vec![minors.to_vec()],
        );
        let syz = syzygy_map(&phi);
        assert_eq!(syz.source.rank(), 2);
        assert_eq!(syz.source.twists, vec![3, 3]);
        // each returned column annihilates the minor vector
        assert!(syz.composes_to_zero_with(&phi));
        // kernel rank per graded piece matches a linear-algebra oracle
        for d in 2..=5i64 {
            let dim_src = phi.source.piece_dim(d);
            let rank_phi = phi.graded_rank(d);
            let expect_kernel = dim_src - rank_phi;
            assert_eq!(syz.graded_rank(d), expect_kernel, "degree {}", d);
        }
    }

    #[test]
    fn resolution_of_two_variable_ideal_is_koszul() {
        let i = Ideal::new(fp(), vec![p("x0"), p("x1")]);
        let (gens, res) = resolve_ideal(&i, 5);
        let (gens, res) = minimalize(gens, res);
        assert_eq!(gens.len(), 2);
        let b = betti(&res);
        assert_eq!(b.get(0, 1), 2);
        assert_eq!(b.get(1, 2), 1);
        assert_eq!(b.entries.len(), 2);
        assert!(res.differentials_compose_to_zero());
        assert!(res.is_exact_up_to(6));
    }

    #[test]
    fn resolution_of_cubic_scroll_is_hilbert_burch() {
        // 2x2 minors of a generic 2x3 linear matrix: 3 quadrics, 2 linear syzygies
        let m = [[p("x0"), p("x2"), p("x3")], [p("x1"), p("x3"), p("x4")]];
        let minors = vec![
            m[0][1]
                .mul(fp(), &m[1][2])
                .sub(fp(), &m[0][2].mul(fp(), &m[1][1])),
            m[0][2]
                .mul(fp(), &m[1][0])
                .sub(fp(), &m[0][0].mul(fp(), &m[1][2])),
            m[0][0]
                .mul(fp(), &m[1][1])
                .sub(fp(), &m[0][1].mul(fp(), &m[1][0])),
        ];
        let i = Ideal::new(fp(), minors);
        let (gens, res) = resolve_ideal(&i, 5);
        let (_, res) = minimalize(gens, res);
        let b = betti(&res);
        assert_eq!(b.get(0, 2), 3);
        assert_eq!(b.get(1, 3), 2);
        assert_eq!(b.entries.len(), 2);
        assert!(res.is_exact_up_to(8));
    }

    #[test]
    fn minimalize_cancels_padded_identity_block() {
        // pad the Koszul resolution of (x0, x1) with an identity summand:
        // F0' = F0 + R(-3) carrying the redundant generator x0*x1*x2 - g,
        // F1' = F1 + R(-3) recording the redundancy.
        let i = Ideal::new(fp(), vec![p("x0"), p("x1")]);
        let (gens, res) = resolve_ideal(&i, 5);
        let d1 = &res.maps[0];
        // redundant generator g = x1x2 * gens[0] and its witness column
        let g = gens[0].mul(fp(), &p("x1*x2"));
        let entries = vec![
            vec![d1.entries[0][0].clone(), p("x1*x2").neg(fp())],
            vec![d1.entries[1][0].clone(), Poly::zero()],
            vec![Poly::zero(), Poly::one()],
        ];
        let padded = ModuleMap::new(
            fp(),
            FreeModule::new(vec![d1.source.twists[0], 3]),
            FreeModule::new(vec![1, 1, 3]),
            entries,
        );
        let res2 = FreeResolution {
            fp: fp(),
            maps: vec![padded],
        };
        let mut gens2 = gens.clone();
        gens2.push(g);
        let (gens_min, min) = minimalize(gens2, res2);
        // after cancelling the unit, ranks drop by one on both sides
        assert_eq!(min.maps[0].target.rank(), 2);
        assert_eq!(min.maps[0].source.rank(), 1);
        assert_eq!(gens_min.len(), 2);
        let b = betti(&min);
        assert_eq!(b.get(0, 1), 2);
        assert_eq!(b.get(1, 2), 1);
    }

    #[test]
    fn already_minimal_resolution_is_unchanged() {
        let i = Ideal::new(fp(), vec![p("x0"), p("x1")]);
        let (gens, res) = resolve_ideal(&i, 5);
        let before: Vec<Vec<i64>> = res.maps.iter().map(|m| m.source.twists.clone()).collect();
        let (_, min) = minimalize(gens, res);
        let after: Vec<Vec<i64>> = min.maps.iter().map(|m| m.source.twists.clone()).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn tor_route_agrees_with_minimal_resolution() {
        let m = [[p("x0"), p("x2"), p("x3")], [p("x1"), p("x3"), p("x4")]];
        let minors = vec![
            m[0][1]
                .mul(fp(), &m[1][2])
                .sub(fp(), &m[0][2].mul(fp(), &m[1][1])),
            m[0][2]
                .mul(fp(), &m[1][0])
                .sub(fp(), &m[0][0].mul(fp(), &m[1][2])),
            m[0][0]
                .mul(fp(), &m[1][1])
                .sub(fp(), &m[0][1].mul(fp(), &m[1][0])),
            // redundant generator to force a non-minimal resolution
        ];
        let mut gens2 = minors.clone();
        gens2.push(
            minors[0]
                .mul(fp(), &p("x4"))
                .add(fp(), &minors[1].mul(fp(), &p("x2"))),
        );
        let i = Ideal::new(fp(), gens2);
        let (gens, res) = resolve_ideal(&i, 5);
        let tor = betti_via_tor(&gens, &res);
        let (_, min) = minimalize(gens.clone(), res);
        assert_eq!(tor, betti(&min));
    }
}
