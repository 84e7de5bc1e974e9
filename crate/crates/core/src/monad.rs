//! Beilinson-style presentations: the twisted differential modules
//! Omega^i(i), homomorphisms between them by exterior contraction, kernel
//! bundles of explicit surjections, Hom-space computation in degree zero,
//! and extraction of a saturated surface ideal from a cokernel presentation
//! 0 -> F -> G -> I_S(4) -> 0.
//!
//! Every sheaf here is carried by the graded module of twisted global
//! sections, realized as the kernel of an explicit map between free modules
//! (the "window"), together with generators and an abstract presentation.
//! The Koszul complex on x0..x4 provides both for the Omega^i(i).

use crate::groebner::linalg::Mat;
use crate::groebner::modvec::{MTerm, MVec};
use crate::groebner::{GradedPart, Ideal};
use crate::idealops::minimize_gens;
use crate::modres::presentation::Presentation;
use crate::modres::{syzygy_map, FreeModule, ModuleMap};
use crate::ring::field::Fp;
use crate::ring::monomial::Monomial;
use crate::ring::poly::Poly;
use crate::ring::rng::Rng;
use crate::{Error, Result, NVARS};

/// A sheaf on P^4 carried by its module of twisted global sections,
/// realized as ker(window) with chosen generators.
#[derive(Debug, Clone)]
pub struct SheafModule {
    pub fp: Fp,
    pub tag: String,
    pub sheaf_rank: i64,
    /// the section module is the kernel of this map
    pub window: ModuleMap,
    /// generators of ker(window), aligned with pres.gens
    pub gens: Vec<MVec>,
    pub pres: Presentation,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(out, cur, v + 1, n, k);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), 0, n, k);
    out
}

/// Koszul differential between exterior-basis free modules:
/// e_T -> sum_{t in T} sign(t, T) x_t e_{T minus t}, with source twists
/// `src_twist` and target twists `src_twist - 1`.
fn koszul_map(fp: Fp, k: usize, src_twist: i64) -> ModuleMap {
    let src_sets = subsets(NVARS, k);
    let tgt_sets = subsets(NVARS, k - 1);
    let source = FreeModule::new(vec![src_twist; src_sets.len()]);
    let target = FreeModule::new(vec![src_twist - 1; tgt_sets.len()]);
    let mut entries = vec![vec![Poly::zero(); src_sets.len()]; tgt_sets.len()];
    for (j, t_set) in src_sets.iter().enumerate() {
        for (pos, &t) in t_set.iter().enumerate() {
            let mut rest = t_set.clone();
            rest.remove(pos);
            let i = tgt_sets.iter().position(|s| *s == rest).unwrap();
            let sign_c = if pos % 2 == 0 { 1 } else { fp.modulus() - 1 };
            entries[i][j] = Poly::term(Monomial::var(t), sign_c);
        }
    }
    ModuleMap::new(fp, source, target, entries)
}

/// The section module of Omega^i(i): for 1 <= i <= 4 the kernel of the
/// Koszul map Lambda^i V x R -> Lambda^{i-1} V x R(1), generated in degree 1
/// by the Koszul images of Lambda^{i+1} V, with the next Koszul matrix as
/// relations. Omega^0(0) is the free module R.
pub fn omega_module(fp: Fp, i: usize) -> Result<SheafModule> {
    if i > 4 {
        return Err(Error::Precondition(format!("Omega^{} is out of range", i)));
    }
    if i == 0 {
        return Ok(line_bundle(fp, 0));
    }
    let window = koszul_map(fp, i, 0);
    let gen_map = koszul_map(fp, i + 1, 1);
    let gens = gen_map.columns();
    let rels = if i + 2 <= NVARS {
        koszul_map(fp, i + 2, 2)
    } else {
        ModuleMap::zero_map(fp, FreeModule::new(vec![]), gen_map.source.clone())
    };
    let pres = Presentation::new(rels);
    let binom = [1i64, 4, 6, 4, 1];
    Ok(SheafModule {
        fp,
        tag: format!("Omega^{}({})", i, i),
        sheaf_rank: binom[i],
        window,
        gens,
        pres,
    })
}

/// O(k), with generator in degree -k; the window is a zero map out of R(k).
pub fn line_bundle(fp: Fp, k: i64) -> SheafModule {
    let source = FreeModule::new(vec![-k]);
    let window = ModuleMap {
        fp,
        source: source.clone(),
        target: FreeModule::new(vec![]),
        entries: vec![],
    };
    let gens = vec![MVec {
        terms: vec![MTerm {
            comp: 0,
            m: Monomial::ONE,
            c: 1,
        }],
    }];
    SheafModule {
        fp,
        tag: if k == 0 {
            "O".to_string()
        } else {
            format!("O({})", k)
        },
        sheaf_rank: 1,
        window,
        gens,
        pres: Presentation::free_module(fp, vec![-k]),
    }
}

/// Direct sum, blocking windows, generators and presentations.
pub fn direct_sum(parts: &[SheafModule]) -> SheafModule {
    assert!(!parts.is_empty());
    let fp = parts[0].fp;
    let mut win_src = Vec::new();
    let mut win_tgt = Vec::new();
    for p in parts {
        win_src.extend(p.window.source.twists.iter().copied());
        win_tgt.extend(p.window.target.twists.iter().copied());
    }
    let mut entries = vec![vec![Poly::zero(); win_src.len()]; win_tgt.len()];
    let mut gens = Vec::new();
    let mut pres_gens = Vec::new();
    let mut pres_rel_cols: Vec<MVec> = Vec::new();
    let (mut so, mut to, mut go) = (0usize, 0usize, 0u32);
    for p in parts {
        for (i, row) in p.window.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                entries[to + i][so + j] = e.clone();
            }
        }
        for g in &p.gens {
            gens.push(g.shift_components(so as u32));
        }
        pres_gens.extend(p.pres.gens().twists.iter().copied());
        for col in p.pres.rels.columns() {
            pres_rel_cols.push(col.shift_components(go));
        }
        so += p.window.source.rank();
        to += p.window.target.rank();
        go += p.pres.gens().rank() as u32;
    }
    let window = ModuleMap::new(
        fp,
        FreeModule::new(win_src),
        FreeModule::new(win_tgt),
        entries,
    );
    let gens_mod = FreeModule::new(pres_gens);
    let rels = if pres_rel_cols.is_empty() {
        ModuleMap::zero_map(fp, FreeModule::new(vec![]), gens_mod)
    } else {
        ModuleMap::from_columns(fp, &gens_mod, &pres_rel_cols)
    };
    SheafModule {
        fp,
        tag: parts
            .iter()
            .map(|p| p.tag.clone())
            .collect::<Vec<_>>()
            .join(" + "),
        sheaf_rank: parts.iter().map(|p| p.sheaf_rank).sum(),
        window,
        gens,
        pres: Presentation::new(rels),
    }
}

/// Kernel bundle of a (pointwise surjective) map between sums of line
/// bundles; generators and relations by syzygy computation.
pub fn kernel_bundle(psi: &ModuleMap, tag: &str) -> SheafModule {
    let fp = psi.fp;
    let gen_map = syzygy_map(psi);
    let gens = gen_map.columns();
    let rel_map = syzygy_map(&gen_map);
    SheafModule {
        fp,
        tag: tag.to_string(),
        sheaf_rank: psi.source.rank() as i64 - psi.target.rank() as i64,
        window: psi.clone(),
        gens,
        pres: Presentation::new(rel_map),
    }
}

/// G = ker(nO + mO(1) --(quadrics | linears)--> O(2)). Errors when the
/// entries have a common zero (psi would not be surjective).
pub fn kernel_bundle_g(fp: Fp, quadrics: &[Poly], linears: &[Poly]) -> Result<SheafModule> {
    for q in quadrics {
        if q.degree() != Some(2) {
            return Err(Error::Precondition(
                "kernel_bundle_g expects quadrics".into(),
            ));
        }
    }
    for l in linears {
        if l.degree() != Some(1) {
            return Err(Error::Precondition(
                "kernel_bundle_g expects linear forms".into(),
            ));
        }
    }
    let mut all = quadrics.to_vec();
    all.extend_from_slice(linears);
    let (dim, _) = crate::idealops::dimension_and_degree(&Ideal::new(fp, all));
    if dim >= 0 {
        return Err(Error::Precondition(
            "the entries of psi have a common zero; the kernel is not a bundle".into(),
        ));
    }
    let n = quadrics.len();
    let m = linears.len();
    let source = FreeModule::new(vec![0i64; n].into_iter().chain(vec![-1i64; m]).collect());
    let target = FreeModule::new(vec![-2]);
    let mut row = Vec::new();
    row.extend(quadrics.iter().cloned());
    row.extend(linears.iter().cloned());
    let psi = ModuleMap::new(fp, source, target, vec![row]);
    Ok(kernel_bundle(
        &psi,
        &format!("ker({}O + {}O(1) -> O(2))", n, m),
    ))
}

/// G = ker(O + 6O(1) --psi--> 2O(2)): `quadrics` is the first column,
/// `lin` the 2x6 linear part. Errors when psi drops rank somewhere.
pub fn kernel_bundle_two_rows(
    fp: Fp,
    quadrics: [Poly; 2],
    lin: &[[Poly; 6]; 2],
) -> Result<SheafModule> {
    let mut cols: Vec<[Poly; 2]> = vec![[quadrics[0].clone(), quadrics[1].clone()]];
    for j in 0..6 {
        cols.push([lin[0][j].clone(), lin[1][j].clone()]);
    }
    let mut minors = Vec::new();
    for a in 0..cols.len() {
        for b in (a + 1)..cols.len() {
            let m = cols[a][0]
                .mul(fp, &cols[b][1])
                .sub(fp, &cols[a][1].mul(fp, &cols[b][0]));
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    let (dim, _) = crate::idealops::dimension_and_degree(&Ideal::new(fp, minors));
    if dim >= 0 {
        return Err(Error::Precondition(
            "psi drops rank somewhere; kernel is not a bundle".into(),
        ));
    }
    let source = FreeModule::new(vec![0, -1, -1, -1, -1, -1, -1]);
    let target = FreeModule::new(vec![-2, -2]);
    let mut entries = vec![vec![Poly::zero(); 7]; 2];
    for r in 0..2 {
        entries[r][0] = quadrics[r].clone();
        for j in 0..6 {
            entries[r][j + 1] = lin[r][j].clone();
        }
    }
    let psi = ModuleMap::new(fp, source, target, entries);
    Ok(kernel_bundle(&psi, "ker(O + 6O(1) -> 2O(2))"))
}

/// Basis of the degree-d piece of the section module, as coordinate vectors
/// over window.source.piece_basis(d).
pub fn kernel_piece_basis(sm: &SheafModule, d: i64) -> Vec<Vec<u64>> {
    let fp = sm.fp;
    if sm.window.target.rank() == 0 {
        let n = sm.window.source.piece_dim(d);
        return (0..n)
            .map(|i| {
                let mut v = vec![0u64; n];
                v[i] = 1;
                v
            })
            .collect();
    }
    sm.window.graded_matrix(d).kernel_basis(fp)
}

/// A degree-0 homomorphism between section modules, stored as the image
/// vector (inside G's window source) of each generator of F.
#[derive(Debug, Clone)]
pub struct HomElement {
    pub images: Vec<MVec>,
}

/// Basis of Hom(F, G) in degree zero: unknowns are kernel-piece coordinates
/// per generator of F; the relations of F impose linear conditions inside
/// G's ambient free module.
pub fn hom_space(f: &SheafModule, g: &SheafModule) -> Vec<HomElement> {
    let fp = f.fp;
    let gen_twists = f.pres.gens().twists.clone();
    let mut kernel_bases: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut offsets = vec![0usize];
    for &t in &gen_twists {
        let b = kernel_piece_basis(g, t);
        offsets.push(offsets.last().unwrap() + b.len());
        kernel_bases.push(b);
    }
    let total_unknowns = *offsets.last().unwrap();
    if total_unknowns == 0 {
        return Vec::new();
    }
    let rels = &f.pres.rels;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for col in 0..rels.source.rank() {
        let e = rels.source.twists[col];
        let amb_basis = g.window.source.piece_basis(e);
        let amb_index: std::collections::BTreeMap<(u32, Monomial), usize> =
            amb_basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut cond = vec![vec![0u64; total_unknowns]; amb_basis.len()];
        for (k, &tk) in gen_twists.iter().enumerate() {
            let rho_k = &rels.entries[k][col];
            if rho_k.is_zero() {
                continue;
            }
            let tgt_basis = g.window.source.piece_basis(tk);
            for (bidx, kv) in kernel_bases[k].iter().enumerate() {
                let unknown = offsets[k] + bidx;
                for (ci, &coef) in kv.iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let (comp, mono) = tgt_basis[ci];
                    for t in &rho_k.terms {
                        let row = amb_index[&(comp, mono.mul(&t.m))];
                        let add = fp.mul(coef, t.c);
                        cond[row][unknown] = fp.add(cond[row][unknown], add);
                    }
                }
            }
        }
        rows.extend(cond);
    }
    let mut mat = Mat::zero(rows.len().max(1), total_unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            mat.set(r, c, v);
        }
    }
    let kernel = mat.kernel_basis(fp);
    kernel
        .into_iter()
        .map(|sol| {
            let images = (0..gen_twists.len())
                .map(|k| {
                    let tgt_basis = g.window.source.piece_basis(gen_twists[k]);
                    let mut terms = Vec::new();
                    for (bidx, kv) in kernel_bases[k].iter().enumerate() {
                        let c = sol[offsets[k] + bidx];
                        if c == 0 {
                            continue;
                        }
                        for (ci, &coef) in kv.iter().enumerate() {
                            if coef != 0 {
                                let (comp, mono) = tgt_basis[ci];
                                terms.push(MTerm {
                                    comp,
                                    m: mono,
                                    c: fp.mul(c, coef),
                                });
                            }
                        }
                    }
                    MVec { terms }.normalize(fp, g.window.source.rank() as u32)
                })
                .collect();
            HomElement { images }
        })
        .collect()
}

/// Seeded random combination of a Hom basis.
pub fn random_hom(fp: Fp, basis: &[HomElement], rng: &mut Rng) -> HomElement {
    let n_gens = basis.first().map(|h| h.images.len()).unwrap_or(0);
    let split = u32::MAX;
    let mut images = vec![MVec::zero(); n_gens];
    for h in basis {
        let c = rng.field_elem(fp);
        if c == 0 {
            continue;
        }
        for (k, img) in h.images.iter().enumerate() {
            // images[k] += c * img
            images[k] = images[k].sub_mul(fp, img, &Monomial::ONE, fp.neg(c), split);
        }
    }
    HomElement { images }
}

/// Express a kernel-module element as a combination of the module's
/// generators, by linear algebra in its degree.
fn lift_to_generators(g: &SheafModule, v: &MVec) -> Option<MVec> {
    let fp = g.fp;
    let twists = &g.window.source.twists;
    let d = match v.degree(twists) {
        None => return Some(MVec::zero()),
        Some(d) => d,
    };
    let amb_basis = g.window.source.piece_basis(d);
    let amb_index: std::collections::BTreeMap<(u32, Monomial), usize> =
        amb_basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let gen_degrees: Vec<i64> = g.pres.gens().twists.clone();
    let mut cols: Vec<(u32, Monomial)> = Vec::new();
    for (k, &gd) in gen_degrees.iter().enumerate() {
        if d - gd < 0 {
            continue;
        }
        for m in Monomial::all_of_degree((d - gd) as u32) {
            cols.push((k as u32, m));
        }
    }
    let mut mat = Mat::zero(amb_basis.len(), cols.len() + 1);
    for (cidx, &(k, m)) in cols.iter().enumerate() {
        for t in &g.gens[k as usize].terms {
            let row = amb_index[&(t.comp, t.m.mul(&m))];
            mat.set(row, cidx, fp.add(mat.at(row, cidx), t.c));
        }
    }
    for t in &v.terms {
        let row = amb_index[&(t.comp, t.m)];
        mat.set(row, cols.len(), t.c);
    }
    let pivots = mat.row_reduce(fp);
    if pivots.contains(&cols.len()) {
        return None; // inconsistent: v is not in the module
    }
    let mut terms = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        let val = mat.at(r, cols.len());
        if val != 0 {
            let (k, m) = cols[pc];
            terms.push(MTerm { comp: k, m, c: val });
        }
    }
    Some(MVec { terms })
}

/// Extract the saturated ideal I with cokernel(phi) ~ I(4) from a monad
/// presentation 0 -> F -> G -> I_S(4) -> 0: present the cokernel on G's
/// generators, minimize, and read the embedding into R(4) off the unique
/// degree-4 syzygy of the transposed presentation. Wrong-rank input comes
/// back as an error (caller reseeds).
pub fn ideal_from_monad(f: &SheafModule, g: &SheafModule, phi: &HomElement) -> Result<Ideal> {
    let fp = f.fp;
    let gens_mod = g.pres.gens().clone();
    let mut rel_cols: Vec<MVec> = g.pres.rels.columns();
    for img in &phi.images {
        let lifted = lift_to_generators(g, img)
            .ok_or_else(|| Error::Precondition("phi image does not lie in G".into()))?;
        if !lifted.is_zero() {
            rel_cols.push(lifted);
        }
    }
    let rels = ModuleMap::from_columns(fp, &gens_mod, &rel_cols);
    let q = Presentation::new(rels).minimized();
    if q.gens().rank() == 0 {
        return Err(Error::Precondition(
            "monad cokernel collapsed to zero".into(),
        ));
    }
    let ker = syzygy_map(&q.rels.transpose());
    let embed_cols: Vec<usize> = (0..ker.source.rank())
        .filter(|&j| ker.source.twists[j] == 4)
        .collect();
    if embed_cols.len() != 1 || ker.source.twists.iter().any(|&t| t < 4) {
        return Err(Error::Precondition(format!(
            "embedding into R(4) is not unique: kernel generator degrees {:?}",
            ker.source.twists
        )));
    }
    let col = ker.column(embed_cols[0]);
    let mut gens: Vec<Poly> = Vec::new();
    for k in 0..q.gens().rank() {
        let e = col.component(k as u32);
        if !e.is_zero() {
            gens.push(e);
        }
    }
    let ideal = Ideal::new(fp, minimize_gens(fp, gens));
    // Euler bookkeeping: dim Q_n = dim I_{n+4} pins both twist and rank
    for n in 0..=2i64 {
        let lhs = q.piece_dim(n) as i64;
        let rhs = ideal.graded_piece_dim(n + 4, GradedPart::Ideal);
        if lhs != rhs {
            return Err(Error::Precondition(format!(
                "cokernel and extracted ideal disagree in degree {}: {} vs {}",
                n, lhs, rhs
            )));
        }
    }
    Ok(ideal)
}

/// Serialized monad data for reproducibility: the window maps of F and G
/// (psi entries) and the drawn phi, generator by generator.
pub fn describe_monad(f: &SheafModule, g: &SheafModule, phi: &HomElement) -> String {
    let fp = f.fp;
    let mut s = String::new();
    s.push_str(&format!("monad p={}\n", fp.modulus()));
    s.push_str(&format!("F = {}\n", f.tag));
    s.push_str(&format!("G = {}\n", g.tag));
    for (r, row) in g.window.entries.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|e| crate::ring::parse::poly_to_string(fp, e))
            .collect();
        s.push_str(&format!("psi row {}: [{}]\n", r, cells.join(", ")));
    }
    for (k, img) in phi.images.iter().enumerate() {
        s.push_str(&format!("phi(gen {}):", k));
        if img.is_zero() {
            s.push_str(" 0\n");
            continue;
        }
        let rank = g.window.source.rank() as u32;
        for comp in 0..rank {
            let part = img.component(comp);
            if !part.is_zero() {
                s.push_str(&format!(
                    " e{}*({})",
                    comp,
                    crate::ring::parse::poly_to_string(fp, &part)
                ));
            }
        }
        s.push('\n');
    }
    s
}

/// Contraction Hom(Omega^i(i), Omega^j(j)) by the dual exterior monomial
/// indexed by the variable set `u`: the Koszul generator e_T maps to
/// sign * e_{T minus U} when U is contained in T, else to zero. Signs
/// contract the largest element of U first (Koszul convention); linear
/// combinations realize the general homomorphism.
pub fn contraction_hom(fp: Fp, i: usize, j: usize, u: &[usize]) -> Result<ModuleMap> {
    if !(j <= i && i <= 4) || u.len() != i - j {
        return Err(Error::Precondition(
            "contraction indices out of range".into(),
        ));
    }
    let src_sets = subsets(NVARS, i + 1);
    let tgt_sets = subsets(NVARS, j + 1);
    let source = FreeModule::new(vec![1; src_sets.len()]);
    let target = FreeModule::new(vec![1; tgt_sets.len()]);
    let mut entries = vec![vec![Poly::zero(); src_sets.len()]; tgt_sets.len()];
    for (col, t_set) in src_sets.iter().enumerate() {
        if !u.iter().all(|v| t_set.contains(v)) {
            continue;
        }
        let rest: Vec<usize> = t_set.iter().copied().filter(|v| !u.contains(v)).collect();
        let row = tgt_sets.iter().position(|s| *s == rest).unwrap();
        let mut sign = 0usize;
        let mut cur = t_set.clone();
        let mut uu = u.to_vec();
        uu.sort_unstable_by(|a, b| b.cmp(a));
        for &v in &uu {
            let pos = cur.iter().position(|&x| x == v).unwrap();
            sign += pos;
            cur.remove(pos);
        }
        let c = if sign % 2 == 0 { 1 } else { fp.modulus() - 1 };
        entries[row][col] = Poly::constant(c);
    }
    Ok(ModuleMap::new(fp, source, target, entries))
}

/// Necessary pointwise-surjectivity test for a matrix of linear forms
/// (Omega-sum differentials): every nontrivial row combination must span a
/// subspace of V of dimension >= i + 1. Exact for up to 3 rows (the bad
/// locus is checked to be empty as a subvariety of the combination space),
/// probabilistic sampling above that.
pub fn rank_condition(fp: Fp, rows: &[Vec<Poly>], i: usize) -> bool {
    let s = rows.len();
    assert!(s >= 1);
    let t = rows[0].len();
    let coeff = |r: usize, c: usize, v: usize| -> u64 {
        rows[r][c]
            .terms
            .iter()
            .find(|tm| tm.m == Monomial::var(v))
            .map(|tm| tm.c)
            .unwrap_or(0)
    };
    let span_dim = |combo: &[u64]| -> usize {
        let mut mat = Mat::zero(NVARS, t);
        for cc in 0..t {
            for v in 0..NVARS {
                let mut acc = 0u64;
                for (r, &cr) in combo.iter().enumerate() {
                    acc = fp.add(acc, fp.mul(cr, coeff(r, cc, v)));
                }
                mat.set(v, cc, acc);
            }
        }
        mat.rank(fp)
    };
    if s == 1 {
        return span_dim(&[1]) >= i + 1;
    }
    if s <= 3 {
        let combo_matrix: Vec<Vec<Poly>> = (0..NVARS)
            .map(|v| {
                (0..t)
                    .map(|c| {
                        let mut f = Poly::zero();
                        for r in 0..s {
                            f = f.add(fp, &Poly::var(r).scale(fp, coeff(r, c, v)));
                        }
                        f
                    })
                    .collect()
            })
            .collect();
        let mut minor_gens = all_minors(fp, &combo_matrix, i + 1);
        for v in s..NVARS {
            minor_gens.push(Poly::var(v));
        }
        let (dim, _) = crate::idealops::dimension_and_degree(&Ideal::new(fp, minor_gens));
        return dim < 0;
    }
    let mut rng = Rng::derive(0xc0de, "rank-condition");
    for _ in 0..64 {
        let combo: Vec<u64> = (0..s).map(|_| rng.field_elem(fp)).collect();
        if combo.iter().all(|&c| c == 0) {
            continue;
        }
        if span_dim(&combo) < i + 1 {
            return false;
        }
    }
    true
}

/// All k x k minors of a polynomial matrix.
pub fn all_minors(fp: Fp, m: &[Vec<Poly>], k: usize) -> Vec<Poly> {
    let row_sets = subsets(m.len(), k);
    let col_sets = subsets(m[0].len(), k);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let d = det_k(fp, m, rs, cs);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn det_k(fp: Fp, m: &[Vec<Poly>], rs: &[usize], cs: &[usize]) -> Poly {
    if rs.len() == 1 {
        return m[rs[0]][cs[0]].clone();
    }
    let mut acc = Poly::zero();
    for (j, &c) in cs.iter().enumerate() {
        let mut rest: Vec<usize> = cs.to_vec();
        rest.remove(j);
        let sub = det_k(fp, m, &rs[1..], &rest);
        let term = m[rs[0]][c].mul(fp, &sub);
        acc = if j % 2 == 0 {
            acc.add(fp, &term)
        } else {
            acc.sub(fp, &term)
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse::parse_poly;
    use crate::DEFAULT_PRIME;

    fn fp() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(fp(), s).unwrap()
    }

    pub(crate) fn random_quadric_in_plane_vars(fpv: Fp, rng: &mut Rng) -> Poly {
        let monos = ["x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"]
            .map(|s| parse_poly(fpv, s).unwrap());
        let mut acc = Poly::zero();
        for m in &monos {
            acc = acc.add(fpv, &m.scale(fpv, rng.field_elem(fpv)));
        }
        acc
    }

    #[test]
    fn koszul_differential_squares_to_zero() {
        for k in 2..=5 {
            let d1 = koszul_map(fp(), k, 0);
            let d2 = koszul_map(fp(), k - 1, -1);
            assert!(d1.composes_to_zero_with(&d2), "k = {}", k);
        }
    }

    #[test]
    fn omega_ranks_and_section_dimensions() {
        // Euler sequence: h^0(Omega^1(1+d)) = 5 dim R_d - dim R_{d+1}
        let o1 = omega_module(fp(), 1).unwrap();
        assert_eq!(o1.sheaf_rank, 4);
        let dims: Vec<usize> = (0..4).map(|d| kernel_piece_basis(&o1, d).len()).collect();
        assert_eq!(dims, vec![0, 10, 40, 105]);
        // Omega^4(4) = O(-1)
        let o4 = omega_module(fp(), 4).unwrap();
        assert_eq!(o4.sheaf_rank, 1);
        let dims: Vec<usize> = (0..4).map(|d| kernel_piece_basis(&o4, d).len()).collect();
        assert_eq!(dims, vec![0, 1, 5, 15]);
        let o0 = omega_module(fp(), 0).unwrap();
        assert_eq!(kernel_piece_basis(&o0, 2).len(), 15);
        assert!(omega_module(fp(), 5).is_err());
    }

    #[test]
    fn omega_presentation_matches_kernel_dimensions() {
        for i in 1..=3usize {
            let om = omega_module(fp(), i).unwrap();
            for d in 0..5i64 {
                assert_eq!(
                    om.pres.piece_dim(d),
                    kernel_piece_basis(&om, d).len(),
                    "Omega^{} degree {}",
                    i,
                    d
                );
            }
        }
    }

    #[test]
    fn hom_dimensions_match_exterior_powers() {
        let o3 = omega_module(fp(), 3).unwrap();
        let o2 = omega_module(fp(), 2).unwrap();
        let o1 = omega_module(fp(), 1).unwrap();
        assert_eq!(hom_space(&o3, &o1).len(), 10); // Lambda^2 V
        assert_eq!(hom_space(&o3, &o2).len(), 5); // Lambda^1 V
        assert_eq!(hom_space(&o2, &o2).len(), 1);
        let o = line_bundle(fp(), 0);
        let om1 = line_bundle(fp(), -1);
        assert_eq!(hom_space(&o, &o).len(), 1);
        assert_eq!(hom_space(&om1, &o).len(), 5); // linear forms
        assert_eq!(hom_space(&o3, &o).len(), 10); // h^0(Omega^1(2))
    }

    #[test]
    fn contraction_composition_is_wedge_up_to_sign() {
        let fpv = fp();
        for v in 0..5usize {
            for w in 0..5usize {
                if v == w {
                    continue;
                }
                let a = contraction_hom(fpv, 3, 2, &[v]).unwrap();
                let b = contraction_hom(fpv, 2, 1, &[w]).unwrap();
                let direct = contraction_hom(fpv, 3, 1, &[v.min(w), v.max(w)]).unwrap();
                let mut sign: Option<bool> = None;
                for i in 0..b.target.rank() {
                    for j in 0..a.source.rank() {
                        let mut acc = Poly::zero();
                        for k in 0..a.target.rank() {
                            acc = acc.add(fpv, &b.entries[i][k].mul(fpv, &a.entries[k][j]));
                        }
                        let d = &direct.entries[i][j];
                        assert_eq!(acc.is_zero(), d.is_zero());
                        if !acc.is_zero() {
                            let same = acc == *d;
                            assert!(same || acc == d.neg(fpv));
                            match sign {
                                None => sign = Some(same),
                                Some(s) => assert_eq!(s, same, "inconsistent sign"),
                            }
                        }
                    }
                }
                assert!(sign.is_some());
            }
        }
    }

    #[test]
    fn contraction_edge_cases() {
        let fpv = fp();
        let id = contraction_hom(fpv, 2, 2, &[]).unwrap();
        for (i, row) in id.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(*e, Poly::one());
                } else {
                    assert!(e.is_zero());
                }
            }
        }
        assert!(contraction_hom(fpv, 1, 2, &[]).is_err());
    }

    #[test]
    fn contractions_preserve_the_kernel_modules() {
        // the generator-level matrix really is a module map: images of the
        // presented generators satisfy the target relations, checked by the
        // graded kernels: iota maps ker(window_3) into ker(window_1)
        let fpv = fp();
        let o3 = omega_module(fpv, 3).unwrap();
        let o1 = omega_module(fpv, 1).unwrap();
        let iota = contraction_hom(fpv, 3, 1, &[0, 2]).unwrap();
        // generator images under iota, expanded in the ambient of o1
        for (j, g) in o3.gens.iter().enumerate() {
            let _ = g;
            let mut img = MVec::zero();
            for (row, e) in iota.entries.iter().enumerate() {
                if e[j].is_zero() {
                    continue;
                }
                let c = e[j].lt().unwrap().c;
                img = img.sub_mul(
                    fpv,
                    &o1.gens[row],
                    &Monomial::ONE,
                    fpv.neg(c),
                    o1.window.source.rank() as u32,
                );
            }
            // img is a combination of kernel generators, hence in the kernel
            if !img.is_zero() {
                let d = img.degree(&o1.window.source.twists).unwrap();
                let mat = o1.window.graded_matrix(d);
                let basis = o1.window.source.piece_basis(d);
                let index: std::collections::BTreeMap<(u32, Monomial), usize> =
                    basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                let mut vec = vec![0u64; basis.len()];
                for t in &img.terms {
                    vec[index[&(t.comp, t.m)]] = t.c;
                }
                for r in 0..mat.rows {
                    let mut acc = 0u64;
                    for c in 0..mat.cols {
                        acc = fpv.add(acc, fpv.mul(mat.at(r, c), vec[c]));
                    }
                    assert_eq!(acc, 0);
                }
            }
        }
    }

    #[test]
    fn rank_condition_on_small_matrices() {
        let fpv = fp();
        assert!(rank_condition(fpv, &[vec![p("x0"), p("x1")]], 1));
        assert!(!rank_condition(fpv, &[vec![p("x0"), p("x0")]], 1));
        // the matrix (u v 0 / 0 v w) of the three-secant families
        let rows = vec![
            vec![p("x0"), p("x1"), Poly::zero()],
            vec![Poly::zero(), p("x1"), p("x2")],
        ];
        assert!(rank_condition(fpv, &rows, 1));
        let bad = vec![
            vec![p("x0"), p("x1"), p("x2")],
            vec![p("x0"), p("x1"), p("x2")],
        ];
        assert!(!rank_condition(fpv, &bad, 2));
    }

    #[test]
    fn kernel_bundle_g_accepts_generic_and_rejects_common_zeros() {
        let fpv = fp();
        let mut rng = Rng::new(17);
        let qs: Vec<Poly> = (0..5)
            .map(|_| random_quadric_in_plane_vars(fpv, &mut rng))
            .collect();
        let g = kernel_bundle_g(fpv, &qs, &[p("x0"), p("x1")]).unwrap();
        assert_eq!(g.sheaf_rank, 6);
        // h^0(G) = 1: the Koszul syzygy of x0, x1
        assert_eq!(kernel_piece_basis(&g, 0).len(), 1);
        // all quadrics vanishing at [0:0:1:0:0] share a zero with x0, x1
        let bad: Vec<Poly> = vec![p("x3^2"), p("x3*x4"), p("x4^2"), p("x2*x3"), p("x2*x4")];
        assert!(kernel_bundle_g(fpv, &bad, &[p("x0"), p("x1")]).is_err());
    }

    #[test]
    fn direct_sums_block_correctly() {
        let fpv = fp();
        let s = direct_sum(&[omega_module(fpv, 1).unwrap(), line_bundle(fpv, 0)]);
        assert_eq!(s.sheaf_rank, 5);
        assert_eq!(kernel_piece_basis(&s, 1).len(), 10 + 5);
        assert_eq!(s.pres.gens().rank(), 10 + 1);
    }
}
