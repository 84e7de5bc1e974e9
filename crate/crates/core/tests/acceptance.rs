//! Acceptance suite: constructs the eight families once (shared across the
//! tests) and checks every target invariant at its stated tolerance,
//! printing one PASS/FAIL line per criterion.

use std::sync::{Arc, OnceLock};
use surfd10::cohomology::CohomologyEngine;
use surfd10::constructions::{construct_family, expected, link, ConstructionResult, RunConfig};
use surfd10::groebner::{GradedPart, Ideal};
use surfd10::idealops::{ideal_quotient, ideal_sum, saturate, zero_scheme_length};
use surfd10::modres::hilbert::hilbert_data;
use surfd10::monad::{direct_sum, hom_space, kernel_bundle_g, line_bundle, omega_module};
use surfd10::numerology::{
    classify_d10, double_point_k2, family_descriptor, hk_from_genus, lebarz_counts, Classification,
    FamilyId,
};
use surfd10::ring::rng::Rng;
use surfd10::{Fp, Poly, DEFAULT_PRIME};

fn config() -> RunConfig {
    RunConfig::default()
}

static CACHE: [OnceLock<Arc<ConstructionResult>>; 8] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

fn family(f: FamilyId) -> Arc<ConstructionResult> {
    let idx = FamilyId::ALL.iter().position(|&g| g == f).unwrap();
    CACHE[idx]
        .get_or_init(|| {
            let res = construct_family(f, &config())
                .unwrap_or_else(|e| panic!("family {} did not construct: {}", f.letter(), e));
            Arc::new(res)
        })
        .clone()
}

fn line(criterion: usize, name: &str, pass: bool) {
    println!(
        "ACCEPTANCE {:>2} [{}]: {}",
        criterion,
        name,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {} failed: {}", criterion, name);
}

#[test]
fn acceptance_1_betti_tables() {
    for f in FamilyId::ALL {
        let res = family(f);
        let ok = res.report.betti == expected::betti_table(f);
        line(1, &format!("betti table, family {}", f.letter()), ok);
    }
}

#[test]
fn acceptance_2_intro_table_invariants() {
    for f in FamilyId::ALL {
        let res = family(f);
        let d = family_descriptor(f);
        let ok = (
            res.report.degree,
            res.report.sectional_genus,
            res.report.chi,
        ) == (10, d.pi, d.chi);
        line(2, &format!("(d, pi, chi), family {}", f.letter()), ok);
        // the Hilbert polynomial itself is pinned: 5t^2 + (6 - pi)t + chi,
        // and its twisted values agree with Riemann-Roch on nH
        let hd = hilbert_data(&res.ideal);
        let hk = hk_from_genus(10, d.pi);
        let mut ok = true;
        for n in 0..=4i64 {
            let rr = surfd10::numerology::chi_twist(10 * n * n, hk * n, d.chi);
            ok &= hd.polynomial.eval(n) as i64 == rr;
        }
        ok &= hd.polynomial.eval(0) as i64 == d.chi;
        line(2, &format!("Hilbert polynomial vs Riemann-Roch, family {}", f.letter()), ok);
    }
}

#[test]
fn acceptance_3_cohomology_anchors() {
    for f in FamilyId::ALL {
        let res = family(f);
        let t = &res.report.cohomology;
        let d = family_descriptor(f);
        let mut ok = true;
        if d.pi == 9 {
            ok &= t.h(0, 3) == 0;
            ok &= t.h(1, 3) == d.chi + 1;
        } else {
            ok &= t.h(1, 3) == d.chi - 2;
        }
        for n in 2..=6 {
            ok &= t.h(2, n) == 0;
        }
        if f == FamilyId::H {
            // the resolution has exactly three quartic generators, so
            // h^0(I(4)) = 3 (Euler-forced; see the certification table)
            ok &= t.h(0, 4) == 3 && t.h(1, 4) == 1;
        }
        line(3, &format!("cohomology anchors, family {}", f.letter()), ok);
    }
}

#[test]
fn acceptance_4_rao_modules_of_d_and_e() {
    for f in [FamilyId::D, FamilyId::E] {
        let res = family(f);
        let hf: Vec<usize> = res.report.rao_hilbert.iter().map(|&(_, v)| v).collect();
        line(
            4,
            &format!("Rao Hilbert function (1,3,1), family {}", f.letter()),
            hf == vec![1, 3, 1],
        );
        line(
            4,
            &format!("Rao single generator, family {}", f.letter()),
            res.report.rao_generators == 1,
        );
    }
    // annihilator structures differ: D's tail is supported on a line that
    // meets S in length 6, E's on a plane
    let d = family(FamilyId::D);
    let ok_d = d.report.rao_support_dim == 3
        && d.report.six_secant.as_ref().map(|&(_, len)| len) == Some(6);
    line(4, "family D tail supported on a 6-secant line", ok_d);
    let e = family(FamilyId::E);
    line(
        4,
        "family E tail supported on a plane",
        e.report.rao_support_dim == 2,
    );
}

#[test]
fn acceptance_5_six_secant_geometry() {
    for f in [FamilyId::A, FamilyId::D, FamilyId::H] {
        let res = family(f);
        let ok = res.report.six_secant.as_ref().map(|&(_, len)| len) == Some(6)
            && res.report.rao_support_dim == 3;
        line(5, &format!("6-secant line, family {}", f.letter()), ok);
    }
    for f in [FamilyId::B, FamilyId::E, FamilyId::G] {
        let res = family(f);
        line(
            5,
            &format!("no 6-secant line, family {}", f.letter()),
            res.report.rao_support_dim != 3,
        );
    }
}

#[test]
fn acceptance_6_liaison() {
    for f in FamilyId::ALL {
        let res = family(f);
        let d = family_descriptor(f);
        if f == FamilyId::B {
            // no (4,4) complete intersection exists through B or its (4,5)
            // residual (one quartic generator); the (4,5) self-link is the
            // attainable liaison content
            let ok = res.report.residual_invariants.map(|(dd, p, _)| (dd, p)) == Some((10, 9))
                && res.report.relink_returns_original;
            line(6, "liaison (4,5) self-link, family B", ok);
            continue;
        }
        let ok = res.report.residual_invariants.map(|(dd, p, _)| (dd, p)) == Some((6, d.pi - 8))
            && res.report.relink_returns_original;
        line(
            6,
            &format!("(4,4) residual and closure, family {}", f.letter()),
            ok,
        );
    }
}

#[test]
fn acceptance_7_liaison_minimality() {
    // family B: e = -1 and h^0(I(3)) = 0, minimal in its even class
    let b = family(FamilyId::B);
    let sp = b.report.speciality;
    let h0_3 = b.ideal.graded_piece_dim(3, GradedPart::Ideal);
    line(
        7,
        "family B: e = -1, h0(I(3)) = 0, minimal",
        sp.e == -1 && h0_3 == 0 && sp.minimal,
    );

    // the family-A residual: e = -2, no quadric or cubic, unique minimal
    let a = family(FamilyId::A);
    let mut rng = Rng::derive(777, "acceptance-residual");
    let out = link(&a.ideal, 4, 4, &mut rng).expect("family A links (4,4)");
    let z = out.residual;
    let eng = CohomologyEngine::new(z.clone());
    let sp_z = eng.speciality_and_minimality();
    let ok = sp_z.e == -2
        && z.graded_piece_dim(2, GradedPart::Ideal) == 0
        && z.graded_piece_dim(3, GradedPart::Ideal) == 0
        && sp_z.minimal
        && sp_z.unique_minimal;
    line(7, "family A residual: e = -2, unique minimal", ok);
}

#[test]
fn acceptance_8_monad_hom_dimensions() {
    // The two Veronese-section classes differ by exactly one in
    // Hom(O(-1) + Omega^3(3), ker(5O + 2O(1) -> O(2))). Left-exactness of
    // Hom against the kernel sequence forces the dimension to be at least
    // 5 h^0(Omega^1(2)) + 2 h^0(Omega^1(3)) - h^0(Omega^1(4)) + 20 = 45,
    // and the generic/reducible sections realize exactly 45 and 46.
    let fp = Fp::new(DEFAULT_PRIME).unwrap();
    let f = direct_sum(&[line_bundle(fp, -1), omega_module(fp, 3).unwrap()]);

    let mut rng = Rng::derive(2024, "acceptance-psi");
    let quadrics: Vec<Poly> = (0..5)
        .map(|_| surfd10::constructions::components::random_plane_form(fp, &mut rng, 2))
        .collect();
    let g_elliptic = kernel_bundle_g(fp, &quadrics, &[Poly::var(0), Poly::var(1)]).unwrap();
    let dim_elliptic = hom_space(&f, &g_elliptic).len();
    line(8, "elliptic psi: dim Hom(F, G) = 45", dim_elliptic == 45);

    // rank-2 orthogonal tensor: the reducible section
    let alpha: [u64; 3] = [3, 141, 59];
    let beta: [u64; 3] = [26, 5358, 979];
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let cond: Vec<u64> = pairs
        .iter()
        .map(|&(i, j)| {
            if i == j {
                fp.mul(2, fp.mul(alpha[i], beta[i]))
            } else {
                fp.add(fp.mul(alpha[i], beta[j]), fp.mul(alpha[j], beta[i]))
            }
        })
        .collect();
    let mut mat = surfd10::groebner::linalg::Mat::zero(1, 6);
    for (c, &v) in cond.iter().enumerate() {
        mat.set(0, c, v);
    }
    let monos = ["x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"]
        .map(|s| surfd10::ring::parse::parse_poly(fp, s).unwrap());
    let qs: Vec<Poly> = mat
        .kernel_basis(fp)
        .into_iter()
        .map(|k| {
            let mut acc = Poly::zero();
            for (ci, m) in monos.iter().enumerate() {
                acc = acc.add(fp, &m.scale(fp, k[ci]));
            }
            acc
        })
        .collect();
    assert_eq!(qs.len(), 5);
    let g_k3 = kernel_bundle_g(fp, &qs, &[Poly::var(0), Poly::var(1)]).unwrap();
    let dim_k3 = hom_space(&f, &g_k3).len();
    line(8, "K3 psi: dim Hom(F, G) = 46", dim_k3 == 46);
    line(
        8,
        "K3 exceeds elliptic by exactly one",
        dim_k3 == dim_elliptic + 1,
    );
}

#[test]
fn acceptance_9_numerology_suite() {
    let t0 = std::time::Instant::now();
    // K^2 over the five (chi, pi) classes
    let cases = [
        ((1, 9), -9),
        ((2, 9), -3),
        ((3, 9), 3),
        ((3, 10), -2),
        ((4, 10), 4),
    ];
    let mut ok = true;
    for ((chi, pi), k2) in cases {
        ok &= double_point_k2(10, hk_from_genus(10, pi), chi) == Ok(k2);
    }
    line(9, "double point formula K^2 values", ok);
    // the multisecant table
    let table = [
        ((9, 1), (6, 7)),
        ((9, 2), (12, 3)),
        ((9, 3), (18, 3)),
        ((10, 3), (2, 2)),
        ((10, 4), (6, 1)),
    ];
    let mut ok = true;
    for ((pi, chi), counts) in table {
        ok &= lebarz_counts(pi, chi) == Ok(counts);
    }
    line(9, "multisecant table", ok);
    // N6 + (-1)-lines matches the table for every family row
    let mut ok = true;
    for f in FamilyId::ALL {
        let d = family_descriptor(f);
        let (n5, sharp6) = lebarz_counts(d.pi, d.chi).unwrap();
        ok &= d.n5 == n5 && d.n6 + d.minus_one_lines == sharp6;
    }
    // classification rows exist for pi = 9 and 10 and nothing else near them
    ok &= matches!(classify_d10(9), Ok(Classification::Families(v)) if v.len() == 6);
    ok &= matches!(classify_d10(10), Ok(Classification::Families(v)) if v.len() == 2);
    ok &= classify_d10(7).is_err();
    line(9, "six-secants plus exceptional lines", ok);
    let elapsed = t0.elapsed();
    line(
        9,
        &format!("pure-arithmetic runtime {:?} < 1ms", elapsed),
        elapsed.as_micros() < 1000,
    );
}

#[test]
fn acceptance_10_cas_property_fixtures() {
    let t0 = std::time::Instant::now();
    let fp = Fp::new(DEFAULT_PRIME).unwrap();
    let p = |s: &str| surfd10::ring::parse::parse_poly(fp, s).unwrap();

    // Groebner membership soundness on random combinations
    let i = Ideal::new(fp, vec![p("x0^2 - x1*x2"), p("x0*x1"), p("x3^3 - x4^3")]);
    let mut rng = Rng::new(100);
    let mut ok = true;
    for _ in 0..100 {
        let mut acc = Poly::zero();
        for g in i.gens() {
            let h = surfd10::ring::rng::random_poly_of_degree(fp, &mut rng, 2);
            acc = acc.add(fp, &h.mul(fp, g));
        }
        ok &= i.contains(&acc);
    }
    line(10, "membership soundness", ok);

    // graded-dimension oracle agreement to degree 8
    let mut ok = true;
    for n in 0..=8i64 {
        let via_lt = i.graded_piece_dim(n, GradedPart::Ideal);
        let via_basis = i.graded_piece_basis(n).len() as i64;
        ok &= via_lt == via_basis;
        let numer = hilbert_data(&i);
        ok &= surfd10::modres::hilbert::numerator_predicts_hf(&numer.numerator, n)
            == i.graded_piece_dim(n, GradedPart::Quotient);
    }
    line(10, "graded dimension oracle to degree 8", ok);

    // resolution exactness rank checks on the scroll fixture
    let scroll = Ideal::new(
        fp,
        vec![p("x0*x3 - x1*x2"), p("x0*x4 - x1*x3"), p("x2*x4 - x3^2")],
    );
    let (gens, res) = surfd10::modres::resolve_ideal(&scroll, 5);
    let (_, min) = surfd10::modres::minimalize(gens, res);
    line(
        10,
        "resolution exactness (rank checks)",
        min.differentials_compose_to_zero() && min.is_exact_up_to(8),
    );

    // Hilbert series two-route agreement: Betti alternating sums against
    // the lead-term numerator
    let numer = hilbert_data(&scroll).numerator;
    let betti = surfd10::modres::betti(&min);
    let mut signed = vec![0i64; 8];
    signed[0] = 1; // the R/I convention: 1 - sum_j beta_0j t^j + ...
    for (&(step, j), &r) in &betti.entries {
        let sgn = if step % 2 == 0 { -1i64 } else { 1 };
        signed[j as usize] += sgn * r as i64;
    }
    while signed.last() == Some(&0) {
        signed.pop();
    }
    line(10, "Hilbert series two-route agreement", signed == numer);

    // colon and saturation algebraic identities
    let j = Ideal::new(fp, vec![p("x0"), p("x3")]);
    let q = ideal_quotient(&i, &j);
    let mut ok = true;
    for f in q.gens() {
        for h in j.gens() {
            ok &= i.contains(&f.mul(fp, h));
        }
    }
    let torsion = Ideal::new(
        fp,
        vec![p("x0^2"), p("x0*x1"), p("x0*x2"), p("x0*x3"), p("x0*x4")],
    );
    let sat = saturate(&torsion);
    ok &= sat.equals(&Ideal::new(fp, vec![p("x0")]));
    ok &= saturate(&sat).equals(&sat);
    ok &= sat.contains_ideal(&torsion);
    line(10, "colon and saturation identities", ok);

    // liaison involution on the small fixture
    let z = Ideal::new(fp, vec![p("x0"), p("x2")]);
    let ci = Ideal::new(fp, vec![p("x0*x1"), p("x2")]);
    let res1 = ideal_quotient(&ci, &z);
    let back = ideal_quotient(&ci, &res1);
    line(10, "liaison involution", back.equals(&saturate(&z)));

    // degree additivity on a genuine (4,4) link
    let a = family(FamilyId::A);
    let mut rng = Rng::derive(4242, "acceptance-10");
    let out = link(&a.ideal, 4, 4, &mut rng).unwrap();
    let (_, dz) = surfd10::idealops::dimension_and_degree(&out.residual);
    line(10, "degree additivity 6 + 10 = 16", dz + 10 == 16);

    // 6-secant length through the A-surface support line
    let eng = CohomologyEngine::new(a.ideal.clone());
    let support = eng.rao_support().unwrap();
    let l = Ideal::new(fp, support);
    let meet = saturate(&ideal_sum(&a.ideal, &l));
    line(
        10,
        "A support line meets S in length 6",
        zero_scheme_length(&meet) == Ok(6),
    );

    let elapsed = t0.elapsed();
    line(
        10,
        &format!("fixture suite runtime {:?} < 5 min", elapsed),
        elapsed.as_secs() < 300,
    );
}
