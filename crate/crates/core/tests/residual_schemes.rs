//! Fixtures for the degree-6 residual schemes and the cross-checks tying
//! the monad route to the classical module dualities.

use surfd10::constructions::components::{cubic_scroll, plane_through_line, random_line};
use surfd10::groebner::{GradedPart, Ideal};
use surfd10::idealops::{
    dimension_and_degree, ideal_intersection, ideal_intersection_many, random_in_degree,
};
use surfd10::modres::presentation::{annihilator_piece, ext_module, Presentation};
use surfd10::monad::{
    direct_sum, hom_space, ideal_from_monad, line_bundle, omega_module, random_hom,
};
use surfd10::{Fp, Rng, DEFAULT_PRIME};

fn fp() -> Fp {
    Fp::new(DEFAULT_PRIME).unwrap()
}

#[test]
fn family_a_residual_lies_on_exactly_11_quartics() {
    let fpv = fp();
    let mut rng = Rng::derive(1234, "a-quartics");
    let line = random_line(fpv, &mut rng);
    let p1 = plane_through_line(fpv, &mut rng, &line);
    let p2 = plane_through_line(fpv, &mut rng, &line);
    let p3 = plane_through_line(fpv, &mut rng, &line);
    let scroll = cubic_scroll(fpv, &line, &mut rng).unwrap();
    let z = ideal_intersection_many(&[&p1, &p2, &p3, &scroll.ideal]);
    assert_eq!(dimension_and_degree(&z), (2, 6));
    assert_eq!(z.graded_piece_dim(4, GradedPart::Ideal), 11);
    // and there is no cubic or quadric through it
    assert_eq!(z.graded_piece_dim(3, GradedPart::Ideal), 0);
    // a random draw from the quartic system lives in an 11-dimensional space
    let f = random_in_degree(&z, 4, &mut rng).unwrap();
    assert!(z.contains(&f));
}

#[test]
fn scroll_union_quadric_is_a_degenerate_quintic_scroll() {
    // the union of a cubic scroll and a quadric glued along two rulings has
    // degree 5 and is cut out by five cubics
    let fpv = fp();
    let mut rng = Rng::derive(55, "x-scheme");
    let line = random_line(fpv, &mut rng);
    let scroll = cubic_scroll(fpv, &line, &mut rng).unwrap();
    let r1 = scroll.ruling(fpv, 1, 0).unwrap();
    let r2 = scroll.ruling(fpv, 0, 1).unwrap();
    let through = ideal_intersection(&r1, &r2);
    // the two rulings span a hyperplane; a quadric surface through them
    // lives inside it
    let h = through.graded_piece_basis(1);
    assert_eq!(h.len(), 1, "skew rulings span a hyperplane");
    let q = loop {
        let q2 = random_in_degree(&through, 2, &mut rng).unwrap();
        let cand = Ideal::new(fpv, vec![h[0].clone(), q2]);
        if dimension_and_degree(&cand) == (2, 2) {
            break cand;
        }
    };
    let x = ideal_intersection(&scroll.ideal, &q);
    assert_eq!(dimension_and_degree(&x), (2, 5));
    assert_eq!(x.graded_piece_dim(3, GradedPart::Ideal), 5);
    assert_eq!(x.graded_piece_dim(2, GradedPart::Ideal), 0);
}

#[test]
fn monad_embedding_agrees_with_the_dualizing_annihilator() {
    // cross-check of the ideal extraction: the codimension-2 dualizing
    // module Ext^2(R/I, R) is annihilated by exactly the ideal, so its
    // annihilator pieces must match the extracted generators
    let fpv = fp();
    let o3 = omega_module(fpv, 3).unwrap();
    let o1 = omega_module(fpv, 1).unwrap();
    let f = direct_sum(&[o3.clone(), o3]);
    let g = direct_sum(&[o1.clone(), o1, line_bundle(fpv, 0)]);
    let homs = hom_space(&f, &g);
    let mut rng = Rng::derive(98, "b-crosscheck");
    let phi = random_hom(fpv, &homs, &mut rng);
    let ideal = ideal_from_monad(&f, &g, &phi).unwrap();
    assert_eq!(ideal.graded_piece_dim(4, GradedPart::Ideal), 1);
    assert_eq!(ideal.graded_piece_dim(5, GradedPart::Ideal), 15);

    let omega = ext_module(&Presentation::quotient_ring(&ideal), 2);
    assert!(!omega.is_zero_presentation());
    // I annihilates the dualizing module ...
    let ann4 = annihilator_piece(&omega, 4);
    let ann5 = annihilator_piece(&omega, 5);
    // ... and the annihilator pieces are no bigger than the ideal's
    assert_eq!(ann4.len() as i64, 1);
    assert_eq!(ann5.len() as i64, 15);
    for h in ann4.iter().chain(ann5.iter()) {
        assert!(ideal.contains(h), "annihilator escapes the extracted ideal");
    }
}
