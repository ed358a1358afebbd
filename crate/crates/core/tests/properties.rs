use proptest::prelude::*;

use lorentz_core::catalog::{list_catalog, standard_subalgebra};
use lorentz_core::forms::{invariant_sym_forms, quotient_rep};
use lorentz_core::lie::{classify_element, iwasawa, make_so, ElementClass};
use lorentz_core::linalg::combine;
use lorentz_core::rational::q;
use lorentz_core::signature::bilinear;
use lorentz_core::verify::{revalidate_form, signature_by_charpoly};
use lorentz_core::{signature, Mat, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..7, 1i64..5).prop_map(|(n, d)| q(n, d))
}

fn arb_algebra() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 2)), Just((1, 3)), Just((2, 3)), Just((2, 4)), Just((0, 3))]
}

fn arb_coords(d: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(arb_rat(), d)
}

fn arb_symmetric(n: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-3i64..4, n * n).prop_map(move |v| {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = Rat::from_int(v[i * n + j]);
                m[(j, i)] = Rat::from_int(v[i * n + j]);
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bracket_is_antisymmetric_and_jacobi((p, qq) in arb_algebra(), seed in proptest::collection::vec(arb_rat(), 30)) {
        let g = make_so(p, qq).unwrap();
        let d = g.dim();
        let x: Vec<Rat> = seed.iter().cycle().take(d).cloned().collect();
        let y: Vec<Rat> = seed.iter().rev().cycle().take(d).cloned().collect();
        let z: Vec<Rat> = seed.iter().skip(3).cycle().take(d).cloned().collect();
        let xy = g.bracket(&x, &y);
        let yx: Vec<Rat> = g.bracket(&y, &x).iter().map(|c| -c).collect();
        prop_assert_eq!(xy, yx);
        prop_assert!(g.jacobi_residual(&x, &y, &z).iter().all(Rat::is_zero));
    }

    #[test]
    fn killing_form_is_invariant(x in arb_coords(10), y in arb_coords(10), z in arb_coords(10)) {
        let g = make_so(2, 3).unwrap();
        let kf = g.killing_form().unwrap();
        let r = bilinear(&kf, &g.bracket(&z, &x), &y) + bilinear(&kf, &x, &g.bracket(&z, &y));
        prop_assert!(r.is_zero());
    }

    #[test]
    fn inertia_is_a_congruence_invariant(s in arb_symmetric(5), l in proptest::collection::vec(arb_rat(), 25), flip in proptest::bool::ANY) {
        let n = 5;
        let mut p = Mat::identity(n);
        for i in 0..n {
            for j in 0..i {
                p[(i, j)] = l[i * n + j].clone();
            }
            if flip && i == 0 {
                p[(0, 0)] = Rat::from_int(-3);
            }
        }
        let moved = p.transpose().mul(&s).mul(&p);
        let sig = signature(&s).unwrap();
        prop_assert_eq!(signature(&moved).unwrap(), sig);
        prop_assert_eq!(signature_by_charpoly(&s), sig);
        prop_assert_eq!(sig.dim(), n);
    }

    #[test]
    fn split_elements_classify((n, coeffs) in (3usize..6).prop_flat_map(|n| (Just(n), arb_coords(2 * n - 2)))) {
        let g = make_so(2, n).unwrap();
        let iw = iwasawa(&g).unwrap();
        let u = combine(&coeffs, iw.n.basis(), g.dim());
        let class = classify_element(&g, &g.to_matrix(&u)).unwrap();
        prop_assert!(matches!(class, ElementClass::Nilpotent | ElementClass::Zero));
        let a = combine(&coeffs[..2], iw.a.basis(), g.dim());
        let class = classify_element(&g, &g.to_matrix(&a)).unwrap();
        prop_assert!(matches!(class, ElementClass::Hyperbolic | ElementClass::Zero));
    }

    #[test]
    fn invariant_forms_revalidate((p, qq) in prop_oneof![Just((1, 3)), Just((1, 4)), Just((2, 3)), Just((2, 4))], pick in 0usize..16) {
        let g = make_so(p, qq).unwrap();
        let entries: Vec<_> = list_catalog(&g).into_iter().filter(|e| e.expected_dim < g.dim()).collect();
        let e = &entries[pick % entries.len()];
        let h = standard_subalgebra(&g, &e.name).unwrap();
        let qr = quotient_rep(&g, &h).unwrap();
        let space = invariant_sym_forms(&qr);
        let comp = qr.complement_matrices(&g);
        for form in space.basis_forms() {
            prop_assert!(space.is_invariant(form));
            prop_assert!(revalidate_form(&h, &comp, form).is_ok(), "{} in {}", e.name, g.label());
        }
    }

    #[test]
    fn matrix_text_round_trip(v in proptest::collection::vec(arb_rat(), 12)) {
        let m = Mat::from_vec(3, 4, v);
        prop_assert_eq!(Mat::from_text(&m.to_text()).unwrap(), m);
    }
}
