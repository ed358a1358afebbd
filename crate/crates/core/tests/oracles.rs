//! Reference values recomputed by routes that bypass the library's own algorithms.

use lorentz_core::catalog::{complex_structure, list_catalog, standard_subalgebra};
use lorentz_core::lie::{iwasawa, make_so};
use lorentz_core::poly::Poly;
use lorentz_core::rational::{q, qi};
use lorentz_core::verify::signature_by_charpoly;
use lorentz_core::{signature, Mat, Rat, Signature};

/// On so(p,q) the Killing form is `(N - 2) tr(XY)`.
#[test]
fn killing_form_matches_trace_form() {
    for (p, qq) in [(0, 3), (1, 2), (1, 4), (2, 3), (2, 5), (3, 3)] {
        let g = make_so(p, qq).unwrap();
        let n = (p + qq) as i64;
        let kf = g.killing_form().unwrap();
        for (i, x) in g.basis().iter().enumerate() {
            for (j, y) in g.basis().iter().enumerate() {
                assert_eq!(kf[(i, j)], qi(n - 2) * x.mul(y).trace(), "so({p},{qq}) entry ({i},{j})");
            }
        }
    }
}

#[test]
fn structure_constants_match_commutators() {
    let g = make_so(2, 4).unwrap();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let direct = g.basis()[i].bracket(&g.basis()[j]);
            assert_eq!(g.to_matrix(&g.bracket(&g.unit(i), &g.unit(j))), direct);
        }
    }
}

#[test]
fn dimensions_and_defining_relation() {
    for (p, qq) in [(1, 2), (1, 5), (2, 3), (2, 8)] {
        let g = make_so(p, qq).unwrap();
        let n = p + qq;
        assert_eq!(g.dim(), n * (n - 1) / 2);
        let j = g.j_form();
        for x in g.basis() {
            assert!(x.transpose().mul(j).add(&j.mul(x)).is_zero());
        }
    }
}

/// Multiplicities read off the characteristic polynomial of `ad H` for
/// `H = a_0 + 3 a_1`, on which α, β, α+β, α+2β take the values 2, 1, 3, 4.
#[test]
fn so2n_multiplicities_from_charpoly() {
    for n in 3..=7 {
        let g = make_so(2, n).unwrap();
        let a0 = g.basis()[g.pair_index(0, 2)].clone();
        let a1 = g.basis()[g.pair_index(1, 3)].clone();
        let h = a0.add(&a1.scale(&qi(3)));
        let hc = g.coords(&h).unwrap();
        let chi = Poly::charpoly(&g.ad(&hc));
        let m = (n - 2) * (n - 3) / 2;
        let mut expected = Poly::monomial(2 + m);
        for (value, mult) in [(1, n - 2), (2, 1), (3, n - 2), (4, 1)] {
            let factor = Poly::from_ints(&[-(value * value), 0, 1]);
            for _ in 0..mult {
                expected = expected.mul(&factor);
            }
        }
        assert_eq!(chi, expected, "so(2,{n})");
    }
}

/// The restricted-root routine and the characteristic polynomial agree on so(1,n).
#[test]
fn so1n_rank_one_roots() {
    for n in 2..=6 {
        let g = make_so(1, n).unwrap();
        let iw = iwasawa(&g).unwrap();
        assert_eq!(iw.roots.rank(), 1);
        assert_eq!(iw.n.dim(), n - 1);
        let a = &iw.a.basis()[0];
        let chi = Poly::charpoly(&g.ad(a));
        let m = (n - 1) * (n - 2) / 2;
        let mut expected = Poly::monomial(1 + m);
        for _ in 0..n - 1 {
            expected = expected.mul(&Poly::from_ints(&[-1, 0, 1]));
        }
        assert_eq!(chi, expected);
    }
}

#[test]
fn killing_signatures() {
    // compact directions are negative, noncompact positive: (pq, p(p-1)/2 + q(q-1)/2)
    for (p, qq) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
        let g = make_so(p, qq).unwrap();
        let kf = g.killing_form().unwrap();
        let expected = Signature::new(p * qq, p * (p - 1) / 2 + qq * (qq - 1) / 2, 0);
        assert_eq!(signature(&kf).unwrap(), expected);
        assert_eq!(signature_by_charpoly(&kf), expected);
    }
}

#[test]
fn su_elements_commute_with_complex_structure() {
    for n in [4, 6, 8] {
        let g = make_so(2, n).unwrap();
        let k = n / 2;
        let su = standard_subalgebra(&g, &format!("su(1,{k})")).unwrap();
        assert_eq!(su.dim(), (k + 1) * (k + 1) - 1);
        let jc = complex_structure(&g);
        assert_eq!(jc.mul(&jc), Mat::identity(n + 2).scale(&qi(-1)));
        for x in su.basis() {
            assert!(x.bracket(&jc).is_zero());
            assert!(jc.mul(x).trace().is_zero());
        }
    }
}

#[test]
fn catalog_dimensions_from_root_counts() {
    for n in 3..=6 {
        let g = make_so(2, n).unwrap();
        let m = (n - 2) * (n - 3) / 2;
        let expect = |name: &str| -> usize {
            match name {
                "a" => 2,
                "m" => m,
                "n" => 2 * n - 2,
                "min_parabolic" => m + 2 + 2 * n - 2,
                "p_alpha" => m + 2 + 2 * n - 1,
                "p_beta" => m + 2 + 3 * n - 4,
                "zero" => 0,
                other if other.starts_with("so(1,") => n * (n + 1) / 2,
                other if other.starts_with("su(1,") => (n / 2 + 1) * (n / 2 + 1) - 1,
                other => panic!("unexpected entry {other}"),
            }
        };
        for e in list_catalog(&g) {
            assert_eq!(e.expected_dim, expect(&e.name), "{} in so(2,{n})", e.name);
        }
    }
}

#[test]
fn rational_reference_values() {
    assert_eq!(q(6, -4), q(-3, 2));
    assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
    let big = Rat::from_int(i64::MAX) * Rat::from_int(4);
    assert_eq!(big / Rat::from_int(8), q(i64::MAX, 2));
}
