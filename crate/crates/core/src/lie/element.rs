//! Jordan-type classification of elements and sl2-triples.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_linear;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::rational::Rat;

use super::algebra::{Coords, LieAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementClass {
    Zero,
    Nilpotent,
    Hyperbolic,
    Elliptic,
    Mixed,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ElementClass::Zero => "zero",
            ElementClass::Nilpotent => "nilpotent",
            ElementClass::Hyperbolic => "hyperbolic",
            ElementClass::Elliptic => "elliptic",
            ElementClass::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// Classifies `x` by the minimal polynomial of `ad x`.
pub fn classify_element(g: &LieAlgebra, x: &Mat) -> Result<ElementClass> {
    let c = g.coords_indexed(x, 0)?;
    Ok(classify_coords(g, &c))
}

pub fn classify_coords(g: &LieAlgebra, x: &[Rat]) -> ElementClass {
    if x.iter().all(Rat::is_zero) {
        return ElementClass::Zero;
    }
    classify_min_poly(&Poly::minimal_polynomial(&g.ad(x)))
}

/// Classification from a minimal polynomial `m` of a nonzero operator.
pub fn classify_min_poly(m: &Poly) -> ElementClass {
    if m.is_monomial() {
        return if m.degree() == Some(0) { ElementClass::Zero } else { ElementClass::Nilpotent };
    }
    if !m.is_squarefree() {
        return ElementClass::Mixed;
    }
    if m.all_roots_real() {
        return ElementClass::Hyperbolic;
    }
    // purely imaginary spectrum: m = t^a r(t^2) with every root of r real and negative
    let a = m.zero_multiplicity();
    let rest = &m.coeffs()[a..];
    if rest.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return ElementClass::Mixed;
    }
    let r = Poly::new(rest.iter().step_by(2).cloned().collect());
    let deg = r.degree().unwrap_or(0);
    if deg >= 1
        && r.all_roots_real()
        && r.count_roots_between(&(-r.root_bound()), &Rat::zero()) == deg
        && !r.eval(&Rat::zero()).is_zero()
    {
        ElementClass::Elliptic
    } else {
        ElementClass::Mixed
    }
}

/// An sl2-triple `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`, in coordinates.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: Coords,
    pub h: Coords,
    pub f: Coords,
}

impl Sl2Triple {
    /// The element `v = -f`, for which `[v, e] = h` and `[[v, e], e] = 2e`.
    pub fn v(&self) -> Coords {
        self.f.iter().map(|c| -c).collect()
    }

    /// Residuals of the three defining relations; all zero for a valid triple.
    pub fn residuals(&self, g: &LieAlgebra) -> [Coords; 3] {
        let two = Rat::from_int(2);
        let sub = |a: Coords, b: Coords| -> Coords { a.iter().zip(&b).map(|(x, y)| x - y).collect() };
        let he = sub(g.bracket(&self.h, &self.e), self.e.iter().map(|c| c * &two).collect());
        let hf = sub(g.bracket(&self.h, &self.f), self.f.iter().map(|c| -(c * &two)).collect());
        let ef = sub(g.bracket(&self.e, &self.f), self.h.clone());
        [he, hf, ef]
    }

    pub fn is_valid(&self, g: &LieAlgebra) -> bool {
        self.residuals(g).iter().all(|r| r.iter().all(Rat::is_zero))
    }
}

/// Completes a nonzero nilpotent `u` to an sl2-triple with `e = u`.
///
/// `h = [e, z]` for a solution of `(ad e)^2 z = -2e`; then `f` solves
/// `[e, f] = h`, `[h, f] = -2f` jointly.
pub fn jacobson_morozov(g: &LieAlgebra, u: &Mat) -> Result<Sl2Triple> {
    let e = g.coords_indexed(u, 0)?;
    jacobson_morozov_coords(g, &e)
}

pub fn jacobson_morozov_coords(g: &LieAlgebra, e: &[Rat]) -> Result<Sl2Triple> {
    let class = classify_coords(g, e);
    if class != ElementClass::Nilpotent {
        return Err(Error::NotNilpotent(class.to_string()));
    }
    let d = g.dim();
    let ad_e = g.ad(e);
    let target = Mat::column(e.iter().map(|c| c * &Rat::from_int(-2)).collect());
    let z = solve_linear(&ad_e.mul(&ad_e), &target)
        .ok_or_else(|| Error::Invariant("(ad e)^2 z = -2e has no solution".into()))?;
    let h = g.bracket(e, &z.col(0));
    let ad_h = g.ad(&h);
    let mut stacked = Mat::zeros(2 * d, d);
    let mut rhs = Mat::zeros(2 * d, 1);
    for i in 0..d {
        for j in 0..d {
            stacked[(i, j)] = ad_e[(i, j)].clone();
            let mut v = ad_h[(i, j)].clone();
            if i == j {
                v += Rat::from_int(2);
            }
            stacked[(d + i, j)] = v;
        }
        rhs[(i, 0)] = h[i].clone();
    }
    let f = solve_linear(&stacked, &rhs)
        .ok_or_else(|| Error::Invariant("no f completes the triple".into()))?
        .col(0);
    let t = Sl2Triple { e: e.to_vec(), h, f };
    if !t.is_valid(g) {
        return Err(Error::Invariant("sl2 relations fail".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::make_so;
    use crate::lie::roots::iwasawa;

    #[test]
    fn classes_in_so24() {
        let g = make_so(2, 4).unwrap();
        let iw = iwasawa(&g).unwrap();
        for a in iw.a.matrices(&g) {
            assert_eq!(classify_element(&g, &a).unwrap(), ElementClass::Hyperbolic);
        }
        for u in iw.n.matrices(&g) {
            assert_eq!(classify_element(&g, &u).unwrap(), ElementClass::Nilpotent);
        }
        let rot = g.basis()[g.pair_index(0, 1)].clone();
        assert_eq!(classify_element(&g, &rot).unwrap(), ElementClass::Elliptic);
        assert_eq!(classify_element(&g, &Mat::zeros(6, 6)).unwrap(), ElementClass::Zero);
        let a0 = iw.a.matrices(&g)[0].clone();
        let commuting_rot = g.basis()[g.pair_index(4, 5)].clone();
        assert_eq!(classify_element(&g, &a0.add(&commuting_rot)).unwrap(), ElementClass::Mixed);
        // a boost plus a rotation sharing an axis is a null rotation
        assert_eq!(classify_element(&g, &a0.add(&rot)).unwrap(), ElementClass::Nilpotent);
        let bad = Mat::identity(6);
        assert!(classify_element(&g, &bad).is_err());
    }

    #[test]
    fn elliptic_polynomials() {
        // t (t^2 + 1)
        assert_eq!(classify_min_poly(&Poly::from_ints(&[0, 1, 0, 1])), ElementClass::Elliptic);
        // t (t^2 - 1)
        assert_eq!(classify_min_poly(&Poly::from_ints(&[0, -1, 0, 1])), ElementClass::Hyperbolic);
        // t (t^2 + 1)(t^2 - 1): mixed spectrum
        assert_eq!(classify_min_poly(&Poly::from_ints(&[0, -1, 0, 0, 0, 1])), ElementClass::Mixed);
        // t^2 (t^2 + 1): not semisimple
        assert_eq!(classify_min_poly(&Poly::from_ints(&[0, 0, 1, 0, 1])), ElementClass::Mixed);
    }

    #[test]
    fn triple_so12() {
        let g = make_so(1, 2).unwrap();
        let iw = iwasawa(&g).unwrap();
        let u = iw.n.matrices(&g)[0].clone();
        let t = jacobson_morozov(&g, &u).unwrap();
        assert!(t.is_valid(&g));
        let v = t.v();
        let vu = g.bracket(&v, &t.e);
        assert_eq!(vu, t.h);
        assert!(iw.a.contains(&vu) && vu.iter().any(|c| !c.is_zero()));
        assert!(iw.n_minus(&g).contains(&v));
    }

    #[test]
    fn triple_top_root_so23() {
        let g = make_so(2, 3).unwrap();
        let iw = iwasawa(&g).unwrap();
        let r = &iw.roots;
        let top = r.alpha().unwrap().add(&r.beta().unwrap().scale(2));
        let u = g.to_matrix(&r.space(&top)[0]);
        let t = jacobson_morozov(&g, &u).unwrap();
        assert_eq!(classify_coords(&g, &t.h), ElementClass::Hyperbolic);
        let two_u: Coords = t.e.iter().map(|c| c * &Rat::from_int(2)).collect();
        assert_eq!(g.bracket(&g.bracket(&t.v(), &t.e), &t.e), two_u);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let g = make_so(1, 2).unwrap();
        assert!(matches!(jacobson_morozov(&g, &Mat::zeros(3, 3)), Err(Error::NotNilpotent(_))));
        let a = g.basis()[g.pair_index(0, 1)].clone();
        assert!(matches!(jacobson_morozov(&g, &a), Err(Error::NotNilpotent(_))));
    }
}
