//! Named subalgebras of so(1,n) and so(2,n).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::roots::{conjugate, iwasawa, Root};
use crate::lie::{Coords, LieAlgebra, Subalgebra};
use crate::linalg::kernel;
use crate::matrix::Mat;
use crate::rational::Rat;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, usize>,
    pub expected_dim: usize,
    pub description: String,
}

fn entry(name: String, params: &[(&str, usize)], expected_dim: usize, description: &str) -> CatalogEntry {
    CatalogEntry {
        name,
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        expected_dim,
        description: description.to_string(),
    }
}

/// Every entry available in `g`, in a fixed order; empty outside so(1,n), n ≥ 2, and so(2,n), n ≥ 3.
pub fn list_catalog(g: &LieAlgebra) -> Vec<CatalogEntry> {
    let (p, n) = (g.p(), g.q());
    match p {
        1 if n >= 2 => {
            let m = (n - 1) * (n - 2) / 2;
            vec![
                entry(format!("so(1,{})", n - 1), &[("n", n)], n * (n - 1) / 2, "upper-left block, last coordinate fixed"),
                entry("a".into(), &[("n", n)], 1, "split Cartan subspace"),
                entry("n".into(), &[("n", n)], n - 1, "sum of positive root spaces"),
                entry("m".into(), &[("n", n)], m, "centralizer of a in k"),
                entry("min_parabolic".into(), &[("n", n)], m + n, "m + a + n"),
                entry("zero".into(), &[("n", n)], 0, "trivial subalgebra"),
            ]
        }
        2 if n >= 3 => {
            let k = n / 2;
            let m = (n - 2) * (n - 3) / 2;
            let min = m + 2 + 2 * n - 2;
            vec![
                entry(format!("so(1,{n})"), &[("n", n)], (n + 1) * n / 2, "second negative coordinate deleted"),
                entry(format!("su(1,{k})"), &[("n", n), ("k", k)], (k + 1) * (k + 1) - 1, "C^(k+1) realified on the first 2k+2 coordinates"),
                entry("a".into(), &[("n", n)], 2, "split Cartan subspace"),
                entry("n".into(), &[("n", n)], 2 * n - 2, "sum of positive root spaces"),
                entry("m".into(), &[("n", n)], m, "centralizer of a in k"),
                entry("min_parabolic".into(), &[("n", n)], min, "m + a + n"),
                entry("p_alpha".into(), &[("n", n)], min + 1, "min_parabolic + g_(-alpha)"),
                entry("p_beta".into(), &[("n", n)], min + n - 2, "min_parabolic + g_(-beta)"),
                entry("zero".into(), &[("n", n)], 0, "trivial subalgebra"),
            ]
        }
        _ => Vec::new(),
    }
}

/// Builds a catalog entry by name and checks its dimension.
pub fn standard_subalgebra(g: &LieAlgebra, name: &str) -> Result<Subalgebra> {
    let entries = list_catalog(g);
    if entries.is_empty() {
        return Err(Error::Unsupported { p: g.p(), q: g.q(), reason: "no catalog outside so(1,n) and so(2,n)".into() });
    }
    let wanted = canonical_name(name);
    let e = entries
        .iter()
        .find(|e| e.name == wanted)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    let h = build(g, &e.name)?;
    if h.dim() != e.expected_dim {
        return Err(Error::Invariant(format!("{} has dim {}, expected {}", e.name, h.dim(), e.expected_dim)));
    }
    Ok(h)
}

fn canonical_name(name: &str) -> String {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    match s.as_str() {
        "0" | "trivial" => "zero".into(),
        "N_G(N)" | "minimal_parabolic" => "min_parabolic".into(),
        "p_a" | "P_alpha" => "p_alpha".into(),
        "p_b" | "P_beta" => "p_beta".into(),
        // "so(1,5)<so(2,5)" names the left-hand side
        _ => s.split('<').next().unwrap_or_default().to_string(),
    }
}

fn build(g: &LieAlgebra, name: &str) -> Result<Subalgebra> {
    let d = g.dim();
    let units = |keep: &dyn Fn(usize, usize) -> bool| -> Vec<Coords> {
        (0..d).filter(|&k| {
            let (i, j) = g.pair(k);
            keep(i, j)
        })
        .map(|k| g.unit(k))
        .collect()
    };
    match name {
        "zero" => Subalgebra::from_coords(g, name, Vec::new()),
        _ if name.starts_with("so(1,") && g.p() == 1 => {
            let last = g.ambient_dim() - 1;
            Subalgebra::from_coords(g, name, units(&|_, j| j < last))
        }
        _ if name.starts_with("so(1,") => Subalgebra::from_coords(g, name, units(&|i, j| i != 1 && j != 1)),
        _ if name.starts_with("su(1,") => Subalgebra::from_coords(g, name, su_basis(g)?),
        _ => {
            let iw = iwasawa(g)?;
            let min = iw.minimal_parabolic();
            let s = match name {
                "a" => iw.a.clone(),
                "n" => iw.n.clone(),
                "m" => iw.m.clone(),
                "min_parabolic" => min,
                "p_alpha" | "p_beta" => {
                    let r = &iw.roots;
                    let root = if name == "p_alpha" { r.alpha() } else { r.beta() };
                    let neg = root.ok_or_else(|| Error::Decomposition("not a B2 system".into()))?.neg();
                    min.sum(&r.subspace(&[neg], d))
                }
                other => return Err(Error::UnknownEntry(other.to_string())),
            };
            Subalgebra::from_subspace(g, name, &s)
        }
    }
}

/// The complex structure `I_C` on `R^(2k+2) = C^(k+1)`, coordinates
/// ordered `(Re z0, Im z0, Re z1, Im z1, ...)`, padded by zero rows to the
/// ambient size.
pub fn complex_structure(g: &LieAlgebra) -> Mat {
    let n = g.ambient_dim();
    let k = g.q() / 2;
    let mut i_c = Mat::zeros(n, n);
    for b in 0..=k {
        i_c[(2 * b + 1, 2 * b)] = Rat::one();
        i_c[(2 * b, 2 * b + 1)] = Rat::from_int(-1);
    }
    i_c
}

/// Real part of the Hermitian form `-|z0|^2 + |z1|^2 + ... + |zk|^2` in the
/// realified coordinates.
pub fn realified_hermitian_form(k: usize) -> Mat {
    let mut h = Mat::identity(2 * k + 2);
    h[(0, 0)] = Rat::from_int(-1);
    h[(1, 1)] = Rat::from_int(-1);
    h
}

/// Congruence taking the realified Hermitian form to the restriction of `J`.
///
/// The coordinate order already matches `J = diag(-1, -1, +1, ...)`, so this is the identity.
pub fn su_congruence(k: usize) -> Mat {
    Mat::identity(2 * k + 2)
}

/// `su(1,k) = {X ∈ so(2,2k) on the first 2k+2 coordinates : [X, I_C] = 0, tr(I_C X) = 0}`.
fn su_basis(g: &LieAlgebra) -> Result<Vec<Coords>> {
    if g.p() != 2 || g.q() < 2 {
        return Err(Error::Unsupported { p: g.p(), q: g.q(), reason: "su(1,k) lives in so(2,n)".into() });
    }
    let k = g.q() / 2;
    let size = 2 * k + 2;
    let i_c = complex_structure(g);
    let free: Vec<usize> = (0..g.dim()).filter(|&t| g.pair(t).1 < size).collect();
    let d = g.dim();
    let ic = g.coords(&i_c).ok_or_else(|| Error::Invariant("I_C is not in so(2,n)".into()))?;
    // rows: coordinates of [I_C, b_t] and tr(I_C b_t), over the free columns
    let mut a = Mat::zeros(d + 1, free.len());
    for (col, &t) in free.iter().enumerate() {
        let br = g.bracket(&ic, &g.unit(t));
        for r in 0..d {
            a[(r, col)] = br[r].clone();
        }
        a[(d, col)] = i_c.mul(&g.basis()[t]).trace();
    }
    Ok(kernel(&a)
        .into_iter()
        .map(|x| {
            let mut c = g.zero_element();
            for (col, &t) in free.iter().enumerate() {
                c[t] = x[(col, 0)].clone();
            }
            c
        })
        .collect())
}

/// Sum of the positive eigenspaces of `ad t0` inside 𝔥, where `t0` spans
/// the first direction of 𝔥 ∩ 𝔞. Every element is ad-nilpotent since
/// brackets strictly raise the `t0`-eigenvalue.
pub fn maximal_unipotent(g: &LieAlgebra, h: &Subalgebra) -> Result<Subalgebra> {
    let iw = iwasawa(g)?;
    let hs = h.subspace(g);
    let ha = hs.intersect(&iw.a);
    let t0 = ha
        .basis()
        .first()
        .ok_or_else(|| Error::Decomposition("𝔥 ∩ 𝔞 is trivial".into()))?
        .clone();
    let roots = iw.roots.roots();
    // t0 = sum c_i a_i, so its eigenvalue on 𝔤_φ is sum c_i φ_i
    let a_coords = crate::linalg::Coordinates::new(iw.roots.a_basis().to_vec(), g.dim())
        .map_err(|_| Error::Invariant("𝔞-basis dependent".into()))?;
    let c = a_coords.coords(&t0).ok_or_else(|| Error::Invariant("t0 outside 𝔞".into()))?;
    let positive: Vec<Root> = roots
        .into_iter()
        .filter(|r| {
            let v: Rat = r.0.iter().zip(&c).map(|(&ri, ci)| ci * &Rat::from_int(ri)).sum();
            v.is_positive()
        })
        .collect();
    let g_plus = iw.roots.subspace(&positive, g.dim());
    Subalgebra::from_subspace(g, format!("u({})", h.name()), &g_plus.intersect(&hs))
}

/// `w 𝔥 w⁻¹` for an orthogonal `w` preserving `J`.
pub fn conjugate_subalgebra(g: &LieAlgebra, h: &Subalgebra, w: &Mat, name: &str) -> Result<Subalgebra> {
    let basis: Vec<Mat> = h.basis().iter().map(|x| conjugate(w, x)).collect();
    Subalgebra::new(g, name, basis)
}

/// Whether `inner ⊆ outer` as subspaces of `g`.
pub fn contains(g: &LieAlgebra, outer: &Subalgebra, inner: &Subalgebra) -> bool {
    outer.subspace(g).contains_space(&inner.subspace(g))
}
