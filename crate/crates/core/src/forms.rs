//! Invariant symmetric forms on `𝔤/𝔥` and the Minkowski decision.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::roots::standard_a;
use crate::lie::subspace::{apply, Subspace};
use crate::lie::{Coords, LieAlgebra, Subalgebra};
use crate::linalg::{kernel, Coordinates, Echelon};
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::signature::{signature, Signature};

/// The isotropy representation `ρ` of `𝔥` on `𝔤/𝔥`, in complement coordinates.
#[derive(Clone, Debug)]
pub struct QuotientRep {
    h_basis: Vec<Coords>,
    complement: Vec<Coords>,
    operators: Vec<Mat>,
    probes: Vec<(String, Mat)>,
}

impl QuotientRep {
    pub fn dim_quotient(&self) -> usize {
        self.complement.len()
    }

    pub fn h_basis(&self) -> &[Coords] {
        &self.h_basis
    }

    pub fn complement(&self) -> &[Coords] {
        &self.complement
    }

    pub fn complement_matrices(&self, g: &LieAlgebra) -> Vec<Mat> {
        self.complement.iter().map(|c| g.to_matrix(c)).collect()
    }

    /// `ρ(b_i)` for each 𝔥-basis element, `m × m`.
    pub fn operators(&self) -> &[Mat] {
        &self.operators
    }

    /// Operators of the 𝔥 ∩ 𝔞 elements and of the 𝔥-basis itself, used as
    /// candidates for isotropic eigenspaces.
    pub fn probes(&self) -> &[(String, Mat)] {
        &self.probes
    }
}

/// [`quotient_rep_with_order`] with the ambient basis in its natural order.
pub fn quotient_rep(g: &LieAlgebra, h: &Subalgebra) -> Result<QuotientRep> {
    let order: Vec<usize> = (0..g.dim()).collect();
    quotient_rep_with_order(g, h, &order)
}

/// Builds `ρ`, extending 𝔥 greedily by ambient basis vectors visited in `order`.
pub fn quotient_rep_with_order(g: &LieAlgebra, h: &Subalgebra, order: &[usize]) -> Result<QuotientRep> {
    let d = g.dim();
    let k = h.dim();
    if k >= d {
        return Err(Error::InvalidParams("𝔥 = 𝔤, the quotient is trivial".into()));
    }
    let mut e = Echelon::new(d);
    for c in h.coords() {
        e.insert(c);
    }
    let mut complement = Vec::new();
    for &i in order {
        let u = g.unit(i);
        if e.insert(&u) {
            complement.push(u);
        }
    }
    if complement.len() != d - k {
        return Err(Error::Dimension(format!("order covers {} of {} complement directions", complement.len(), d - k)));
    }
    let all: Vec<Coords> = h.coords().iter().chain(&complement).cloned().collect();
    let adapted = Coordinates::new(all, d).map_err(|index| Error::Dependent { index })?;
    let m = complement.len();
    let rho = |x: &[Rat]| -> Mat {
        let mut r = Mat::zeros(m, m);
        for (j, v) in complement.iter().enumerate() {
            let c = adapted.coords(&g.bracket(x, v)).expect("adapted basis spans 𝔤");
            for i in 0..m {
                r[(i, j)] = c[k + i].clone();
            }
        }
        r
    };
    let operators: Vec<Mat> = h.coords().iter().map(|x| rho(x)).collect();

    // induced action, re-checked: [X, v_j] - sum_i ρ_ij v_i ∈ 𝔥
    let hs = h.subspace(g);
    for (x, r) in h.coords().iter().zip(&operators) {
        for (j, v) in complement.iter().enumerate() {
            let mut w = g.bracket(x, v);
            for (i, vi) in complement.iter().enumerate() {
                let c = &r[(i, j)];
                if c.is_zero() {
                    continue;
                }
                for (wk, vk) in w.iter_mut().zip(vi) {
                    *wk -= c * vk;
                }
            }
            if !hs.contains(&w) {
                return Err(Error::Invariant("induced action is not well defined".into()));
            }
        }
    }
    // ρ([X_i, X_j]) = [ρ(X_i), ρ(X_j)] through the closure certificate
    for (i, j, c) in &h.certificate().brackets {
        let lhs = Mat::combination(c, &operators);
        if lhs != operators[*i].bracket(&operators[*j]) {
            return Err(Error::Invariant(format!("ρ is not a homomorphism on ({i}, {j})")));
        }
    }

    let mut probes = Vec::new();
    if let Ok(a) = standard_a(g) {
        let a_coords: Vec<Coords> = a.iter().filter_map(|x| g.coords(x)).collect();
        let ha = hs.intersect(&Subspace::span(&a_coords, d));
        for (i, x) in ha.basis().iter().enumerate() {
            probes.push((format!("h∩a[{i}]"), rho(x)));
        }
    }
    for (i, r) in operators.iter().enumerate() {
        probes.push((format!("h[{i}]"), r.clone()));
    }
    Ok(QuotientRep { h_basis: h.coords().to_vec(), complement, operators, probes })
}

/// The space of `ρ`-invariant symmetric forms on `𝔤/𝔥`.
#[derive(Clone, Debug)]
pub struct SymSpace {
    dim_quotient: usize,
    basis_forms: Vec<Mat>,
    operators: Vec<Mat>,
    probes: Vec<(String, Mat)>,
}

impl SymSpace {
    /// A space spanned by the given forms with no invariance constraints attached.
    pub fn from_forms(dim_quotient: usize, basis_forms: Vec<Mat>) -> Result<Self> {
        for q in &basis_forms {
            if q.rows() != dim_quotient || !q.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(SymSpace { dim_quotient, basis_forms, operators: Vec::new(), probes: Vec::new() })
    }

    pub fn dim_quotient(&self) -> usize {
        self.dim_quotient
    }

    pub fn dim(&self) -> usize {
        self.basis_forms.len()
    }

    pub fn basis_forms(&self) -> &[Mat] {
        &self.basis_forms
    }

    pub fn operators(&self) -> &[Mat] {
        &self.operators
    }

    pub fn is_invariant(&self, q: &Mat) -> bool {
        is_invariant(&self.operators, q)
    }

    /// Is `q` in the span of the basis forms?
    pub fn contains(&self, q: &Mat) -> bool {
        let vecs: Vec<Coords> = self.basis_forms.iter().map(|f| f.as_slice().to_vec()).collect();
        Subspace::span(&vecs, self.dim_quotient * self.dim_quotient).contains(q.as_slice())
    }
}

/// `ρ(X)ᵀ Q + Q ρ(X) = 0` for every operator.
pub fn is_invariant(operators: &[Mat], q: &Mat) -> bool {
    q.is_symmetric() && operators.iter().all(|r| r.transpose().mul(q).add(&q.mul(r)).is_zero())
}

/// Solves `ρ(X)ᵀ Q + Q ρ(X) = 0` over the `m(m+1)/2` upper-triangular unknowns.
pub fn invariant_sym_forms(qrep: &QuotientRep) -> SymSpace {
    let m = qrep.dim_quotient();
    let idx = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a * m - a * (a + 1) / 2 + b
    };
    let unknowns = m * (m + 1) / 2;
    let mut e = Echelon::new(unknowns);
    'outer: for r in &qrep.operators {
        for i in 0..m {
            for j in i..m {
                // (ρᵀQ + Qρ)_ij = sum_k ρ_ki Q_kj + Q_ik ρ_kj
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..m {
                    if !r[(k, i)].is_zero() {
                        row[idx(k, j)] += &r[(k, i)];
                    }
                    if !r[(k, j)].is_zero() {
                        row[idx(i, k)] += &r[(k, j)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    e.insert(&row);
                    if e.is_full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    let basis_forms: Vec<Mat> = e
        .null_space()
        .into_iter()
        .map(|x| {
            let mut q = Mat::zeros(m, m);
            for a in 0..m {
                for b in a..m {
                    q[(a, b)] = x[idx(a, b)].clone();
                    q[(b, a)] = x[idx(a, b)].clone();
                }
            }
            q
        })
        .collect();
    debug_assert!(basis_forms.iter().all(|q| is_invariant(&qrep.operators, q)));
    SymSpace {
        dim_quotient: m,
        basis_forms,
        operators: qrep.operators.clone(),
        probes: qrep.probes.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictTag {
    Found,
    None,
    Undetermined,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictTag::Found => "found",
            VerdictTag::None => "none",
            VerdictTag::Undetermined => "undetermined",
        })
    }
}

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    /// The quotient has dimension below two.
    Dimension { dim_quotient: usize },
    /// No nonzero invariant form.
    EmptySpace,
    /// One generator; its signature decides.
    Generator { signature: String },
    /// Two generators: the pencil `Q1 + x Q2` with every sign region sampled.
    Pencil { determinant: String, samples: Vec<(String, String)> },
    /// Every pencil member is degenerate.
    DegeneratePencil,
    /// An eigenspace of a hyperbolic 𝔥-element that every invariant form
    /// annihilates; a Minkowski form has no isotropic plane.
    IsotropicSubspace { probe: String, eigenvalue_sign: i32, dim: usize },
    /// A grid point with Lorentz signature.
    Grid { points_tried: usize },
    /// The grid was exhausted without a certificate.
    GridExhausted { points_tried: usize },
}

/// Outcome of the Minkowski search on an invariant-form space.
#[derive(Clone, Debug, Serialize)]
pub struct LorentzVerdict {
    pub tag: VerdictTag,
    pub certificate: Option<Mat>,
    pub signature: Option<Signature>,
    pub reason: Reason,
}

impl LorentzVerdict {
    fn none(reason: Reason) -> Self {
        LorentzVerdict { tag: VerdictTag::None, certificate: None, signature: None, reason }
    }

    fn found(q: Mat, sig: Signature, reason: Reason) -> Self {
        LorentzVerdict { tag: VerdictTag::Found, certificate: Some(q), signature: Some(sig), reason }
    }
}

/// Largest grid denominator and coefficient box used for spaces of dimension three or more.
pub const GRID_DENOMINATORS: [i64; 5] = [1, 2, 4, 8, 16];
pub const GRID_BOX: i64 = 4;
pub const GRID_BUDGET: usize = 50_000;

/// Decides whether `space` contains a form of Minkowski signature.
pub fn lorentz_certificate(space: &SymSpace) -> LorentzVerdict {
    let m = space.dim_quotient;
    if m < 2 {
        return LorentzVerdict::none(Reason::Dimension { dim_quotient: m });
    }
    let verdict = match space.dim() {
        0 => LorentzVerdict::none(Reason::EmptySpace),
        1 => single(&space.basis_forms[0]),
        2 => pencil(&space.basis_forms[0], &space.basis_forms[1]),
        _ => isotropic(space).unwrap_or_else(|| grid(space)),
    };
    if let Some(q) = &verdict.certificate {
        debug_assert!(space.operators.is_empty() || space.is_invariant(q));
        debug_assert!(signature(q).map(|s| s.is_lorentz()).unwrap_or(false));
    }
    verdict
}

fn sig_of(q: &Mat) -> Signature {
    signature(q).expect("invariant forms are symmetric")
}

fn single(q: &Mat) -> LorentzVerdict {
    let s = sig_of(q);
    let reason = Reason::Generator { signature: s.to_string() };
    if s.is_lorentz() {
        LorentzVerdict::found(q.clone(), s, reason)
    } else {
        LorentzVerdict::none(reason)
    }
}

/// `det(Q1 + x Q2)` by interpolation at `m + 1` integer nodes.
pub fn pencil_determinant(q1: &Mat, q2: &Mat) -> Poly {
    let m = q1.rows();
    let points: Vec<(Rat, Rat)> = (0..=m as i64)
        .map(|x| {
            let r = Rat::from_int(x);
            (r.clone(), crate::linalg::determinant(&q1.add(&q2.scale(&r))))
        })
        .collect();
    Poly::interpolate(&points)
}

/// Signature is constant between consecutive roots of `det(Q1 + x Q2)`, and
/// every nonzero pencil member is a positive multiple of `±(Q1 + x Q2)` or `±Q2`.
fn pencil(q1: &Mat, q2: &Mat) -> LorentzVerdict {
    let p = pencil_determinant(q1, q2);
    if p.is_zero() {
        return LorentzVerdict::none(Reason::DegeneratePencil);
    }
    let intervals = p.isolate_real_roots();
    let mut xs: Vec<Rat> = Vec::new();
    match intervals.first() {
        Some((lo, _)) => xs.push(lo.clone()),
        None => xs.push(Rat::zero()),
    }
    xs.extend(intervals.iter().map(|(_, hi)| hi.clone()));
    let mut samples = Vec::new();
    let mut hit = None;
    for x in &xs {
        let q = q1.add(&q2.scale(x));
        let s = sig_of(&q);
        samples.push((x.to_string(), s.to_string()));
        if hit.is_none() && s.is_lorentz() {
            hit = Some((q, s));
        }
    }
    let s2 = sig_of(q2);
    samples.push(("inf".into(), s2.to_string()));
    if hit.is_none() && s2.is_lorentz() {
        hit = Some((q2.clone(), s2));
    }
    let reason = Reason::Pencil { determinant: p.to_string(), samples };
    match hit {
        Some((q, s)) => LorentzVerdict::found(q, s, reason),
        None => LorentzVerdict::none(reason),
    }
}

/// Totally isotropic eigenspaces of diagonalizable probes with small integer spectrum.
///
/// If `ρ(X) v = λ v` and `ρ(X) w = μ w` then `(λ + μ) Q(v, w) = 0` for every
/// invariant `Q`, so the sum of the positive eigenspaces is isotropic.
pub fn isotropic_subspaces(space: &SymSpace) -> Vec<(String, i32, Vec<Coords>)> {
    let m = space.dim_quotient;
    let mut out = Vec::new();
    for (label, r) in &space.probes {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut total = 0;
        for c in -4i64..=4 {
            let shifted = r.sub(&Mat::identity(m).scale(&Rat::from_int(c)));
            let ker: Vec<Coords> = kernel(&shifted).into_iter().map(|v| v.col(0)).collect();
            total += ker.len();
            match c.signum() {
                1 => pos.extend(ker),
                -1 => neg.extend(ker),
                _ => {}
            }
        }
        if total != m {
            continue;
        }
        out.push((label.clone(), 1, pos));
        out.push((label.clone(), -1, neg));
    }
    out
}

fn isotropic(space: &SymSpace) -> Option<LorentzVerdict> {
    for (probe, sign, vecs) in isotropic_subspaces(space) {
        if vecs.len() < 2 {
            continue;
        }
        let all_isotropic = space.basis_forms.iter().all(|q| {
            vecs.iter().all(|v| vecs.iter().all(|w| crate::signature::bilinear(q, v, w).is_zero()))
        });
        if all_isotropic {
            return Some(LorentzVerdict::none(Reason::IsotropicSubspace {
                probe,
                eigenvalue_sign: sign,
                dim: vecs.len(),
            }));
        }
    }
    None
}

fn grid(space: &SymSpace) -> LorentzVerdict {
    let k = space.dim();
    let mut tried = 0;
    for &den in &GRID_DENOMINATORS {
        let bound = GRID_BOX * den;
        let mut js = vec![-bound; k];
        loop {
            let fresh = js.iter().any(|&j| j != 0) && (den == 1 || js.iter().any(|&j| j % 2 != 0));
            if fresh {
                if tried >= GRID_BUDGET {
                    return LorentzVerdict {
                        tag: VerdictTag::Undetermined,
                        certificate: None,
                        signature: None,
                        reason: Reason::GridExhausted { points_tried: tried },
                    };
                }
                tried += 1;
                let coeffs: Vec<Rat> = js.iter().map(|&j| Rat::new(j, den)).collect();
                let q = Mat::combination(&coeffs, &space.basis_forms);
                let s = sig_of(&q);
                if s.is_lorentz() {
                    return LorentzVerdict::found(q, s, Reason::Grid { points_tried: tried });
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                if js[pos] < bound {
                    js[pos] += 1;
                    break;
                }
                js[pos] = -bound;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    LorentzVerdict {
        tag: VerdictTag::Undetermined,
        certificate: None,
        signature: None,
        reason: Reason::GridExhausted { points_tried: tried },
    }
}

/// Whether `[𝔤, u] ⊆ 𝔥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Regular,
    Degenerate,
}

/// `V = {v : (ad u)^2 v ∈ 𝔥}` and `W = 𝔥 + (ad u)^2 𝔤`.
#[derive(Clone, Debug)]
pub struct VwSubspaces {
    pub v: Subspace,
    pub w: Subspace,
    pub h_dim: usize,
    pub branch: Branch,
}

impl VwSubspaces {
    pub fn codim_v(&self) -> usize {
        self.v.ambient_len() - self.v.dim()
    }

    pub fn dim_w_mod_h(&self) -> usize {
        self.w.dim() - self.h_dim
    }
}

pub fn vw_subspaces(g: &LieAlgebra, h: &Subalgebra, u: &Mat) -> Result<VwSubspaces> {
    let uc = g.coords_indexed(u, 0)?;
    if !h.is_normalized_by(g, &uc) {
        return Err(Error::NotNormalizing);
    }
    let d = g.dim();
    let hs = h.subspace(g);
    let ad = g.ad(&uc);
    let ad2 = ad.mul(&ad);
    let whole = Subspace::whole(d);
    let w = hs.sum(&whole.image(&ad2));
    // (ad u)^2 v = sum t_i h_i  <=>  [ad2 | -H] (v, t) = 0
    let k = hs.dim();
    let mut stacked = Mat::zeros(d, d + k);
    for i in 0..d {
        for j in 0..d {
            stacked[(i, j)] = ad2[(i, j)].clone();
        }
        for (j, hv) in hs.basis().iter().enumerate() {
            stacked[(i, d + j)] = -&hv[i];
        }
    }
    let pre: Vec<Coords> = kernel(&stacked).into_iter().map(|x| x.col(0)[..d].to_vec()).collect();
    let v = Subspace::span(&pre, d);
    let g_u = whole.image(&ad);
    let branch = if hs.contains_space(&g_u) { Branch::Degenerate } else { Branch::Regular };
    debug_assert!(v.contains_space(&hs));
    debug_assert!(v.basis().iter().all(|x| hs.contains(&apply(&ad2, x))));
    Ok(VwSubspaces { v, w, h_dim: k, branch })
}
