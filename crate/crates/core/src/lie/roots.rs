//! Restricted roots, Iwasawa data and Weyl reflections for so(p,q).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Coordinates, Echelon};
use crate::matrix::Mat;
use crate::rational::Rat;

use super::algebra::{Coords, LieAlgebra};
use super::subspace::{apply, Subspace};

/// A joint ad-eigenvalue functional, recorded by its values on an 𝔞-basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Root {
        self.scale(-1)
    }

    pub fn norm2(&self) -> i64 {
        self.0.iter().map(|a| a * a).sum()
    }

    /// Positive when the last nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Joint eigenspaces of commuting `ad`-operators over an integer box.
///
/// Returns `(eigenvalues, basis)` pairs for every nonempty joint eigenspace
/// with all eigenvalues in `[-bound, bound]`, and fails unless the
/// eigenspaces exhaust the whole algebra.
pub fn joint_eigenspaces(
    g: &LieAlgebra,
    elements: &[Coords],
    bound: i64,
) -> Result<Vec<(Root, Vec<Coords>)>> {
    let d = g.dim();
    let ads: Vec<Mat> = elements.iter().map(|x| g.ad(x)).collect();
    let r = elements.len();
    // recursive refinement: eigenspaces of the first operator, then split each
    let mut cells: Vec<(Vec<i64>, Vec<Coords>)> = vec![(Vec::new(), Subspace::whole(d).basis().to_vec())];
    for ad in &ads {
        let mut next = Vec::new();
        for (vals, space) in &cells {
            for c in -bound..=bound {
                let sub = eigen_in(ad, space, &Rat::from_int(c), d);
                if !sub.is_empty() {
                    let mut v = vals.clone();
                    v.push(c);
                    next.push((v, sub));
                }
            }
        }
        cells = next;
    }
    let total: usize = cells.iter().map(|(_, s)| s.len()).sum();
    if total != d {
        return Err(Error::Decomposition(format!(
            "joint eigenspaces with |c| <= {bound} span {total} of {d} dimensions"
        )));
    }
    let mut e = Echelon::new(d);
    for (_, s) in &cells {
        for v in s {
            if !e.insert(v) {
                return Err(Error::Decomposition("eigenspaces are not independent".into()));
            }
        }
    }
    debug_assert!(cells.iter().all(|(v, _)| v.len() == r));
    Ok(cells.into_iter().map(|(v, s)| (Root(v), s)).collect())
}

/// `{x in span(space) : ad x = c x}`, as coordinate vectors.
fn eigen_in(ad: &Mat, space: &[Coords], c: &Rat, d: usize) -> Vec<Coords> {
    if space.is_empty() {
        return Vec::new();
    }
    // (ad - c) (sum s_i v_i) = 0
    let imgs: Vec<Coords> = space
        .iter()
        .map(|v| {
            let mut w = apply(ad, v);
            for (wi, vi) in w.iter_mut().zip(v) {
                if !vi.is_zero() {
                    *wi -= c * vi;
                }
            }
            w
        })
        .collect();
    let mut e = Echelon::new(space.len());
    for pos in 0..d {
        let row: Vec<Rat> = imgs.iter().map(|w| w[pos].clone()).collect();
        if row.iter().any(|x| !x.is_zero()) {
            e.insert(&row);
        }
    }
    e.null_space()
        .into_iter()
        .map(|s| crate::linalg::combine(&s, space, d))
        .collect()
}

/// Restricted-root decomposition `𝔤 = 𝔤_0 ⊕ ⊕ 𝔤_φ` with respect to an 𝔞-basis.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    a_basis: Vec<Coords>,
    spaces: BTreeMap<Root, Vec<Coords>>,
    zero_space: Vec<Coords>,
    simple: Vec<Root>,
    adapted: Coordinates,
    // (root, start, end) ranges into the adapted basis; zero space first
    ranges: Vec<(Root, usize, usize)>,
}

impl RootDecomposition {
    pub fn rank(&self) -> usize {
        self.a_basis.len()
    }

    pub fn a_basis(&self) -> &[Coords] {
        &self.a_basis
    }

    /// Nonzero roots in increasing order.
    pub fn roots(&self) -> Vec<Root> {
        self.spaces.keys().cloned().collect()
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.spaces.keys().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.spaces.contains_key(r)
    }

    pub fn multiplicity(&self, r: &Root) -> usize {
        self.spaces.get(r).map_or(0, Vec::len)
    }

    /// Basis of `𝔤_φ`; the zero functional gives `𝔤_0`, a non-root gives nothing.
    pub fn space(&self, r: &Root) -> &[Coords] {
        if r.is_zero() {
            return &self.zero_space;
        }
        self.spaces.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn subspace(&self, roots: &[Root], len: usize) -> Subspace {
        let all: Vec<Coords> = roots.iter().flat_map(|r| self.space(r).iter().cloned()).collect();
        Subspace::span(&all, len)
    }

    pub fn zero_space(&self) -> &[Coords] {
        &self.zero_space
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// For a B2 system: the long simple root.
    pub fn alpha(&self) -> Option<&Root> {
        (self.simple.len() == 2).then(|| &self.simple[0])
    }

    /// For a B2 system: the short simple root.
    pub fn beta(&self) -> Option<&Root> {
        (self.simple.len() == 2).then(|| &self.simple[1])
    }

    /// Projection onto `⊕_{φ in roots} 𝔤_φ` along the other root spaces.
    pub fn project(&self, x: &[Rat], roots: &[Root]) -> Coords {
        let c = self.adapted.coords(x).expect("adapted basis spans 𝔤");
        let mut keep = vec![Rat::zero(); c.len()];
        for (r, s, e) in &self.ranges {
            if roots.contains(r) {
                keep[*s..*e].clone_from_slice(&c[*s..*e]);
            }
        }
        crate::linalg::combine(&keep, self.adapted.vectors(), x.len())
    }
}

/// Decomposes `g` under the joint action of `a_basis`, searching eigenvalues in `[-2, 2]`.
pub fn root_decomposition(g: &LieAlgebra, a_basis: &[Mat]) -> Result<RootDecomposition> {
    let d = g.dim();
    let a: Vec<Coords> = a_basis
        .iter()
        .enumerate()
        .map(|(i, m)| g.coords_indexed(m, i))
        .collect::<Result<_>>()?;
    if a.is_empty() {
        return Err(Error::Decomposition("empty 𝔞-basis".into()));
    }
    for x in &a {
        for y in &a {
            if g.bracket(x, y).iter().any(|c| !c.is_zero()) {
                return Err(Error::Decomposition("𝔞-basis is not abelian".into()));
            }
        }
    }
    let cells = joint_eigenspaces(g, &a, 2)?;
    let rank = a.len();
    let mut spaces = BTreeMap::new();
    let mut zero_space = Vec::new();
    for (root, basis) in cells {
        if root.is_zero() {
            zero_space = basis;
        } else {
            spaces.insert(root, basis);
        }
    }
    // [a, X] = φ(a) X, re-checked exactly
    for (root, basis) in &spaces {
        for x in basis {
            for (k, ak) in a.iter().enumerate() {
                let lhs = g.bracket(ak, x);
                let c = Rat::from_int(root.0[k]);
                if lhs.iter().zip(x).any(|(l, xi)| *l != &c * xi) {
                    return Err(Error::Decomposition(format!("eigen relation fails for {root}")));
                }
            }
        }
    }
    let positive: Vec<Root> = spaces.keys().filter(|r| r.is_positive()).cloned().collect();
    let mut simple: Vec<Root> = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|x| positive.iter().any(|y| &x.add(y) == *r))
        })
        .cloned()
        .collect();
    if simple.len() != rank {
        return Err(Error::Decomposition(format!(
            "found {} simple roots for rank {rank}",
            simple.len()
        )));
    }
    // long simple root first
    simple.sort_by(|x, y| y.norm2().cmp(&x.norm2()).then(x.cmp(y)));
    let mut adapted_vecs = zero_space.clone();
    let mut ranges = vec![(Root::zero(rank), 0, zero_space.len())];
    for (root, basis) in &spaces {
        let s = adapted_vecs.len();
        adapted_vecs.extend(basis.iter().cloned());
        ranges.push((root.clone(), s, adapted_vecs.len()));
    }
    let adapted = Coordinates::new(adapted_vecs, d)
        .map_err(|_| Error::Decomposition("root spaces are dependent".into()))?;
    Ok(RootDecomposition { a_basis: a, spaces, zero_space, simple, adapted, ranges })
}

/// Iwasawa data `𝔤 = 𝔨 ⊕ 𝔞 ⊕ 𝔫` together with `𝔪 = Z_𝔨(𝔞)` and the roots.
#[derive(Clone, Debug)]
pub struct Iwasawa {
    pub k: Subspace,
    pub a: Subspace,
    pub n: Subspace,
    pub m: Subspace,
    pub roots: RootDecomposition,
}

impl Iwasawa {
    /// `𝔫⁻`, the sum of the negative root spaces.
    pub fn n_minus(&self, g: &LieAlgebra) -> Subspace {
        let neg: Vec<Root> = self.roots.positive_roots().iter().map(Root::neg).collect();
        self.roots.subspace(&neg, g.dim())
    }

    /// The minimal parabolic `𝔪 + 𝔞 + 𝔫`.
    pub fn minimal_parabolic(&self) -> Subspace {
        self.m.sum(&self.a).sum(&self.n)
    }
}

/// The standard split Cartan subspace: `E_{k,p+k} + E_{p+k,k}` for `k < p`.
pub fn standard_a(g: &LieAlgebra) -> Result<Vec<Mat>> {
    let (p, q) = (g.p(), g.q());
    if p == 0 || p > q {
        return Err(Error::Unsupported {
            p,
            q,
            reason: "the standard 𝔞 needs 1 <= p <= q".into(),
        });
    }
    Ok((0..p).map(|k| g.basis()[g.pair_index(k, p + k)].clone()).collect())
}

pub fn iwasawa(g: &LieAlgebra) -> Result<Iwasawa> {
    let d = g.dim();
    let a_mats = standard_a(g)?;
    let roots = root_decomposition(g, &a_mats)?;
    let k_basis: Vec<Coords> = (0..d).filter(|&i| g.is_compact_basis(i)).map(|i| g.unit(i)).collect();
    let k = Subspace::span(&k_basis, d);
    let a = Subspace::span(roots.a_basis(), d);
    let n = roots.subspace(&roots.positive_roots(), d);
    let g0 = Subspace::span(roots.zero_space(), d);
    let m = g0.intersect(&k);

    if k.dim() + a.dim() + n.dim() != d || k.sum(&a).sum(&n).dim() != d {
        return Err(Error::Invariant("𝔨 + 𝔞 + 𝔫 is not direct and spanning".into()));
    }
    for x in a.basis() {
        if g.to_matrix(x).transpose() != g.to_matrix(x) {
            return Err(Error::Invariant("𝔞 is not in the -1 eigenspace of the Cartan involution".into()));
        }
        for y in n.basis() {
            if !n.contains(&g.bracket(x, y)) {
                return Err(Error::Invariant("𝔞 does not normalize 𝔫".into()));
            }
        }
        for y in m.basis() {
            if g.bracket(x, y).iter().any(|c| !c.is_zero()) {
                return Err(Error::Invariant("𝔪 does not centralize 𝔞".into()));
            }
        }
    }
    for x in n.basis() {
        for y in n.basis() {
            if !n.contains(&g.bracket(x, y)) {
                return Err(Error::Invariant("𝔫 is not a subalgebra".into()));
            }
        }
    }
    if !k.contains_space(&m) {
        return Err(Error::Invariant("𝔪 is not inside 𝔨".into()));
    }
    Ok(Iwasawa { k, a, n, m, roots })
}

/// Which simple reflection of the B2 system of so(2,n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reflection {
    Alpha,
    Beta,
}

/// An orthogonal matrix in O(2,n) whose conjugation action normalizes 𝔞 and
/// induces the simple reflection on the restricted roots.
///
/// With `α` the long simple root `e2 - e1` and `β` the short one `e1`, the
/// reflection in `α` swaps the two 𝔞-directions (coordinates 0↔1 and 2↔3),
/// and the reflection in `β` negates the first one (coordinate 2, together
/// with coordinate 4 to stay in SO(2,n)).
pub fn weyl_reflection(g: &LieAlgebra, which: Reflection) -> Result<Mat> {
    let (p, q) = (g.p(), g.q());
    if p != 2 || q < 3 {
        return Err(Error::Unsupported { p, q, reason: "Weyl reflections are provided for so(2,n), n >= 3".into() });
    }
    let n = g.ambient_dim();
    let mut w = Mat::zeros(n, n);
    match which {
        Reflection::Alpha => {
            let perm = |i: usize| match i {
                0 => 1,
                1 => 0,
                2 => 3,
                3 => 2,
                other => other,
            };
            for i in 0..n {
                w[(perm(i), i)] = Rat::one();
            }
        }
        Reflection::Beta => {
            for i in 0..n {
                w[(i, i)] = if i == 2 || i == 4 { Rat::from_int(-1) } else { Rat::one() };
            }
        }
    }
    Ok(w)
}

/// `Ad(w) x = w x w⁻¹` for `w` orthogonal (`w⁻¹ = wᵀ`).
pub fn conjugate(w: &Mat, x: &Mat) -> Mat {
    w.mul(x).mul(&w.transpose())
}

/// The root of `𝔤_φ` after conjugation by `w`, determined from a nonzero vector.
pub fn root_of(g: &LieAlgebra, roots: &RootDecomposition, x: &Mat) -> Option<Root> {
    let c = g.coords(x)?;
    if c.iter().all(Rat::is_zero) {
        return None;
    }
    let vals: Option<Vec<i64>> = roots
        .a_basis()
        .iter()
        .map(|a| {
            let br = g.bracket(a, &c);
            let k = c.iter().position(|v| !v.is_zero())?;
            let lambda = &br[k] / &c[k];
            let scaled: Vec<Rat> = c.iter().map(|v| &lambda * v).collect();
            if scaled != br {
                return None;
            }
            lambda.to_i64()
        })
        .collect();
    vals.map(Root)
}
