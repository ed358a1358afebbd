use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rational::Rat;

/// Coordinates of an element with respect to the standard basis of an algebra.
pub type Coords = Vec<Rat>;

type Sparse = Vec<(usize, Rat)>;

/// The matrix Lie algebra so(p,q) preserving `J = diag(-1_p, +1_q)`.
///
/// The basis is indexed by pairs `i < j` in lexicographic order:
/// `E_ij - E_ji` when both indices are on the same side of the block
/// boundary, `E_ij + E_ji` when they straddle it. An element's coordinates
/// are therefore just its strictly upper-triangular entries.
#[derive(Clone)]
pub struct LieAlgebra {
    p: usize,
    q: usize,
    pairs: Vec<(usize, usize)>,
    pair_index: Vec<Vec<usize>>,
    basis: Vec<Mat>,
    // structure[i][j] = sparse expansion of [b_i, b_j]
    structure: Vec<Vec<Sparse>>,
    j_form: Mat,
}

impl LieAlgebra {
    pub fn so(p: usize, q: usize) -> Result<Self> {
        make_so(p, q)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Size of the defining matrices, `p + q`.
    pub fn ambient_dim(&self) -> usize {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn j_form(&self) -> &Mat {
        &self.j_form
    }

    pub fn label(&self) -> String {
        format!("so({},{})", self.p, self.q)
    }

    /// The basis index of the pair `(i, j)`, `i < j`.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        assert!(i < j && j < self.ambient_dim());
        self.pair_index[i][j]
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// Whether basis element `k` is skew-symmetric (lies in the fixed points of `X -> -Xᵀ`).
    pub fn is_compact_basis(&self, k: usize) -> bool {
        let (i, j) = self.pairs[k];
        (i < self.p) == (j < self.p)
    }

    pub fn unit(&self, k: usize) -> Coords {
        let mut v = vec![Rat::zero(); self.dim()];
        v[k] = Rat::one();
        v
    }

    pub fn zero_element(&self) -> Coords {
        vec![Rat::zero(); self.dim()]
    }

    /// Does the matrix satisfy `XᵀJ + JX = 0`?
    pub fn contains(&self, x: &Mat) -> bool {
        self.coords(x).is_some()
    }

    /// Coordinates of a matrix in the standard basis, or `None` if it is not in the algebra.
    pub fn coords(&self, x: &Mat) -> Option<Coords> {
        let n = self.ambient_dim();
        if x.rows() != n || x.cols() != n {
            return None;
        }
        if (0..n).any(|i| !x[(i, i)].is_zero()) {
            return None;
        }
        let mut c = Vec::with_capacity(self.dim());
        for &(i, j) in &self.pairs {
            let up = &x[(i, j)];
            let low = &x[(j, i)];
            let ok = if (i < self.p) == (j < self.p) { *low == -up } else { low == up };
            if !ok {
                return None;
            }
            c.push(up.clone());
        }
        Some(c)
    }

    /// Like [`coords`](Self::coords) but reports the offending index on failure.
    pub fn coords_indexed(&self, x: &Mat, index: usize) -> Result<Coords> {
        self.coords(x).ok_or(Error::NotInAlgebra { index })
    }

    pub fn to_matrix(&self, c: &[Rat]) -> Mat {
        assert_eq!(c.len(), self.dim());
        let n = self.ambient_dim();
        let mut m = Mat::zeros(n, n);
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if c[k].is_zero() {
                continue;
            }
            m[(i, j)] = c[k].clone();
            m[(j, i)] = if self.is_compact_basis(k) { -&c[k] } else { c[k].clone() };
        }
        m
    }

    /// `s_{ij}^k`, the coefficient of `b_k` in `[b_i, b_j]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rat {
        self.structure[i][j]
            .iter()
            .find(|(idx, _)| *idx == k)
            .map_or_else(Rat::zero, |(_, c)| c.clone())
    }

    /// Nonzero structure constants of `[b_i, b_j]`.
    pub fn bracket_of_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.structure[i][j]
    }

    /// Lie bracket in coordinates, via the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Coords {
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in &self.structure[i][j] {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    pub fn bracket_mat(&self, x: &Mat, y: &Mat) -> Mat {
        x.bracket(y)
    }

    /// Matrix of `ad x` in the standard basis (column `j` is `[x, b_j]`).
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.structure[i][j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// `ad x` applied to `y`, i.e. `[x, y]`; alias kept for readability at call sites.
    pub fn ad_apply(&self, x: &[Rat], y: &[Rat]) -> Coords {
        self.bracket(x, y)
    }

    /// Killing form `B(X, Y) = tr(ad X ad Y)` on the standard basis, computed
    /// from the structure constants and checked for ad-invariance.
    pub fn killing_form(&self) -> Result<Mat> {
        let d = self.dim();
        let mut b = Mat::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                // tr(ad_i ad_j) = sum_{l,k} s_{il}^k s_{jk}^l
                let mut acc = Rat::zero();
                for l in 0..d {
                    for (k, c) in &self.structure[i][l] {
                        for (l2, c2) in &self.structure[j][*k] {
                            if *l2 == l {
                                acc += c * c2;
                            }
                        }
                    }
                }
                b[(i, j)] = acc.clone();
                b[(j, i)] = acc;
            }
        }
        // ad_zᵀ B + B ad_z = 0 for every basis z
        for z in 0..d {
            for x in 0..d {
                for y in x..d {
                    let mut r = Rat::zero();
                    for (k, c) in &self.structure[z][x] {
                        r += c * &b[(*k, y)];
                    }
                    for (k, c) in &self.structure[z][y] {
                        r += c * &b[(x, *k)];
                    }
                    if !r.is_zero() {
                        return Err(Error::Invariant(format!(
                            "Killing form not ad-invariant at ({z},{x},{y})"
                        )));
                    }
                }
            }
        }
        Ok(b)
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`
    pub fn jacobi_residual(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Coords {
        let a = self.bracket(x, &self.bracket(y, z));
        let b = self.bracket(y, &self.bracket(z, x));
        let c = self.bracket(z, &self.bracket(x, y));
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.label(), self.dim())
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}

impl Eq for LieAlgebra {}

/// Builds so(p,q) with its standard basis and verified structure constants.
pub fn make_so(p: usize, q: usize) -> Result<LieAlgebra> {
    let n = p + q;
    if n < 2 {
        return Err(Error::InvalidParams(format!("so({p},{q}) needs p + q >= 2")));
    }
    let mut pairs = Vec::new();
    let mut pair_index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            pair_index[i][j] = pairs.len();
            pairs.push((i, j));
        }
    }
    let mut j_form = Mat::identity(n);
    for i in 0..p {
        j_form[(i, i)] = Rat::from_int(-1);
    }
    let basis: Vec<Mat> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut m = Mat::unit(n, i, j);
            m[(j, i)] = if (i < p) == (j < p) { Rat::from_int(-1) } else { Rat::one() };
            m
        })
        .collect();
    let mut g = LieAlgebra { p, q, pairs, pair_index, basis, structure: Vec::new(), j_form };
    for (k, b) in g.basis.iter().enumerate() {
        let invariant = b.transpose().mul(&g.j_form).add(&g.j_form.mul(b));
        if !invariant.is_zero() {
            return Err(Error::Invariant(format!("basis element {k} does not preserve J")));
        }
    }
    let d = g.basis.len();
    let mut structure = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let br = g.basis[i].bracket(&g.basis[j]);
            let c = g.coords(&br).ok_or_else(|| {
                Error::Invariant(format!("[b{i}, b{j}] does not expand in the basis"))
            })?;
            if g.to_matrix(&c) != br {
                return Err(Error::Invariant(format!("expansion of [b{i}, b{j}] is inexact")));
            }
            let sparse: Sparse =
                c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            structure[j][i] = sparse.iter().map(|(k, x)| (*k, -x)).collect();
            structure[i][j] = sparse;
        }
    }
    g.structure = structure;
    Ok(g)
}
