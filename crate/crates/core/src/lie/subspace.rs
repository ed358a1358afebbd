use crate::linalg::{intersection, span_basis, Coordinates, Echelon};
use crate::matrix::Mat;
use crate::rational::Rat;

use super::algebra::{Coords, LieAlgebra};

/// A linear subspace of an algebra, held as a basis of coordinate vectors.
#[derive(Clone, Debug)]
pub struct Subspace {
    len: usize,
    basis: Vec<Coords>,
    echelon: Echelon,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors of length `len`.
    pub fn span(vectors: &[Coords], len: usize) -> Self {
        let mut echelon = Echelon::new(len);
        let basis = vectors.iter().filter(|v| echelon.insert(v)).cloned().collect();
        Subspace { len, basis, echelon }
    }

    pub fn zero(len: usize) -> Self {
        Subspace::span(&[], len)
    }

    pub fn whole(len: usize) -> Self {
        let units: Vec<Coords> = (0..len)
            .map(|k| (0..len).map(|i| if i == k { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Subspace::span(&units, len)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[Coords] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<Coords> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(&all, self.len)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        Subspace::span(&intersection(&self.basis, &other.basis, self.len), self.len)
    }

    /// Image of the subspace under a linear map given as a square matrix.
    pub fn image(&self, map: &Mat) -> Subspace {
        let imgs: Vec<Coords> = self.basis.iter().map(|v| apply(map, v)).collect();
        Subspace::span(&imgs, map.rows())
    }

    pub fn coordinates(&self) -> Coordinates {
        Coordinates::new(self.basis.clone(), self.len).expect("a subspace basis is independent")
    }

    pub fn matrices(&self, g: &LieAlgebra) -> Vec<Mat> {
        self.basis.iter().map(|c| g.to_matrix(c)).collect()
    }
}

/// `m v` for a column given as a slice.
pub fn apply(m: &Mat, v: &[Rat]) -> Coords {
    assert_eq!(m.cols(), v.len());
    let mut out = vec![Rat::zero(); m.rows()];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (i, o) in out.iter_mut().enumerate() {
            let a = &m[(i, j)];
            if !a.is_zero() {
                *o += a * x;
            }
        }
    }
    out
}

/// `[A, B] = span{[a, b]}` for subspaces of `g`.
pub fn bracket_spaces(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            out.push(g.bracket(x, y));
        }
    }
    Subspace::span(&out, g.dim())
}

/// `(ad u)^2 S`
pub fn ad_squared_image(g: &LieAlgebra, u: &[Rat], s: &Subspace) -> Subspace {
    let imgs: Vec<Coords> = s.basis().iter().map(|v| g.bracket(u, &g.bracket(u, v))).collect();
    Subspace::span(&imgs, g.dim())
}

/// Re-extracts an independent family from vectors, first-come order.
pub fn independent(vectors: &[Coords], len: usize) -> Vec<Coords> {
    span_basis(vectors, len)
}
