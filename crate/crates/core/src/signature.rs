//! Congruence diagonalization and inertia of symmetric forms.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rational::Rat;

/// Inertia `(n_pos, n_neg, n_zero)` of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn new(n_pos: usize, n_neg: usize, n_zero: usize) -> Self {
        Signature { n_pos, n_neg, n_zero }
    }

    pub fn dim(&self) -> usize {
        self.n_pos + self.n_neg + self.n_zero
    }

    /// Minkowski up to an overall sign: nondegenerate, dimension at least two,
    /// and exactly one direction of one of the two signs.
    pub fn is_lorentz(&self) -> bool {
        self.dim() >= 2 && self.n_zero == 0 && (self.n_neg == 1 || self.n_pos == 1)
    }

    pub fn negated(&self) -> Self {
        Signature { n_pos: self.n_neg, n_neg: self.n_pos, n_zero: self.n_zero }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_pos, self.n_neg, self.n_zero)
    }
}

/// Returns `(d, p)` with `p` invertible, `d` diagonal and `pᵀ s p = d`.
///
/// A zero pivot `s[i][i]` is handled by swapping in a later index with a
/// nonzero diagonal entry coupled to `i`, or, when the coupled index also has
/// a zero diagonal, by adding row and column `j` to row and column `i`,
/// which makes the new pivot `2 s[i][j]`.
pub fn congruent_diagonalize(s: &Mat) -> Result<(Mat, Mat)> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    let mut p = Mat::identity(n);
    for i in 0..n {
        if a[(i, i)].is_zero() {
            let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) else {
                continue;
            };
            if !a[(j, j)].is_zero() {
                swap_index(&mut a, &mut p, i, j);
            } else {
                add_index(&mut a, &mut p, i, j);
            }
        }
        let piv = a[(i, i)].clone();
        debug_assert!(!piv.is_zero());
        let inv = piv.recip();
        for j in i + 1..n {
            if a[(i, j)].is_zero() {
                continue;
            }
            // column_j -= f column_i, row_j -= f row_i
            let f = &a[(i, j)] * &inv;
            for k in 0..n {
                let t = &f * &a[(k, i)];
                a[(k, j)] -= t;
            }
            for k in 0..n {
                let t = &f * &a[(i, k)];
                a[(j, k)] -= t;
            }
            for k in 0..n {
                let t = &f * &p[(k, i)];
                p[(k, j)] -= t;
            }
        }
    }
    debug_assert!((0..n).all(|i| (0..n).all(|j| i == j || a[(i, j)].is_zero())));
    Ok((a, p))
}

fn swap_index(a: &mut Mat, p: &mut Mat, i: usize, j: usize) {
    let n = a.rows();
    for k in 0..n {
        let t = a[(i, k)].clone();
        a[(i, k)] = a[(j, k)].clone();
        a[(j, k)] = t;
    }
    for k in 0..n {
        let t = a[(k, i)].clone();
        a[(k, i)] = a[(k, j)].clone();
        a[(k, j)] = t;
        let t = p[(k, i)].clone();
        p[(k, i)] = p[(k, j)].clone();
        p[(k, j)] = t;
    }
}

fn add_index(a: &mut Mat, p: &mut Mat, i: usize, j: usize) {
    let n = a.rows();
    for k in 0..n {
        let t = a[(j, k)].clone();
        a[(i, k)] += t;
    }
    for k in 0..n {
        let t = a[(k, j)].clone();
        a[(k, i)] += t;
        let t = p[(k, j)].clone();
        p[(k, i)] += t;
    }
}

/// Inertia of a symmetric matrix, via [`congruent_diagonalize`].
pub fn signature(s: &Mat) -> Result<Signature> {
    let (d, _) = congruent_diagonalize(s)?;
    let mut sig = Signature::new(0, 0, 0);
    for i in 0..d.rows() {
        match d[(i, i)].signum() {
            1 => sig.n_pos += 1,
            -1 => sig.n_neg += 1,
            _ => sig.n_zero += 1,
        }
    }
    Ok(sig)
}

/// `vᵀ s w` for column data given as slices.
pub fn bilinear(s: &Mat, v: &[Rat], w: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, wj) in w.iter().enumerate() {
            let x = &s[(i, j)];
            if !wj.is_zero() && !x.is_zero() {
                acc += vi * &(x * wj);
            }
        }
    }
    acc
}
