//! Exact Gaussian elimination: rank, kernels, linear solves, coordinates.

use crate::matrix::Mat;
use crate::rational::Rat;

type SparseRow = Vec<(usize, Rat)>;

/// Incrementally built row-echelon form over the rationals.
///
/// Rows are reduced against the stored pivots as they arrive, so the
/// structure doubles as a span-membership oracle and a rank counter.
/// Stored rows are sparse, have a leading one at their pivot, and vanish on
/// every pivot column that existed when they were inserted.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<(usize, SparseRow)>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Reduces `v` against the current rows, returning the residual.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    fn reduce_in_place(&self, w: &mut [Rat]) {
        // stored rows start at their pivot, so one left-to-right sweep suffices
        for c in 0..self.cols {
            if w[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = w[c].clone();
                for (j, x) in &self.rows[r].1 {
                    w[*j] -= &f * x;
                }
                debug_assert!(w[c].is_zero());
            }
        }
    }

    /// Adds a row. Returns `true` if it was independent of the previous rows.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let sparse: SparseRow =
            w.into_iter().enumerate().skip(p).filter(|(_, x)| !x.is_zero()).collect();
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push((p, sparse));
        true
    }

    /// Inserts a sparse row given as `(column, value)` pairs.
    pub fn insert_sparse(&mut self, entries: &[(usize, Rat)]) -> bool {
        let mut v = vec![Rat::zero(); self.cols];
        for (j, x) in entries {
            v[*j] += x;
        }
        self.insert(&v)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Reduced row-echelon form: `(pivot, dense row)` sorted by pivot.
    pub fn rref(&self) -> Vec<(usize, Vec<Rat>)> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].0));
        let mut done: Vec<Option<Vec<Rat>>> = vec![None; self.rows.len()];
        for &r in &order {
            let (p, sparse) = &self.rows[r];
            let mut w = vec![Rat::zero(); self.cols];
            for (j, x) in sparse {
                w[*j] = x.clone();
            }
            for c in p + 1..self.cols {
                if w[c].is_zero() {
                    continue;
                }
                if let Some(other) = self.pivot_row[c] {
                    let f = w[c].clone();
                    let reduced = done[other].as_ref().expect("larger pivots are reduced first");
                    for (j, x) in reduced.iter().enumerate().skip(c) {
                        if !x.is_zero() {
                            w[j] -= &f * x;
                        }
                    }
                }
            }
            done[r] = Some(w);
        }
        let mut out: Vec<(usize, Vec<Rat>)> = self
            .rows
            .iter()
            .zip(done)
            .map(|((p, _), w)| (*p, w.expect("every row reduced")))
            .collect();
        out.sort_by_key(|(p, _)| *p);
        out
    }

    /// Basis of `{x : r . x = 0 for every inserted row r}`.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let rref = self.rref();
        let is_pivot: Vec<bool> = (0..self.cols).map(|c| self.pivot_row[c].is_some()).collect();
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Rat::zero(); self.cols];
                x[f] = Rat::one();
                for (p, row) in &rref {
                    if !row[f].is_zero() {
                        x[*p] = -&row[f];
                    }
                }
                x
            })
            .collect()
    }
}

/// Rank of a matrix.
pub fn rank(m: &Mat) -> usize {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        if e.is_full() {
            break;
        }
        e.insert(m.row(i));
    }
    e.rank()
}

/// Basis of the null space of `m`, as column vectors.
pub fn kernel(m: &Mat) -> Vec<Mat> {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        if e.is_full() {
            break;
        }
        e.insert(m.row(i));
    }
    e.null_space().into_iter().map(Mat::column).collect()
}

/// Solves `a x = b` for a column `b`; `None` iff `b` is outside the column space.
pub fn solve_linear(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.rows(), b.rows(), "a.rows must equal b.rows");
    assert_eq!(b.cols(), 1, "b must be a column");
    let n = a.cols();
    let aug = a.hstack(b);
    let mut e = Echelon::new(n + 1);
    for i in 0..aug.rows() {
        e.insert(aug.row(i));
    }
    if e.pivots().contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (p, row) in e.rref() {
        x[p] = row[n].clone();
    }
    Some(Mat::column(x))
}

pub fn determinant(m: &Mat) -> Rat {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            for j in 0..n {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = t;
            }
            det = -det;
        }
        let piv = a[(c, c)].clone();
        det *= &piv;
        let inv = piv.recip();
        for r in c + 1..n {
            if a[(r, c)].is_zero() {
                continue;
            }
            let f = &a[(r, c)] * &inv;
            for j in c..n {
                let t = &f * &a[(c, j)];
                a[(r, j)] -= t;
            }
        }
    }
    det
}

pub fn inverse(m: &Mat) -> Option<Mat> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let aug = m.hstack(&Mat::identity(n));
    let mut e = Echelon::new(2 * n);
    for i in 0..n {
        e.insert(aug.row(i));
    }
    let rref = e.rref();
    if rref.len() < n || rref.iter().enumerate().any(|(i, (p, _))| *p != i) {
        return None;
    }
    let mut inv = Mat::zeros(n, n);
    for (i, (_, row)) in rref.iter().enumerate() {
        for j in 0..n {
            inv[(i, j)] = row[n + j].clone();
        }
    }
    Some(inv)
}

/// Coordinates with respect to a fixed linearly independent family.
///
/// Picks a set of positions on which the family restricts to an invertible
/// square matrix, so each lookup is one small matrix-vector product plus an
/// exact reconstruction check.
#[derive(Clone, Debug)]
pub struct Coordinates {
    vectors: Vec<Vec<Rat>>,
    positions: Vec<usize>,
    inverse: Mat,
    echelon: Echelon,
}

impl Coordinates {
    /// Fails with the index of the first vector dependent on its predecessors.
    pub fn new(vectors: Vec<Vec<Rat>>, len: usize) -> Result<Self, usize> {
        let mut echelon = Echelon::new(len);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), len);
            if !echelon.insert(v) {
                return Err(i);
            }
        }
        let positions = echelon.pivots();
        let k = vectors.len();
        let mut sub = Mat::zeros(k, k);
        for (r, &pos) in positions.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate() {
                sub[(r, j)] = v[pos].clone();
            }
        }
        let inverse = inverse(&sub).expect("pivot positions give an invertible restriction");
        Ok(Coordinates { vectors, positions, inverse, echelon })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.echelon.cols()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.echelon.contains(v)
    }

    /// `Some(c)` with `sum c_i vectors_i = v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let k = self.vectors.len();
        let mut c = vec![Rat::zero(); k];
        for (r, &pos) in self.positions.iter().enumerate() {
            if v[pos].is_zero() {
                continue;
            }
            for (i, ci) in c.iter_mut().enumerate() {
                let m = &self.inverse[(i, r)];
                if !m.is_zero() {
                    *ci += m * &v[pos];
                }
            }
        }
        let mut recon = vec![Rat::zero(); v.len()];
        for (ci, vec) in c.iter().zip(&self.vectors) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in recon.iter_mut().zip(vec) {
                if !y.is_zero() {
                    *x += ci * y;
                }
            }
        }
        (recon == v).then_some(c)
    }
}

/// `sum c_i v_i` for coordinate vectors.
pub fn combine(coeffs: &[Rat], vectors: &[Vec<Rat>], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

/// Basis of a span, extracted greedily from `vectors` (first independent ones win).
pub fn span_basis(vectors: &[Vec<Rat>], len: usize) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new(len);
    vectors.iter().filter(|v| e.insert(v)).cloned().collect()
}

/// Basis of the intersection of two subspaces given by bases.
pub fn intersection(a: &[Vec<Rat>], b: &[Vec<Rat>], len: usize) -> Vec<Vec<Rat>> {
    // x = sum s_i a_i = sum t_j b_j  <=>  [A | -B] (s, t) = 0
    let k = a.len() + b.len();
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut e = Echelon::new(k);
    for pos in 0..len {
        let row: Vec<Rat> =
            a.iter().map(|v| v[pos].clone()).chain(b.iter().map(|v| -&v[pos])).collect();
        e.insert(&row);
    }
    let raw: Vec<Vec<Rat>> =
        e.null_space().into_iter().map(|s| combine(&s[..a.len()], a, len)).collect();
    span_basis(&raw, len)
}
