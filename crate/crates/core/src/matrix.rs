//! Dense rational matrices and their plain-text file format.
//!
//! The text format is a header line `rows cols` followed by the entries in
//! row-major order, each an integer or `p/q`, separated by whitespace.
//! [`Mat::to_text`] writes one matrix row per line with single spaces, and
//! parsing that output yields the same matrix bit for bit.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::rational::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Serialized as a list of rows of rational strings.
impl serde::Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row slices; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect())
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let mut m = Mat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn column(entries: Vec<Rat>) -> Self {
        let n = entries.len();
        Mat::from_vec(n, 1, entries)
    }

    /// The elementary matrix with a single one at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        m[(i, j)] = Rat::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Rat, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix commutator `self * other - other * self`.
    pub fn bracket(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Linear combination `sum c_i m_i` of equally shaped matrices.
    pub fn combination(coeffs: &[Rat], mats: &[Mat]) -> Mat {
        assert_eq!(coeffs.len(), mats.len());
        let (r, c) = mats.first().map_or((0, 0), |m| (m.rows, m.cols));
        let mut out = Mat::zeros(r, c);
        for (k, m) in coeffs.iter().zip(mats) {
            out.add_scaled(k, m);
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Serializes to the matrix text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format; errors carry 1-based line and column.
    pub fn from_text(text: &str) -> Result<Mat, FormatError> {
        let mut tokens = text.lines().enumerate().flat_map(|(ln, line)| {
            let mut out = Vec::new();
            let mut start = None;
            for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(i),
                    (true, Some(s)) => {
                        out.push((ln + 1, s + 1, &line[s..i]));
                        start = None;
                    }
                    _ => {}
                }
            }
            out
        });
        let mut dim = |what: &str| -> Result<usize, FormatError> {
            match tokens.next() {
                None => Err(FormatError { line: 1, column: 1, message: format!("missing {what}") }),
                Some((line, column, tok)) => tok.parse::<usize>().map_err(|_| FormatError {
                    line,
                    column,
                    message: format!("expected {what}, found {tok:?}"),
                }),
            }
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        let mut data = Vec::with_capacity(rows * cols);
        let mut last = (1, 1);
        for (line, column, tok) in tokens {
            if data.len() == rows * cols {
                return Err(FormatError {
                    line,
                    column,
                    message: format!("unexpected extra entry {tok:?}"),
                });
            }
            let x = tok.parse::<Rat>().map_err(|_| FormatError {
                line,
                column,
                message: format!("bad entry {tok:?}"),
            })?;
            data.push(x);
            last = (line, column);
        }
        if data.len() != rows * cols {
            return Err(FormatError {
                line: last.0,
                column: last.1,
                message: format!("expected {} entries, found {}", rows * cols, data.len()),
            });
        }
        Ok(Mat { rows, cols, data })
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn multiply_and_bracket() {
        let a = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let b = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.bracket(&b), Mat::from_ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.mul(&a), Mat::zeros(2, 2));
        assert_eq!(Mat::identity(2).trace(), qi(2));
    }

    #[test]
    fn text_format_exact() {
        let m = Mat::from_rows(vec![vec![q(1, 2), qi(-3)], vec![qi(0), q(-7, 9)]]);
        let s = m.to_text();
        assert_eq!(s, "2 2\n1/2 -3\n0 -7/9\n");
        assert_eq!(Mat::from_text(&s).unwrap(), m);
        let loose = "2 2   1/2\n\t-3 0\n  -14/18";
        assert_eq!(Mat::from_text(loose).unwrap(), m);
    }

    #[test]
    fn text_format_errors_have_positions() {
        let e = Mat::from_text("2 2\n1 2\n3 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = Mat::from_text("1 2\n1 2 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = Mat::from_text("2 2\n1 2 3\n").unwrap_err();
        assert!(e.message.contains("expected 4 entries"));
        let e = Mat::from_text("two 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(Mat::from_text("").is_err());
        let e = Mat::from_text("1 1\n1/0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    proptest! {
        #[test]
        fn text_round_trip(r in 0usize..4, c in 0usize..4, seed in proptest::collection::vec((-40i64..40, 1i64..9), 16)) {
            let data: Vec<Rat> = seed.iter().take(r * c).map(|&(n, d)| q(n, d)).collect();
            let m = Mat::from_vec(r, c, data);
            let text = m.to_text();
            let back = Mat::from_text(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
