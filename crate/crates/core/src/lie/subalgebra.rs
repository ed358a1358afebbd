use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Coordinates;
use crate::matrix::Mat;
use crate::rational::Rat;

use super::algebra::{Coords, LieAlgebra};
use super::subspace::Subspace;

/// Expansion of every `[b_i, b_j]`, `i < j`, in the subalgebra basis.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureCertificate {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, Vec<Rat>)>,
}

impl ClosureCertificate {
    /// Re-checks the certificate against the bracket of `g`.
    pub fn verify(&self, g: &LieAlgebra, basis: &[Coords]) -> bool {
        if basis.len() != self.dim || self.brackets.len() != self.dim * self.dim.saturating_sub(1) / 2 {
            return false;
        }
        self.brackets.iter().all(|(i, j, c)| {
            let lhs = g.bracket(&basis[*i], &basis[*j]);
            lhs == crate::linalg::combine(c, basis, g.dim())
        })
    }
}

#[derive(Clone, Debug)]
pub enum Closure {
    Closed(ClosureCertificate),
    /// `[b_i, b_j]` leaves the span.
    Open { i: usize, j: usize },
}

/// Decides whether the span of `basis` is closed under the bracket.
pub fn is_subalgebra(g: &LieAlgebra, basis: &[Mat]) -> Result<Closure> {
    let coords: Vec<Coords> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| g.coords_indexed(m, i))
        .collect::<Result<_>>()?;
    closure_of(g, &coords)
}

pub fn closure_of(g: &LieAlgebra, coords: &[Coords]) -> Result<Closure> {
    let solver = Coordinates::new(coords.to_vec(), g.dim()).map_err(|index| Error::Dependent { index })?;
    let mut brackets = Vec::new();
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            match solver.coords(&g.bracket(&coords[i], &coords[j])) {
                Some(c) => brackets.push((i, j, c)),
                None => return Ok(Closure::Open { i, j }),
            }
        }
    }
    Ok(Closure::Closed(ClosureCertificate { dim: coords.len(), brackets }))
}

/// A subalgebra of an ambient `so(p,q)`, with its closure certificate.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    name: String,
    ambient: String,
    basis: Vec<Mat>,
    coords: Vec<Coords>,
    certificate: ClosureCertificate,
}

impl Subalgebra {
    pub fn new(g: &LieAlgebra, name: impl Into<String>, basis: Vec<Mat>) -> Result<Self> {
        let coords: Vec<Coords> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| g.coords_indexed(m, i))
            .collect::<Result<_>>()?;
        Self::build(g, name.into(), basis, coords)
    }

    pub fn from_coords(g: &LieAlgebra, name: impl Into<String>, coords: Vec<Coords>) -> Result<Self> {
        let basis = coords.iter().map(|c| g.to_matrix(c)).collect();
        Self::build(g, name.into(), basis, coords)
    }

    /// From a subspace; the basis is taken as stored.
    pub fn from_subspace(g: &LieAlgebra, name: impl Into<String>, s: &Subspace) -> Result<Self> {
        Self::from_coords(g, name, s.basis().to_vec())
    }

    fn build(g: &LieAlgebra, name: String, basis: Vec<Mat>, coords: Vec<Coords>) -> Result<Self> {
        match closure_of(g, &coords)? {
            Closure::Closed(certificate) => Ok(Subalgebra { name, ambient: g.label(), basis, coords, certificate }),
            Closure::Open { i, j } => Err(Error::NotClosed { i, j }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient_label(&self) -> &str {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn coords(&self) -> &[Coords] {
        &self.coords
    }

    pub fn certificate(&self) -> &ClosureCertificate {
        &self.certificate
    }

    pub fn subspace(&self, g: &LieAlgebra) -> Subspace {
        Subspace::span(&self.coords, g.dim())
    }

    pub fn is_abelian(&self, g: &LieAlgebra) -> bool {
        self.coords
            .iter()
            .all(|x| self.coords.iter().all(|y| g.bracket(x, y).iter().all(Rat::is_zero)))
    }

    /// Does `x` satisfy `[x, 𝔥] ⊆ 𝔥`?
    pub fn is_normalized_by(&self, g: &LieAlgebra, x: &[Rat]) -> bool {
        let s = self.subspace(g);
        self.coords.iter().all(|y| s.contains(&g.bracket(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::make_so;
    use crate::lie::roots::iwasawa;

    #[test]
    fn nilradical_is_closed() {
        let g = make_so(2, 4).unwrap();
        let iw = iwasawa(&g).unwrap();
        let n = iw.n.matrices(&g);
        match is_subalgebra(&g, &n).unwrap() {
            Closure::Closed(c) => assert!(c.verify(&g, iw.n.basis())),
            Closure::Open { .. } => panic!("𝔫 should close"),
        }
        let a = vec![iw.a.matrices(&g)[0].clone()];
        assert!(matches!(is_subalgebra(&g, &a).unwrap(), Closure::Closed(_)));
    }

    #[test]
    fn witness_for_non_closed_span() {
        let g = make_so(0, 3).unwrap();
        let basis = vec![g.basis()[0].clone(), g.basis()[1].clone()];
        assert!(matches!(is_subalgebra(&g, &basis).unwrap(), Closure::Open { i: 0, j: 1 }));
        assert_eq!(Subalgebra::new(&g, "x", basis).unwrap_err(), Error::NotClosed { i: 0, j: 1 });
    }

    #[test]
    fn errors_for_bad_input() {
        let g = make_so(1, 2).unwrap();
        let out = vec![g.basis()[0].clone(), Mat::identity(3)];
        assert_eq!(is_subalgebra(&g, &out).unwrap_err(), Error::NotInAlgebra { index: 1 });
        let dup = vec![g.basis()[0].clone(), g.basis()[0].scale(&Rat::from_int(2))];
        assert_eq!(is_subalgebra(&g, &dup).unwrap_err(), Error::Dependent { index: 1 });
    }
}
