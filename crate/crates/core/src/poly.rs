//! Univariate polynomials over the rationals, with Sturm sequences for
//! exact real-root counting and isolation.

use std::fmt;

use crate::matrix::Mat;
use crate::rational::Rat;

/// Coefficients in increasing degree; no trailing zeros (zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rat::zero(); k + 1];
        c[k] = Rat::one();
        Poly { coeffs: c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= t;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Rat::from(i)).collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of 0 as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Is `self` a nonzero constant multiple of `t^k`?
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().rev().skip(1).all(Rat::is_zero)
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...` (negated remainders).
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut cur = self.derivative();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let prev = &seq[seq.len() - 2];
            let (_, r) = prev.div_rem(&cur);
            cur = r.scale(&Rat::from_int(-1));
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_between(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        if self.is_zero() {
            panic!("the zero polynomial has infinitely many roots");
        }
        let seq = self.sturm_sequence();
        let va = sign_changes(seq.iter().map(|p| p.eval(a).signum()));
        let vb = sign_changes(seq.iter().map(|p| p.eval(b).signum()));
        // at a root of p itself the count is still exact for (a, b]
        va - vb
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.is_zero() {
            panic!("the zero polynomial has infinitely many roots");
        }
        let seq = self.sturm_sequence();
        let at_pos = sign_changes(seq.iter().map(|p| p.leading().signum()));
        let at_neg = sign_changes(seq.iter().map(|p| {
            let s = p.leading().signum();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        at_neg - at_pos
    }

    /// Does every root (over C) lie on the real line?
    pub fn all_roots_real(&self) -> bool {
        let sf = self.squarefree_part();
        sf.count_real_roots() == sf.degree().unwrap_or(0)
    }

    /// A bound `B` with every real root in `(-B, B)`.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading().abs();
        let m = self.coeffs.iter().rev().skip(1).map(|c| (c / &lead).abs()).max();
        Rat::one() + m.unwrap_or_else(Rat::zero)
    }

    /// Disjoint intervals `(lo, hi]`, each containing exactly one distinct real
    /// root, ordered left to right. Endpoints are never roots.
    pub fn isolate_real_roots(&self) -> Vec<(Rat, Rat)> {
        let sf = self.squarefree_part();
        if sf.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let b = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-&b, b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sf.count_roots_between(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && !sf.eval(&hi).is_zero() {
                out.push((lo, hi));
                continue;
            }
            let mut mid = (&lo + &hi) / Rat::from_int(2);
            // nudge the split point off a root so endpoints stay root-free
            let width = &hi - &lo;
            let mut k = 3;
            while sf.eval(&mid).is_zero() {
                mid = &lo + &(&width / Rat::from_int(k));
                k += 1;
            }
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = (xi - xj).recip();
                basis = basis.mul(&Poly::new(vec![-(xj * &denom), denom]));
            }
            acc = acc.add(&basis);
        }
        acc
    }

    /// Characteristic polynomial `det(t I - m)` by the Faddeev-LeVerrier recursion.
    pub fn charpoly(m: &Mat) -> Poly {
        assert!(m.is_square());
        let n = m.rows();
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut mk = Mat::zeros(n, n);
        let id = Mat::identity(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
            mk = m.mul(&mk).add(&id.scale(&coeffs[n - k + 1]));
            let c = -(m.mul(&mk).trace() / Rat::from(k));
            coeffs[n - k] = c;
        }
        Poly::new(coeffs)
    }

    /// Minimal polynomial of a square matrix, found as the first linear
    /// dependency among `I, m, m^2, ...`.
    pub fn minimal_polynomial(m: &Mat) -> Poly {
        use crate::linalg::Echelon;
        assert!(m.is_square());
        let n = m.rows();
        let nn = n * n;
        // rows are [power entries | tracking coefficients over powers 0..=n]
        let mut e = Echelon::new(nn + n + 1);
        let mut cur = Mat::identity(n);
        for k in 0..=n {
            let mut row = cur.as_slice().to_vec();
            row.extend((0..=n).map(|j| if j == k { Rat::one() } else { Rat::zero() }));
            let r = e.reduce(&row);
            if r[..nn].iter().all(Rat::is_zero) {
                return Poly::new(r[nn..].to_vec()).monic();
            }
            e.insert(&row);
            cur = cur.mul(m);
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn division_and_gcd() {
        let p = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let d = Poly::from_ints(&[1, 1]);
        let (quot, r) = p.div_rem(&d);
        assert_eq!(quot, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let g = p.gcd(&Poly::from_ints(&[1, 2, 1]));
        assert_eq!(g, Poly::from_ints(&[1, 1]));
        assert!(p.is_squarefree());
        assert!(!Poly::from_ints(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn sturm_counts() {
        // (t-1)(t-2)(t+3) = t^3 - 7t + 6
        let p = Poly::from_ints(&[6, -7, 0, 1]);
        assert_eq!(p.count_real_roots(), 3);
        assert_eq!(p.count_roots_between(&qi(0), &qi(2)), 2);
        assert_eq!(p.count_roots_between(&qi(1), &qi(2)), 1);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        assert!(!Poly::from_ints(&[0, 1, 0, 1]).all_roots_real());
        assert!(Poly::from_ints(&[0, 0, 1]).all_roots_real());
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (t - 1/3)(t - 1/2)(t^2 - 2)
        let p = Poly::new(vec![q(1, 6), q(-5, 6), qi(1)])
            .mul(&Poly::from_ints(&[-2, 0, 1]));
        let iv = p.isolate_real_roots();
        assert_eq!(iv.len(), 4);
        for (lo, hi) in &iv {
            assert_eq!(p.count_roots_between(lo, hi), 1);
            assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero());
        }
        for w in iv.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::from_ints(&[3, 0, -2, 5]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|i| (qi(i), p.eval(&qi(i)))).collect();
        assert_eq!(Poly::interpolate(&pts), p);
    }

    #[test]
    fn charpoly_and_minpoly() {
        let m = Mat::from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(Poly::charpoly(&m), Poly::from_ints(&[-12, 16, -7, 1]));
        assert_eq!(Poly::minimal_polynomial(&m), Poly::from_ints(&[6, -5, 1]));
        let nil = Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(Poly::minimal_polynomial(&nil), Poly::monomial(3));
        let rot = Mat::from_ints(&[&[0, -1], &[1, 0]]);
        assert_eq!(Poly::minimal_polynomial(&rot), Poly::from_ints(&[1, 0, 1]));
    }
}
