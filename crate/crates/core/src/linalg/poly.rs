use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::{format_scalar, Scalar};

/// Univariate polynomial over the rationals, coefficients in ascending order.
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and `degree()` returns `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    #[serde(with = "super::scalar::serde_scalar::vec")]
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn var() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    /// `p(M)` by Horner's rule; a constant `c` gives `c·I`.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.dim();
        let mut acc = Matrix::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = (&acc * m).shift(c);
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer(k.into()))
                .collect(),
        )
    }

    /// `p(α·t + β)`.
    pub fn compose_affine(&self, alpha: &Scalar, beta: &Scalar) -> Polynomial {
        let lin = Polynomial::new(vec![beta.clone(), alpha.clone()]);
        self.compose(&lin)
    }

    /// `p(q(t))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * inner) + &Polynomial::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&top| top >= dd) else {
            return (Polynomial::zero(), self.clone());
        };
        let mut quot = vec![Scalar::zero(); top - dd + 1];
        for k in (0..=top - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&(Scalar::one() / l)),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: returns `(multiplicity, factor)` for
    /// every nonconstant square-free factor, so `p = c·∏ factorᵐ`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Polynomial)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((i, g.clone()));
            }
            b = b.div_rem(&g).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&g).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Exact interpolation through `(xᵢ, yᵢ)` with distinct nodes.
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let lin = Polynomial::new(vec![-xj.clone(), Scalar::one()]);
                    basis = (&basis * &lin).scale(&(Scalar::one() / (xi - xj)));
                }
            }
            acc = &acc + &basis;
        }
        acc
    }

    /// Multiplicities of the roots over the algebraic closure, largest first.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .squarefree_decomposition()
            .into_iter()
            .flat_map(|(m, g)| std::iter::repeat_n(m, g.degree().unwrap_or(0)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Resultant as the determinant of the Sylvester matrix.
    pub fn resultant(&self, other: &Polynomial) -> Scalar {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Scalar::zero();
        };
        if m + n == 0 {
            return Scalar::one();
        }
        let size = m + n;
        let mut s = Matrix::zeros(size, size);
        // coefficients in descending order along each row
        for r in 0..n {
            for k in 0..=m {
                s[(r, r + k)] = self.coeff(m - k);
            }
        }
        for r in 0..m {
            for k in 0..=n {
                s[(n + r, r + k)] = other.coeff(n - k);
            }
        }
        s.determinant()
    }

    /// `∏_{i<j} (λᵢ − λⱼ)²` times the usual power of the leading coefficient.
    pub fn discriminant(&self) -> Scalar {
        let Some(n) = self.degree() else {
            return Scalar::zero();
        };
        if n == 0 {
            return Scalar::zero();
        }
        if n == 1 {
            return Scalar::one();
        }
        let r = self.resultant(&self.derivative()) / self.leading().expect("nonzero");
        if (n * (n - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// True when `p` shares a factor with `p'`.
    pub fn has_repeated_root(&self) -> bool {
        self.degree().unwrap_or(0) > 0 && self.gcd(&self.derivative()).degree().unwrap_or(0) > 0
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    /// Renders the coefficient list, e.g. `[0,0,1]` for `t²`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_scalar).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, ratio};

    #[test]
    fn discriminant_matches_root_formula() {
        assert_eq!(Polynomial::from_i64(&[3, 5, 1]).discriminant(), int(25 - 12));
        // (t − 1)(t − 2)(t − 4): ((1−2)(1−4)(2−4))² = 36
        let p = Polynomial::from_i64(&[-8, 14, -7, 1]);
        assert_eq!(p.discriminant(), int(36));
        assert_eq!(Polynomial::from_i64(&[-2, 5, -4, 1]).discriminant(), int(0));
        assert_eq!(Polynomial::from_i64(&[-2, 5, -4, 1]).root_multiplicities(), vec![2, 1]);
        assert_eq!(Polynomial::from_i64(&[-8, 14, -7, 1]).root_multiplicities(), vec![1, 1, 1]);
        assert!(Polynomial::from_i64(&[7]).root_multiplicities().is_empty());
    }

    #[test]
    fn trailing_zeros_dropped() {
        let p = Polynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn eval_matrix_examples() {
        // y² - 1 at a nilpotent matrix
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let m = -&Matrix::unit(2, 0, 1);
        assert_eq!(p.eval_matrix(&m), -&Matrix::identity(2));
        // p = t is the identity evaluation
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(Polynomial::var().eval_matrix(&m), m);
        // x² at E21 + E32
        let m = &Matrix::unit(3, 1, 0) + &Matrix::unit(3, 2, 1);
        assert_eq!(Polynomial::from_i64(&[0, 0, 1]).eval_matrix(&m), Matrix::unit(3, 2, 0));
        // constants give scalar matrices
        assert_eq!(Polynomial::constant(ratio(2, 3)).eval_matrix(&m), Matrix::scalar(3, ratio(2, 3)));
        assert_eq!(Polynomial::zero().eval_matrix(&m), Matrix::zero(3));
    }

    #[test]
    fn division_and_gcd() {
        let a = Polynomial::from_i64(&[-1, 0, 1]); // (t-1)(t+1)
        let b = Polynomial::from_i64(&[1, 2, 1]); // (t+1)²
        assert_eq!(a.gcd(&b), Polynomial::from_i64(&[1, 1]));
        let (q, r) = b.div_rem(&a);
        assert_eq!(q, Polynomial::from_i64(&[1]));
        assert_eq!(r, Polynomial::from_i64(&[2, 2]));
    }

    #[test]
    fn squarefree_pattern() {
        // (t-1)³ (t+2) (t²+1)
        let f = &(&Polynomial::from_i64(&[-1, 1]) * &Polynomial::from_i64(&[-1, 1]))
            * &Polynomial::from_i64(&[-1, 1]);
        let g = &(&f * &Polynomial::from_i64(&[2, 1])) * &Polynomial::from_i64(&[1, 0, 1]);
        let dec = g.squarefree_decomposition();
        let pattern: Vec<(usize, usize)> =
            dec.iter().map(|(m, p)| (*m, p.degree().unwrap())).collect();
        assert_eq!(pattern, vec![(1, 3), (3, 1)]);
        assert!(g.has_repeated_root());
        assert!(!Polynomial::from_i64(&[1, 0, 1]).has_repeated_root());
    }

    #[test]
    fn composition_and_interpolation() {
        let p = Polynomial::from_i64(&[1, 0, 1]);
        let q = p.compose_affine(&int(2), &int(-1)); // (2t-1)² + 1
        assert_eq!(q, Polynomial::from_i64(&[2, -4, 4]));
        let pts: Vec<_> = (0..4).map(|i| (int(i), q.eval(&int(i)))).collect();
        assert_eq!(Polynomial::interpolate(&pts), q);
    }
}
