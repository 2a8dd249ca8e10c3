//! Generators of the two amalgam factors and of their intersection.
//!
//! A letter `σ` is recorded by the images of the generators, `σ(x)` and
//! `σ(y)`. Automorphisms compose as maps, `(σ∘τ)(f) = σ(τ(f))`, so the
//! composite's generator images are `τ(x)` and `τ(y)` with `σ(x)`, `σ(y)`
//! substituted in.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::scalar::serde_scalar;
use crate::linalg::{format_scalar, Matrix, Polynomial, Scalar};

/// `(x, y) ↦ (ax + by + e, cx + dy + f)` with `ad − bc = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineGen {
    #[serde(with = "serde_scalar")]
    pub a: Scalar,
    #[serde(with = "serde_scalar")]
    pub b: Scalar,
    #[serde(with = "serde_scalar")]
    pub c: Scalar,
    #[serde(with = "serde_scalar")]
    pub d: Scalar,
    #[serde(with = "serde_scalar")]
    pub e: Scalar,
    #[serde(with = "serde_scalar")]
    pub f: Scalar,
}

/// `(x, y) ↦ (ax + q(y), a⁻¹y + h)` with `a ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangularGen {
    #[serde(with = "serde_scalar")]
    pub a: Scalar,
    pub q: Polynomial,
    #[serde(with = "serde_scalar")]
    pub h: Scalar,
}

/// `(x, y) ↦ (ax + by + e, a⁻¹y + h)`: the elements lying in both factors.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UGen {
    #[serde(with = "serde_scalar")]
    pub a: Scalar,
    #[serde(with = "serde_scalar")]
    pub b: Scalar,
    #[serde(with = "serde_scalar")]
    pub e: Scalar,
    #[serde(with = "serde_scalar")]
    pub h: Scalar,
}

/// Which amalgam factor a letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    A,
    B,
}

/// A letter of a word in `G₀ = A *_U B`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
#[allow(clippy::large_enum_variant)] // both variants are used by value throughout
pub enum Letter {
    A(AffineGen),
    B(TriangularGen),
}

fn inv(v: &Scalar) -> Scalar {
    Scalar::one() / v
}

impl AffineGen {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar, f: Scalar) -> Result<Self> {
        if &a * &d - &b * &c != Scalar::one() {
            return Err(Error::InvalidGenerator("affine generator needs ad - bc = 1".into()));
        }
        Ok(AffineGen { a, b, c, d, e, f })
    }

    pub fn from_i64(p: [i64; 6]) -> Result<Self> {
        let [a, b, c, d, e, f] = p.map(|v| Scalar::from_integer(v.into()));
        Self::new(a, b, c, d, e, f)
    }

    pub fn identity() -> Self {
        let (z, o) = (Scalar::zero(), Scalar::one());
        AffineGen { a: o.clone(), b: z.clone(), c: z.clone(), d: o, e: z.clone(), f: z }
    }

    /// `(x, y) ↦ (y, −x)`.
    pub fn swap() -> Self {
        Self::from_i64([0, 1, -1, 0, 0, 0]).unwrap()
    }

    pub fn translation(e: Scalar, f: Scalar) -> Self {
        AffineGen { e, f, ..Self::identity() }
    }

    /// `(x, y) ↦ (λx, λ⁻¹y)`.
    pub fn scaling(lambda: Scalar) -> Self {
        assert!(!lambda.is_zero(), "scaling by zero");
        AffineGen { d: inv(&lambda), a: lambda, ..Self::identity() }
    }

    fn linear(&self) -> [[&Scalar; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineGen) -> AffineGen {
        // M = M_other · M_self, t = M_other · t_self + t_other
        let (s, o) = (self.linear(), other.linear());
        let m = |i: usize, j: usize| o[i][0] * s[0][j] + o[i][1] * s[1][j];
        AffineGen {
            a: m(0, 0),
            b: m(0, 1),
            c: m(1, 0),
            d: m(1, 1),
            e: &other.a * &self.e + &other.b * &self.f + &other.e,
            f: &other.c * &self.e + &other.d * &self.f + &other.f,
        }
    }

    pub fn inverse(&self) -> AffineGen {
        // σ⁻¹(x) = d(x − e) − b(y − f), σ⁻¹(y) = −c(x − e) + a(y − f)
        AffineGen {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
            e: -(&self.d * &self.e) + &self.b * &self.f,
            f: &self.c * &self.e - &self.a * &self.f,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// The image of the pair under the action: `(σ⁻¹(x), σ⁻¹(y))` evaluated
    /// at `(X, Y)`.
    pub fn act_on(&self, x: &Matrix, y: &Matrix) -> (Matrix, Matrix) {
        let xs = x.shift(&-&self.e);
        let ys = y.shift(&-&self.f);
        let nx = &xs.scale(&self.d) - &ys.scale(&self.b);
        let ny = &ys.scale(&self.a) - &xs.scale(&self.c);
        (nx, ny)
    }
}

impl TriangularGen {
    pub fn new(a: Scalar, q: Polynomial, h: Scalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidGenerator("triangular generator needs a ≠ 0".into()));
        }
        Ok(TriangularGen { a, q, h })
    }

    pub fn identity() -> Self {
        TriangularGen { a: Scalar::one(), q: Polynomial::zero(), h: Scalar::zero() }
    }

    /// `Ψ_q : (x, y) ↦ (x + q(y), y)`.
    pub fn psi(q: Polynomial) -> Self {
        TriangularGen { q, ..Self::identity() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TriangularGen) -> TriangularGen {
        // (a₁a₂, a₂·q₁(y) + q₂(a₁⁻¹y + h₁), a₂⁻¹h₁ + h₂)
        let q = &self.q.scale(&other.a) + &other.q.compose_affine(&inv(&self.a), &self.h);
        TriangularGen { a: &self.a * &other.a, q, h: &self.h / &other.a + &other.h }
    }

    pub fn inverse(&self) -> TriangularGen {
        // σ⁻¹(x) = a⁻¹x − a⁻¹q(a(y − h)), σ⁻¹(y) = ay − ah
        let ai = inv(&self.a);
        let q = self.q.compose_affine(&self.a, &-(&self.a * &self.h)).scale(&-&ai);
        TriangularGen { a: ai, q, h: -(&self.a * &self.h) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `X ↦ a⁻¹(X − q(a(Y − h))), Y ↦ a(Y − h)`.
    pub fn act_on(&self, x: &Matrix, y: &Matrix) -> (Matrix, Matrix) {
        let ny = y.shift(&-&self.h).scale(&self.a);
        let nx = (x - &self.q.eval_matrix(&ny)).scale(&inv(&self.a));
        (nx, ny)
    }
}

impl UGen {
    pub fn new(a: Scalar, b: Scalar, e: Scalar, h: Scalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidGenerator("U generator needs a ≠ 0".into()));
        }
        Ok(UGen { a, b, e, h })
    }

    pub fn identity() -> Self {
        UGen { a: Scalar::one(), b: Scalar::zero(), e: Scalar::zero(), h: Scalar::zero() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn to_affine(&self) -> AffineGen {
        AffineGen {
            a: self.a.clone(),
            b: self.b.clone(),
            c: Scalar::zero(),
            d: inv(&self.a),
            e: self.e.clone(),
            f: self.h.clone(),
        }
    }

    pub fn to_triangular(&self) -> TriangularGen {
        TriangularGen {
            a: self.a.clone(),
            q: Polynomial::new(vec![self.e.clone(), self.b.clone()]),
            h: self.h.clone(),
        }
    }

    pub fn to_letter(&self, side: Factor) -> Letter {
        match side {
            Factor::A => Letter::A(self.to_affine()),
            Factor::B => Letter::B(self.to_triangular()),
        }
    }

    /// `self ∘ other`, computed in `A`.
    pub fn compose(&self, other: &UGen) -> UGen {
        in_u_affine(&self.to_affine().compose(&other.to_affine())).expect("U is a subgroup")
    }

    pub fn inverse(&self) -> UGen {
        in_u_affine(&self.to_affine().inverse()).expect("U is a subgroup")
    }
}

fn in_u_affine(g: &AffineGen) -> Option<UGen> {
    g.c.is_zero().then(|| UGen {
        a: g.a.clone(),
        b: g.b.clone(),
        e: g.e.clone(),
        h: g.f.clone(),
    })
}

fn in_u_triangular(g: &TriangularGen) -> Option<UGen> {
    (g.q.degree().unwrap_or(0) <= 1).then(|| UGen {
        a: g.a.clone(),
        b: g.q.coeff(1),
        e: g.q.coeff(0),
        h: g.h.clone(),
    })
}

impl Letter {
    pub fn factor(&self) -> Factor {
        match self {
            Letter::A(_) => Factor::A,
            Letter::B(_) => Factor::B,
        }
    }

    /// `Some(u)` when the letter lies in `U = A ∩ B`.
    pub fn in_u(&self) -> Option<UGen> {
        match self {
            Letter::A(g) => in_u_affine(g),
            Letter::B(g) => in_u_triangular(g),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Letter::A(g) => g.is_identity(),
            Letter::B(g) => g.is_identity(),
        }
    }

    pub fn inverse(&self) -> Letter {
        match self {
            Letter::A(g) => Letter::A(g.inverse()),
            Letter::B(g) => Letter::B(g.inverse()),
        }
    }

    /// Composition inside one factor; `None` if the factors differ.
    pub fn compose(&self, other: &Letter) -> Option<Letter> {
        match (self, other) {
            (Letter::A(s), Letter::A(o)) => Some(Letter::A(s.compose(o))),
            (Letter::B(s), Letter::B(o)) => Some(Letter::B(s.compose(o))),
            _ => None,
        }
    }

    /// The same element of `U` written in the other factor, if possible.
    pub fn as_factor(&self, side: Factor) -> Option<Letter> {
        if self.factor() == side {
            Some(self.clone())
        } else {
            self.in_u().map(|u| u.to_letter(side))
        }
    }

    pub fn act_on(&self, x: &Matrix, y: &Matrix) -> (Matrix, Matrix) {
        match self {
            Letter::A(g) => g.act_on(x, y),
            Letter::B(g) => g.act_on(x, y),
        }
    }

    /// Splits a letter outside `U` as `u ∘ r` with `r` the canonical
    /// representative of the coset `U∘self`.
    ///
    /// * In `B`: `r = (x + r(y), y)` with `r(0) = r'(0) = 0`.
    /// * In `A`: `r = (ρx − y, x)`, i.e. `c = 1`, `d = 0`, no translation.
    ///
    /// Returns `None` for letters in `U`.
    pub fn split_coset(&self) -> Option<(UGen, Letter)> {
        if self.in_u().is_some() {
            return None;
        }
        Some(match self {
            Letter::A(g) => {
                let rho = &g.a / &g.c;
                let u = UGen {
                    a: g.c.clone(),
                    b: g.d.clone(),
                    e: g.f.clone(),
                    h: &rho * &g.f - &g.e,
                };
                (u, Letter::A(affine_rep(rho)))
            }
            Letter::B(g) => {
                // Q(s) = q(a(s − h)); r = Q minus its affine part
                let big_q = g.q.compose_affine(&g.a, &-(&g.a * &g.h));
                let (q0, q1) = (big_q.coeff(0), big_q.coeff(1));
                let mut rest = big_q.coeffs().to_vec();
                rest[0] = Scalar::zero();
                rest[1] = Scalar::zero();
                let u = UGen { a: g.a.clone(), b: &q1 / &g.a, e: &q0 + &q1 * &g.h, h: g.h.clone() };
                (u, Letter::B(TriangularGen::psi(Polynomial::new(rest))))
            }
        })
    }

    /// True for the canonical coset representatives produced by
    /// [`Letter::split_coset`].
    pub fn is_coset_rep(&self) -> bool {
        match self {
            Letter::A(g) => {
                g.b == -Scalar::one()
                    && g.c.is_one()
                    && g.d.is_zero()
                    && g.e.is_zero()
                    && g.f.is_zero()
            }
            Letter::B(g) => {
                g.a.is_one()
                    && g.h.is_zero()
                    && g.q.degree().is_some_and(|d| d >= 2)
                    && g.q.coeff(0).is_zero()
                    && g.q.coeff(1).is_zero()
            }
        }
    }
}

/// `(x, y) ↦ (ρx − y, x)`.
pub fn affine_rep(rho: Scalar) -> AffineGen {
    AffineGen {
        a: rho,
        b: -Scalar::one(),
        c: Scalar::one(),
        d: Scalar::zero(),
        e: Scalar::zero(),
        f: Scalar::zero(),
    }
}

impl fmt::Display for AffineGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> =
            [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f].map(format_scalar).into();
        write!(f, "A({})", p.join(","))
    }
}

impl fmt::Display for TriangularGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.q.coeffs().iter().map(format_scalar).collect();
        let q = if q.is_empty() { "0".to_string() } else { q.join(",") };
        write!(f, "B({};{};{})", format_scalar(&self.a), q, format_scalar(&self.h))
    }
}

impl fmt::Display for UGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = [&self.a, &self.b, &self.e, &self.h].map(format_scalar).into();
        write!(f, "U({})", p.join(","))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A(g) => g.fmt(f),
            Letter::B(g) => g.fmt(f),
        }
    }
}

macro_rules! debug_via_display {
    ($($t:ty),*) => {$(
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    )*};
}
debug_via_display!(AffineGen, TriangularGen, UGen, Letter);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn tri(a: Scalar, q: &[i64], h: Scalar) -> TriangularGen {
        TriangularGen::new(a, Polynomial::from_i64(q), h).unwrap()
    }

    #[test]
    fn in_u_examples() {
        let id = Letter::A(AffineGen::identity());
        assert_eq!(id.in_u(), Some(UGen::identity()));
        let sq = Letter::B(tri(int(1), &[0, 0, 1], int(0)));
        assert_eq!(sq.in_u(), None);
        let g = AffineGen::new(int(2), int(3), int(0), ratio(1, 2), int(1), int(5)).unwrap();
        assert_eq!(Letter::A(g).in_u(), Some(UGen::new(int(2), int(3), int(1), int(5)).unwrap()));
        let lin = Letter::B(tri(int(2), &[1, 3], int(5)));
        assert_eq!(lin.in_u(), Some(UGen::new(int(2), int(3), int(1), int(5)).unwrap()));
    }

    #[test]
    fn invariants_enforced() {
        assert!(AffineGen::from_i64([1, 1, 1, 1, 0, 0]).is_err());
        assert!(TriangularGen::new(int(0), Polynomial::zero(), int(0)).is_err());
        assert!(UGen::new(int(0), int(1), int(0), int(0)).is_err());
    }

    #[test]
    fn inverses_compose_to_identity() {
        let g = AffineGen::new(int(2), int(3), int(1), int(2), ratio(1, 3), int(-4)).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        let t = tri(int(1), &[0, 0, 0, 1], int(0));
        assert!(t.compose(&t.inverse()).is_identity());
        let t = tri(ratio(-2, 3), &[1, -1, 2, 5], ratio(7, 2));
        assert!(t.compose(&t.inverse()).is_identity());
        assert!(t.inverse().compose(&t).is_identity());
    }

    #[test]
    fn swap_has_order_four() {
        let s = AffineGen::swap();
        let s2 = s.compose(&s);
        assert!(!s2.is_identity());
        assert!(s2.compose(&s2).is_identity());
    }

    #[test]
    fn coset_split_recombines() {
        let letters = [
            Letter::A(AffineGen::new(int(2), int(3), int(1), int(2), ratio(1, 3), int(-4)).unwrap()),
            Letter::A(AffineGen::swap()),
            Letter::B(tri(ratio(-2, 3), &[1, -1, 2, 5], ratio(7, 2))),
            Letter::B(tri(int(1), &[0, 0, 1], int(0))),
        ];
        for l in letters {
            let (u, r) = l.split_coset().unwrap();
            assert!(r.is_coset_rep(), "{r}");
            let back = u.to_letter(l.factor()).compose(&r).unwrap();
            assert_eq!(back, l);
        }
        assert!(Letter::A(AffineGen::identity()).split_coset().is_none());
    }

    #[test]
    fn json_shape() {
        let l = Letter::B(tri(ratio(1, 2), &[0, 0, 3], int(1)));
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"type":"B","a":"1/2","q":["0","0","3"],"h":"1"}"#);
        let back: Letter = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
    }
}
