//! The stabilizer families for `n ≤ 2`, with samplers and exact membership
//! predicates.
//!
//! Membership is decided on the reduced form: an element belongs to a family
//! when, after conjugating by the family's section word, it is a single
//! letter of the right factor with the stated parameter constraints.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::letter::{AffineGen, Letter, TriangularGen};
use super::normal_form::as_single_letter;
use super::random::{random_affine, random_nonzero, random_poly, random_scalar, random_sl2, random_triangular, random_u, WordBounds};
use super::word::{phi, psi, swap, Word};
use crate::error::Error;
use crate::linalg::{Polynomial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// The affine factor.
    A,
    /// The triangular factor.
    B,
    /// `A ∩ B`.
    U,
    /// Linear maps of determinant one.
    A1,
    /// `(ax + q(y), a⁻¹y)` with `q(0) = 0`.
    B1,
    /// `(ax + by, a⁻¹y)`.
    U1,
    /// `(λx, λ⁻¹y)`.
    Torus,
    /// `{id, (−x, −y)}`.
    Z2,
    /// `Φ_p` with `p(0) = p′(0) = 0`.
    G2x,
    /// `Ψ_q` with `q(0) = q′(0) = 0`.
    G2y,
    /// `Φ_{−x} Ψ_q Φ_x` with `q(±1) = 0`.
    G2y1,
    /// `G2x` extended by the torus.
    G2xTorus,
    /// `G2y` extended by the torus.
    G2yTorus,
    /// `G2y1` extended by `Z2`.
    G2y1Z2,
}

pub const ALL_FAMILIES: [Family; 14] = [
    Family::A,
    Family::B,
    Family::U,
    Family::A1,
    Family::B1,
    Family::U1,
    Family::Torus,
    Family::Z2,
    Family::G2x,
    Family::G2y,
    Family::G2y1,
    Family::G2xTorus,
    Family::G2yTorus,
    Family::G2y1Z2,
];

/// `Φ_x : (x, y) ↦ (x, y + x)`.
pub fn phi_x() -> Word {
    phi(Polynomial::from_i64(&[0, 1]))
}

fn as_affine(w: &Word) -> Option<AffineGen> {
    match as_single_letter(w)?.as_factor(super::letter::Factor::A)? {
        Letter::A(g) => Some(g),
        Letter::B(_) => None,
    }
}

fn as_triangular(w: &Word) -> Option<TriangularGen> {
    match as_single_letter(w)?.as_factor(super::letter::Factor::B)? {
        Letter::B(g) => Some(g),
        Letter::A(_) => None,
    }
}

fn vanishes_to_second_order(q: &Polynomial) -> bool {
    q.coeff(0).is_zero() && q.coeff(1).is_zero()
}

fn vanishes_at_pm_one(q: &Polynomial) -> bool {
    q.eval(&Scalar::one()).is_zero() && q.eval(&-Scalar::one()).is_zero()
}

fn is_pm_one(a: &Scalar) -> bool {
    a.is_one() || *a == -Scalar::one()
}

impl Family {
    /// Conjugating word `c` such that `c ∘ g ∘ c⁻¹` lies in the triangular
    /// factor for every member `g`.
    pub fn section(self) -> Word {
        match self {
            Family::G2x | Family::G2xTorus => swap(),
            Family::G2y1 | Family::G2y1Z2 => phi_x(),
            _ => Word::identity(),
        }
    }

    /// Exact membership test.
    pub fn contains(self, w: &Word) -> bool {
        let c = self.section();
        let g = if c.is_empty() { w.clone() } else { w.conjugate_by(&c) };
        match self {
            Family::A => as_affine(&g).is_some(),
            Family::B => as_triangular(&g).is_some(),
            Family::U => as_single_letter(&g).is_some_and(|l| l.in_u().is_some()),
            Family::A1 => as_affine(&g).is_some_and(|a| a.e.is_zero() && a.f.is_zero()),
            Family::B1 => as_triangular(&g).is_some_and(|b| b.h.is_zero() && b.q.coeff(0).is_zero()),
            Family::U1 => as_single_letter(&g)
                .and_then(|l| l.in_u())
                .is_some_and(|u| u.e.is_zero() && u.h.is_zero()),
            Family::Torus => as_affine(&g).is_some_and(|a| {
                a.b.is_zero() && a.c.is_zero() && a.e.is_zero() && a.f.is_zero()
            }),
            Family::Z2 => as_affine(&g).is_some_and(|a| {
                a.b.is_zero() && a.c.is_zero() && a.e.is_zero() && a.f.is_zero() && is_pm_one(&a.a)
            }),
            Family::G2x | Family::G2y => as_triangular(&g)
                .is_some_and(|b| b.a.is_one() && b.h.is_zero() && vanishes_to_second_order(&b.q)),
            Family::G2xTorus | Family::G2yTorus => {
                as_triangular(&g).is_some_and(|b| b.h.is_zero() && vanishes_to_second_order(&b.q))
            }
            Family::G2y1 => as_triangular(&g)
                .is_some_and(|b| b.a.is_one() && b.h.is_zero() && vanishes_at_pm_one(&b.q)),
            Family::G2y1Z2 => as_triangular(&g)
                .is_some_and(|b| is_pm_one(&b.a) && b.h.is_zero() && vanishes_at_pm_one(&b.q)),
        }
    }

    /// A random member.
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R, bounds: &WordBounds) -> Word {
        let h = bounds.height;
        let deg = bounds.degree.max(2);
        // q with q(0) = q'(0) = 0 and degree ≥ 2
        let flat = |rng: &mut R| {
            let r = random_poly(rng, deg - 2, h);
            &r * &Polynomial::monomial(Scalar::one(), 2)
        };
        let pm_one = |rng: &mut R| {
            let r = random_poly(rng, deg - 2, h);
            &r * &Polynomial::from_i64(&[-1, 0, 1])
        };
        let sign = |rng: &mut R| if rng.gen_bool(0.5) { Scalar::one() } else { -Scalar::one() };
        match self {
            Family::A => Word::letter(Letter::A(random_affine(rng, h))),
            Family::B => Word::letter(Letter::B(random_triangular(rng, bounds))),
            Family::U => Word::letter(random_u(rng, h).to_letter(super::letter::Factor::A)),
            Family::A1 => {
                let [a, b, c, d] = random_sl2(rng, h);
                Word::letter(Letter::A(AffineGen { a, b, c, d, e: Scalar::zero(), f: Scalar::zero() }))
            }
            Family::B1 => {
                let mut q = random_poly(rng, bounds.degree, h).coeffs().to_vec();
                if let Some(c) = q.first_mut() {
                    *c = Scalar::zero();
                }
                let a = random_nonzero(rng, h);
                Word::letter(Letter::B(TriangularGen { a, q: Polynomial::new(q), h: Scalar::zero() }))
            }
            Family::U1 => {
                let a = random_nonzero(rng, h);
                let b = random_scalar(rng, h);
                let d = Scalar::one() / &a;
                Word::letter(Letter::A(AffineGen { a, b, c: Scalar::zero(), d, e: Scalar::zero(), f: Scalar::zero() }))
            }
            Family::Torus => super::word::scaling(random_nonzero(rng, h)),
            Family::Z2 => super::word::scaling(sign(rng)),
            Family::G2x => phi(flat(rng)),
            Family::G2y => psi(flat(rng)),
            Family::G2y1 => phi_x().inverse().concat(&psi(pm_one(rng))).concat(&phi_x()),
            Family::G2xTorus => phi(flat(rng)).concat(&super::word::scaling(random_nonzero(rng, h))),
            Family::G2yTorus => psi(flat(rng)).concat(&super::word::scaling(random_nonzero(rng, h))),
            Family::G2y1Z2 => {
                let g = phi_x().inverse().concat(&psi(pm_one(rng))).concat(&phi_x());
                g.concat(&super::word::scaling(sign(rng)))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::U => "U",
            Family::A1 => "A1",
            Family::B1 => "B1",
            Family::U1 => "U1",
            Family::Torus => "torus",
            Family::Z2 => "Z2",
            Family::G2x => "G2x",
            Family::G2y => "G2y",
            Family::G2y1 => "G2y1",
            Family::G2xTorus => "G2x-torus",
            Family::G2yTorus => "G2y-torus",
            Family::G2y1Z2 => "G2y1-Z2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}
