//! Seeded random letters and words of bounded size.

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::letter::{AffineGen, Letter, TriangularGen, UGen};
use super::word::Word;
use crate::linalg::{Polynomial, Scalar};

/// Size limits for random elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordBounds {
    /// Maximum number of letters.
    pub word_len: usize,
    /// Numerators lie in `[−height, height]`, denominators in `[1, height]`.
    pub height: u32,
    /// Maximum degree of the polynomial in a B-letter.
    pub degree: usize,
}

impl Default for WordBounds {
    fn default() -> Self {
        WordBounds { word_len: 6, height: 5, degree: 3 }
    }
}

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Scalar {
    let h = height.max(1) as i64;
    let num = rng.gen_range(-h..=h);
    // integers half the time keep entry sizes down
    let den = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=h) };
    Scalar::new(num.into(), den.into())
}

pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Scalar {
    loop {
        let s = random_scalar(rng, height);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, degree: usize, height: u32) -> Polynomial {
    let d = rng.gen_range(0..=degree);
    Polynomial::new((0..=d).map(|_| random_scalar(rng, height)).collect())
}

/// A random element of `SL₂(ℚ)` as `(a, b, c, d)`.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R, height: u32) -> [Scalar; 4] {
    let a = random_scalar(rng, height);
    let b = random_scalar(rng, height);
    if a.is_zero() {
        // ad − bc = 1 forces b ≠ 0, c = −1/b
        let b = if b.is_zero() { Scalar::from_integer(1.into()) } else { b };
        let c = -(Scalar::from_integer(1.into()) / &b);
        let d = random_scalar(rng, height);
        return [a, b, c, d];
    }
    let c = random_scalar(rng, height);
    let d = (Scalar::from_integer(1.into()) + &b * &c) / &a;
    [a, b, c, d]
}

pub fn random_affine<R: Rng + ?Sized>(rng: &mut R, height: u32) -> AffineGen {
    let [a, b, c, d] = random_sl2(rng, height);
    AffineGen { a, b, c, d, e: random_scalar(rng, height), f: random_scalar(rng, height) }
}

pub fn random_triangular<R: Rng + ?Sized>(rng: &mut R, bounds: &WordBounds) -> TriangularGen {
    TriangularGen {
        a: random_nonzero(rng, bounds.height),
        q: random_poly(rng, bounds.degree, bounds.height),
        h: random_scalar(rng, bounds.height),
    }
}

pub fn random_u<R: Rng + ?Sized>(rng: &mut R, height: u32) -> UGen {
    UGen {
        a: random_nonzero(rng, height),
        b: random_scalar(rng, height),
        e: random_scalar(rng, height),
        h: random_scalar(rng, height),
    }
}

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, bounds: &WordBounds) -> Letter {
    if rng.gen_bool(0.5) {
        Letter::A(random_affine(rng, bounds.height))
    } else {
        Letter::B(random_triangular(rng, bounds))
    }
}

/// A word with between 0 and `bounds.word_len` letters.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, bounds: &WordBounds) -> Word {
    let len = rng.gen_range(0..=bounds.word_len);
    random_word_of_len(rng, len, bounds)
}

pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, len: usize, bounds: &WordBounds) -> Word {
    Word::from_letters((0..len).map(|_| random_letter(rng, bounds)).collect())
}
