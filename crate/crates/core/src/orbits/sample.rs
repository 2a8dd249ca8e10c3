use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aut::random::{random_affine, random_nonzero, random_scalar, random_triangular, random_u};
use crate::aut::{AffineGen, Factor, Letter, Word, WordBounds};
use crate::cm::{base_point, CmPoint};
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// Points of `C_n` reached from the base point by seeded random words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSet {
    pub n: usize,
    pub seed: u64,
    pub bounds: WordBounds,
    pub points: Vec<CmPoint>,
    /// `points[i] = act(words[i], base_point(n))`.
    pub words: Vec<Word>,
}

/// One letter of a sampling word. Besides generic letters of both factors
/// this draws `U`-letters and affine letters with `a = 0` (a swap composed
/// with `U`) often, so that words stay inside small orbits with
/// non-negligible probability.
pub fn sample_letter<R: Rng + ?Sized>(rng: &mut R, bounds: &WordBounds) -> Letter {
    let h = bounds.height;
    match rng.gen_range(0..20) {
        0..=6 => Letter::B(random_triangular(rng, bounds)),
        7..=11 => Letter::A(random_affine(rng, h)),
        12..=15 => {
            let b = random_nonzero(rng, h);
            let c = -(Scalar::one() / &b);
            Letter::A(AffineGen {
                a: Scalar::zero(),
                b,
                c,
                d: random_scalar(rng, h),
                e: random_scalar(rng, h),
                f: random_scalar(rng, h),
            })
        }
        _ => random_u(rng, h).to_letter(if rng.gen_bool(0.5) { Factor::A } else { Factor::B }),
    }
}

/// Draws the sampling words: the first is always empty, the rest have
/// between 1 and `bounds.word_len` letters.
pub fn sample_words(count: usize, seed: u64, bounds: &WordBounds) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            if i == 0 || bounds.word_len == 0 {
                return Word::identity();
            }
            let len = rng.gen_range(1..=bounds.word_len);
            Word::from_letters((0..len).map(|_| sample_letter(&mut rng, bounds)).collect())
        })
        .collect()
}

/// Applies `count` seeded random words to `base_point(n)`.
pub fn sample_points(n: usize, count: usize, seed: u64, bounds: &WordBounds) -> Result<SampleSet> {
    if n == 0 {
        return Err(Error::Unsupported("C_0 is a single point with no matrices".into()));
    }
    if count == 0 {
        return Err(Error::Unsupported("sample count must be positive".into()));
    }
    let words = sample_words(count, seed, bounds);
    let p0 = base_point(n);
    let points = words.par_iter().map(|w| w.act(&p0)).collect::<Result<Vec<_>>>()?;
    Ok(SampleSet { n, seed, bounds: *bounds, points, words })
}
