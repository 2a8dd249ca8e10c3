//! Reduced forms in `A *_U B`.
//!
//! Every element is uniquely `u ∘ r₁ ∘ … ∘ r_k` with `u ∈ U` and the `rᵢ`
//! canonical right-coset representatives (see [`Letter::split_coset`]) drawn
//! alternately from `A` and `B`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::letter::{Factor, Letter, UGen};
use super::word::Word;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub prefix: UGen,
    pub reps: Vec<Letter>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { prefix: UGen::identity(), reps: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.reps.is_empty() && self.prefix.is_identity()
    }

    /// Alternating length `k`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Checks the structural invariants.
    pub fn is_valid(&self) -> bool {
        self.reps.iter().all(Letter::is_coset_rep)
            && self.reps.windows(2).all(|w| w[0].factor() != w[1].factor())
    }

    /// Back to a word: the prefix (as an A-letter, omitted when trivial)
    /// followed by the representatives.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.reps.len() + 1);
        if !self.prefix.is_identity() {
            let side = self.reps.first().map_or(Factor::A, Letter::factor);
            letters.push(self.prefix.to_letter(side));
        }
        letters.extend(self.reps.iter().cloned());
        Word::from_letters(letters)
    }

    /// `self ∘ u` for `u ∈ U`: `u` is pushed leftward through the
    /// representatives, each step re-splitting `rᵢ ∘ u = u' ∘ rᵢ'`.
    fn push_u(&mut self, mut u: UGen) {
        for r in self.reps.iter_mut().rev() {
            if u.is_identity() {
                return;
            }
            let side = r.factor();
            let x = r.compose(&u.to_letter(side)).expect("same factor");
            let (u2, r2) = x.split_coset().expect("rep ∘ u stays outside U");
            *r = r2;
            u = u2;
        }
        self.prefix = self.prefix.compose(&u);
    }

    /// `self ∘ l`.
    pub fn mul_letter(&mut self, l: &Letter) {
        if let Some(u) = l.in_u() {
            self.push_u(u);
            return;
        }
        let merged = match self.reps.last() {
            Some(last) if last.factor() == l.factor() => {
                let x = last.compose(l).expect("same factor");
                self.reps.pop();
                x
            }
            _ => l.clone(),
        };
        match merged.split_coset() {
            None => self.push_u(merged.in_u().expect("letter in U")),
            Some((u, r)) => {
                self.push_u(u);
                self.reps.push(r);
            }
        }
    }
}

/// Reduces a word letter by letter.
pub fn normal_form(w: &Word) -> NormalForm {
    let mut nf = NormalForm::identity();
    for l in w.letters() {
        nf.mul_letter(l);
    }
    nf
}

/// Solves the word problem.
pub fn is_identity(w: &Word) -> bool {
    normal_form(w).is_identity()
}

/// The element as a single letter of one factor, when it has one.
pub fn as_single_letter(w: &Word) -> Option<Letter> {
    let nf = normal_form(w);
    match nf.reps.as_slice() {
        [] => Some(nf.prefix.to_letter(Factor::A)),
        [r] => nf.prefix.to_letter(r.factor()).compose(r),
        _ => None,
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        for r in &self.reps {
            write!(f, " · {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
