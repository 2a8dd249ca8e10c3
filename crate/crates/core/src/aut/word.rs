//! Words over the two factors, their action on points, and the text syntax
//! used on the command line.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::letter::{AffineGen, Letter, TriangularGen};
use crate::cm::{CmPoint, ConjugacyWitness, base_point, pgl_equivalent};
use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, Polynomial, Scalar};

/// A product `l₁ ∘ l₂ ∘ … ∘ l_k` of letters, stored unreduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self ∘ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// `self^k`; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// The action on a point: the rightmost letter acts first, so that
    /// `act(w₁·w₂, P) = act(w₁, act(w₂, P))`.
    ///
    /// The rank-one condition is re-checked on the result; a failure there
    /// is an internal error, never a property of the input.
    pub fn act(&self, p: &CmPoint) -> Result<CmPoint> {
        let (mut x, mut y) = (p.x().clone(), p.y().clone());
        for l in self.letters.iter().rev() {
            (x, y) = l.act_on(&x, &y);
        }
        CmPoint::new(x, y).map_err(|e| Error::Internal(format!("action broke the rank-one condition: {e}")))
    }
}

/// `Ψ_q : (x, y) ↦ (x + q(y), y)`, a single B-letter.
pub fn psi(q: Polynomial) -> Word {
    Word::letter(Letter::B(TriangularGen::psi(q)))
}

/// `Φ_p : (x, y) ↦ (x, y + p(x))`, written as `s⁻¹ ∘ Ψ_{−p} ∘ s` with `s` the
/// swap `(x, y) ↦ (y, −x)`.
pub fn phi(p: Polynomial) -> Word {
    if p.is_zero() {
        return Word::identity();
    }
    let s = AffineGen::swap();
    Word::from_letters(vec![
        Letter::A(s.inverse()),
        Letter::B(TriangularGen::psi(-&p)),
        Letter::A(s),
    ])
}

pub fn swap() -> Word {
    Word::letter(Letter::A(AffineGen::swap()))
}

/// `(x, y) ↦ (λx, λ⁻¹y)`.
pub fn scaling(lambda: Scalar) -> Word {
    Word::letter(Letter::A(AffineGen::scaling(lambda)))
}

/// `(x, y) ↦ (x + e, y + f)`.
pub fn translation(e: Scalar, f: Scalar) -> Word {
    Word::letter(Letter::A(AffineGen::translation(e, f)))
}

/// Membership in `G_n`: returns a conjugator taking `act(w, P₀)` back to
/// `P₀ = base_point(n)` when one exists.
pub fn stabilizes_basepoint(w: &Word, n: usize) -> Result<Option<ConjugacyWitness>> {
    if n == 0 {
        return Err(Error::Unsupported("stabilizer test needs n ≥ 1".into()));
    }
    let p0 = base_point(n);
    let q = w.act(&p0)?;
    pgl_equivalent(&q, &p0)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// word   := factor ('*' factor)*
// factor := atom ('^' int)*
// atom   := 'id' | 'swap' | A(..) | B(..;..;..) | phi(..) | psi(..)
//         | scale(l) | shift(e,f) | '(' word ')'
struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src)))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphanumeric() {
                break;
            }
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    /// Raw text up to (not including) the next `)` at depth zero.
    fn args(&mut self) -> Result<&'a str> {
        self.expect('(')?;
        let start = self.pos;
        match self.src[start..].find(')') {
            Some(off) => {
                self.pos = start + off + 1;
                Ok(&self.src[start..start + off])
            }
            None => self.err("unclosed argument list"),
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.eat('*') {
            w = w.concat(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let mut w = self.atom()?;
        while self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let k: i64 = match self.src[start..self.pos].parse() {
                Ok(k) => k,
                Err(_) => return self.err("expected an integer exponent"),
            };
            w = w.pow(k);
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word> {
        if self.eat('(') {
            let w = self.word()?;
            self.expect(')')?;
            return Ok(w);
        }
        let name = self.ident();
        match name.as_str() {
            "id" => Ok(Word::identity()),
            "swap" => Ok(swap()),
            "A" => {
                let v = scalars(self.args()?)?;
                let [a, b, c, d, e, f]: [Scalar; 6] = v
                    .try_into()
                    .map_err(|_| Error::Parse("A(...) takes six parameters".into()))?;
                Ok(Word::letter(Letter::A(AffineGen::new(a, b, c, d, e, f)?)))
            }
            "B" => {
                let raw = self.args()?;
                let parts: Vec<&str> = raw.split(';').collect();
                if parts.len() != 3 {
                    return Err(Error::Parse("B(...) takes 'a; q0,q1,...; h'".into()));
                }
                let a = parse_scalar(parts[0].trim())?;
                let q = Polynomial::new(scalars(parts[1])?);
                let h = parse_scalar(parts[2].trim())?;
                Ok(Word::letter(Letter::B(TriangularGen::new(a, q, h)?)))
            }
            "phi" => Ok(phi(Polynomial::new(scalars(self.args()?)?))),
            "psi" => Ok(psi(Polynomial::new(scalars(self.args()?)?))),
            "scale" => {
                let v = scalars(self.args()?)?;
                match v.as_slice() {
                    [l] if !l.is_zero() => Ok(scaling(l.clone())),
                    _ => Err(Error::Parse("scale(...) takes one nonzero parameter".into())),
                }
            }
            "shift" => {
                let v = scalars(self.args()?)?;
                match v.as_slice() {
                    [e, f] => Ok(translation(e.clone(), f.clone())),
                    _ => Err(Error::Parse("shift(...) takes two parameters".into())),
                }
            }
            "" => self.err("expected a letter"),
            other => self.err(&format!("unknown generator {other:?}")),
        }
    }
}

fn scalars(s: &str) -> Result<Vec<Scalar>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_scalar(t.trim())).collect()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut p = Parser { src: s, pos: 0 };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != s.len() {
            return p.err("trailing input");
        }
        Ok(w)
    }
}

/// `true` when every letter is a translation.
pub fn is_translation_word(w: &Word) -> bool {
    w.letters().iter().all(|l| match l {
        Letter::A(g) => g.a.is_one() && g.b.is_zero() && g.c.is_zero() && g.d.is_one(),
        Letter::B(_) => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio, Matrix};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn phi_acts_on_y_only() {
        let pt = base_point(3);
        let q = phi(p(&[0, 0, 1])).act(&pt).unwrap();
        let x2 = pt.x() * pt.x();
        assert_eq!(q.x(), pt.x());
        assert_eq!(q.y(), &(pt.y() - &x2));
        assert!(phi(Polynomial::zero()).is_empty());
    }

    #[test]
    fn psi_square_fixes_base_point_two() {
        let pt = base_point(2);
        assert_eq!(psi(p(&[0, 0, 1])).act(&pt).unwrap(), pt);
    }

    #[test]
    fn stabilizer_examples() {
        assert!(stabilizes_basepoint(&psi(p(&[0, 3, 1])), 1).unwrap().is_some());
        assert!(stabilizes_basepoint(&psi(p(&[1])), 1).unwrap().is_none());
        let g1 = phi(p(&[0, -1])).concat(&psi(p(&[-1, 0, 1]))).concat(&phi(p(&[0, 1])));
        assert!(stabilizes_basepoint(&g1, 2).unwrap().is_some());
        let w = stabilizes_basepoint(&scaling(int(2)), 2).unwrap().expect("scaling stabilizes");
        assert!(w.g[(0, 1)].is_zero() && w.g[(1, 0)].is_zero());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w: Word = "A(0,1,-1,0,0,0) * B(1/2; 0,0,3; -1)^-1 * psi(0,0,1) * id".parse().unwrap();
        assert_eq!(w.len(), 3);
        let back: Word = w.to_string().parse().unwrap();
        assert_eq!(back, w);
        let v: Word = "(swap * psi(1))^2".parse().unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!("id".parse::<Word>().unwrap(), Word::identity());
        assert_eq!("phi(0,0,1)".parse::<Word>().unwrap(), phi(p(&[0, 0, 1])));
        for bad in ["A(1,1,1,1,0,0)", "B(0;1;0)", "psi(1", "foo(1)", "psi(1) *", "psi(1/0)", ""] {
            assert!(bad.parse::<Word>().is_err(), "{bad}");
        }
    }

    #[test]
    fn json_round_trip() {
        let w = phi(p(&[0, 1])).concat(&translation(ratio(3, 2), int(-7)));
        let s = serde_json::to_string(&w).unwrap();
        assert!(s.starts_with(r#"[{"type":"A""#));
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), w);
    }

    #[test]
    fn action_on_n1_is_affine() {
        let pt = CmPoint::new(Matrix::scalar(1, ratio(3, 2)), Matrix::scalar(1, int(-7))).unwrap();
        let w = translation(ratio(3, 2), int(-7));
        assert_eq!(w.act(&base_point(1)).unwrap().x(), &Matrix::scalar(1, ratio(-3, 2)));
        assert_eq!(w.inverse().act(&base_point(1)).unwrap(), pt);
        assert!(is_translation_word(&w));
    }
}
