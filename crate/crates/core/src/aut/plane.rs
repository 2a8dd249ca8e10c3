//! Images in the commutative polynomial ring `ℚ[x, y]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::letter::Letter;
use super::word::Word;
use crate::linalg::{format_scalar, Polynomial, Scalar};

/// A polynomial in two commuting variables, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Scalar, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Scalar::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Scalar::one(), 0, 1)
    }

    /// `q(y)` as a polynomial in two variables.
    pub fn in_y(q: &Polynomial) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in q.coeffs().iter().enumerate() {
            out.add_term((0, k), c.clone());
        }
        out
    }

    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (usize, usize), c: Scalar) {
        let e = self.terms.entry(key).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    pub fn pow(&self, k: usize) -> BiPoly {
        let mut out = BiPoly::constant(Scalar::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `self(f, g)`.
    pub fn substitute(&self, f: &BiPoly, g: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out = &out + &(&f.pow(i) * &g.pow(j)).scale(c);
        }
        out
    }

    pub fn d_dx(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term((i - 1, j), c * Scalar::from_integer(i.into()));
            }
        }
        out
    }

    pub fn d_dy(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term((i, j - 1), c * Scalar::from_integer(j.into()));
            }
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, -v);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    _ => {
                        let v = |s: &str, e: usize| match e {
                            0 => String::new(),
                            1 => s.to_string(),
                            _ => format!("{s}^{e}"),
                        };
                        [v("x", i), v("y", j)].into_iter().filter(|t| !t.is_empty()).collect::<Vec<_>>().join("*")
                    }
                };
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format_scalar(c),
                    (false, true) => mono,
                    (false, false) => format!("{}*{mono}", format_scalar(c)),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn letter_images(l: &Letter) -> (BiPoly, BiPoly) {
    match l {
        Letter::A(g) => {
            let fx = &(&BiPoly::x().scale(&g.a) + &BiPoly::y().scale(&g.b)) + &BiPoly::constant(g.e.clone());
            let fy = &(&BiPoly::x().scale(&g.c) + &BiPoly::y().scale(&g.d)) + &BiPoly::constant(g.f.clone());
            (fx, fy)
        }
        Letter::B(g) => {
            let fx = &BiPoly::x().scale(&g.a) + &BiPoly::in_y(&g.q);
            let fy = &BiPoly::y().scale(&(Scalar::one() / &g.a)) + &BiPoly::constant(g.h.clone());
            (fx, fy)
        }
    }
}

/// Images `(σ(x), σ(y))` of the element a word represents.
pub fn project_to_plane(w: &Word) -> (BiPoly, BiPoly) {
    let mut cur = (BiPoly::x(), BiPoly::y());
    for l in w.letters() {
        // (cur ∘ l)(x) = l(x) with cur(x), cur(y) substituted
        let (fx, fy) = letter_images(l);
        cur = (fx.substitute(&cur.0, &cur.1), fy.substitute(&cur.0, &cur.1));
    }
    cur
}

/// `∂f/∂x · ∂g/∂y − ∂f/∂y · ∂g/∂x`.
pub fn jacobian(f: &BiPoly, g: &BiPoly) -> BiPoly {
    &(&f.d_dx() * &g.d_dy()) - &(&f.d_dy() * &g.d_dx())
}
