//! Finding words that carry a point back to the base point.
//!
//! `n = 1` and `n = 2` are solved in closed form. For larger `n` a bounded
//! best-first search over a small move set is run; failing within the budget
//! is a normal outcome.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::aut::{phi, psi, scaling, swap, AffineGen, Letter, Word};
use crate::cm::{base_point, pgl_equivalent, CmPoint, ConjugacyWitness};
use crate::error::Result;
use crate::linalg::{int, ratio, Matrix, Polynomial, Scalar};

/// Outcome of [`reduce_to_basepoint`].
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    /// `act(word, P)` is conjugate to the base point.
    pub word: Option<Word>,
    pub witness: Option<ConjugacyWitness>,
    pub method: &'static str,
    /// Search nodes expanded (zero for closed-form methods).
    pub nodes: usize,
    pub budget: usize,
    /// Best heuristic score reached when the search gave up.
    pub best_score: Option<(usize, u64)>,
}

/// Default search budget, in expanded nodes.
pub const DEFAULT_BUDGET: usize = 2000;

pub fn reduce_to_basepoint(p: &CmPoint, budget: usize) -> Result<Reduction> {
    let n = p.n();
    let p0 = base_point(n);
    let found = |word: Word, method, nodes| -> Result<Option<Reduction>> {
        let image = word.act(p)?;
        Ok(pgl_equivalent(&image, &p0)?.map(|w| Reduction {
            word: Some(word),
            witness: Some(w),
            method,
            nodes,
            budget,
            best_score: None,
        }))
    };
    if let Some(r) = found(Word::identity(), "identity", 0)? {
        return Ok(r);
    }
    let closed = match n {
        1 => Some((translation_to_origin(p), "translation")),
        2 => reduce_c2(p).map(|w| (w, "pencil")),
        _ => None,
    };
    if let Some((w, method)) = closed {
        if let Some(r) = found(w, method, 0)? {
            return Ok(r);
        }
    }
    search(p, &p0, budget)
}

/// `(u, v) ↦ (0, 0)` on `C₁`.
fn translation_to_origin(p: &CmPoint) -> Word {
    let e = p.x()[(0, 0)].clone();
    let f = p.y()[(0, 0)].clone();
    Word::letter(Letter::A(AffineGen::translation(e, f)))
}

fn rational_sqrt(v: &Scalar) -> Option<Scalar> {
    if v.is_negative() {
        return None;
    }
    let root = |b: &BigInt| {
        let r = b.sqrt();
        (&r * &r == *b).then_some(r)
    };
    Some(Scalar::new(root(v.numer())?, root(v.denom())?))
}

/// On `C₂`, after centring, `Q(α, β) = tr((αX + βY)²)` has discriminant
/// `tr(XY)² − tr(X²)tr(Y²) = 1`, so it splits over the rationals. Its two
/// null directions give a pencil basis of nilpotent matrices; ordering them
/// so that `tr(X′Y′) = −1` lands in the class of the base point.
fn reduce_c2(p: &CmPoint) -> Option<Word> {
    let half = ratio(1, 2);
    let t = AffineGen::translation(p.x().trace() * &half, p.y().trace() * &half);
    let (x, y) = t.act_on(p.x(), p.y());
    let tr = |a: &Matrix, b: &Matrix| (a * b).trace();
    let (pp, r, s) = (tr(&x, &x), tr(&x, &y), tr(&y, &y));
    let root = rational_sqrt(&(&r * &r - &pp * &s))?;
    if root.is_zero() {
        return None;
    }
    let (v1, mut v2) = if pp.is_zero() {
        ((Scalar::one(), Scalar::zero()), (-s.clone(), &r * int(2)))
    } else {
        (((-&r + &root) / &pp, Scalar::one()), ((-&r - &root) / &pp, Scalar::one()))
    };
    let det = &v1.0 * &v2.1 - &v1.1 * &v2.0;
    if det.is_zero() {
        return None;
    }
    v2 = (&v2.0 / &det, &v2.1 / &det);
    let pairing = &v1.0 * &v2.0 * &pp + (&v1.0 * &v2.1 + &v1.1 * &v2.0) * &r + &v1.1 * &v2.1 * &s;
    let (v1, v2) = if pairing.is_positive() { (v2, (-v1.0, -v1.1)) } else { (v1, v2) };
    // act: X' = dX − bY, Y' = −cX + aY
    let sigma = AffineGen::new(v2.1.clone(), -v1.1, -v2.0, v1.0, Scalar::zero(), Scalar::zero()).ok()?;
    Some(Word::letter(Letter::A(sigma.compose(&t))))
}

/// Number of nonzero power traces `tr Xᵏ`, `tr Yᵏ` (`k ≤ n`): zero exactly
/// when both matrices are nilpotent.
fn nilpotency_defect(p: &CmPoint) -> usize {
    let mut count = 0;
    for m in [p.x(), p.y()] {
        let mut pw = m.clone();
        for _ in 0..p.n() {
            if !pw.trace().is_zero() {
                count += 1;
            }
            pw = &pw * m;
        }
    }
    count
}

/// `q` of degree `< n` with `tr((X − q(Y))·Yᵏ) = tr(X₀·Y₀ᵏ)` for `k < n`.
fn fit(x: &Matrix, y: &Matrix, x0: &Matrix, y0: &Matrix) -> Option<Polynomial> {
    let n = x.dim();
    let mut powers = vec![Matrix::identity(n)];
    let mut powers0 = vec![Matrix::identity(n)];
    for k in 1..2 * n {
        powers.push(&powers[k - 1] * y);
        if k < n {
            powers0.push(&powers0[k - 1] * y0);
        }
    }
    // Σ_j q_j tr(Y^{j+k}) = tr(X Yᵏ) − tr(X₀ Y₀ᵏ)
    let mut sys = Matrix::zeros(n, n + 1);
    for k in 0..n {
        for j in 0..n {
            sys[(k, j)] = powers[j + k].trace();
        }
        sys[(k, n)] = -((x * &powers[k]).trace() - (x0 * &powers0[k]).trace());
    }
    let kernel = sys.kernel_basis();
    let v = kernel.iter().find(|v| !v[n].is_zero())?;
    let scale = Scalar::one() / &v[n];
    Some(Polynomial::new(v[..n].iter().map(|c| c * &scale).collect()))
}

fn moves(p: &CmPoint, p0: &CmPoint) -> Vec<Word> {
    let mut out = Vec::new();
    let n = Scalar::from_integer(p.n().into());
    let (tx, ty) = (p.x().trace() / &n, p.y().trace() / &n);
    if !tx.is_zero() || !ty.is_zero() {
        out.push(Word::letter(Letter::A(AffineGen::translation(tx, ty))));
    }
    if let Some(q) = fit(p.x(), p.y(), p0.x(), p0.y()) {
        if !q.is_zero() {
            out.push(psi(q));
        }
    }
    if let Some(q) = fit(p.y(), p.x(), p0.y(), p0.x()) {
        if !q.is_zero() {
            out.push(phi(q));
        }
    }
    out.push(swap());
    out.push(scaling(int(2)));
    out.push(scaling(ratio(1, 2)));
    out
}

fn search(p: &CmPoint, p0: &CmPoint, budget: usize) -> Result<Reduction> {
    let score = |q: &CmPoint| (nilpotency_defect(q), q.complexity());
    let mut heap = BinaryHeap::new();
    let mut seen = HashSet::new();
    let mut states = vec![(p.clone(), Word::identity())];
    heap.push(Reverse((score(p), 0usize)));
    seen.insert(p.clone());
    let mut best = score(p);
    let mut nodes = 0;
    while let Some(Reverse((sc, idx))) = heap.pop() {
        if nodes >= budget {
            break;
        }
        nodes += 1;
        best = best.min(sc);
        let (q, w) = states[idx].clone();
        if sc.0 == 0 {
            if let Some(wit) = pgl_equivalent(&q, p0)? {
                return Ok(Reduction {
                    word: Some(w),
                    witness: Some(wit),
                    method: "search",
                    nodes,
                    budget,
                    best_score: None,
                });
            }
        }
        for m in moves(&q, p0) {
            let next = m.act(&q)?;
            if seen.insert(next.clone()) {
                let s = score(&next);
                states.push((next, m.concat(&w)));
                heap.push(Reverse((s, states.len() - 1)));
            }
        }
    }
    Ok(Reduction { word: None, witness: None, method: "search", nodes, budget, best_score: Some(best) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::is_translation_word;

    #[test]
    fn base_point_needs_empty_word() {
        for n in 1..=3 {
            let r = reduce_to_basepoint(&base_point(n), 10).unwrap();
            assert_eq!(r.word, Some(Word::identity()));
        }
    }

    #[test]
    fn n1_uses_translations() {
        let p = CmPoint::new(Matrix::scalar(1, ratio(3, 2)), Matrix::scalar(1, int(-7))).unwrap();
        let r = reduce_to_basepoint(&p, 10).unwrap();
        let w = r.word.unwrap();
        assert!(w.len() <= 2 && is_translation_word(&w));
        assert!(r.witness.unwrap().verifies(&w.act(&p).unwrap(), &base_point(1)));
    }

    #[test]
    fn c2_closed_orbit_points() {
        // the other closed orbit and a translate of it
        let q = swap().act(&base_point(2)).unwrap();
        let q2 = Word::letter(Letter::A(AffineGen::translation(int(3), ratio(-1, 2)))).act(&q).unwrap();
        for p in [q, q2] {
            let r = reduce_to_basepoint(&p, 10).unwrap();
            let w = r.word.expect("reduced");
            assert!(pgl_equivalent(&w.act(&p).unwrap(), &base_point(2)).unwrap().is_some());
        }
    }

    #[test]
    fn search_handles_translates() {
        let p = Word::letter(Letter::A(AffineGen::translation(int(1), int(2))))
            .act(&base_point(3))
            .unwrap();
        let r = search(&p, &base_point(3), 50).unwrap();
        assert!(r.word.is_some());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-1)), None);
    }
}
