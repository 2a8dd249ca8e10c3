//! Deciding whether a linear span of square matrices contains an invertible
//! element.
//!
//! For a basis `B₁, …, B_k` of `n×n` matrices, `det(Σ cᵢ Bᵢ)` is a polynomial
//! of degree at most `n` in each `cᵢ`. A nonzero polynomial of that shape
//! cannot vanish on every point of the grid `{0, …, n}^k`, so an exhaustive
//! sweep of the grid is an exact decision procedure over any infinite field
//! (including the algebraic closure of the rationals).

use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;

/// Returns an invertible rational combination of `basis`, or `None` when
/// every element of the span is singular. Grid points are visited in
/// lexicographic order, so the result is deterministic.
pub fn invertible_in_span(basis: &[Matrix]) -> Option<Matrix> {
    let first = basis.first()?;
    let n = first.dim();
    assert!(basis.iter().all(|b| b.is_square() && b.dim() == n), "basis dimension mismatch");
    let k = basis.len();
    let side = n as u64 + 1;
    // Try the basis elements themselves before sweeping the grid; most
    // spans met in practice are spanned by one invertible element.
    if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
        return Some(b.clone());
    }
    let mut idx = vec![0u64; k];
    loop {
        if idx.iter().any(|&c| c != 0) {
            let m = combination(basis, &idx);
            if m.is_invertible() {
                return Some(m);
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == k {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < side {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn combination(basis: &[Matrix], coeffs: &[u64]) -> Matrix {
    let n = basis[0].dim();
    let mut acc = Matrix::zero(n);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.scale(&Scalar::from_integer(c.into()));
        }
    }
    acc
}

/// Characteristic polynomial `det(t·I − M)` by the Faddeev-LeVerrier
/// recurrence; coefficients in ascending order, monic of degree `n`.
pub fn characteristic_polynomial(m: &Matrix) -> super::poly::Polynomial {
    let n = m.dim();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::from_integer(1.into());
    let mut aux = Matrix::zero(n);
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1}·I
        aux = (m * &aux).shift(&coeffs[n - k + 1]);
        let c = -(m * &aux).trace() / Scalar::from_integer(k.into());
        coeffs[n - k] = c;
    }
    super::poly::Polynomial::new(coeffs)
}
