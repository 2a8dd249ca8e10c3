use serde::Serialize;

use super::point::CmPoint;
use crate::error::{Error, Result};
use crate::linalg::{invertible_in_span, Matrix, Scalar};

/// An invertible `g` with `g·X_P = X_Q·g` and `g·Y_P = Y_Q·g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyWitness {
    pub g: Matrix,
}

impl ConjugacyWitness {
    /// Checks the intertwining identities exactly.
    pub fn verifies(&self, p: &CmPoint, q: &CmPoint) -> bool {
        self.g.is_invertible()
            && &self.g * p.x() == q.x() * &self.g
            && &self.g * p.y() == q.y() * &self.g
    }

    pub fn inverse(&self) -> ConjugacyWitness {
        ConjugacyWitness { g: self.g.inverse().expect("witness is invertible") }
    }

    /// Witness for `P ~ R` from witnesses of `P ~ Q` (self) and `Q ~ R`.
    pub fn then(&self, next: &ConjugacyWitness) -> ConjugacyWitness {
        ConjugacyWitness { g: &next.g * &self.g }
    }
}

/// Basis of the solution space of `g·A = A'·g, g·B = B'·g`, as matrices.
pub fn intertwiner_basis(a: &Matrix, b: &Matrix, a2: &Matrix, b2: &Matrix) -> Vec<Matrix> {
    let n = a.dim();
    let nn = n * n;
    // unknown g_{kl} sits in column k·n + l
    let mut sys = Matrix::zeros(2 * nn, nn);
    for (block, (src, dst)) in [(a, a2), (b, b2)].into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = block * nn + i * n + j;
                // (g·src)_{ij} = Σ_k g_{ik} src_{kj}
                for k in 0..n {
                    sys[(row, i * n + k)] += &src[(k, j)];
                }
                // (dst·g)_{ij} = Σ_k dst_{ik} g_{kj}
                for k in 0..n {
                    sys[(row, k * n + j)] -= &dst[(i, k)];
                }
            }
        }
    }
    sys.kernel_basis().into_iter().map(|v| Matrix::from_vec(n, v)).collect()
}

/// Decides simultaneous conjugacy of two points, returning a witness.
///
/// The intertwiner equations are linear in `g`; an invertible solution
/// exists over the algebraic closure iff the solution space contains an
/// invertible matrix, which [`invertible_in_span`] decides exactly.
pub fn pgl_equivalent(p: &CmPoint, q: &CmPoint) -> Result<Option<ConjugacyWitness>> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch(p.n(), q.n()));
    }
    // cheap invariants first
    if p.x().trace() != q.x().trace() || p.y().trace() != q.y().trace() {
        return Ok(None);
    }
    let basis = intertwiner_basis(p.x(), p.y(), q.x(), q.y());
    Ok(invertible_in_span(&basis).map(|g| ConjugacyWitness { g: normalize(g) }))
}

/// Scales a witness so its first nonzero entry is 1.
fn normalize(g: Matrix) -> Matrix {
    let lead: Option<Scalar> = g.entries().iter().find(|v| !num_traits::Zero::is_zero(*v)).cloned();
    match lead {
        Some(l) => g.scale(&(Scalar::from_integer(1.into()) / l)),
        None => g,
    }
}
