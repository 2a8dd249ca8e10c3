//! Discrete invariants separating subgroup orbits.
//!
//! For `U` and `B` the second matrix only moves by `Y ↦ a(Y − h)` up to
//! conjugation, so everything attached to the conjugacy class of `Y` up to
//! affine change is invariant: the root multiplicities of its characteristic
//! polynomial and the dimension of its centralizer. When `Y` has a single
//! eigenvalue `c`, the pairing `tr((Y − c)·X)` is invariant as well: a
//! triangular letter changes `X` by a polynomial in `Y`, and `(Y − c)` times
//! a polynomial in `Y` has trace zero. On `C₂` it takes the values `±1`.
//!
//! For `A`, the pencil `sX + tY` is permuted by the linear part and
//! translations only shift it by scalars, so the root pattern of the binary
//! form `disc(charpoly(sX + tY))` is invariant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cm::{orbit_tangent_dimension, CmPoint, Subgroup};
use crate::linalg::scalar::serde_scalar;
use crate::linalg::{characteristic_polynomial, format_scalar, Matrix, Polynomial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Invariant {
    /// Root multiplicities of `charpoly(Y)`, largest first.
    YRootPattern(Vec<usize>),
    /// `dim {Z : ZY = YZ}`.
    YCentralizerDim(usize),
    /// `tr((Y − c)X)` when `charpoly(Y) = (t − c)ⁿ`.
    #[serde(with = "serde_scalar")]
    NilpotentPairing(Scalar),
    /// Root multiplicities of `disc(charpoly(sX + tY))` on the projective
    /// line; `None` when the form vanishes identically.
    PencilPattern(Option<Vec<usize>>),
}

/// Tangent dimension followed by the discrete invariants for the subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub subgroup: Subgroup,
    pub dim: usize,
    pub invariants: Vec<Invariant>,
}

pub fn centralizer_dim(m: &Matrix) -> usize {
    let n = m.dim();
    let nn = n * n;
    let mut ad = Matrix::zeros(nn, nn);
    for i in 0..n {
        for j in 0..n {
            // (ZM − MZ)_{ij} = Σ_k Z_{ik} M_{kj} − M_{ik} Z_{kj}
            for k in 0..n {
                ad[(i * n + j, i * n + k)] += &m[(k, j)];
                ad[(i * n + j, k * n + j)] -= &m[(i, k)];
            }
        }
    }
    nn - ad.rank()
}

/// The single eigenvalue of `m`, if it has only one.
fn sole_eigenvalue(m: &Matrix) -> Option<Scalar> {
    let cp = characteristic_polynomial(m);
    let n = m.dim();
    let c = -cp.coeff(n - 1) / Scalar::from_integer(n.into());
    let lin = Polynomial::new(vec![-c.clone(), Scalar::from_integer(1.into())]);
    let mut pw = Polynomial::constant(Scalar::from_integer(1.into()));
    for _ in 0..n {
        pw = &pw * &lin;
    }
    (pw == cp).then_some(c)
}

/// Root multiplicities of `F(s, t) = disc(charpoly(sX + tY))`, homogeneous
/// of degree `n(n − 1)`, including the root at infinity.
pub fn pencil_pattern(x: &Matrix, y: &Matrix) -> Option<Vec<usize>> {
    let n = x.dim();
    let top = n * (n - 1);
    let nodes: Vec<(Scalar, Scalar)> = (0..=top)
        .map(|s| {
            let s = Scalar::from_integer(s.into());
            let m = &x.scale(&s) + y;
            (s, characteristic_polynomial(&m).discriminant())
        })
        .collect();
    let f = Polynomial::interpolate(&nodes);
    let deg = f.degree()?;
    let mut pattern = f.root_multiplicities();
    if deg < top {
        pattern.push(top - deg);
        pattern.sort_unstable_by(|a, b| b.cmp(a));
    }
    Some(pattern)
}

fn y_invariants(p: &CmPoint) -> Vec<Invariant> {
    let y = p.y();
    let mut out = vec![
        Invariant::YRootPattern(characteristic_polynomial(y).root_multiplicities()),
        Invariant::YCentralizerDim(centralizer_dim(y)),
    ];
    if let Some(c) = sole_eigenvalue(y) {
        out.push(Invariant::NilpotentPairing((&y.shift(&-c) * p.x()).trace()));
    }
    out
}

/// The signature of the `H`-orbit through `P`.
pub fn orbit_signature(h: Subgroup, p: &CmPoint) -> Signature {
    let dim = orbit_tangent_dimension(h, p);
    let invariants = match h {
        Subgroup::U | Subgroup::B => y_invariants(p),
        Subgroup::A => vec![Invariant::PencilPattern(pencil_pattern(p.x(), p.y()))],
        Subgroup::G0 => Vec::new(),
    };
    Signature { subgroup: h, dim, invariants }
}

fn fmt_pattern(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::YRootPattern(p) => write!(f, "Y-roots {}", fmt_pattern(p)),
            Invariant::YCentralizerDim(d) => write!(f, "Y-centralizer {d}"),
            Invariant::NilpotentPairing(v) => write!(f, "pairing {}", format_scalar(v)),
            Invariant::PencilPattern(Some(p)) => write!(f, "pencil {}", fmt_pattern(p)),
            Invariant::PencilPattern(None) => f.write_str("pencil degenerate"),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: dim {}", self.subgroup, self.dim)?;
        for inv in &self.invariants {
            write!(f, ", {inv}")?;
        }
        Ok(())
    }
}

/// The nilpotent pairing, if the signature has one.
pub fn pairing(sig: &Signature) -> Option<&Scalar> {
    sig.invariants.iter().find_map(|i| match i {
        Invariant::NilpotentPairing(v) => Some(v),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::swap;
    use crate::cm::base_point;
    use crate::linalg::int;

    #[test]
    fn closed_orbits_of_c2_are_separated() {
        let p = base_point(2);
        let q = swap().act(&p).unwrap();
        let sp = orbit_signature(Subgroup::U, &p);
        let sq = orbit_signature(Subgroup::U, &q);
        assert_eq!((sp.dim, sq.dim), (3, 3));
        assert_eq!(pairing(&sp), Some(&int(-1)));
        assert_eq!(pairing(&sq), Some(&int(1)));
        assert_ne!(sp, sq);
    }

    #[test]
    fn centralizer_dims() {
        assert_eq!(centralizer_dim(&Matrix::identity(3)), 9);
        assert_eq!(centralizer_dim(&base_point(3).y().clone()), 3);
        assert_eq!(centralizer_dim(&Matrix::diag(vec![int(1), int(2)])), 2);
    }

    #[test]
    fn pencil_pattern_at_base_point() {
        // sX₀ + tY₀ = [[0, −t], [s, 0]]: disc = −4st, simple roots at 0 and ∞
        let p = base_point(2);
        assert_eq!(pencil_pattern(p.x(), p.y()), Some(vec![1, 1]));
        assert_eq!(pencil_pattern(base_point(1).x(), base_point(1).y()), Some(vec![]));
    }
}
