//! Dimensions of subgroup orbits through a point, computed infinitesimally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::point::CmPoint;
use crate::error::Error;
use crate::linalg::Matrix;

/// The subgroups of `G₀` whose orbits are studied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subgroup {
    A,
    B,
    U,
    G0,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subgroup::A => "A",
            Subgroup::B => "B",
            Subgroup::U => "U",
            Subgroup::G0 => "G0",
        })
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(Subgroup::A),
            "B" | "b" => Ok(Subgroup::B),
            "U" | "u" => Ok(Subgroup::U),
            "G0" | "g0" => Ok(Subgroup::G0),
            _ => Err(Error::Parse(format!("unknown subgroup {s:?} (expected A, B, U or G0)"))),
        }
    }
}

type Direction = (Matrix, Matrix);

/// Velocity vectors `(δX, δY)` at `(X, Y)` of one-parameter subgroups of `H`.
///
/// Each generator family contributes the derivative at `t = 0` of its action
/// (signs dropped, they do not change the span):
/// translations `(I, 0)`, `(0, I)`; the scaling `(X, −Y)`; the shears
/// `(Y, 0)` and `(0, X)`; `Ψ_{t·y^k}` gives `(Y^k, 0)` and `Φ_{t·x^k}` gives
/// `(0, X^k)`, for `k ≤ 2n`.
pub fn infinitesimal_directions(h: Subgroup, p: &CmPoint) -> Vec<Direction> {
    let n = p.n();
    let (x, y) = (p.x(), p.y());
    let id = Matrix::identity(n);
    let zero = Matrix::zero(n);
    let mut dirs: Vec<Direction> = vec![(x.clone(), -y)];
    let psi_powers = |dirs: &mut Vec<Direction>, max: u32| {
        let mut pw = id.clone();
        for _ in 0..=max {
            dirs.push((pw.clone(), zero.clone()));
            pw = &pw * y;
        }
    };
    let phi_powers = |dirs: &mut Vec<Direction>, max: u32| {
        let mut pw = id.clone();
        for _ in 0..=max {
            dirs.push((zero.clone(), pw.clone()));
            pw = &pw * x;
        }
    };
    let top = 2 * n as u32;
    match h {
        Subgroup::U => {
            psi_powers(&mut dirs, 1);
            dirs.push((zero.clone(), id.clone()));
        }
        Subgroup::A => {
            psi_powers(&mut dirs, 1);
            phi_powers(&mut dirs, 1);
        }
        Subgroup::B => {
            psi_powers(&mut dirs, top);
            dirs.push((zero.clone(), id.clone()));
        }
        Subgroup::G0 => {
            psi_powers(&mut dirs, top);
            phi_powers(&mut dirs, top);
        }
    }
    dirs
}

/// `([Z, X], [Z, Y])` for `Z` running over a basis of trace-zero matrices.
pub fn conjugation_directions(p: &CmPoint) -> Vec<Direction> {
    let n = p.n();
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(Matrix::unit(n, i, j));
            } else if i + 1 < n {
                basis.push(&Matrix::unit(n, i, i) - &Matrix::unit(n, i + 1, i + 1));
            }
        }
    }
    basis.iter().map(|z| (z.commutator(p.x()), z.commutator(p.y()))).collect()
}

fn stack(dirs: &[Direction]) -> Matrix {
    let n = dirs.first().map_or(0, |d| d.0.dim());
    let mut m = Matrix::zeros(dirs.len(), 2 * n * n);
    for (r, (dx, dy)) in dirs.iter().enumerate() {
        for (c, v) in dx.flatten().chain(dy.flatten()).enumerate() {
            m[(r, c)] = v.clone();
        }
    }
    m
}

/// Dimension of the `H`-orbit through the class of `P` in `C_n`: the rank of
/// the `H`-directions together with the conjugation directions, minus the
/// rank of the conjugation directions alone.
pub fn orbit_tangent_dimension(h: Subgroup, p: &CmPoint) -> usize {
    let conj = conjugation_directions(p);
    if conj.is_empty() {
        // n = 1: conjugation is trivial
        return stack(&infinitesimal_directions(h, p)).rank();
    }
    let base = stack(&conj).rank();
    let mut all = conj;
    all.extend(infinitesimal_directions(h, p));
    stack(&all).rank() - base
}

/// Rank of the conjugation directions; `n² − 1` at every point of `C_n`
/// because the simultaneous-conjugation action is free there.
pub fn conjugation_rank(p: &CmPoint) -> usize {
    let conj = conjugation_directions(p);
    if conj.is_empty() {
        0
    } else {
        stack(&conj).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm::point::base_point;

    #[test]
    fn base_point_dimensions() {
        let p = base_point(2);
        assert_eq!(orbit_tangent_dimension(Subgroup::G0, &p), 4);
        assert_eq!(orbit_tangent_dimension(Subgroup::A, &p), 4);
        assert_eq!(orbit_tangent_dimension(Subgroup::B, &p), 3);
        assert_eq!(orbit_tangent_dimension(Subgroup::U, &p), 3);
        assert_eq!(conjugation_rank(&p), 3);
        let p1 = base_point(1);
        for h in [Subgroup::A, Subgroup::B, Subgroup::U, Subgroup::G0] {
            assert_eq!(orbit_tangent_dimension(h, &p1), 2);
        }
        assert_eq!(orbit_tangent_dimension(Subgroup::G0, &base_point(3)), 6);
    }

    #[test]
    fn subgroup_names() {
        assert_eq!("G0".parse::<Subgroup>().unwrap(), Subgroup::G0);
        assert!("C".parse::<Subgroup>().is_err());
        assert_eq!(Subgroup::U.to_string(), "U");
    }
}
