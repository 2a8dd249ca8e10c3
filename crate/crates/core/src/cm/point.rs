use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix};

/// A matrix pair `(X, Y)` with `rank([X, Y] + I) = 1`.
///
/// This is a representative: two points denote the same element of `C_n`
/// when they are simultaneously conjugate (see [`super::pgl_equivalent`]).
/// Derived equality compares representatives entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CmPoint {
    n: usize,
    #[serde(rename = "X")]
    x: Matrix,
    #[serde(rename = "Y")]
    y: Matrix,
}

/// `[X, Y] + I`.
pub fn rank_one_defect(x: &Matrix, y: &Matrix) -> Matrix {
    x.commutator(y).shift(&int(1))
}

/// True iff `rank([X, Y] + I) = 1`.
pub fn is_cm_point(x: &Matrix, y: &Matrix) -> Result<bool> {
    check_shapes(x, y)?;
    Ok(rank_one_defect(x, y).rank() == 1)
}

fn check_shapes(x: &Matrix, y: &Matrix) -> Result<()> {
    if !x.is_square() {
        return Err(Error::Shape(format!("X is {}×{}", x.rows(), x.cols())));
    }
    if !y.is_square() {
        return Err(Error::Shape(format!("Y is {}×{}", y.rows(), y.cols())));
    }
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if x.dim() == 0 {
        return Err(Error::Shape("empty matrices".into()));
    }
    Ok(())
}

impl CmPoint {
    /// Validates the rank-one condition.
    pub fn new(x: Matrix, y: Matrix) -> Result<Self> {
        check_shapes(&x, &y)?;
        let rank = rank_one_defect(&x, &y).rank();
        if rank != 1 {
            return Err(Error::NotCmPoint { rank });
        }
        Ok(CmPoint { n: x.dim(), x, y })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn into_parts(self) -> (Matrix, Matrix) {
        (self.x, self.y)
    }

    /// `(g X g⁻¹, g Y g⁻¹)`.
    pub fn conjugate_by(&self, g: &Matrix) -> CmPoint {
        let gi = g.inverse().expect("conjugating matrix must be invertible");
        CmPoint { n: self.n, x: &(g * &self.x) * &gi, y: &(g * &self.y) * &gi }
    }

    /// Total bit size of all entries.
    pub fn complexity(&self) -> u64 {
        self.x.flatten().chain(self.y.flatten()).map(crate::linalg::scalar::bit_size).sum()
    }
}

/// The base point `X₀ = Σ E_{k+1,k}`, `Y₀ = Σ (k − n) E_{k,k+1}` (sums over
/// `k = 1..n−1`, one-based). For `n = 1` both matrices are zero.
pub fn base_point(n: usize) -> CmPoint {
    assert!(n >= 1, "base point needs n ≥ 1");
    let mut x = Matrix::zero(n);
    let mut y = Matrix::zero(n);
    for k in 1..n {
        x[(k, k - 1)] = int(1);
        y[(k - 1, k)] = int(k as i64 - n as i64);
    }
    CmPoint::new(x, y).expect("base point satisfies the rank-one condition")
}

impl<'de> Deserialize<'de> for CmPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            #[serde(rename = "X")]
            x: Matrix,
            #[serde(rename = "Y")]
            y: Matrix,
        }
        let raw = Raw::deserialize(d)?;
        use serde::de::Error as _;
        if raw.x.rows() != raw.n || raw.y.rows() != raw.n {
            return Err(D::Error::custom(format!("matrices do not match n = {}", raw.n)));
        }
        CmPoint::new(raw.x, raw.y).map_err(D::Error::custom)
    }
}

/// Reads a point without enforcing the rank-one condition; used by tools
/// that report on invalid input.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoint {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: Matrix,
    #[serde(rename = "Y")]
    pub y: Matrix,
}

impl RawPoint {
    pub fn check_shape(&self) -> Result<()> {
        check_shapes(&self.x, &self.y)?;
        if self.x.dim() != self.n {
            return Err(Error::DimensionMismatch(self.n, self.x.dim()));
        }
        Ok(())
    }
}
