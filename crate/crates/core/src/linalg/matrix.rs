use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{format_scalar, Scalar};
use crate::error::Error;

/// Dense matrix of exact rationals, stored row-major.
///
/// Calogero-Moser data is always square; rectangular shapes appear only for
/// the linear systems assembled by conjugacy and tangent computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn zero(n: usize) -> Self {
        Self::zeros(n, n)
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// The elementary matrix with a single 1 at `(i, j)` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m[(i, j)] = Scalar::one();
        m
    }

    pub fn diag(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n);
        for (i, v) in entries.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Square matrix from a row-major list of entries.
    pub fn from_vec(n: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), n * n, "expected {} entries", n * n);
        Matrix { rows: n, cols: n, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `self + c·I`.
    pub fn shift(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += c;
        }
        m
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.dim());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Matrix with every row multiplied by the lcm of its denominators, so all
    /// entries are integers. Row scaling leaves rank and kernel unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    /// Fraction-free (Bareiss) row echelon form. The pivot in each column is
    /// the topmost remaining row with a nonzero entry, scanning columns from
    /// the left.
    pub fn echelon(&self) -> Echelon {
        let mut a = self.integer_rows();
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut swaps = 0usize;
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                swaps += 1;
            }
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Echelon { rows: a, pivots, cols: n, swaps }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Exact basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.echelon().kernel()
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        let row_scale: Scalar = (0..n)
            .map(|i| {
                let l = self.row(i).iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                Scalar::from_integer(l)
            })
            .product();
        let e = self.echelon();
        if e.pivots.len() < n {
            return Scalar::zero();
        }
        let mut d = Scalar::from_integer(e.rows[n - 1][n - 1].clone());
        if e.swaps % 2 == 1 {
            d = -d;
        }
        d / row_scale
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] / &piv;
                inv[(c, j)] = &inv[(c, j)] / &piv;
            }
            for i in 0..n {
                if i == c || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..n {
                    let t = &a[(c, j)] * &f;
                    a[(i, j)] -= t;
                    let t = &inv[(c, j)] * &f;
                    inv[(i, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    /// `g · self · g⁻¹`; panics if `g` is singular.
    pub fn conjugate_by(&self, g: &Matrix) -> Matrix {
        let gi = g.inverse().expect("conjugating matrix must be invertible");
        &(g * self) * &gi
    }

    /// Entries flattened row-major, used when a matrix pair becomes a tangent
    /// vector.
    pub fn flatten(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }
}

/// Result of fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
    swaps: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &pc) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[r];
                    let mut s = Scalar::zero();
                    for j in pc + 1..self.cols {
                        if !row[j].is_zero() && !v[j].is_zero() {
                            s += Scalar::from_integer(row[j].clone()) * &v[j];
                        }
                    }
                    v[pc] = -s / Scalar::from_integer(row[pc].clone());
                }
                v
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Matrix {
            type Output = Matrix;
            fn $f(self, rhs: Matrix) -> Matrix {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// JSON shape: list of rows, each entry an integer or a `"p/q"` string.
impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Row(#[serde(with = "super::scalar::serde_scalar::vec")] Vec<Scalar>);
        let rows = Vec::<Row>::deserialize(d)?;
        Matrix::from_rows(rows.into_iter().map(|r| r.0).collect()).map_err(serde::de::Error::custom)
    }
}
