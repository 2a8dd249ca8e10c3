//! Test-side oracles written independently of the library's elimination and
//! grid-search code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cmspace::aut::random::random_scalar;
use cmspace::cm::CmPoint;
use cmspace::linalg::{Matrix, Scalar};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, height: u32) -> Matrix {
    Matrix::from_vec(n, (0..n * n).map(|_| random_scalar(rng, height)).collect())
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let g = random_matrix(rng, n, 3);
        if g.is_invertible() {
            return g;
        }
    }
}

pub fn conjugate_point(p: &CmPoint, g: &Matrix) -> CmPoint {
    CmPoint::new(p.x().conjugate_by(g), p.y().conjugate_by(g)).unwrap()
}

/// Multivariate polynomial: exponent vector → coefficient.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MPoly(BTreeMap<Vec<u32>, Scalar>);

impl MPoly {
    pub fn constant(k: usize, c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![0; k], c);
        }
        MPoly(m)
    }

    /// `c · t_i`.
    pub fn linear(k: usize, i: usize, c: Scalar) -> Self {
        let mut e = vec![0; k];
        e[i] = 1;
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        MPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut m = self.0.clone();
        for (e, c) in &o.0 {
            let v = m.entry(e.clone()).or_insert_with(Scalar::zero);
            *v += c;
            if v.is_zero() {
                m.remove(e);
            }
        }
        MPoly(m)
    }

    pub fn neg(&self) -> MPoly {
        MPoly(self.0.iter().map(|(e, c)| (e.clone(), -c)).collect())
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let mut single = BTreeMap::new();
                single.insert(e, c1 * c2);
                out = out.add(&MPoly(single));
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    // (permutation, is_even), by recursive insertion
    if n == 0 {
        return vec![(vec![], true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // moving n-1 from the end to `pos` takes len - pos transpositions
            let swaps = p.len() - pos;
            out.push((q, even == (swaps % 2 == 0)));
        }
    }
    out
}

/// Leibniz expansion of the determinant of a matrix of polynomials.
pub fn symbolic_det(m: &[Vec<MPoly>], k: usize) -> MPoly {
    let n = m.len();
    let mut det = MPoly::constant(k, Scalar::zero());
    for (perm, even) in permutations(n) {
        let mut term = MPoly::constant(k, Scalar::one());
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&m[i][j]);
        }
        det = det.add(&if even { term } else { term.neg() });
    }
    det
}

/// `det(Σ tᵢ Bᵢ)` as a polynomial in the `tᵢ`.
pub fn generic_det(basis: &[Matrix]) -> MPoly {
    let k = basis.len();
    let n = basis[0].dim();
    let entries: Vec<Vec<MPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    basis
                        .iter()
                        .enumerate()
                        .fold(MPoly::constant(k, Scalar::zero()), |acc, (i, b)| {
                            acc.add(&MPoly::linear(k, i, b[(r, c)].clone()))
                        })
                })
                .collect()
        })
        .collect();
    symbolic_det(&entries, k)
}

/// Whether the span contains an invertible matrix over the algebraic
/// closure: the generic determinant is not the zero polynomial.
pub fn span_oracle(basis: &[Matrix]) -> bool {
    !basis.is_empty() && !generic_det(basis).is_zero()
}

/// Null space of a dense rational system by plain Gauss-Jordan elimination.
pub fn null_space(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Scalar::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}

/// Brute force at `n = 2`: write `g = [[a, b], [c, d]]` symbolically, solve
/// the eight linear equations `g·X = X'·g`, `g·Y = Y'·g` for `(a, b, c, d)`,
/// and ask whether `det g = ad − bc` vanishes identically on the solutions.
pub fn conjugate_2x2_oracle(p: &CmPoint, q: &CmPoint) -> bool {
    assert_eq!(p.n(), 2);
    let var = |i: usize, j: usize| 2 * i + j;
    let mut rows = Vec::new();
    for (src, dst) in [(p.x(), q.x()), (p.y(), q.y())] {
        for i in 0..2 {
            for j in 0..2 {
                let mut row = vec![Scalar::zero(); 4];
                for k in 0..2 {
                    row[var(i, k)] += &src[(k, j)];
                    row[var(k, j)] -= &dst[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let ns = null_space(rows, 4);
    let k = ns.len();
    if k == 0 {
        return false;
    }
    let g = |v: usize| {
        ns.iter().enumerate().fold(MPoly::constant(k, Scalar::zero()), |acc, (t, basis)| {
            acc.add(&MPoly::linear(k, t, basis[v].clone()))
        })
    };
    let det = g(0).mul(&g(3)).add(&g(1).mul(&g(2)).neg());
    !det.is_zero()
}

/// Trace coordinates `(tr X, tr Y, tr X², tr XY, tr Y²)`, which generate the
/// invariants of pairs of 2×2 matrices.
pub fn trace_coordinates(p: &CmPoint) -> [Scalar; 5] {
    let (x, y) = (p.x(), p.y());
    [x.trace(), y.trace(), (x * x).trace(), (x * y).trace(), (y * y).trace()]
}

pub fn pick<T: Clone>(rng: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())].clone()
}
