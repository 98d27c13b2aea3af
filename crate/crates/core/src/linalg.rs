//! Exact dense linear algebra over ℚ and ℤ.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot columns.
/// Zero rows are dropped.
pub fn rref(rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows · x = 0}` in the standard free-variable form, which is
/// canonical for the subspace.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Matrix {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Basis of `{y : y · rows = 0}`.
pub fn left_kernel(rows: &[Vec<Rational>], ncols: usize) -> Matrix {
    nullspace(&transpose(rows, ncols), rows.len())
}

pub fn transpose(rows: &[Vec<Rational>], ncols: usize) -> Matrix {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Determinant by Gaussian elimination over ℚ.
pub fn det(mut m: Matrix) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let piv = m[c][c].clone();
        acc *= &piv;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    acc
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Incrementally maintained echelon basis of a row space.
///
/// Rows are kept fully reduced against each other; `insert` reports whether
/// the new row enlarged the span.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

/// Expresses vectors in the row space of a fixed set of independent rows.
#[derive(Debug, Clone)]
pub struct RowSpaceSolver {
    // rref row j = Σ_i transform[j][i] · original row i
    reduced: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl RowSpaceSolver {
    /// `rows` must be linearly independent.
    pub fn new(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let r = rows.len();
        let mut aug: Matrix = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut v = row.clone();
                v.extend((0..r).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                v
            })
            .collect();
        let pivots = rref_limited(&mut aug, ncols);
        assert_eq!(pivots.len(), r, "rows are not independent");
        let reduced = aug.iter().map(|row| row[..ncols].to_vec()).collect();
        let transform = aug.iter().map(|row| row[ncols..].to_vec()).collect();
        Self {
            reduced,
            pivots,
            transform,
        }
    }

    /// Coordinates of `v` in the original rows, or `None` if `v` is outside their span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let r = self.pivots.len();
        let mut residual = v.to_vec();
        let mut coords = vec![Rational::zero(); r];
        for (j, &p) in self.pivots.iter().enumerate() {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(&self.reduced[j]) {
                *x -= &f * y;
            }
            for (c, t) in coords.iter_mut().zip(&self.transform[j]) {
                *c += &f * t;
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }
}

/// RREF that only pivots within the first `limit` columns.
fn rref_limited(rows: &mut Matrix, limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn abs_det(m: Matrix) -> Rational {
    det(m).abs()
}
