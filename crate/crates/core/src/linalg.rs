//! Exact linear algebra: rational matrices, fraction-free (Bareiss)
//! elimination over any integral domain with exact division, kernels, and
//! the two-sided diagonal normal form used by the witness search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Integral domain with exact division, as needed by Bareiss elimination.
/// `exact_div` may assume the division has no remainder.
pub trait Domain: Clone + Zero + One {
    fn ref_mul(&self, rhs: &Self) -> Self;
    fn ref_sub(&self, rhs: &Self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Domain for BigInt {
    fn ref_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ref_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact division in Bareiss step");
        q
    }
}

/// Fraction-free Gaussian elimination; returns the rank. The grid is
/// consumed as scratch space.
pub fn bareiss_rank<D: Domain>(grid: &mut [Vec<D>]) -> usize {
    let rows = grid.len();
    if rows == 0 {
        return 0;
    }
    let cols = grid[0].len();
    let mut prev = D::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        // deterministic pivot: first row (from `rank` down) with nonzero entry
        let pivot_row = (rank..rows).find(|&i| !grid[i][col].is_zero());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        grid.swap(rank, pr);
        let pivot = grid[rank][col].clone();
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = pivot
                    .ref_mul(&grid[i][j])
                    .ref_sub(&grid[i][col].ref_mul(&grid[rank][j]));
                grid[i][j] = t.exact_div(&prev);
            }
            grid[i][col] = D::zero();
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Fraction-free determinant of a square grid. Returns zero when singular.
pub fn bareiss_det<D: Domain>(grid: &mut [Vec<D>]) -> D {
    let n = grid.len();
    if n == 0 {
        return D::one();
    }
    assert!(grid.iter().all(|r| r.len() == n), "det needs a square grid");
    let mut prev = D::one();
    let mut sign_flip = false;
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !grid[i][k].is_zero());
        let Some(pr) = pivot_row else {
            return D::zero();
        };
        if pr != k {
            grid.swap(k, pr);
            sign_flip = !sign_flip;
        }
        let pivot = grid[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = pivot
                    .ref_mul(&grid[i][j])
                    .ref_sub(&grid[i][k].ref_mul(&grid[k][j]));
                grid[i][j] = t.exact_div(&prev);
            }
            grid[i][k] = D::zero();
        }
        prev = pivot;
    }
    let det = grid[n - 1][n - 1].clone();
    if sign_flip {
        D::zero().ref_sub(&det)
    } else {
        det
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(RatMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rat::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let t = a * rhs.at(k, c);
                    *out.at_mut(r, c) += t;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("matrix addition shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, t| acc + t)
            })
            .collect())
    }

    /// Clears denominators row by row; the resulting integer grid has the
    /// same rank and kernel as the original matrix.
    pub fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                self.row(r)
                    .iter()
                    .map(|e| e.numer() * (&lcm / e.denom()))
                    .collect()
            })
            .collect()
    }

    /// Exact rank via fraction-free elimination on the cleared integer grid.
    pub fn rank(&self) -> usize {
        let mut grid = self.to_integer_rows();
        bareiss_rank(&mut grid)
    }

    /// Exact determinant via fraction-free elimination; requires square.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Shape("determinant requires a square matrix".into()));
        }
        let mut scale = Rat::one();
        let grid: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let lcm = self
                    .row(r)
                    .iter()
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                scale *= Rat::from_integer(lcm.clone());
                self.row(r)
                    .iter()
                    .map(|e| e.numer() * (&lcm / e.denom()))
                    .collect()
            })
            .collect();
        let mut grid = grid;
        let d = bareiss_det(&mut grid);
        Ok(Rat::from_integer(d) / scale)
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(pr, j).clone();
                *m.at_mut(pr, j) = m.at(r, j).clone();
                *m.at_mut(r, j) = tmp;
            }
            let inv = m.at(r, c).recip();
            for j in 0..m.cols {
                let t = m.at(r, j) * &inv;
                *m.at_mut(r, j) = t;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let t = m.at(i, j) - &(m.at(r, j) * &f);
                        *m.at_mut(i, j) = t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Canonical basis of the right kernel. One vector per free column, in
    /// column order, each scaled to a primitive integer vector whose first
    /// nonzero coordinate is positive.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for c in 0..self.cols {
                if let Some(row) = pivot_set[c] {
                    v[c] = -rref.at(row, free).clone();
                }
            }
            basis.push(primitive_integer_vector(&v));
        }
        basis
    }

    /// Right kernel dimension without materializing a basis.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Scales a nonzero rational vector to primitive integer form with positive
/// first nonzero coordinate.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<Rat> {
    let lcm = v.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let ints: Vec<BigInt> = v.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, e| acc.gcd(&e.abs()));
    let gcd = if Zero::is_zero(&gcd) {
        BigInt::one()
    } else {
        gcd
    };
    let mut ints: Vec<BigInt> = ints.into_iter().map(|x| x / &gcd).collect();
    if let Some(first) = ints.iter().find(|x| !Zero::is_zero(*x)) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -x.clone();
            }
        }
    }
    ints.into_iter().map(Rat::from_integer).collect()
}

/// Invertible P, Q with P * A * Q = diag(1, ..., 1, 0, ..., 0) (r ones).
/// Pivoting is deterministic: first nonzero entry of the working block in
/// row-major order.
pub fn diagonal_normal_form(a: &RatMatrix) -> (RatMatrix, RatMatrix, usize) {
    let n = a.rows();
    let m = a.cols();
    let mut work = a.clone();
    let mut p = RatMatrix::identity(n);
    let mut q = RatMatrix::identity(m);
    let mut r = 0;
    loop {
        // locate pivot in the untouched lower-right block
        let mut pivot = None;
        'scan: for i in r..n {
            for j in r..m {
                if !work.at(i, j).is_zero() {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut work, r, pi);
        swap_rows(&mut p, r, pi);
        swap_cols(&mut work, r, pj);
        swap_cols(&mut q, r, pj);
        let inv = work.at(r, r).recip();
        scale_row(&mut work, r, &inv);
        scale_row(&mut p, r, &inv);
        for i in 0..n {
            if i != r && !work.at(i, r).is_zero() {
                let f = work.at(i, r).clone();
                row_sub(&mut work, i, r, &f);
                row_sub(&mut p, i, r, &f);
            }
        }
        for j in 0..m {
            if j != r && !work.at(r, j).is_zero() {
                let f = work.at(r, j).clone();
                col_sub(&mut work, j, r, &f);
                col_sub(&mut q, j, r, &f);
            }
        }
        r += 1;
        if r == n.min(m) {
            break;
        }
    }
    (p, q, r)
}

fn swap_rows(m: &mut RatMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m.at(a, j).clone();
        *m.at_mut(a, j) = m.at(b, j).clone();
        *m.at_mut(b, j) = t;
    }
}

fn swap_cols(m: &mut RatMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m.at(i, a).clone();
        *m.at_mut(i, a) = m.at(i, b).clone();
        *m.at_mut(i, b) = t;
    }
}

fn scale_row(m: &mut RatMatrix, r: usize, s: &Rat) {
    for j in 0..m.cols() {
        let t = m.at(r, j) * s;
        *m.at_mut(r, j) = t;
    }
}

/// row_i -= f * row_r
fn row_sub(m: &mut RatMatrix, i: usize, r: usize, f: &Rat) {
    for j in 0..m.cols() {
        let t = m.at(i, j) - &(m.at(r, j) * f);
        *m.at_mut(i, j) = t;
    }
}

/// col_j -= f * col_r
fn col_sub(m: &mut RatMatrix, j: usize, r: usize, f: &Rat) {
    for i in 0..m.rows() {
        let t = m.at(i, j) - &(m.at(i, r) * f);
        *m.at_mut(i, j) = t;
    }
}
