//! Exact integer matrices for rank computations over Q.
//!
//! Rows are kept as integer vectors. A row stands for itself divided by an
//! implicit positive denominator, so row scaling never leaves the integers and
//! no rational arithmetic is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, got: r.len() });
            }
            data.push(r.iter().map(|&x| BigInt::from(x)).collect());
        }
        Ok(ExactMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, got: other.rows });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Rank by classical Bareiss elimination. Every intermediate entry is a minor
    /// of the input, so the divisions are exact.
    pub fn bareiss_rank(&self) -> usize {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Rank by sparse-aware fraction-free elimination: only rows with a nonzero
    /// in the pivot column are touched, and each touched row is divided by its content.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Fully reduced echelon form. Returns the primitive integer rows (pivot entry
    /// positive, zero in every other pivot column) and the pivot columns.
    pub fn rref(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a = self.data.clone();
        let m = self.rows;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            make_primitive(&mut a[r]);
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                eliminate(row, &pivot_row, c);
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    /// Integer basis of the right kernel, one primitive vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let lcm = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (r, &p)| acc.lcm(&rows[r][p]));
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![BigInt::zero(); self.cols];
            x[f] = lcm.clone();
            for (r, &p) in pivots.iter().enumerate() {
                if !rows[r][f].is_zero() {
                    x[p] = -(&rows[r][f] * &lcm) / &rows[r][p];
                }
            }
            make_primitive(&mut x);
            out.push(x);
        }
        out
    }
}

/// `row <- (piv/g) * row - (row[c]/g) * pivot_row`, then divide by the content.
fn eliminate(row: &mut [BigInt], pivot_row: &[BigInt], c: usize) {
    let g = row[c].gcd(&pivot_row[c]);
    let a = &pivot_row[c] / &g;
    let b = &row[c] / &g;
    for (x, y) in row.iter_mut().zip(pivot_row) {
        if y.is_zero() {
            if !x.is_zero() {
                *x *= &a;
            }
        } else {
            *x = &a * &*x - &b * y;
        }
    }
    make_primitive(row);
}

pub(crate) fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x /= &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix() {
        let m = ExactMatrix::zeros(4, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.bareiss_rank(), 0);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn rank_over_q_differs_from_f2() {
        // rows of an odd cycle: singular mod 2, full rank over Q
        let m = ExactMatrix::from_i64_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bareiss_rank(), 3);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = ExactMatrix::from_i64_rows(&[vec![2, 4, -2, 6], vec![1, 3, 0, 1], vec![3, 7, -2, 7]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len() + m.rank(), 4);
        for x in &k {
            for i in 0..m.rows() {
                let dot: BigInt = m.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
