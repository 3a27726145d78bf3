//! Dense matrices over GF(2) with rows packed into 64-bit words.

use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn flip_bit(words: &mut [u64], i: usize) {
    words[i / 64] ^= 1 << (i % 64);
}

#[inline]
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

pub(crate) fn first_set(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Iterates the indices of set bits.
pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Gf2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, got: r.len() });
            }
            for (j, &b) in r.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        get_bit(self.row(i), j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let s = self.stride;
        let row = &mut self.data[i * s..(i + 1) * s];
        if get_bit(row, j) != value {
            flip_bit(row, j);
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in ones(self.row(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, got: other.rows });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for i in 0..self.rows {
            for k in ones(self.row(i)) {
                let src = other.row(k);
                xor_into(&mut out.data[i * s..(i + 1) * s], src);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|w| *w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        let s = self.stride;
        let (lo, hi) = self.data.split_at_mut(dst.max(src) * s);
        let (d, sr) = if dst < src {
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        xor_into(d, sr);
    }

    /// Reduces in place to reduced row echelon form and returns the pivot columns.
    /// Pivots are chosen at the leftmost column, using the lowest available row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else { continue };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank by forward elimination keyed on each row's first set bit.
    pub fn rank(&self) -> usize {
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut leads: Vec<usize> = Vec::new();
        for i in 0..self.rows {
            let mut v = self.row(i).to_vec();
            loop {
                let Some(lead) = first_set(&v) else { break };
                match leads.iter().position(|&l| l == lead) {
                    Some(k) => xor_into(&mut v, &basis[k]),
                    None => {
                        leads.push(lead);
                        basis.push(v);
                        break;
                    }
                }
            }
        }
        basis.len()
    }

    /// Basis of the right kernel `{x : Mx = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![false; self.cols];
            x[f] = true;
            for (r, &p) in pivots.iter().enumerate() {
                if m.get(r, f) {
                    x[p] = true;
                }
            }
            out.push(x);
        }
        out
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let s: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(Gf2Matrix::zeros(5, 70).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(5, 70).kernel_basis().len(), 70);
    }

    #[test]
    fn small_rank_and_kernel() {
        let m = Gf2Matrix::from_rows(&[
            vec![true, true, false],
            vec![false, true, true],
            vec![true, false, true],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![true, true, true]]);
    }

    #[test]
    fn padding_bits_stay_clear() {
        let mut m = Gf2Matrix::zeros(3, 65);
        m.set(0, 64, true);
        m.set(1, 64, true);
        m.rref();
        for i in 0..3 {
            assert_eq!(m.row(i)[1] >> 1, 0);
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Gf2Matrix::from_rows(&[vec![true], vec![true, false]]).is_err());
    }
}
