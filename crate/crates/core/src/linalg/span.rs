//! Incremental span membership.
//!
//! A [`SpanState`] holds a fully reduced basis: every basis row is keyed by its
//! pivot column and is zero in all other pivot columns. Reducing a query vector
//! then needs one pass over the pivot positions it initially touches.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::gf2::{first_set, flip_bit, get_bit, ones, set_bit, words_for, xor_into};
use crate::error::{Error, Result};
use crate::simplex::Field;

/// A sparse integer vector with a declared ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    pub dim: usize,
    /// Strictly increasing indices with nonzero values.
    pub entries: Vec<(usize, i64)>,
}

impl SparseVector {
    pub fn new(dim: usize, mut entries: Vec<(usize, i64)>) -> Result<Self> {
        entries.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            if i >= dim {
                return Err(Error::invalid(format!("index {i} outside dimension {dim}")));
            }
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += v,
                _ => merged.push((i, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        Ok(SparseVector { dim, entries: merged })
    }

    pub fn from_dense(v: &[i64]) -> Self {
        SparseVector {
            dim: v.len(),
            entries: v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, &x)| (i, x)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
struct Gf2Basis {
    stride: usize,
    pivot_mask: Vec<u64>,
    rows: HashMap<usize, Vec<u64>>,
}

#[derive(Clone, Debug)]
struct QBasis {
    /// pivot column -> primitive sparse row, positive at the pivot
    rows: HashMap<usize, Vec<(usize, BigInt)>>,
    pivot_mask: Vec<u64>,
}

#[derive(Clone, Debug)]
enum Basis {
    F2(Gf2Basis),
    Q(QBasis),
}

#[derive(Clone, Debug)]
pub struct SpanState {
    field: Field,
    dim: usize,
    basis: Basis,
}

impl SpanState {
    pub fn new(field: Field, dim: usize) -> Self {
        let words = words_for(dim);
        let basis = match field {
            Field::F2 => Basis::F2(Gf2Basis { stride: words, pivot_mask: vec![0; words], rows: HashMap::new() }),
            Field::Q => Basis::Q(QBasis { rows: HashMap::new(), pivot_mask: vec![0; words] }),
        };
        SpanState { field, dim, basis }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.basis {
            Basis::F2(b) => b.rows.len(),
            Basis::Q(b) => b.rows.len(),
        }
    }

    /// Pivot columns of the current basis, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        let mask = match &self.basis {
            Basis::F2(b) => &b.pivot_mask,
            Basis::Q(b) => &b.pivot_mask,
        };
        ones(mask).collect()
    }

    fn check(&self, v: &SparseVector) -> Result<()> {
        if v.dim != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: v.dim });
        }
        Ok(())
    }

    /// True iff `v` lies in the current span. Does not modify the state.
    pub fn in_span(&self, v: &SparseVector) -> Result<bool> {
        self.check(v)?;
        Ok(match &self.basis {
            Basis::F2(b) => first_set(&b.reduce(v)).is_none(),
            Basis::Q(b) => b.reduce(v).is_empty(),
        })
    }

    /// Adds `v` to the span. Returns `true` when `v` was already in it.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool> {
        self.check(v)?;
        Ok(match &mut self.basis {
            Basis::F2(b) => b.insert(v),
            Basis::Q(b) => b.insert(v),
        })
    }

    /// Value-style insertion: returns the extended state and whether `v` was absorbed.
    pub fn span_insert(mut self, v: &SparseVector) -> Result<(SpanState, bool)> {
        let absorbed = self.insert(v)?;
        Ok((self, absorbed))
    }
}

impl Gf2Basis {
    fn reduce(&self, v: &SparseVector) -> Vec<u64> {
        let mut w = vec![0u64; self.stride];
        for &(i, c) in &v.entries {
            if c.rem_euclid(2) == 1 {
                flip_bit(&mut w, i);
            }
        }
        let hits: Vec<usize> = w
            .iter()
            .zip(&self.pivot_mask)
            .enumerate()
            .flat_map(|(k, (a, m))| {
                let mut x = a & m;
                std::iter::from_fn(move || {
                    if x == 0 {
                        None
                    } else {
                        let b = x.trailing_zeros() as usize;
                        x &= x - 1;
                        Some(k * 64 + b)
                    }
                })
            })
            .collect();
        for p in hits {
            xor_into(&mut w, &self.rows[&p]);
        }
        w
    }

    fn insert(&mut self, v: &SparseVector) -> bool {
        let w = self.reduce(v);
        let Some(p) = first_set(&w) else { return true };
        for row in self.rows.values_mut() {
            if get_bit(row, p) {
                xor_into(row, &w);
            }
        }
        set_bit(&mut self.pivot_mask, p);
        self.rows.insert(p, w);
        false
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// `a * x - b * y` on sparse rows.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, x) in row.iter_mut() {
        *x /= &g;
    }
}

fn entry(row: &SparseRow, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|k| &row[k].1)
}

impl QBasis {
    fn reduce(&self, v: &SparseVector) -> SparseRow {
        let mut w: SparseRow = v.entries.iter().map(|&(i, x)| (i, BigInt::from(x))).collect();
        let hits: Vec<usize> = v.entries.iter().map(|e| e.0).filter(|&i| get_bit(&self.pivot_mask, i)).collect();
        for p in hits {
            let Some(wp) = entry(&w, p).cloned() else { continue };
            let row = &self.rows[&p];
            let rp = entry(row, p).expect("pivot entry");
            let g = wp.gcd(rp);
            let a = rp / &g;
            let b = &wp / &g;
            w = combine(&a, &w, &b, row);
            primitive(&mut w);
        }
        w
    }

    fn insert(&mut self, v: &SparseVector) -> bool {
        let mut w = self.reduce(v);
        let Some(&(p, ref lead)) = w.first() else { return true };
        if lead.is_negative() {
            for (_, x) in w.iter_mut() {
                *x = -&*x;
            }
        }
        let wp = entry(&w, p).expect("lead").clone();
        for row in self.rows.values_mut() {
            if let Some(rc) = entry(row, p).cloned() {
                let g = rc.gcd(&wp);
                let a = &wp / &g;
                let b = &rc / &g;
                *row = combine(&a, row, &b, &w);
                primitive(row);
            }
        }
        set_bit(&mut self.pivot_mask, p);
        self.rows.insert(p, w);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(dim: usize, e: &[(usize, i64)]) -> SparseVector {
        SparseVector::new(dim, e.to_vec()).unwrap()
    }

    #[test]
    fn reinsert_is_absorbed() {
        for field in [Field::F2, Field::Q] {
            let st = SpanState::new(field, 5);
            let v = sv(5, &[(1, 1), (3, -1)]);
            let (st, a1) = st.span_insert(&v).unwrap();
            let (st, a2) = st.span_insert(&v).unwrap();
            assert!(!a1 && a2);
            assert_eq!(st.rank(), 1);
            assert!(st.in_span(&v).unwrap());
        }
    }

    #[test]
    fn zero_vector_is_absorbed() {
        for field in [Field::F2, Field::Q] {
            let mut st = SpanState::new(field, 4);
            assert!(st.insert(&sv(4, &[])).unwrap());
            assert_eq!(st.rank(), 0);
            assert!(st.in_span(&sv(4, &[])).unwrap());
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let mut st = SpanState::new(Field::Q, 4);
        assert!(st.insert(&sv(5, &[(0, 1)])).is_err());
        assert!(st.in_span(&sv(3, &[(0, 1)])).is_err());
    }

    #[test]
    fn fields_disagree_on_odd_cycle() {
        // e01 + e12 + e02 (unsigned) is dependent mod 2 only
        let vs = [sv(3, &[(0, 1), (1, 1)]), sv(3, &[(1, 1), (2, 1)])];
        let target = sv(3, &[(0, 1), (2, 1)]);
        let mut f2 = SpanState::new(Field::F2, 3);
        let mut q = SpanState::new(Field::Q, 3);
        for v in &vs {
            f2.insert(v).unwrap();
            q.insert(v).unwrap();
        }
        assert!(f2.in_span(&target).unwrap());
        assert!(!q.in_span(&target).unwrap());
        assert!(q.in_span(&sv(3, &[(0, 1), (2, -1)])).unwrap());
    }

    #[test]
    fn q_basis_stays_reduced() {
        let mut st = SpanState::new(Field::Q, 6);
        for v in [
            sv(6, &[(2, 3), (4, 1)]),
            sv(6, &[(0, 2), (2, 1), (5, 1)]),
            sv(6, &[(1, 1), (2, -4), (4, 7)]),
        ] {
            st.insert(&v).unwrap();
        }
        let Basis::Q(b) = &st.basis else { unreachable!() };
        let pivots: Vec<usize> = b.rows.keys().copied().collect();
        for (&p, row) in &b.rows {
            assert!(entry(row, p).unwrap().is_positive());
            for &q in &pivots {
                if q != p {
                    assert!(entry(row, q).is_none());
                }
            }
        }
    }
}
