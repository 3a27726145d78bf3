//! Vertices, simplices, orientations and chains.
//!
//! A [`Simplex`] is a strictly ascending vertex tuple. Simplices compare in
//! colexicographic order (compare the largest vertex first), which is also the
//! order of their dense index [`Simplex::colex_rank`]. The colex rank of a
//! simplex does not depend on the ambient vertex count, so the same face keeps
//! the same index inside `K_n` for every `n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A vertex label in `[0, n)`. Cyclic constructions read it as an element of `Z_n`.
pub type VertexId = u32;

/// Coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    F2,
    Q,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::F2 => "f2",
            Field::Q => "q",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" | "gf2" => Ok(Field::F2),
            "q" | "rational" => Ok(Field::Q),
            other => Err(Error::invalid(format!("unknown field `{other}` (expected f2 or q)"))),
        }
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// A face given by its strictly ascending vertex list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex(SmallVec<[VertexId; 6]>);

impl Simplex {
    /// Builds a simplex from any vertex order. Fails on an empty or repeated vertex list.
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut v: SmallVec<[VertexId; 6]> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::invalid("a simplex needs at least one vertex"));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated vertex in {v:?}")));
        }
        Ok(Simplex(v))
    }

    /// Builds a simplex from an already strictly ascending slice.
    pub(crate) fn from_sorted(v: &[VertexId]) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(SmallVec::from_slice(v))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        other.0.iter().all(|v| !self.contains(*v))
    }

    /// Union of two vertex sets.
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: SmallVec<[VertexId; 6]> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// The face with the `i`-th vertex removed. `None` for a vertex.
    pub fn facet(&self, i: usize) -> Option<Simplex> {
        if self.0.len() < 2 || i >= self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Simplex(v))
    }

    /// All codimension-one faces, in the order of the removed vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).filter_map(move |i| self.facet(i))
    }

    /// Adds a vertex, failing if it is already present.
    pub fn with_vertex(&self, v: VertexId) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut w = self.0.clone();
                w.insert(pos, v);
                Some(Simplex(w))
            }
        }
    }

    pub fn max_vertex(&self) -> VertexId {
        *self.0.last().expect("nonempty")
    }

    /// Position of the simplex among all simplices of its dimension in colex order.
    pub fn colex_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &v)| binomial(v as usize, i + 1))
            .sum()
    }

    /// Inverse of [`Simplex::colex_rank`] for simplices with `size` vertices.
    pub fn from_colex_rank(mut rank: usize, size: usize) -> Simplex {
        let mut v: SmallVec<[VertexId; 6]> = SmallVec::from_elem(0, size);
        for i in (1..=size).rev() {
            // largest c with C(c, i) <= rank
            let mut c = i - 1;
            while binomial(c + 1, i) <= rank {
                c += 1;
            }
            rank -= binomial(c, i);
            v[i - 1] = c as VertexId;
        }
        Simplex(v)
    }

    /// Relabels every vertex through `f`; the result is re-sorted.
    pub fn map<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Result<Simplex> {
        Simplex::new(self.0.iter().map(|&v| f(v)))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sign of the permutation that sorts `v` (which must have distinct entries).
pub fn permutation_sign(v: &[VertexId]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A simplex together with an orientation relative to its ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedSimplex {
    pub base: Simplex,
    pub sign: i8,
}

impl OrientedSimplex {
    /// The ascending (`+1`) orientation.
    pub fn positive(base: Simplex) -> Self {
        OrientedSimplex { base, sign: 1 }
    }

    /// Orientation given by an ordered vertex tuple.
    pub fn from_ordered(vertices: &[VertexId]) -> Result<Self> {
        let base = Simplex::new(vertices.iter().copied())?;
        Ok(OrientedSimplex { base, sign: permutation_sign(vertices) })
    }

    pub fn negated(&self) -> Self {
        OrientedSimplex { base: self.base.clone(), sign: -self.sign }
    }
}

/// A finite formal sum of simplices with integer coefficients, read over `field`.
/// Over F2 coefficients are kept reduced to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    field: Field,
    terms: BTreeMap<Simplex, i64>,
}

impl Chain {
    pub fn zero(field: Field) -> Self {
        Chain { field, terms: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, s: Simplex, coeff: i64) {
        let entry = self.terms.entry(s.clone()).or_insert(0);
        *entry += coeff;
        if self.field == Field::F2 {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn coeff(&self, s: &Simplex) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    /// Boundary of the chain, extended linearly.
    pub fn boundary(&self) -> Result<Chain> {
        let mut out = Chain::zero(self.field);
        for (s, c) in self.iter() {
            for (f, c2) in boundary_of_simplex(&OrientedSimplex::positive(s.clone()), self.field)?.iter() {
                out.add_term(f.clone(), c * c2);
            }
        }
        Ok(out)
    }
}

/// `∂σ = Σ (-1)^i (σ minus its i-th vertex)`, multiplied by the orientation sign.
pub fn boundary_of_simplex(sigma: &OrientedSimplex, field: Field) -> Result<Chain> {
    if sigma.base.dim() == 0 {
        return Err(Error::invalid("the boundary of a vertex is not modelled"));
    }
    let mut chain = Chain::zero(field);
    for i in 0..=sigma.base.dim() {
        let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
        chain.add_term(sigma.base.facet(i).expect("dim >= 1"), sign * sigma.sign as i64);
    }
    Ok(chain)
}

/// Iterates all `k`-subsets of `[0, n)` in colex order.
pub fn subsets_colex(n: usize, k: usize) -> impl Iterator<Item = Simplex> {
    let total = binomial(n, k);
    (0..total).map(move |r| Simplex::from_colex_rank(r, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn boundary_of_triangle() {
        let c = boundary_of_simplex(&OrientedSimplex::positive(s(&[0, 1, 2])), Field::Q).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.coeff(&s(&[1, 2])), 1);
        assert_eq!(c.coeff(&s(&[0, 2])), -1);
        assert_eq!(c.coeff(&s(&[0, 1])), 1);
    }

    #[test]
    fn boundary_of_edge() {
        let c = boundary_of_simplex(&OrientedSimplex::positive(s(&[0, 1])), Field::Q).unwrap();
        assert_eq!(c.coeff(&s(&[1])), 1);
        assert_eq!(c.coeff(&s(&[0])), -1);
    }

    #[test]
    fn boundary_over_f2_drops_signs() {
        let c = boundary_of_simplex(&OrientedSimplex::positive(s(&[0, 1, 2])), Field::F2).unwrap();
        assert!(c.iter().all(|(_, k)| k == 1));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn vertex_boundary_is_an_error() {
        assert!(boundary_of_simplex(&OrientedSimplex::positive(s(&[3])), Field::Q).is_err());
    }

    #[test]
    fn swapping_two_vertices_negates_boundary() {
        let a = OrientedSimplex::from_ordered(&[0, 1, 2, 3]).unwrap();
        let b = OrientedSimplex::from_ordered(&[1, 0, 2, 3]).unwrap();
        let ca = boundary_of_simplex(&a, Field::Q).unwrap();
        let cb = boundary_of_simplex(&b, Field::Q).unwrap();
        for (f, k) in ca.iter() {
            assert_eq!(cb.coeff(f), -k);
        }
    }

    #[test]
    fn boundary_squared_vanishes() {
        let c = Chain::zero(Field::Q);
        let mut c = c;
        c.add_term(s(&[0, 2, 3, 5]), 1);
        assert!(c.boundary().unwrap().boundary().unwrap().is_empty());
    }

    #[test]
    fn colex_rank_roundtrip_and_order() {
        let all: Vec<Simplex> = subsets_colex(7, 3).collect();
        assert_eq!(all.len(), 35);
        for (i, f) in all.iter().enumerate() {
            assert_eq!(f.colex_rank(), i);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], s(&[0, 1, 2]));
        assert_eq!(all[1], s(&[0, 1, 3]));
        assert_eq!(all[3], s(&[1, 2, 3]));
    }

    #[test]
    fn repeated_vertex_rejected() {
        assert!(Simplex::new([1, 1]).is_err());
        assert!(Simplex::new([]).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(31, 3), 4495);
    }
}
