//! Rank, acyclicity and shadows of face sets.

use rayon::prelude::*;

use crate::boundary::boundary_vector;
use crate::complex::FaceSet;
use crate::linalg::SpanState;
use crate::simplex::{binomial, subsets_colex, Field};

/// Span of the boundary columns of `fs`.
pub fn span_of(fs: &FaceSet, field: Field) -> SpanState {
    let mut st = SpanState::new(field, binomial(fs.n(), fs.dim()));
    for f in fs.iter() {
        st.insert(&boundary_vector(f, fs.n(), field)).expect("boundary columns have the ambient length");
    }
    st
}

pub fn face_rank(fs: &FaceSet, field: Field) -> usize {
    if fs.is_empty() {
        return 0;
    }
    span_of(fs, field).rank()
}

pub fn is_acyclic(fs: &FaceSet, field: Field) -> bool {
    face_rank(fs, field) == fs.len()
}

/// `C(n-1, d)`, the size of a hypertree.
pub fn hypertree_size(n: usize, d: usize) -> usize {
    binomial(n.saturating_sub(1), d)
}

pub fn is_hypertree(fs: &FaceSet, field: Field) -> bool {
    fs.len() == hypertree_size(fs.n(), fs.dim()) && is_acyclic(fs, field)
}

pub fn is_almost_hypertree(fs: &FaceSet, field: Field) -> bool {
    let t = hypertree_size(fs.n(), fs.dim());
    t >= 1 && fs.len() == t - 1 && is_acyclic(fs, field)
}

/// Faces outside `fs` whose boundary lies in the span of `fs`'s boundaries.
pub fn shadow(fs: &FaceSet, field: Field) -> FaceSet {
    if fs.is_empty() {
        return FaceSet::empty(fs.n(), fs.dim());
    }
    let st = span_of(fs, field);
    let n = fs.n();
    let candidates: Vec<_> = subsets_colex(n, fs.dim() + 1).filter(|s| !fs.contains(s)).collect();
    let hits: Vec<usize> = candidates
        .par_iter()
        .filter(|s| st.in_span(&boundary_vector(s, n, field)).expect("same ambient length"))
        .map(|s| s.colex_rank())
        .collect();
    FaceSet::from_ranks(n, fs.dim(), hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;
    use crate::simplex::Simplex;

    fn tetra_boundary() -> FaceSet {
        complete_faces(4, 2).unwrap()
    }

    #[test]
    fn complete_rank() {
        assert_eq!(face_rank(&complete_faces(6, 2).unwrap(), Field::Q), 10);
        assert_eq!(face_rank(&FaceSet::empty(6, 2), Field::Q), 0);
    }

    #[test]
    fn tetrahedron_boundary_is_a_cycle() {
        assert!(!is_acyclic(&tetra_boundary(), Field::F2));
        assert!(!is_acyclic(&tetra_boundary(), Field::Q));
    }

    #[test]
    fn empty_set_has_no_shadow() {
        assert!(shadow(&FaceSet::empty(6, 2), Field::F2).is_empty());
    }

    #[test]
    fn triangle_shadow_is_fourth_face() {
        let fs = FaceSet::new(
            4,
            2,
            [Simplex::new([0, 1, 2]).unwrap(), Simplex::new([0, 1, 3]).unwrap(), Simplex::new([0, 2, 3]).unwrap()],
        )
        .unwrap();
        for field in [Field::F2, Field::Q] {
            let sh = shadow(&fs, field);
            assert_eq!(sh.iter().map(|s| s.to_string()).collect::<Vec<_>>(), vec!["(1,2,3)"]);
        }
    }

    #[test]
    fn full_complex_is_not_a_hypertree() {
        assert!(!is_hypertree(&complete_faces(5, 2).unwrap(), Field::Q));
    }
}
