//! Hypercut predicates.
//!
//! A nonempty face set is a hypercut iff its complement is closed (no shadow)
//! and has corank one, i.e. rank `C(n-1, d) - 1`.

use crate::complex::{complement, FaceSet};
use crate::error::{Error, Result};
use crate::simplex::{binomial, Field, VertexId};

use super::coboundary::{coboundary_of, is_coboundary, vertex_link};
use super::lambda::{lambda_connected_complex, lambda_connected_graph};
use super::rank::{face_rank, hypertree_size, shadow};

pub fn is_hypercut(fs: &FaceSet, field: Field) -> bool {
    if fs.is_empty() {
        return false;
    }
    let rest = complement(fs);
    let target = hypertree_size(fs.n(), fs.dim());
    if target == 0 || face_rank(&rest, field) != target - 1 {
        return false;
    }
    shadow(&rest, field).is_empty()
}

/// Size a perfect hypercut would have: `C(n, d+1) - C(n-1, d) + 1`.
pub fn perfect_hypercut_size(n: usize, d: usize) -> usize {
    binomial(n, d + 1) + 1 - hypertree_size(n, d)
}

pub fn is_perfect_hypercut(fs: &FaceSet, field: Field) -> bool {
    fs.len() == perfect_hypercut_size(fs.n(), fs.dim()) && is_hypercut(fs, field)
}

/// For a 2-dimensional F2 coboundary: every vertex link is Λ-connected.
pub fn is_hypercut_via_links(c: &FaceSet) -> Result<bool> {
    if c.dim() != 2 {
        return Err(Error::invalid("the link criterion is for 2-dimensional face sets"));
    }
    if !is_coboundary(c) {
        return Err(Error::precondition("face set is not a coboundary"));
    }
    for v in 0..c.n() as VertexId {
        if !lambda_connected_graph(&vertex_link(c, v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coboundary generated by a Λ-connected `(d-1)`-complex `k` on `n - 1`
/// vertices, placed as the link of the new vertex `v` (vertices `>= v` shift up by one).
pub fn hypercut_from_lambda_link(k: &FaceSet, v: VertexId) -> Result<FaceSet> {
    if !lambda_connected_complex(k) {
        return Err(Error::precondition("link complex is not Λ-connected"));
    }
    let n = k.n() + 1;
    if v as usize >= n {
        return Err(Error::invalid(format!("vertex {v} outside [0, {n})")));
    }
    let shifted = FaceSet::new(n, k.dim(), k.iter().map(|f| f.map(|x| if x >= v { x + 1 } else { x }).expect("shift is injective")))?;
    coboundary_of(&shifted, n, k.dim() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;
    use crate::homology::coboundary::coboundary_of_graph;
    use crate::homology::graph::LinkGraph;

    #[test]
    fn single_edge_coboundary_is_a_hypercut() {
        let c = coboundary_of_graph(&LinkGraph::from_edges(5, 4, [(0, 1)]).unwrap());
        assert!(is_hypercut(&c, Field::F2));
        assert!(is_hypercut_via_links(&c).unwrap());
    }

    #[test]
    fn full_complex_is_not_a_hypercut() {
        for n in 4..7 {
            assert!(!is_hypercut(&complete_faces(n, 2).unwrap(), Field::F2));
        }
    }

    #[test]
    fn empty_is_not_a_hypercut() {
        assert!(!is_hypercut(&FaceSet::empty(5, 2), Field::Q));
        assert!(!is_hypercut_via_links(&FaceSet::empty(5, 2)).unwrap());
    }

    #[test]
    fn non_coboundary_rejected_by_link_test() {
        let fs = FaceSet::new(5, 2, [crate::simplex::Simplex::new([0, 1, 2]).unwrap()]).unwrap();
        assert!(is_hypercut_via_links(&fs).is_err());
    }

    #[test]
    fn path_link_gives_hypercut_triangle_link_errors() {
        let path = LinkGraph::from_edges(5, 4, [(0, 1), (1, 2)]).unwrap().to_face_set();
        let path = FaceSet::new(5, 1, path.iter().cloned()).unwrap();
        // k lives on 5 vertices, so the coboundary is on 6
        let c = hypercut_from_lambda_link(&path, 5).unwrap();
        assert_eq!(c.n(), 6);
        assert!(is_hypercut(&c, Field::F2));
        let tri = LinkGraph::from_edges(5, 4, [(0, 1), (1, 2), (0, 2)]).unwrap().to_face_set();
        assert!(hypercut_from_lambda_link(&tri, 5).is_err());
    }
}
