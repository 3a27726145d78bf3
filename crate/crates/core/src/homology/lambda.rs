//! Λ-connectivity of graphs and of pure `(d-1)`-complexes.
//!
//! Two incident edges `uv, uw` are Λ-adjacent when `vw` is missing. In higher
//! dimension two `(d-1)`-faces are Λ-adjacent when their union `σ` has `d+1`
//! vertices and they are the only facets of `σ` present. A non-empty set is
//! Λ-connected when the transitive closure of the relation has one class.

use std::collections::HashMap;

use crate::complex::FaceSet;
use crate::simplex::{Simplex, VertexId};

use super::graph::LinkGraph;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), classes: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.classes -= 1;
        }
    }

    pub(crate) fn classes(&self) -> usize {
        self.classes
    }
}

/// Number of Λ-classes of the edge set.
pub fn lambda_classes_graph(g: &LinkGraph) -> usize {
    let edges = g.edges();
    let mut index = HashMap::with_capacity(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        index.insert((u, v), i);
    }
    let key = |a: VertexId, b: VertexId| if a < b { (a, b) } else { (b, a) };
    let mut uf = UnionFind::new(edges.len());
    for u in g.vertices() {
        let nbrs: Vec<VertexId> = (0..g.n() as VertexId).filter(|&x| g.has_edge(u, x)).collect();
        for (i, &v) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(v, w) {
                    uf.union(index[&key(u, v)], index[&key(u, w)]);
                }
            }
        }
    }
    uf.classes()
}

pub fn lambda_connected_graph(g: &LinkGraph) -> bool {
    g.edge_count() > 0 && lambda_classes_graph(g) == 1
}

/// Number of Λ-classes of a pure complex given by its top faces.
pub fn lambda_classes_complex(k: &FaceSet) -> usize {
    let faces: Vec<&Simplex> = k.iter().collect();
    let index: HashMap<&Simplex, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut uf = UnionFind::new(faces.len());
    for (i, tau) in faces.iter().enumerate() {
        for x in 0..k.n() as VertexId {
            let Some(sigma) = tau.with_vertex(x) else { continue };
            let mut present = sigma.facets().filter_map(|f| index.get(&f).copied());
            let (Some(a), Some(b), None) = (present.next(), present.next(), present.next()) else { continue };
            let other = if a == i { b } else { a };
            uf.union(i, other);
        }
    }
    uf.classes()
}

pub fn lambda_connected_complex(k: &FaceSet) -> bool {
    !k.is_empty() && lambda_classes_complex(k) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;

    fn g(e: &[(u32, u32)]) -> LinkGraph {
        LinkGraph::from_edges(8, 7, e.iter().copied()).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert!(lambda_connected_graph(&g(&[(0, 1), (1, 2)])));
        assert!(!lambda_connected_graph(&g(&[(0, 1), (1, 2), (0, 2)])));
        assert_eq!(lambda_classes_graph(&g(&[(0, 1), (1, 2), (0, 2)])), 3);
        assert!(lambda_connected_graph(&g(&[(0, 1), (0, 2), (0, 3), (0, 4)])));
        assert!(lambda_connected_graph(&g(&[(3, 4)])));
        assert!(!lambda_connected_graph(&g(&[])));
        assert!(!lambda_connected_graph(&g(&[(0, 1), (2, 3)])));
    }

    #[test]
    fn complete_skeleton_has_no_adjacencies() {
        for (n, d) in [(5usize, 2usize), (6, 3), (6, 2)] {
            let k = complete_faces(n, d - 1).unwrap();
            assert!(!lambda_connected_complex(&k));
            assert_eq!(lambda_classes_complex(&k), k.len());
        }
    }

    #[test]
    fn triangle_complex_specialisation() {
        let k = g(&[(0, 1), (1, 2)]).to_face_set();
        assert!(lambda_connected_complex(&k));
        let tri = g(&[(0, 1), (1, 2), (0, 2)]).to_face_set();
        assert!(!lambda_connected_complex(&tri));
    }
}
