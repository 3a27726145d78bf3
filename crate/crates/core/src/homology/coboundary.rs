//! Coboundaries over F2 and vertex links of 2-dimensional coboundaries.

use crate::complex::{link, FaceSet};
use crate::error::{Error, Result};
use crate::simplex::{binomial, subsets_colex, Simplex, VertexId};

use super::graph::LinkGraph;

/// `{σ : |∂σ ∩ A| odd}` for a set `A` of `(d-1)`-faces.
pub fn coboundary_of(a: &FaceSet, n: usize, d: usize) -> Result<FaceSet> {
    if d == 0 || a.dim() != d - 1 {
        return Err(Error::invalid(format!("coboundary into dimension {d} needs ({})-faces", d as isize - 1)));
    }
    if a.n() > n {
        return Err(Error::invalid(format!("generator lives on {} > {n} vertices", a.n())));
    }
    let mut hit = vec![false; binomial(n, d + 1)];
    for tau in a.iter() {
        for x in 0..n as VertexId {
            if let Some(sigma) = tau.with_vertex(x) {
                let r = sigma.colex_rank();
                hit[r] = !hit[r];
            }
        }
    }
    Ok(FaceSet::from_ranks(n, d, hit.iter().enumerate().filter(|(_, &b)| b).map(|(r, _)| r)))
}

/// The coboundary generated by a graph.
pub fn coboundary_of_graph(g: &LinkGraph) -> FaceSet {
    coboundary_of(&g.to_face_set(), g.n(), 2).expect("graph generator is 1-dimensional")
}

/// True iff the indicator of `fs` is orthogonal (mod 2) to every column of `∂_{d+1}`.
pub fn is_coboundary(fs: &FaceSet) -> bool {
    let n = fs.n();
    let d = fs.dim();
    if d + 2 > n {
        return true;
    }
    let ind = fs.indicator();
    subsets_colex(n, d + 2).all(|rho| rho.facets().filter(|f| ind[f.colex_rank()]).count() % 2 == 0)
}

/// `link_v(C)` of a 2-dimensional face set, as a graph with apex `v`.
pub fn vertex_link(c: &FaceSet, v: VertexId) -> Result<LinkGraph> {
    if c.dim() != 2 {
        return Err(Error::invalid("vertex links as graphs need a 2-dimensional face set"));
    }
    let l = link(c, &Simplex::from_sorted(&[v]))?;
    LinkGraph::from_face_set(&l, v)
}

/// Recomputes the link at `to` from the link at `from` without looking at `C` again.
///
/// With `H = link_from(C)` as a generator, a pair `ab` avoiding `to` lies in
/// `link_to(C)` iff `H(a,b) + H(to,a) + H(to,b)` is odd. That is `H` XORed with
/// the stars centred at the `H`-neighbours of `to`.
pub fn regenerate_link(c: &FaceSet, from: VertexId, to: VertexId) -> Result<LinkGraph> {
    if !is_coboundary(c) {
        return Err(Error::precondition("face set is not a coboundary"));
    }
    let h = vertex_link(c, from)?;
    let n = c.n();
    let at = |x: VertexId, y: VertexId| x != y && x != from && y != from && h.has_edge(x, y);
    let mut g = LinkGraph::new(n, to)?;
    for a in 0..n as VertexId {
        for b in a + 1..n as VertexId {
            if a == to || b == to {
                continue;
            }
            if at(a, b) ^ at(to, a) ^ at(to, b) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;

    fn g(n: usize, apex: u32, e: &[(u32, u32)]) -> LinkGraph {
        LinkGraph::from_edges(n, apex, e.iter().copied()).unwrap()
    }

    #[test]
    fn single_edge_generates_triangles_through_it() {
        let c = coboundary_of_graph(&g(5, 4, &[(0, 1)]));
        let faces: Vec<String> = c.iter().map(|f| f.to_string()).collect();
        assert_eq!(faces, vec!["(0,1,2)", "(0,1,3)", "(0,1,4)"]);
    }

    #[test]
    fn path_generates_2n_minus_6() {
        let c = coboundary_of_graph(&g(5, 4, &[(0, 1), (1, 2)]));
        // brute force over all 10 triangles
        let edges = [(0u32, 1u32), (1, 2)];
        let brute = complete_faces(5, 2)
            .unwrap()
            .iter()
            .filter(|t| {
                edges.iter().filter(|(a, b)| t.contains(*a) && t.contains(*b)).count() % 2 == 1
            })
            .count();
        assert_eq!(c.len(), brute);
        assert_eq!(c.len(), 2 * 5 - 6);
    }

    #[test]
    fn vertex_star_generates_nothing() {
        // every triangle meets a full vertex star in 0 or 2 edges
        let star = FaceSet::new(6, 1, (1..6).map(|v| Simplex::new([0, v]).unwrap())).unwrap();
        assert!(coboundary_of(&star, 6, 2).unwrap().is_empty());
        let partial = g(6, 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(!coboundary_of_graph(&partial).is_empty());
    }

    #[test]
    fn complete_complex_coboundary_parity() {
        for n in 4..8 {
            assert!(is_coboundary(&complete_faces(n, 2).unwrap()));
            // five facets per 4-simplex: odd, so never a coboundary
            assert!(!is_coboundary(&complete_faces(n, 3).unwrap()) || n < 5);
        }
    }

    #[test]
    fn single_face_is_not_a_coboundary() {
        let fs = FaceSet::new(5, 2, [Simplex::new([0, 1, 2]).unwrap()]).unwrap();
        assert!(!is_coboundary(&fs));
    }

    #[test]
    fn regenerate_matches_direct_link() {
        let c = coboundary_of_graph(&g(6, 5, &[(0, 1), (1, 2), (2, 3)]));
        for from in 0..6 {
            for to in 0..6 {
                let r = regenerate_link(&c, from, to).unwrap();
                assert_eq!(r, vertex_link(&c, to).unwrap());
                assert_eq!(coboundary_of_graph(&r), c);
            }
        }
        let bad = FaceSet::new(5, 2, [Simplex::new([0, 1, 2]).unwrap()]).unwrap();
        assert!(regenerate_link(&bad, 0, 1).is_err());
        let empty = FaceSet::empty(5, 2);
        assert_eq!(regenerate_link(&empty, 0, 3).unwrap().edge_count(), 0);
    }
}
