use std::fmt;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, VertexId};

/// Largest vertex count a [`LinkGraph`] supports (adjacency rows are single words).
pub const MAX_LINK_VERTICES: usize = 64;

/// A simple graph on `[0, n)` minus one distinguished vertex `apex`.
///
/// For a 2-dimensional face set `C` and a vertex `v`, `link_v(C)` is such a graph
/// with apex `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkGraph {
    n: usize,
    apex: VertexId,
    adj: Vec<u64>,
}

impl LinkGraph {
    pub fn new(n: usize, apex: VertexId) -> Result<Self> {
        if n > MAX_LINK_VERTICES {
            return Err(Error::range(format!("link graphs support at most {MAX_LINK_VERTICES} vertices, got {n}")));
        }
        if apex as usize >= n {
            return Err(Error::invalid(format!("apex {apex} outside [0, {n})")));
        }
        Ok(LinkGraph { n, apex, adj: vec![0; n] })
    }

    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(n: usize, apex: VertexId, edges: I) -> Result<Self> {
        let mut g = LinkGraph::new(n, apex)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Reads a 1-dimensional face set as a graph; no edge may touch `apex`.
    pub fn from_face_set(fs: &FaceSet, apex: VertexId) -> Result<Self> {
        if fs.dim() != 1 {
            return Err(Error::invalid("a link graph comes from a 1-dimensional face set"));
        }
        LinkGraph::from_edges(fs.n(), apex, fs.iter().map(|e| (e.vertices()[0], e.vertices()[1])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apex(&self) -> VertexId {
        self.apex
    }

    /// The `n - 1` vertices other than the apex.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n as VertexId).filter(move |&v| v != self.apex)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v || u as usize >= self.n || v as usize >= self.n || u == self.apex || v == self.apex {
            return Err(Error::invalid(format!("edge {u}-{v} is not allowed in a link graph with apex {}", self.apex)));
        }
        self.adj[u as usize] |= 1 << v;
        self.adj[v as usize] |= 1 << u;
        Ok(())
    }

    pub fn toggle_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u != self.apex && v != self.apex);
        self.adj[u as usize] ^= 1 << v;
        self.adj[v as usize] ^= 1 << u;
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize] >> v & 1 == 1
    }

    pub fn neighbours(&self, u: VertexId) -> u64 {
        self.adj[u as usize]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u as usize].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n as VertexId {
            let mut higher = self.adj[u as usize] & !((2u64 << u) - 1);
            while higher != 0 {
                let v = higher.trailing_zeros();
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees of the `n - 1` non-apex vertices, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            let common = self.adj[u as usize] & self.adj[v as usize] & !((2u64 << v) - 1);
            t += common.count_ones() as usize;
        }
        t
    }

    /// Complement on the non-apex vertices.
    pub fn complement(&self) -> LinkGraph {
        let mut g = LinkGraph { n: self.n, apex: self.apex, adj: vec![0; self.n] };
        let full: u64 = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        let mask = full & !(1u64 << self.apex);
        for u in self.vertices() {
            g.adj[u as usize] = !self.adj[u as usize] & mask & !(1u64 << u);
        }
        g
    }

    pub fn to_face_set(&self) -> FaceSet {
        FaceSet::new(self.n, 1, self.edges().into_iter().map(|(u, v)| Simplex::from_sorted(&[u, v])))
            .expect("edges are valid 1-faces")
    }
}

impl fmt::Debug for LinkGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkGraph(n={}, apex={}, edges={:?})", self.n, self.apex, self.edges())
    }
}
