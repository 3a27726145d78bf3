//! The collapsible complex `A_n` on `Z_n` that stays collapsible after adding
//! any face, and its polygon gadgets `C_{x,y}`.

use std::collections::BTreeSet;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, VertexId};

fn check_n(n: usize) -> Result<()> {
    if n % 2 == 0 || n < 7 {
        return Err(Error::range(format!("A_n needs an odd n >= 7, got {n}")));
    }
    Ok(())
}

/// `ρ_{x,a} = {x, x + ⌊a/2⌋, x + a}`.
pub fn rho(n: usize, x: usize, a: usize) -> Simplex {
    let v = |k: usize| ((x + k) % n) as VertexId;
    Simplex::new([v(0), v(a / 2), v(a)]).expect("1 < a < n/2 gives distinct vertices")
}

/// Lengths `a` with `1 < a < n/2`, `a ≠ 3`, longest first.
fn face_lengths(n: usize) -> impl Iterator<Item = usize> {
    (2..=(n - 1) / 2).rev().filter(|&a| a != 3)
}

/// `A_n = {ρ_{x,a} : 1 < a < n/2, a ≠ 3, x ∈ Z_n}`.
pub fn collapsible_shadowless_complex(n: usize) -> Result<FaceSet> {
    check_n(n)?;
    FaceSet::new(n, 2, face_lengths(n).flat_map(|a| (0..n).map(move |x| rho(n, x, a))))
}

/// Start and length of the pair `{p, q}` read in its short direction.
fn short_edge(n: usize, p: VertexId, q: VertexId) -> (usize, usize) {
    let (p, q) = (p as usize, q as usize);
    let fwd = (q + n - p) % n;
    if fwd < n - fwd {
        (p, fwd)
    } else {
        (q, n - fwd)
    }
}

/// The subcomplex `C_{x,y}` of `A_n`.
#[derive(Clone, Debug)]
pub struct PolygonGadget {
    pub n: usize,
    pub x: VertexId,
    pub y: VertexId,
    pub faces: BTreeSet<Simplex>,
    /// Boundary edges of lengths 1 and 3, in order from `x` to `y`.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl PolygonGadget {
    /// Vertices in walking order from `x` to `y`.
    pub fn path(&self) -> Vec<VertexId> {
        let mut out = vec![self.x];
        out.extend(self.edges.iter().map(|e| e.1));
        out
    }
}

fn unroll(n: usize, x: usize, a: usize, faces: &mut BTreeSet<Simplex>, edges: &mut Vec<(VertexId, VertexId)>) {
    if a == 1 || a == 3 {
        edges.push((x as VertexId, ((x + a) % n) as VertexId));
        return;
    }
    let b = a / 2;
    unroll(n, x, b, faces, edges);
    unroll(n, (x + b) % n, a - b, faces, edges);
    faces.insert(rho(n, x, a));
}

/// `C_{x,y}`, read along the short direction of the pair.
pub fn polygon_gadget(n: usize, x: VertexId, y: VertexId) -> Result<PolygonGadget> {
    check_n(n)?;
    if x == y || x as usize >= n || y as usize >= n {
        return Err(Error::invalid(format!("({x}, {y}) is not an edge of K_{n}")));
    }
    let (start, a) = short_edge(n, x, y);
    let mut faces = BTreeSet::new();
    let mut edges = Vec::new();
    unroll(n, start, a, &mut faces, &mut edges);
    let end = ((start + a) % n) as VertexId;
    Ok(PolygonGadget { n, x: start as VertexId, y: end, faces, edges })
}

/// `Δ_σ = {σ} ∪ C_{x,y} ∪ C_{x,z} ∪ C_{y,z}` for `σ = {x, y, z} ∉ A_n`.
pub fn delta_sigma(n: usize, sigma: &Simplex) -> Result<FaceSet> {
    let a = collapsible_shadowless_complex(n)?;
    if sigma.dim() != 2 || sigma.max_vertex() as usize >= n {
        return Err(Error::invalid(format!("{sigma} is not a 2-face of K_{n}")));
    }
    if a.contains(sigma) {
        return Err(Error::precondition(format!("{sigma} already lies in A_{n}")));
    }
    let v = sigma.vertices();
    let mut faces: BTreeSet<Simplex> = [sigma.clone()].into();
    for (p, q) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
        faces.extend(polygon_gadget(n, p, q)?.faces);
    }
    FaceSet::new(n, 2, faces)
}

/// Runs the longest-first collapse of `A_n ∪ {σ}` as far as it goes: in phase
/// `a`, each `ρ_{x,a}` whose edge `(x, x+a)` lies in no other remaining face is
/// removed. Returns what is left.
pub fn top_down_residual(n: usize, sigma: &Simplex) -> Result<FaceSet> {
    let a_n = collapsible_shadowless_complex(n)?;
    let mut alive = a_n.with_face(sigma.clone())?.faces().clone();
    for a in face_lengths(n) {
        for x in 0..n {
            let f = rho(n, x, a);
            let e = [x as VertexId, ((x + a) % n) as VertexId];
            let others = alive.iter().filter(|s| **s != f && s.contains(e[0]) && s.contains(e[1])).count();
            if others == 0 {
                alive.remove(&f);
            }
        }
    }
    FaceSet::new(n, 2, alive)
}
