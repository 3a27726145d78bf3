//! Candidate extremal link graphs `Ḡ` on `n - 1` vertices.
//!
//! Layout: the link vertex is `n - 1`, `v1` is vertex 0 and `H = Ḡ - v1` lives
//! on `1..n-1` as consecutive matching pairs, then the isolated vertex `z` if
//! present, then the path `a - b - c` if present. Every attachment set of `v1`
//! is tried and kept when it meets the structural rules: `v1` has a neighbour
//! in every component of `H`, is joined to all of at most one component, and
//! meets the path in exactly one endpoint.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::homology::LinkGraph;
use crate::simplex::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyStructure {
    /// `H` is a perfect matching (even `n`).
    Matching,
    /// A perfect matching plus an isolated vertex (odd `n`).
    MatchingIsolated,
    /// A perfect matching, an isolated vertex and a 3-vertex path (even `n`).
    MatchingIsolatedPath,
}

impl FamilyStructure {
    pub const ALL: [FamilyStructure; 3] =
        [FamilyStructure::Matching, FamilyStructure::MatchingIsolated, FamilyStructure::MatchingIsolatedPath];

    pub fn name(self) -> &'static str {
        match self {
            FamilyStructure::Matching => "matching",
            FamilyStructure::MatchingIsolated => "matching-isolated",
            FamilyStructure::MatchingIsolatedPath => "matching-isolated-path",
        }
    }
}

impl fmt::Display for FamilyStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyStructure::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown family structure `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct FamilyCandidate {
    pub structure: FamilyStructure,
    /// Components of `H` with at least two vertices that `v1` is joined to entirely.
    pub fully_attached: usize,
    pub graph: LinkGraph,
}

/// Components of `H` as vertex lists, or `None` if the structure does not fit `n`.
fn components(n: usize, s: FamilyStructure) -> Option<Vec<Vec<VertexId>>> {
    let h = n - 2;
    let (pairs, z, path) = match s {
        FamilyStructure::Matching if h % 2 == 0 => (h / 2, false, false),
        FamilyStructure::MatchingIsolated if h % 2 == 1 => (h / 2, true, false),
        FamilyStructure::MatchingIsolatedPath if h % 2 == 0 && h >= 4 => ((h - 4) / 2, true, true),
        _ => return None,
    };
    let mut out: Vec<Vec<VertexId>> = (0..pairs as VertexId).map(|i| vec![1 + 2 * i, 2 + 2 * i]).collect();
    let mut next = 1 + 2 * pairs as VertexId;
    if z {
        out.push(vec![next]);
        next += 1;
    }
    if path {
        out.push(vec![next, next + 1, next + 2]);
    }
    Some(out)
}

pub fn family_candidates(n: usize, structure: Option<FamilyStructure>) -> Result<Vec<FamilyCandidate>> {
    if n < 8 {
        return Err(Error::range(format!("the extremal family is defined for n >= 8, got {n}")));
    }
    if n > 26 {
        return Err(Error::range(format!("attachment enumeration is limited to n <= 26, got {n}")));
    }
    let apex = (n - 1) as VertexId;
    let mut out = Vec::new();
    for s in FamilyStructure::ALL.into_iter().filter(|s| structure.is_none_or(|t| t == *s)) {
        let Some(comps) = components(n, s) else { continue };
        let h = n - 2;
        for mask in 0u32..(1 << h) {
            let attached = |v: VertexId| mask >> (v - 1) & 1 == 1;
            let mut full = 0;
            let mut full_nontrivial = 0;
            let mut ok = true;
            for c in &comps {
                let hits = c.iter().filter(|&&v| attached(v)).count();
                if hits == 0 {
                    ok = false;
                    break;
                }
                if c.len() == 3 && !(hits == 1 && (attached(c[0]) || attached(c[2]))) {
                    ok = false;
                    break;
                }
                if hits == c.len() {
                    full += 1;
                    full_nontrivial += usize::from(c.len() > 1);
                }
            }
            if !ok || full > 1 {
                continue;
            }
            let mut g = LinkGraph::new(n, apex)?;
            for c in &comps {
                for w in c.windows(2) {
                    g.add_edge(w[0], w[1])?;
                }
            }
            for v in 1..=h as VertexId {
                if attached(v) {
                    g.add_edge(0, v)?;
                }
            }
            out.push(FamilyCandidate { structure: s, fully_attached: full_nontrivial, graph: g });
        }
    }
    Ok(out)
}

/// All admissible graphs `Ḡ` of the requested structure (all structures if `None`).
pub fn extremal_link_family(n: usize, structure: Option<FamilyStructure>) -> Result<Vec<LinkGraph>> {
    Ok(family_candidates(n, structure)?.into_iter().map(|c| c.graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_selects_structures() {
        let odd = family_candidates(9, None).unwrap();
        assert!(odd.iter().all(|c| c.structure == FamilyStructure::MatchingIsolated));
        // 3 pairs, one endpoint each, z attached
        assert_eq!(odd.len(), 8);
        let even = family_candidates(10, None).unwrap();
        let count = |s| even.iter().filter(|c| c.structure == s).count();
        // 4 pairs: 2^4 with no full pair, 4 * 2^3 with one
        assert_eq!(count(FamilyStructure::Matching), 16 + 32);
        // 2 pairs, z, path endpoint a or c
        assert_eq!(count(FamilyStructure::MatchingIsolatedPath), 4 * 2);
    }

    #[test]
    fn graphs_have_n_minus_1_vertices() {
        for c in family_candidates(12, None).unwrap() {
            assert_eq!(c.graph.n(), 12);
            assert_eq!(c.graph.apex(), 11);
            assert_eq!(c.graph.degree(11), 0);
        }
        assert!(family_candidates(7, None).is_err());
    }

    #[test]
    fn structure_names_round_trip() {
        for s in FamilyStructure::ALL {
            assert_eq!(s.name().parse::<FamilyStructure>().unwrap(), s);
        }
    }
}
