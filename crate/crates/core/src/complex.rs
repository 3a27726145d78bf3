//! Face sets: the top-dimensional faces of a complex with a full lower skeleton.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::simplex::{binomial, subsets_colex, Simplex, VertexId};

/// A set of `d`-faces on the vertex set `[0, n)`. The `(d-1)`-skeleton is taken
/// to be complete. Iteration is in colex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceSet {
    n: usize,
    d: usize,
    faces: BTreeSet<Simplex>,
}

impl FaceSet {
    pub fn empty(n: usize, d: usize) -> Self {
        FaceSet { n, d, faces: BTreeSet::new() }
    }

    /// Validates every face: `d + 1` vertices, all below `n`. Duplicates are an error.
    pub fn new<I: IntoIterator<Item = Simplex>>(n: usize, d: usize, faces: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for f in faces {
            if f.dim() != d {
                return Err(Error::invalid(format!("face {f} is not {d}-dimensional")));
            }
            if f.max_vertex() as usize >= n {
                return Err(Error::invalid(format!("face {f} has a vertex outside [0, {n})")));
            }
            if !set.insert(f.clone()) {
                return Err(Error::invalid(format!("duplicate face {f}")));
            }
        }
        Ok(FaceSet { n, d, faces: set })
    }

    /// Like [`FaceSet::new`] but silently merges duplicates.
    pub fn from_faces_dedup<I: IntoIterator<Item = Simplex>>(n: usize, d: usize, faces: I) -> Result<Self> {
        let v: BTreeSet<Simplex> = faces.into_iter().collect();
        FaceSet::new(n, d, v)
    }

    /// Faces given by colex rank.
    pub fn from_ranks<I: IntoIterator<Item = usize>>(n: usize, d: usize, ranks: I) -> Self {
        let faces = ranks.into_iter().map(|r| Simplex::from_colex_rank(r, d + 1)).collect();
        FaceSet { n, d, faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter()
    }

    pub fn faces(&self) -> &BTreeSet<Simplex> {
        &self.faces
    }

    /// Total number of `d`-faces of `K_n`.
    pub fn universe_size(&self) -> usize {
        binomial(self.n, self.d + 1)
    }

    /// Indicator over the colex index of all `d`-faces of `K_n`.
    pub fn indicator(&self) -> Vec<bool> {
        let mut v = vec![false; self.universe_size()];
        for f in &self.faces {
            v[f.colex_rank()] = true;
        }
        v
    }

    pub fn with_face(&self, s: Simplex) -> Result<FaceSet> {
        if s.dim() != self.d || s.max_vertex() as usize >= self.n {
            return Err(Error::invalid(format!("face {s} does not fit ({}, {})", self.n, self.d)));
        }
        let mut out = self.clone();
        out.faces.insert(s);
        Ok(out)
    }

    pub fn union(&self, other: &FaceSet) -> Result<FaceSet> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        out.faces.extend(other.faces.iter().cloned());
        Ok(out)
    }

    pub fn difference(&self, other: &FaceSet) -> Result<FaceSet> {
        self.check_same_shape(other)?;
        Ok(FaceSet { n: self.n, d: self.d, faces: self.faces.difference(&other.faces).cloned().collect() })
    }

    pub fn intersection_len(&self, other: &FaceSet) -> usize {
        self.faces.intersection(&other.faces).count()
    }

    fn check_same_shape(&self, other: &FaceSet) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::invalid(format!(
                "face sets live in different complexes: ({}, {}) vs ({}, {})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }

    /// Applies a vertex relabelling to every face.
    pub fn map_vertices<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Result<FaceSet> {
        let faces: Result<Vec<Simplex>> = self.faces.iter().map(|s| s.map(&f)).collect();
        FaceSet::new(self.n, self.d, faces?)
    }

    /// Writes the complex file format: a header `n d` followed by one face per line.
    pub fn to_text(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{} {}", self.n, self.d);
        for f in &self.faces {
            let parts: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", parts.join(" "));
        }
        out
    }

    /// Parses the complex file format.
    pub fn parse(text: &str) -> Result<FaceSet> {
        let mut header: Option<(usize, usize)> = None;
        let mut faces = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens = tokenize(raw, line_no)?;
            match header {
                None => {
                    if tokens.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            column: 1,
                            message: format!("expected header `n d`, found {} fields", tokens.len()),
                        });
                    }
                    let (n, d) = (tokens[0].1 as usize, tokens[1].1 as usize);
                    if d >= n.max(1) {
                        return Err(Error::Parse {
                            line: line_no,
                            column: tokens[1].0,
                            message: format!("dimension {d} needs at least {} vertices", d + 1),
                        });
                    }
                    header = Some((n, d));
                }
                Some((n, d)) => {
                    if tokens.len() != d + 1 {
                        return Err(Error::Parse {
                            line: line_no,
                            column: 1,
                            message: format!("expected {} vertices, found {}", d + 1, tokens.len()),
                        });
                    }
                    for w in tokens.windows(2) {
                        if w[1].1 <= w[0].1 {
                            return Err(Error::Parse {
                                line: line_no,
                                column: w[1].0,
                                message: "vertices must be strictly ascending".into(),
                            });
                        }
                    }
                    if let Some(&(col, v)) = tokens.iter().find(|t| t.1 as usize >= n) {
                        return Err(Error::Parse {
                            line: line_no,
                            column: col,
                            message: format!("vertex {v} is outside [0, {n})"),
                        });
                    }
                    let s = Simplex::from_sorted(&tokens.iter().map(|t| t.1).collect::<Vec<_>>());
                    if !faces.insert(s) {
                        return Err(Error::Parse { line: line_no, column: 1, message: "duplicate face".into() });
                    }
                }
            }
        }
        let (n, d) = header.ok_or(Error::Parse { line: 1, column: 1, message: "missing `n d` header".into() })?;
        Ok(FaceSet { n, d, faces })
    }
}

fn tokenize(raw: &str, line: usize) -> Result<Vec<(usize, VertexId)>> {
    let mut out = Vec::new();
    let bytes = raw.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let tok = &raw[start..i];
        let v: VertexId = tok.parse().map_err(|_| Error::Parse {
            line,
            column: start + 1,
            message: format!("`{tok}` is not a non-negative integer"),
        })?;
        out.push((start + 1, v));
    }
    Ok(out)
}

/// All `C(n, d+1)` faces of `K_n^d`.
pub fn complete_faces(n: usize, d: usize) -> Result<FaceSet> {
    if d >= n {
        return Err(Error::invalid(format!("K_{n}^{d} needs d < n")));
    }
    Ok(FaceSet { n, d, faces: subsets_colex(n, d + 1).collect() })
}

/// Faces of `K_n^d` not in `fs`.
pub fn complement(fs: &FaceSet) -> FaceSet {
    let faces = subsets_colex(fs.n, fs.d + 1).filter(|s| !fs.contains(s)).collect();
    FaceSet { n: fs.n, d: fs.d, faces }
}

/// `link_σ(fs)`: faces `τ` disjoint from `σ` with `τ ∪ σ ∈ fs`.
pub fn link(fs: &FaceSet, sigma: &Simplex) -> Result<FaceSet> {
    if sigma.dim() >= fs.d {
        return Err(Error::invalid(format!("link of a {}-face in a {}-complex", sigma.dim(), fs.d)));
    }
    let k = fs.d - sigma.dim() - 1;
    let faces = fs
        .iter()
        .filter(|f| sigma.vertices().iter().all(|v| f.contains(*v)))
        .map(|f| {
            let rest: Vec<VertexId> = f.vertices().iter().copied().filter(|v| !sigma.contains(*v)).collect();
            Simplex::from_sorted(&rest)
        })
        .collect();
    Ok(FaceSet { n: fs.n, d: k, faces })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete_faces(4, 2).unwrap().len(), 4);
        assert_eq!(complete_faces(6, 2).unwrap().len(), 20);
        assert_eq!(complete_faces(5, 1).unwrap().len(), 10);
        assert!(complete_faces(3, 3).is_err());
    }

    #[test]
    fn complement_of_empty_is_everything() {
        let c = complement(&FaceSet::empty(5, 2));
        assert_eq!(c.len(), 10);
        assert_eq!(complement(&c), FaceSet::empty(5, 2));
    }

    #[test]
    fn vertex_and_edge_links() {
        let fs = FaceSet::new(4, 2, [s(&[0, 1, 2]), s(&[0, 1, 3]), s(&[1, 2, 3])]).unwrap();
        let l = link(&fs, &s(&[0])).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.iter().cloned().collect::<Vec<_>>(), vec![s(&[1, 2]), s(&[1, 3])]);

        let single = FaceSet::new(3, 2, [s(&[0, 1, 2])]).unwrap();
        let l = link(&single, &s(&[0, 1])).unwrap();
        assert_eq!(l.iter().cloned().collect::<Vec<_>>(), vec![s(&[2])]);
        assert!(link(&single, &s(&[0, 1, 2])).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        let fs = FaceSet::new(5, 2, [s(&[0, 1, 2]), s(&[1, 3, 4])]).unwrap();
        let text = fs.to_text(&["generated".into()]);
        assert_eq!(FaceSet::parse(&text).unwrap(), fs);
        assert_eq!(FaceSet::parse(&text).unwrap().to_text(&["generated".into()]), text);
    }

    #[test]
    fn parse_errors_report_position() {
        match FaceSet::parse("5 2\n0 1 2\n0 3 2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match FaceSet::parse("# c\n5 2\n0 1 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(FaceSet::parse("5 2\n0 1 7\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(FaceSet::parse("5 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(FaceSet::parse("5 2\n0 1 2\n0 1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(FaceSet::parse("# only comments\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn empty_complex_parses() {
        let fs = FaceSet::parse("6 2\n").unwrap();
        assert!(fs.is_empty());
        assert_eq!((fs.n(), fs.dim()), (6, 2));
    }
}
