//! Elementary `d`-collapses.
//!
//! Collapsing is greedy: the exposed `(d-1)`-faces wait in a FIFO queue seeded
//! in colex order. Elementary collapses form a terminating, locally confluent
//! rewriting system on the remaining `d`-faces, so one maximal greedy run
//! decides collapsibility.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub exposed: Simplex,
    pub removed: Simplex,
}

impl fmt::Display for CollapseStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &Simplex| s.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{} -> {}", join(&self.exposed), join(&self.removed))
    }
}

#[derive(Clone, Debug)]
pub struct CollapseSequence {
    pub steps: Vec<CollapseStep>,
    pub residual: FaceSet,
}

impl CollapseSequence {
    pub fn residual_count(&self) -> usize {
        self.residual.len()
    }

    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    /// One `τ -> σ` line per step.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_steps(text: &str) -> Result<Vec<CollapseStep>> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |m: &str| Error::Parse { line: i + 1, column: 1, message: m.into() };
            let (a, b) = line.split_once("->").ok_or_else(|| parse_err("expected `tau -> sigma`"))?;
            let nums = |s: &str| -> Result<Simplex> {
                let v: std::result::Result<Vec<u32>, _> = s.split_whitespace().map(str::parse).collect();
                Simplex::new(v.map_err(|_| parse_err("bad vertex"))?)
            };
            steps.push(CollapseStep { exposed: nums(a)?, removed: nums(b)? });
        }
        Ok(steps)
    }
}

/// Replays steps from `start`, checking each one is a legal elementary collapse.
/// Returns the remaining faces.
pub fn replay(start: &FaceSet, steps: &[CollapseStep]) -> Result<FaceSet> {
    let mut alive = start.faces().clone();
    let mut gone_ridges = std::collections::HashSet::new();
    for (i, st) in steps.iter().enumerate() {
        let bad = |m: &str| Error::precondition(format!("step {} ({st}): {m}", i + 1));
        if !alive.contains(&st.removed) {
            return Err(bad("face not present"));
        }
        if st.exposed.dim() + 1 != st.removed.dim() || !st.exposed.vertices().iter().all(|v| st.removed.contains(*v)) {
            return Err(bad("not a facet of the removed face"));
        }
        if gone_ridges.contains(&st.exposed) {
            return Err(bad("ridge already removed"));
        }
        let cofaces = alive.iter().filter(|s| st.exposed.vertices().iter().all(|v| s.contains(*v))).count();
        if cofaces != 1 {
            return Err(bad("ridge is not exposed"));
        }
        alive.remove(&st.removed);
        gone_ridges.insert(st.exposed.clone());
    }
    FaceSet::new(start.n(), start.dim(), alive)
}

/// `(d-1)`-faces lying in exactly one face of `fs`, paired with that face, in colex order.
pub fn exposed_faces(fs: &FaceSet) -> Vec<(Simplex, Simplex)> {
    let mut count: HashMap<Simplex, (usize, &Simplex)> = HashMap::new();
    for s in fs.iter() {
        for f in s.facets() {
            let e = count.entry(f).or_insert((0, s));
            e.0 += 1;
        }
    }
    let mut out: Vec<(Simplex, Simplex)> =
        count.into_iter().filter(|(_, (c, _))| *c == 1).map(|(f, (_, s))| (f, s.clone())).collect();
    out.sort();
    out
}

pub fn collapse_all(fs: &FaceSet) -> CollapseSequence {
    let faces: Vec<&Simplex> = fs.iter().collect();
    let mut ridge_index: HashMap<Simplex, usize> = HashMap::new();
    let mut ridges: Vec<Simplex> = Vec::new();
    let mut cofaces: Vec<Vec<usize>> = Vec::new();
    let mut face_ridges: Vec<Vec<usize>> = Vec::with_capacity(faces.len());
    for (j, s) in faces.iter().enumerate() {
        let mut mine = Vec::with_capacity(s.dim() + 1);
        for f in s.facets() {
            let id = *ridge_index.entry(f.clone()).or_insert_with(|| {
                ridges.push(f);
                cofaces.push(Vec::new());
                ridges.len() - 1
            });
            cofaces[id].push(j);
            mine.push(id);
        }
        face_ridges.push(mine);
    }
    let mut count: Vec<usize> = cofaces.iter().map(Vec::len).collect();
    let mut alive = vec![true; faces.len()];

    let mut seed: Vec<usize> = (0..ridges.len()).filter(|&r| count[r] == 1).collect();
    seed.sort_by(|&a, &b| ridges[a].cmp(&ridges[b]));
    let mut queue: VecDeque<usize> = seed.into();
    let mut steps = Vec::new();
    while let Some(r) = queue.pop_front() {
        if count[r] != 1 {
            continue;
        }
        let j = *cofaces[r].iter().find(|&&j| alive[j]).expect("one live coface");
        alive[j] = false;
        for &q in &face_ridges[j] {
            count[q] -= 1;
            if count[q] == 1 {
                queue.push_back(q);
            }
        }
        steps.push(CollapseStep { exposed: ridges[r].clone(), removed: faces[j].clone() });
    }
    let residual = FaceSet::new(fs.n(), fs.dim(), faces.iter().zip(&alive).filter(|(_, &a)| a).map(|(s, _)| (*s).clone()))
        .expect("subset of a valid face set");
    CollapseSequence { steps, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete_faces;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn single_face_exposes_all_edges() {
        let fs = FaceSet::new(3, 2, [s(&[0, 1, 2])]).unwrap();
        assert_eq!(exposed_faces(&fs).len(), 3);
        assert!(collapse_all(&fs).is_complete());
    }

    #[test]
    fn tetrahedron_boundary_is_stuck() {
        let fs = complete_faces(4, 2).unwrap();
        assert!(exposed_faces(&fs).is_empty());
        let seq = collapse_all(&fs);
        assert_eq!(seq.residual_count(), 4);
        assert!(seq.steps.is_empty());
    }

    #[test]
    fn sequence_text_replays() {
        let fs = FaceSet::new(5, 2, [s(&[0, 1, 2]), s(&[0, 2, 3]), s(&[0, 3, 4]), s(&[1, 2, 4])]).unwrap();
        let seq = collapse_all(&fs);
        assert!(seq.is_complete());
        let steps = CollapseSequence::parse_steps(&seq.to_text()).unwrap();
        assert_eq!(steps, seq.steps);
        assert!(replay(&fs, &steps).unwrap().is_empty());
    }

    #[test]
    fn illegal_replay_rejected() {
        let fs = complete_faces(4, 2).unwrap();
        let step = CollapseStep { exposed: s(&[0, 1]), removed: s(&[0, 1, 2]) };
        assert!(replay(&fs, &[step]).is_err());
    }
}
