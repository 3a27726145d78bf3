//! Exhaustive sweep over all 2-dimensional F2 coboundaries on `n <= 8` vertices.
//!
//! Every coboundary `C` is generated by exactly one graph on the vertices other
//! than a fixed apex, namely `link_apex(C)`, so enumerating edge bitmasks of
//! `K_{n-1}` visits each coboundary once.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::homology::{is_almost_hypertree, shadow, LinkGraph};
use crate::simplex::{binomial, subsets_colex, Field, Simplex, VertexId};

use super::report::SearchReport;

/// Largest `n` swept without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 7;
/// Largest `n` the sweep supports at all.
pub const OPT_IN_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub n: usize,
    pub apex: VertexId,
    pub allow_n8: bool,
}

impl SweepConfig {
    pub fn new(n: usize) -> Self {
        SweepConfig { n, apex: n.saturating_sub(1) as VertexId, allow_n8: false }
    }
}

/// Triangles of `K_n` as bitmasks, and the triangles each generator edge toggles.
struct Tables {
    n: usize,
    gen_edges: Vec<(VertexId, VertexId)>,
    toggles: Vec<u64>,
    /// For each vertex, `(triangle bit, opposite edge)` over the triangles through it.
    star: Vec<Vec<(u32, (u8, u8))>>,
}

impl Tables {
    fn new(n: usize, apex: VertexId) -> Self {
        let triangles: Vec<Simplex> = subsets_colex(n, 3).collect();
        let others: Vec<VertexId> = (0..n as VertexId).filter(|&v| v != apex).collect();
        let mut gen_edges = Vec::new();
        for (i, &a) in others.iter().enumerate() {
            for &b in &others[i + 1..] {
                gen_edges.push((a, b));
            }
        }
        let toggles = gen_edges
            .iter()
            .map(|&(a, b)| {
                triangles.iter().enumerate().filter(|(_, t)| t.contains(a) && t.contains(b)).fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let mut star = vec![Vec::new(); n];
        for (i, t) in triangles.iter().enumerate() {
            let v = t.vertices();
            for k in 0..3 {
                let rest: Vec<u8> = v.iter().filter(|&&x| x != v[k]).map(|&x| x as u8).collect();
                star[v[k] as usize].push((i as u32, (rest[0], rest[1])));
            }
        }
        Tables { n, gen_edges, toggles, star }
    }

    fn coboundary(&self, graph_mask: u64) -> u64 {
        let mut c = 0;
        let mut g = graph_mask;
        while g != 0 {
            c ^= self.toggles[g.trailing_zeros() as usize];
            g &= g - 1;
        }
        c
    }

    /// Every vertex link of `c` is Λ-connected.
    fn all_links_lambda_connected(&self, c: u64) -> bool {
        (0..self.n).all(|v| {
            let mut adj = [0u16; 8];
            let mut edges = 0;
            for &(bit, (a, b)) in &self.star[v] {
                if c >> bit & 1 == 1 {
                    adj[a as usize] |= 1 << b;
                    adj[b as usize] |= 1 << a;
                    edges += 1;
                }
            }
            edges > 0 && small_lambda_connected(&adj[..self.n], edges)
        })
    }

    fn graph(&self, mask: u64, apex: VertexId) -> LinkGraph {
        let edges = (0..self.gen_edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.gen_edges[i]);
        LinkGraph::from_edges(self.n, apex, edges).expect("generator edges avoid the apex")
    }
}

/// Λ-connectivity of a graph on at most 8 vertices given by adjacency masks.
fn small_lambda_connected(adj: &[u16], edge_count: usize) -> bool {
    let k = adj.len();
    let mut id = [[0u8; 8]; 8];
    let mut next = 0u8;
    for u in 0..k {
        for v in u + 1..k {
            if adj[u] >> v & 1 == 1 {
                id[u][v] = next;
                id[v][u] = next;
                next += 1;
            }
        }
    }
    let mut parent: [u8; 28] = std::array::from_fn(|i| i as u8);
    fn find(p: &mut [u8; 28], mut x: u8) -> u8 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    let mut classes = edge_count;
    for u in 0..k {
        for v in 0..k {
            if adj[u] >> v & 1 == 0 {
                continue;
            }
            for w in v + 1..k {
                if adj[u] >> w & 1 == 1 && adj[v] >> w & 1 == 0 {
                    let (a, b) = (find(&mut parent, id[u][v]), find(&mut parent, id[u][w]));
                    if a != b {
                        parent[a as usize] = b;
                        classes -= 1;
                    }
                }
            }
        }
    }
    classes == 1
}

#[derive(Default)]
struct Partial {
    best: usize,
    witnesses: Vec<u64>,
    histogram: BTreeMap<usize, u64>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        if other.best > self.best {
            self.best = other.best;
            self.witnesses = other.witnesses;
        } else if other.best == self.best {
            self.witnesses.extend(other.witnesses);
        }
        self
    }
}

fn check_range(cfg: &SweepConfig) -> Result<()> {
    if cfg.n < 4 {
        return Err(Error::range(format!("the sweep needs n >= 4, got {}", cfg.n)));
    }
    let limit = if cfg.allow_n8 { OPT_IN_MAX_N } else { DEFAULT_MAX_N };
    if cfg.n > limit {
        let hint = if cfg.n == OPT_IN_MAX_N { "; n = 8 needs the explicit opt-in" } else { "" };
        return Err(Error::range(format!(
            "exhaustive sweep is limited to n <= {limit}{hint}; use the family search for larger n"
        )));
    }
    if cfg.apex as usize >= cfg.n {
        return Err(Error::invalid(format!("apex {} outside [0, {})", cfg.apex, cfg.n)));
    }
    Ok(())
}

/// Largest F2 hypercut on `n` vertices, with every maximizer.
pub fn max_hypercut_exhaustive(cfg: SweepConfig) -> Result<SearchReport> {
    check_range(&cfg)?;
    let start = Instant::now();
    let t = Tables::new(cfg.n, cfg.apex);
    let e = t.gen_edges.len();
    let total: u64 = 1 << e;
    let chunk = (total / 256).max(1);
    let result = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|ci| {
            let mut p = Partial::default();
            for mask in ci * chunk..((ci + 1) * chunk).min(total) {
                let c = t.coboundary(mask);
                if c == 0 || !t.all_links_lambda_connected(c) {
                    continue;
                }
                let size = c.count_ones() as usize;
                *p.histogram.entry(size).or_default() += 1;
                if size > p.best {
                    p.best = size;
                    p.witnesses.clear();
                }
                if size == p.best {
                    p.witnesses.push(mask);
                }
            }
            p
        })
        .reduce(Partial::default, Partial::merge);
    let mut witnesses: Vec<LinkGraph> = result.witnesses.iter().map(|&m| t.graph(m, cfg.apex)).collect();
    witnesses.sort_by_key(|g| g.edges());
    let hist = result.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ");
    let cuts: u64 = result.histogram.values().sum();
    let perfect = binomial(cfg.n, 3) + 1 - binomial(cfg.n - 1, 2);
    Ok(SearchReport {
        kind: "exhaustive".into(),
        n: cfg.n,
        field: Field::F2,
        max_size: result.best,
        maximizers: witnesses.len(),
        witnesses,
        enumerated: total,
        wall_time: start.elapsed(),
        extra: vec![
            ("config.apex".into(), cfg.apex.to_string()),
            ("hypercuts".into(), cuts.to_string()),
            ("size_histogram".into(), hist),
            ("perfect_size".into(), perfect.to_string()),
            ("perfect_exists".into(), (result.best == perfect).to_string()),
        ],
    })
}

/// `C(n,3) - maxcut(n) - (C(n-1,2) - 1)`: the least shadow of an F2 almost-hypertree.
pub fn min_shadow_almost_hypertree(n: usize) -> Result<usize> {
    let rep = max_hypercut_exhaustive(SweepConfig::new(n))?;
    Ok(binomial(n, 3) - rep.max_size - (binomial(n - 1, 2) - 1))
}

/// The same quantity by enumerating every face set of almost-hypertree size (`n <= 6`).
pub fn min_shadow_by_enumeration(n: usize, field: Field) -> Result<usize> {
    if !(4..=6).contains(&n) {
        return Err(Error::range(format!("direct almost-hypertree enumeration is limited to 4 <= n <= 6, got {n}")));
    }
    let total = binomial(n, 3);
    let k = binomial(n - 1, 2) - 1;
    let best = subsets_colex(total, k)
        .par_bridge()
        .filter_map(|pick| {
            let fs = FaceSet::from_ranks(n, 2, pick.vertices().iter().map(|&r| r as usize));
            is_almost_hypertree(&fs, field).then(|| shadow(&fs, field).len())
        })
        .min();
    best.ok_or_else(|| Error::precondition("no almost-hypertree found"))
}
