//! Size of a 2-dimensional coboundary from statistics of its generating graph.

use super::graph::LinkGraph;

/// Edge count, degree sequence (largest first) and triangle count of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutProfile {
    pub m: usize,
    pub degrees: Vec<usize>,
    pub t: usize,
}

impl CutProfile {
    pub fn of(g: &LinkGraph) -> Self {
        CutProfile { m: g.edge_count(), degrees: g.degree_sequence(), t: g.triangle_count() }
    }

    pub fn is_consistent(&self) -> bool {
        let k = self.degrees.len();
        self.degrees.iter().sum::<usize>() == 2 * self.m
            && self.degrees.windows(2).all(|w| w[0] >= w[1])
            && self.t <= k * k.saturating_sub(1) * k.saturating_sub(2) / 6
    }

    pub fn sum_of_squares(&self) -> usize {
        self.degrees.iter().map(|d| d * d).sum()
    }
}

/// `n·m − Σ d_v² + 4t`.
pub fn cut_size_formula(p: &CutProfile, n: usize) -> i64 {
    (n * p.m) as i64 - p.sum_of_squares() as i64 + 4 * p.t as i64
}
