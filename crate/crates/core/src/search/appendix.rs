//! Minimizing `g(γ, x, y) = γ - x² - γy + y/2 + xy` over the feasible region
//! `1 <= γ <= 9/4`, `0 <= y <= x <= min(γ/2, 1)`, `x + y <= γ - 1/2`,
//! `x + y <= (1 + γ)/2`. All arithmetic is exact.

use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptPoint {
    pub gamma: Rational,
    pub x: Rational,
    pub y: Rational,
}

impl OptPoint {
    pub fn new(gamma: Rational, x: Rational, y: Rational) -> Self {
        OptPoint { gamma, x, y }
    }

    pub fn from_ints(gamma: (i128, i128), x: (i128, i128), y: (i128, i128)) -> Self {
        let r = |(p, q)| Rational::new(p, q);
        OptPoint::new(r(gamma), r(x), r(y))
    }

    fn to_f64(self) -> [f64; 3] {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        [f(self.gamma), f(self.x), f(self.y)]
    }
}

impl std::fmt::Display for OptPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.gamma, self.x, self.y)
    }
}

/// The two minimizers `(1, 1/2, 0)` and `(2, 1, 1/2)`.
pub fn claimed_optima() -> [OptPoint; 2] {
    [OptPoint::from_ints((1, 1), (1, 2), (0, 1)), OptPoint::from_ints((2, 1), (1, 1), (1, 2))]
}

pub fn appendix_g(p: &OptPoint) -> Rational {
    let half = Rational::new(1, 2);
    p.gamma - p.x * p.x - p.gamma * p.y + p.y * half + p.x * p.y
}

pub fn appendix_feasible(p: &OptPoint) -> bool {
    let (g, x, y) = (p.gamma, p.x, p.y);
    let half = Rational::new(1, 2);
    let xmax = if g * half < Rational::one() { g * half } else { Rational::one() };
    g >= Rational::one()
        && g <= Rational::new(9, 4)
        && y >= Rational::zero()
        && y <= x
        && x <= xmax
        && x + y <= g - half
        && x + y <= (Rational::one() + g) * half
}

/// `4 D² (g - 3/4)` at `(G, X, Y) / D`.
fn scaled_h(d: i128, g: i128, x: i128, y: i128) -> i128 {
    4 * g * d - 4 * x * x - 4 * g * y + 2 * y * d + 4 * x * y - 3 * d * d
}

fn feasible_scaled(d: i128, g: i128, x: i128, y: i128) -> bool {
    d <= g && 4 * g <= 9 * d && 0 <= y && y <= x && 2 * x <= g && x <= d && 2 * (x + y) <= 2 * g - d && 2 * (x + y) <= d + g
}

#[derive(Clone, Debug)]
pub struct GridReport {
    /// Grid resolution: points are multiples of `1/resolution`.
    pub resolution: u32,
    pub feasible_points: u64,
    pub min: Rational,
    pub argmins: Vec<OptPoint>,
    /// Grid points with `g <= min + 10 / resolution`.
    pub near_optimal: u64,
    /// Largest Euclidean distance from a near-optimal point to the closer claimed optimum.
    pub near_optimal_radius: f64,
}

fn resolution_of(step: f64) -> Result<u32> {
    if !(step > 0.0 && step <= 0.25) {
        return Err(Error::range(format!("grid step must lie in (0, 1/4], got {step}")));
    }
    let r = (1.0 / step).round();
    if (r * step - 1.0).abs() > 1e-9 || r > 20_000.0 || r as u32 % 4 != 0 {
        return Err(Error::range(format!("grid step must be 1/N for N a multiple of 4 up to 20000, got {step}")));
    }
    Ok(r as u32)
}

fn distance_to_optima(optima: &[[f64; 3]], d: i128, g: i128, x: i128, y: i128) -> f64 {
    let p = [g as f64 / d as f64, x as f64 / d as f64, y as f64 / d as f64];
    optima
        .iter()
        .map(|o| o.iter().zip(&p).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
        .fold(f64::INFINITY, f64::min)
}

/// Largest feasible `Y` on the grid line through `(G, X)`, if any.
fn line_top(d: i128, g: i128, x: i128) -> Option<i128> {
    let top = x.min((2 * g - d - 2 * x).div_euclid(2)).min((d + g - 2 * x).div_euclid(2));
    (top >= 0 && feasible_scaled(d, g, x, 0)).then_some(top)
}

fn report(d: i128, feasible_points: u64, best: i128, argmins: Vec<(i128, i128, i128)>, near: (u64, f64)) -> GridReport {
    GridReport {
        resolution: d as u32,
        feasible_points,
        min: Rational::new(3, 4) + Rational::new(best, 4 * d * d),
        argmins: argmins
            .into_iter()
            .map(|(g, x, y)| OptPoint::new(Rational::new(g, d), Rational::new(x, d), Rational::new(y, d)))
            .collect(),
        near_optimal: near.0,
        near_optimal_radius: near.1,
    }
}

/// Exact minimum of `g` over the grid of spacing `step`.
///
/// Along each line of fixed `(γ, x)` the function is affine in `y` with slope
/// `x + 1/2 - γ <= 0`, so each line is handled in closed form: its minimum sits
/// at the largest feasible `y`, and its near-optimal points form a final segment.
pub fn minimize_g(step: f64) -> Result<GridReport> {
    let d = resolution_of(step)? as i128;
    let optima: Vec<[f64; 3]> = claimed_optima().iter().map(|p| p.to_f64()).collect();
    let lines = |g: i128| (0..=(g / 2).min(d)).filter_map(move |x| line_top(d, g, x).map(|t| (x, t)));
    let per_gamma: Vec<(u64, i128, Vec<(i128, i128, i128)>)> = (d..=9 * d / 4)
        .into_par_iter()
        .map(|g| {
            let (mut count, mut best, mut arg) = (0u64, i128::MAX, Vec::new());
            for (x, top) in lines(g) {
                count += top as u64 + 1;
                let h = scaled_h(d, g, x, top);
                if h < best {
                    best = h;
                    arg.clear();
                }
                if h == best {
                    arg.push((g, x, top));
                    // a flat line attains its minimum along its whole length
                    if scaled_h(d, g, x, 0) == h {
                        arg.extend((0..top).map(|y| (g, x, y)));
                    }
                }
            }
            (count, best, arg)
        })
        .collect();
    let best = per_gamma.iter().map(|t| t.1).min().unwrap_or(i128::MAX);
    let mut argmins: Vec<_> = per_gamma.iter().filter(|t| t.1 == best).flat_map(|t| t.2.iter().copied()).collect();
    argmins.sort();
    let limit = best + 40 * d;
    let near = (d..=9 * d / 4)
        .into_par_iter()
        .map(|g| {
            let (mut count, mut radius) = (0u64, 0f64);
            for (x, top) in lines(g) {
                if scaled_h(d, g, x, top) > limit {
                    continue;
                }
                let h0 = scaled_h(d, g, x, 0);
                let slope = scaled_h(d, g, x, 1) - h0;
                let lo = if h0 <= limit { 0 } else { (h0 - limit + (-slope) - 1) / (-slope) };
                count += (top - lo + 1) as u64;
                // distance along a segment is largest at an end
                radius = radius.max(distance_to_optima(&optima, d, g, x, lo)).max(distance_to_optima(&optima, d, g, x, top));
            }
            (count, radius)
        })
        .reduce(|| (0, 0.0), |a, b| (a.0 + b.0, a.1.max(b.1)));
    Ok(report(d, per_gamma.iter().map(|t| t.0).sum(), best, argmins, near))
}

/// The same scan evaluating every grid point individually.
pub fn minimize_g_pointwise(step: f64) -> Result<GridReport> {
    let d = resolution_of(step)? as i128;
    let optima: Vec<[f64; 3]> = claimed_optima().iter().map(|p| p.to_f64()).collect();
    let points = |g: i128| {
        (0..=(g / 2).min(d)).flat_map(move |x| (0..=x).map(move |y| (x, y))).filter(move |&(x, y)| feasible_scaled(d, g, x, y))
    };
    let mut count = 0u64;
    let mut best = i128::MAX;
    let mut arg = Vec::new();
    for g in d..=9 * d / 4 {
        for (x, y) in points(g) {
            count += 1;
            let h = scaled_h(d, g, x, y);
            if h < best {
                best = h;
                arg.clear();
            }
            if h == best {
                arg.push((g, x, y));
            }
        }
    }
    let (mut near, mut radius) = (0u64, 0f64);
    for g in d..=9 * d / 4 {
        for (x, y) in points(g) {
            if scaled_h(d, g, x, y) <= best + 40 * d {
                near += 1;
                radius = radius.max(distance_to_optima(&optima, d, g, x, y));
            }
        }
    }
    Ok(report(d, count, best, arg, (near, radius)))
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub samples: u64,
    pub draws: u64,
    pub violations: u64,
    pub min_h: Rational,
}

/// Draws feasible points with coordinates in `2^-20 Z` and checks `g - 3/4 >= 0` exactly.
pub fn sample_h_nonnegative(samples: u64, seed: u64) -> SampleReport {
    let d: i128 = 1 << 20;
    let chunks = 64u64;
    let per = samples.div_ceil(chunks);
    let parts: Vec<(u64, u64, u64, i128)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let want = per.min(samples.saturating_sub(c * per));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let (mut got, mut draws, mut bad, mut min_h) = (0, 0, 0, i128::MAX);
            while got < want {
                draws += 1;
                let g = rng.gen_range(d..=9 * d / 4);
                let x = rng.gen_range(0..=(g / 2).min(d));
                let y = rng.gen_range(0..=x);
                if !feasible_scaled(d, g, x, y) {
                    continue;
                }
                got += 1;
                let h = scaled_h(d, g, x, y);
                bad += u64::from(h < 0);
                min_h = min_h.min(h);
            }
            (got, draws, bad, min_h)
        })
        .collect();
    let min_scaled = parts.iter().map(|p| p.3).min().unwrap_or(0);
    SampleReport {
        samples: parts.iter().map(|p| p.0).sum(),
        draws: parts.iter().map(|p| p.1).sum(),
        violations: parts.iter().map(|p| p.2).sum(),
        min_h: Rational::new(min_scaled, 4 * d * d),
    }
}
