//! The acceptance criteria as runnable checks.
//!
//! Each criterion produces a [`CriterionOutcome`] holding named sub-checks. A
//! criterion passes when every sub-check does, including its time budget.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boundary::boundary_matrix;
use crate::complex::{complement, complete_faces, FaceSet};
use crate::constructions::{
    arith_classes, arithmetic_complex, arithmetic_complex_relabeled, artin_condition, block_form_check,
    certificate_check, collapsible_shadowless_complex, group_index, random_even_dim_link,
};
use crate::error::{Error, Result};
use crate::homology::{
    coboundary_of, coboundary_of_graph, collapse_all, cut_size_formula, exposed_faces, face_rank,
    hypercut_from_lambda_link, is_coboundary, is_hypercut, is_hypercut_via_links, is_perfect_hypercut,
    lambda_connected_complex, perfect_hypercut_size, shadow, CutProfile, LinkGraph,
};
use crate::search::{
    appendix_feasible, appendix_g, claimed_optima, family_max, max_hypercut_exhaustive, minimize_g, optimal_f,
    sample_h_nonnegative, theorem_main_value, Rational, SweepConfig,
};
use crate::simplex::{binomial, subsets_colex, Field, Simplex, VertexId};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    /// `[PASS] 2 X_n suite: ... (1.23 s)`; failing sub-checks are named.
    pub fn line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let body = if self.passed() {
            self.checks.iter().map(|c| c.detail.as_str()).filter(|d| !d.is_empty()).collect::<Vec<_>>().join("; ")
        } else {
            self.failed().map(|c| format!("{} ({})", c.name, c.detail)).collect::<Vec<_>>().join("; ")
        };
        format!("[{tag}] {} {}: {} ({:.2} s)", self.id, self.title, body, self.elapsed.as_secs_f64())
    }

    /// Every sub-check on its own line.
    pub fn details(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("  {} {}: {}\n", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail))
            .collect()
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Boundary,
    Xn,
    RankFormula,
    Exhaustive,
    CutFormula,
    Family,
    LinkCriterion,
    An,
    EvenD,
    OddD,
    Appendix,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 12] = [
        "boundary",
        "xn",
        "rank-formula",
        "exhaustive",
        "cut-formula",
        "family",
        "link-criterion",
        "an",
        "even-d",
        "odd-d",
        "appendix",
        "all",
    ];

    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::All => (1..=11).collect(),
            s => vec![s as u8 + 1],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [Suite; 12] = [
            Suite::Boundary,
            Suite::Xn,
            Suite::RankFormula,
            Suite::Exhaustive,
            Suite::CutFormula,
            Suite::Family,
            Suite::LinkCriterion,
            Suite::An,
            Suite::EvenD,
            Suite::OddD,
            Suite::Appendix,
            Suite::All,
        ];
        Suite::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| ALL[i])
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Upper bound on `n` for the X_n, rank-formula, A_n and family criteria.
    pub nmax: Option<usize>,
}

impl VerifyOptions {
    fn cap(&self, range: impl Iterator<Item = usize>) -> Vec<usize> {
        range.filter(|&n| self.nmax.is_none_or(|m| n <= m)).collect()
    }
}

const TITLES: [&str; 11] = [
    "boundary algebra",
    "X_n suite",
    "rank formula",
    "F2 exhaustive extremal",
    "cut-size formula",
    "extremal family",
    "link criterion equivalence",
    "A_n suite",
    "even-d construction",
    "odd-d density bound",
    "appendix inequality",
];

const BUDGETS: [Option<u64>; 11] =
    [Some(10), Some(60), Some(120), Some(300), None, Some(60), None, Some(300), Some(600), None, Some(60)];

pub fn run_criterion(id: u8, opts: &VerifyOptions) -> Result<CriterionOutcome> {
    if !(1..=11).contains(&id) {
        return Err(Error::range(format!("criteria are numbered 1 to 11, got {id}")));
    }
    let start = Instant::now();
    let mut checks = match id {
        1 => boundary_algebra(),
        2 => xn_suite(opts)?,
        3 => rank_formula(opts)?,
        4 => exhaustive_extremal()?,
        5 => cut_formula(),
        6 => extremal_family(opts)?,
        7 => link_criterion_equivalence()?,
        8 => an_suite(opts)?,
        9 => even_d()?,
        10 => odd_d(),
        _ => appendix()?,
    };
    let elapsed = start.elapsed();
    if let Some(limit) = BUDGETS[id as usize - 1] {
        checks.push(Check::new(
            "time budget",
            elapsed <= Duration::from_secs(limit),
            format!("{:.1} s of {limit} s", elapsed.as_secs_f64()),
        ));
    }
    Ok(CriterionOutcome { id, title: TITLES[id as usize - 1], checks, elapsed })
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CriterionOutcome>> {
    suite.criteria().into_iter().map(|id| run_criterion(id, opts)).collect()
}

fn primes_5_to_31() -> Vec<usize> {
    (5..=31).filter(|&n: &usize| (2..n).take_while(|p| p * p <= n).all(|p| n % p != 0)).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Collects per-instance failures into one check.
struct Tally {
    name: &'static str,
    seen: usize,
    bad: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, seen: 0, bad: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.seen += 1;
        if !ok {
            self.bad.push(what());
        }
    }

    fn finish(self, ok_detail: impl Into<String>) -> Check {
        if self.bad.is_empty() {
            Check::new(self.name, true, ok_detail)
        } else {
            let shown: Vec<_> = self.bad.iter().take(4).cloned().collect();
            Check::new(self.name, false, format!("{} of {} failed: {}", self.bad.len(), self.seen, shown.join(", ")))
        }
    }
}

fn boundary_algebra() -> Vec<Check> {
    let mut comp = Tally::new("boundary of boundary");
    let mut rank = Tally::new("full rank");
    for field in [Field::F2, Field::Q] {
        for d in 1..=3 {
            for n in d + 1..=8 {
                let top = complete_faces(n, d).expect("d < n");
                let m = boundary_matrix(&top, field).expect("d >= 1");
                let want = binomial(n - 1, d);
                let (r1, r2) = (m.rank(), face_rank(&top, field));
                rank.record(r1 == want && r2 == want, || format!("{field} n={n} d={d}: {r1}/{r2} vs {want}"));
                if d >= 2 {
                    let low = boundary_matrix(&complete_faces(n, d - 1).expect("d - 1 < n"), field).expect("d - 1 >= 1");
                    let zero = match field {
                        Field::F2 => low.to_gf2().mul(&m.to_gf2()).map(|p| p.is_zero()),
                        Field::Q => low.to_exact().mul(&m.to_exact()).map(|p| p.is_zero()),
                    };
                    comp.record(zero.unwrap_or(false), || format!("{field} n={n} d={d}"));
                }
            }
        }
    }
    let detail = format!("{} compositions zero, {} ranks = C(n-1,d)", comp.seen, rank.seen);
    vec![comp.finish(""), rank.finish(detail)]
}

fn xn_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    let mut size = Tally::new("size C(n-1,2)-1");
    let mut collapse = Tally::new("collapses");
    let mut shadow_q = Tally::new("Q shadow empty");
    let mut cert = Tally::new("certificate");
    let mut block = Tally::new("block form");
    let mut exposed = Tally::new("exposed edges");
    let mut perfect = Tally::new("complement perfect Q-hypercut");
    for n in opts.cap(primes_5_to_31().into_iter()) {
        if !artin_condition(n)? {
            skipped.push(n);
            continue;
        }
        checked.push(n);
        let x = arithmetic_complex(n)?;
        size.record(x.len() + 1 == binomial(n - 1, 2), || format!("n={n}: {}", x.len()));
        let res = collapse_all(&x).residual_count();
        collapse.record(res == 0, || format!("n={n}: residual {res}"));
        let sh = shadow(&x, Field::Q).len();
        shadow_q.record(sh == 0, || format!("n={n}: {sh} faces"));
        cert.record(certificate_check(n)?, || format!("n={n}"));
        block.record(block_form_check(n)?, || format!("n={n}"));
        let cl = arith_classes(n)?;
        let long: BTreeSet<Simplex> = cl.edge_classes[cl.m - 1].iter().map(|&(a, b)| Simplex::new([a, b])).collect::<Result<_>>()?;
        let free: BTreeSet<Simplex> = exposed_faces(&arithmetic_complex_relabeled(n)?).into_iter().map(|e| e.0).collect();
        exposed.record(free == long, || format!("n={n}: {} exposed", free.len()));
        let c = complement(&x);
        let want = perfect_hypercut_size(n, 2);
        perfect.record(c.len() == want && is_perfect_hypercut(&c, Field::Q), || format!("n={n}"));
    }
    let mut out = vec![Check::new(
        "qualifying primes",
        !checked.is_empty(),
        format!("n in {{{}}}, skipped {{{}}}", join(&checked), join(&skipped)),
    )];
    out.extend([size, collapse, shadow_q, cert, block, exposed, perfect].map(|t| t.finish("")));
    Ok(out)
}

fn rank_formula(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut formula = Tally::new("rank = |X_n| - (n-1)(index-1)");
    let mut bareiss = Tally::new("Bareiss agrees");
    let mut seen = Vec::new();
    for n in opts.cap(primes_5_to_31().into_iter()) {
        let x = arithmetic_complex(n)?;
        let idx = group_index(n)?;
        let r = face_rank(&x, Field::Q);
        let want = x.len() - (n - 1) * (idx - 1);
        formula.record(r == want, || format!("n={n}: {r} vs {want}"));
        if n <= 17 {
            let b = boundary_matrix(&x, Field::Q)?.to_exact().bareiss_rank();
            bareiss.record(b == r, || format!("n={n}: {b} vs {r}"));
        }
        seen.push(format!("{n}:{idx}"));
    }
    Ok(vec![formula.finish(format!("n:index {}", seen.join(" "))), bareiss.finish("")])
}

fn exhaustive_extremal() -> Result<Vec<Check>> {
    let mut maxima = Vec::new();
    let mut witness = Tally::new("maximizers pass both hypercut tests");
    let mut perfect_at = Vec::new();
    for n in 4..=7 {
        let rep = max_hypercut_exhaustive(SweepConfig::new(n))?;
        maxima.push(format!("n={n}: {} ({} maximizers)", rep.max_size, rep.maximizers));
        for g in &rep.witnesses {
            let c = coboundary_of_graph(g);
            let ok = c.len() == rep.max_size && is_hypercut(&c, Field::F2) && is_hypercut_via_links(&c)?;
            witness.record(ok, || format!("n={n}: {:?}", g.edges()));
        }
        perfect_at.push((n, rep.max_size, rep.max_size == perfect_hypercut_size(n, 2)));
    }
    let at = |n: usize| perfect_at.iter().find(|p| p.0 == n).copied().expect("swept");
    let (_, m6, p6) = at(6);
    let (_, m7, p7) = at(7);
    Ok(vec![
        Check::new("maxima recorded", true, maxima.join(", ")),
        witness.finish(""),
        Check::new("perfect hypercut at n=6", p6, format!("max {m6}, perfect size {}", perfect_hypercut_size(6, 2))),
        Check::new("no perfect hypercut at n=7", !p7, format!("max {m7}, perfect size {}", perfect_hypercut_size(7, 2))),
    ])
}

fn cut_formula() -> Vec<Check> {
    let mut t = Tally::new("|coboundary| = nm - sum d^2 + 4t");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let n = rng.gen_range(4..=12usize);
        let p: f64 = rng.gen();
        let apex = (n - 1) as VertexId;
        let mut g = LinkGraph::new(n, apex).expect("apex < n");
        for a in 0..apex {
            for b in a + 1..apex {
                if rng.gen::<f64>() < p {
                    g.add_edge(a, b).expect("distinct non-apex vertices");
                }
            }
        }
        let c = coboundary_of_graph(&g).len() as i64;
        let f = cut_size_formula(&CutProfile::of(&g), n);
        t.record(c == f, || format!("n={n} {:?}: {c} vs {f}", g.edges()));
    }
    vec![t.finish("200 graphs")]
}

fn extremal_family(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut value = Tally::new("family max = closed form");
    let mut witness = Tally::new("witnesses are hypercuts");
    let mut closed = Tally::new("closed forms integral");
    let mut values = Vec::new();
    for n in opts.cap(9..=15) {
        let rep = family_max(n)?;
        let want = theorem_main_value(n)?;
        value.record(rep.max_size as i64 == want, || format!("n={n}: {} vs {want}", rep.max_size));
        values.push(format!("{n}:{}", rep.max_size));
        for g in &rep.witnesses {
            let c = coboundary_of_graph(g);
            let ok = c.len() == rep.max_size && is_hypercut(&c, Field::F2) && is_hypercut_via_links(&c)?;
            witness.record(ok, || format!("n={n}: {:?}", g.edges()));
        }
        let q = Ratio::from_integer(n as i64);
        let f = if n % 2 == 0 {
            Ratio::new(3, 4) * q * q - Ratio::new(7, 2) * q + 4
        } else {
            Ratio::new(3, 4) * q * q - q * 4 + Ratio::new(25, 4)
        };
        closed.record(f.is_integer() && f.to_integer() == optimal_f(n)?, || format!("n={n}: {f}"));
    }
    Ok(vec![value.finish(values.join(" ")), witness.finish(""), closed.finish("")])
}

/// Every 2-dimensional F2 coboundary on `n` vertices, as bitmasks over colex ranks.
fn all_coboundaries(n: usize) -> Vec<(LinkGraph, FaceSet, u64)> {
    let apex = (n - 1) as VertexId;
    let edges: Vec<(VertexId, VertexId)> = subsets_colex(n - 1, 2).map(|e| (e.vertices()[0], e.vertices()[1])).collect();
    (0u64..1 << edges.len())
        .map(|mask| {
            let g = LinkGraph::from_edges(n, apex, (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]))
                .expect("edges avoid the apex");
            let c = coboundary_of_graph(&g);
            let bits = c.iter().fold(0u64, |b, f| b | 1 << f.colex_rank());
            (g, c, bits)
        })
        .collect()
}

fn link_criterion_equivalence() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [5, 6] {
        let all = all_coboundaries(n);
        let masks: Vec<u64> = all.iter().map(|x| x.2).filter(|&m| m != 0).collect();
        let mut agree = Tally::new("simple <=> links <=> complement");
        let mut simple_count = 0;
        for (_, c, bits) in all.iter().filter(|x| x.2 != 0) {
            let simple = !masks.iter().any(|&m| m != *bits && m & bits == m);
            let links = is_hypercut_via_links(c)?;
            let comp = is_hypercut(c, Field::F2);
            simple_count += usize::from(simple);
            agree.record(simple == links && links == comp, || format!("n={n} |C|={}: {simple}/{links}/{comp}", c.len()));
        }
        let mut ch = agree.finish(format!("n={n}: {} coboundaries, {simple_count} simple", masks.len()));
        ch.name = format!("n={n} {}", ch.name);
        out.push(ch);
    }
    Ok(out)
}

fn an_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut size = Tally::new("size C(n-1,2)-(n+1)");
    let mut collapse = Tally::new("collapses");
    let mut shadows = Tally::new("shadow empty over F2 and Q");
    let mut plus = Tally::new("A_n + any face collapses");
    let mut ns = Vec::new();
    let mut extra = 0;
    for n in opts.cap((7..=15).step_by(2)) {
        ns.push(n);
        let a = collapsible_shadowless_complex(n)?;
        size.record(a.len() + n + 1 == binomial(n - 1, 2), || format!("n={n}: {}", a.len()));
        let res = collapse_all(&a).residual_count();
        collapse.record(res == 0, || format!("n={n}: residual {res}"));
        let (s2, sq) = (shadow(&a, Field::F2).len(), shadow(&a, Field::Q).len());
        shadows.record(s2 == 0 && sq == 0, || format!("n={n}: {s2}/{sq}"));
        let rest: Vec<Simplex> = complement(&a).iter().cloned().collect();
        extra += rest.len();
        let bad: Vec<String> = rest
            .par_iter()
            .filter(|s| !collapse_all(&a.with_face((*s).clone()).expect("same n and d")).is_complete())
            .map(|s| format!("n={n} {s}"))
            .collect();
        plus.record(bad.is_empty(), || bad.join(" "));
    }
    Ok(vec![
        size.finish(format!("n in {{{}}}", join(&ns))),
        collapse.finish(""),
        shadows.finish(""),
        plus.finish(format!("{extra} extensions")),
    ])
}

fn even_d() -> Result<Vec<Check>> {
    let d = 4;
    let seeds = 20u64;
    let mut freq = Tally::new("K Lambda-connected in >= 90% of runs");
    let mut cob = Tally::new("C is a coboundary with link K");
    let mut densities = Vec::new();
    let mut counts = Vec::new();
    for n in 12..=20 {
        let runs: Vec<(bool, bool, usize)> = (0..seeds)
            .into_par_iter()
            .map(|seed| -> Result<(bool, bool, usize)> {
                let k = random_even_dim_link(n, d, seed)?;
                let connected = lambda_connected_complex(&k);
                let c = coboundary_of(&k, n, d)?;
                let mut ok = is_coboundary(&c);
                if connected {
                    ok &= hypercut_from_lambda_link(&k, (n - 1) as VertexId)? == c;
                }
                Ok((connected, ok, c.len()))
            })
            .collect::<Result<_>>()?;
        let good = runs.iter().filter(|r| r.0).count();
        freq.record(10 * good >= 9 * seeds as usize, || format!("n={n}: {good}/{seeds}"));
        for (seed, r) in runs.iter().enumerate() {
            cob.record(r.1, || format!("n={n} seed={seed}"));
        }
        let total: usize = runs.iter().map(|r| r.2).sum();
        densities.push(total as f64 / (seeds as f64 * binomial(n, d + 1) as f64));
        counts.push(format!("{n}:{good}"));
    }
    let monotone = densities.windows(2).all(|w| w[0] <= w[1]);
    let shown: Vec<String> = densities.iter().map(|x| format!("{x:.4}")).collect();
    Ok(vec![
        freq.finish(format!("connected per n {}", counts.join(" "))),
        cob.finish(""),
        Check::new("seed-averaged density non-decreasing", monotone, shown.join(" ")),
    ])
}

/// Every 3-dimensional F2 coboundary on `n <= 7` vertices, via its link at the last vertex.
fn odd_d() -> Vec<Check> {
    let d = 3;
    let mut t = Tally::new("density <= 1 - 1/(d+2)");
    let mut worst = Vec::new();
    for n in d + 2..=7 {
        let gens: Vec<Simplex> = subsets_colex(n - 1, d).collect();
        let toggles: Vec<u64> = gens
            .iter()
            .map(|g| (0..n as VertexId).filter_map(|x| g.with_vertex(x)).fold(0u64, |m, s| m | 1 << s.colex_rank()))
            .collect();
        let faces = binomial(n, d + 1);
        let best = (0u64..1 << gens.len())
            .into_par_iter()
            .map(|mask| {
                let mut c = 0u64;
                let mut g = mask;
                while g != 0 {
                    c ^= toggles[g.trailing_zeros() as usize];
                    g &= g - 1;
                }
                c.count_ones() as usize
            })
            .max()
            .unwrap_or(0);
        t.record((d + 2) * best <= (d + 1) * faces, || format!("n={n}: {best}/{faces}"));
        worst.push(format!("n={n}: {best}/{faces}"));
    }
    vec![t.finish(format!("max density {}", worst.join(", ")))]
}

fn appendix() -> Result<Vec<Check>> {
    let three_quarters = Rational::new(3, 4);
    let optima = claimed_optima();
    let at_optima = optima.iter().all(|p| appendix_feasible(p) && appendix_g(p) == three_quarters);
    let grid = minimize_g(0.001)?;
    let floor = three_quarters - Rational::new(1, 1_000_000);
    let samples = sample_h_nonnegative(1_000_000, 0);
    Ok(vec![
        Check::new("g = 3/4 at both optima", at_optima, optima.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")),
        Check::new(
            "grid minimum",
            grid.min >= floor,
            format!("step 0.001: min {} over {} points", grid.min, grid.feasible_points),
        ),
        Check::new(
            "sampled h >= 0",
            samples.violations == 0 && samples.samples == 1_000_000,
            format!("{} samples, {} violations", samples.samples, samples.violations),
        ),
    ])
}
