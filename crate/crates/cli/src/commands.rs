use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use shadowcut::constructions::{
    arith_classes, arithmetic_complex, arithmetic_complex_relabeled, artin_condition, collapsible_shadowless_complex,
    family_candidates, link_probability, random_even_dim_link, star_hypertree, FamilyStructure,
};
use shadowcut::homology::{
    coboundary_of, coboundary_of_graph, collapse_all, face_rank, is_coboundary, is_hypercut, is_hypercut_via_links,
    lambda_classes_complex, perfect_hypercut_size, replay, shadow, CollapseSequence,
};
use shadowcut::search::{
    claimed_optima, appendix_g, family_max, max_hypercut_exhaustive, min_shadow_almost_hypertree,
    min_shadow_by_enumeration, minimize_g, sample_h_nonnegative, Rational, SweepConfig,
};
use shadowcut::simplex::binomial;
use shadowcut::verify::{Suite, VerifyOptions};
use shadowcut::{link, Field, FaceSet, Simplex};

use crate::cli::{Command, Construct, Input, Output, Search};
use crate::Status;

fn read_complex(input: &Input) -> Result<FaceSet> {
    let (text, name) = match input.input.as_deref() {
        None => (read_stdin()?, "<stdin>".to_string()),
        Some(p) if p == Path::new("-") => (read_stdin()?, "<stdin>".to_string()),
        Some(p) => (fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?, p.display().to_string()),
    };
    FaceSet::parse(&text).with_context(|| format!("malformed complex file {name}"))
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
    Ok(s)
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("cannot write standard output"),
    }
}

pub fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::Construct { kind } => construct(kind),
        Command::Rank { field, input } => {
            let fs = read_complex(&input)?;
            let field: Field = field.field.into();
            println!("rank: {}", face_rank(&fs, field));
            println!("faces: {}", fs.len());
            println!("hypertree_size: {}", shadowcut::homology::hypertree_size(fs.n(), fs.dim()));
            println!("provenance: boundary column rank over {field}, dimension {} on {} vertices", fs.dim(), fs.n());
            Ok(Status::Ok)
        }
        Command::Shadow { field, input, output } => {
            let fs = read_complex(&input)?;
            let field: Field = field.field.into();
            let sh = shadow(&fs, field);
            if sh.is_empty() {
                println!("shadow: empty");
            } else {
                println!("shadow: {} faces", sh.len());
                if output.output.is_some() {
                    emit(&output, &sh.to_text(&[format!("shadow over {field}")]))?;
                } else {
                    for f in sh.iter() {
                        println!("{}", join_vertices(f));
                    }
                }
            }
            println!("provenance: span of boundary columns over {field}");
            Ok(Status::Ok)
        }
        Command::Collapse { input, steps, replay: replay_path } => {
            let fs = read_complex(&input)?;
            let residual = if let Some(p) = replay_path {
                let text = fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))?;
                let parsed = CollapseSequence::parse_steps(&text).with_context(|| format!("malformed step file {}", p.display()))?;
                println!("steps: {}", parsed.len());
                replay(&fs, &parsed)?
            } else {
                let seq = collapse_all(&fs);
                if let Some(p) = steps {
                    fs::write(&p, seq.to_text()).with_context(|| format!("cannot write {}", p.display()))?;
                }
                println!("steps: {}", seq.steps.len());
                seq.residual
            };
            println!("residual: {}", residual.len());
            println!("collapsible: {}", residual.is_empty());
            Ok(if residual.is_empty() { Status::Ok } else { Status::Violation })
        }
        Command::Hypercut { field, input } => {
            let fs = read_complex(&input)?;
            let field: Field = field.field.into();
            let yes = is_hypercut(&fs, field);
            println!("hypercut: {yes}");
            println!("size: {}", fs.len());
            println!("perfect_size: {}", perfect_hypercut_size(fs.n(), fs.dim()));
            println!("provenance: complement closed of corank one over {field}");
            if field == Field::F2 && fs.dim() == 2 && is_coboundary(&fs) {
                let links = is_hypercut_via_links(&fs)?;
                println!("links_lambda_connected: {links}");
                if links != yes {
                    bail!("the two hypercut tests disagree");
                }
            }
            Ok(if yes { Status::Ok } else { Status::Violation })
        }
        Command::Lambda { input, vertex } => {
            let mut fs = read_complex(&input)?;
            if let Some(v) = vertex {
                if v as usize >= fs.n() {
                    bail!("vertex {v} outside [0, {})", fs.n());
                }
                fs = link(&fs, &Simplex::new([v])?)?;
            }
            if fs.is_empty() {
                println!("classes: 0");
                return Ok(Status::Violation);
            }
            let k = lambda_classes_complex(&fs);
            println!("classes: {k}");
            println!("lambda_connected: {}", k == 1);
            Ok(if k == 1 { Status::Ok } else { Status::Violation })
        }
        Command::Search { kind } => search(kind),
        Command::Appendix { step, samples, seed } => {
            let three_quarters = Rational::new(3, 4);
            for p in claimed_optima() {
                println!("g{p} = {}", appendix_g(&p));
            }
            let grid = minimize_g(step)?;
            println!("grid_step: 1/{}", grid.resolution);
            println!("grid_feasible_points: {}", grid.feasible_points);
            println!("grid_min: {}", grid.min);
            let args: Vec<String> = grid.argmins.iter().map(|p| p.to_string()).collect();
            println!("grid_argmins: {}", args.join(" "));
            println!("near_optimal_points: {}", grid.near_optimal);
            println!("near_optimal_radius: {:.4}", grid.near_optimal_radius);
            let s = sample_h_nonnegative(samples, seed);
            println!("samples: {} ({} draws, seed {seed})", s.samples, s.draws);
            println!("violations: {}", s.violations);
            println!("sample_min_g_minus_3/4: {}", s.min_h);
            let ok = grid.min >= three_quarters && s.violations == 0;
            Ok(if ok { Status::Ok } else { Status::Violation })
        }
        Command::Verify { suite, nmax, verbose } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions { nmax };
            let mut all = true;
            for id in suite.criteria() {
                let o = shadowcut::verify::run_criterion(id, &opts)?;
                println!("{}", o.line());
                if verbose {
                    print!("{}", o.details());
                }
                all &= o.passed();
            }
            Ok(if all { Status::Ok } else { Status::Violation })
        }
        Command::Export { field, input, output } => {
            let fs = read_complex(&input)?;
            let m = shadowcut::boundary::boundary_matrix(&fs, field.field.into())?;
            emit(&output, &m.to_sms())?;
            Ok(Status::Ok)
        }
    }
}

fn join_vertices(s: &Simplex) -> String {
    s.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn construct(kind: Construct) -> Result<Status> {
    match kind {
        Construct::Xn { n, classes, output } => {
            let artin = artin_condition(n)?;
            let (fs, mut comments) = if classes {
                let cl = arith_classes(n)?;
                let fs = arithmetic_complex_relabeled(n)?;
                let mut c = vec![format!(
                    "X_{n} relabeled by r -> 2^{} r: progressions avoiding difference +-{}",
                    cl.m - 1,
                    cl.omitted_difference()
                )];
                c.extend(cl.to_text().lines().map(str::to_string));
                (fs, c)
            } else {
                (arithmetic_complex(n)?, vec![format!("X_{n}: progressions b, b+t, b+2t in Z_{n} with t not 0, +-1")])
            };
            comments.push(format!("faces {}; generated by -1 and 2: {artin}", fs.len()));
            emit(&output, &fs.to_text(&comments))?;
        }
        Construct::An { n, output } => {
            let fs = collapsible_shadowless_complex(n)?;
            emit(&output, &fs.to_text(&[format!("A_{n}: faces x, x+a/2, x+a with 1 < a < n/2, a != 3; {} faces", fs.len())]))?;
        }
        Construct::Star { n, d, output } => {
            let fs = star_hypertree(n, d)?;
            emit(&output, &fs.to_text(&[format!("star hypertree at vertex 0; {} faces", fs.len())]))?;
        }
        Construct::RandomLink { n, d, seed, cut, output } => {
            let k = random_even_dim_link(n, d, seed)?;
            let connected = shadowcut::homology::lambda_connected_complex(&k);
            let mut comments = vec![
                format!("random link: n {n}, d {d}, seed {seed}, p {:.6}", link_probability(n, d)),
                format!("link faces {}; lambda-connected: {connected}", k.len()),
            ];
            if cut {
                let c = coboundary_of(&k, n, d)?;
                comments.push(format!("coboundary with link K at vertex {}; density {:.6}", n - 1, c.len() as f64 / binomial(n, d + 1) as f64));
                emit(&output, &c.to_text(&comments))?;
            } else {
                emit(&output, &k.to_text(&comments))?;
            }
        }
        Construct::ExtremalFamily { n, structure, output } => {
            let s = structure.map(|s| s.parse::<FamilyStructure>()).transpose()?;
            let mut best: Option<(usize, FaceSet, String)> = None;
            for c in family_candidates(n, s)? {
                let cut = coboundary_of_graph(&c.graph.complement());
                if best.as_ref().is_some_and(|b| b.0 >= cut.len()) || !is_hypercut_via_links(&cut)? {
                    continue;
                }
                let note = format!("{} with {} fully attached component(s)", c.structure, c.fully_attached);
                best = Some((cut.len(), cut, note));
            }
            let Some((size, cut, note)) = best else { bail!("no admissible graph of that structure gives a hypercut at n = {n}") };
            emit(&output, &cut.to_text(&[format!("hypercut from the complement of {note}"), format!("size {size}")]))?;
        }
    }
    Ok(Status::Ok)
}

fn search(kind: Search) -> Result<Status> {
    match kind {
        Search::Exhaustive { n, apex, opt_in_n8, witnesses } => {
            let mut cfg = SweepConfig::new(n);
            cfg.allow_n8 = opt_in_n8;
            if let Some(a) = apex {
                cfg.apex = a;
            }
            print!("{}", max_hypercut_exhaustive(cfg)?.to_text(witnesses));
        }
        Search::Family { n, witnesses } => {
            print!("{}", family_max(n)?.to_text(witnesses));
        }
        Search::MinShadow { n, direct } => {
            println!("format: 1");
            println!("kind: min-shadow");
            println!("n: {n}");
            println!("field: {}", Field::F2);
            println!("min_shadow: {}", min_shadow_almost_hypertree(n)?);
            println!("provenance: C(n,3) - max hypercut - (C(n-1,2) - 1), from the exhaustive sweep");
            if direct {
                println!("min_shadow_direct: {}", min_shadow_by_enumeration(n, Field::F2)?);
            }
        }
    }
    Ok(Status::Ok)
}
