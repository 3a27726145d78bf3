//! Closed-form maximum and the family-constrained search for larger `n`.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::constructions::family_candidates;
use crate::error::{Error, Result};
use crate::homology::{coboundary_of_graph, cut_size_formula, is_hypercut_via_links, CutProfile, LinkGraph};
use crate::simplex::{binomial, Field};

use super::report::SearchReport;

/// `4 f(n)` for the optimal link complement: `3n² - 14n + 16` (even) or `3n² - 16n + 25` (odd).
fn four_f(n: usize) -> i64 {
    let n = n as i64;
    if n % 2 == 0 {
        3 * n * n - 14 * n + 16
    } else {
        3 * n * n - 16 * n + 25
    }
}

/// The optimal `f(Ḡ)`: `3n²/4 - 7n/2 + 4` for even `n`, `3n²/4 - 4n + 25/4` for odd `n`.
pub fn optimal_f(n: usize) -> Result<i64> {
    if n < 4 {
        return Err(Error::range(format!("the closed form is stated for n >= 4, got {n}")));
    }
    let q = four_f(n);
    assert_eq!(q % 4, 0, "closed form is not an integer at n = {n}");
    Ok(q / 4)
}

/// `C(n,3) - optimal_f(n)`.
pub fn theorem_main_value(n: usize) -> Result<i64> {
    Ok(binomial(n, 3) as i64 - optimal_f(n)?)
}

/// Largest hypercut generated by the complement of an admissible family graph.
pub fn family_max(n: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let cands = family_candidates(n, None)?;
    let scored: Vec<Option<(usize, i64)>> = cands
        .par_iter()
        .map(|c| {
            let g = c.graph.complement();
            let cut = coboundary_of_graph(&g);
            let ok = is_hypercut_via_links(&cut).expect("generated sets are coboundaries");
            ok.then(|| (cut.len(), cut_size_formula(&CutProfile::of(&c.graph), n)))
        })
        .collect();
    let best = scored.iter().flatten().map(|s| s.0).max().unwrap_or(0);
    let mut witnesses: Vec<LinkGraph> = Vec::new();
    let mut classes = BTreeSet::new();
    let mut f_min = None;
    let mut formula_agrees = true;
    for (c, s) in cands.iter().zip(&scored) {
        let Some((size, f)) = *s else { continue };
        formula_agrees &= size as i64 == binomial(n, 3) as i64 - f;
        if size == best {
            witnesses.push(c.graph.complement());
            classes.insert(format!("{}/{}", c.structure, c.fully_attached));
            f_min = Some(f);
        }
    }
    witnesses.sort_by_key(|g| g.edges());
    let theorem = theorem_main_value(n)?;
    let passing = scored.iter().flatten().count();
    Ok(SearchReport {
        kind: "family".into(),
        n,
        field: Field::F2,
        max_size: best,
        maximizers: witnesses.len(),
        witnesses,
        enumerated: cands.len() as u64,
        wall_time: start.elapsed(),
        extra: vec![
            ("lambda_connected_candidates".into(), passing.to_string()),
            ("optimal_f".into(), f_min.map_or("none".into(), |f| f.to_string())),
            ("optimal_classes".into(), classes.into_iter().collect::<Vec<_>>().join(" ")),
            ("cut_formula_agrees".into(), formula_agrees.to_string()),
            ("closed_form_value".into(), theorem.to_string()),
            ("matches_closed_form".into(), (best as i64 == theorem).to_string()),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(theorem_main_value(9).unwrap(), 53);
        assert_eq!(theorem_main_value(10).unwrap(), 76);
        assert_eq!(theorem_main_value(11).unwrap(), 112);
        assert_eq!(theorem_main_value(6).unwrap(), 10);
        for n in 4..=200 {
            theorem_main_value(n).unwrap();
        }
        assert!(theorem_main_value(3).is_err());
    }

    #[test]
    fn family_at_nine() {
        let r = family_max(9).unwrap();
        assert_eq!(r.max_size, 53);
        assert_eq!(r.get("matches_closed_form"), Some("true"));
        assert_eq!(r.get("cut_formula_agrees"), Some("true"));
    }
}
