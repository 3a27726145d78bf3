use proptest::prelude::*;

use shadowcut::homology::{
    coboundary_of_graph, collapse_all, cut_size_formula, face_rank, is_coboundary, is_hypercut, is_hypercut_via_links,
    regenerate_link, replay, shadow, vertex_link, CutProfile, LinkGraph,
};
use shadowcut::simplex::{binomial, subsets_colex};
use shadowcut::{complement, FaceSet, Field, Simplex};

fn face_set(n: usize, d: usize) -> impl Strategy<Value = FaceSet> {
    let total = binomial(n, d + 1);
    proptest::collection::vec(any::<bool>(), total)
        .prop_map(move |keep| FaceSet::from_ranks(n, d, keep.iter().enumerate().filter(|(_, &k)| k).map(|(r, _)| r)))
}

fn any_face_set() -> impl Strategy<Value = FaceSet> {
    (4usize..=7, 1usize..=2).prop_flat_map(|(n, d)| face_set(n, d))
}

fn link_graph() -> impl Strategy<Value = LinkGraph> {
    (4usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = subsets_colex(n - 1, 2).map(|e| (e.vertices()[0], e.vertices()[1])).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e);
            LinkGraph::from_edges(n, (n - 1) as u32, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(fs in any_face_set()) {
        let text = fs.to_text(&["comment".into()]);
        let back = FaceSet::parse(&text).unwrap();
        prop_assert_eq!(&back, &fs);
        prop_assert_eq!(back.to_text(&["comment".into()]), text);
    }

    #[test]
    fn shadow_closes_the_span(fs in any_face_set()) {
        for field in [Field::F2, Field::Q] {
            let sh = shadow(&fs, field);
            prop_assert!(sh.iter().all(|f| !fs.contains(f)));
            let closure = fs.union(&sh).unwrap();
            prop_assert_eq!(face_rank(&closure, field), face_rank(&fs, field));
            prop_assert!(shadow(&closure, field).is_empty());
        }
    }

    #[test]
    fn f2_rank_never_exceeds_q_rank(fs in any_face_set()) {
        let (r2, rq) = (face_rank(&fs, Field::F2), face_rank(&fs, Field::Q));
        prop_assert!(r2 <= rq);
        prop_assert!(rq <= fs.len().min(binomial(fs.n() - 1, fs.dim())));
    }

    #[test]
    fn collapse_replays_and_keeps_rank(fs in any_face_set()) {
        let seq = collapse_all(&fs);
        prop_assert_eq!(replay(&fs, &seq.steps).unwrap(), seq.residual.clone());
        prop_assert_eq!(seq.steps.len() + seq.residual_count(), fs.len());
        // an elementary collapse removes an independent column
        for field in [Field::F2, Field::Q] {
            prop_assert_eq!(face_rank(&fs, field), face_rank(&seq.residual, field) + seq.steps.len());
        }
    }

    #[test]
    fn graph_coboundaries(g in link_graph()) {
        let c = coboundary_of_graph(&g);
        prop_assert!(is_coboundary(&c));
        prop_assert_eq!(c.len() as i64, cut_size_formula(&CutProfile::of(&g), g.n()));
        let apex = g.apex();
        prop_assert_eq!(vertex_link(&c, apex).unwrap(), g.clone());
        for to in 0..g.n() as u32 {
            prop_assert_eq!(coboundary_of_graph(&regenerate_link(&c, apex, to).unwrap()), c.clone());
        }
    }

    #[test]
    fn two_hypercut_tests_agree(g in link_graph().prop_filter("small", |g| g.n() <= 7)) {
        let c = coboundary_of_graph(&g);
        if !c.is_empty() {
            prop_assert_eq!(is_hypercut(&c, Field::F2), is_hypercut_via_links(&c).unwrap());
        }
    }

    #[test]
    fn complement_of_hypercut_has_corank_one(g in link_graph().prop_filter("small", |g| g.n() <= 7)) {
        let c = coboundary_of_graph(&g);
        if !c.is_empty() && is_hypercut(&c, Field::F2) {
            let rest = complement(&c);
            prop_assert_eq!(face_rank(&rest, Field::F2) + 1, binomial(g.n() - 1, 2));
            let f = c.iter().next().unwrap().clone();
            prop_assert_eq!(face_rank(&rest.with_face(f).unwrap(), Field::F2), binomial(g.n() - 1, 2));
        }
    }

    #[test]
    fn colex_rank_round_trip(v in proptest::collection::btree_set(0u32..40, 1..6)) {
        let s = Simplex::new(v.iter().copied()).unwrap();
        prop_assert_eq!(Simplex::from_colex_rank(s.colex_rank(), v.len()), s);
    }
}
