mod common;

use proptest::prelude::*;

use thcover::oracle::{generate, GenMode, GenSpec};
use thcover::reductions::Side;
use thcover::{
    bipartition, build_auxiliary, chain_cover2, cover2, cover2_paraglider_free, cover2_split_with_order, hat_graph,
    is_paraglider_free, lexbfs_with_priority, split_partition, verify_cover, ChainCoverOutcome, CoverOptions,
    CoverOutcome, EdgePair, Graph, VertexOrdering,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut k = 0;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_generated(mode: GenMode, ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (ns, 0.05f64..0.95, any::<u64>())
        .prop_map(move |(n, p, seed)| generate(&GenSpec::random(mode, n, p, seed, 1)).unwrap().next().unwrap())
}

fn arb_permutation(n: usize) -> impl Strategy<Value = VertexOrdering> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|p| VertexOrdering::from_sequence(p).unwrap())
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_permutation(n))
    })
}

fn cover_is_valid(g: &Graph, h1: &[EdgePair], h2: &[EdgePair]) -> bool {
    let mut all: Vec<EdgePair> = h1.iter().chain(h2).copied().collect();
    all.sort_unstable();
    all.dedup();
    all == g.edges() && common::naive_is_threshold(g.n(), h1) && common::naive_is_threshold(g.n(), h2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn answer_matches_auxiliary_bipartiteness(g in arb_graph(8)) {
        let r = cover2(&g, &CoverOptions { verify: true, ..Default::default() }).unwrap();
        prop_assert_eq!(r.is_yes(), common::naive_aux_bipartite(&g));
        match &r.outcome {
            CoverOutcome::Cover { h1, h2 } => prop_assert!(cover_is_valid(&g, h1, h2)),
            CoverOutcome::OddCycle(cert) => prop_assert!(cert.holds_in(&g)),
        }
    }

    #[test]
    fn answer_is_invariant_under_relabeling((g, perm) in graph_and_permutation(9)) {
        let relabeled = Graph::from_pairs(
            g.n(),
            g.edges().iter().map(|e| EdgePair::new(perm.vertex_at(e.u()), perm.vertex_at(e.v()))),
        )
        .unwrap();
        let a = cover2(&g, &CoverOptions::default()).unwrap().is_yes();
        let b = cover2(&relabeled, &CoverOptions::default()).unwrap().is_yes();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn unions_of_two_threshold_graphs_are_covered(g in arb_generated(GenMode::UnionOfTwoThreshold, 2..=16)) {
        let r = cover2(&g, &CoverOptions { verify: true, ..Default::default() }).unwrap();
        let CoverOutcome::Cover { h1, h2 } = &r.outcome else {
            return Err(TestCaseError::fail("union of two threshold graphs rejected"));
        };
        prop_assert!(cover_is_valid(&g, h1, h2));
    }

    #[test]
    fn every_priority_gives_a_lexbfs_ordering((g, pri) in graph_and_permutation(10)) {
        let o = lexbfs_with_priority(&g, &pri);
        prop_assert!(common::four_point(&g, &o));
        // cover2 accepts it as an override without losing its guarantees
        let r = cover2(&g, &CoverOptions { ordering: Some(o), verify: true, ..Default::default() }).unwrap();
        prop_assert!(!r.diagnostics.truncated());
        if let CoverOutcome::Cover { h1, h2 } = &r.outcome {
            prop_assert!(cover_is_valid(&g, h1, h2));
        }
    }

    #[test]
    fn split_graphs_work_under_any_ordering(
        (g, perm) in arb_generated(GenMode::SplitUnionOfTwoThreshold, 2..=12)
            .prop_flat_map(|g| { let n = g.n(); (Just(g), arb_permutation(n)) })
    ) {
        prop_assert!(split_partition(&g).is_some());
        let r = cover2_split_with_order(&g, perm).unwrap();
        let CoverOutcome::Cover { h1, h2 } = &r.outcome else {
            return Err(TestCaseError::fail("split union rejected"));
        };
        prop_assert!(cover_is_valid(&g, h1, h2));
    }

    #[test]
    fn paraglider_free_variant_agrees(g in arb_graph(8)) {
        prop_assume!(is_paraglider_free(&g).0);
        let fast = cover2_paraglider_free(&g).unwrap();
        let full = cover2(&g, &CoverOptions::default()).unwrap();
        prop_assert_eq!(fast.is_yes(), full.is_yes());
        if let CoverOutcome::Cover { h1, h2 } = &fast.outcome {
            prop_assert!(verify_cover(&g, h1, h2));
        }
    }

    #[test]
    fn hat_graph_round_trip(g in arb_generated(GenMode::UnionOfTwoChain, 2..=14), side_a in any::<bool>()) {
        let (a, b) = bipartition(&g).unwrap();
        let side = if side_a { Side::A } else { Side::B };
        let hat = hat_graph(&g, &a, &b, side).unwrap();
        prop_assert_eq!(hat.original_edges(), g.edges().to_vec());
        prop_assert!(split_partition(&hat.graph).is_some());
        let aux = build_auxiliary(&hat.graph);
        for (e, &fill) in hat.fill.iter().enumerate() {
            if fill {
                prop_assert!(aux.is_isolated(e));
            }
        }
        for (e, orig) in hat.original.iter().enumerate() {
            if let Some(id) = orig {
                prop_assert_eq!(g.edge(*id), hat.graph.edge(e));
            }
        }
        let ChainCoverOutcome::Cover(c) = chain_cover2(&g, Some(side)).unwrap() else {
            return Err(TestCaseError::fail("union of two chain graphs rejected"));
        };
        prop_assert!(common::no_induced_2k2(g.n(), &c.c1) && common::no_induced_2k2(g.n(), &c.c2));
    }
}
