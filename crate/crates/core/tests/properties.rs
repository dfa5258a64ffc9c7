//! Property tests against brute-force references.

use abmod::bipartite::{maximal_one_sided_modules, module_via_twins, one_sided_module_check, BipartiteGraph};
use abmod::decomposition::{decomposition_tree, matching_cut, matching_cut_brute, validate_tree, Strategy as TreeStrategy};
use abmod::enumeration::{
    all_modules_oracle, inclusion_maximal, minimal_nontrivial_modules_with, minimal_nontrivial_oracle, Driver,
    EnumOptions,
};
use abmod::io::generate::gen_random;
use abmod::io::{parse_graph, write_graph, Labels};
use abmod::ksplitter::k_splitter_report;
use abmod::{closure_naive, closure_refined, is_ab_module, splitter_set, AbParams, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn params() -> impl Strategy<Value = AbParams> {
    (0..=2usize, 0..=2usize).prop_map(|(a, b)| AbParams::new(a, b))
}

/// A graph, parameters it accepts, and a vertex set given as a mask.
fn instance(max_n: usize) -> impl Strategy<Value = (Graph, AbParams, VertexSet)> {
    (graph(max_n), params(), any::<u64>())
        .prop_filter("parameters must fit the graph", |(g, p, _)| p.check_for(g.n()).is_ok())
        .prop_map(|(g, p, mask)| {
            let n = g.n();
            let set = VertexSet::from_mask(n, mask & (u64::MAX >> (64 - n)));
            (g, p, set)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn write_then_parse_round_trips(g in graph(14)) {
        let text = write_graph(&g, &Labels::numeric(g.n()), None);
        prop_assert_eq!(parse_graph(&text).unwrap().graph, g);
    }

    #[test]
    fn closure_algorithms_agree((g, p, a) in instance(16)) {
        prop_assume!(a.len() > p.trivial_size());
        let naive = closure_naive(&g, &a, p).unwrap();
        let refined = closure_refined(&g, &a, p).unwrap();
        prop_assert_eq!(naive.result, refined.result);
    }

    #[test]
    fn closure_is_the_smallest_module_above((g, p, a) in instance(9)) {
        prop_assume!(a.len() > p.trivial_size());
        let c = closure_refined(&g, &a, p).unwrap().result;
        let all = all_modules_oracle(&g, p, None).unwrap();
        let mut expected = g.vertex_set();
        for m in all.members.iter().filter(|m| a.is_subset(m)) {
            expected.intersect_with(m);
        }
        prop_assert_eq!(c, expected);
    }

    #[test]
    fn relaxing_keeps_modules((g, p, m) in instance(12)) {
        let looser = AbParams::new(p.alpha + 1, p.beta);
        prop_assume!(looser.check_for(g.n()).is_ok());
        if is_ab_module(&g, &m, p).unwrap() {
            prop_assert!(is_ab_module(&g, &m, looser).unwrap());
        }
        prop_assert_eq!(
            is_ab_module(&g, &m, p).unwrap(),
            is_ab_module(&g.complement(), &m, p.swapped()).unwrap()
        );
    }

    #[test]
    fn splitter_report_covers_the_outside((g, p, a) in instance(14)) {
        let r = splitter_set(&g, &a, p).unwrap();
        prop_assert_eq!(r.n_alpha.union(&r.n_bar_beta).union(&r.splitters), a.complement());
        prop_assert!(r.splitters.is_disjoint(&r.n_alpha) && r.splitters.is_disjoint(&r.n_bar_beta));
        prop_assert_eq!(r.splitters.is_empty(), is_ab_module(&g, &a, p).unwrap());
    }

    #[test]
    fn enumeration_matches_the_oracle(g in graph(8), a in 0..=1usize, b in 0..=1usize) {
        let p = AbParams::new(a, b);
        prop_assume!(g.n() > p.min_nontrivial());
        let oracle = minimal_nontrivial_oracle(&g, p, None).unwrap();
        for driver in [Driver::Batched, Driver::PerTuple] {
            let opts = EnumOptions { driver, jobs: Some(1) };
            prop_assert_eq!(&minimal_nontrivial_modules_with(&g, p, opts).unwrap().members, &oracle.members);
        }
    }

    #[test]
    fn trees_are_valid(g in graph(10), p in params()) {
        prop_assume!(p.check_for(g.n()).is_ok() && p.alpha + p.beta <= 2);
        for strategy in [TreeStrategy::Exact, TreeStrategy::Grow] {
            let t = decomposition_tree(&g, p, strategy).unwrap();
            prop_assert!(validate_tree(&g, &t).is_ok(), "{:?}", validate_tree(&g, &t));
        }
    }

    #[test]
    fn matching_cut_matches_brute_force(g in graph(11)) {
        let fast = matching_cut(&g).unwrap();
        prop_assert_eq!(fast.is_some(), matching_cut_brute(&g).is_some());
        if let Some(cut) = fast {
            prop_assert!(cut.is_matching());
        }
    }

    #[test]
    fn one_sided_maxima_match_the_oracle(
        nx in 2..=8usize,
        ny in 1..=5usize,
        bits in proptest::collection::vec(any::<bool>(), 40),
        a in 0..=1usize,
        b in 0..=1usize,
    ) {
        let p = AbParams::new(a, b);
        let edges = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, nx + y)));
        let g = Graph::new(nx + ny, edges.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap();
        let bg = BipartiteGraph::new(g, VertexSet::from_ids(nx + ny, 0..nx)).unwrap();
        let subsets: Vec<VertexSet> = (0u64..1 << nx).map(|m| VertexSet::from_mask(nx + ny, m)).collect();
        for s in &subsets {
            prop_assert_eq!(one_sided_module_check(&bg, s, p).unwrap(), module_via_twins(&bg, s, p).unwrap());
        }
        let oracle = inclusion_maximal(subsets.into_iter().filter(|s| is_ab_module(bg.graph(), s, p).unwrap()));
        match maximal_one_sided_modules(&bg, p) {
            Ok(fam) => prop_assert_eq!(fam.maximal_members, oracle),
            Err(e) => prop_assert!(nx < p.trivial_size(), "{}", e),
        }
    }

    #[test]
    fn k_splitter_report_is_complement_invariant((g, _p, m) in instance(12), k in 0..3usize) {
        let here = k_splitter_report(&g, &m, k).unwrap();
        let there = k_splitter_report(&g.complement(), &m, k).unwrap();
        prop_assert_eq!(&here, &there);
        prop_assert_eq!(here.classical_splitters, splitter_set(&g, &m, AbParams::new(0, 0)).unwrap().splitters);
    }

    #[test]
    fn generators_are_deterministic(n in 0..30usize, seed in any::<u64>()) {
        prop_assert_eq!(gen_random(n, 0.4, seed), gen_random(n, 0.4, seed));
    }
}

#[test]
fn extreme_densities() {
    assert_eq!(gen_random(6, 0.0, 1).m(), 0);
    assert_eq!(gen_random(6, 1.0, 1).m(), 15);
}
