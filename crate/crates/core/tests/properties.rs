use proptest::prelude::*;

use tessella_core::analysis::gtr;
use tessella_core::canon::canonical_form;
use tessella_core::constructions::{cons3, cons3_cover, cons3_formula};
use tessella_core::invariants::{chromatic_index, max_matching, star_number};
use tessella_core::io::{emit_cover_json, emit_edge_list, parse_cover_json, parse_edge_list};
use tessella_core::ops::{complement, disjoint_union, induced_subgraph, subdivide};
use tessella_core::tessellation::{brute_force_oracle, greedy_cover, lower_bound, solve_exact};
use tessella_core::{Budget, Graph};

/// Random graphs on `lo..=hi` vertices.
fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// `g` plus the path 0-1-2-3-4, so that it has at least four edges.
fn with_a_p5(g: Graph) -> Graph {
    let mut edges = g.edges();
    edges.extend((0..4).map(|v| (v, v + 1)).filter(|&(u, v)| !g.has_edge(u, v)));
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// A graph together with a permutation of its vertices.
fn permuted_graphs(hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(1, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in graphs(0, 10)) {
        let back = parse_edge_list(&emit_edge_list(&g, &["note".into()])).unwrap();
        prop_assert!(back.warnings.is_empty());
        prop_assert_eq!(back.graph, g);
    }

    #[test]
    fn complement_is_an_involution(g in graphs(0, 10)) {
        let c = complement(&g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in permuted_graphs(8)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&relabel(&g, &perm)).unwrap());
    }

    #[test]
    fn cover_number_ignores_labels((g, perm) in permuted_graphs(7)) {
        let a = solve_exact(&g, &mut Budget::default()).unwrap().value;
        let b = solve_exact(&relabel(&g, &perm), &mut Budget::default()).unwrap().value;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn bound_chain(g in graphs(1, 8)) {
        let mut b = Budget::default();
        let is = star_number(&g, &mut b).unwrap().size();
        let lb = lower_bound(&g, &mut b).unwrap();
        let r = solve_exact(&g, &mut b).unwrap();
        prop_assert!(is <= lb && lb <= r.value);
        prop_assert!(r.value <= greedy_cover(&g).size());
        prop_assert!(r.value <= chromatic_index(&g, &mut b).unwrap().k);
        prop_assert!(r.cover.validate(&g).is_ok());
        prop_assert_eq!(r.cover.size(), r.value);
    }

    #[test]
    fn solver_matches_oracle(g in graphs(1, 7)) {
        prop_assume!(g.edge_count() <= 12);
        let t = solve_exact(&g, &mut Budget::default()).unwrap().value;
        prop_assert_eq!(t, brute_force_oracle(&g).unwrap());
    }

    #[test]
    fn cover_number_of_a_union_is_the_max(g in graphs(1, 5), h in graphs(1, 5)) {
        let t = |x: &Graph| solve_exact(x, &mut Budget::default()).unwrap().value;
        prop_assert_eq!(t(&disjoint_union(&g, &h)), t(&g).max(t(&h)));
    }

    #[test]
    fn cover_number_is_monotone_on_induced_subgraphs(g in graphs(2, 7), drop in 0usize..7) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != drop % g.n()).collect();
        let sub = induced_subgraph(&g, &keep).unwrap();
        let t = |x: &Graph| solve_exact(x, &mut Budget::default()).unwrap().value;
        prop_assert!(t(&sub) <= t(&g));
    }

    #[test]
    fn subdivision_matching_identity(g in graphs(1, 9)) {
        let lhs = max_matching(&subdivide(&g, 2)).len();
        prop_assert_eq!(lhs, g.edge_count() + max_matching(&g).len());
    }

    #[test]
    fn cons3_cover_meets_the_formula(g in graphs(5, 7).prop_map(with_a_p5)) {
        let mut b = Budget::default();
        let formula = cons3_formula(&g, &mut b).unwrap();
        let cover = cons3_cover(&g, &mut b).unwrap();
        prop_assert_eq!(cover.size(), formula);
        prop_assert!(cover.validate(&cons3(&g).unwrap().graph).is_ok());
    }

    #[test]
    fn cover_json_round_trip(g in graphs(1, 8)) {
        let cover = greedy_cover(&g);
        let back = parse_cover_json(&emit_cover_json(&cover)).unwrap();
        prop_assert!(back.validate(&g).is_ok());
        prop_assert_eq!(back.size(), cover.size());
    }

    #[test]
    fn gtr_is_deterministic(g in graphs(1, 7)) {
        let a = gtr(&g, &mut Budget::default()).unwrap();
        let b = gtr(&g, &mut Budget::default()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.good, a.t_value == Some(a.is_value));
    }
}
