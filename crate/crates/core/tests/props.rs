//! Property tests over randomly generated graphs.

use hlnet_core::{exact_extra_connectivity, CompactGraph, ExactOutcome, TopologySpec, VertexSet};
use proptest::prelude::*;

/// Random undirected graph as an order plus an edge list.
fn arb_graph(max_order: usize) -> impl Strategy<Value = CompactGraph> {
    (2..=max_order).prop_flat_map(|order| {
        let pairs: Vec<(usize, usize)> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| CompactGraph::from_edges(order, &edges).unwrap())
    })
}

/// A graph plus an arbitrary vertex subset of it.
fn arb_graph_and_subset(max_order: usize) -> impl Strategy<Value = (CompactGraph, VertexSet)> {
    arb_graph(max_order).prop_flat_map(|graph| {
        let order = graph.order();
        (
            Just(graph),
            proptest::collection::vec(proptest::bool::ANY, order),
        )
            .prop_map(|(graph, bits)| {
                let indices: Vec<usize> = bits
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &b)| b.then_some(i))
                    .collect();
                let set = VertexSet::from_indices(graph.order(), &indices);
                (graph, set)
            })
    })
}

proptest! {
    #[test]
    fn neighborhood_is_disjoint_from_its_set((graph, members) in arb_graph_and_subset(24)) {
        let nbhd = graph.neighborhood(&members).unwrap();
        prop_assert!(nbhd.is_disjoint_from(&members));
        for v in nbhd.iter() {
            prop_assert!(members.iter().any(|u| graph.has_edge(u, v)));
        }
    }

    #[test]
    fn components_partition_and_are_maximal((graph, removed) in arb_graph_and_subset(24)) {
        let order = graph.order();
        let parts = graph.components(&removed).unwrap();
        let mut union = VertexSet::new(order);
        let mut total = 0;
        for part in &parts {
            prop_assert!(part.is_disjoint_from(&union));
            prop_assert!(part.is_disjoint_from(&removed));
            prop_assert!(graph.is_connected_induced(part).unwrap());
            // Maximality: no edges leave the part except into removed.
            let out = graph.neighborhood(part).unwrap();
            prop_assert!(out.is_subset_of(&removed));
            total += part.len();
            union.union_in_place(part);
        }
        prop_assert_eq!(total, order - removed.len());
        // Ordering: sizes descending, least index ascending on ties.
        for pair in parts.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            prop_assert!(a.len() > b.len() || (a.len() == b.len() && a.first() < b.first()));
        }
    }

    #[test]
    fn identity_map_is_always_an_isomorphism(graph in arb_graph(16)) {
        let identity: Vec<usize> = (0..graph.order()).collect();
        prop_assert!(graph.is_isomorphic_by_map(&graph, &identity).unwrap());
    }

    #[test]
    fn exact_search_agrees_with_direct_subset_checks(graph in arb_graph(9), g in 0usize..2) {
        // The staged search returns the same minimum as checking every
        // subset with the public cutset predicate.
        if graph.is_connected() && graph.order() >= 2 {
            let order = graph.order();
            let mut oracle: Option<(usize, Vec<usize>)> = None;
            'outer: for size in 1..=order.saturating_sub(2 * (g + 1)) {
                let mut it = hlnet_core::subsets::LexSubsets::new(order, size);
                while let Some(s) = it.next_subset() {
                    let removed = VertexSet::from_indices(order, s);
                    if hlnet_core::is_rg_cutset(&graph, &removed, g).unwrap() {
                        oracle = Some((size, s.to_vec()));
                        break 'outer;
                    }
                }
            }
            match exact_extra_connectivity(&graph, g, None, false).unwrap() {
                ExactOutcome::Found(cert) => {
                    let (value, witness) = oracle.expect("oracle must also find one");
                    prop_assert_eq!(cert.value, value);
                    prop_assert_eq!(cert.witness_set, witness);
                }
                ExactOutcome::Exhausted { .. } => prop_assert!(oracle.is_none()),
            }
        }
    }

    #[test]
    fn spec_strings_round_trip_to_equal_graphs(n in 1usize..5, seed in 0u64..50) {
        let spec = TopologySpec::RandomHl { n, seed };
        let reparsed = TopologySpec::parse(&spec.canonical()).unwrap();
        prop_assert_eq!(&spec, &reparsed);
        let a = spec.build().unwrap();
        let b = reparsed.build().unwrap();
        prop_assert_eq!(a.edges(), b.edges());
    }
}
