//! Family-level facts: the three-dimensional classification, matched
//! compositions, the two varietal constructions, and coset decompositions.

mod common;

use common::{brute_force_isomorphic, is_bipartite};
use hlnet_core::{
    compose_hl, g84, hl_decompose, hypercube, random_hl, vq_by_rule, vq_recursive, Matching,
};

#[test]
fn identity_composition_of_squares_is_the_cube() {
    let q2 = hypercube(2).unwrap();
    let composed = compose_hl(&q2, &q2, &Matching::identity(4)).unwrap();
    let q3 = hypercube(3).unwrap();
    assert_eq!(composed.edges(), q3.edges());
    assert_eq!(composed.labels(), q3.labels());
}

#[test]
fn all_square_matchings_land_in_the_three_dimensional_family() {
    // Enumerate all 24 bijections between two 4-cycles; every composition
    // is one of the two known 8-vertex members, and both really occur.
    let q2 = hypercube(2).unwrap();
    let q3 = hypercube(3).unwrap();
    let twisted = g84();
    let mut cube_count = 0;
    let mut twisted_count = 0;
    let mut perm = vec![0usize, 1, 2, 3];
    loop {
        let m = Matching::explicit(perm.clone()).unwrap();
        let composed = compose_hl(&q2, &q2, &m).unwrap();
        if brute_force_isomorphic(&composed, &q3) {
            cube_count += 1;
        } else {
            assert!(brute_force_isomorphic(&composed, &twisted));
            twisted_count += 1;
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    assert_eq!(cube_count + twisted_count, 24);
    assert!(cube_count > 0 && twisted_count > 0);
}

fn next_perm(perm: &mut [usize]) -> bool {
    let n = perm.len();
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[test]
fn random_instances_at_dimension_three_hit_both_members() {
    let q3 = hypercube(3).unwrap();
    let twisted = g84();
    let mut cube_count = 0;
    let mut twisted_count = 0;
    for seed in 0..100 {
        let g = random_hl(3, seed).unwrap();
        assert_eq!(g.order(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        // Bipartiteness separates the two members; confirm with the
        // brute-force permutation search.
        if is_bipartite(&g) {
            assert!(brute_force_isomorphic(&g, &q3), "seed {seed}");
            cube_count += 1;
        } else {
            assert!(brute_force_isomorphic(&g, &twisted), "seed {seed}");
            twisted_count += 1;
        }
    }
    assert!(cube_count > 0 && twisted_count > 0);
}

#[test]
fn random_instance_shape_at_dimension_five() {
    let g = random_hl(5, 12345).unwrap();
    assert_eq!(g.order(), 32);
    assert!((0..32).all(|v| g.degree(v) == 5));
    assert_eq!(g.girth(), Some(4));
}

#[test]
fn varietal_constructions_agree_through_twelve() {
    for n in 9..=12 {
        let a = vq_recursive(n).unwrap();
        let b = vq_by_rule(n).unwrap();
        assert_eq!(a.edges(), b.edges(), "dimension {n}");
    }
}

#[test]
fn coset_decomposition_of_the_64_element_member() {
    let report = hl_decompose(2, 0).unwrap();
    assert!(report.is_verified());
    assert_eq!(report.witness["halfOrder"], 32);
    assert_eq!(report.witness["halfIsomorphicTo"], "gamma:k=1,l=2");
    assert_eq!(report.witness["removedGenerator"], "b2");
}

#[test]
fn every_family_is_regular_on_a_power_of_two() {
    use hlnet_core::TopologySpec;
    let specs = [
        "hypercube:n=6",
        "vq:n=7",
        "vq-rule:n=7",
        "gamma:k=2,l=1",
        "delta:n=8",
        "random-hl:n=6,seed=3",
    ];
    for text in specs {
        let spec = TopologySpec::parse(text).unwrap();
        let graph = spec.build().unwrap();
        let n = graph.dimension().expect("power-of-two order");
        assert_eq!(graph.order(), 1 << n, "{text}");
        assert!((0..graph.order()).all(|v| graph.degree(v) == n), "{text}");
        assert_eq!(graph.edge_count() * 2, graph.order() * n, "{text}");
    }
}

#[test]
fn labels_stay_distinct_across_constructions() {
    for graph in [
        hypercube(5).unwrap(),
        vq_recursive(5).unwrap(),
        random_hl(5, 7).unwrap(),
    ] {
        let labels = graph.labels().unwrap();
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), graph.order());
        assert!(labels.iter().all(|l| l.len() == 5));
    }
}
