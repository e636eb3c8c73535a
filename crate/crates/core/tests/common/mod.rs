//! Independent oracles used to freeze expected values: simple adjacency-list
//! implementations with no shared code paths with the bitset engine.

#![allow(dead_code)]

use hlnet_core::CompactGraph;
use std::collections::VecDeque;

/// Plain BFS component sizes over an adjacency list, sorted descending.
pub fn oracle_component_sizes(graph: &CompactGraph, removed: &[usize]) -> Vec<usize> {
    let order = graph.order();
    let adj: Vec<Vec<usize>> = (0..order).map(|v| graph.adjacency(v).to_vec()).collect();
    let mut gone = vec![false; order];
    for &v in removed {
        gone[v] = true;
    }
    let mut seen = vec![false; order];
    let mut sizes = Vec::new();
    for start in 0..order {
        if gone[start] || seen[start] {
            continue;
        }
        let mut size = 0;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in &adj[u] {
                if !gone[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Shortest-path distance avoiding one edge; usize::MAX when unreachable.
fn distance_without_edge(
    adj: &[Vec<usize>],
    from: usize,
    to: usize,
    skip: (usize, usize),
) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if (u, w) == skip || (w, u) == skip {
                continue;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                if w == to {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    dist[to]
}

/// Girth by the remove-an-edge method: the shortest cycle through edge
/// `(u, v)` is `1 + dist(u, v)` in the graph without that edge.
pub fn oracle_girth(graph: &CompactGraph) -> Option<usize> {
    let order = graph.order();
    let adj: Vec<Vec<usize>> = (0..order).map(|v| graph.adjacency(v).to_vec()).collect();
    let mut best = usize::MAX;
    for u in 0..order {
        for &v in &adj[u] {
            if u < v {
                let d = distance_without_edge(&adj, u, v, (u, v));
                if d != usize::MAX {
                    best = best.min(d + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Brute-force isomorphism over all vertex permutations. Only sensible for
/// tiny graphs (eight vertices here).
pub fn brute_force_isomorphic(a: &CompactGraph, b: &CompactGraph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let order = a.order();
    assert!(order <= 8, "permutation search is for tiny graphs");
    let mut perm: Vec<usize> = (0..order).collect();
    loop {
        if respects_edges(a, b, &perm) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn respects_edges(a: &CompactGraph, b: &CompactGraph, perm: &[usize]) -> bool {
    for (u, v) in a.edges() {
        if !b.has_edge(perm[u], perm[v]) {
            return false;
        }
    }
    true
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
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

/// Two-coloring check by BFS.
pub fn is_bipartite(graph: &CompactGraph) -> bool {
    let order = graph.order();
    let mut color = vec![u8::MAX; order];
    for start in 0..order {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in graph.adjacency(u).iter() {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Vertex index of a binary label in a bit-labeled graph.
pub fn vertex_of(graph: &CompactGraph, label: &str) -> usize {
    graph
        .labels()
        .expect("labeled graph")
        .iter()
        .position(|l| l == label)
        .unwrap_or_else(|| panic!("no vertex labeled {label}"))
}
