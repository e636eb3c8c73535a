//! Enumeration of connected induced vertex sets, each exactly once.
//!
//! Rooted extension: a set is generated from its least vertex (the root),
//! and candidates are only ever vertices above the root that are not already
//! adjacent to the growing set. That exclusive-neighbor rule gives every
//! connected set a unique generation path.

use crate::bitset::VertexSet;
use crate::graph::CompactGraph;

/// Calls `visit` once per connected induced set `S` with
/// `min_size <= |S| <= max_size` and `min(S) = root`. The visit arguments
/// are the members in insertion order plus the same set as a bitset.
pub fn for_each_connected_set_rooted<F>(
    graph: &CompactGraph,
    root: usize,
    min_size: usize,
    max_size: usize,
    visit: &mut F,
) where
    F: FnMut(&[usize], &VertexSet),
{
    if max_size == 0 || root >= graph.order() {
        return;
    }
    let order = graph.order();
    let mut members = vec![root];
    let mut member_set = VertexSet::new(order);
    member_set.insert(root);
    // `closed` holds the root, all current members, and every vertex that has
    // ever been offered as a candidate along this path.
    let mut closed = VertexSet::new(order);
    closed.insert(root);
    let mut ext = Vec::new();
    for u in graph.adjacency(root).iter() {
        if u > root {
            closed.insert(u);
            ext.push(u);
        }
    }
    extend(
        graph,
        root,
        min_size,
        max_size,
        &mut members,
        &mut member_set,
        &mut closed,
        ext,
        visit,
    );
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    graph: &CompactGraph,
    root: usize,
    min_size: usize,
    max_size: usize,
    members: &mut Vec<usize>,
    member_set: &mut VertexSet,
    closed: &mut VertexSet,
    mut ext: Vec<usize>,
    visit: &mut F,
) where
    F: FnMut(&[usize], &VertexSet),
{
    if members.len() >= min_size {
        visit(members, member_set);
    }
    if members.len() == max_size {
        return;
    }
    while let Some(w) = ext.pop() {
        let mut child_ext = ext.clone();
        let mut added = Vec::new();
        for u in graph.adjacency(w).iter() {
            if u > root && !closed.contains(u) {
                closed.insert(u);
                added.push(u);
                child_ext.push(u);
            }
        }
        members.push(w);
        member_set.insert(w);
        extend(
            graph, root, min_size, max_size, members, member_set, closed, child_ext, visit,
        );
        members.pop();
        member_set.remove(w);
        for u in added {
            closed.remove(u);
        }
    }
}

/// Sequential sweep over every connected set in the size range.
pub fn for_each_connected_set<F>(
    graph: &CompactGraph,
    min_size: usize,
    max_size: usize,
    mut visit: F,
) where
    F: FnMut(&[usize], &VertexSet),
{
    for root in 0..graph.order() {
        for_each_connected_set_rooted(graph, root, min_size, max_size, &mut visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::LexSubsets;

    fn count_by_enumeration(graph: &CompactGraph, size: usize) -> usize {
        let mut count = 0;
        for_each_connected_set(graph, size, size, |_, _| count += 1);
        count
    }

    fn count_by_brute_force(graph: &CompactGraph, size: usize) -> usize {
        let mut count = 0;
        let mut it = LexSubsets::new(graph.order(), size);
        while let Some(s) = it.next_subset() {
            let set = VertexSet::from_indices(graph.order(), s);
            if graph.is_connected_induced(&set).unwrap() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let cases = [
            CompactGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
            CompactGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap(),
            CompactGraph::from_edges(4, &[]).unwrap(),
        ];
        for graph in &cases {
            for size in 1..=4 {
                assert_eq!(
                    count_by_enumeration(graph, size),
                    count_by_brute_force(graph, size),
                    "size {size} mismatch"
                );
            }
        }
    }

    #[test]
    fn no_duplicates() {
        let graph = CompactGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let mut seen = std::collections::HashSet::new();
        for_each_connected_set(&graph, 1, 4, |_, set| {
            assert!(seen.insert(set.to_vec()), "duplicate {:?}", set.to_vec());
        });
    }

    #[test]
    fn root_is_minimum() {
        let graph = CompactGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut visited = Vec::new();
        for_each_connected_set_rooted(&graph, 1, 1, 3, &mut |members, _| {
            visited.push(members.to_vec());
        });
        for members in &visited {
            assert_eq!(*members.iter().min().unwrap(), 1);
        }
        assert_eq!(visited.len(), 3); // {1}, {1,2}, {1,2,3}
    }
}
