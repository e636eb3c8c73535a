//! Compact immutable graph representation.
//!
//! A [`CompactGraph`] stores one adjacency [`VertexSet`] per vertex, which
//! makes neighborhood unions, component sweeps and cutset tests cheap word
//! operations. Graphs are immutable after construction and safe to share
//! across parallel workers; every operation here is read-only.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Hard cap on the vertex count accepted at construction.
pub const MAX_ORDER: usize = 1 << 20;

/// Immutable undirected graph with per-vertex adjacency bitsets and optional
/// string labels. Vertex identity is the dense integer index; labels are
/// decoration only.
#[derive(Clone)]
pub struct CompactGraph {
    order: usize,
    adjacency: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

/// Incremental constructor for [`CompactGraph`]. Symmetry and loop-freedom
/// are enforced as edges are added.
pub struct GraphBuilder {
    order: usize,
    adjacency: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::invalid(format!(
                "order {order} exceeds maximum {MAX_ORDER}"
            )));
        }
        Ok(GraphBuilder {
            order,
            adjacency: (0..order).map(|_| VertexSet::new(order)).collect(),
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::invalid(format!(
                "edge ({u},{v}) out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn build(self) -> CompactGraph {
        let edge_count = self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2;
        CompactGraph {
            order: self.order,
            adjacency: self.adjacency,
            labels: None,
            edge_count,
        }
    }

    pub fn build_labeled(self, labels: Vec<String>) -> Result<CompactGraph> {
        let mut graph = self.build();
        graph.set_labels(labels)?;
        Ok(graph)
    }
}

impl CompactGraph {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut builder = GraphBuilder::new(order)?;
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.order {
            return Err(Error::invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("labels are not pairwise distinct"));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Edge list with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order {
            for v in self.adjacency[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Dimension `n` when the order is `2^n`; used by the operations whose
    /// contracts are stated for hypercube-like instances.
    pub fn dimension(&self) -> Option<usize> {
        if self.order >= 2 && self.order.is_power_of_two() {
            Some(self.order.trailing_zeros() as usize)
        } else {
            None
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.capacity() != self.order {
            return Err(Error::CapacityMismatch {
                set_capacity: set.capacity(),
                order: self.order,
            });
        }
        Ok(())
    }

    /// Union of the neighbor sets of `members`, minus `members` itself.
    pub fn neighborhood(&self, members: &VertexSet) -> Result<VertexSet> {
        self.check_set(members)?;
        let mut out = VertexSet::new(self.order);
        for v in members.iter() {
            out.union_in_place(&self.adjacency[v]);
        }
        out.subtract_in_place(members);
        Ok(out)
    }

    /// Connected components of the graph minus `removed`, sorted by size
    /// descending and least vertex index ascending.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(removed)?;
        let mut remaining = VertexSet::full(self.order);
        remaining.subtract_in_place(removed);
        let mut parts = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.expand_component(start, &remaining);
            remaining.subtract_in_place(&comp);
            parts.push(comp);
        }
        parts.sort_by(|a, b| {
            b.len()
                .cmp(&a.len())
                .then_with(|| a.first().cmp(&b.first()))
        });
        Ok(parts)
    }

    /// Frontier-expansion BFS restricted to `allowed`, starting from `start`.
    fn expand_component(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.order);
        comp.insert(start);
        let mut frontier = comp.clone();
        let mut next = VertexSet::new(self.order);
        while !frontier.is_empty() {
            next.clear();
            for v in frontier.iter() {
                next.union_in_place(&self.adjacency[v]);
            }
            next.intersect_in_place(allowed);
            next.subtract_in_place(&comp);
            comp.union_in_place(&next);
            std::mem::swap(&mut frontier, &mut next);
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let all = VertexSet::full(self.order);
        self.expand_component(0, &all).len() == self.order
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// One BFS per start vertex; a non-tree edge seen at depths `d(u)`,
    /// `d(w)` closes a cycle of length at most `d(u)+d(w)+1`, and the
    /// minimum over all start vertices is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.order];
        let mut parent = vec![usize::MAX; self.order];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.order {
            if best == Some(3) {
                break;
            }
            dist.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // No shorter cycle can close beyond half the current best.
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        continue;
                    }
                }
                for w in self.adjacency[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Vertices adjacent to both `u` and `w`.
    pub fn common_neighbors(&self, u: usize, w: usize) -> Result<VertexSet> {
        if u == w {
            return Err(Error::invalid(format!(
                "common neighbors of a vertex with itself ({u})"
            )));
        }
        if u >= self.order || w >= self.order {
            return Err(Error::invalid(format!(
                "vertex pair ({u},{w}) out of range for order {}",
                self.order
            )));
        }
        Ok(self.adjacency[u].intersection(&self.adjacency[w]))
    }

    /// Connectivity of the induced subgraph on `members`. The empty set is
    /// connected by convention.
    pub fn is_connected_induced(&self, members: &VertexSet) -> Result<bool> {
        self.check_set(members)?;
        match members.first() {
            None => Ok(true),
            Some(start) => Ok(self.expand_component(start, members).len() == members.len()),
        }
    }

    /// Classifies the connected induced subgraph on `members`.
    ///
    /// A single vertex, a single edge, and a 2-edge path all report as
    /// `Star`; `Path` therefore only appears from four vertices up.
    pub fn classify_induced(&self, members: &VertexSet) -> Result<ShapeClass> {
        self.check_set(members)?;
        let verts = members.to_vec();
        if verts.is_empty() {
            return Err(Error::invalid("cannot classify the empty vertex set"));
        }
        if !self.is_connected_induced(members)? {
            return Err(Error::invalid("induced subgraph is not connected"));
        }
        let size = verts.len();
        let degrees: Vec<usize> = verts
            .iter()
            .map(|&v| self.adjacency[v].intersection(members).len())
            .collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        if size == 1 {
            return Ok(ShapeClass::Star { center: verts[0] });
        }
        if edge_count == size - 1 {
            // Connected and acyclic. Star when some vertex meets every edge.
            if let Some(pos) = degrees.iter().position(|&d| d == edge_count) {
                return Ok(ShapeClass::Star { center: verts[pos] });
            }
            let mut ends = verts
                .iter()
                .zip(&degrees)
                .filter(|&(_, &d)| d == 1)
                .map(|(&v, _)| v);
            if let (Some(a), Some(b)) = (ends.next(), ends.next()) {
                if degrees.iter().filter(|&&d| d == 1).count() == 2
                    && degrees.iter().all(|&d| d <= 2)
                {
                    return Ok(ShapeClass::Path { ends: (a, b) });
                }
            }
            return Ok(ShapeClass::Other);
        }
        if edge_count == size && degrees.iter().all(|&d| d == 2) {
            return Ok(ShapeClass::Cycle);
        }
        Ok(ShapeClass::Other)
    }

    /// Verifies that `map` is an edge-preserving bijection from `self` onto
    /// `other`, checking every vertex pair exhaustively.
    pub fn is_isomorphic_by_map(&self, other: &CompactGraph, map: &[usize]) -> Result<bool> {
        if self.order != other.order {
            return Err(Error::invalid(format!(
                "order mismatch: {} vs {}",
                self.order, other.order
            )));
        }
        if map.len() != self.order {
            return Err(Error::invalid(format!(
                "map covers {} of {} vertices",
                map.len(),
                self.order
            )));
        }
        let mut seen = vec![false; self.order];
        for &image in map {
            if image >= self.order || seen[image] {
                return Err(Error::invalid("map is not a bijection"));
            }
            seen[image] = true;
        }
        // Row-by-row: the permuted adjacency of u must equal the adjacency
        // of map[u]; equality of all rows is the full pairwise check.
        let mut permuted = VertexSet::new(self.order);
        for u in 0..self.order {
            permuted.clear();
            for v in self.adjacency[u].iter() {
                permuted.insert(map[v]);
            }
            if permuted != other.adjacency[map[u]] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl std::fmt::Debug for CompactGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CompactGraph")
            .field("order", &self.order)
            .field("edges", &self.edge_count)
            .field("labeled", &self.labels.is_some())
            .finish()
    }
}

/// Shape of a connected induced subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    /// Every induced edge is incident to `center`; includes the degenerate
    /// one-vertex and one-edge cases.
    Star {
        center: usize,
    },
    /// Simple path with the given end vertices (four or more vertices).
    Path {
        ends: (usize, usize),
    },
    Cycle,
    Other,
}

impl ShapeClass {
    pub fn is_star(&self) -> bool {
        matches!(self, ShapeClass::Star { .. })
    }

    pub fn is_path(&self) -> bool {
        matches!(self, ShapeClass::Path { .. })
    }
}
