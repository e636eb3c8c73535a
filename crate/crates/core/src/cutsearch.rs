//! Exhaustive search for minimum R_g-cutsets.
//!
//! Subsets are enumerated in ascending cardinality and lexicographic order
//! within a cardinality. The scan is partitioned statically over fixed
//! two-element prefixes and reduced with `find_map_first`, so the returned
//! witness is the lexicographically least at the minimal cardinality no
//! matter how many workers run.

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::certificate::{CertificateKind, CutsetCertificate, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::CompactGraph;
use crate::report::{ReportBuilder, VerificationReport};
use crate::subsets::LexSubsets;

/// Largest order accepted without `force`.
pub const EXACT_SEARCH_ORDER_LIMIT: usize = 64;

/// Outcome of [`exact_extra_connectivity`].
#[derive(Clone, Debug)]
pub enum ExactOutcome {
    Found(CutsetCertificate),
    /// No R_g-cutset up to the searched cardinality. `definitive` is true
    /// when the searched bound already covers every possible cutset size.
    Exhausted {
        searched_max_cardinality: usize,
        definitive: bool,
    },
}

/// True iff deleting `removed` leaves at least two components, every one of
/// them with at least `g + 1` vertices.
pub fn is_rg_cutset(graph: &CompactGraph, removed: &VertexSet, g: usize) -> Result<bool> {
    let parts = graph.components(removed)?;
    Ok(parts.len() >= 2 && parts.iter().all(|p| p.len() > g))
}

/// No R_g-cutset can exceed this size: two components of g+1 vertices must
/// survive.
pub fn rg_cutset_size_limit(order: usize, g: usize) -> usize {
    order.saturating_sub(2 * (g + 1))
}

/// Finds a minimum R_g-cutset by enumerating subsets in ascending
/// cardinality `1..=max_cardinality` (defaulting to the theoretical limit).
/// Refuses graphs over 64 vertices unless `force` is set.
pub fn exact_extra_connectivity(
    graph: &CompactGraph,
    g: usize,
    max_cardinality: Option<usize>,
    force: bool,
) -> Result<ExactOutcome> {
    let order = graph.order();
    if order < 2 {
        return Err(Error::invalid("graph has fewer than two vertices"));
    }
    if !graph.is_connected() {
        return Err(Error::invalid(
            "extra connectivity is defined on connected graphs",
        ));
    }
    if order > EXACT_SEARCH_ORDER_LIMIT && !force {
        return Err(Error::TooLarge { order });
    }
    let limit = rg_cutset_size_limit(order, g);
    let max_card = max_cardinality.unwrap_or(limit).min(limit);
    let min_comp = g + 1;

    for cardinality in 1..=max_card {
        log::info!("exact search: cardinality {cardinality} of {max_card}");
        let witness = if order <= 64 {
            scan_cardinality_small(graph, cardinality, min_comp)
        } else {
            scan_cardinality_words(graph, cardinality, min_comp)
        };
        if let Some(set) = witness {
            let removed = VertexSet::from_indices(order, &set);
            let mut sizes: Vec<usize> = graph
                .components(&removed)?
                .iter()
                .map(VertexSet::len)
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            return Ok(ExactOutcome::Found(CutsetCertificate {
                kind: CertificateKind::Exact,
                value: cardinality,
                witness_set: set,
                component_sizes: sizes,
                search_budget: SearchBudget {
                    max_cardinality: Some(max_card),
                    ..SearchBudget::default()
                },
            }));
        }
    }
    Ok(ExactOutcome::Exhausted {
        searched_max_cardinality: max_card,
        definitive: max_card == limit,
    })
}

/// One-word fast path for graphs on at most 64 vertices.
fn scan_cardinality_small(
    graph: &CompactGraph,
    cardinality: usize,
    min_comp: usize,
) -> Option<Vec<usize>> {
    let order = graph.order();
    let adj: Vec<u64> = (0..order).map(|v| graph.adjacency(v).words()[0]).collect();
    let full = if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    };

    let scan = |subsets: &mut LexSubsets, fixed: usize| -> Option<Vec<usize>> {
        while let Some(s) = subsets.next_with_fixed(fixed) {
            let mut removed = 0u64;
            for &v in s {
                removed |= 1 << v;
            }
            if rg_ok_u64(&adj, full, removed, min_comp as u32) {
                return Some(s.to_vec());
            }
        }
        None
    };

    if cardinality <= 2 {
        return scan(&mut LexSubsets::new(order, cardinality), 0);
    }
    let mut prefixes = Vec::new();
    for a in 0..order {
        for b in a + 1..order {
            prefixes.push([a, b]);
        }
    }
    prefixes
        .into_par_iter()
        .find_map_first(|prefix| scan(&mut LexSubsets::with_prefix(order, cardinality, &prefix), 2))
}

fn rg_ok_u64(adj: &[u64], full: u64, removed: u64, min_comp: u32) -> bool {
    let mut remaining = full & !removed;
    if remaining == 0 {
        return false;
    }
    let mut component_count = 0;
    while remaining != 0 {
        let mut comp = remaining & remaining.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= remaining & !comp;
            comp |= next;
            frontier = next;
        }
        if comp.count_ones() < min_comp {
            return false;
        }
        component_count += 1;
        remaining &= !comp;
    }
    component_count >= 2
}

/// Slice-based path for forced searches on graphs above 64 vertices.
fn scan_cardinality_words(
    graph: &CompactGraph,
    cardinality: usize,
    min_comp: usize,
) -> Option<Vec<usize>> {
    let order = graph.order();
    let words = order.div_ceil(64);
    let mut adj = vec![0u64; order * words];
    for v in 0..order {
        adj[v * words..(v + 1) * words].copy_from_slice(graph.adjacency(v).words());
    }
    let full = VertexSet::full(order);

    let scan = |subsets: &mut LexSubsets, fixed: usize| -> Option<Vec<usize>> {
        let mut scratch = WordScratch::new(words);
        while let Some(s) = subsets.next_with_fixed(fixed) {
            if rg_ok_words(&adj, words, full.words(), s, min_comp, &mut scratch) {
                return Some(s.to_vec());
            }
        }
        None
    };

    if cardinality <= 2 {
        return scan(&mut LexSubsets::new(order, cardinality), 0);
    }
    let mut prefixes = Vec::new();
    for a in 0..order {
        for b in a + 1..order {
            prefixes.push([a, b]);
        }
    }
    prefixes
        .into_par_iter()
        .find_map_first(|prefix| scan(&mut LexSubsets::with_prefix(order, cardinality, &prefix), 2))
}

struct WordScratch {
    remaining: Vec<u64>,
    comp: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl WordScratch {
    fn new(words: usize) -> Self {
        WordScratch {
            remaining: vec![0; words],
            comp: vec![0; words],
            frontier: vec![0; words],
            next: vec![0; words],
        }
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + words[i].trailing_zeros() as usize)
}

fn rg_ok_words(
    adj: &[u64],
    words: usize,
    full: &[u64],
    removed: &[usize],
    min_comp: usize,
    scratch: &mut WordScratch,
) -> bool {
    scratch.remaining.copy_from_slice(full);
    for &v in removed {
        scratch.remaining[v / 64] &= !(1 << (v % 64));
    }
    let mut component_count = 0;
    while let Some(start) = first_bit(&scratch.remaining) {
        scratch.comp.fill(0);
        scratch.comp[start / 64] |= 1 << (start % 64);
        scratch.frontier.copy_from_slice(&scratch.comp);
        loop {
            scratch.next.fill(0);
            for (i, &fw) in scratch.frontier.iter().enumerate() {
                let mut f = fw;
                while f != 0 {
                    let v = i * 64 + f.trailing_zeros() as usize;
                    f &= f - 1;
                    let row = &adj[v * words..(v + 1) * words];
                    for (n, r) in scratch.next.iter_mut().zip(row) {
                        *n |= r;
                    }
                }
            }
            let mut grew = false;
            for i in 0..words {
                scratch.next[i] &= scratch.remaining[i] & !scratch.comp[i];
                if scratch.next[i] != 0 {
                    grew = true;
                }
                scratch.comp[i] |= scratch.next[i];
            }
            if !grew {
                break;
            }
            std::mem::swap(&mut scratch.frontier, &mut scratch.next);
        }
        let size: usize = scratch.comp.iter().map(|w| w.count_ones() as usize).sum();
        if size < min_comp {
            return false;
        }
        component_count += 1;
        for i in 0..words {
            scratch.remaining[i] &= !scratch.comp[i];
        }
    }
    component_count >= 2
}

/// Sequentially visits every R_g-cutset of exactly `cardinality` vertices,
/// in lexicographic order. Intended for the small certified instances.
pub fn for_each_rg_cutset_at<F>(
    graph: &CompactGraph,
    g: usize,
    cardinality: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&VertexSet),
{
    let order = graph.order();
    let mut it = LexSubsets::new(order, cardinality);
    while let Some(s) = it.next_subset() {
        let removed = VertexSet::from_indices(order, s);
        if is_rg_cutset(graph, &removed, g)? {
            visit(&removed);
        }
    }
    Ok(())
}

/// Checks the defining property of hyper-connectivity at level `g` for one
/// minimum cutset: deletion leaves exactly two components, one of which has
/// exactly `g + 1` vertices.
pub fn hyper_kg_check(
    graph: &CompactGraph,
    g: usize,
    cutset: &VertexSet,
) -> Result<VerificationReport> {
    let mut builder = ReportBuilder::new("hyper-kappa-g");
    builder.param("g", g).param("cutsetSize", cutset.len());
    let parts = graph.components(cutset)?;
    let sizes: Vec<usize> = parts.iter().map(VertexSet::len).collect();
    let ok = parts.len() == 2 && parts.iter().any(|p| p.len() == g + 1);
    Ok(if ok {
        builder.verified(serde_json::json!({
            "componentSizes": sizes,
            "cutset": cutset.to_vec(),
        }))
    } else {
        builder.refuted(serde_json::json!({
            "componentSizes": sizes,
            "cutset": cutset.to_vec(),
        }))
    })
}
