//! Witness-based bounds: neighborhoods of small connected sets, star-shaped
//! witnesses around a fixed center, and the large-component structure left
//! by bounded deletions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::certificate::{CertificateKind, CutsetCertificate, SearchBudget};
use crate::connsets::for_each_connected_set_rooted;
use crate::error::{Error, Result};
use crate::fvalue::f_value;
use crate::graph::CompactGraph;
use crate::report::{ReportBuilder, VerificationReport};
use crate::subsets::{choose, LexSubsets};

/// Outcome of the small-side witness search.
#[derive(Clone, Debug)]
pub enum BoundOutcome {
    Found(CutsetCertificate),
    NoneFound { size_cap: usize },
}

/// Searches every connected set `A` with `g+1 <= |A| <= size_cap` whose
/// neighborhood is a valid R_g-cutset, and returns the minimum `|N(A)|`
/// found. The witness in the certificate is the small side `A` itself.
///
/// This is an upper bound only: a minimum cutset need not arise as the
/// neighborhood of a connected set of this size.
pub fn upper_bound_by_small_side(
    graph: &CompactGraph,
    g: usize,
    size_cap: usize,
) -> Result<BoundOutcome> {
    let order = graph.order();
    if size_cap < g + 1 {
        return Err(Error::invalid(format!(
            "size cap {size_cap} below the minimum side size {}",
            g + 1
        )));
    }
    if size_cap > order / 2 {
        return Err(Error::invalid(format!(
            "size cap {size_cap} above half the order ({order})"
        )));
    }

    let best = (0..order)
        .into_par_iter()
        .filter_map(|root| {
            let mut local: Option<(usize, Vec<usize>)> = None;
            for_each_connected_set_rooted(graph, root, g + 1, size_cap, &mut |members, set| {
                let nbhd = graph.neighborhood(set).expect("capacity matches");
                let value = nbhd.len();
                if let Some((bv, _)) = &local {
                    if value > *bv {
                        return;
                    }
                }
                let mut removed = set.clone();
                removed.union_in_place(&nbhd);
                let rest = graph.components(&removed).expect("capacity matches");
                if rest.is_empty() || rest.iter().any(|p| p.len() < g + 1) {
                    return;
                }
                let mut witness = members.to_vec();
                witness.sort_unstable();
                let candidate = (value, witness);
                if local.as_ref().is_none_or(|b| candidate < *b) {
                    local = Some(candidate);
                }
            });
            local
        })
        .min();

    match best {
        None => Ok(BoundOutcome::NoneFound { size_cap }),
        Some((value, witness)) => {
            let side = VertexSet::from_indices(order, &witness);
            let cutset = graph.neighborhood(&side)?;
            let mut sizes: Vec<usize> = graph
                .components(&cutset)?
                .iter()
                .map(VertexSet::len)
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            Ok(BoundOutcome::Found(CutsetCertificate {
                kind: CertificateKind::UpperBound,
                value,
                witness_set: witness,
                component_sizes: sizes,
                search_budget: SearchBudget {
                    size_cap: Some(size_cap),
                    ..SearchBudget::default()
                },
            }))
        }
    }
}

/// Result of the exhaustive star sweep around a center vertex.
#[derive(Clone, Debug)]
pub struct StarScan {
    pub min_neighborhood: usize,
    /// Leaf set attaining the minimum, lexicographically least on ties.
    pub leaf_set: Vec<usize>,
    pub leaf_subsets_scanned: u64,
    /// Leaf subsets that induced a star (no two leaves adjacent).
    pub stars_admitted: u64,
}

/// Minimum of `|N({center} u L)|` over all g-element leaf sets `L` drawn
/// from `leaf_pool` such that `{center} u L` induces a star. Exact by
/// enumeration of all `C(|pool|, g)` leaf subsets; on a vertex-transitive
/// graph with `leaf_pool = N(center)` this covers every induced star.
pub fn min_star_neighborhood(
    graph: &CompactGraph,
    center: usize,
    leaf_pool: &[usize],
    g: usize,
) -> Result<Option<StarScan>> {
    let order = graph.order();
    if center >= order {
        return Err(Error::invalid(format!("center {center} out of range")));
    }
    for &leaf in leaf_pool {
        if !graph.has_edge(center, leaf) {
            return Err(Error::invalid(format!(
                "pool vertex {leaf} is not adjacent to the center"
            )));
        }
    }
    if g > leaf_pool.len() {
        return Err(Error::invalid(format!(
            "need {g} leaves but the pool has {}",
            leaf_pool.len()
        )));
    }

    let mut scanned = 0u64;
    let mut admitted = 0u64;
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut it = LexSubsets::new(leaf_pool.len(), g);
    let mut star = VertexSet::new(order);
    while let Some(choice) = it.next_subset() {
        scanned += 1;
        let leaves: Vec<usize> = choice.iter().map(|&i| leaf_pool[i]).collect();
        if leaves
            .iter()
            .enumerate()
            .any(|(i, &u)| leaves[..i].iter().any(|&w| graph.has_edge(u, w)))
        {
            continue; // adjacent leaves: not an induced star
        }
        admitted += 1;
        star.clear();
        star.insert(center);
        for &leaf in &leaves {
            star.insert(leaf);
        }
        let value = graph.neighborhood(&star)?.len();
        let candidate = (value, leaves);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.map(|(min_neighborhood, leaf_set)| StarScan {
        min_neighborhood,
        leaf_set,
        leaf_subsets_scanned: scanned,
        stars_admitted: admitted,
    }))
}

/// Checks the neighborhood lower bound `|N(U)| >= f_n(|U| - 1)` over all
/// vertex sets (not only connected ones): exhaustively for sizes up to
/// `exhaustive_cap`, by seeded sampling beyond.
pub fn neighborhood_bound_check(
    graph: &CompactGraph,
    g_max: usize,
    exhaustive_cap: usize,
    sample_count: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let n = graph
        .dimension()
        .ok_or_else(|| Error::invalid("graph order is not a power of two"))?;
    let order = graph.order();
    let mut builder = ReportBuilder::new("neighborhood-bound");
    builder
        .param("n", n)
        .param("gMax", g_max)
        .param("exhaustiveCap", exhaustive_cap)
        .param("samples", sample_count)
        .seed(seed);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut observed = Vec::new();
    let mut violations = Vec::new();
    for g in 0..=g_max {
        let size = g + 1;
        if size > order {
            break;
        }
        // The bound is only claimed from dimension ceil((g+2)/2) upward.
        let applicable = n >= (g + 2).div_ceil(2);
        let mut members = VertexSet::new(order);
        let mut min_seen = usize::MAX;
        let exhaustive = size <= exhaustive_cap;
        if exhaustive {
            let mut it = LexSubsets::new(order, size);
            while let Some(s) = it.next_subset() {
                members.clear();
                for &v in s {
                    members.insert(v);
                }
                min_seen = min_seen.min(graph.neighborhood(&members)?.len());
            }
        } else {
            for _ in 0..sample_count {
                let s = rand::seq::index::sample(&mut rng, order, size);
                members.clear();
                for v in s {
                    members.insert(v);
                }
                min_seen = min_seen.min(graph.neighborhood(&members)?.len());
            }
        }
        let bound = f_value(n, g);
        if applicable && (min_seen as i64) < bound {
            violations.push(serde_json::json!({
                "g": g, "minObserved": min_seen, "bound": bound,
            }));
        }
        observed.push(serde_json::json!({
            "g": g,
            "minObserved": min_seen,
            "bound": bound,
            "exhaustive": exhaustive,
            "applicable": applicable,
        }));
    }
    Ok(if violations.is_empty() {
        builder.verified(serde_json::json!({ "perSize": observed }))
    } else {
        builder.refuted(serde_json::json!({ "violations": violations, "perSize": observed }))
    })
}

/// True iff the largest component of the graph minus `removed` has at least
/// `2^n - |removed| - (g + 1 - k01)` vertices. The hypotheses of the
/// structural lemma are enforced: dimension at least 5, `g <= n - 3`,
/// `k01` zero or one, and `|removed| <= f_n(g) - k01`.
pub fn big_component_check(
    graph: &CompactGraph,
    removed: &VertexSet,
    g: usize,
    k01: usize,
) -> Result<bool> {
    let n = graph
        .dimension()
        .ok_or_else(|| Error::invalid("graph order is not a power of two"))?;
    if n < 5 {
        return Err(Error::invalid(format!(
            "structure check needs dimension >= 5, got {n}"
        )));
    }
    if g > n - 3 {
        return Err(Error::invalid(format!("g = {g} outside 0..={}", n - 3)));
    }
    if k01 > 1 {
        return Err(Error::invalid("k01 must be 0 or 1"));
    }
    let s = removed.len() as i64;
    if s > f_value(n, g) - k01 as i64 {
        return Err(Error::invalid(format!(
            "deleted set of size {s} exceeds f_{n}({g}) - {k01}"
        )));
    }
    let parts = graph.components(removed)?;
    let largest = parts.first().map_or(0, VertexSet::len) as i64;
    Ok(largest >= (1i64 << n) - s - (g as i64 + 1 - k01 as i64))
}

/// Convenience wrapper: the number of leaf subsets the star sweep will scan.
pub fn star_leaf_subset_count(pool: usize, g: usize) -> u128 {
    choose(pool, g)
}
