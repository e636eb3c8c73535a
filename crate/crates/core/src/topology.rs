//! Builders for the concrete graph families: hypercubes, matched
//! compositions, varietal hypercubes (both the recursive construction and
//! the direct adjacency rule), and the dihedral-product Cayley families.
//!
//! Bit positions in vertex labels are numbered 1 (rightmost) to n
//! (leftmost), so label bit `i` is index bit `i - 1`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{CompactGraph, GraphBuilder};
use crate::group::{
    cayley_graph, coset_decomposition, generating_set, DihedralProductElement, GroupShape,
};
use crate::report::{ReportBuilder, VerificationReport};

fn bit_label(value: usize, width: usize) -> String {
    format!("{value:0width$b}")
}

fn bit_labels(n: usize) -> Vec<String> {
    (0..1usize << n).map(|v| bit_label(v, n)).collect()
}

/// Binary n-cube: `2^n` vertices labeled by n-bit strings, edges between
/// strings at Hamming distance one.
pub fn hypercube(n: usize) -> Result<CompactGraph> {
    if !(1..=20).contains(&n) {
        return Err(Error::invalid(format!(
            "hypercube dimension {n} outside 1..=20"
        )));
    }
    let order = 1usize << n;
    let mut builder = GraphBuilder::new(order)?;
    for v in 0..order {
        for b in 0..n {
            if v & (1 << b) == 0 {
                builder.add_edge(v, v | (1 << b))?;
            }
        }
    }
    builder.build_labeled(bit_labels(n))
}

/// How a perfect matching between two equal-order graphs is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingPolicy {
    Identity,
    Seeded(u64),
    Explicit(Vec<usize>),
}

/// A concrete perfect matching: a bijection from the left vertex set onto
/// the right one.
#[derive(Clone, Debug)]
pub struct Matching {
    map: Vec<usize>,
    policy: MatchingPolicy,
}

impl Matching {
    pub fn identity(order: usize) -> Matching {
        Matching {
            map: (0..order).collect(),
            policy: MatchingPolicy::Identity,
        }
    }

    /// Fisher-Yates shuffle of the target indices under an explicit seed.
    pub fn seeded(order: usize, seed: u64) -> Matching {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = Matching::shuffled(order, &mut rng);
        m.policy = MatchingPolicy::Seeded(seed);
        m
    }

    pub(crate) fn shuffled(order: usize, rng: &mut ChaCha8Rng) -> Matching {
        let mut map: Vec<usize> = (0..order).collect();
        map.shuffle(rng);
        Matching {
            policy: MatchingPolicy::Explicit(map.clone()),
            map,
        }
    }

    pub fn explicit(map: Vec<usize>) -> Result<Matching> {
        let mut seen = vec![false; map.len()];
        for &t in &map {
            if t >= map.len() || seen[t] {
                return Err(Error::invalid("matching is not a bijection"));
            }
            seen[t] = true;
        }
        Ok(Matching {
            policy: MatchingPolicy::Explicit(map.clone()),
            map,
        })
    }

    pub fn from_policy(order: usize, policy: &MatchingPolicy) -> Result<Matching> {
        match policy {
            MatchingPolicy::Identity => Ok(Matching::identity(order)),
            MatchingPolicy::Seeded(seed) => Ok(Matching::seeded(order, *seed)),
            MatchingPolicy::Explicit(map) => {
                if map.len() != order {
                    return Err(Error::invalid(format!(
                        "matching covers {} of {order} vertices",
                        map.len()
                    )));
                }
                Matching::explicit(map.clone())
            }
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn policy(&self) -> &MatchingPolicy {
        &self.policy
    }
}

/// Disjoint union of two equal-order graphs plus the matching edges
/// `{v, m(v)}`. When both inputs are labeled, the result keeps their labels
/// prefixed with `0` (left) and `1` (right).
pub fn compose_hl(g0: &CompactGraph, g1: &CompactGraph, m: &Matching) -> Result<CompactGraph> {
    let half = g0.order();
    if g1.order() != half {
        return Err(Error::invalid(format!(
            "cannot compose graphs of orders {half} and {}",
            g1.order()
        )));
    }
    if m.map().len() != half {
        return Err(Error::invalid(format!(
            "matching covers {} of {half} vertices",
            m.map().len()
        )));
    }
    let mut builder = GraphBuilder::new(2 * half)?;
    for (u, v) in g0.edges() {
        builder.add_edge(u, v)?;
    }
    for (u, v) in g1.edges() {
        builder.add_edge(half + u, half + v)?;
    }
    for v in 0..half {
        builder.add_edge(v, half + m.map()[v])?;
    }
    match (g0.labels(), g1.labels()) {
        (Some(l0), Some(l1)) => {
            let mut labels = Vec::with_capacity(2 * half);
            labels.extend(l0.iter().map(|l| format!("0{l}")));
            labels.extend(l1.iter().map(|l| format!("1{l}")));
            builder.build_labeled(labels)
        }
        _ => Ok(builder.build()),
    }
}

fn k2() -> CompactGraph {
    let mut builder = GraphBuilder::new(2).unwrap();
    builder.add_edge(0, 1).unwrap();
    builder
        .build_labeled(vec!["0".to_string(), "1".to_string()])
        .unwrap()
}

/// Recursively samples a hypercube-like instance: two independent
/// `(n-1)`-dimensional instances joined by a seeded-random perfect matching.
/// Deterministic in the seed.
pub fn random_hl(n: usize, seed: u64) -> Result<CompactGraph> {
    if !(1..=16).contains(&n) {
        return Err(Error::invalid(format!(
            "random instance dimension {n} outside 1..=16"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    fn build(n: usize, rng: &mut ChaCha8Rng) -> Result<CompactGraph> {
        if n == 1 {
            return Ok(k2());
        }
        let g0 = build(n - 1, rng)?;
        let g1 = build(n - 1, rng)?;
        let m = Matching::shuffled(g0.order(), rng);
        compose_hl(&g0, &g1, &m)
    }
    build(n, &mut rng)
}

/// The matching used to join the two halves of the varietal hypercube at
/// dimension `m`: straight unless `3 | m`, otherwise the two top bits of
/// each half-label map through 00->00, 01->01, 10->11, 11->10.
fn vq_join_matching(m: usize) -> Matching {
    let half = 1usize << (m - 1);
    if !m.is_multiple_of(3) {
        return Matching::identity(half);
    }
    let map: Vec<usize> = (0..half)
        .map(|v| {
            if v >> (m - 2) & 1 == 1 {
                v ^ (1 << (m - 3))
            } else {
                v
            }
        })
        .collect();
    Matching::explicit(map).unwrap()
}

/// Varietal hypercube by the recursive two-half construction.
pub fn vq_recursive(n: usize) -> Result<CompactGraph> {
    if !(1..=16).contains(&n) {
        return Err(Error::invalid(format!(
            "varietal dimension {n} outside 1..=16"
        )));
    }
    let mut graph = k2();
    for m in 2..=n {
        graph = compose_hl(&graph, &graph, &vq_join_matching(m))?;
    }
    Ok(graph)
}

/// Varietal hypercube by the direct adjacency rule: flip bit `i` alone when
/// `3` does not divide `i`, otherwise flip bit `i` and set bit `i-2` to
/// `x_{i-1} + x_{i-2}`.
pub fn vq_by_rule(n: usize) -> Result<CompactGraph> {
    if !(1..=16).contains(&n) {
        return Err(Error::invalid(format!(
            "varietal dimension {n} outside 1..=16"
        )));
    }
    let order = 1usize << n;
    let mut builder = GraphBuilder::new(order)?;
    for u in 0..order {
        for i in 1..=n {
            let mut v = u ^ (1 << (i - 1));
            if i % 3 == 0 {
                let t = (u >> (i - 2) ^ u >> (i - 3)) & 1;
                v = v & !(1 << (i - 3)) | t << (i - 3);
            }
            if u < v {
                builder.add_edge(u, v)?;
            } else {
                builder.add_edge(v, u)?;
            }
        }
    }
    builder.build_labeled(bit_labels(n))
}

/// Cayley graph on `H_1 x .. x H_k x Z_2^l` with the standard involution
/// generators.
pub fn gamma(k: usize, l: usize) -> Result<CompactGraph> {
    let gens = generating_set(k, l)?;
    cayley_graph(&gens)
}

/// The Cayley-graph presentation of the varietal hypercube:
/// `delta(n) = gamma(n / 3, n mod 3)`.
pub fn delta(n: usize) -> Result<CompactGraph> {
    if n == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    gamma(n / 3, n % 3)
}

/// The non-bipartite member of the 3-dimensional family: two 4-cycles under
/// a twisted perfect matching.
pub fn g84() -> CompactGraph {
    let q2 = hypercube(2).unwrap();
    let m = Matching::explicit(vec![0, 1, 3, 2]).unwrap();
    compose_hl(&q2, &q2, &m).unwrap()
}

/// Decodes the normal form `(x, y)` of one dihedral factor into the unique
/// exponents `(p, q, r)` with `(a^2)^p b^q (ab)^r` equal to it.
fn star_exponents(x: u8, y: u8) -> (usize, usize, usize) {
    match (x, y) {
        (0, 0) => (0, 0, 0),
        (1, 0) => (1, 1, 1),
        (2, 0) => (1, 0, 0),
        (3, 0) => (0, 1, 1),
        (0, 1) => (0, 1, 0),
        (1, 1) => (0, 0, 1),
        (2, 1) => (1, 1, 0),
        (3, 1) => (1, 0, 1),
        _ => unreachable!("normal form out of range"),
    }
}

/// The vertex bijection from `delta(n)` onto `vq_recursive(n)`: read the
/// per-factor exponents `(p, q, r)` and the cyclic bits as the bit string
/// `x_n .. x_1` with `x_{3i-2} = p_i`, `x_{3i-1} = q_i`, `x_{3i} = r_i`.
pub fn vq_iso_map(n: usize) -> Result<Vec<usize>> {
    if !(1..=12).contains(&n) {
        return Err(Error::invalid(format!(
            "isomorphism map dimension {n} outside 1..=12"
        )));
    }
    let shape = GroupShape::new(n / 3, n % 3);
    let order = shape.order();
    let mut map = Vec::with_capacity(order);
    for idx in 0..order {
        let g = DihedralProductElement::from_index(shape, idx);
        let mut image = 0usize;
        for i in 0..shape.dihedral {
            let (x, y) = g.dihedral_part(i);
            let (p, q, r) = star_exponents(x, y);
            image |= p << (3 * i) | q << (3 * i + 1) | r << (3 * i + 2);
        }
        for j in 0..shape.cyclic {
            image |= (g.cyclic_bit(j) as usize) << (3 * shape.dihedral + j);
        }
        map.push(image);
    }
    Ok(map)
}

/// Constructive check that the Cayley family member on `(k, l)` splits as a
/// matched composition of two copies of the next-smaller member: the two
/// cosets of the subgroup without `b_k` (or without `c_l` when `k = 0`)
/// induce isomorphic halves joined by a perfect matching.
pub fn hl_decompose(k: usize, l: usize) -> Result<VerificationReport> {
    let gens = generating_set(k, l)?;
    let graph = cayley_graph(&gens)?;
    let shape = gens.shape();
    let order = shape.order();

    let removed_name = if k >= 1 {
        format!("b{k}")
    } else {
        format!("c{l}")
    };
    let removed = gens
        .position(&removed_name)
        .expect("standard generator present");

    let mut builder = ReportBuilder::new("hl-decompose");
    builder
        .param("k", k)
        .param("l", l)
        .param("removed", &removed_name);

    let dec = coset_decomposition(&gens, removed)?;
    let members = &dec.membership;

    // Cross edges between the cosets must form a perfect matching.
    let mut cross_partner = vec![usize::MAX; order];
    for u in members.iter() {
        let mut outside = graph.adjacency(u).clone();
        outside.intersect_in_place(members);
        let inside_degree = outside.len();
        if inside_degree + 1 != graph.degree(u) {
            return Ok(builder.refuted(serde_json::json!({
                "reason": "vertex does not have exactly one cross neighbor",
                "vertex": u,
                "crossDegree": graph.degree(u) - inside_degree,
            })));
        }
        let mut cross = graph.adjacency(u).clone();
        cross.subtract_in_place(members);
        cross_partner[u] = cross.first().expect("one cross neighbor");
    }
    let mut hit = VertexSet::new(order);
    for u in members.iter() {
        let v = cross_partner[u];
        if hit.contains(v) {
            return Ok(builder.refuted(serde_json::json!({
                "reason": "cross edges are not vertex-disjoint",
                "vertex": v,
            })));
        }
        hit.insert(v);
    }

    // The two halves are isomorphic under right translation by the removed
    // generator.
    for u in members.iter() {
        for v in graph.adjacency(u).iter() {
            if v > u && members.contains(v) {
                let (mu, mv) = (dec.coset_map[u], dec.coset_map[v]);
                if !graph.has_edge(mu, mv) {
                    return Ok(builder.refuted(serde_json::json!({
                        "reason": "right translation does not preserve an edge",
                        "edge": [u, v],
                        "image": [mu, mv],
                    })));
                }
            }
        }
    }

    // The induced half equals the next-smaller family member under the
    // documented re-indexing.
    let half_order = order / 2;
    let mut local_index = vec![usize::MAX; order];
    for (i, u) in members.iter().enumerate() {
        local_index[u] = i;
    }
    let mut half_builder = GraphBuilder::new(half_order)?;
    for u in members.iter() {
        for v in graph.adjacency(u).iter() {
            if v > u && members.contains(v) {
                half_builder.add_edge(local_index[u], local_index[v])?;
            }
        }
    }
    let half = half_builder.build();

    let (target_canonical, iso_ok) = if half_order == 1 {
        ("trivial".to_string(), half.edge_count() == 0)
    } else {
        let (tk, tl) = if k >= 1 { (k - 1, l + 2) } else { (k, l - 1) };
        let target = gamma(tk, tl)?;
        let target_shape = GroupShape::new(tk, tl);
        let mut iso = vec![0usize; half_order];
        for u in members.iter() {
            let g = DihedralProductElement::from_index(shape, u);
            let image = project_member(&g, shape, k, target_shape);
            iso[local_index[u]] = image.index();
        }
        (
            format!("gamma:k={tk},l={tl}"),
            half.is_isomorphic_by_map(&target, &iso)?,
        )
    };
    if !iso_ok {
        return Ok(builder.refuted(serde_json::json!({
            "reason": "induced half does not match the smaller family member",
            "target": target_canonical,
        })));
    }

    Ok(builder.verified(serde_json::json!({
        "halfOrder": half_order,
        "crossEdges": half_order,
        "removedGenerator": dec.removed,
        "halfIsomorphicTo": target_canonical,
    })))
}

/// Re-indexes a member of the subgroup into the smaller product group: the
/// k-th dihedral factor decomposes over `{a_k^2, a_k b_k}` into two new
/// cyclic bits; removing `c_l` instead just drops the (zero) last bit.
fn project_member(
    g: &DihedralProductElement,
    shape: GroupShape,
    k: usize,
    target: GroupShape,
) -> DihedralProductElement {
    if k >= 1 {
        let mut dihedral = Vec::with_capacity(target.dihedral);
        for i in 0..k - 1 {
            dihedral.push(g.dihedral_part(i));
        }
        let (x, y) = g.dihedral_part(k - 1);
        let (p, r) = match (x, y) {
            (0, 0) => (0, 0),
            (2, 0) => (1, 0),
            (1, 1) => (0, 1),
            (3, 1) => (1, 1),
            _ => unreachable!("element outside the subgroup"),
        };
        let mut cyclic = Vec::with_capacity(target.cyclic);
        for j in 0..shape.cyclic {
            cyclic.push(g.cyclic_bit(j));
        }
        cyclic.push(p);
        cyclic.push(r);
        DihedralProductElement::from_parts(dihedral, cyclic)
    } else {
        let dihedral = (0..shape.dihedral).map(|i| g.dihedral_part(i)).collect();
        let cyclic = (0..shape.cyclic - 1).map(|j| g.cyclic_bit(j)).collect();
        DihedralProductElement::from_parts(dihedral, cyclic)
    }
}

/// Declarative description of a graph to build, with a canonical textual
/// form used by the command line and embedded in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologySpec {
    Hypercube {
        n: usize,
    },
    VqRecursive {
        n: usize,
    },
    VqRule {
        n: usize,
    },
    Gamma {
        k: usize,
        l: usize,
    },
    Delta {
        n: usize,
    },
    RandomHl {
        n: usize,
        seed: u64,
    },
    Compose {
        left: Box<TopologySpec>,
        right: Box<TopologySpec>,
        matching: MatchingPolicy,
    },
}

impl TopologySpec {
    pub fn build(&self) -> Result<CompactGraph> {
        match self {
            TopologySpec::Hypercube { n } => hypercube(*n),
            TopologySpec::VqRecursive { n } => vq_recursive(*n),
            TopologySpec::VqRule { n } => vq_by_rule(*n),
            TopologySpec::Gamma { k, l } => gamma(*k, *l),
            TopologySpec::Delta { n } => delta(*n),
            TopologySpec::RandomHl { n, seed } => random_hl(*n, *seed),
            TopologySpec::Compose {
                left,
                right,
                matching,
            } => {
                let g0 = left.build()?;
                let g1 = right.build()?;
                let m = Matching::from_policy(g0.order(), matching)?;
                compose_hl(&g0, &g1, &m)
            }
        }
    }

    /// Canonical textual form. The two varietal constructions canonicalize
    /// to the same string, as does the Cayley presentation versus its
    /// `(k, l)` form: the string names the graph, not the build route.
    pub fn canonical(&self) -> String {
        match self {
            TopologySpec::Hypercube { n } => format!("hypercube:n={n}"),
            TopologySpec::VqRecursive { n } | TopologySpec::VqRule { n } => format!("vq:n={n}"),
            TopologySpec::Gamma { k, l } => format!("gamma:k={k},l={l}"),
            TopologySpec::Delta { n } => format!("gamma:k={},l={}", n / 3, n % 3),
            TopologySpec::RandomHl { n, seed } => format!("random-hl:n={n},seed={seed}"),
            TopologySpec::Compose {
                left,
                right,
                matching,
            } => {
                let m = match matching {
                    MatchingPolicy::Identity => "identity".to_string(),
                    MatchingPolicy::Seeded(s) => format!("seeded={s}"),
                    MatchingPolicy::Explicit(map) => format!(
                        "explicit={}",
                        map.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join("-")
                    ),
                };
                format!("compose({},{},{})", left.canonical(), right.canonical(), m)
            }
        }
    }

    pub fn parse(text: &str) -> Result<TopologySpec> {
        let text = text.trim();
        if let Some(inner) = text
            .strip_prefix("compose(")
            .and_then(|rest| rest.strip_suffix(')'))
        {
            let parts = split_top_level(inner);
            if parts.len() != 3 {
                return Err(Error::invalid(format!(
                    "compose takes three arguments, got {}",
                    parts.len()
                )));
            }
            let left = Box::new(TopologySpec::parse(parts[0])?);
            let right = Box::new(TopologySpec::parse(parts[1])?);
            let matching = parse_matching(parts[2].trim())?;
            return Ok(TopologySpec::Compose {
                left,
                right,
                matching,
            });
        }
        let (family, params) = match text.split_once(':') {
            Some((f, p)) => (f, parse_params(p)?),
            None => (text, Vec::new()),
        };
        let get = |key: &str| -> Result<u64> {
            params
                .iter()
                .find(|(k, _)| k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::invalid(format!("{family} needs parameter {key}")))
        };
        match family {
            "hypercube" => Ok(TopologySpec::Hypercube {
                n: get("n")? as usize,
            }),
            "vq" | "vq-recursive" => Ok(TopologySpec::VqRecursive {
                n: get("n")? as usize,
            }),
            "vq-rule" => Ok(TopologySpec::VqRule {
                n: get("n")? as usize,
            }),
            "gamma" => Ok(TopologySpec::Gamma {
                k: get("k")? as usize,
                l: get("l")? as usize,
            }),
            "delta" => Ok(TopologySpec::Delta {
                n: get("n")? as usize,
            }),
            "random-hl" => Ok(TopologySpec::RandomHl {
                n: get("n")? as usize,
                seed: get("seed")?,
            }),
            other => Err(Error::invalid(format!("unknown topology family `{other}`"))),
        }
    }
}

impl std::fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl std::str::FromStr for TopologySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TopologySpec::parse(s)
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_params(text: &str) -> Result<Vec<(String, u64)>> {
    text.split(',')
        .map(|pair| {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("malformed parameter `{pair}`")))?;
            let value = v
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("parameter `{k}` is not a number")))?;
            Ok((k.trim().to_string(), value))
        })
        .collect()
}

fn parse_matching(text: &str) -> Result<MatchingPolicy> {
    if text == "identity" {
        return Ok(MatchingPolicy::Identity);
    }
    if let Some(seed) = text.strip_prefix("seeded=") {
        return Ok(MatchingPolicy::Seeded(seed.parse::<u64>().map_err(
            |_| Error::invalid("seeded matching needs a numeric seed"),
        )?));
    }
    if let Some(list) = text.strip_prefix("explicit=") {
        let map = list
            .split('-')
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad matching index `{v}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(MatchingPolicy::Explicit(map));
    }
    Err(Error::invalid(format!("unknown matching policy `{text}`")))
}
