//! d-sparsity: counting bounds, sparsity tests, greedy maximal sparse
//! subgraphs and d-critical components.
//!
//! A graph is d-sparse when every vertex set `X` with `|X| >= d` induces at
//! most `d|X| - l` edges, `l = C(d+1, 2)`. Two backends decide this: an
//! exhaustive subset scan for small graphs, and a max-flow oracle that, for a
//! forced vertex set `D`, maximizes `i(S) - d|S|` over all `S ⊇ D`.
//!
//! The flow oracle only ever forces sets of size `d` (or `{u, v}` plus
//! padding up to `d` when an edge is being tested). Sets with fewer than `d`
//! vertices are excluded from the maximum, and sets of size `d` or `d + 1`
//! induce at most `C(|X|, 2) = d|X| - l` edges in a simple graph, so they can
//! never show up as false violations.

use itertools::Itertools;
use rand::seq::SliceRandom;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::generators::seeded_rng;
use crate::graph::{canon, Edge, EdgeSubset, Graph, VertexSet};

/// Largest vertex count accepted by the exhaustive sparsity scan (2^20 subsets).
pub const BRUTE_SPARSITY_MAX_VERTICES: usize = 20;
/// Largest vertex count accepted by exhaustive tight-set enumeration (2^16 subsets).
pub const BRUTE_TIGHT_MAX_VERTICES: usize = 16;
/// Largest dimension accepted anywhere.
pub const MAX_DIMENSION: usize = 8;
/// Largest dimension covered by the rank upper bound.
pub const PROVEN_DIMENSION: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityParams {
    d: usize,
    l: usize,
}

impl SparsityParams {
    pub fn new(d: usize) -> Result<Self> {
        if !(1..=MAX_DIMENSION).contains(&d) {
            return Err(Error::Input(format!("dimension {d} outside 1..={MAX_DIMENSION}")));
        }
        Ok(SparsityParams { d, l: d * (d + 1) / 2 })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `C(d+1, 2)`.
    pub fn l(&self) -> usize {
        self.l
    }

    /// `d·x − C(d+1, 2)`.
    pub fn bound(&self, x: usize) -> i64 {
        (self.d * x) as i64 - self.l as i64
    }

    /// True for d = 6..8, where the rank bound is not known to hold.
    pub fn beyond_proven_range(&self) -> bool {
        self.d > PROVEN_DIMENSION
    }
}

pub fn sparsity_bound(params: SparsityParams, x: usize) -> i64 {
    params.bound(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Brute,
    Flow,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityVerdict {
    #[serde(rename = "sparse")]
    pub is_sparse: bool,
    pub witness: Option<VertexSet>,
}

impl SparsityVerdict {
    fn sparse() -> Self {
        SparsityVerdict {
            is_sparse: true,
            witness: None,
        }
    }

    fn violated(witness: VertexSet) -> Self {
        SparsityVerdict {
            is_sparse: false,
            witness: Some(witness),
        }
    }
}

/// Vertex set together with `i(X) − d|X| + l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightSet {
    pub vertices: VertexSet,
    pub excess: i64,
}

/// A d-critical component: a single edge, or an inclusion-maximal tight set
/// on at least `d + 2` vertices, always with all induced edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CriticalComponent {
    pub vertices: VertexSet,
    #[serde(rename = "edges", serialize_with = "serialize_len")]
    pub edge_set: EdgeSubset,
}

fn serialize_len<S: serde::Serializer>(edges: &EdgeSubset, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(edges.len() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// The parent graph's insertion order.
    Given,
    /// Insertion order shuffled by the seeded generator.
    Random(u64),
    /// An explicit permutation of the parent graph's edges.
    Explicit(Vec<Edge>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalSubgraphResult {
    pub vertex_count: usize,
    pub kept_edges: EdgeSubset,
    pub rejected_edges: EdgeSubset,
    pub insertion_order: Vec<Edge>,
}

impl MaximalSubgraphResult {
    /// The kept subgraph `H = (V, F)`.
    pub fn subgraph(&self) -> Graph {
        Graph::from_edges(self.vertex_count, self.kept_edges.iter().copied())
            .expect("kept edges come from a simple graph")
    }
}

fn check_forced(g: &Graph, forced: &VertexSet) -> Result<()> {
    g.validate_set(forced)
}

/// `max_{S ⊇ D} (i(S) − d|S|)` and the inclusion-maximal maximizer, for any
/// forced set `D`.
///
/// Network: source → edge node (cap 1); edge node → vertex node for each
/// endpoint outside `D` (cap `|E| + 1`); vertex node → sink (cap `d`). A
/// minimum cut of value `C` gives the maximum `|E| − C − d|D|`, and the
/// vertices whose nodes cannot reach the sink in the residual network form,
/// together with `D`, the maximal maximizer.
pub(crate) fn max_excess_with(g: &Graph, forced: &[usize], d: usize) -> (i64, VertexSet) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut is_forced = vec![false; n];
    for &v in forced {
        is_forced[v] = true;
    }
    let mut node = vec![usize::MAX; n];
    let mut next = 2 + m;
    for w in 0..n {
        if !is_forced[w] {
            node[w] = next;
            next += 1;
        }
    }
    let (src, sink) = (0, 1);
    let mut net = FlowNetwork::new(next);
    let big = m as i64 + 1;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let en = 2 + i;
        net.add_arc(src, en, 1);
        for w in [u, v] {
            if !is_forced[w] {
                net.add_arc(en, node[w], big);
            }
        }
    }
    for w in 0..n {
        if !is_forced[w] {
            net.add_arc(node[w], sink, d as i64);
        }
    }
    let cut = net.max_flow(src, sink);
    let forced_count = is_forced.iter().filter(|&&f| f).count() as i64;
    let value = m as i64 - cut - d as i64 * forced_count;
    let reach = net.reaches_sink(sink);
    let members = (0..n).filter(|&w| is_forced[w] || !reach[node[w]]).collect();
    (value, VertexSet::new(members))
}

/// Maximum of `i(S) − d|S|` over `S ⊇ forced`, with the unique
/// inclusion-maximal maximizer. `forced` must have exactly `d` vertices
/// unless the graph itself has fewer than `d`, in which case the whole
/// vertex set is returned.
pub fn max_excess_over(g: &Graph, forced: &VertexSet, params: SparsityParams) -> Result<(i64, VertexSet)> {
    check_forced(g, forced)?;
    let n = g.vertex_count();
    let d = params.d();
    if n < d {
        let all = VertexSet::full(n);
        let value = g.edge_count() as i64 - (d * n) as i64;
        return Ok((value, all));
    }
    if forced.len() != d {
        return Err(Error::Input(format!(
            "forced set has {} vertices, expected d = {d}",
            forced.len()
        )));
    }
    Ok(max_excess_with(g, forced.as_slice(), d))
}

pub fn is_d_sparse(g: &Graph, params: SparsityParams, backend: Backend) -> Result<SparsityVerdict> {
    match backend {
        Backend::Brute => sparse_brute(g, params),
        Backend::Flow => Ok(sparse_flow(g, params)),
        Backend::Both => {
            let brute = sparse_brute(g, params)?;
            let flow = sparse_flow(g, params);
            if brute.is_sparse != flow.is_sparse {
                return Err(Error::Inconsistency(format!(
                    "sparsity backends disagree: brute={} (witness {:?}), flow={} (witness {:?})",
                    brute.is_sparse, brute.witness, flow.is_sparse, flow.witness
                )));
            }
            Ok(flow)
        }
    }
}

fn induced_mask(adj: &[u64], mask: u64) -> u32 {
    let mut m = mask;
    let mut twice = 0;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        twice += (adj[v] & mask).count_ones();
        m &= m - 1;
    }
    twice / 2
}

fn sparse_brute(g: &Graph, params: SparsityParams) -> Result<SparsityVerdict> {
    let n = g.vertex_count();
    if n > BRUTE_SPARSITY_MAX_VERTICES {
        return Err(Error::Capability(format!(
            "brute-force sparsity limited to {BRUTE_SPARSITY_MAX_VERTICES} vertices, graph has {n}"
        )));
    }
    let adj = g.adjacency_masks();
    let d = params.d();
    // (excess, size, mask) of the best violation so far
    let mut best: Option<(i64, u32, u64)> = None;
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones();
        if (size as usize) < d {
            continue;
        }
        let excess = induced_mask(&adj, mask) as i64 - params.bound(size as usize);
        if excess > 0 {
            let better = match best {
                None => true,
                Some((e, s, _)) => excess > e || (excess == e && size > s),
            };
            if better {
                best = Some((excess, size, mask));
            }
        }
    }
    Ok(match best {
        None => SparsityVerdict::sparse(),
        Some((_, _, mask)) => SparsityVerdict::violated(VertexSet::from_mask(mask)),
    })
}

fn sparse_flow(g: &Graph, params: SparsityParams) -> SparsityVerdict {
    let n = g.vertex_count();
    let d = params.d();
    if n < d {
        return SparsityVerdict::sparse();
    }
    let threshold = -(params.l() as i64);
    for forced in (0..n).combinations(d) {
        let (value, argmax) = max_excess_with(g, &forced, d);
        if value > threshold {
            return SparsityVerdict::violated(argmax);
        }
    }
    SparsityVerdict::sparse()
}

/// Forced sets `{u, v} ∪ P` of size `max(d, 2)` with `P` drawn from `pool`.
fn forced_sets_through(pool: Vec<usize>, u: usize, v: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let pad = d.max(2) - 2;
    pool.into_iter()
        .filter(move |&w| w != u && w != v)
        .combinations(pad)
        .map(move |mut rest| {
            rest.push(u);
            rest.push(v);
            rest.sort_unstable();
            rest
        })
}

/// Padding pool for forced sets through `uv`: the neighbours of the
/// lower-degree endpoint. A tight set on at least `d + 2` vertices has
/// minimum internal degree `d`, so each such set containing `u` and `v`
/// contains `d − 2` of these neighbours besides `u`, `v`.
fn padding_pool(h: &Graph, u: usize, v: usize) -> Vec<usize> {
    let pivot = if h.neighbors(u).len() <= h.neighbors(v).len() {
        u
    } else {
        v
    };
    let mut pool = h.neighbors(pivot).to_vec();
    pool.sort_unstable();
    pool
}

/// Whether `h + uv` is still d-sparse, assuming `h` is d-sparse.
pub fn can_add_edge(h: &Graph, e: Edge, params: SparsityParams) -> Result<bool> {
    let (u, v) = canon(e.0, e.1);
    if u == v || v >= h.vertex_count() {
        return Err(Error::Input(format!("invalid edge ({},{})", e.0, e.1)));
    }
    if h.has_edge(u, v) {
        return Err(Error::Precondition(format!("edge ({u},{v}) already present")));
    }
    Ok(addable(h, u, v, params))
}

/// [`can_add_edge`] that first confirms `h` is d-sparse.
pub fn can_add_edge_verified(h: &Graph, e: Edge, params: SparsityParams) -> Result<bool> {
    if !sparse_flow(h, params).is_sparse {
        return Err(Error::Precondition("graph is not d-sparse".into()));
    }
    can_add_edge(h, e, params)
}

/// Vertices of the d-core of `h` connected to `u` within the core, or
/// `None` when `u` or `v` falls outside it. Every tight set on at least
/// `d + 2` vertices has minimum internal degree `d` and is connected, so it
/// lies inside this region.
fn core_region(h: &Graph, u: usize, v: usize, d: usize) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|w| h.neighbors(w).len()).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&w| degree[w] < d).collect();
    for &w in &stack {
        alive[w] = false;
    }
    while let Some(w) = stack.pop() {
        for &x in h.neighbors(w) {
            if alive[x] {
                degree[x] -= 1;
                if degree[x] < d {
                    alive[x] = false;
                    stack.push(x);
                }
            }
        }
    }
    if !alive[u] || !alive[v] {
        return None;
    }
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut region = vec![u];
    let mut i = 0;
    while i < region.len() {
        let w = region[i];
        i += 1;
        for &x in h.neighbors(w) {
            if alive[x] && !seen[x] {
                seen[x] = true;
                region.push(x);
            }
        }
    }
    if !seen[v] {
        return None;
    }
    region.sort_unstable();
    Some(region)
}

/// Induced subgraph on `region` (sorted), relabelled `0..region.len()`.
fn restrict(h: &Graph, region: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; h.vertex_count()];
    for (i, &w) in region.iter().enumerate() {
        index[w] = i;
    }
    let edges = h
        .edges()
        .iter()
        .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
        .map(|&(a, b)| (index[a], index[b]));
    Graph::from_edges(region.len(), edges).expect("induced subgraph of a simple graph")
}

fn addable(h: &Graph, u: usize, v: usize, params: SparsityParams) -> bool {
    let d = params.d();
    if h.vertex_count() < d {
        return true;
    }
    // h + uv violates iff some S ⊇ {u, v} with |S| ≥ d is already tight in
    // h; uv is absent, so such S is not complete and has at least d + 2
    // vertices
    let Some(region) = core_region(h, u, v, d) else {
        return true;
    };
    if region.len() < d + 2 {
        return true;
    }
    let sub = restrict(h, &region);
    let ui = region.binary_search(&u).expect("u in region");
    let vi = region.binary_search(&v).expect("v in region");
    let tight = -(params.l() as i64);
    !forced_sets_through(padding_pool(&sub, ui, vi), ui, vi, d)
        .any(|forced| max_excess_with(&sub, &forced, d).0 >= tight)
}

fn ordered_edges(g: &Graph, order: &EdgeOrder) -> Result<Vec<Edge>> {
    Ok(match order {
        EdgeOrder::Given => g.edges().to_vec(),
        EdgeOrder::Random(seed) => {
            let mut e = g.edges().to_vec();
            e.shuffle(&mut seeded_rng(*seed));
            e
        }
        EdgeOrder::Explicit(list) => {
            let mut canon_list: Vec<Edge> = list.iter().map(|&(u, v)| canon(u, v)).collect();
            let mut a = canon_list.clone();
            a.sort_unstable();
            if a != g.sorted_edges() {
                return Err(Error::Input(
                    "explicit order is not a permutation of the edge set".into(),
                ));
            }
            std::mem::take(&mut canon_list)
        }
    })
}

/// Greedy maximal d-sparse subgraph: edges are kept in `order` whenever the
/// kept subgraph stays d-sparse.
pub fn maximal_sparse_subgraph(g: &Graph, params: SparsityParams, order: &EdgeOrder) -> Result<MaximalSubgraphResult> {
    let insertion_order = ordered_edges(g, order)?;
    let mut h = Graph::empty(g.vertex_count());
    let mut kept = Vec::new();
    let mut rejected = Vec::new();
    for &(u, v) in &insertion_order {
        if addable(&h, u, v, params) {
            h.add_edge(u, v)?;
            kept.push((u, v));
        } else {
            rejected.push((u, v));
        }
    }
    Ok(MaximalSubgraphResult {
        vertex_count: g.vertex_count(),
        kept_edges: kept,
        rejected_edges: rejected,
        insertion_order,
    })
}

fn component_of(h: &Graph, vertices: VertexSet) -> CriticalComponent {
    let edge_set = h.induced_edges(&vertices);
    CriticalComponent { vertices, edge_set }
}

/// Keeps only sets not strictly contained in another; removes duplicates.
fn inclusion_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept
}

fn finish_components(h: &Graph, large: Vec<VertexSet>) -> Vec<CriticalComponent> {
    let large = inclusion_maximal(large);
    let mut out: Vec<CriticalComponent> = large.iter().cloned().map(|s| component_of(h, s)).collect();
    for &(u, v) in &h.sorted_edges() {
        if !large.iter().any(|s| s.contains(u) && s.contains(v)) {
            out.push(component_of(h, VertexSet::new(vec![u, v])));
        }
    }
    out.sort();
    out
}

/// d-critical components of a d-sparse graph, sorted by vertex list.
///
/// Flow backend: every component `U` with `|U| ≥ d + 2` contains an edge
/// `uv` and a forced set `D ⊆ U` through it. The maximal maximizer for `D`
/// is a tight superset of `U`, hence critical, so it equals `U` by
/// maximality of `U`; conversely each collected maximizer is contained in
/// some component that is itself a maximizer for the same `D`. Sweeping all
/// edges and forced sets through them therefore yields exactly the large
/// components. The sweep also sees every violating set, which is how the
/// precondition is enforced.
pub fn critical_components(h: &Graph, params: SparsityParams, backend: Backend) -> Result<Vec<CriticalComponent>> {
    match backend {
        Backend::Flow => components_flow(h, params),
        Backend::Brute => components_brute(h, params),
        Backend::Both => {
            let a = components_flow(h, params)?;
            let b = components_brute(h, params)?;
            if a != b {
                return Err(Error::Inconsistency("component backends disagree".into()));
            }
            Ok(a)
        }
    }
}

fn components_flow(h: &Graph, params: SparsityParams) -> Result<Vec<CriticalComponent>> {
    let n = h.vertex_count();
    let d = params.d();
    let tight = -(params.l() as i64);
    let mut found = Vec::new();
    if n >= d {
        for &(u, v) in &h.sorted_edges() {
            for forced in forced_sets_through(padding_pool(h, u, v), u, v, d) {
                let (value, argmax) = max_excess_with(h, &forced, d);
                if value > tight {
                    return Err(Error::Precondition(format!(
                        "graph is not {d}-sparse: {argmax} induces too many edges"
                    )));
                }
                if value == tight && argmax.len() >= d + 2 {
                    found.push(argmax);
                }
            }
        }
    }
    Ok(finish_components(h, found))
}

fn components_brute(h: &Graph, params: SparsityParams) -> Result<Vec<CriticalComponent>> {
    let tight = tight_sets_brute(h, params)?;
    let large = tight
        .into_iter()
        .filter(|t| t.vertices.len() >= params.d() + 2)
        .map(|t| t.vertices)
        .collect();
    Ok(finish_components(h, large))
}

/// All vertex sets with `|X| ≥ d` meeting the bound with equality.
pub fn tight_sets_brute(h: &Graph, params: SparsityParams) -> Result<Vec<TightSet>> {
    let n = h.vertex_count();
    if n > BRUTE_TIGHT_MAX_VERTICES {
        return Err(Error::Capability(format!(
            "tight-set enumeration limited to {BRUTE_TIGHT_MAX_VERTICES} vertices, graph has {n}"
        )));
    }
    let adj = h.adjacency_masks();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < params.d() {
            continue;
        }
        let excess = induced_mask(&adj, mask) as i64 - params.bound(size);
        if excess > 0 {
            return Err(Error::Precondition(format!(
                "graph is not {}-sparse: {} induces too many edges",
                params.d(),
                VertexSet::from_mask(mask)
            )));
        }
        if excess == 0 {
            out.push(TightSet {
                vertices: VertexSet::from_mask(mask),
                excess,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPair {
    pub first: usize,
    pub second: usize,
    pub size: usize,
    pub induced: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub pairs: Vec<IntersectionPair>,
    pub pass: bool,
}

/// Pairwise intersections of critical components: each has at most `d − 1`
/// vertices, and exactly `d − 1` only when it induces `C(d−1, 2)` edges.
pub fn check_component_intersections(
    components: &[CriticalComponent],
    g: &Graph,
    params: SparsityParams,
) -> Result<IntersectionReport> {
    let d = params.d();
    let full_hinge = (d - 1) * d.saturating_sub(2) / 2;
    let mut pairs = Vec::new();
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate().skip(i + 1) {
            let common = a.vertices.intersection(&b.vertices);
            let induced = g.induced_edge_count(&common)?;
            let size = common.len();
            let pass = size < d - 1 || (size == d - 1 && induced == full_hinge);
            pairs.push(IntersectionPair {
                first: i,
                second: j,
                size,
                induced,
                pass,
            });
        }
    }
    let pass = pairs.iter().all(|p| p.pass);
    Ok(IntersectionReport { pairs, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, double_k5, double_k5_with_shared_edge};

    fn p(d: usize) -> SparsityParams {
        SparsityParams::new(d).unwrap()
    }

    #[test]
    fn bound_values() {
        assert_eq!(sparsity_bound(p(3), 5), 9);
        assert_eq!(sparsity_bound(p(2), 3), 3);
        assert_eq!(sparsity_bound(p(5), 7), 20);
        assert!(SparsityParams::new(0).is_err());
        assert!(SparsityParams::new(9).is_err());
        assert!(p(6).beyond_proven_range() && !p(5).beyond_proven_range());
    }

    #[test]
    fn max_excess_examples() {
        let k5 = complete_graph(5).unwrap();
        let (val, s) = max_excess_over(&k5, &VertexSet::new(vec![1, 2, 4]), p(3)).unwrap();
        assert_eq!((val, s), (-5, VertexSet::full(5)));

        let k4 = complete_graph(4).unwrap();
        let (val, s) = max_excess_over(&k4, &VertexSet::new(vec![0, 1, 2]), p(3)).unwrap();
        assert_eq!((val, s), (-6, VertexSet::full(4)));

        let (g, (u, v)) = double_k5();
        let (val, s) = max_excess_over(&g, &VertexSet::new(vec![u, v, 2]), p(3)).unwrap();
        assert_eq!((val, s), (-6, VertexSet::full(8)));
    }

    #[test]
    fn max_excess_rejects_wrong_forced_size() {
        let k5 = complete_graph(5).unwrap();
        assert!(max_excess_over(&k5, &VertexSet::new(vec![0, 1]), p(3)).is_err());
        assert!(max_excess_over(&k5, &VertexSet::new(vec![0, 1, 9]), p(3)).is_err());
        // fewer vertices than d: whole set, trivially
        let k2 = complete_graph(2).unwrap();
        let (val, s) = max_excess_over(&k2, &VertexSet::full(2), p(3)).unwrap();
        assert_eq!((val, s), (1 - 6, VertexSet::full(2)));
    }

    #[test]
    fn sparsity_examples() {
        let k5 = complete_graph(5).unwrap();
        for b in [Backend::Brute, Backend::Flow, Backend::Both] {
            let v = is_d_sparse(&k5, p(3), b).unwrap();
            assert_eq!(v, SparsityVerdict::violated(VertexSet::full(5)));
            assert!(is_d_sparse(&complete_graph(4).unwrap(), p(3), b).unwrap().is_sparse);
            assert!(is_d_sparse(&double_k5().0, p(3), b).unwrap().is_sparse);
        }
    }

    #[test]
    fn brute_cap() {
        let g = Graph::empty(21);
        assert!(matches!(
            is_d_sparse(&g, p(2), Backend::Brute),
            Err(Error::Capability(_))
        ));
        assert!(is_d_sparse(&g, p(2), Backend::Flow).unwrap().is_sparse);
        assert!(matches!(
            tight_sets_brute(&Graph::empty(17), p(2)),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn can_add_examples() {
        let (g, (u, v)) = double_k5();
        assert!(!can_add_edge(&g, (u, v), p(3)).unwrap());
        assert!(can_add_edge(&Graph::empty(6), (2, 4), p(3)).unwrap());
        let mut k4 = Graph::empty(5);
        for (a, b) in complete_graph(4).unwrap().edges() {
            k4.add_edge(*a, *b).unwrap();
        }
        assert!(can_add_edge(&k4, (3, 4), p(3)).unwrap());
        assert!(matches!(can_add_edge(&k4, (0, 1), p(3)), Err(Error::Precondition(_))));
        let k5 = complete_graph(5)
            .unwrap()
            .without_edge(0, 1)
            .unwrap()
            .with_edge(0, 1)
            .unwrap();
        let k6 = Graph::from_edges(6, k5.edges().iter().copied()).unwrap();
        assert!(matches!(
            can_add_edge_verified(&k6, (0, 5), p(3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn maximal_examples() {
        let k5 = complete_graph(5).unwrap();
        for seed in 0..5 {
            let r = maximal_sparse_subgraph(&k5, p(3), &EdgeOrder::Random(seed)).unwrap();
            assert_eq!(r.kept_edges.len(), 9);
            assert_eq!(r.rejected_edges.len(), 1);
        }
        let g = double_k5_with_shared_edge();
        let mut order = vec![(0, 1)];
        order.extend(g.edges().iter().copied().filter(|&e| e != (0, 1)));
        let r = maximal_sparse_subgraph(&g, p(3), &EdgeOrder::Explicit(order)).unwrap();
        assert_eq!(r.kept_edges.len(), 17);

        let path_and_cycle = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let r = maximal_sparse_subgraph(&path_and_cycle, p(1), &EdgeOrder::Given).unwrap();
        assert_eq!(r.kept_edges.len(), 4);
    }

    #[test]
    fn explicit_order_must_be_permutation() {
        let k3 = complete_graph(3).unwrap();
        let bad = EdgeOrder::Explicit(vec![(0, 1), (0, 2)]);
        assert!(maximal_sparse_subgraph(&k3, p(1), &bad).is_err());
    }

    #[test]
    fn component_examples() {
        let (g, _) = double_k5();
        for b in [Backend::Flow, Backend::Brute] {
            let c = critical_components(&g, p(3), b).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c[0].vertices, VertexSet::full(8));
            assert_eq!(c[0].edge_set.len(), 18);
        }

        let g = double_k5_with_shared_edge();
        let mut order = vec![(0, 1)];
        order.extend(g.edges().iter().copied().filter(|&e| e != (0, 1)));
        let h = maximal_sparse_subgraph(&g, p(3), &EdgeOrder::Explicit(order))
            .unwrap()
            .subgraph();
        let c = critical_components(&h, p(3), Backend::Both).unwrap();
        let sets: Vec<_> = c.iter().map(|c| c.vertices.as_slice().to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2, 3, 4], vec![0, 1, 5, 6, 7]]);
        assert!(c.iter().all(|c| c.edge_set.len() == 9));

        let report = check_component_intersections(&c, &h, p(3)).unwrap();
        assert!(report.pass);
        assert_eq!((report.pairs[0].size, report.pairs[0].induced), (2, 1));

        let single = complete_graph(2).unwrap();
        let c = critical_components(&single, p(3), Backend::Both).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].vertices.len(), c[0].edge_set.len()), (2, 1));
        assert!(check_component_intersections(&c, &single, p(3)).unwrap().pass);
    }

    #[test]
    fn disjoint_tight_components() {
        // two disjoint K5-minus-an-edge blocks, each tight for d = 3
        let mut g = Graph::empty(10);
        for off in [0, 5] {
            for (u, v) in complete_graph(5).unwrap().without_edge(0, 1).unwrap().edges() {
                g.add_edge(u + off, v + off).unwrap();
            }
        }
        let c = critical_components(&g, p(3), Backend::Both).unwrap();
        assert_eq!(c.len(), 2);
        let r = check_component_intersections(&c, &g, p(3)).unwrap();
        assert!(r.pass && r.pairs[0].size == 0);
    }

    #[test]
    fn components_reject_non_sparse() {
        let k5 = complete_graph(5).unwrap();
        assert!(matches!(
            critical_components(&k5, p(3), Backend::Flow),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            critical_components(&k5, p(3), Backend::Brute),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn intersection_violation_is_reported() {
        let g = complete_graph(6).unwrap();
        let a = CriticalComponent {
            vertices: VertexSet::new(vec![0, 1, 2, 3]),
            edge_set: vec![],
        };
        let b = CriticalComponent {
            vertices: VertexSet::new(vec![1, 2, 3, 4]),
            edge_set: vec![],
        };
        let r = check_component_intersections(&[a, b], &g, p(3)).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn verdict_json() {
        let v = SparsityVerdict::violated(VertexSet::full(5));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"sparse":false,"witness":[0,1,2,3,4]}"#
        );
        assert_eq!(
            serde_json::to_string(&SparsityVerdict::sparse()).unwrap(),
            r#"{"sparse":true,"witness":null}"#
        );
    }
}
