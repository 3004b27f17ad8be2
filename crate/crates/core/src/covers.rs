//! Covers by vertex sets, their hinges, and the counting inequalities that
//! hold for critical covers of d-sparse graphs.
//!
//! A cover is a family of vertex sets, each with at least two vertices,
//! such that every edge lies inside some set. A k-hinge is a k-vertex set
//! contained in at least two members; its multiplicity `d_X(U)` counts the
//! members containing it. The empty set is treated as the single 0-hinge,
//! with multiplicity `|X|`, whenever the cover has at least two members.
//!
//! All arithmetic here is exact integer arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSubset, Graph, VertexSet};
use crate::sparsity::{
    check_component_intersections, critical_components, Backend, CriticalComponent, MaximalSubgraphResult,
    SparsityParams,
};

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    graph: Graph,
    sets: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Hinge {
    #[serde(skip)]
    pub sort_key: (usize, VertexSet),
    pub k: usize,
    pub vertices: VertexSet,
    #[serde(rename = "mult")]
    pub multiplicity: usize,
    pub closed: bool,
}

impl Cover {
    /// Validates that every set has two or more in-range vertices and that
    /// every edge of `graph` lies in some set.
    pub fn new(graph: Graph, sets: Vec<VertexSet>) -> Result<Self> {
        for s in &sets {
            graph.validate_set(s)?;
            if s.len() < 2 {
                return Err(Error::Input(format!("cover set {s} has fewer than two vertices")));
            }
        }
        if let Some(&(u, v)) = graph
            .edges()
            .iter()
            .find(|&&(u, v)| !sets.iter().any(|s| s.contains(u) && s.contains(v)))
        {
            return Err(Error::Input(format!("edge ({u},{v}) is not covered")));
        }
        Ok(Cover { graph, sets })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Largest pairwise intersection; 0 for fewer than two sets.
    pub fn thinness(&self) -> usize {
        self.sets
            .iter()
            .tuple_combinations()
            .map(|(a, b)| a.intersection(b).len())
            .max()
            .unwrap_or(0)
    }

    /// `d_X(U)`: number of members containing `u`.
    pub fn multiplicity(&self, u: &VertexSet) -> usize {
        self.sets.iter().filter(|s| u.is_subset(s)).count()
    }

    fn hinge(&self, vertices: VertexSet) -> Hinge {
        Hinge {
            sort_key: (vertices.len(), vertices.clone()),
            k: vertices.len(),
            multiplicity: self.multiplicity(&vertices),
            closed: self.graph.is_clique(&vertices),
            vertices,
        }
    }

    /// All k-hinges (`k ≥ 1`), sorted by vertex tuple. Candidates are the
    /// k-subsets of pairwise intersections.
    pub fn hinges(&self, k: usize) -> Vec<Hinge> {
        if k == 0 {
            return Vec::new();
        }
        let mut found = BTreeSet::new();
        for (a, b) in self.sets.iter().tuple_combinations() {
            let common = a.intersection(b);
            for sub in common.iter().combinations(k) {
                found.insert(VertexSet::new(sub));
            }
        }
        found.into_iter().map(|u| self.hinge(u)).collect()
    }

    /// Every hinge of size 1 up to the thinness, keyed by vertex set.
    pub fn hinge_index(&self) -> HingeIndex {
        let t = self.thinness();
        let mut by_set = BTreeMap::new();
        for k in 1..=t {
            for h in self.hinges(k) {
                by_set.insert(h.vertices.clone(), h);
            }
        }
        HingeIndex { by_set }
    }
}

#[derive(Clone, Debug, Default)]
pub struct HingeIndex {
    by_set: BTreeMap<VertexSet, Hinge>,
}

impl HingeIndex {
    pub fn of_size(&self, k: usize) -> impl Iterator<Item = &Hinge> {
        self.by_set.values().filter(move |h| h.k == k)
    }

    /// `Σ (d_X(U) − 1)` over k-hinges `U` strictly containing `w`.
    pub fn excess_above(&self, w: &VertexSet, k: usize) -> i64 {
        self.of_size(k)
            .filter(|h| w.is_subset(&h.vertices) && h.vertices != *w)
            .map(|h| h.multiplicity as i64 - 1)
            .sum()
    }

    /// All hinges sorted by (size, vertex tuple).
    pub fn all(&self) -> Vec<&Hinge> {
        let mut v: Vec<&Hinge> = self.by_set.values().collect();
        v.sort();
        v
    }
}

/// Verifies the structure promised for critical covers: thinness at most
/// `d − 1`, and every `(d − 1)`-hinge closed in the parent graph.
fn check_critical_structure(cover: &Cover, params: SparsityParams) -> Result<()> {
    let d = params.d();
    let t = cover.thinness();
    if t > d - 1 {
        return Err(Error::Inconsistency(format!(
            "critical cover is {t}-thin, expected at most {}",
            d - 1
        )));
    }
    if d >= 2 {
        if let Some(h) = cover.hinges(d - 1).into_iter().find(|h| !h.closed) {
            return Err(Error::Inconsistency(format!(
                "({})-hinge {} is not closed",
                d - 1,
                h.vertices
            )));
        }
    }
    Ok(())
}

/// The H-critical cover of `g`: vertex sets of the d-critical components of
/// the maximal d-sparse subgraph `h`.
pub fn critical_cover(g: &Graph, h: &MaximalSubgraphResult, params: SparsityParams) -> Result<Cover> {
    if h.vertex_count != g.vertex_count() {
        return Err(Error::Input("subgraph and graph differ in vertex count".into()));
    }
    let sub = h.subgraph();
    let comps = critical_components(&sub, params, Backend::Flow)?;
    let sets = comps.into_iter().map(|c| c.vertices).collect();
    let cover = Cover::new(g.clone(), sets)
        .map_err(|e| Error::Inconsistency(format!("critical sets do not cover the graph: {e}")))?;
    check_critical_structure(&cover, params)?;
    Ok(cover)
}

/// The d-critical cover of a d-sparse graph.
pub fn sparse_cover(h: &Graph, params: SparsityParams) -> Result<(Cover, Vec<CriticalComponent>)> {
    let comps = critical_components(h, params, Backend::Flow)?;
    let sets = comps.iter().map(|c| c.vertices.clone()).collect();
    let cover = Cover::new(h.clone(), sets)
        .map_err(|e| Error::Inconsistency(format!("critical sets do not cover the graph: {e}")))?;
    check_critical_structure(&cover, params)?;
    Ok((cover, comps))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HingeAggregates {
    /// `a[k] = Σ_{U ∈ Θ_k} (d_X(U) − 1)` for `k = 0..=d`.
    pub a: Vec<i64>,
    /// `theta[i][k]`: number of k-hinges inside the i-th set.
    pub theta: Vec<Vec<usize>>,
    /// Set when the cover has fewer than two members; everything is zero.
    pub degenerate: bool,
}

pub fn aggregates(c: &Cover, params: SparsityParams) -> HingeAggregates {
    let d = params.d();
    let m = c.len();
    if m < 2 {
        return HingeAggregates {
            a: vec![0; d + 1],
            theta: vec![vec![0; d + 1]; m],
            degenerate: true,
        };
    }
    let index = c.hinge_index();
    let mut a = vec![0i64; d + 1];
    a[0] = m as i64 - 1;
    let mut theta = vec![vec![0usize; d + 1]; m];
    for row in theta.iter_mut() {
        row[0] = 1;
    }
    for h in index.all() {
        if h.k > d {
            continue;
        }
        a[h.k] += h.multiplicity as i64 - 1;
        for (i, s) in c.sets().iter().enumerate() {
            if h.vertices.is_subset(s) {
                theta[i][h.k] += 1;
            }
        }
    }
    HingeAggregates {
        a,
        theta,
        degenerate: false,
    }
}

/// One evaluated inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl CheckRecord {
    fn strict(name: String, lhs: i64, rhs: i64) -> Self {
        CheckRecord {
            name,
            lhs,
            rhs,
            pass: lhs < rhs,
        }
    }

    fn at_most(name: String, lhs: i64, rhs: i64) -> Self {
        CheckRecord {
            name,
            lhs,
            rhs,
            pass: lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// False when the hypotheses are not met; the report is then vacuous.
    pub applicable: bool,
    pub checks: Vec<CheckRecord>,
    /// Hinges skipped because a containing component has two vertices.
    pub exempt: Vec<VertexSet>,
    pub pass: bool,
}

impl CheckReport {
    fn new(applicable: bool, checks: Vec<CheckRecord>, exempt: Vec<VertexSet>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        CheckReport {
            applicable,
            checks,
            exempt,
            pass,
        }
    }

    fn vacuous() -> Self {
        CheckReport::new(false, Vec::new(), Vec::new())
    }
}

/// For each hinge `W ∈ Θ_k`, `0 ≤ k ≤ d − 1`, all of whose containing
/// components have at least `d + 2` vertices:
/// `(d−k)·Σ_{Θ_{k+1} ∋ U ⊃ W}(d_X(U)−1) − Σ_{Θ_{k+2} ∋ U ⊃ W}(d_X(U)−1)
///  < C(d+1−k, 2)·(d_X(W) − 1)`.
pub fn check_prefixedhinge(h: &Graph, params: SparsityParams) -> Result<CheckReport> {
    let (cover, _) = sparse_cover(h, params)?;
    Ok(prefixedhinge_on(&cover, params))
}

fn prefixedhinge_on(cover: &Cover, params: SparsityParams) -> CheckReport {
    let d = params.d() as i64;
    if cover.len() < 2 {
        return CheckReport::vacuous();
    }
    let index = cover.hinge_index();
    let mut candidates: Vec<(usize, VertexSet, usize)> = vec![(0, VertexSet::empty(), cover.len())];
    for k in 1..params.d() {
        candidates.extend(index.of_size(k).map(|h| (k, h.vertices.clone(), h.multiplicity)));
    }
    let mut checks = Vec::new();
    let mut exempt = Vec::new();
    for (k, w, mult) in candidates {
        let qualifies = cover
            .sets()
            .iter()
            .filter(|s| w.is_subset(s))
            .all(|s| s.len() as i64 >= d + 2);
        if !qualifies {
            exempt.push(w);
            continue;
        }
        let ki = k as i64;
        let lhs = (d - ki) * index.excess_above(&w, k + 1) - index.excess_above(&w, k + 2);
        let rhs = binom(d + 1 - ki, 2) * (mult as i64 - 1);
        checks.push(CheckRecord::strict(format!("prefixedhinge k={k} W={w}"), lhs, rhs));
    }
    CheckReport::new(true, checks, exempt)
}

/// With every component on at least `d + 2` vertices and `|X| ≥ 2`, for
/// `0 ≤ k ≤ d − 2`:
/// (a) `(d−k)(k+1)a_{k+1} − C(k+2,2)a_{k+2} < C(d+1−k,2)a_k`;
/// (b) `(d−k)a_{k+1} − (k+1)a_{k+2} < C(d+1,k+2)(|X|−1)`;
/// (c) `d(d−k)a_{k+1} < (k+2)(d−k−1)C(d+1,k+2)(|X|−1)`.
pub fn check_fixedhinge(h: &Graph, params: SparsityParams) -> Result<CheckReport> {
    let (cover, _) = sparse_cover(h, params)?;
    Ok(fixedhinge_on(&cover, params))
}

fn fixedhinge_on(cover: &Cover, params: SparsityParams) -> CheckReport {
    let d = params.d() as i64;
    if cover.len() < 2 || cover.sets().iter().any(|s| (s.len() as i64) < d + 2) {
        return CheckReport::vacuous();
    }
    let agg = aggregates(cover, params);
    let index = cover.hinge_index();
    let a = &agg.a;
    let m1 = cover.len() as i64 - 1;
    let mut checks = Vec::new();
    for k in 0..params.d().saturating_sub(1) {
        let ki = k as i64;
        let (ak, ak1, ak2) = (a[k], a[k + 1], a[k + 2]);
        // (a) sums one strict inequality per k-hinge; with no k-hinges both
        // sides vanish.
        let lhs = (d - ki) * (ki + 1) * ak1 - binom(ki + 2, 2) * ak2;
        let rhs = binom(d + 1 - ki, 2) * ak;
        if k > 0 && index.of_size(k).next().is_none() {
            checks.push(CheckRecord::at_most(
                format!("fixedhinge(a) k={k} (no {k}-hinges)"),
                lhs,
                rhs,
            ));
        } else {
            checks.push(CheckRecord::strict(format!("fixedhinge(a) k={k}"), lhs, rhs));
        }
        checks.push(CheckRecord::strict(
            format!("fixedhinge(b) k={k}"),
            (d - ki) * ak1 - (ki + 1) * ak2,
            binom(d + 1, ki + 2) * m1,
        ));
        checks.push(CheckRecord::strict(
            format!("fixedhinge(c) k={k}"),
            d * (d - ki) * ak1,
            (ki + 2) * (d - ki - 1) * binom(d + 1, ki + 2) * m1,
        ));
    }
    CheckReport::new(true, checks, Vec::new())
}

/// Some component has at most `2d − 1` 1-hinges, some has at most
/// `(d−2)(d+1) − 1` 2-hinges (`d ≥ 3`), and some has at most `d`
/// `(d−1)`-hinges. Vacuous when a two-vertex component exists.
pub fn check_boundedhinges(h: &Graph, params: SparsityParams) -> Result<CheckReport> {
    let (cover, _) = sparse_cover(h, params)?;
    Ok(boundedhinges_on(&cover, params))
}

fn boundedhinges_on(cover: &Cover, params: SparsityParams) -> CheckReport {
    let d = params.d();
    if cover.is_empty() || cover.sets().iter().any(|s| s.len() == 2) {
        return CheckReport::vacuous();
    }
    let agg = aggregates(cover, params);
    let min_theta = |k: usize| agg.theta.iter().map(|row| row[k]).min().unwrap_or(0) as i64;
    let di = d as i64;
    let mut checks = vec![CheckRecord::at_most(
        "boundedhinges(a) min theta_1".into(),
        min_theta(1),
        2 * di - 1,
    )];
    // the 2-hinge bound comes from the k = 1 case, which needs d >= 3
    if d >= 3 {
        checks.push(CheckRecord::at_most(
            "boundedhinges(b) min theta_2".into(),
            min_theta(2),
            (di - 2) * (di + 1) - 1,
        ));
    }
    checks.push(CheckRecord::at_most(
        format!("boundedhinges(c) min theta_{}", d - 1),
        min_theta(d - 1),
        di,
    ));
    CheckReport::new(true, checks, Vec::new())
}

/// `E_i*`: edges of the i-th component whose endpoints form a 2-hinge.
/// `edges_from` supplies the component edges (the sparse subgraph for an
/// H-critical cover).
pub fn two_hinge_edges(c: &Cover, component_index: usize, edges_from: &Graph) -> Result<EdgeSubset> {
    let set = c
        .sets()
        .get(component_index)
        .ok_or_else(|| Error::Input(format!("component index {component_index} out of range")))?;
    let two_hinges: BTreeSet<VertexSet> = c.hinges(2).into_iter().map(|h| h.vertices).collect();
    Ok(edges_from
        .induced_edges(set)
        .into_iter()
        .filter(|&(u, v): &Edge| two_hinges.contains(&VertexSet::new(vec![u, v])))
        .collect())
}

/// Full audit of a critical cover, in the published JSON layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub thin: usize,
    pub hinges: Vec<Hinge>,
    pub a: Vec<i64>,
    pub theta: Vec<Vec<usize>>,
    pub checks: Vec<CheckRecord>,
}

impl CoverReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Builds the H-critical cover of `g` and evaluates every cover property and
/// counting inequality on it. The counting inequalities are evaluated on the
/// d-critical cover of `h` itself, which has the same members.
pub fn analyze_cover(g: &Graph, h: &MaximalSubgraphResult, params: SparsityParams) -> Result<CoverReport> {
    let cover = critical_cover(g, h, params)?;
    let sub = h.subgraph();
    let (own, comps) = sparse_cover(&sub, params)?;
    let d = params.d();
    let index = cover.hinge_index();
    let agg = aggregates(&cover, params);

    let mut checks = vec![CheckRecord::at_most(
        "thin".into(),
        cover.thinness() as i64,
        d as i64 - 1,
    )];
    if d >= 2 {
        let open = cover.hinges(d - 1).iter().filter(|h| !h.closed).count() as i64;
        checks.push(CheckRecord::at_most(
            format!("closed {}-hinges (open count)", d - 1),
            open,
            0,
        ));
    }
    checks.push(CheckRecord::at_most(
        format!("theta_{d} empty (count)"),
        cover.hinges(d).len() as i64,
        0,
    ));
    let inter = check_component_intersections(&comps, &sub, params)?;
    for p in &inter.pairs {
        checks.push(CheckRecord {
            name: format!("intersection {}&{} (size, induced)", p.first, p.second),
            lhs: p.size as i64,
            rhs: p.induced as i64,
            pass: p.pass,
        });
    }
    for rep in [
        prefixedhinge_on(&own, params),
        fixedhinge_on(&own, params),
        boundedhinges_on(&own, params),
    ] {
        checks.extend(rep.checks);
    }
    Ok(CoverReport {
        thin: cover.thinness(),
        hinges: index.all().into_iter().cloned().collect(),
        a: agg.a,
        theta: agg.theta,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, double_k5, double_k5_with_shared_edge};
    use crate::sparsity::{maximal_sparse_subgraph, EdgeOrder};

    fn p(d: usize) -> SparsityParams {
        SparsityParams::new(d).unwrap()
    }

    /// double K5 with uv, and its 17-edge maximal subgraph keeping uv
    fn two_block() -> (Graph, MaximalSubgraphResult) {
        let g = double_k5_with_shared_edge();
        let mut order = vec![(0, 1)];
        order.extend(g.edges().iter().copied().filter(|&e| e != (0, 1)));
        let h = maximal_sparse_subgraph(&g, p(3), &EdgeOrder::Explicit(order)).unwrap();
        (g, h)
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 3), 4);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
    }

    #[test]
    fn cover_validation() {
        let g = complete_graph(3).unwrap();
        assert!(Cover::new(g.clone(), vec![VertexSet::new(vec![0, 1])]).is_err());
        assert!(Cover::new(g.clone(), vec![VertexSet::new(vec![0])]).is_err());
        assert!(Cover::new(g, vec![VertexSet::full(3)]).is_ok());
    }

    #[test]
    fn critical_cover_examples() {
        let (g, h) = two_block();
        assert_eq!(h.kept_edges.len(), 17);
        let c = critical_cover(&g, &h, p(3)).unwrap();
        assert_eq!(c.sets().iter().map(VertexSet::len).collect::<Vec<_>>(), vec![5, 5]);

        let (g, _) = double_k5();
        let h = maximal_sparse_subgraph(&g, p(3), &EdgeOrder::Given).unwrap();
        let c = critical_cover(&g, &h, p(3)).unwrap();
        assert_eq!(c.sets(), &[VertexSet::full(8)]);

        let e = complete_graph(2).unwrap();
        let h = maximal_sparse_subgraph(&e, p(3), &EdgeOrder::Given).unwrap();
        let c = critical_cover(&e, &h, p(3)).unwrap();
        assert_eq!(c.sets(), &[VertexSet::full(2)]);
    }

    #[test]
    fn hinge_examples() {
        let (g, h) = two_block();
        let c = critical_cover(&g, &h, p(3)).unwrap();
        let h1 = c.hinges(1);
        assert_eq!(
            h1.iter()
                .map(|h| (h.vertices.as_slice().to_vec(), h.multiplicity))
                .collect::<Vec<_>>(),
            vec![(vec![0], 2), (vec![1], 2)]
        );
        let h2 = c.hinges(2);
        assert_eq!(h2.len(), 1);
        assert_eq!(h2[0].vertices.as_slice(), &[0, 1]);
        assert_eq!(h2[0].multiplicity, 2);
        assert!(h2[0].closed);
        assert!(c.hinges(3).is_empty());

        let single = Cover::new(complete_graph(4).unwrap(), vec![VertexSet::full(4)]).unwrap();
        for k in 0..4 {
            assert!(single.hinges(k).is_empty());
        }
    }

    #[test]
    fn aggregate_examples() {
        let (g, h) = two_block();
        let c = critical_cover(&g, &h, p(3)).unwrap();
        let agg = aggregates(&c, p(3));
        assert_eq!(agg.a, vec![1, 2, 1, 0]);
        assert!(!agg.degenerate);
        for row in &agg.theta {
            assert_eq!((row[1], row[2]), (2, 1));
        }
        let single = Cover::new(complete_graph(4).unwrap(), vec![VertexSet::full(4)]).unwrap();
        let agg = aggregates(&single, p(3));
        assert!(agg.degenerate && agg.a == vec![0; 4]);
    }

    #[test]
    fn prefixedhinge_examples() {
        let (_, h) = two_block();
        let r = check_prefixedhinge(&h.subgraph(), p(3)).unwrap();
        assert!(r.applicable && r.pass);
        let find = |name: &str| r.checks.iter().find(|c| c.name == name).unwrap().clone();
        let w_u = find("prefixedhinge k=1 W={0}");
        assert_eq!((w_u.lhs, w_u.rhs), (2, 3));
        let w_empty = find("prefixedhinge k=0 W={}");
        assert_eq!((w_empty.lhs, w_empty.rhs), (5, 6));
    }

    #[test]
    fn prefixedhinge_exempts_small_components() {
        // tight block {0..4} (K5 minus 0-1) plus a pendant edge 4-5
        let mut g = complete_graph(5).unwrap().without_edge(0, 1).unwrap();
        g = Graph::from_edges(6, g.edges().iter().copied().chain([(4, 5)])).unwrap();
        let r = check_prefixedhinge(&g, p(3)).unwrap();
        assert!(r.exempt.contains(&VertexSet::new(vec![4])));
        assert!(r.exempt.contains(&VertexSet::empty()));
        assert!(r.pass);
        let f = check_fixedhinge(&g, p(3)).unwrap();
        assert!(!f.applicable && f.pass);
        let b = check_boundedhinges(&g, p(3)).unwrap();
        assert!(!b.applicable && b.pass);
    }

    #[test]
    fn fixedhinge_examples() {
        let (_, h) = two_block();
        let r = check_fixedhinge(&h.subgraph(), p(3)).unwrap();
        assert!(r.applicable && r.pass);
        let find = |name: &str| r.checks.iter().find(|c| c.name == name).unwrap().clone();
        let a0 = find("fixedhinge(a) k=0");
        assert_eq!((a0.lhs, a0.rhs), (5, 6));
        let c1 = find("fixedhinge(c) k=1");
        assert_eq!((c1.lhs, c1.rhs), (6, 12));
    }

    #[test]
    fn fixedhinge_without_hinges() {
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    if (u, v) != (3, 4) {
                        edges.push((base + u, base + v));
                    }
                }
            }
        }
        let h = Graph::from_edges(10, edges).unwrap();
        let r = check_fixedhinge(&h, p(3)).unwrap();
        assert!(r.applicable && r.pass);
        let a1 = r
            .checks
            .iter()
            .find(|c| c.name.starts_with("fixedhinge(a) k=1"))
            .unwrap();
        assert_eq!((a1.lhs, a1.rhs), (0, 0));
        assert!(a1.name.contains("no 1-hinges"));
    }

    #[test]
    fn boundedhinges_examples() {
        let (_, h) = two_block();
        let r = check_boundedhinges(&h.subgraph(), p(3)).unwrap();
        assert!(r.applicable && r.pass);
        let got: Vec<(i64, i64)> = r.checks.iter().map(|c| (c.lhs, c.rhs)).collect();
        assert_eq!(got, vec![(2, 5), (1, 3), (1, 3)]);

        let r = check_boundedhinges(&double_k5().0, p(3)).unwrap();
        assert!(r.pass && r.checks.iter().all(|c| c.lhs == 0));
    }

    #[test]
    fn two_hinge_edge_examples() {
        let (g, h) = two_block();
        let c = critical_cover(&g, &h, p(3)).unwrap();
        let sub = h.subgraph();
        for i in 0..2 {
            assert_eq!(two_hinge_edges(&c, i, &sub).unwrap(), vec![(0, 1)]);
        }
        assert!(two_hinge_edges(&c, 2, &sub).is_err());

        let (g, _) = double_k5();
        let single = Cover::new(g.clone(), vec![VertexSet::full(8)]).unwrap();
        assert!(two_hinge_edges(&single, 0, &g).unwrap().is_empty());

        // three K5 blocks on a triangle of shared edges
        let blocks = [vec![0, 1, 2, 3, 4], vec![2, 3, 5, 6, 7], vec![4, 0, 5, 8, 7]];
        let mut edges = BTreeSet::new();
        for b in &blocks {
            for (x, y) in b.iter().tuple_combinations() {
                edges.insert(crate::graph::canon(*x, *y));
            }
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let c = Cover::new(g.clone(), blocks.iter().cloned().map(VertexSet::new).collect()).unwrap();
        assert_eq!(two_hinge_edges(&c, 0, &g).unwrap(), vec![(0, 4), (2, 3)]);
        assert_eq!(two_hinge_edges(&c, 1, &g).unwrap(), vec![(2, 3), (5, 7)]);
        assert_eq!(two_hinge_edges(&c, 2, &g).unwrap(), vec![(0, 4), (5, 7)]);
    }

    #[test]
    fn report_json_layout() {
        let (g, h) = two_block();
        let r = analyze_cover(&g, &h, p(3)).unwrap();
        assert!(r.pass());
        let v = serde_json::to_value(&r).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"thin":2,"hinges":[{"k":1,"vertices":[0],"mult":2,"closed":true},"#));
        assert!(text.contains(r#"],"a":[1,2,1,0],"theta":[[1,2,1,0],[1,2,1,0]],"checks":[{"name":"thin""#));
        assert_eq!(
            v["hinges"][0],
            serde_json::json!({"k":1,"vertices":[0],"mult":2,"closed":true})
        );
        assert_eq!(v["thin"], 2);
    }
}
