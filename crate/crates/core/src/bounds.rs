//! Rank upper bounds from maximal d-sparse subgraphs.
//!
//! For `d ≤ 5` every maximal d-sparse subgraph `H = (V, F)` of `G` satisfies
//! `r_d(G) ≤ |F|`. This module samples maximal subgraphs to test that
//! bound, estimates `s_d(G)` (the fewest edges in a maximal d-sparse
//! subgraph) and `s_d*(G)` (the least `s_d` over supergraphs), and searches
//! for candidate counterexamples in dimensions 6 to 8.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{k5_flower, random_gnp, seeded_rng};
use crate::graph::{canon, Edge, Graph};
use crate::io::{serialize_graph, Format};
use crate::rank::{generic_rank, RankResult, DEFAULT_TRIALS};
use crate::sparsity::{can_add_edge, maximal_sparse_subgraph, EdgeOrder, MaximalSubgraphResult, SparsityParams};

/// Largest edge count accepted by the exhaustive `s_d` search.
pub const EXHAUSTIVE_MAX_EDGES: usize = 20;
/// Largest number of added edges in the `s_d*` search.
pub const MAX_STAR_BUDGET: usize = 3;
/// Rank trials used to re-verify a candidate counterexample.
pub const HUNT_VERIFY_TRIALS: usize = 10;

fn require_proven(params: SparsityParams) -> Result<()> {
    if params.beyond_proven_range() {
        return Err(Error::Precondition(format!(
            "the rank bound is only established for d <= 5, got d = {}",
            params.d()
        )));
    }
    Ok(())
}

fn sample_seeds(seed: u64, samples: usize) -> Vec<u64> {
    (0..samples as u64).map(|i| seed.wrapping_add(i)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub seed: u64,
    pub order: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub rank: usize,
    pub samples: Vec<usize>,
    pub min: usize,
    pub violations: Vec<BoundViolation>,
    #[serde(skip)]
    pub rank_detail: RankResult,
}

impl BoundReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `r_d(G)` with `samples` random-order maximal d-sparse subgraphs
/// (order seeds `seed, seed + 1, ...`).
pub fn upper_bound_check(g: &Graph, params: SparsityParams, samples: usize, seed: u64) -> Result<BoundReport> {
    require_proven(params)?;
    let rank_detail = generic_rank(g, params, DEFAULT_TRIALS, seed)?;
    let rank = rank_detail.rank;
    let runs: Vec<(u64, MaximalSubgraphResult)> = sample_seeds(seed, samples)
        .into_par_iter()
        .map(|s| Ok((s, maximal_sparse_subgraph(g, params, &EdgeOrder::Random(s))?)))
        .collect::<Result<_>>()?;
    let sizes: Vec<usize> = runs.iter().map(|(_, r)| r.kept_edges.len()).collect();
    let violations = runs
        .into_iter()
        .filter(|(_, r)| rank > r.kept_edges.len())
        .map(|(s, r)| BoundViolation {
            seed: s,
            order: r.insertion_order,
        })
        .collect();
    Ok(BoundReport {
        rank,
        min: sizes.iter().copied().min().unwrap_or(0),
        samples: sizes,
        violations,
        rank_detail,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdMode {
    /// Branch and bound over edge decisions; at most 20 edges.
    Exhaustive,
    /// Minimum over the given order, optionally one order per edge with that
    /// edge first, and `samples` random orders.
    Heuristic { samples: usize, seed: u64, pivots: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdEstimate {
    pub value: usize,
    pub exact: bool,
    pub orders_tried: usize,
    pub witness: MaximalSubgraphResult,
}

/// Kept-first order through the greedy routine: reproduces `kept` exactly
/// iff `kept` spans a maximal d-sparse subgraph.
fn verified_witness(g: &Graph, kept: &[Edge], params: SparsityParams) -> Result<MaximalSubgraphResult> {
    let mut order = kept.to_vec();
    order.extend(g.edges().iter().copied().filter(|e| !kept.contains(e)));
    let r = maximal_sparse_subgraph(g, params, &EdgeOrder::Explicit(order))?;
    if r.kept_edges.as_slice() != kept {
        return Err(Error::Inconsistency(
            "witness is not a maximal d-sparse subgraph".into(),
        ));
    }
    Ok(r)
}

fn pivot_order(g: &Graph, first: &[Edge]) -> EdgeOrder {
    let mut order = first.to_vec();
    order.extend(g.edges().iter().copied().filter(|e| !first.contains(e)));
    EdgeOrder::Explicit(order)
}

fn best_of(g: &Graph, params: SparsityParams, orders: Vec<EdgeOrder>) -> Result<(MaximalSubgraphResult, usize)> {
    let tried = orders.len();
    let runs: Vec<MaximalSubgraphResult> = orders
        .into_par_iter()
        .map(|o| maximal_sparse_subgraph(g, params, &o))
        .collect::<Result<_>>()?;
    let best = runs
        .into_iter()
        .min_by_key(|r| r.kept_edges.len())
        .ok_or_else(|| Error::Input("no orders to evaluate".into()))?;
    Ok((best, tried))
}

/// Upper bound on `s_d(G)` (exact in exhaustive mode) with a verified
/// maximal witness.
pub fn s_d_estimate(g: &Graph, params: SparsityParams, mode: SdMode) -> Result<SdEstimate> {
    match mode {
        SdMode::Heuristic { samples, seed, pivots } => {
            let mut orders = vec![EdgeOrder::Given];
            if pivots {
                orders.extend(g.edges().iter().map(|&e| pivot_order(g, &[e])));
            }
            orders.extend(sample_seeds(seed, samples).into_iter().map(EdgeOrder::Random));
            let (best, tried) = best_of(g, params, orders)?;
            let witness = verified_witness(g, &best.kept_edges, params)?;
            Ok(SdEstimate {
                value: witness.kept_edges.len(),
                exact: false,
                orders_tried: tried,
                witness,
            })
        }
        SdMode::Exhaustive => {
            let m = g.edge_count();
            if m > EXHAUSTIVE_MAX_EDGES {
                return Err(Error::Capability(format!(
                    "exhaustive s_d limited to {EXHAUSTIVE_MAX_EDGES} edges, graph has {m}"
                )));
            }
            let start = maximal_sparse_subgraph(g, params, &EdgeOrder::Given)?;
            let mut search = ExactSearch {
                params,
                edges: g.edges().to_vec(),
                best: start.kept_edges.len(),
                best_kept: start.kept_edges,
                nodes: 0,
            };
            let mut kept = Vec::new();
            let mut skipped = Vec::new();
            search.branch(0, &Graph::empty(g.vertex_count()), &mut kept, &mut skipped);
            let witness = verified_witness(g, &search.best_kept, params)?;
            Ok(SdEstimate {
                value: search.best,
                exact: true,
                orders_tried: search.nodes,
                witness,
            })
        }
    }
}

struct ExactSearch {
    params: SparsityParams,
    edges: Vec<Edge>,
    best: usize,
    best_kept: Vec<Edge>,
    nodes: usize,
}

impl ExactSearch {
    /// Decides `edges[i..]`. `skipped` holds edges left out while still
    /// addable; each must be blocked by the final subgraph. Blocked edges
    /// stay blocked as edges are added, so they need no bookkeeping.
    fn branch(&mut self, i: usize, h: &Graph, kept: &mut Vec<Edge>, skipped: &mut Vec<Edge>) {
        self.nodes += 1;
        if kept.len() >= self.best {
            return;
        }
        if i == self.edges.len() {
            let maximal = skipped
                .iter()
                .all(|&e| !can_add_edge(h, e, self.params).expect("skipped edge absent"));
            if maximal {
                self.best = kept.len();
                self.best_kept = kept.clone();
            }
            return;
        }
        let e = self.edges[i];
        if !can_add_edge(h, e, self.params).expect("edge absent") {
            self.branch(i + 1, h, kept, skipped);
            return;
        }
        skipped.push(e);
        self.branch(i + 1, h, kept, skipped);
        skipped.pop();

        let h2 = h.with_edge(e.0, e.1).expect("edge absent");
        kept.push(e);
        self.branch(i + 1, &h2, kept, skipped);
        kept.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdStarResult {
    pub value: usize,
    pub added: Vec<Edge>,
    pub rank: usize,
    pub candidates: usize,
    pub pass: bool,
}

/// Least heuristic `s_d` over supergraphs adding at most `budget` non-edges.
/// The unaugmented graph uses pivot orders plus `samples` random orders;
/// each augmented graph uses the added edges first, then the given order and
/// `samples` random orders of the rest.
pub fn s_d_star_search(
    g: &Graph,
    params: SparsityParams,
    budget: usize,
    samples: usize,
    seed: u64,
) -> Result<SdStarResult> {
    require_proven(params)?;
    if budget > MAX_STAR_BUDGET {
        return Err(Error::Input(format!("edge budget {budget} exceeds {MAX_STAR_BUDGET}")));
    }
    let rank = generic_rank(g, params, DEFAULT_TRIALS, seed)?.rank;
    let base = s_d_estimate(
        g,
        params,
        SdMode::Heuristic {
            samples,
            seed,
            pivots: true,
        },
    )?;
    let mut best = (base.value, Vec::new());
    let non_edges = g.non_edges();
    let mut candidates = 1;
    for size in 1..=budget {
        let sets: Vec<Vec<Edge>> = non_edges.iter().copied().combinations(size).collect();
        candidates += sets.len();
        let values: Vec<(usize, Vec<Edge>)> = sets
            .into_par_iter()
            .map(|added| {
                let mut gs = g.clone();
                for &(u, v) in &added {
                    gs.add_edge(u, v)?;
                }
                let mut orders = vec![pivot_order(&gs, &added)];
                let mut rng = seeded_rng(seed);
                for _ in 0..samples {
                    let mut rest: Vec<Edge> = g.edges().to_vec();
                    rest.shuffle(&mut rng);
                    orders.push(pivot_order(&gs, &added.iter().copied().chain(rest).collect::<Vec<_>>()));
                }
                let (r, _) = best_of(&gs, params, orders)?;
                Ok((r.kept_edges.len(), added))
            })
            .collect::<Result<_>>()?;
        for (v, added) in values {
            if v < best.0 {
                best = (v, added);
            }
        }
    }
    Ok(SdStarResult {
        value: best.0,
        added: best.1,
        rank,
        candidates,
        pass: best.0 >= rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthSample {
    pub edge: Edge,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub base_rank: usize,
    pub samples: Vec<GrowthSample>,
    pub pass: bool,
}

/// Rank after adding each of `edges`; passes when every one raises the rank.
pub fn rank_growth_for(g: &Graph, params: SparsityParams, edges: &[Edge], seed: u64) -> Result<GrowthReport> {
    let base_rank = generic_rank(g, params, DEFAULT_TRIALS, seed)?.rank;
    let samples = edges
        .iter()
        .map(|&(u, v)| {
            let gs = g.with_edge(u, v)?;
            Ok(GrowthSample {
                edge: canon(u, v),
                rank: generic_rank(&gs, params, DEFAULT_TRIALS, seed)?.rank,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = samples.iter().all(|s| s.rank == base_rank + 1);
    Ok(GrowthReport {
        base_rank,
        samples,
        pass,
    })
}

/// Adds `sample_edges` random non-edges to the K5-flower one at a time and
/// checks that each raises the 3-dimensional rank from 89 to 90.
pub fn flower_rank_growth_check(sample_edges: usize, seed: u64) -> Result<GrowthReport> {
    let g = k5_flower();
    let params = SparsityParams::new(3)?;
    let mut rng = seeded_rng(seed);
    let picks: Vec<Edge> = g.non_edges().choose_multiple(&mut rng, sample_edges).copied().collect();
    rank_growth_for(&g, params, &picks, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntCandidate {
    pub graph_seed: u64,
    pub graph: String,
    pub rank: usize,
    pub kept: usize,
    pub order_seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub d: usize,
    pub graphs_checked: usize,
    pub skipped_empty: usize,
    pub candidates: Vec<HuntCandidate>,
}

/// Orders sampled per graph during the hunt.
pub const HUNT_ORDERS_PER_GRAPH: usize = 5;

/// Random graphs on up to `n_max` vertices, each compared against
/// [`HUNT_ORDERS_PER_GRAPH`] sampled maximal d-sparse subgraphs. A graph
/// whose rank exceeds some sampled `|F|` after re-verification with
/// [`HUNT_VERIFY_TRIALS`] rank trials is logged as a candidate. Never fails
/// on findings.
pub fn counterexample_hunt(params: SparsityParams, n_max: usize, samples: usize, seed: u64) -> Result<HuntReport> {
    let d = params.d();
    let mut checked = 0;
    let mut skipped_empty = 0;
    let mut candidates = Vec::new();
    for graph_seed in sample_seeds(seed, samples) {
        let mut rng = seeded_rng(graph_seed);
        let low = (d + 2).min(n_max);
        let n = rng.gen_range(low..=n_max.max(low));
        let density = [0.3, 0.5, 0.8][rng.gen_range(0..3)];
        let g = random_gnp(n, density, &mut rng);
        if g.edge_count() == 0 {
            skipped_empty += 1;
            continue;
        }
        checked += 1;
        let rank = generic_rank(&g, params, DEFAULT_TRIALS, graph_seed)?.rank;
        for order_seed in sample_seeds(graph_seed, HUNT_ORDERS_PER_GRAPH) {
            let kept = maximal_sparse_subgraph(&g, params, &EdgeOrder::Random(order_seed))?
                .kept_edges
                .len();
            if rank > kept {
                let verified = generic_rank(&g, params, HUNT_VERIFY_TRIALS, graph_seed)?.rank;
                if verified > kept {
                    let graph = String::from_utf8(serialize_graph(&g, Format::Json)).expect("ascii json");
                    candidates.push(HuntCandidate {
                        graph_seed,
                        graph,
                        rank: verified,
                        kept,
                        order_seed,
                    });
                }
            }
        }
    }
    Ok(HuntReport {
        d,
        graphs_checked: checked,
        skipped_empty,
        candidates,
    })
}
