//! Rigidity matrices at random points over `GF(p)`, `p = 2^61 − 1`, and
//! their ranks.
//!
//! A specialization can only lose rank, so every computed rank is a lower
//! bound on the generic rank `r_d(G)`. A rank-`r` minor is a polynomial of
//! degree `r` in the coordinates, so one trial undercounts with probability
//! at most `r / p`.

use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::seeded_rng;
use crate::graph::{canon, Edge, Graph};
use crate::sparsity::{is_d_sparse, Backend, SparsityParams};

/// The Mersenne prime `2^61 − 1`.
pub const DEFAULT_PRIME: u64 = (1u64 << 61) - 1;
pub const DEFAULT_TRIALS: usize = 3;

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// One point of `GF(p)^d` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateAssignment {
    prime: u64,
    points: Vec<Vec<u64>>,
}

impl CoordinateAssignment {
    pub fn new(prime: u64, points: Vec<Vec<u64>>) -> Result<Self> {
        if points.iter().flatten().any(|&x| x >= prime) {
            return Err(Error::Input("coordinate not reduced modulo the prime".into()));
        }
        Ok(CoordinateAssignment { prime, points })
    }

    /// Uniform coordinates in `[0, prime)` from the seeded generator.
    pub fn random(vertices: usize, d: usize, prime: u64, seed: u64) -> Self {
        let mut rng = seeded_rng(seed);
        let points = (0..vertices)
            .map(|_| (0..d).map(|_| rng.gen_range(0..prime)).collect())
            .collect();
        CoordinateAssignment { prime, points }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn point(&self, v: usize) -> &[u64] {
        &self.points[v]
    }
}

/// Dense `|rows| × d|V|` rigidity matrix. The row of edge `uv` holds
/// `p(u) − p(v)` in `u`'s column block and `p(v) − p(u)` in `v`'s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityMatrix {
    pub prime: u64,
    pub columns: usize,
    pub row_edges: Vec<Edge>,
    pub rows: Vec<Vec<u64>>,
}

impl RigidityMatrix {
    pub fn rank(&self) -> usize {
        rank_mod(self.rows.clone(), self.prime)
    }
}

fn matrix_for_edges(n: usize, edges: &[Edge], d: usize, coords: &CoordinateAssignment) -> Result<RigidityMatrix> {
    if coords.points.len() != n || coords.points.iter().any(|pt| pt.len() != d) {
        return Err(Error::Input(format!(
            "coordinates must give {d} values for each of {n} vertices"
        )));
    }
    let p = coords.prime;
    let rows = edges
        .iter()
        .map(|&(u, v)| {
            let mut row = vec![0u64; d * n];
            for k in 0..d {
                let diff = sub_mod(coords.points[u][k], coords.points[v][k], p);
                row[d * u + k] = diff;
                row[d * v + k] = sub_mod(0, diff, p);
            }
            row
        })
        .collect();
    Ok(RigidityMatrix {
        prime: p,
        columns: d * n,
        row_edges: edges.to_vec(),
        rows,
    })
}

pub fn build_rigidity_matrix(
    g: &Graph,
    params: SparsityParams,
    coords: &CoordinateAssignment,
) -> Result<RigidityMatrix> {
    matrix_for_edges(g.vertex_count(), &g.sorted_edges(), params.d(), coords)
}

/// Row reduction over `GF(p)`; pivots on the first nonzero entry per column.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = mul_mod(row[c], inv, p);
            for k in c..cols {
                if pivot_row[k] != 0 {
                    row[k] = sub_mod(row[k], mul_mod(factor, pivot_row[k], p), p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRank {
    pub seed: u64,
    pub rank: usize,
}

/// Randomized estimate of `r_d(G)`: a certified lower bound that is
/// generically exact with high probability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub rank: usize,
    pub d: usize,
    #[serde(serialize_with = "as_string")]
    pub prime: u64,
    pub trials: Vec<TrialRank>,
}

fn as_string<S: Serializer>(p: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl RankResult {
    /// True when every trial produced the same rank.
    pub fn consistent(&self) -> bool {
        self.trials.iter().all(|t| t.rank == self.rank)
    }

    /// Upper bound on the chance that a single trial undercounts.
    pub fn per_trial_failure_bound(&self) -> f64 {
        self.rank as f64 / self.prime as f64
    }
}

fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    (0..trials as u64).map(|i| seed.wrapping_add(i)).collect()
}

fn ranks_over_trials(n: usize, edges: &[Edge], params: SparsityParams, trials: usize, seed: u64) -> Result<RankResult> {
    if trials == 0 {
        return Err(Error::Input("at least one rank trial is required".into()));
    }
    let d = params.d();
    let trials: Vec<TrialRank> = trial_seeds(seed, trials)
        .into_par_iter()
        .map(|s| {
            let coords = CoordinateAssignment::random(n, d, DEFAULT_PRIME, s);
            let m = matrix_for_edges(n, edges, d, &coords)?;
            Ok(TrialRank {
                seed: s,
                rank: m.rank(),
            })
        })
        .collect::<Result<_>>()?;
    let rank = trials.iter().map(|t| t.rank).max().unwrap_or(0);
    let result = RankResult {
        rank,
        d,
        prime: DEFAULT_PRIME,
        trials,
    };
    if !result.consistent() {
        log::warn!("rank trials disagree; using the maximum {rank}");
    }
    Ok(result)
}

/// Generic rank `r_d(G)` as the maximum over `trials` random specializations
/// seeded `seed, seed + 1, ...`.
pub fn generic_rank(g: &Graph, params: SparsityParams, trials: usize, seed: u64) -> Result<RankResult> {
    ranks_over_trials(g.vertex_count(), &g.sorted_edges(), params, trials, seed)
}

fn check_subset(g: &Graph, f: &[Edge]) -> Result<Vec<Edge>> {
    let mut out: Vec<Edge> = f.iter().map(|&(u, v)| canon(u, v)).collect();
    for &(u, v) in &out {
        if !g.has_edge(u, v) {
            return Err(Error::Input(format!("edge ({u},{v}) not in graph")));
        }
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Input("edge subset has duplicates".into()));
    }
    Ok(out)
}

/// Rank of the rows indexed by `f`.
pub fn subset_rank(g: &Graph, f: &[Edge], params: SparsityParams, trials: usize, seed: u64) -> Result<RankResult> {
    let f = check_subset(g, f)?;
    ranks_over_trials(g.vertex_count(), &f, params, trials, seed)
}

/// Whether the rows indexed by `f` are linearly independent.
pub fn is_independent(g: &Graph, f: &[Edge], params: SparsityParams, trials: usize, seed: u64) -> Result<bool> {
    if f.is_empty() {
        return Ok(true);
    }
    Ok(subset_rank(g, f, params, trials, seed)?.rank == f.len())
}

/// Rigidity verdict: rank equals `d|V| − C(d+1, 2)`. Graphs on at most
/// `d + 1` vertices are declared rigid exactly when they are complete.
pub fn is_rigid(g: &Graph, params: SparsityParams, trials: usize, seed: u64) -> Result<bool> {
    let n = g.vertex_count();
    if n <= params.d() + 1 {
        return Ok(g.edge_count() == n * n.saturating_sub(1) / 2);
    }
    let r = generic_rank(g, params, trials, seed)?;
    Ok(r.rank as i64 == params.bound(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxwellReport {
    pub independent: bool,
    pub sparse: bool,
    pub pass: bool,
}

/// Independent edge sets span d-sparse subgraphs.
pub fn maxwell_check(g: &Graph, f: &[Edge], params: SparsityParams, trials: usize, seed: u64) -> Result<MaxwellReport> {
    let independent = is_independent(g, f, params, trials, seed)?;
    let sub = g.spanning_subgraph(f)?;
    let sparse = is_d_sparse(&sub, params, Backend::Flow)?.is_sparse;
    Ok(MaxwellReport {
        independent,
        sparse,
        pass: !independent || sparse,
    })
}
