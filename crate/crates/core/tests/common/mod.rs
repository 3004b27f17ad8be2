#![allow(dead_code)]

use rigcore::generators::{random_gnp, seeded_rng};
use rigcore::graph::{Graph, VertexSet};
use rigcore::sparsity::{maximal_sparse_subgraph, EdgeOrder, SparsityParams};

pub fn params(d: usize) -> SparsityParams {
    SparsityParams::new(d).unwrap()
}

pub fn gnp(n: usize, density: f64, seed: u64) -> Graph {
    random_gnp(n, density, &mut seeded_rng(seed))
}

/// A d-sparse graph: a random-order maximal sparse subgraph of `G(n, p)`.
pub fn sparse_graph(n: usize, density: f64, d: usize, seed: u64) -> Graph {
    let g = gnp(n, density, seed);
    maximal_sparse_subgraph(&g, params(d), &EdgeOrder::Random(seed ^ 0x5eed))
        .unwrap()
        .subgraph()
}

/// Induced edge count of a vertex mask, by scanning edges.
pub fn count_inside(g: &Graph, mask: u64) -> i64 {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count() as i64
}

/// Exhaustive `max_{S ⊇ forced} (i(S) − d|S|)` and the union of all maximizers.
pub fn brute_max_excess(g: &Graph, forced: &VertexSet, d: usize) -> (i64, VertexSet) {
    let n = g.vertex_count();
    let fm = forced.to_mask();
    let mut best = i64::MIN;
    let mut union = 0u64;
    for mask in 0u64..(1u64 << n) {
        if mask & fm != fm {
            continue;
        }
        let val = count_inside(g, mask) - (d as i64) * mask.count_ones() as i64;
        if val > best {
            best = val;
            union = mask;
        } else if val == best {
            union |= mask;
        }
    }
    (best, VertexSet::from_mask(union))
}

/// Exhaustive d-sparsity by the definition.
pub fn brute_sparse(g: &Graph, d: usize) -> bool {
    let n = g.vertex_count();
    let l = (d * (d + 1) / 2) as i64;
    (0u64..(1u64 << n)).all(|mask| {
        let x = mask.count_ones() as usize;
        x < d || count_inside(g, mask) <= (d * x) as i64 - l
    })
}
