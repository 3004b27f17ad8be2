//! Graph constructors: complete graphs, parallel connections and the
//! double-K5 / K5-flower examples, plus seeded random graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::{canon, Edge, Graph};

/// Seeded generator used for every randomized routine in the crate.
pub type SeededRng = Xoshiro256PlusPlus;

pub fn seeded_rng(seed: u64) -> SeededRng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// `K_n`, edges in lexicographic order.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("complete graph needs at least one vertex".into()));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Glues `g2` onto `g1` by identifying `e2.0` with `e1.0` and `e2.1` with
/// `e1.1`, merging the two copies of the shared edge.
///
/// Vertices of `g1` keep their indices; the remaining vertices of `g2` are
/// numbered from `|V1|` upward in their original order.
pub fn parallel_connection(g1: &Graph, g2: &Graph, e1: Edge, e2: Edge) -> Result<Graph> {
    if !g1.has_edge(e1.0, e1.1) || e1.0 == e1.1 {
        return Err(Error::Input(format!("edge ({},{}) not in first graph", e1.0, e1.1)));
    }
    if !g2.has_edge(e2.0, e2.1) || e2.0 == e2.1 {
        return Err(Error::Input(format!("edge ({},{}) not in second graph", e2.0, e2.1)));
    }
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut map = vec![usize::MAX; n2];
    map[e2.0] = e1.0;
    map[e2.1] = e1.1;
    let mut next = n1;
    for (v, slot) in map.iter_mut().enumerate() {
        if v != e2.0 && v != e2.1 {
            *slot = next;
            next += 1;
        }
    }
    let shared = canon(e2.0, e2.1);
    let mut edges: Vec<Edge> = g1.edges().to_vec();
    edges.extend(
        g2.edges()
            .iter()
            .filter(|&&e| e != shared)
            .map(|&(u, v)| canon(map[u], map[v])),
    );
    edges.sort_unstable();
    Graph::from_edges(n1 + n2 - 2, edges)
}

/// Two copies of `K5` glued along `uv = (0, 1)`, with `uv` kept.
pub fn double_k5_with_shared_edge() -> Graph {
    let k5 = complete_graph(5).expect("K5");
    parallel_connection(&k5, &k5, (0, 1), (0, 1)).expect("K5 contains (0,1)")
}

/// Two copies of `K5` glued along `uv` with `uv` then deleted; `uv = (0, 1)`.
///
/// The blocks are `{0,1,2,3,4}` and `{0,1,5,6,7}`.
pub fn double_k5() -> (Graph, Edge) {
    let g = double_k5_with_shared_edge()
        .without_edge(0, 1)
        .expect("shared edge present");
    (g, (0, 1))
}

/// A core `K5` on `{0..4}` with a further `K5` glued along each of its ten
/// edges. Outer block `t` (core edges in lexicographic order) adds vertices
/// `5+3t, 6+3t, 7+3t`.
pub fn k5_flower() -> Graph {
    let k5 = complete_graph(5).expect("K5");
    let mut g = k5.clone();
    for e in k5.sorted_edges() {
        g = parallel_connection(&g, &k5, e, (0, 1)).expect("core edge present");
    }
    g
}

/// Vertex sets of the eleven K5 blocks of [`k5_flower`]: core first.
pub fn k5_flower_blocks() -> Vec<Vec<usize>> {
    let mut blocks = vec![(0..5).collect::<Vec<_>>()];
    let core = complete_graph(5).expect("K5").sorted_edges();
    for (t, (a, b)) in core.into_iter().enumerate() {
        blocks.push(vec![a, b, 5 + 3 * t, 6 + 3 * t, 7 + 3 * t]);
    }
    blocks
}

/// Erdős–Rényi `G(n, p)`; pairs are visited lexicographically.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// `blocks` copies of `K_{d+2}` minus one random edge, each glued onto up to
/// `d − 1` random vertices of the graph built so far. Duplicate edges on
/// glued vertices are merged. Not necessarily d-sparse.
pub fn random_glued_blocks<R: Rng>(d: usize, blocks: usize, rng: &mut R) -> Graph {
    let size = d + 2;
    let mut edges: Vec<Edge> = Vec::new();
    let mut n = 0;
    for b in 0..blocks {
        let shared = if b == 0 { 0 } else { rng.gen_range(0..d.min(n + 1)) };
        let mut verts: Vec<usize> = rand::seq::index::sample(rng, n.max(1), shared.min(n)).into_vec();
        while verts.len() < size {
            verts.push(n);
            n += 1;
        }
        let missing = rng.gen_range(0..size * (size - 1) / 2);
        let mut idx = 0;
        for i in 0..size {
            for j in i + 1..size {
                if idx != missing {
                    edges.push(canon(verts[i], verts[j]));
                }
                idx += 1;
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("distinct in-range pairs")
}
