//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Edges are stored as canonical `(min, max)` pairs in insertion order; the
//! insertion order is what the greedy "given order" routines consume. Two
//! graphs compare equal when they have the same vertex count and edge set.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical undirected edge, `0 <= .0 < .1`.
pub type Edge = (usize, usize);

/// A list of edges of some parent graph.
pub type EdgeSubset = Vec<Edge>;

/// Returns the `(min, max)` form of an unordered pair.
#[inline]
pub fn canon(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            members.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(members)
    }

    /// Bitmask form; callers guarantee every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut all = self.0.clone();
        all.extend_from_slice(&other.0);
        VertexSet::new(all)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    index: HashSet<Edge>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.index == other.index
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            index: HashSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        let e = canon(u, v);
        if !self.index.insert(e) {
            return Err(Error::Input(format!("duplicate edge ({},{})", e.0, e.1)));
        }
        self.edges.push(e);
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.index.contains(&canon(u, v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn validate_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::Input(format!("vertex {v} out of range for {} vertices", self.n))),
            None => Ok(()),
        }
    }

    /// `i_G(X)`: number of edges with both endpoints in `x`.
    pub fn induced_edge_count(&self, x: &VertexSet) -> Result<usize> {
        self.validate_set(x)?;
        let mut member = vec![false; self.n];
        for v in x.iter() {
            member[v] = true;
        }
        Ok(self.edges.iter().filter(|&&(u, v)| member[u] && member[v]).count())
    }

    /// `E_G(X)` in lexicographic order.
    pub fn induced_edges(&self, x: &VertexSet) -> EdgeSubset {
        let mut member = vec![false; self.n];
        for v in x.iter().filter(|&v| v < self.n) {
            member[v] = true;
        }
        let mut out: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| member[u] && member[v])
            .collect();
        out.sort_unstable();
        out
    }

    /// True when every pair of vertices in `x` is adjacent.
    pub fn is_clique(&self, x: &VertexSet) -> bool {
        let s = x.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Spanning subgraph on the same vertices with the given edges.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::Input(format!("edge ({u},{v}) not in parent graph")));
            }
        }
        Graph::from_edges(self.n, edges.iter().copied())
    }

    /// Copy of the graph with one more edge appended.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph without edge `uv`; keeps the remaining insertion order.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = canon(u, v);
        if !self.index.contains(&e) {
            return Err(Error::Input(format!("edge ({},{}) not in graph", e.0, e.1)));
        }
        Graph::from_edges(self.n, self.edges.iter().copied().filter(|&f| f != e))
    }

    /// Pairs `u < v` that are not edges, lexicographic.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of connected components, isolated vertices included.
    pub fn connected_components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Adjacency bitmasks; only meaningful for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Input("permutation length mismatch".into()));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| canon(perm[u], perm[v])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3);
        assert!(matches!(g.add_edge(1, 1), Err(Error::Input(_))));
        assert!(matches!(g.add_edge(0, 3), Err(Error::Input(_))));
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);
        assert!(matches!(g.add_edge(0, 2), Err(Error::Input(_))));
    }

    #[test]
    fn induced_count_rejects_out_of_range() {
        let g = Graph::empty(2);
        assert!(g.induced_edge_count(&VertexSet::new(vec![0, 5])).is_err());
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::new(vec![5, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(VertexSet::from_mask(s.to_mask()), s);
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn components_count() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), 3);
    }
}
