//! Dinic maximum flow on integer capacities.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Residual network. Arc `2i` is the `i`-th added arc, `2i+1` its reverse.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            cursor: vec![0; nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        debug_assert!(cap >= 0);
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut q = VecDeque::new();
        self.level[s] = 0;
        q.push_back(s);
        while let Some(x) = q.pop_front() {
            for &a in &self.out[x] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[x] + 1;
                    q.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, limit: i64) -> i64 {
        if x == t {
            return limit;
        }
        while self.cursor[x] < self.out[x].len() {
            let a = self.out[x][self.cursor[x]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && self.level[to] == self.level[x] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            self.cursor[x] += 1;
        }
        0
    }

    /// Runs to completion and returns the flow value from `s` to `t`.
    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    /// Nodes that can still reach `t` in the residual network. Their
    /// complement is the source side of the inclusion-maximal minimum cut.
    pub fn reaches_sink(&self, t: usize) -> Vec<bool> {
        let mut mark = vec![false; self.node_count()];
        mark[t] = true;
        let mut q = VecDeque::from([t]);
        while let Some(y) = q.pop_front() {
            for &a in &self.out[y] {
                // a: y -> x, so a ^ 1 is x -> y
                let x = self.arcs[a].to;
                if !mark[x] && self.arcs[a ^ 1].cap > 0 {
                    mark[x] = true;
                    q.push_back(x);
                }
            }
        }
        mark
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        let mut f = FlowNetwork::new(6);
        for (a, b, c) in [
            (0, 1, 10),
            (0, 2, 10),
            (1, 3, 4),
            (1, 4, 8),
            (2, 4, 9),
            (3, 5, 10),
            (4, 3, 6),
            (4, 5, 10),
        ] {
            f.add_arc(a, b, c);
        }
        assert_eq!(f.max_flow(0, 5), 19);
    }

    #[test]
    fn disconnected() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 3);
        f.add_arc(2, 3, 3);
        assert_eq!(f.max_flow(0, 3), 0);
        let r = f.reaches_sink(3);
        assert_eq!(r, vec![false, false, true, true]);
    }

    #[test]
    fn maximal_cut_side() {
        // 0 -> 1 -> 2 with bottleneck at 0->1; node 1 can reach the sink
        let mut f = FlowNetwork::new(3);
        f.add_arc(0, 1, 1);
        f.add_arc(1, 2, 5);
        assert_eq!(f.max_flow(0, 2), 1);
        assert_eq!(f.reaches_sink(2), vec![false, true, true]);
    }
}
