//! Maximum average degree through the min-cut characterisation of the
//! densest subgraph.

use std::collections::VecDeque;

use num_rational::Ratio;

use super::{Invariant, InvariantValue, Value, Witness};
use crate::bitset::VertexSet;
use crate::graph::Graph;

struct FlowNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const END: usize = usize::MAX;

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![END; nodes],
            next: vec![],
            to: vec![],
            cap: vec![],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c_uv: i64, c_vu: i64) {
        for (a, b, c) in [(u, v, c_uv), (v, u, c_vu)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != END {
                if self.cap[e] > 0 && self.level[self.to[e]] < 0 {
                    self.level[self.to[e]] = self.level[u] + 1;
                    q.push_back(self.to[e]);
                }
                e = self.next[e];
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i64) -> i64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] != END {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != END {
                if self.cap[e] > 0 && !seen[self.to[e]] {
                    seen[self.to[e]] = true;
                    q.push_back(self.to[e]);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

/// A vertex set maximising |E(H)| − g|V(H)| for the density guess
/// `g = p/q`, via the Goldberg network (source s, sink t, capacities
/// scaled by `q` to stay integral).
fn best_set_for_guess(g: &Graph, guess: Ratio<i64>) -> VertexSet {
    let n = g.order();
    let m = g.size() as i64;
    let (p, q) = (*guess.numer(), *guess.denom());
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_edge(s, v, m * q, 0);
        net.add_edge(v, t, m * q + 2 * p - g.degree(v) as i64 * q, 0);
    }
    for &(u, v) in g.edges() {
        net.add_edge(u, v, q, q);
    }
    net.max_flow(s, t);
    let side = net.source_side(s);
    (0..n).filter(|&v| side[v]).collect()
}

fn density(g: &Graph, set: &VertexSet) -> Ratio<i64> {
    let edges = g.edges().iter().filter(|&&(u, v)| set.contains(u) && set.contains(v)).count();
    Ratio::new(edges as i64, set.len() as i64)
}

/// A densest subgraph and its density |E(H)|/|V(H)|, found by Dinkelbach
/// iteration: each min cut either certifies the current density optimal or
/// yields a strictly denser set.
pub fn max_density_subgraph(g: &Graph) -> (VertexSet, Ratio<i64>) {
    assert!(g.order() >= 1, "density needs at least one vertex");
    let mut best = g.vertices();
    let mut d = density(g, &best);
    loop {
        let cand = best_set_for_guess(g, d);
        if cand.is_empty() {
            break;
        }
        let cd = density(g, &cand);
        if cd <= d {
            break;
        }
        best = cand;
        d = cd;
    }
    (best, d)
}

/// Exact mad(G) = 2 · max density, as a rational.
pub fn max_average_degree(g: &Graph) -> InvariantValue {
    if g.order() == 0 {
        return InvariantValue {
            name: Invariant::MaxAverageDegree,
            value: Value::Rational(Ratio::from_integer(0)),
            witness: Witness::Vertices(vec![]),
        };
    }
    let (set, d) = max_density_subgraph(g);
    InvariantValue {
        name: Invariant::MaxAverageDegree,
        value: Value::Rational(d * 2),
        witness: Witness::Vertices(set.to_vec()),
    }
}
