//! Simple undirected graphs with bitset adjacency.

mod graph6;
mod structure;

pub use graph6::{encode_graph6, parse_graph6, parse_graph6_stream};
pub use structure::{Bipartiteness, DegreeProfile, Diameter, StructureReport};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// An immutable simple graph on vertices `0..n`.
///
/// `edges` is sorted lexicographically with `u < v` in every pair; the
/// position of an edge in that list is its canonical index, which is what
/// orientations are keyed by.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    fn from_adjacency(n: usize, adj: Vec<VertexSet>) -> Self {
        let edges = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Graph { n, adj, edges }
    }

    /// Parses the line-oriented edge-list format: a header line holding
    /// `n`, then one `u v` pair per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex-count header".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: hline,
            message: format!("bad vertex count `{header}`"),
        })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad vertex `{s}`"),
                })
            };
            if parts.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, got `{l}`"),
                });
            }
            edges.push((parse(parts[0])?, parse(parts[1])?));
        }
        Graph::new(n, edges)
    }

    /// Renders the edge-list format accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_adjacency(n, vec![VertexSet::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(n, adj)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, e).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Canonical edge list, sorted, `u < v`.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Canonical index of the edge `{u, v}`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = full - self.adj[v];
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(self.n, adj)
    }

    /// `G[S]`, relabelled `0..|S|` in increasing order of the original labels.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            label[v] = i;
        }
        let adj = sorted
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&w| label[w] != usize::MAX)
                    .map(|w| label[w])
                    .collect()
            })
            .collect();
        Ok(Graph::from_adjacency(sorted.len(), adj))
    }

    /// Disjoint union with vertex blocks laid out in list order.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        let total: usize = graphs.iter().map(Graph::order).sum();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut adj = Vec::with_capacity(total);
        let mut offset = 0;
        for g in graphs {
            for v in 0..g.n {
                adj.push(g.adj[v].iter().map(|w| w + offset).collect());
            }
            offset += g.n;
        }
        Ok(Graph::from_adjacency(total, adj))
    }

    /// Spanning subgraph keeping only the edges for which `keep` holds.
    pub fn spanning_subgraph<F: FnMut(usize, usize) -> bool>(&self, mut keep: F) -> Graph {
        Graph::new(self.n, self.edges.iter().copied().filter(|&(u, v)| keep(u, v))).unwrap()
    }

    /// The line graph; vertex `i` is the canonical edge `i` of `self`.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.size();
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let mut incident = vec![VertexSet::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].insert(i);
            incident[v].insert(i);
        }
        let adj = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut s = incident[u] | incident[v];
                s.remove(i);
                s
            })
            .collect();
        Ok(Graph::from_adjacency(m, adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
