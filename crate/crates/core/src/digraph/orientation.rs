use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An orientation of a graph: one direction bit per canonical edge
/// (`false` means `u → v` for the sorted pair `(u, v)`), with cached in-
/// and out-neighbourhoods.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Arc<Graph>,
    reversed: Vec<bool>,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Orientation {
    pub fn new(base: Arc<Graph>, reversed: Vec<bool>) -> Result<Self> {
        if reversed.len() != base.size() {
            return Err(Error::InvalidOrientation(format!(
                "{} direction bits for {} edges",
                reversed.len(),
                base.size()
            )));
        }
        let n = base.order();
        let mut out = vec![VertexSet::new(); n];
        let mut inn = vec![VertexSet::new(); n];
        for (&(u, v), &rev) in base.edges().iter().zip(&reversed) {
            let (a, b) = if rev { (v, u) } else { (u, v) };
            out[a].insert(b);
            inn[b].insert(a);
        }
        Ok(Orientation { base, reversed, out, inn })
    }

    /// Every edge directed from its lower endpoint to its higher one.
    pub fn lowest_first(base: Arc<Graph>) -> Self {
        let m = base.size();
        Orientation::new(base, vec![false; m]).unwrap()
    }

    /// Orientation from an explicit arc list covering every edge exactly once.
    pub fn from_arcs(base: Arc<Graph>, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut reversed = vec![false; base.size()];
        let mut seen = vec![false; base.size()];
        for &(a, b) in arcs {
            let idx = base
                .edge_index(a, b)
                .ok_or_else(|| Error::NotAnEdge(format!("{a}-{b}")))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InvalidOrientation(format!("edge {a}-{b} oriented twice")));
            }
            reversed[idx] = a > b;
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            let (u, v) = base.edges()[i];
            return Err(Error::InvalidOrientation(format!("edge {u}-{v} not oriented")));
        }
        Orientation::new(base, reversed)
    }

    /// Parses the edge-list syntax, reading each `u v` line as the arc `u → v`.
    pub fn parse_arc_list(text: &str) -> Result<Self> {
        let g = Graph::parse_edge_list(text)?;
        let arcs: Vec<(usize, usize)> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .skip(1)
            .map(|l| {
                let mut it = l.split_whitespace().map(|x| x.parse::<usize>().unwrap());
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        Orientation::from_arcs(Arc::new(g), &arcs)
    }

    pub fn to_arc_list(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for (a, b) in self.arcs() {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    #[inline]
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn shared_base(&self) -> &Arc<Graph> {
        &self.base
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn directions(&self) -> &[bool] {
        &self.reversed
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.reversed)
            .map(|(&(u, v), &rev)| if rev { (v, u) } else { (u, v) })
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    /// N⁻[v]
    #[inline]
    pub fn closed_in_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.inn[v];
        s.insert(v);
        s
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.order()).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        (0..self.order()).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    pub fn is_tournament(&self) -> bool {
        self.base.is_complete()
    }

    /// Whether every vertex outside `s` has an in-neighbour in `s`.
    pub fn is_dds(&self, s: &VertexSet) -> bool {
        (0..self.order()).all(|v| s.contains(v) || self.inn[v].intersects(s))
    }

    /// Flips the arc on canonical edge `idx`.
    pub fn reverse_edge(&mut self, idx: usize) {
        let (u, v) = self.base.edges()[idx];
        let (a, b) = if self.reversed[idx] { (v, u) } else { (u, v) };
        self.out[a].remove(b);
        self.inn[b].remove(a);
        self.out[b].insert(a);
        self.inn[a].insert(b);
        self.reversed[idx] = !self.reversed[idx];
    }

    /// The sub-digraph induced by `subset`, relabelled like
    /// [`Graph::induced_subgraph`].
    pub fn restrict(&self, subset: &[usize]) -> Result<Orientation> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let h = Arc::new(self.base.induced_subgraph(&sorted)?);
        let label = |x: usize| sorted.binary_search(&x).ok();
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .filter_map(|(a, b)| Some((label(a)?, label(b)?)))
            .collect();
        Orientation::from_arcs(h, &arcs)
    }

    /// A copy with the extra arc `a → b` added to the underlying graph.
    pub fn with_arc(&self, a: usize, b: usize) -> Result<Orientation> {
        let mut arcs: Vec<(usize, usize)> = self.arcs().collect();
        arcs.push((a, b));
        let edges = self.base.edges().iter().copied().chain([(a, b)]);
        let g = Arc::new(Graph::new(self.order(), edges)?);
        Orientation::from_arcs(g, &arcs)
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation(n={}, arcs={:?})", self.order(), self.arcs().collect::<Vec<_>>())
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Arcs {
            n: usize,
            arcs: Vec<(usize, usize)>,
        }
        Arcs { n: self.order(), arcs: self.arcs().collect() }.serialize(s)
    }
}
