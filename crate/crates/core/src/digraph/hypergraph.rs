use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// A hypergraph on `0..n` with a multiset of edges.
///
/// Empty edges are representable so that solvers can report them as
/// infeasible rather than the constructor rejecting them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let universe = VertexSet::full(n);
        for e in &edges {
            if let Some(v) = (*e - universe).first() {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn from_lists(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        for &v in edges.iter().flatten() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
        }
        Hypergraph::new(n, edges.iter().map(|e| e.iter().copied().collect()).collect())
    }

    /// Text format: an `n m` header, then one line per edge listing its
    /// vertices. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_nums = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|x| {
                    x.parse().map_err(|_| Error::Parse { line, message: format!("bad number `{x}`") })
                })
                .collect()
        };
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let h = parse_nums(hl, header)?;
        let [n, m] = h[..] else {
            return Err(Error::Parse { line: hl, message: "header must be `n m`".into() });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_nums(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hl,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Hypergraph::from_lists(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `Some(k)` iff every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Whether `t` meets every edge in at least `r` vertices.
    pub fn is_r_transversal(&self, t: &VertexSet, r: usize) -> bool {
        self.edges.iter().all(|e| e.intersection_len(t) >= r)
    }

    pub fn union_of_edges(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::new(), |acc, e| acc | *e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Mode {
    Exact,
    Randomized { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalResult {
    pub set: Vec<usize>,
    pub size: usize,
    pub r: usize,
    pub mode: Mode,
}

impl TransversalResult {
    pub(crate) fn new(set: VertexSet, r: usize, mode: Mode) -> Self {
        TransversalResult { size: set.len(), set: set.to_vec(), r, mode }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let h = Hypergraph::parse("4 2\n0 1 2\n# comment\n1 3\n").unwrap();
        assert_eq!(h.size(), 2);
        assert_eq!(h.uniformity(), None);
        assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
        assert!(Hypergraph::parse("3 2\n0 1\n").is_err());
        assert!(Hypergraph::parse("3 1\n0 5\n").is_err());
        assert!(Hypergraph::parse("3\n0 1\n").is_err());
        let u = Hypergraph::parse("4 2\n0 1\n2 3\n").unwrap();
        assert_eq!(u.uniformity(), Some(2));
    }
}
