//! Exact classical invariants, each returned with a witness that can be
//! re-validated against the graph.

mod coloring;
mod density;
mod independence;
mod matching;

pub use coloring::{chromatic_number, edge_chromatic_number, k_coloring, EdgeClass};
pub use density::{max_average_degree, max_density_subgraph};
pub use independence::{clique_number, independence_number, maximum_independent_set, vertex_cover_number};
pub use matching::{matching_number, maximum_matching};

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::digraph::transversal::minimum_transversal;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Independence,
    Clique,
    Domination,
    Matching,
    VertexCover,
    Chromatic,
    EdgeChromatic,
    MaxAverageDegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Integer(usize),
    Rational(Ratio<i64>),
}

impl Value {
    pub fn as_ratio(&self) -> Ratio<i64> {
        match *self {
            Value::Integer(v) => Ratio::from_integer(v as i64),
            Value::Rational(r) => r,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Integer(v) => write!(f, "{v}"),
            Value::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Integer(v) => s.serialize_u64(*v as u64),
            Value::Rational(_) => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
    /// Colour of each vertex, or of each canonical edge for edge colourings.
    Coloring(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantValue {
    pub name: Invariant,
    pub value: Value,
    pub witness: Witness,
}

impl InvariantValue {
    pub(crate) fn integer(name: Invariant, value: usize, witness: Witness) -> Self {
        InvariantValue { name, value: Value::Integer(value), witness }
    }

    /// The integer value; panics for `mad`.
    pub fn get(&self) -> usize {
        match self.value {
            Value::Integer(v) => v,
            Value::Rational(_) => panic!("{:?} is rational", self.name),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        match &self.witness {
            Witness::Vertices(v) => v,
            _ => &[],
        }
    }

    /// Checks that the witness realises the claimed value on `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        match (&self.name, &self.witness) {
            (Invariant::Independence, Witness::Vertices(v)) => {
                v.len() == self.get() && is_independent(g, &set(v))
            }
            (Invariant::Clique, Witness::Vertices(v)) => {
                v.len() == self.get() && is_independent(&g.complement(), &set(v))
            }
            (Invariant::Domination, Witness::Vertices(v)) => {
                let s = set(v);
                v.len() == self.get() && (0..g.order()).all(|u| g.closed_neighborhood(u).intersects(&s))
            }
            (Invariant::VertexCover, Witness::Vertices(v)) => {
                let s = set(v);
                v.len() == self.get() && g.edges().iter().all(|&(a, b)| s.contains(a) || s.contains(b))
            }
            (Invariant::Matching, Witness::Edges(e)) => {
                let mut used = VertexSet::new();
                e.len() == self.get()
                    && e.iter().all(|&(a, b)| g.has_edge(a, b) && used.insert(a) && used.insert(b))
            }
            (Invariant::Chromatic, Witness::Coloring(c)) => {
                c.len() == g.order()
                    && g.edges().iter().all(|&(a, b)| c[a] != c[b])
                    && colours_used(c) == self.get()
            }
            (Invariant::EdgeChromatic, Witness::Coloring(c)) => {
                let e = g.edges();
                c.len() == e.len()
                    && (0..e.len()).all(|i| {
                        (i + 1..e.len()).all(|j| {
                            let shares = e[i].0 == e[j].0
                                || e[i].0 == e[j].1
                                || e[i].1 == e[j].0
                                || e[i].1 == e[j].1;
                            !shares || c[i] != c[j]
                        })
                    })
                    && colours_used(c) == self.get()
            }
            (Invariant::MaxAverageDegree, Witness::Vertices(v)) => {
                if v.is_empty() {
                    return g.order() == 0 && self.value.as_ratio() == Ratio::from_integer(0);
                }
                let Ok(h) = g.induced_subgraph(v) else { return false };
                Ratio::new(2 * h.size() as i64, h.order() as i64) == self.value.as_ratio()
            }
            _ => false,
        }
    }
}

fn colours_used(c: &[usize]) -> usize {
    let distinct: VertexSet = c.iter().copied().collect();
    match distinct.last() {
        Some(max) if max + 1 == distinct.len() => distinct.len(),
        Some(_) => usize::MAX,
        None => 0,
    }
}

pub(crate) fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Exact γ(G): a minimum transversal of the closed-neighbourhood hypergraph.
pub fn domination_number(g: &Graph) -> InvariantValue {
    let edges: Vec<VertexSet> = (0..g.order()).map(|v| g.closed_neighborhood(v)).collect();
    let set = minimum_transversal(g.order(), &edges).expect("closed neighbourhoods are nonempty");
    InvariantValue::integer(Invariant::Domination, set.len(), Witness::Vertices(set.to_vec()))
}
