//! Domination in oriented graphs and the hypergraph machinery behind it.

mod hypergraph;
mod multicover;
mod orientation;
mod paths;
mod randomized;
pub mod transversal;

pub use hypergraph::{Hypergraph, Mode, TransversalResult};
pub use multicover::{minimum_multicover, Constraint};
pub use orientation::Orientation;
pub use paths::{min_path_partition, PATH_PARTITION_MAX_ORDER};
pub use randomized::{expected_size_bound, randomized_r_transversal, sampling_probability};
pub use transversal::{search_transversal, transversal_number, Budget, Decision};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A minimum (r-)dominating set of a digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingSet {
    pub size: usize,
    pub vertices: Vec<usize>,
}

impl DominatingSet {
    pub(crate) fn from_set(s: VertexSet) -> Self {
        DominatingSet { size: s.len(), vertices: s.to_vec() }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// The closed in-neighbourhood hypergraph: one edge `N⁻[v]` per vertex.
pub fn cinh(d: &Orientation) -> Hypergraph {
    Hypergraph::new(d.order(), (0..d.order()).map(|v| d.closed_in_neighborhood(v)).collect())
        .expect("in-neighbourhoods lie inside the vertex set")
}

/// Exact γ(D): a set meets every `N⁻[v]` iff it directed-dominates `D`.
pub fn gamma_directed(d: &Orientation) -> DominatingSet {
    let h = cinh(d);
    let t = transversal::minimum_transversal(h.order(), h.edges()).expect("closed sets are nonempty");
    DominatingSet::from_set(t)
}

/// Largest order accepted by [`gamma_directed_brute_force`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 20;

/// γ(D) by scanning every vertex subset; the lexicographically smallest
/// bitmask among the minimum ones is returned.
pub fn gamma_directed_brute_force(d: &Orientation) -> Result<DominatingSet> {
    let n = d.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::Precondition(format!(
            "brute force is limited to {BRUTE_FORCE_MAX_ORDER} vertices, got {n}"
        )));
    }
    let inn: Vec<u32> = (0..n).map(|v| d.in_neighbors(v).iter().map(|u| 1 << u).sum()).collect();
    let best = (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || inn[v] & s != 0))
        .min_by_key(|s| s.count_ones())
        .expect("V is a DDS");
    Ok(DominatingSet::from_set((0..n).filter(|v| best >> v & 1 == 1).collect()))
}

/// Exact γ_r(D): minimum `S` such that every vertex outside `S` has at
/// least `r` in-neighbours in `S`. Vertices with in-degree below `r` are
/// forced into `S`.
pub fn gamma_r_directed(d: &Orientation, r: usize) -> Result<DominatingSet> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let constraints: Vec<Constraint> = (0..d.order())
        .map(|v| Constraint { self_vertex: Some(v), members: *d.in_neighbors(v), demand: r })
        .collect();
    let s = minimum_multicover(d.order(), &constraints).expect("S = V is always feasible");
    Ok(DominatingSet::from_set(s))
}

/// Exact τ_r(H).
pub fn r_transversal_number(h: &Hypergraph, r: usize) -> Result<TransversalResult> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if let Some(e) = h.edges().iter().find(|e| e.len() < r) {
        return Err(Error::Infeasible(format!("edge {e:?} has fewer than r = {r} vertices")));
    }
    let constraints: Vec<Constraint> = h
        .edges()
        .iter()
        .map(|&e| Constraint { self_vertex: None, members: e, demand: r })
        .collect();
    let t = minimum_multicover(h.order(), &constraints).expect("edges are large enough");
    Ok(TransversalResult::new(t, r, Mode::Exact))
}
