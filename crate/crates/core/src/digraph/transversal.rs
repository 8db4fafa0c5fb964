//! Exact minimum transversals (hitting sets) by branch and bound.
//!
//! Branching takes a smallest uncovered edge and tries its vertices in
//! decreasing order of membership among the uncovered edges; each tried
//! vertex is forbidden in the later siblings. Pruning uses a greedy packing
//! of pairwise disjoint uncovered edges, each of which needs its own vertex.

use super::hypergraph::{Hypergraph, Mode, TransversalResult};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Shared node allowance for interruptible searches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub used: u64,
    pub limit: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn limited(limit: u64) -> Self {
        Budget { used: 0, limit: Some(limit) }
    }

    /// Charges one node; false once the allowance is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.limit.map_or(true, |l| self.used <= l)
    }

    pub fn exhausted(&self) -> bool {
        self.limit.is_some_and(|l| self.used > l)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Found(VertexSet),
    None,
    Aborted,
}

struct Search<'a, 'b> {
    edges: &'a [VertexSet],
    budget: &'b mut Budget,
    best: Option<VertexSet>,
    best_len: usize,
    stop_at_first: bool,
    aborted: bool,
}

impl Search<'_, '_> {
    fn packing_bound(&self, uncovered: &[u32], allowed: &VertexSet) -> usize {
        let mut sized: Vec<(usize, u32)> = uncovered
            .iter()
            .map(|&i| (self.edges[i as usize].intersection_len(allowed), i))
            .collect();
        if sized.iter().any(|&(s, _)| s == 0) {
            return usize::MAX / 2;
        }
        sized.sort_unstable();
        let mut used = VertexSet::new();
        let mut count = 0;
        for (_, i) in sized {
            let e = self.edges[i as usize] & *allowed;
            if !e.intersects(&used) {
                used |= e;
                count += 1;
            }
        }
        count
    }

    /// Returns true when the whole search should stop.
    fn run(&mut self, uncovered: &[u32], chosen: VertexSet, mut allowed: VertexSet) -> bool {
        if !self.budget.tick() {
            self.aborted = true;
            return true;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.best_len {
                self.best_len = chosen.len();
                self.best = Some(chosen);
            }
            return self.stop_at_first;
        }
        if chosen.len() + self.packing_bound(uncovered, &allowed) >= self.best_len {
            return false;
        }
        let pivot = uncovered
            .iter()
            .map(|&i| self.edges[i as usize] & allowed)
            .min_by_key(|e| e.len())
            .unwrap();
        let mut candidates: Vec<(usize, usize)> = pivot
            .iter()
            .map(|v| {
                let hits = uncovered.iter().filter(|&&i| self.edges[i as usize].contains(v)).count();
                (usize::MAX - hits, v)
            })
            .collect();
        candidates.sort_unstable();
        for (_, v) in candidates {
            if chosen.len() + 1 >= self.best_len {
                break;
            }
            let rest: Vec<u32> = uncovered
                .iter()
                .copied()
                .filter(|&i| !self.edges[i as usize].contains(v))
                .collect();
            let mut next = chosen;
            next.insert(v);
            if self.run(&rest, next, allowed) {
                return true;
            }
            allowed.remove(v);
        }
        false
    }
}

/// Searches for a transversal `T` with `forced ⊆ T`, `T ∩ forbidden = ∅`
/// and `|T| <= max_size`, returning the smallest one found when
/// `stop_at_first` is false.
pub fn search_transversal(
    n: usize,
    edges: &[VertexSet],
    forced: VertexSet,
    forbidden: VertexSet,
    max_size: usize,
    stop_at_first: bool,
    budget: &mut Budget,
) -> Decision {
    if forced.len() > max_size {
        return Decision::None;
    }
    let uncovered: Vec<u32> = (0..edges.len() as u32)
        .filter(|&i| !edges[i as usize].intersects(&forced))
        .collect();
    let mut s = Search {
        edges,
        budget,
        best: None,
        best_len: max_size + 1,
        stop_at_first,
        aborted: false,
    };
    s.run(&uncovered, forced, VertexSet::full(n) - forbidden - forced);
    match (s.aborted, s.best) {
        (true, _) => Decision::Aborted,
        (false, Some(t)) => Decision::Found(t),
        (false, None) => Decision::None,
    }
}

/// A minimum transversal, or `None` when some edge is empty.
pub fn minimum_transversal(n: usize, edges: &[VertexSet]) -> Option<VertexSet> {
    if edges.iter().any(VertexSet::is_empty) {
        return None;
    }
    match search_transversal(n, edges, VertexSet::new(), VertexSet::new(), n, false, &mut Budget::unlimited()) {
        Decision::Found(t) => Some(t),
        _ => unreachable!("the full vertex set is a transversal"),
    }
}

/// Exact τ(H).
pub fn transversal_number(h: &Hypergraph) -> Result<TransversalResult> {
    let t = minimum_transversal(h.order(), h.edges())
        .ok_or_else(|| Error::Infeasible("hypergraph has an empty edge".into()))?;
    Ok(TransversalResult::new(t, 1, Mode::Exact))
}
