//! Exact vertex and edge colouring by DSATUR-ordered branch and bound.

use serde::Serialize;

use super::{independence_number, matching_number, Invariant, InvariantValue, Witness};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    /// colours present in each vertex's neighbourhood, with multiplicity
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Option<Vec<usize>>,
    best_k: usize,
    lower: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, best_k: usize, lower: usize) -> Self {
        let n = g.order();
        Dsatur {
            g,
            color: vec![UNCOLORED; n],
            neighbor_colors: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            best: None,
            best_k,
            lower,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum uncoloured
    /// degree, then lowest index.
    fn select(&self) -> Option<usize> {
        let mut pick: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.order() {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let deg = self.g.neighbors(v).iter().filter(|&w| self.color[w] == UNCOLORED).count();
            let key = (self.saturation[v], deg);
            if pick.map_or(true, |(s, d, _)| key > (s, d)) {
                pick = Some((key.0, key.1, v));
            }
        }
        pick.map(|p| p.2)
    }

    /// Returns true once a colouring with `lower` colours has been found.
    fn search(&mut self, used: usize) -> bool {
        let Some(v) = self.select() else {
            self.best = Some(self.color.clone());
            self.best_k = used;
            return used <= self.lower;
        };
        for c in 0..=used {
            // a colouring must beat the incumbent
            if c + 1 >= self.best_k {
                break;
            }
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let done = self.search(used.max(c + 1));
            self.unassign(v);
            if done {
                return true;
            }
        }
        false
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return Some(vec![]);
    }
    let mut s = Dsatur::new(g, k + 1, k);
    s.search(0);
    s.best
}

/// Exact χ(G). The search starts from the trivial bound `n + 1` and stops
/// early once it matches max(ω, ⌈n/α⌉); otherwise completing the search
/// certifies that one colour fewer is infeasible.
pub fn chromatic_number(g: &Graph) -> InvariantValue {
    let n = g.order();
    if n == 0 {
        return InvariantValue::integer(Invariant::Chromatic, 0, Witness::Coloring(vec![]));
    }
    let omega = super::clique_number(g).get();
    let alpha = independence_number(g).get();
    let lower = omega.max(n.div_ceil(alpha));
    let mut s = Dsatur::new(g, n + 1, lower);
    s.search(0);
    let coloring = s.best.expect("n colours always suffice");
    InvariantValue::integer(Invariant::Chromatic, s.best_k, Witness::Coloring(coloring))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    /// χ′ = Δ
    One,
    /// χ′ = Δ + 1
    Two,
}

/// Exact χ′(G) as the chromatic number of the line graph, decided inside
/// the window {Δ, Δ+1}.
pub fn edge_chromatic_number(g: &Graph) -> Result<(InvariantValue, EdgeClass)> {
    let line = g.line_graph()?;
    let delta = g.degree_profile().max_degree;
    if g.size() == 0 {
        let v = InvariantValue::integer(Invariant::EdgeChromatic, 0, Witness::Coloring(vec![]));
        return Ok((v, EdgeClass::One));
    }
    // every colour class is a matching
    let by_matching = g.size().div_ceil(matching_number(g).get());
    let (coloring, class) = match (by_matching <= delta).then(|| k_coloring(&line, delta)).flatten() {
        Some(c) => (c, EdgeClass::One),
        None => {
            let c = k_coloring(&line, delta + 1).expect("Vizing: Δ+1 colours suffice");
            (c, EdgeClass::Two)
        }
    };
    let k = coloring.iter().copied().collect::<VertexSet>().len();
    Ok((InvariantValue::integer(Invariant::EdgeChromatic, k, Witness::Coloring(coloring)), class))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(6)).get(), 2);
        assert_eq!(chromatic_number(&Graph::complete_bipartite(2, 3)).get(), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5)).get(), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)).get(), 1);
        assert_eq!(chromatic_number(&Graph::complete(6)).get(), 6);
        let p = Graph::petersen();
        let c = chromatic_number(&p);
        assert_eq!(c.get(), 3);
        assert!(c.validate(&p));
        // Petersen has an odd cycle, so no 2-colouring exists
        assert!(k_coloring(&p, 2).is_none());
    }

    #[test]
    fn exhaustive_search_beyond_clique_bound() {
        // the wheel W_5 has ω = 3 = ⌈n/α⌉ but χ = 4
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::new(6, e).unwrap();
        let c = chromatic_number(&w5);
        assert_eq!(c.get(), 4);
        assert!(c.validate(&w5));
    }

    #[test]
    fn edge_chromatic_examples() {
        let (v, class) = edge_chromatic_number(&Graph::cycle(4)).unwrap();
        assert_eq!((v.get(), class), (2, EdgeClass::One));
        let (v, class) = edge_chromatic_number(&Graph::cycle(5)).unwrap();
        assert_eq!((v.get(), class), (3, EdgeClass::Two));
        let p = Graph::petersen();
        assert!(k_coloring(&p.line_graph().unwrap(), 3).is_none());
        let (v, class) = edge_chromatic_number(&p).unwrap();
        assert_eq!((v.get(), class), (4, EdgeClass::Two));
        assert!(v.validate(&p));
        let (v, class) = edge_chromatic_number(&Graph::complete(7)).unwrap();
        assert_eq!((v.get(), class), (7, EdgeClass::Two));
        let (v, class) = edge_chromatic_number(&Graph::complete(6)).unwrap();
        assert_eq!((v.get(), class), (5, EdgeClass::One));
        assert!(v.validate(&Graph::complete(6)));
    }
}
