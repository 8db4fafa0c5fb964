//! Exact set multicover with optional self-satisfying constraints.
//!
//! Constraint `c` is met when its `self_vertex` is chosen, or when at least
//! `demand` of its `members` are chosen. Plain r-transversals have no self
//! vertex; r-domination uses `v` itself and `N⁻(v)`.

use crate::bitset::VertexSet;

#[derive(Clone, Debug)]
pub struct Constraint {
    pub self_vertex: Option<usize>,
    pub members: VertexSet,
    pub demand: usize,
}

struct Open {
    options: VertexSet,
    cost: usize,
    self_open: Option<usize>,
}

struct Search<'a> {
    constraints: &'a [Constraint],
    universe: VertexSet,
    best: Option<VertexSet>,
    best_len: usize,
}

impl Search<'_> {
    /// The unmet constraints, or `None` if one can no longer be met.
    fn open(&self, chosen: &VertexSet, undecided: &VertexSet) -> Option<Vec<Open>> {
        let mut out = Vec::new();
        for c in self.constraints {
            if c.self_vertex.is_some_and(|s| chosen.contains(s)) {
                continue;
            }
            let have = c.members.intersection_len(chosen);
            if have >= c.demand {
                continue;
            }
            let need = c.demand - have;
            let avail = c.members & *undecided;
            let self_open = c.self_vertex.filter(|&s| undecided.contains(s));
            if self_open.is_none() && avail.len() < need {
                return None;
            }
            let mut options = avail;
            if let Some(s) = self_open {
                options.insert(s);
            }
            let cost = if self_open.is_some() { 1 } else { need };
            out.push(Open { options, cost, self_open });
        }
        Some(out)
    }

    /// Greedy packing of constraints with pairwise disjoint option sets;
    /// their cheapest completions add up.
    fn bound(open: &[Open]) -> usize {
        let mut order: Vec<usize> = (0..open.len()).collect();
        order.sort_by_key(|&i| (open[i].options.len(), i));
        let mut used = VertexSet::new();
        let mut total = 0;
        for i in order {
            if !open[i].options.intersects(&used) {
                used |= open[i].options;
                total += open[i].cost;
            }
        }
        total
    }

    fn run(&mut self, chosen: VertexSet, excluded: VertexSet) {
        let undecided = self.universe - chosen - excluded;
        let Some(open) = self.open(&chosen, &undecided) else { return };
        if open.is_empty() {
            if chosen.len() < self.best_len {
                self.best_len = chosen.len();
                self.best = Some(chosen);
            }
            return;
        }
        if chosen.len() + Self::bound(&open) >= self.best_len {
            return;
        }
        let tight = open
            .iter()
            .min_by_key(|o| o.options.len() - o.cost)
            .expect("nonempty");
        let pick = tight.self_open.unwrap_or_else(|| {
            let freq = |v: usize| open.iter().filter(|o| o.options.contains(v)).count();
            let mut best = (0, usize::MAX);
            for v in tight.options.iter() {
                let f = freq(v);
                if f > best.0 {
                    best = (f, v);
                }
            }
            best.1
        });
        let mut with = chosen;
        with.insert(pick);
        self.run(with, excluded);
        let mut without = excluded;
        without.insert(pick);
        self.run(chosen, without);
    }
}

/// A minimum set satisfying every constraint, or `None` if infeasible.
pub fn minimum_multicover(n: usize, constraints: &[Constraint]) -> Option<VertexSet> {
    let mut s = Search {
        constraints,
        universe: VertexSet::full(n),
        best: None,
        best_len: n + 1,
    };
    s.run(VertexSet::new(), VertexSet::new());
    s.best
}
