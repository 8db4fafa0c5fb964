//! Orientation search: exact Γ_d(G) and γ_d(G), orientation enumeration,
//! and bounded out-degree orientations.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::bounds::{sandwich, BoundOptions};
use crate::constructions::{dominating_set_orientation, independent_set_orientation, Certificate, ClaimKind};
use crate::digraph::{search_transversal, Budget, Decision, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::max_average_degree;

/// Every completion of a partial orientation, in lexicographic order of the
/// free direction bits (first free canonical edge most significant).
pub struct OrientationStream {
    base: Arc<Graph>,
    template: Vec<bool>,
    free: Vec<usize>,
    next: u64,
    total: u64,
}

impl OrientationStream {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for OrientationStream {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.total {
            return None;
        }
        let mut dirs = self.template.clone();
        let f = self.free.len();
        for (i, &idx) in self.free.iter().enumerate() {
            dirs[idx] = self.next >> (f - 1 - i) & 1 == 1;
        }
        self.next += 1;
        Some(Orientation::new(self.base.clone(), dirs).expect("one bit per edge"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Enumerates all orientations of `g` extending the `fixed` arcs.
pub fn enumerate_orientations(g: Arc<Graph>, fixed: &[(usize, usize)]) -> Result<OrientationStream> {
    let mut template = vec![false; g.size()];
    let mut is_fixed = vec![false; g.size()];
    for &(a, b) in fixed {
        let idx = g.edge_index(a, b).ok_or_else(|| Error::NotAnEdge(format!("{a}-{b}")))?;
        if std::mem::replace(&mut is_fixed[idx], true) {
            return Err(Error::InvalidOrientation(format!("edge {a}-{b} fixed twice")));
        }
        template[idx] = a > b;
    }
    let free: Vec<usize> = (0..g.size()).filter(|&i| !is_fixed[i]).collect();
    if free.len() > 63 {
        return Err(Error::Precondition(format!("{} free edges cannot be enumerated", free.len())));
    }
    let total = 1u64 << free.len();
    Ok(OrientationStream { base: g, template, free, next: 0, total })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOptions {
    /// Total γ-solver node allowance, split evenly across subranges.
    pub budget: Option<u64>,
    pub workers: usize,
    /// Stop as soon as the incumbent meets the certified upper bound.
    pub use_bounds: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: None, workers: 1, use_bounds: true }
    }
}

/// Direction bits fixed per subrange. The split is independent of the
/// worker count so results and counters never depend on it.
pub const SUBRANGE_BITS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaDResult {
    /// Exact value, or the best value found when `exact` is false.
    pub value: usize,
    /// Certified upper end; equals `value` when exact.
    pub upper: usize,
    pub exact: bool,
    pub certificate: Certificate,
    /// Upper bound whose value closed the search early, if any.
    pub closing_bound: Option<&'static str>,
    pub orientations_explored: u64,
    pub solver_nodes: u64,
}

#[derive(Default)]
struct Outcome {
    best: Option<(Vec<bool>, usize)>,
    leaves: u64,
    nodes: u64,
    aborted: bool,
}

/// Depth-first search over direction bits. At each node the partial
/// digraph (decided arcs only) is tested for a DDS of size at most the
/// incumbent; since adding arcs never increases γ, such a DDS prunes the
/// whole subtree. At a leaf the test fails only when γ(D) beats the
/// incumbent, and γ(D) is then solved exactly.
struct Sub<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    order: &'a [usize],
    closed: Vec<VertexSet>,
    dirs: Vec<bool>,
    budget: Budget,
    incumbent: usize,
    cap: Option<usize>,
    out: Outcome,
}

impl Sub<'_> {
    fn set(&mut self, idx: usize, rev: bool) -> (usize, usize) {
        let (u, v) = self.edges[idx];
        let (a, b) = if rev { (v, u) } else { (u, v) };
        self.closed[b].insert(a);
        self.dirs[idx] = rev;
        (a, b)
    }

    /// `last` is the arc just added when the parent was verified against
    /// the current incumbent. A new small DDS must then use that arc: it
    /// contains `a`, avoids `b` and all of `b`'s older in-neighbours.
    fn node(&mut self, depth: usize, last: Option<(usize, usize)>) -> bool {
        let m = self.order.len();
        if depth == m {
            self.out.leaves += 1;
        }
        let (forced, forbidden) = match last {
            Some((a, b)) => {
                let mut older = self.closed[b];
                older.remove(a);
                (VertexSet::singleton(a), older)
            }
            None => (VertexSet::new(), VertexSet::new()),
        };
        let small = search_transversal(self.n, &self.closed, forced, forbidden, self.incumbent, true, &mut self.budget);
        match small {
            Decision::Found(_) => return false,
            Decision::Aborted => {
                self.out.aborted = true;
                return true;
            }
            Decision::None => {}
        }
        if depth == m {
            let full = VertexSet::new();
            match search_transversal(self.n, &self.closed, full, full, self.n, false, &mut self.budget) {
                Decision::Found(t) => {
                    self.incumbent = t.len();
                    self.out.best = Some((self.dirs.clone(), t.len()));
                }
                Decision::Aborted => {
                    self.out.aborted = true;
                    return true;
                }
                Decision::None => unreachable!("V is a DDS"),
            }
            return self.cap.is_some_and(|c| self.incumbent >= c);
        }
        let checked = self.incumbent;
        let idx = self.order[depth];
        for rev in [false, true] {
            let (a, b) = self.set(idx, rev);
            let hint = (self.incumbent == checked).then_some((a, b));
            let stop = self.node(depth + 1, hint);
            self.closed[b].remove(a);
            if stop {
                return true;
            }
        }
        false
    }
}

fn run_subrange(g: &Graph, order: &[usize], prefix: u64, bits: usize, seed: usize, cap: Option<usize>, budget: Option<u64>) -> Outcome {
    let n = g.order();
    let mut sub = Sub {
        n,
        edges: g.edges(),
        order,
        closed: (0..n).map(VertexSet::singleton).collect(),
        dirs: vec![false; g.size()],
        budget: budget.map_or_else(Budget::unlimited, Budget::limited),
        incumbent: seed,
        cap,
        out: Outcome::default(),
    };
    for (i, &idx) in order[..bits].iter().enumerate() {
        sub.set(idx, prefix >> (bits - 1 - i) & 1 == 1);
    }
    sub.node(bits, None);
    sub.out.nodes = sub.budget.used;
    sub.out
}

/// Runs `count` independent jobs on up to `workers` threads, returning the
/// results in job order.
pub(crate) fn run_jobs<T: Send>(count: usize, workers: usize, job: impl Fn(usize) -> T + Sync) -> Vec<T> {
    if workers <= 1 || count <= 1 {
        return (0..count).map(job).collect();
    }
    let slots: Vec<Mutex<Option<T>>> = (0..count).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers.min(count) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let r = job(i);
                *slots[i].lock().expect("no poisoned slot") = Some(r);
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner().expect("no poisoned slot").expect("job ran")).collect()
}

/// Γ_d(G): the maximum of γ(D) over all orientations, with a witness.
///
/// The incumbent starts at α(G), attained by the independent-set
/// orientation. When the budget runs out the result is the interval
/// `[value, upper]` with `exact = false`.
pub fn upper_directed_domination(g: &Arc<Graph>, opts: SearchOptions) -> Result<GammaDResult> {
    let seed = independent_set_orientation(g);
    let alpha = seed.claimed_gamma;
    let report = if opts.use_bounds { Some(sandwich(g, BoundOptions::default())?) } else { None };
    let cap = report.as_ref().map(|r| r.sandwich[1]);
    let closing = report.as_ref().and_then(|r| r.best_upper);
    if cap == Some(alpha) {
        return Ok(GammaDResult {
            value: alpha,
            upper: alpha,
            exact: true,
            certificate: seed,
            closing_bound: closing,
            orientations_explored: 0,
            solver_nodes: 0,
        });
    }
    let mut order: Vec<usize> = (0..g.size()).collect();
    order.sort_by_key(|&i| (g.edges()[i].1, g.edges()[i].0));
    let bits = SUBRANGE_BITS.min(order.len());
    let ranges = 1usize << bits;
    let per_range = opts.budget.map(|b| b.div_ceil(ranges as u64));
    let outcomes = run_jobs(ranges, opts.workers, |i| run_subrange(g, &order, i as u64, bits, alpha, cap, per_range));

    let explored = outcomes.iter().map(|o| o.leaves).sum();
    let nodes = outcomes.iter().map(|o| o.nodes).sum();
    let aborted = outcomes.iter().any(|o| o.aborted);
    // lowest subrange wins ties
    let top = outcomes.iter().filter_map(|o| o.best.as_ref()).map(|b| b.1).max();
    let best = outcomes.iter().filter_map(|o| o.best.as_ref()).find(|b| Some(b.1) == top);
    let (value, orientation) = match best {
        Some((dirs, v)) if *v > alpha => (*v, Orientation::new(g.clone(), dirs.clone())?),
        _ => (alpha, seed.orientation.clone()),
    };
    let closed_by_bound = cap == Some(value);
    let exact = !aborted || closed_by_bound;
    let upper = if exact {
        value
    } else {
        match cap {
            Some(c) => c,
            None => sandwich(g, BoundOptions::default())?.sandwich[1],
        }
    };
    let kind = if exact { ClaimKind::Exact } else { ClaimKind::LowerBoundAttainment };
    Ok(GammaDResult {
        value,
        upper,
        exact,
        certificate: Certificate::solved(orientation, kind),
        closing_bound: if closed_by_bound { closing } else { None },
        orientations_explored: explored,
        solver_nodes: nodes,
    })
}

/// Largest size accepted by the exhaustive check in
/// [`lower_directed_domination`].
pub const LOWER_VERIFY_MAX_EDGES: usize = 20;

/// γ_d(G) = γ(G), witnessed by orienting every edge out of a minimum
/// dominating set. With `verify`, every orientation is checked to have no
/// DDS smaller than γ(G).
pub fn lower_directed_domination(g: &Arc<Graph>, verify: bool) -> Result<GammaDResult> {
    let cert = dominating_set_orientation(g);
    let gamma = cert.claimed_gamma;
    let mut explored = 0;
    let mut budget = Budget::unlimited();
    if verify {
        if g.size() > LOWER_VERIFY_MAX_EDGES {
            return Err(Error::Precondition(format!(
                "exhaustive verification is limited to {LOWER_VERIFY_MAX_EDGES} edges, got {}",
                g.size()
            )));
        }
        let none = VertexSet::new();
        for d in enumerate_orientations(g.clone(), &[])? {
            explored += 1;
            let edges: Vec<VertexSet> = (0..d.order()).map(|v| d.closed_in_neighborhood(v)).collect();
            if gamma > 0 {
                if let Decision::Found(s) = search_transversal(d.order(), &edges, none, none, gamma - 1, true, &mut budget) {
                    return Err(Error::InvariantViolation(format!(
                        "orientation {:?} has a DDS {:?} smaller than gamma(G) = {gamma}",
                        d,
                        s.to_vec()
                    )));
                }
            }
        }
    }
    Ok(GammaDResult {
        value: gamma,
        upper: gamma,
        exact: true,
        certificate: cert,
        closing_bound: None,
        orientations_explored: explored,
        solver_nodes: budget.used,
    })
}

/// An orientation with Δ⁺(D) ≤ ⌈mad(G)/2⌉: start lowest-index-first and
/// repeatedly reverse a directed path from an overloaded vertex to one
/// with spare out-degree.
pub fn hakimi_orientation(g: &Arc<Graph>) -> Result<Orientation> {
    let target = (max_average_degree(g).value.as_ratio() / 2).ceil().to_integer() as usize;
    let n = g.order();
    let mut d = Orientation::lowest_first(g.clone());
    while let Some(v) = (0..n).find(|&v| d.out_degree(v) > target) {
        let mut parent = vec![usize::MAX; n];
        parent[v] = v;
        let mut queue = std::collections::VecDeque::from([v]);
        let mut end = None;
        while let Some(x) = queue.pop_front() {
            if d.out_degree(x) < target {
                end = Some(x);
                break;
            }
            for y in d.out_neighbors(x).iter() {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let Some(mut w) = end else {
            return Err(Error::InvariantViolation(format!(
                "no out-degree-reducing path from vertex {v} with target {target}"
            )));
        };
        while w != v {
            let p = parent[w];
            d.reverse_edge(g.edge_index(p, w).expect("path arcs are edges"));
            w = p;
        }
    }
    Ok(d)
}
