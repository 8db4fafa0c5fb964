//! Explicit orientations and graph families, each packaged as a checkable
//! certificate.

use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::digraph::{gamma_directed, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{domination_number, maximum_independent_set};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// The orientation attains a known lower bound on Γ_d.
    LowerBoundAttainment,
    Exact,
    Property,
}

/// An orientation together with a claimed γ(D) and a DDS of that size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub orientation: Orientation,
    pub claimed_gamma: usize,
    pub dds_witness: Vec<usize>,
    pub claim_kind: ClaimKind,
}

impl Certificate {
    pub fn new(orientation: Orientation, dds: VertexSet, claim_kind: ClaimKind) -> Self {
        Certificate { orientation, claimed_gamma: dds.len(), dds_witness: dds.to_vec(), claim_kind }
    }

    /// Builds a certificate whose witness is a minimum DDS from the exact solver.
    pub fn solved(orientation: Orientation, claim_kind: ClaimKind) -> Self {
        let dds = gamma_directed(&orientation).vertex_set();
        Certificate::new(orientation, dds, claim_kind)
    }

    pub fn witness_set(&self) -> VertexSet {
        self.dds_witness.iter().copied().collect()
    }

    /// The witness is a DDS of the claimed size. Cheap; says nothing about
    /// minimality.
    pub fn validate(&self) -> bool {
        let s = self.witness_set();
        s.len() == self.claimed_gamma
            && self.dds_witness.len() == self.claimed_gamma
            && self.orientation.is_dds(&s)
    }

    /// `validate` plus an exact solve confirming γ(D) equals the claim.
    pub fn verify_exact(&self) -> bool {
        self.validate() && gamma_directed(&self.orientation).size == self.claimed_gamma
    }
}

/// Directs every edge leaving `a` outward and the rest lowest-index-first.
fn orient_out_of(g: Arc<Graph>, a: &VertexSet) -> Orientation {
    let reversed = g.edges().iter().map(|&(u, v)| !a.contains(u) && a.contains(v)).collect();
    Orientation::new(g, reversed).expect("one bit per edge")
}

/// Orients all edges out of a maximum independent set `A`, so every DDS
/// contains `A` and γ(D) = α(G).
pub fn independent_set_orientation(g: &Arc<Graph>) -> Certificate {
    let a = maximum_independent_set(g);
    Certificate::new(orient_out_of(g.clone(), &a), a, ClaimKind::Exact)
}

/// Orients all edges out of a minimum dominating set `S`, giving γ(D) = γ(G).
pub fn dominating_set_orientation(g: &Arc<Graph>) -> Certificate {
    let s: VertexSet = domination_number(g).vertices().iter().copied().collect();
    Certificate::new(orient_out_of(g.clone(), &s), s, ClaimKind::Exact)
}

/// A maximal outerplanar graph (fan triangulation of the n-gon with hub 0)
/// oriented so that γ(D) = ⌈n/2⌉.
///
/// Even n: the directed cycle `0 → 1 → … → n−1 → 0` plus `u → 0` for every
/// `u` other than the two cycle neighbours of 0. Odd n, writing `v_i` for
/// vertex `i − 1`: the directed cycle plus `v_i → v_1` for odd `3 ≤ i ≤ n−2`
/// and `v_1 → v_i` for even `4 ≤ i ≤ n−1`.
pub fn outerplanar_extremal(n: usize) -> Result<Certificate> {
    if n < 4 {
        return Err(Error::Precondition(format!("outerplanar construction needs n >= 4, got {n}")));
    }
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let witness: VertexSet = if n % 2 == 0 {
        arcs.extend((2..=n - 2).map(|u| (u, 0)));
        (0..n).step_by(2).collect()
    } else {
        let v = |i: usize| i - 1;
        arcs.extend((3..=n - 2).step_by(2).map(|i| (v(i), v(1))));
        arcs.extend((4..=n - 1).step_by(2).map(|i| (v(1), v(i))));
        [v(1)].into_iter().chain((2..n).step_by(2).map(v)).collect()
    };
    let g = Graph::new(n, arcs.iter().copied())?;
    let d = Orientation::from_arcs(Arc::new(g), &arcs)?;
    Ok(Certificate::new(d, witness, ClaimKind::LowerBoundAttainment))
}

/// Extends an orientation of `G[U]` to `G` by directing `[U, V∖U]` out of
/// `U` and the edges inside `V∖U` lowest-index-first. `U` is given sorted,
/// with `d_h` labelled as in [`Graph::induced_subgraph`].
pub fn extend_orientation(g: &Arc<Graph>, u: &[usize], d_h: &Orientation) -> Result<Orientation> {
    let mut sorted = u.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != u.len() {
        return Err(Error::Precondition("U contains a repeated vertex".into()));
    }
    let induced = g.induced_subgraph(&sorted)?;
    if d_h.base() != &induced {
        return Err(Error::InvalidOrientation("D_H does not orient G[U]".into()));
    }
    let inside: VertexSet = sorted.iter().copied().collect();
    let mut reversed: Vec<bool> = g.edges().iter().map(|&(a, b)| !inside.contains(a) && inside.contains(b)).collect();
    for (x, y) in d_h.arcs() {
        let (a, b) = (sorted[x], sorted[y]);
        reversed[g.edge_index(a, b).expect("induced edge")] = a > b;
    }
    Orientation::new(g.clone(), reversed)
}

/// Graph families on which the colouring and independence bounds are tight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `rK_t`; parameters `(r, t)`.
    DisjointCliques,
    /// `rK_3 ∪ sK_1`; parameters `(r, s)`.
    TrianglesPlusIsolated,
    /// `K̄_{n−k} ∪ K_k`; parameters `(n, k)`.
    CliquePlusIsolated,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "disjoint-cliques" => Ok(FamilyKind::DisjointCliques),
            "triangles-plus-isolated" => Ok(FamilyKind::TrianglesPlusIsolated),
            "clique-plus-isolated" => Ok(FamilyKind::CliquePlusIsolated),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

pub fn tightness_family(kind: FamilyKind, a: usize, b: usize) -> Result<Graph> {
    match kind {
        FamilyKind::DisjointCliques => Graph::disjoint_union(&vec![Graph::complete(b); a]),
        FamilyKind::TrianglesPlusIsolated => {
            let mut parts = vec![Graph::complete(3); a];
            parts.push(Graph::empty(b));
            Graph::disjoint_union(&parts)
        }
        FamilyKind::CliquePlusIsolated => {
            if b > a {
                return Err(Error::Precondition(format!("clique order {b} exceeds n = {a}")));
            }
            Graph::disjoint_union(&[Graph::empty(a - b), Graph::complete(b)])
        }
    }
}

/// Orients each pair of `K_n` by an independent fair coin.
pub fn random_tournament(n: usize, seed: u64) -> Result<Orientation> {
    if n == 0 {
        return Err(Error::Precondition("tournament needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Arc::new(Graph::complete(n));
    let reversed = (0..g.size()).map(|_| rng.gen_bool(0.5)).collect();
    Orientation::new(g, reversed)
}

/// The tournament on `Z_p` with `i → j` iff `j − i` is a nonzero square
/// mod `p`; `p` must be a prime congruent to 3 mod 4.
pub fn quadratic_residue_tournament(p: usize) -> Result<Orientation> {
    let prime = p >= 3 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !prime || p % 4 != 3 {
        return Err(Error::Precondition(format!("{p} is not a prime congruent to 3 mod 4")));
    }
    let squares: VertexSet = (1..p).map(|x| x * x % p).collect();
    let arcs: Vec<(usize, usize)> = (0..p)
        .flat_map(|i| (i + 1..p).map(move |j| (i, j)))
        .map(|(i, j)| if squares.contains((j + p - i) % p) { (i, j) } else { (j, i) })
        .collect();
    Orientation::from_arcs(Arc::new(Graph::complete(p)), &arcs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KDominationReport {
    pub holds: bool,
    pub k: usize,
    /// The lexicographically first k-set no outside vertex dominates.
    pub failing_set: Option<Vec<usize>>,
}

/// Whether every k-set `S` has a vertex `u ∉ S` with `S ⊆ N⁺(u)`.
pub fn k_domination_property(d: &Orientation, k: usize) -> Result<KDominationReport> {
    let n = d.order();
    if !d.is_tournament() {
        return Err(Error::Precondition("k-domination is defined for tournaments".into()));
    }
    if k >= n {
        return Err(Error::Precondition(format!("k = {k} must be below n = {n}")));
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        // a common in-neighbour of S is automatically outside S
        let common = subset.iter().fold(VertexSet::full(n), |acc, &s| acc & *d.in_neighbors(s));
        if common.is_empty() {
            return Ok(KDominationReport { holds: false, k, failing_set: Some(subset) });
        }
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            return Ok(KDominationReport { holds: true, k, failing_set: None });
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::independence_number;

    #[test]
    fn independent_set_orientation_examples() {
        for (g, alpha) in [(Graph::empty(5), 5), (Graph::cycle(4), 2), (Graph::petersen(), 4)] {
            let g = Arc::new(g);
            let c = independent_set_orientation(&g);
            assert_eq!(c.claimed_gamma, alpha);
            assert!(c.verify_exact());
            assert!(c.witness_set().iter().all(|a| c.orientation.in_degree(a) == 0));
        }
    }

    #[test]
    fn dominating_set_orientation_examples() {
        for (g, gamma) in [(Graph::star(5), 1), (Graph::cycle(6), 2), (Graph::complete(4), 1)] {
            let c = dominating_set_orientation(&Arc::new(g));
            assert_eq!(c.claimed_gamma, gamma);
            assert!(c.verify_exact());
        }
    }

    #[test]
    fn outerplanar_examples() {
        assert!(outerplanar_extremal(3).is_err());
        for n in 4..=15 {
            let c = outerplanar_extremal(n).unwrap();
            assert_eq!(c.orientation.base().size(), 2 * n - 3);
            assert_eq!(c.claimed_gamma, n.div_ceil(2));
            assert!(c.verify_exact(), "n = {n}");
            let outer = c.orientation.base();
            assert!((0..n).all(|i| outer.has_edge(i, (i + 1) % n)));
        }
    }

    #[test]
    fn extension_examples() {
        let p3 = Arc::new(Graph::path(3));
        let centre = Orientation::lowest_first(Arc::new(Graph::empty(1)));
        let ext = extend_orientation(&p3, &[1], &centre).unwrap();
        assert_eq!(ext.out_degree(1), 2);
        assert_eq!(gamma_directed(&ext).size, 1);
        let whole = Orientation::from_arcs(p3.clone(), &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(extend_orientation(&p3, &[0, 1, 2], &whole).unwrap(), whole);
        assert!(extend_orientation(&p3, &[0, 1], &centre).is_err());
    }

    #[test]
    fn families() {
        let g = tightness_family(FamilyKind::DisjointCliques, 2, 3).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        let g = tightness_family(FamilyKind::TrianglesPlusIsolated, 1, 1).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(independence_number(&g).get(), 2);
        let g = tightness_family(FamilyKind::CliquePlusIsolated, 4, 2).unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        assert!("petals".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn tournaments() {
        assert_eq!(random_tournament(1, 3).unwrap().arcs().count(), 0);
        for seed in 0..10 {
            let t = random_tournament(3, seed).unwrap();
            let cyclic = (0..3).all(|v| t.out_degree(v) == 1);
            let transitive = (0..3).map(|v| t.out_degree(v)).collect::<VertexSet>().len() == 3;
            assert!(cyclic ^ transitive);
        }
        assert_eq!(random_tournament(9, 4).unwrap(), random_tournament(9, 4).unwrap());
        assert!(quadratic_residue_tournament(5).is_err());
        let qr = quadratic_residue_tournament(7).unwrap();
        assert!((0..7).all(|v| qr.out_degree(v) == 3));
    }

    #[test]
    fn k_domination_examples() {
        let c3 = quadratic_residue_tournament(3).unwrap();
        assert!(k_domination_property(&c3, 1).unwrap().holds);
        let tt3 = Orientation::lowest_first(Arc::new(Graph::complete(3)));
        let r = k_domination_property(&tt3, 1).unwrap();
        assert_eq!(r.failing_set, Some(vec![0]));
        let qr7 = quadratic_residue_tournament(7).unwrap();
        assert!(k_domination_property(&qr7, 2).unwrap().holds);
        assert!(k_domination_property(&qr7, 1).unwrap().holds);
        assert!(!k_domination_property(&qr7, 3).unwrap().holds);
        assert!(k_domination_property(&qr7, 7).is_err());
    }
}
