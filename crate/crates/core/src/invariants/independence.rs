use super::{Invariant, InvariantValue, Witness};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Upper bound on α(G[cand]): the number of cliques in a greedy clique
/// cover, taking the lowest-index vertex first.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(u) = cand.first() {
        cand.remove(u);
        let mut grow = cand & *g.neighbors(u);
        while let Some(w) = grow.first() {
            cand.remove(w);
            grow.remove(w);
            grow &= *g.neighbors(w);
        }
        cliques += 1;
    }
    cliques
}

fn search(g: &Graph, cand: VertexSet, current: VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    if current.len() + clique_cover_bound(g, cand) <= best.len() {
        return;
    }
    let mut pick = None;
    let mut max_deg = 0;
    for v in cand.iter() {
        let d = g.neighbors(v).intersection_len(&cand);
        // a vertex of degree <= 1 lies in some maximum independent set
        if d <= 1 {
            let mut next = current;
            next.insert(v);
            return search(g, cand - g.closed_neighborhood(v), next, best);
        }
        if pick.is_none() || d > max_deg {
            pick = Some(v);
            max_deg = d;
        }
    }
    let v = pick.unwrap();
    let mut with = current;
    with.insert(v);
    search(g, cand - g.closed_neighborhood(v), with, best);
    let mut without = cand;
    without.remove(v);
    search(g, without, current, best);
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    search(g, g.vertices(), VertexSet::new(), &mut best);
    best
}

/// Exact α(G) by branch and bound on the maximum-degree vertex.
pub fn independence_number(g: &Graph) -> InvariantValue {
    let set = maximum_independent_set(g);
    InvariantValue::integer(Invariant::Independence, set.len(), Witness::Vertices(set.to_vec()))
}

/// ω(G) = α(Ḡ).
pub fn clique_number(g: &Graph) -> InvariantValue {
    let set = maximum_independent_set(&g.complement());
    InvariantValue::integer(Invariant::Clique, set.len(), Witness::Vertices(set.to_vec()))
}

/// β(G) = n − α(G) (Gallai), witnessed by the complement of a maximum
/// independent set.
pub fn vertex_cover_number(g: &Graph) -> InvariantValue {
    let cover = g.vertices() - maximum_independent_set(g);
    InvariantValue::integer(Invariant::VertexCover, cover.len(), Witness::Vertices(cover.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_independent;

    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.order())
            .map(|m| (0..g.order()).filter(|v| m >> v & 1 == 1).collect::<VertexSet>())
            .filter(|s| is_independent(g, s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(independence_number(&Graph::complete(7)).get(), 1);
        for d in 1..=3 {
            let g = Graph::complete_bipartite(d, 7 - d);
            assert_eq!(independence_number(&g).get(), 7 - d);
        }
        let p = Graph::petersen();
        assert_eq!(brute_alpha(&p), 4);
        let a = independence_number(&p);
        assert_eq!(a.get(), 4);
        assert!(a.validate(&p));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::complete(5)).get(), 5);
        assert_eq!(clique_number(&Graph::cycle(5)).get(), 2);
        let p = Graph::petersen();
        let triangles = (0..10)
            .flat_map(|a| (a + 1..10).flat_map(move |b| (b + 1..10).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c))
            .count();
        assert_eq!(triangles, 0);
        let w = clique_number(&p);
        assert_eq!(w.get(), 2);
        assert!(w.validate(&p));
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(vertex_cover_number(&Graph::complete(6)).get(), 5);
        assert_eq!(vertex_cover_number(&Graph::empty(6)).get(), 0);
        let c6 = Graph::cycle(6);
        let b = vertex_cover_number(&c6);
        assert!(b.validate(&c6));
        assert_eq!(b.get(), crate::invariants::matching_number(&c6).get());
    }
}
