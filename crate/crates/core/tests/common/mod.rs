//! Strategies and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use oridom::{Graph, Orientation, VertexSet};
use proptest::prelude::*;

/// Random simple graph on `lo..=hi` vertices with at most `max_m` edges.
pub fn graph(lo: usize, hi: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let cap = max_m.min(pairs.len());
        proptest::sample::subsequence(pairs, 0..=cap).prop_map(move |e| Graph::new(n, e).unwrap())
    })
}

pub fn oriented(lo: usize, hi: usize, max_m: usize) -> impl Strategy<Value = Orientation> {
    graph(lo, hi, max_m).prop_flat_map(|g| {
        let m = g.size();
        let g = Arc::new(g);
        proptest::collection::vec(any::<bool>(), m).prop_map(move |dirs| Orientation::new(g.clone(), dirs).unwrap())
    })
}

pub fn bits(s: &VertexSet) -> u32 {
    s.iter().map(|v| 1u32 << v).sum()
}

/// Smallest set meeting every mask at least `r` times, if one exists.
pub fn min_cover(n: usize, sets: &[u32], r: u32) -> Option<usize> {
    (0u32..1 << n).filter(|&s| sets.iter().all(|&e| (e & s).count_ones() >= r)).map(u32::count_ones).min().map(|c| c as usize)
}

/// Smallest `S` where every vertex outside `S` has `r` in-neighbours in `S`.
pub fn gamma_r_of(d: &Orientation, r: u32) -> usize {
    let inn: Vec<u32> = (0..d.order()).map(|v| bits(d.in_neighbors(v))).collect();
    (0u32..1 << d.order())
        .filter(|&s| (0..d.order()).all(|v| s >> v & 1 == 1 || (inn[v] & s).count_ones() >= r))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

pub fn gamma_of(d: &Orientation) -> usize {
    let sets: Vec<u32> = (0..d.order()).map(|v| bits(&d.closed_in_neighborhood(v))).collect();
    min_cover(d.order(), &sets, 1).unwrap()
}

pub fn domination(g: &Graph) -> usize {
    let sets: Vec<u32> = (0..g.order()).map(|v| bits(&g.closed_neighborhood(v))).collect();
    min_cover(g.order(), &sets, 1).unwrap()
}

pub fn independent(g: &Graph, s: u32) -> bool {
    g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)
}

pub fn alpha(g: &Graph) -> usize {
    (0u32..1 << g.order()).filter(|&s| independent(g, s)).map(u32::count_ones).max().unwrap() as usize
}

pub fn chromatic(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let mut col = vec![0usize; n];
            colour(g, k, 0, &mut col)
        })
        .unwrap()
}

fn colour(g: &Graph, k: usize, v: usize, col: &mut [usize]) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if g.neighbors(v).iter().filter(|&u| u < v).all(|u| col[u] != c) {
            col[v] = c;
            if colour(g, k, v + 1, col) {
                return true;
            }
        }
    }
    false
}

/// Γ_d by listing every orientation.
pub fn upper(g: &Graph) -> usize {
    let g = Arc::new(g.clone());
    (0u64..1 << g.size())
        .map(|b| gamma_of(&Orientation::new(g.clone(), (0..g.size()).map(|i| b >> i & 1 == 1).collect()).unwrap()))
        .max()
        .unwrap()
}
