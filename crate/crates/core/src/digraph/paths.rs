//! Minimum partition of a digraph into directed paths, by dynamic
//! programming over vertex subsets.

use super::Orientation;
use crate::error::{Error, Result};

pub const PATH_PARTITION_MAX_ORDER: usize = 14;

/// A minimum set of vertex-disjoint directed paths covering every vertex.
/// Each path is listed from tail to head.
pub fn min_path_partition(d: &Orientation) -> Result<Vec<Vec<usize>>> {
    let n = d.order();
    if n > PATH_PARTITION_MAX_ORDER {
        return Err(Error::Precondition(format!(
            "path partition is limited to {PATH_PARTITION_MAX_ORDER} vertices, got {n}"
        )));
    }
    let full = (1usize << n) - 1;
    let out: Vec<usize> = (0..n).map(|v| d.out_neighbors(v).iter().map(|w| 1 << w).sum()).collect();
    // ends[mask]: bitmask of vertices at which a Hamiltonian path of mask can end
    let mut ends = vec![0usize; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in (0..n).filter(|v| e >> v & 1 == 1) {
            let mut grow = out[v] & !mask;
            while grow != 0 {
                let w = grow.trailing_zeros() as usize;
                grow &= grow - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let mut cover = vec![usize::MAX; 1 << n];
    let mut choice = vec![0usize; 1 << n];
    cover[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `mask` containing its lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if ends[part] != 0 && cover[mask ^ part] + 1 < cover[mask] {
                cover[mask] = cover[mask ^ part] + 1;
                choice[mask] = part;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let part = choice[mask];
        paths.push(trace(part, &ends, &out));
        mask ^= part;
    }
    paths.sort();
    Ok(paths)
}

fn trace(mut part: usize, ends: &[usize], out: &[usize]) -> Vec<usize> {
    let mut v = ends[part].trailing_zeros() as usize;
    let mut path = vec![v];
    part ^= 1 << v;
    while part != 0 {
        let u = (0..out.len())
            .find(|&u| ends[part] >> u & 1 == 1 && out[u] >> v & 1 == 1)
            .expect("predecessor recorded by the DP");
        path.push(u);
        part ^= 1 << u;
        v = u;
    }
    path.reverse();
    path
}
