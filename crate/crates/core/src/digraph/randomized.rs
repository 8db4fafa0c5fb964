//! The randomized r-transversal: sample, then patch deficient edges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hypergraph::{Hypergraph, Mode, TransversalResult};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Sampling probability `ln k / k`.
pub fn sampling_probability(k: usize) -> f64 {
    (k as f64).ln() / k as f64
}

/// Expected-size bound `n ln k / k + r m (2 ln k)^r / k`.
pub fn expected_size_bound(n: usize, m: usize, k: usize, r: usize) -> f64 {
    let (k, ln_k) = (k as f64, (k as f64).ln());
    n as f64 * ln_k / k + (r * m) as f64 * (2.0 * ln_k).powi(r as i32) / k
}

/// Picks each vertex independently with probability `ln k / k` (set `X`),
/// then for every edge `e` with `|e ∩ X| < r` adds the `r − |e ∩ X|`
/// lowest-index vertices of `e ∖ X`. The result is always an
/// r-transversal; the seed fully determines it.
pub fn randomized_r_transversal(h: &Hypergraph, r: usize, seed: u64) -> Result<TransversalResult> {
    let k = h
        .uniformity()
        .ok_or_else(|| Error::Precondition("hypergraph must be uniform and nonempty".into()))?;
    if k < 2 {
        return Err(Error::Precondition(format!("edge size k = {k} must be at least 2")));
    }
    if r < 1 || r > k {
        return Err(Error::Precondition(format!("need 1 <= r <= k, got r = {r}, k = {k}")));
    }
    let p = sampling_probability(k);
    if 1.0 - p <= 0.5 {
        return Err(Error::Precondition(format!("1 - p = {} is not above 1/2", 1.0 - p)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked: VertexSet = (0..h.order()).filter(|_| rng.gen_bool(p)).collect();
    let mut patch = VertexSet::new();
    for e in h.edges() {
        let have = e.intersection_len(&picked);
        if have < r {
            patch.extend((*e - picked).iter().take(r - have));
        }
    }
    Ok(TransversalResult::new(picked | patch, r, Mode::Randomized { seed }))
}
