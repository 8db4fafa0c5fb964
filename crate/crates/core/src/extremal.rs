//! Family-level extremes of Γ_d: regular graphs from graph6 fixtures and
//! exhaustively enumerated maximal outerplanar graphs.

use std::path::Path;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::engine::{run_jobs, upper_directed_domination, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, parse_graph6_stream, Graph};

pub const OUTERPLANAR_MIN_ORDER: usize = 3;
pub const OUTERPLANAR_MAX_ORDER: usize = 14;

/// Chord lists of every triangulation of the polygon `i, i+1, …, j`.
fn triangulations(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
    if j - i < 2 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // the triangle on the side i-j has apex k
    for k in i + 1..j {
        let left = triangulations(i, k);
        let right = triangulations(k, j);
        for l in &left {
            for r in &right {
                let mut chords = Vec::with_capacity(j - i - 2);
                if k > i + 1 {
                    chords.push((i, k));
                }
                if j > k + 1 {
                    chords.push((k, j));
                }
                chords.extend_from_slice(l);
                chords.extend_from_slice(r);
                out.push(chords);
            }
        }
    }
    out
}

/// All labelled triangulations of the convex n-gon (Catalan(n−2) of them),
/// as graphs with outer cycle `0, 1, …, n−1`.
pub fn enumerate_maximal_outerplanar(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(OUTERPLANAR_MIN_ORDER..=OUTERPLANAR_MAX_ORDER).contains(&n) {
        return Err(Error::Precondition(format!(
            "maximal outerplanar enumeration needs {OUTERPLANAR_MIN_ORDER} <= n <= {OUTERPLANAR_MAX_ORDER}, got {n}"
        )));
    }
    Ok(triangulations(0, n - 1).into_iter().map(move |chords| {
        let cycle = (0..n).map(|i| (i, (i + 1) % n));
        Graph::new(n, cycle.chain(chords)).expect("a triangulation is a simple graph")
    }))
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Running extremes of Γ_d over a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub family: String,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub count: usize,
    pub min_gamma_d: usize,
    pub max_gamma_d: usize,
    pub argmin: String,
    pub argmax: String,
    pub min_exact: bool,
    pub max_exact: bool,
    /// False when family membership was asserted by the caller, not checked.
    pub validated: bool,
}

/// Solves Γ_d for every graph and folds min and max in stream order (the
/// first graph attaining an extreme is its witness). An inexact solve
/// contributes its upper end to the minimum and its lower end to the
/// maximum, so `m` is never understated and `M` never overstated.
pub fn family_stats(family: &str, graphs: &[Graph], opts: SearchOptions) -> Result<FamilyStats> {
    if graphs.is_empty() {
        return Err(Error::Precondition(format!("family {family} is empty")));
    }
    let per_graph = SearchOptions { workers: 1, ..opts };
    let solved = run_jobs(graphs.len(), opts.workers, |i| {
        upper_directed_domination(&Arc::new(graphs[i].clone()), per_graph)
    });
    let solved = solved.into_iter().collect::<Result<Vec<_>>>()?;
    let order_of = |f: fn(&Graph) -> usize| {
        let first = f(&graphs[0]);
        graphs.iter().all(|g| f(g) == first).then_some(first)
    };
    let (mut lo, mut hi) = (0, 0);
    for (i, s) in solved.iter().enumerate() {
        if s.upper < solved[lo].upper {
            lo = i;
        }
        if s.value > solved[hi].value {
            hi = i;
        }
    }
    Ok(FamilyStats {
        family: family.to_string(),
        n: order_of(Graph::order),
        r: order_of(|g| g.degree_profile().regular.unwrap_or(usize::MAX)).filter(|&r| r != usize::MAX),
        count: graphs.len(),
        min_gamma_d: solved[lo].upper,
        max_gamma_d: solved[hi].value,
        argmin: encode_graph6(&graphs[lo]),
        argmax: encode_graph6(&graphs[hi]),
        min_exact: solved[lo].exact,
        max_exact: solved[hi].exact,
        validated: true,
    })
}

/// Path of the r-regular order-n fixture.
pub fn regular_fixture_path(dir: &Path, n: usize, r: usize) -> std::path::PathBuf {
    dir.join("regular").join(format!("r{r}_n{n}.g6"))
}

pub fn load_regular_family(dir: &Path, n: usize, r: usize) -> Result<Vec<Graph>> {
    let path = regular_fixture_path(dir, n, r);
    let text = std::fs::read_to_string(&path).map_err(|_| Error::MissingFixture(path.display().to_string()))?;
    let graphs = parse_graph6_stream(&text)?;
    if let Some(bad) = graphs.iter().find(|g| g.order() != n || g.degree_profile().regular != Some(r)) {
        return Err(Error::Graph6(format!("{} holds a graph that is not {r}-regular of order {n}: {}", path.display(), encode_graph6(bad))));
    }
    Ok(graphs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Counterexample,
    NotApplicable,
}

/// One (n, r) row of the regular-graph table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub r: usize,
    pub count: usize,
    pub max_gamma_d: usize,
    pub min_gamma_d: usize,
    pub exact: bool,
    #[serde(serialize_with = "ratio_str")]
    pub half_n: Ratio<i64>,
    /// `(r+2)/(r+1) · n/2`
    #[serde(serialize_with = "ratio_str")]
    pub max_upper: Ratio<i64>,
    /// M(n,r) = n/2, claimed for r ≥ 3.
    pub half_order_verdict: Verdict,
    /// n/2 ≤ M(n,r) ≤ (r+2)/(r+1) · n/2.
    pub bracket_verdict: Verdict,
    /// m(n,r) ≥ n/(r+1).
    pub min_lower_verdict: Verdict,
    /// m(n,r)(r+1)/n.
    #[serde(serialize_with = "ratio_str")]
    pub min_ratio: Ratio<i64>,
    pub argmax: String,
    pub argmin: String,
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Consistent
    } else {
        Verdict::Counterexample
    }
}

/// Every (n, r) with 1 ≤ r ≤ 3, r < n ≤ max_n and nr even, read from the
/// regular fixtures under `dir`.
pub fn conjecture_report(max_n: usize, dir: &Path, opts: SearchOptions) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for r in 1..=3usize {
        for n in (r + 1..=max_n).filter(|n| n * r % 2 == 0) {
            let graphs = load_regular_family(dir, n, r)?;
            let s = family_stats(&format!("{r}-regular"), &graphs, opts)?;
            let (ni, ri) = (n as i64, r as i64);
            let half_n = Ratio::new(ni, 2);
            let max_upper = Ratio::new((ri + 2) * ni, 2 * (ri + 1));
            let big_m = Ratio::from_integer(s.max_gamma_d as i64);
            let small_m = Ratio::from_integer(s.min_gamma_d as i64);
            rows.push(ConjectureRow {
                n,
                r,
                count: s.count,
                max_gamma_d: s.max_gamma_d,
                min_gamma_d: s.min_gamma_d,
                exact: s.min_exact && s.max_exact,
                half_n,
                max_upper,
                half_order_verdict: if r >= 3 { verdict(big_m == half_n) } else { Verdict::NotApplicable },
                bracket_verdict: verdict(half_n <= big_m && big_m <= max_upper),
                min_lower_verdict: verdict(small_m >= Ratio::new(ni, ri + 1)),
                min_ratio: small_m * (ri + 1) / ni,
                argmax: s.argmax,
                argmin: s.argmin,
            });
        }
    }
    Ok(rows)
}
