//! Closed-form lower and upper bounds on Γ_d(G) and the integer sandwich
//! they certify.
//!
//! Every bound is a pure function of [`BoundInputs`], so a report can be
//! recomputed from its recorded inputs alone. `log` is base 2 and `ln`
//! natural. Real-valued entries are rounded with a 1e-9 guard band toward
//! the safe side.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::invariants::{
    chromatic_number, domination_number, edge_chromatic_number, independence_number,
    matching_number, max_average_degree,
};

const GUARD: f64 = 1e-9;

/// The invariant values every bound is computed from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundInputs {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub matching: usize,
    pub gamma: usize,
    pub chi: usize,
    /// χ′, computed for regular graphs only (it only feeds the class-1 bound).
    pub chi_prime: Option<usize>,
    pub chi_complement: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub complete: bool,
    #[serde(serialize_with = "ratio_str")]
    pub mad: Ratio<i64>,
    pub regular: Option<usize>,
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl BoundInputs {
    pub fn compute(g: &Graph) -> Result<Self> {
        let st = g.structure();
        let regular = st.profile.regular;
        let chi_prime = match regular {
            Some(r) if r >= 1 => Some(edge_chromatic_number(g)?.0.get()),
            _ => None,
        };
        let n = g.order();
        Ok(BoundInputs {
            n,
            m: g.size(),
            alpha: independence_number(g).get(),
            matching: matching_number(g).get(),
            gamma: domination_number(g).get(),
            chi: chromatic_number(g).get(),
            chi_prime,
            chi_complement: chromatic_number(&g.complement()).get(),
            min_degree: st.profile.min_degree,
            max_degree: st.profile.max_degree,
            diameter: st.diameter.finite().filter(|_| st.is_connected()),
            connected: st.is_connected(),
            bipartite: st.is_bipartite(),
            complete: g.is_complete(),
            mad: max_average_degree(g).value.as_ratio(),
            regular,
        })
    }

    fn class_one(&self) -> Option<bool> {
        Some(self.chi_prime? == self.regular?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Ratio<i64>),
    Real(f64),
}

impl BoundValue {
    pub fn as_f64(self) -> f64 {
        match self {
            BoundValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BoundValue::Real(x) => x,
        }
    }

    /// Smallest integer the value certifies from below.
    pub fn ceil_safe(self) -> i64 {
        match self {
            BoundValue::Exact(r) => r.ceil().to_integer(),
            BoundValue::Real(x) => (x - GUARD).ceil() as i64,
        }
    }

    /// Largest integer the value certifies from above.
    pub fn floor_safe(self) -> i64 {
        match self {
            BoundValue::Exact(r) => r.floor().to_integer(),
            BoundValue::Real(x) => (x + GUARD).floor() as i64,
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundValue::Exact(r) => s.serialize_str(&r.to_string()),
            BoundValue::Real(x) => s.serialize_f64(*x),
        }
    }
}

fn exact(p: i64, q: i64) -> BoundValue {
    BoundValue::Exact(Ratio::new(p, q))
}

fn int(v: usize) -> BoundValue {
    exact(v as i64, 1)
}

/// One bound entry; `value` is `None` when the bound does not apply, with
/// the reason in `why`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub value: Option<BoundValue>,
    pub why: String,
    /// Minimising parameter of swept families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Bound {
    fn applies(name: &'static str, value: BoundValue, why: impl Into<String>) -> Self {
        Bound { name, value: Some(value), why: why.into(), k: None }
    }

    fn skipped(name: &'static str, why: impl Into<String>) -> Self {
        Bound { name, value: None, why: why.into(), k: None }
    }

    fn when(name: &'static str, cond: bool, value: impl FnOnce() -> BoundValue, yes: &str, no: &str) -> Self {
        if cond {
            Bound::applies(name, value(), yes)
        } else {
            Bound::skipped(name, no)
        }
    }

    fn swept(name: &'static str, best: Option<(f64, usize)>, exact_value: Option<Ratio<i64>>, why: &str) -> Self {
        match best {
            Some((x, k)) => Bound {
                name,
                value: Some(exact_value.map_or(BoundValue::Real(x), BoundValue::Exact)),
                why: why.into(),
                k: Some(k),
            },
            None => Bound::skipped(name, "no admissible k"),
        }
    }
}

fn log2(x: f64) -> f64 {
    x.log2()
}

pub fn lower_bounds(inp: &BoundInputs) -> Vec<Bound> {
    let n = inp.n;
    let half_mad = (inp.mad / 2).ceil().to_integer();
    vec![
        Bound::applies("independence", int(inp.alpha), "alpha"),
        Bound::applies("order_over_chromatic", exact(n as i64, inp.chi.max(1) as i64), "n / chi"),
        match inp.diameter {
            Some(d) => Bound::applies("half_diameter", exact((d as i64 + 2) / 2, 1), "ceil((diam + 1) / 2)"),
            None => Bound::skipped("half_diameter", "graph is disconnected"),
        },
        Bound::applies("order_over_half_mad", exact(n as i64, half_mad + 1), "n / (ceil(mad / 2) + 1)"),
        Bound::when(
            "log_order",
            n >= 3,
            || {
                let l = log2(n as f64);
                BoundValue::Real((l - 2.0 * log2(l)).max(1.0))
            },
            "max(1, log n - 2 log log n)",
            "needs n >= 3",
        ),
        Bound::applies(
            "order_over_half_max_degree",
            exact(n as i64, inp.max_degree.div_ceil(2) as i64 + 1),
            "n / (ceil(Delta / 2) + 1)",
        ),
    ]
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundOptions {
    /// Caller vouches that the graph is perfect, enabling the perfect-graph
    /// bound beyond bipartite graphs.
    pub assert_perfect: bool,
}

pub fn upper_bounds(inp: &BoundInputs, opts: BoundOptions) -> Vec<Bound> {
    let (n, alpha, chi) = (inp.n as i64, inp.alpha as i64, inp.chi as i64);
    let mut out = vec![
        Bound::applies("order_minus_matching", int(inp.n - inp.matching), "n - alpha'"),
        Bound::applies("order", int(inp.n), "trivial"),
        Bound::when(
            "perfect_matching",
            2 * inp.matching == inp.n,
            || exact(n, 2),
            "n / 2",
            "no perfect matching",
        ),
        Bound::when(
            "order_minus_min_degree",
            inp.n >= 2 * inp.min_degree,
            || int(inp.n - inp.min_degree),
            "n - delta",
            "needs n >= 2 delta",
        ),
        Bound::applies("independence_half_chromatic", exact(alpha * ((chi + 1) / 2), 1), "alpha ceil(chi / 2)"),
        Bound::applies("order_minus_half_chromatic", exact(n - chi / 2, 1), "n - floor(chi / 2)"),
        Bound::applies("order_plus_independence", exact(n + alpha, 2), "(n + alpha) / 2"),
        Bound::when(
            "complement_chromatic_log",
            inp.n >= 1,
            || {
                let c = inp.chi_complement as f64;
                BoundValue::Real(c * log2((inp.n.div_ceil(inp.chi_complement)) as f64 + 1.0))
            },
            "chi(co-G) log(ceil(n / chi(co-G)) + 1)",
            "empty graph",
        ),
        dense_bound(inp),
    ];
    out.extend(regular_bounds(inp));
    let perfect = inp.bipartite || opts.assert_perfect;
    out.push(Bound::when(
        "perfect_independence_log",
        perfect && inp.n >= 1,
        || BoundValue::Real(alpha as f64 * log2(inp.n.div_ceil(inp.alpha) as f64 + 1.0)),
        if inp.bipartite { "alpha log(ceil(n / alpha) + 1), bipartite" } else { "alpha log(ceil(n / alpha) + 1), asserted perfect" },
        "not known to be perfect",
    ));
    out.push(Bound::when(
        "complete_log",
        inp.complete && inp.n >= 2,
        || BoundValue::Real(log2(n as f64 + 1.0)),
        "log(n + 1)",
        "not a complete graph of order >= 2",
    ));
    if inp.n >= 1 {
        out.extend(transversal_upper_bounds(inp.n, inp.alpha));
        let (x, k) = r_domination_upper_bound(inp.n, inp.alpha, 1);
        out.push(Bound { k: Some(k), ..Bound::applies("r_domination_r1", BoundValue::Real(x), "r = 1 in the r-domination sweep") });
    }
    out
}

/// Best `n log(k+1) / k` over divisors `k` of `n` with `k δ >= (k−1) n`.
fn dense_bound(inp: &BoundInputs) -> Bound {
    let n = inp.n;
    let best = (1..=n)
        .filter(|&k| n % k == 0 && k * inp.min_degree >= (k - 1) * n)
        .map(|k| (n as f64 * log2(k as f64 + 1.0) / k as f64, k))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    Bound::swept("dense_min_degree", best, None, "n log(k + 1) / k, k | n, delta >= (k - 1) n / k")
}

fn regular_bounds(inp: &BoundInputs) -> Vec<Bound> {
    let n = inp.n as i64;
    let Some(r) = inp.regular else {
        let why = "not regular";
        return ["regular_vizing", "regular_connected_matching", "regular_class_one", "regular_dirac"]
            .into_iter()
            .map(|name| Bound::skipped(name, why))
            .collect();
    };
    let ri = r as i64;
    let connected_matching = if r < 2 || !inp.connected {
        Bound::skipped("regular_connected_matching", "needs a connected r-regular graph, r >= 2")
    } else if r % 2 == 0 {
        let a = Ratio::new((ri * ri + 2 * ri) * n, 2 * (ri * ri + ri + 2));
        let b = Ratio::new(n + 1, 2);
        Bound::applies("regular_connected_matching", BoundValue::Exact(a.max(b)), "max((r^2 + 2r) n / (2 (r^2 + r + 2)), (n + 1) / 2), r even")
    } else {
        let num = (ri.pow(3) + ri * ri - 6 * ri + 2) * n + 2 * ri - 2;
        Bound::applies(
            "regular_connected_matching",
            exact(num, 2 * (ri.pow(3) - 3 * ri)),
            "((r^3 + r^2 - 6r + 2) n + 2r - 2) / (2 (r^3 - 3r)), r odd",
        )
    };
    vec![
        Bound::when("regular_vizing", r >= 2, || exact(n * (ri + 2), 2 * (ri + 1)), "n (r + 2) / (2 (r + 1))", "needs r >= 2"),
        connected_matching,
        Bound::when(
            "regular_class_one",
            r >= 1 && inp.class_one() == Some(true),
            || exact(n, 2),
            "n / 2, class 1",
            "needs class 1 with r >= 1",
        ),
        Bound::when("regular_dirac", r >= 1 && 2 * r >= inp.n, || exact((n + 1) / 2, 1), "ceil(n / 2)", "needs r >= n / 2"),
    ]
}

/// `f(n,k) = 2n ln(k+2)/(k+2) + (2k+1)α`.
pub fn transversal_f(n: usize, alpha: usize, k: usize) -> f64 {
    let kp = (k + 2) as f64;
    2.0 * n as f64 * kp.ln() / kp + (2 * k + 1) as f64 * alpha as f64
}

/// `g(n,k) = n(k+2)/3k + 2(2k+1)α/3`, for even `k >= 2`.
pub fn transversal_g(n: usize, alpha: usize, k: usize) -> Ratio<i64> {
    let (n, a, k) = (n as i64, alpha as i64, k as i64);
    Ratio::new(n * (k + 2), 3 * k) + Ratio::new(2 * (2 * k + 1) * a, 3)
}

/// `h(n,k) = n(k+1)/(3k−1) + 2k(2k+1)α/(3k−1)`, for odd `k >= 1`.
pub fn transversal_h(n: usize, alpha: usize, k: usize) -> Ratio<i64> {
    let (n, a, k) = (n as i64, alpha as i64, k as i64);
    Ratio::new(n * (k + 1) + 2 * k * (2 * k + 1) * a, 3 * k - 1)
}

pub fn closed_form_f(n: usize, alpha: usize) -> f64 {
    let (n, a) = (n as f64, alpha as f64);
    (2.0 * n * a).sqrt() * ((2.0 * n / a).sqrt().ln() + 2.0) - 2.0 * a
}

pub fn closed_form_g(n: usize, alpha: usize) -> f64 {
    let (n, a) = (n as f64, alpha as f64);
    (n + 2.0 * a + 4.0 * (2.0 * n * a).sqrt()) / 3.0
}

pub fn closed_form_h(n: usize, alpha: usize) -> f64 {
    let (n, a) = (n as f64, alpha as f64);
    (n + 14.0 * a / 3.0 + (2.0 * a).sqrt() * (27.0 * n + 20.0 * a) / (3.0 * (5.0 * a + 6.0 * n).sqrt())) / 3.0
}

fn argmin<I: Iterator<Item = (f64, usize)>>(it: I) -> Option<(f64, usize)> {
    // first minimiser wins ties
    it.fold(None, |best, (x, k)| match best {
        Some((b, _)) if b <= x => best,
        _ => Some((x, k)),
    })
}

/// The k-swept transversal bounds (k ∈ [0, n]) and their closed forms.
/// Requires `n >= 1`.
pub fn transversal_upper_bounds(n: usize, alpha: usize) -> Vec<Bound> {
    let f = argmin((0..=n).map(|k| (transversal_f(n, alpha, k), k)));
    let g = (2..=n.max(2)).step_by(2).map(|k| (transversal_g(n, alpha, k), k)).min_by(|a, b| a.0.cmp(&b.0));
    let h = (1..=n.max(1)).step_by(2).map(|k| (transversal_h(n, alpha, k), k)).min_by(|a, b| a.0.cmp(&b.0));
    let real = |r: Ratio<i64>| BoundValue::Exact(r).as_f64();
    vec![
        Bound::swept("transversal_f", f, None, "min_k 2n ln(k + 2) / (k + 2) + (2k + 1) alpha"),
        Bound::swept("transversal_g", g.map(|(r, k)| (real(r), k)), g.map(|x| x.0), "min over even k of n (k + 2) / 3k + 2 (2k + 1) alpha / 3"),
        Bound::swept("transversal_h", h.map(|(r, k)| (real(r), k)), h.map(|x| x.0), "min over odd k of (n (k + 1) + 2k (2k + 1) alpha) / (3k - 1)"),
        Bound::applies("closed_form_f", BoundValue::Real(closed_form_f(n, alpha)), "sqrt(2 n alpha) (ln sqrt(2n / alpha) + 2) - 2 alpha"),
        Bound::applies("closed_form_g", BoundValue::Real(closed_form_g(n, alpha)), "(n + 2 alpha + 4 sqrt(2 n alpha)) / 3"),
        Bound::applies("closed_form_h", BoundValue::Real(closed_form_h(n, alpha)), "(n + 14 alpha / 3 + sqrt(2 alpha) (27n + 20 alpha) / (3 sqrt(5 alpha + 6n))) / 3"),
    ]
}

/// `(2k−1)α + n ln(k+1)/(k+1) + rn(2 ln(k+1))^r/(k+1)` at a single `k >= r`.
pub fn r_domination_term(n: usize, alpha: usize, r: usize, k: usize) -> f64 {
    let (n, a, kp) = (n as f64, alpha as f64, (k + 1) as f64);
    (2.0 * k as f64 - 1.0) * a + n * kp.ln() / kp + r as f64 * n * (2.0 * kp.ln()).powi(r as i32) / kp
}

/// Minimum of [`r_domination_term`] over `k ∈ [r, max(n, r)]` and the
/// minimising `k`. Beyond `n` the `(2k−1)α` term only grows.
pub fn r_domination_upper_bound(n: usize, alpha: usize, r: usize) -> (f64, usize) {
    let r = r.max(1);
    argmin((r..=n.max(r)).map(|k| (r_domination_term(n, alpha, r, k), k))).expect("range is nonempty")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub graph: GraphSummary,
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub sandwich: [usize; 2],
    /// Names of the entries attaining the sandwich ends (first in list order).
    pub best_lower: Option<&'static str>,
    pub best_upper: Option<&'static str>,
    pub inputs: BoundInputs,
    pub options: BoundOptions,
}

fn pick(list: &[Bound], key: impl Fn(BoundValue) -> i64, better: impl Fn(i64, i64) -> bool) -> Option<(i64, &'static str)> {
    list.iter().filter_map(|b| Some((key(b.value?), b.name))).fold(None, |best, (v, name)| match best {
        Some((bv, _)) if !better(v, bv) => best,
        _ => Some((v, name)),
    })
}

/// Assembles a report from already computed inputs.
pub fn report_from_inputs(graph: GraphSummary, inputs: BoundInputs, options: BoundOptions) -> Result<BoundsReport> {
    if inputs.n == 0 {
        return Ok(BoundsReport {
            graph,
            lower: vec![],
            upper: vec![],
            sandwich: [0, 0],
            best_lower: None,
            best_upper: None,
            inputs,
            options,
        });
    }
    let lower = lower_bounds(&inputs);
    let upper = upper_bounds(&inputs, options);
    let (lo, lo_name) = pick(&lower, BoundValue::ceil_safe, |a, b| a > b).expect("alpha always applies");
    let (hi, hi_name) = pick(&upper, BoundValue::floor_safe, |a, b| a < b).expect("n always applies");
    let report = BoundsReport {
        graph,
        lower,
        upper,
        sandwich: [lo.max(0) as usize, hi.max(0) as usize],
        best_lower: Some(lo_name),
        best_upper: Some(hi_name),
        inputs,
        options,
    };
    if lo > hi {
        let dump = serde_json::to_string(&report).unwrap_or_default();
        return Err(Error::InvariantViolation(format!(
            "lower bound {lo} ({lo_name}) exceeds upper bound {hi} ({hi_name}): {dump}"
        )));
    }
    Ok(report)
}

/// All bounds for `g` and the sandwich `[⌈max lower⌉, ⌊min upper⌋]`.
pub fn sandwich(g: &Graph, options: BoundOptions) -> Result<BoundsReport> {
    let graph = GraphSummary { n: g.order(), m: g.size(), graph6: encode_graph6(g) };
    report_from_inputs(graph, BoundInputs::compute(g)?, options)
}

impl BoundsReport {
    /// Rebuilds the report from its recorded inputs.
    pub fn recompute(&self) -> Result<BoundsReport> {
        report_from_inputs(self.graph.clone(), self.inputs.clone(), self.options)
    }
}
