mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use oridom::bounds::{sandwich, BoundOptions};
use oridom::constructions::{self, Certificate, ClaimKind, FamilyKind};
use oridom::digraph::{
    self, expected_size_bound, min_path_partition, r_transversal_number, randomized_r_transversal,
    transversal_number,
};
use oridom::engine::{hakimi_orientation, lower_directed_domination, upper_directed_domination, SearchOptions};
use oridom::extremal::{conjecture_report, enumerate_maximal_outerplanar, family_stats};
use oridom::graph::{encode_graph6, parse_graph6_stream};
use oridom::invariants;
use oridom::{Error, Graph, Hypergraph, Orientation};

const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_VIOLATION: u8 = 5;

#[derive(Parser)]
#[command(name = "oridom", version, about = "Directed domination workbench: exact Γ_d, bounds, constructions")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Input format; each command has a natural default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[arg(long, value_enum, default_value_t = Out::Json, global = true)]
    out: Out,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Node allowance for exact searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    workers: u64,
    /// Re-check certificates with the exact solver.
    #[arg(long, global = true)]
    verify: bool,
    /// Treat the input graph as perfect in the bounds.
    #[arg(long, global = true)]
    assert_perfect: bool,
    /// Cross-check with brute force or exact Γ_d where offered.
    #[arg(long, global = true)]
    exhaustive: bool,
    #[arg(long, global = true)]
    k: Option<usize>,
    #[arg(long, global = true)]
    r: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true)]
    s: Option<usize>,
    /// Family tag for `construct tightness` and `family-stats`.
    #[arg(long, global = true)]
    family: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
    Hypergraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants with witnesses.
    Invariants { input: String },
    /// Domination number γ(G).
    Gamma { input: String },
    /// γ(D) of an oriented graph given as arcs (γ_r(D) with --r).
    GammaDirected { input: String },
    /// Exact Γ_d(G), or a certified interval when the budget runs out.
    GammaDExact { input: String },
    /// γ_d(G) = γ(G) with a witness orientation.
    GammaDLower { input: String },
    /// All bounds on Γ_d(G) and the sandwich interval.
    Bounds { input: String },
    /// Build a named construction.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        input: Option<String>,
        /// Comma-separated vertex set U for `extend`.
        #[arg(long)]
        u: Option<String>,
        /// Arc list orienting G[U] for `extend`.
        #[arg(long)]
        sub: Option<String>,
    },
    /// Exact transversal number τ(H).
    Transversal { input: String },
    /// Exact r-transversal number τ_r(H).
    RTransversal { input: String },
    /// Randomized r-transversal of a uniform hypergraph.
    RandomizedTransversal { input: String },
    /// Schütte k-domination property of a tournament.
    TournamentCheck { input: String },
    /// Minimum partition into directed paths.
    PathPartition { input: String },
    /// Min and max Γ_d over a graph6 stream or an enumerated family.
    FamilyStats { input: Option<String> },
    /// Regular-graph table from the fixtures.
    Conjectures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    IndependentSet,
    DominatingSet,
    Outerplanar,
    Extend,
    Tightness,
    RandomTournament,
    QrTournament,
    Hakimi,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::Graph6(_)
            | Error::VertexOutOfRange { .. }
            | Error::Loop(_)
            | Error::DuplicateEdge(..)
            | Error::TooManyVertices(_)
            | Error::NotAnEdge(_)
            | Error::InvalidOrientation(_) => EXIT_PARSE,
            Error::InvariantViolation(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// A command's result: JSON, optional CSV rows, and whether the output is
/// only an interval because the budget ran out.
struct Output {
    value: Value,
    csv: Option<Run<String>>,
    interval: bool,
}

impl Output {
    fn of<T: Serialize>(v: &T) -> Self {
        Output { value: to_value(v), csv: None, interval: false }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialise")
}

fn read_input(path: &str) -> Run<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }
}

fn read_graph(path: &str, format: Option<Format>) -> Run<Graph> {
    let text = read_input(path)?;
    match format.unwrap_or(Format::Edgelist) {
        Format::Edgelist => Ok(Graph::parse_edge_list(&text)?),
        Format::Graph6 => {
            let mut all = parse_graph6_stream(&text)?;
            if all.len() != 1 {
                return Err(Failure { code: EXIT_PARSE, message: format!("expected one graph6 line, found {}", all.len()) });
            }
            Ok(all.remove(0))
        }
        Format::Hypergraph => Err(Failure::usage("this command reads a graph, not a hypergraph")),
    }
}

fn read_orientation(path: &str, format: Option<Format>) -> Run<Orientation> {
    match format.unwrap_or(Format::Edgelist) {
        Format::Edgelist => Ok(Orientation::parse_arc_list(&read_input(path)?)?),
        _ => Err(Failure::usage("oriented graphs are read as arc lists (--format edgelist)")),
    }
}

fn read_hypergraph(path: &str, format: Option<Format>) -> Run<Hypergraph> {
    match format.unwrap_or(Format::Hypergraph) {
        Format::Hypergraph => Ok(Hypergraph::parse(&read_input(path)?)?),
        _ => Err(Failure::usage("hypergraphs are read in the hypergraph format")),
    }
}

fn need(v: Option<usize>, flag: &str) -> Run<usize> {
    v.ok_or_else(|| Failure::usage(format!("--{flag} is required")))
}

fn fixtures_dir() -> PathBuf {
    std::env::var_os("ORIDOM_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")))
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.order(), "m": g.size(), "edges": g.edges(), "graph6": encode_graph6(g) })
}

fn certificate_json(c: &Certificate, verify: bool) -> Run<Value> {
    if !c.validate() {
        return Err(Failure { code: EXIT_VIOLATION, message: "certificate witness is not a DDS of the claimed size".into() });
    }
    let verified = if verify {
        if !c.verify_exact() {
            return Err(Failure { code: EXIT_VIOLATION, message: format!("exact solver disagrees with claimed gamma {}", c.claimed_gamma) });
        }
        Some(true)
    } else {
        None
    };
    Ok(json!({
        "certificate": c,
        "arc_list": c.orientation.to_arc_list(),
        "verified": verified,
    }))
}

fn search_options(o: &Opts) -> SearchOptions {
    SearchOptions { budget: o.budget, workers: o.workers as usize, use_bounds: true }
}

fn invariants_json(g: &Graph) -> Run<Value> {
    let st = g.structure();
    let (chi_prime, class) = invariants::edge_chromatic_number(g)?;
    Ok(json!({
        "n": g.order(),
        "m": g.size(),
        "min_degree": st.profile.min_degree,
        "max_degree": st.profile.max_degree,
        "regular": st.profile.regular,
        "components": st.components.len(),
        "connected": st.is_connected(),
        "bipartite": st.is_bipartite(),
        "diameter": st.diameter.finite().filter(|_| st.is_connected()),
        "independence": invariants::independence_number(g),
        "clique": invariants::clique_number(g),
        "domination": invariants::domination_number(g),
        "matching": invariants::matching_number(g),
        "vertex_cover": invariants::vertex_cover_number(g),
        "chromatic": invariants::chromatic_number(g),
        "edge_chromatic": { "value": chi_prime, "class": class },
        "complement_chromatic": invariants::chromatic_number(&g.complement()).value,
        "mad": invariants::max_average_degree(g),
    }))
}

fn construct(name: Construction, input: Option<&str>, u: Option<&str>, sub: Option<&str>, o: &Opts) -> Run<Value> {
    let graph = || -> Run<Arc<Graph>> {
        let path = input.ok_or_else(|| Failure::usage("this construction needs an input graph"))?;
        Ok(Arc::new(read_graph(path, o.format)?))
    };
    let cert = match name {
        Construction::IndependentSet => constructions::independent_set_orientation(&graph()?),
        Construction::DominatingSet => constructions::dominating_set_orientation(&graph()?),
        Construction::Outerplanar => constructions::outerplanar_extremal(need(o.n, "n")?)?,
        Construction::RandomTournament => {
            Certificate::solved(constructions::random_tournament(need(o.n, "n")?, o.seed)?, ClaimKind::Exact)
        }
        Construction::QrTournament => {
            Certificate::solved(constructions::quadratic_residue_tournament(need(o.n, "n")?)?, ClaimKind::Property)
        }
        Construction::Hakimi => {
            let d = hakimi_orientation(&graph()?)?;
            Certificate::solved(d, ClaimKind::Property)
        }
        Construction::Extend => {
            let g = graph()?;
            let u: Vec<usize> = u
                .ok_or_else(|| Failure::usage("--u is required"))?
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|_| Failure::usage(format!("bad vertex `{s}` in --u"))))
                .collect::<Run<_>>()?;
            let d_h = read_orientation(sub.ok_or_else(|| Failure::usage("--sub is required"))?, None)?;
            let ext = constructions::extend_orientation(&g, &u, &d_h)?;
            let inner = digraph::gamma_directed(&d_h).size;
            let c = Certificate::solved(ext, ClaimKind::Property);
            if c.claimed_gamma < inner {
                return Err(Failure { code: EXIT_VIOLATION, message: "extension has smaller gamma than D_H".into() });
            }
            let mut v = certificate_json(&c, o.verify)?;
            v["sub_gamma"] = json!(inner);
            return Ok(v);
        }
        Construction::Tightness => {
            let kind: FamilyKind = o.family.as_deref().ok_or_else(|| Failure::usage("--family is required"))?.parse()?;
            let g = match kind {
                FamilyKind::DisjointCliques => constructions::tightness_family(kind, need(o.r, "r")?, need(o.k, "k")?)?,
                FamilyKind::TrianglesPlusIsolated => constructions::tightness_family(kind, need(o.r, "r")?, need(o.s, "s")?)?,
                FamilyKind::CliquePlusIsolated => constructions::tightness_family(kind, need(o.n, "n")?, need(o.k, "k")?)?,
            };
            let mut v = json!({ "graph": graph_json(&g), "edge_list": g.to_edge_list() });
            if o.exhaustive {
                let r = upper_directed_domination(&Arc::new(g), search_options(o))?;
                v["gamma_d"] = json!({ "value": r.value, "upper": r.upper, "exact": r.exact });
            }
            return Ok(v);
        }
    };
    certificate_json(&cert, o.verify)
}

fn family(input: Option<&str>, o: &Opts) -> Run<Output> {
    let tag = o.family.clone().unwrap_or_else(|| "graph6-stream".into());
    let (graphs, validated) = if matches!(tag.as_str(), "outerplanar" | "maximal-outerplanar") {
        let n = need(o.n, "n")?;
        (enumerate_maximal_outerplanar(n)?.collect::<Vec<_>>(), true)
    } else {
        let path = input.ok_or_else(|| Failure::usage("family-stats needs a graph6 stream or --family outerplanar"))?;
        if o.format.is_some_and(|f| f != Format::Graph6) {
            return Err(Failure::usage("family streams are graph6"));
        }
        let all = parse_graph6_stream(&read_input(path)?)?;
        let kept: Vec<Graph> = all
            .into_iter()
            .filter(|g| o.n.is_none_or(|n| g.order() == n))
            .filter(|g| o.r.is_none_or(|r| g.degree_profile().regular == Some(r)))
            .collect();
        // maximal planar streams are taken on trust
        (kept, tag != "mpp")
    };
    let mut stats = family_stats(&tag, &graphs, search_options(o))?;
    stats.validated = validated;
    let interval = !(stats.min_exact && stats.max_exact);
    Ok(Output { value: to_value(&stats), csv: Some(render::csv(&[&stats]).map_err(Failure::usage)), interval })
}

fn run(cli: &Cli) -> Run<Output> {
    let o = &cli.opts;
    let out = match &cli.command {
        Command::Invariants { input } => Output { value: invariants_json(&read_graph(input, o.format)?)?, csv: None, interval: false },
        Command::Gamma { input } => {
            let g = read_graph(input, o.format)?;
            let d = invariants::domination_number(&g);
            Output::of(&json!({ "gamma": d.get(), "witness": d.vertices() }))
        }
        Command::GammaDirected { input } => {
            let d = read_orientation(input, o.format)?;
            let mut v = match o.r {
                Some(r) => {
                    let s = digraph::gamma_r_directed(&d, r)?;
                    json!({ "r": r, "gamma_r": s.size, "witness": s.vertices })
                }
                None => {
                    let s = digraph::gamma_directed(&d);
                    json!({ "gamma": s.size, "witness": s.vertices })
                }
            };
            if o.exhaustive {
                let brute = digraph::gamma_directed_brute_force(&d)?;
                let solved = digraph::gamma_directed(&d).size;
                if brute.size != solved {
                    return Err(Failure { code: EXIT_VIOLATION, message: format!("brute force {} != solver {solved}", brute.size) });
                }
                v["brute_force"] = json!(brute.size);
            }
            Output::of(&v)
        }
        Command::GammaDExact { input } => {
            let g = Arc::new(read_graph(input, o.format)?);
            let r = upper_directed_domination(&g, search_options(o))?;
            if o.verify && r.exact && !r.certificate.verify_exact() {
                return Err(Failure { code: EXIT_VIOLATION, message: "witness does not re-validate".into() });
            }
            let v = json!({
                "gamma_d_upper": r.value,
                "exact": r.exact,
                "interval": [r.value, r.upper],
                "closing_bound": r.closing_bound,
                "orientations_explored": r.orientations_explored,
                "solver_nodes": r.solver_nodes,
                "witness": r.certificate,
            });
            Output { value: v, csv: None, interval: !r.exact }
        }
        Command::GammaDLower { input } => {
            let g = Arc::new(read_graph(input, o.format)?);
            let r = lower_directed_domination(&g, o.verify)?;
            Output::of(&json!({
                "gamma_d_lower": r.value,
                "verified": o.verify,
                "orientations_explored": r.orientations_explored,
                "witness": r.certificate,
            }))
        }
        Command::Bounds { input } => {
            let g = read_graph(input, o.format)?;
            Output::of(&sandwich(&g, BoundOptions { assert_perfect: o.assert_perfect })?)
        }
        Command::Construct { name, input, u, sub } => Output::of(&construct(*name, input.as_deref(), u.as_deref(), sub.as_deref(), o)?),
        Command::Transversal { input } => Output::of(&transversal_number(&read_hypergraph(input, o.format)?)?),
        Command::RTransversal { input } => {
            let h = read_hypergraph(input, o.format)?;
            Output::of(&r_transversal_number(&h, need(o.r, "r")?)?)
        }
        Command::RandomizedTransversal { input } => {
            let h = read_hypergraph(input, o.format)?;
            let r = need(o.r, "r")?;
            let t = randomized_r_transversal(&h, r, o.seed)?;
            let k = h.uniformity().expect("checked by the sampler");
            let mut v = to_value(&t);
            v["expected_size_bound"] = json!(expected_size_bound(h.order(), h.size(), k, r));
            Output::of(&v)
        }
        Command::TournamentCheck { input } => {
            let d = read_orientation(input, o.format)?;
            Output::of(&constructions::k_domination_property(&d, need(o.k, "k")?)?)
        }
        Command::PathPartition { input } => {
            let d = read_orientation(input, o.format)?;
            let paths = min_path_partition(&d)?;
            let alpha = invariants::independence_number(d.base()).get();
            Output::of(&json!({
                "count": paths.len(),
                "paths": paths,
                "alpha": alpha,
                "within_alpha": paths.len() <= alpha,
            }))
        }
        Command::FamilyStats { input } => family(input.as_deref(), o)?,
        Command::Conjectures => {
            let rows = conjecture_report(o.n.unwrap_or(8), &fixtures_dir(), search_options(o))?;
            let interval = rows.iter().any(|r| !r.exact);
            Output { value: to_value(&rows), csv: Some(render::csv(&rows).map_err(Failure::usage)), interval }
        }
    };
    Ok(out)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Invariants { .. } => "invariants",
        Command::Gamma { .. } => "gamma",
        Command::GammaDirected { .. } => "gamma-directed",
        Command::GammaDExact { .. } => "gamma-d-exact",
        Command::GammaDLower { .. } => "gamma-d-lower",
        Command::Bounds { .. } => "bounds",
        Command::Construct { .. } => "construct",
        Command::Transversal { .. } => "transversal",
        Command::RTransversal { .. } => "r-transversal",
        Command::RandomizedTransversal { .. } => "randomized-transversal",
        Command::TournamentCheck { .. } => "tournament-check",
        Command::PathPartition { .. } => "path-partition",
        Command::FamilyStats { .. } => "family-stats",
        Command::Conjectures => "conjectures",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let name = command_name(&cli.command);
    let result = run(&cli).and_then(|out| {
        let text = match cli.opts.out {
            Out::Json => render::json(name, cli.opts.seed, &out.value),
            Out::Human => render::human(name, cli.opts.seed, &out.value),
            Out::Csv => out.csv.ok_or_else(|| Failure::usage(format!("{name} has no CSV output")))??,
        };
        Ok((text, out.interval))
    });
    match result {
        Ok((text, interval)) => {
            print!("{text}");
            if interval {
                eprintln!("budget exhausted: reporting an interval");
                ExitCode::from(EXIT_BUDGET)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
