//! Command-line front end: compute values, verify the closed forms against
//! the solvers, render dominating sets, and emit campaign tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 instance too large for the requested engine.

mod cache;
mod table;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use gridbond::bondage::{total_bondage, BondageOutcome, BondageResult};
use gridbond::formulas::{construct, Construction};
use gridbond::grid::{Edge, GridGraph, GridSpec, Vertex};
use gridbond::set::VertexSet;
use gridbond::solver::{gamma_t_bruteforce, gamma_t_dp, GammaResult};
use gridbond::Error as CoreError;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gridbond", version, about = "Exact total domination and total bondage numbers of grid graphs")]
struct Cli {
    /// Cache directory (falls back to $GRIDBOND_CACHE_DIR, then the system
    /// temp directory).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Disable the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Total domination number of G(n, m), optionally with removed edges
    /// and deleted vertices.
    Gamma {
        n: u32,
        m: u32,
        /// Edges to remove, e.g. "H:5,1" or "H:5,1,V:2,2" (repeatable).
        #[arg(long)]
        remove: Vec<String>,
        /// Vertices to delete, e.g. "4,1" or "4,1,3,2" (repeatable).
        #[arg(long)]
        delete: Vec<String>,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// Total bondage number of the clean grid G(n, m).
    Bondage {
        n: u32,
        m: u32,
        /// Largest removal size to search.
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        /// Search without symmetry reduction.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification campaign; exits 1 if any hard check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Largest grid length to sweep (per-suite default otherwise).
        #[arg(long)]
        max_n: Option<u32>,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Draw a dominating set as an ASCII grid ('*' chosen, 'o' not).
    Render {
        n: u32,
        m: u32,
        /// Which set to draw: a built-in periodic family or the solver's
        /// minimum set.
        #[arg(long = "set", value_enum, default_value_t = RenderSet::Solver)]
        set: RenderSet,
        #[arg(long, value_enum, default_value_t = Variant::D)]
        variant: Variant,
    },
    /// Emit one row per grid length with formula and solver values.
    Table {
        #[arg(long)]
        m: u32,
        #[arg(long = "n-from")]
        n_from: u32,
        #[arg(long = "n-to")]
        n_to: u32,
        #[arg(long, value_enum, default_value_t = table::Format::Text)]
        format: table::Format,
        /// Largest removal size for the bondage search per row.
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Dp,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderSet {
    Prop51,
    Prop52,
    Solver,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    D,
    Dprime,
}

/// Errors mapped to process exit codes.
enum AppError {
    Usage(String),
    TooLarge(String),
    ChecksFailed,
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::TooLarge(msg) => AppError::TooLarge(msg),
            other => AppError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache::Cache::open(cli.cache_dir.clone(), cli.no_cache);
    match run(cli, &cache) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::ChecksFailed) => ExitCode::from(1),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::TooLarge(msg)) => {
            eprintln!("error: instance too large: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli, cache: &cache::Cache) -> Result<(), AppError> {
    match cli.command {
        Command::Gamma { n, m, remove, delete, engine, json } => {
            cmd_gamma(n, m, &remove, &delete, engine, json, cache)
        }
        Command::Bondage { n, m, kmax, no_symmetry, json } => {
            cmd_bondage(n, m, kmax, !no_symmetry, json, cache)
        }
        Command::Verify { suite, max_n, seed, json } => {
            let report = verify::run(suite, max_n, seed);
            if json {
                println!("{}", report.to_json());
            } else {
                report.print_text();
            }
            if report.failures() > 0 {
                Err(AppError::ChecksFailed)
            } else {
                Ok(())
            }
        }
        Command::Render { n, m, set, variant } => cmd_render(n, m, set, variant),
        Command::Table { m, n_from, n_to, format, kmax } => {
            if n_from > n_to {
                return Err(AppError::Usage("--n-from exceeds --n-to".into()));
            }
            let report = table::campaign(m, n_from, n_to, kmax, cache)?;
            table::emit(&report, format);
            Ok(())
        }
    }
}

fn build_graph(n: u32, m: u32, remove: &[String], delete: &[String]) -> Result<GridGraph, AppError> {
    let spec = GridSpec::new(n, m).map_err(|e| AppError::Usage(e.to_string()))?;
    let g = GridGraph::new(spec);
    let edges = parse_edge_args(remove)?;
    let vertices = parse_vertex_args(delete)?;
    let g = g.remove_edges(&edges).map_err(|e| AppError::Usage(e.to_string()))?;
    g.delete_vertices(&vertices).map_err(|e| AppError::Usage(e.to_string()))
}

/// Edge names contain a comma ("H:5,1"), so a comma-separated list is
/// regrouped two tokens at a time.
fn parse_edge_args(args: &[String]) -> Result<Vec<Edge>, AppError> {
    let mut out = Vec::new();
    for arg in args {
        let tokens: Vec<&str> = arg.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        if tokens.len() % 2 != 0 {
            return Err(AppError::Usage(format!("malformed edge list {arg:?}")));
        }
        for pair in tokens.chunks(2) {
            if !pair[0].contains(':') {
                return Err(AppError::Usage(format!(
                    "expected an edge name like H:i,j in {arg:?}"
                )));
            }
            let name = format!("{},{}", pair[0], pair[1]);
            out.push(name.parse::<Edge>().map_err(|e| AppError::Usage(e.to_string()))?);
        }
    }
    Ok(out)
}

fn parse_vertex_args(args: &[String]) -> Result<Vec<Vertex>, AppError> {
    let mut out = Vec::new();
    for arg in args {
        let tokens: Vec<&str> = arg.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        if tokens.len() % 2 != 0 {
            return Err(AppError::Usage(format!("malformed vertex list {arg:?}")));
        }
        for pair in tokens.chunks(2) {
            let name = format!("{},{}", pair[0], pair[1]);
            out.push(name.parse::<Vertex>().map_err(|e| AppError::Usage(e.to_string()))?);
        }
    }
    Ok(out)
}

fn cmd_gamma(
    n: u32,
    m: u32,
    remove: &[String],
    delete: &[String],
    engine: Engine,
    json: bool,
    cache: &cache::Cache,
) -> Result<(), AppError> {
    let g = build_graph(n, m, remove, delete)?;
    let op = match engine {
        Engine::Dp => "gamma_t/dp",
        Engine::Brute => "gamma_t/brute",
    };
    let key = cache::key(&g, op);
    let payload = match cache.lookup(&key) {
        Some(v) => v,
        None => {
            let result = match engine {
                Engine::Dp => gamma_t_dp(&g)?,
                Engine::Brute => gamma_t_bruteforce(&g, &VertexSet::empty(g.spec()))?,
            };
            let payload = gamma_payload(&result);
            cache.store(&key, &payload);
            payload
        }
    };

    let mut body = serde_json::Map::new();
    body.insert("n".into(), json!(n));
    body.insert("m".into(), json!(m));
    for (k, v) in payload.as_object().unwrap() {
        body.insert(k.clone(), v.clone());
    }
    let body = Value::Object(body);
    if json {
        println!("{body}");
    } else {
        match &body["gamma_t"] {
            Value::String(_) => println!("gamma_t(G({n},{m})) = undefined"),
            v => {
                println!("gamma_t(G({n},{m})) = {v}");
                if let Some(w) = body.get("witness").and_then(Value::as_array) {
                    let names: Vec<String> =
                        w.iter().map(|x| x.as_str().unwrap_or_default().to_string()).collect();
                    println!("witness: {}", names.join(" "));
                }
            }
        }
    }
    Ok(())
}

fn gamma_payload(result: &GammaResult) -> Value {
    match result {
        GammaResult::Undefined => json!({ "gamma_t": "undefined" }),
        GammaResult::Defined { value, witness } => {
            let names: Vec<String> = witness
                .as_ref()
                .map(|w| w.iter().map(|v| v.to_string()).collect())
                .unwrap_or_default();
            json!({ "gamma_t": value, "witness": names })
        }
    }
}

fn cmd_bondage(
    n: u32,
    m: u32,
    kmax: u32,
    symmetry: bool,
    json: bool,
    cache: &cache::Cache,
) -> Result<(), AppError> {
    if kmax == 0 {
        return Err(AppError::Usage("--kmax must be at least 1".into()));
    }
    let spec = GridSpec::new(n, m).map_err(|e| AppError::Usage(e.to_string()))?;
    let g = GridGraph::new(spec);
    let op = format!("bondage/k={kmax}/sym={symmetry}");
    let key = cache::key(&g, &op);
    let (payload, elapsed_ms) = match cache.lookup(&key) {
        Some(v) => (v, 0u128),
        None => {
            let result = total_bondage(&g, kmax, symmetry)?;
            let payload = bondage_payload(&result);
            cache.store(&key, &payload);
            (payload, result.stats.elapsed.as_millis())
        }
    };

    let mut body = serde_json::Map::new();
    body.insert("n".into(), json!(n));
    body.insert("m".into(), json!(m));
    for (k, v) in payload.as_object().unwrap() {
        body.insert(k.clone(), v.clone());
    }
    body.insert("elapsed_ms".into(), json!(elapsed_ms as u64));
    let body = Value::Object(body);
    if json {
        println!("{body}");
    } else {
        match body["status"].as_str().unwrap_or_default() {
            "exact" => {
                println!("b_t(G({n},{m})) = {}", body["b_t"]);
                let names: Vec<String> = body["witness"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_str().unwrap_or_default().to_string())
                    .collect();
                println!("witness: {}", names.join(" "));
            }
            "infinity" => println!("b_t(G({n},{m})) = infinity"),
            _ => println!(
                "b_t(G({n},{m})) > {} (no witness up to --kmax)",
                body["searched_k"]
            ),
        }
        println!(
            "stats: {} subsets examined, {} solver calls, {} ms",
            body["subsets_examined"], body["dp_calls"], body["elapsed_ms"]
        );
    }
    Ok(())
}

fn bondage_payload(result: &BondageResult) -> Value {
    let mut body = match &result.outcome {
        BondageOutcome::Exact { value, witness } => {
            let names: Vec<String> = witness.iter().map(|e| e.to_string()).collect();
            json!({ "status": "exact", "b_t": value, "witness": names })
        }
        BondageOutcome::Infinity => json!({ "status": "infinity" }),
        BondageOutcome::LowerBoundOnly { searched_k } => {
            json!({ "status": "lower_bound_only", "searched_k": searched_k })
        }
    };
    let obj = body.as_object_mut().unwrap();
    obj.insert("subsets_examined".into(), json!(result.stats.subsets_examined));
    obj.insert("dp_calls".into(), json!(result.stats.dp_calls));
    body
}

fn cmd_render(n: u32, m: u32, set: RenderSet, variant: Variant) -> Result<(), AppError> {
    let chosen: VertexSet = match set {
        RenderSet::Solver => {
            let g = GridGraph::new(GridSpec::new(n, m).map_err(|e| AppError::Usage(e.to_string()))?);
            match gamma_t_dp(&g)? {
                GammaResult::Undefined => {
                    return Err(AppError::Usage(format!(
                        "G({n},{m}) has no total dominating set to draw"
                    )))
                }
                GammaResult::Defined { witness, .. } => witness.expect("dp returns a witness"),
            }
        }
        RenderSet::Prop51 | RenderSet::Prop52 => {
            if m != 4 {
                return Err(AppError::Usage("built-in families require m = 4".into()));
            }
            let c = match (set, variant) {
                (RenderSet::Prop51, Variant::D) => Construction::FourRowCenterFlank,
                (RenderSet::Prop51, Variant::Dprime) => Construction::FourRowCenterFlankMirror,
                (RenderSet::Prop52, Variant::D) => Construction::FourRowAlternating,
                (RenderSet::Prop52, Variant::Dprime) => Construction::FourRowAlternatingMirror,
                (RenderSet::Solver, _) => unreachable!(),
            };
            construct(c, n).map_err(|e| AppError::Usage(e.to_string()))?
        }
    };
    // Top row is j = m, matching the usual picture of the grid.
    for j in (1..=m).rev() {
        let line: String = (1..=n)
            .map(|i| if chosen.contains(Vertex::new(i, j)) { '*' } else { 'o' })
            .collect();
        println!("{line}");
    }
    Ok(())
}
