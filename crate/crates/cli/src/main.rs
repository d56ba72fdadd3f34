use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use signotope::acceptance;
use signotope::compositions::SAMPLER;
use signotope::enumeration::DEFAULT_MAX_NODES;
use signotope::io::parse_mono_with_cap;
use signotope::tower::DEFAULT_MAX_ELEMENTS;
use signotope::{
    build_crh, count_monotone_report, edge_count, longest_mono_paths, project, ramsey_number_with, render_svg,
    to_mono_string, wiring_diagram, zero_lower_bound, CompletionMode, Error, RamseyOutcome, SearchLimits,
    SignFunction, TowerGroundSet, TowerLimits,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "signotope", version, about = "Construct, verify and count monotone hypergraph colorings")]
struct Cli {
    /// Worker threads for parallel searches (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest vertex count accepted for a coloring.
    #[arg(long, global = true, default_value_t = 64)]
    max_vertices: usize,
    /// Largest edge count a subcommand may materialize.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    max_edges: u64,
    /// Largest tower ground-set level size.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: u64,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Print the manifest on a single line.
    #[arg(long, global = true)]
    jsonl: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check monotonicity (and transitivity) of a coloring file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Longest monochromatic monotone paths of a coloring file.
    Path {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build the tower coloring c_r on N_r vertices.
    Tower {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Run the monotonicity and path-bound checks.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Build the ternary composition coloring c_(r,h).
    Comp {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        h: usize,
        /// `all` or `sample:K:SEED`.
        #[arg(long)]
        verify: Option<VerifyMode>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Count r-monotone colorings of K^r_n.
    Count {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Fix the first edge and double the count.
        #[arg(long)]
        symmetry: bool,
    },
    /// Smallest N forcing a monochromatic monotone path on M vertices.
    Ramsey {
        #[arg(long)]
        r: usize,
        #[arg(long = "path")]
        m: usize,
        #[arg(long = "max")]
        n_max: usize,
        /// Where to write the avoiding coloring on N-1 vertices.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// The i-th projection of a coloring file.
    Project {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Wiring diagram of a 3-monotone coloring.
    Wiring {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long)]
        sweep: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run only this criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VerifyMode {
    All,
    Sample { count: u64, seed: u64 },
}

impl FromStr for VerifyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(VerifyMode::All);
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["sample", k, seed] => Ok(VerifyMode::Sample {
                count: k.parse().map_err(|_| format!("bad sample count {k:?}"))?,
                seed: seed.parse().map_err(|_| format!("bad seed {seed:?}"))?,
            }),
            _ => Err(format!("expected `all` or `sample:K:SEED`, got {s:?}")),
        }
    }
}

#[derive(Serialize)]
struct Manifest {
    subcommand: &'static str,
    parameters: Value,
    seed: Option<u64>,
    version: &'static str,
    wall_ms: u128,
    exit_code: u8,
    result: Value,
}

/// What a subcommand hands back to the dispatcher.
struct Outcome {
    result: Value,
    seed: Option<u64>,
    ok: bool,
    summary: String,
}

impl Outcome {
    fn new(ok: bool, result: Value, summary: impl Into<String>) -> Self {
        Self {
            result,
            seed: None,
            ok,
            summary: summary.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (name, parameters) = describe(&cli.command);
    let start = Instant::now();
    let outcome = dispatch(&cli);
    let wall_ms = start.elapsed().as_millis();
    let (exit_code, result, seed) = match outcome {
        Ok(o) => {
            eprintln!("{}", o.summary);
            (if o.ok { 0 } else { EXIT_FAIL }, o.result, o.seed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (exit_for(&e), json!({ "error": error_kind(&e), "message": e.to_string() }), None)
        }
    };
    let manifest = Manifest {
        subcommand: name,
        parameters,
        seed,
        version: env!("CARGO_PKG_VERSION"),
        wall_ms,
        exit_code,
        result,
    };
    let text = if cli.jsonl {
        serde_json::to_string(&manifest)
    } else {
        serde_json::to_string_pretty(&manifest)
    };
    println!("{}", text.expect("manifest serializes"));
    ExitCode::from(exit_code)
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => EXIT_CAP,
        Error::NotMonotone { .. } | Error::NotRealizable(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidEdge(_) => "InvalidEdge",
        Error::TernaryNotAllowed => "TernaryNotAllowed",
        Error::Parse { .. } => "Parse",
        Error::InvalidArgument(_) => "InvalidArgument",
        Error::TooLarge { .. } => "TooLarge",
        Error::NoReduction(_) => "NoReduction",
        Error::NotMonotone { .. } => "NotMonotone",
        Error::NotRealizable(_) => "NotRealizable",
        Error::InvalidWiring(_) => "InvalidWiring",
        Error::Io(_) => "Io",
    }
}

fn describe(cmd: &Command) -> (&'static str, Value) {
    match cmd {
        Command::Verify { input } => ("verify", json!({ "in": input })),
        Command::Path { input } => ("path", json!({ "in": input })),
        Command::Tower { r, n, verify, emit } => ("tower", json!({ "r": r, "n": n, "verify": verify, "emit": emit })),
        Command::Comp { r, h, verify, emit } => {
            let mode = verify.map(|m| match m {
                VerifyMode::All => "all".to_string(),
                VerifyMode::Sample { count, seed } => format!("sample:{count}:{seed}"),
            });
            ("comp", json!({ "r": r, "h": h, "verify": mode, "emit": emit }))
        }
        Command::Count { r, n, symmetry } => ("count", json!({ "r": r, "n": n, "symmetry": symmetry })),
        Command::Ramsey { r, m, n_max, witness } => {
            ("ramsey", json!({ "r": r, "path": m, "max": n_max, "witness": witness }))
        }
        Command::Project { input, i, out } => ("project", json!({ "in": input, "i": i, "out": out })),
        Command::Wiring { input, svg, sweep } => ("wiring", json!({ "in": input, "svg": svg, "sweep": sweep })),
        Command::Selftest { criterion } => ("selftest", json!({ "criterion": criterion })),
    }
}

fn limits(cli: &Cli) -> SearchLimits {
    SearchLimits {
        max_nodes: cli.max_nodes,
        workers: cli.workers,
        ..SearchLimits::default()
    }
}

fn check_edges(cli: &Cli, r: usize, n: usize) -> signotope::Result<()> {
    let edges = edge_count(r, n)? as u64;
    if edges > cli.max_edges {
        return Err(Error::TooLarge {
            what: format!("edge count of K^{r}_{n}"),
            size: edges.to_string(),
            cap: cli.max_edges.to_string(),
        });
    }
    Ok(())
}

fn load(cli: &Cli, path: &PathBuf) -> signotope::Result<SignFunction> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let c = parse_mono_with_cap(&text, cli.max_vertices)?;
    check_edges(cli, c.r(), c.n())?;
    Ok(c)
}

fn save(path: &PathBuf, text: &str) -> signotope::Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> signotope::Result<Outcome> {
    match &cli.command {
        Command::Verify { input } => verify(cli, input),
        Command::Path { input } => path(cli, input),
        Command::Tower { r, n, verify, emit } => tower(cli, *r, *n, *verify, emit.as_ref()),
        Command::Comp { r, h, verify, emit } => comp(cli, *r, *h, *verify, emit.as_ref()),
        Command::Count { r, n, symmetry } => {
            check_edges(cli, *r, *n)?;
            let report = count_monotone_report(*r, *n, &SearchLimits { symmetry: *symmetry, ..limits(cli) })?;
            let summary = format!("S_{r}({n}) = {} ({} nodes, {} ms)", report.count, report.nodes, report.wall_ms);
            Ok(Outcome::new(true, serde_json::to_value(&report).expect("serializable"), summary))
        }
        Command::Ramsey { r, m, n_max, witness } => ramsey(cli, *r, *m, *n_max, witness.as_ref()),
        Command::Project { input, i, out } => {
            let c = load(cli, input)?;
            let p = project(&c, *i)?;
            save(out, &to_mono_string(&p))?;
            let monotone = p.is_monotone()?;
            let result = json!({
                "r": p.r(),
                "n": p.n(),
                "colors": p.color_string(),
                "monotone": monotone.holds(),
                "witness": monotone.witness(),
            });
            Ok(Outcome::new(true, result, format!("projection p_{i} written to {}", out.display())))
        }
        Command::Wiring { input, svg, sweep } => {
            let c = load(cli, input)?;
            let w = wiring_diagram(&c)?;
            save(svg, &render_svg(&w))?;
            if let Some(p) = sweep {
                save(p, &w.sweep_text())?;
            }
            let result = json!({ "n": w.n(), "sweep": w.sweep() });
            Ok(Outcome::new(true, result, format!("{} crossings written to {}", w.sweep().len(), svg.display())))
        }
        Command::Selftest { criterion } => selftest(*criterion),
    }
}

fn verify(cli: &Cli, input: &PathBuf) -> signotope::Result<Outcome> {
    let c = load(cli, input)?;
    if c.has_zero() {
        return Err(Error::TernaryNotAllowed);
    }
    let mono = c.is_monotone()?;
    let trans = c.is_transitive()?;
    let result = json!({
        "r": c.r(),
        "n": c.n(),
        "monotone": mono.holds(),
        "monotone_witness": mono.witness(),
        "transitive": trans.holds(),
        "transitive_witness": trans.witness(),
    });
    let summary = match mono.witness() {
        None => format!("monotone (r={}, n={})", c.r(), c.n()),
        Some(w) => format!("not monotone: link sequence of {w:?} changes sign more than once"),
    };
    Ok(Outcome::new(mono.holds(), result, summary))
}

fn path(cli: &Cli, input: &PathBuf) -> signotope::Result<Outcome> {
    let c = load(cli, input)?;
    let report = longest_mono_paths(&c)?;
    let summary = format!(
        "longest - path: {} {:?}\nlongest + path: {} {:?}",
        report.best_minus, report.witness_minus, report.best_plus, report.witness_plus
    );
    Ok(Outcome::new(true, serde_json::to_value(&report).expect("serializable"), summary))
}

fn tower(cli: &Cli, r: usize, n: usize, verify: bool, emit: Option<&PathBuf>) -> signotope::Result<Outcome> {
    let tl = TowerLimits {
        max_elements: cli.max_elements,
        max_vertices: cli.max_vertices,
    };
    let gs = TowerGroundSet::build_with(r, n, &tl)?;
    let big_n = gs.size(r);
    let sizes: Vec<u64> = (1..=r).map(|l| gs.size(l)).collect();
    let mut result = json!({ "r": r, "n": n, "sizes": sizes, "N": big_n });
    let mut ok = true;
    let mut summary = format!("F_{r}({n}) has {big_n} elements");
    if verify || emit.is_some() {
        if r < 3 {
            return Err(Error::InvalidArgument(format!("tower coloring needs r >= 3, got {r}")));
        }
        if big_n as usize > cli.max_vertices {
            return Err(Error::TooLarge {
                what: "tower coloring vertex count".into(),
                size: big_n.to_string(),
                cap: cli.max_vertices.to_string(),
            });
        }
        check_edges(cli, r, big_n as usize)?;
        let c = gs.coloring(&tl)?;
        if verify {
            let mono = c.is_monotone()?;
            let report = longest_mono_paths(&c)?;
            let bound = 2 * n + r - 2;
            let within = report.best() <= bound;
            ok = mono.holds() && within;
            result["monotone"] = json!(mono.holds());
            result["monotone_witness"] = json!(mono.witness());
            result["longest_path"] = serde_json::to_value(&report).expect("serializable");
            result["path_bound"] = json!(bound);
            result["path_bound_holds"] = json!(within);
            summary.push_str(&format!(
                "; monotone: {}; longest path {} (bound {bound})",
                mono.holds(),
                report.best()
            ));
        }
        if let Some(p) = emit {
            save(p, &to_mono_string(&c))?;
            result["emitted"] = json!(p);
        }
    }
    Ok(Outcome::new(ok, result, summary))
}

fn comp(cli: &Cli, r: usize, h: usize, verify: Option<VerifyMode>, emit: Option<&PathBuf>) -> signotope::Result<Outcome> {
    let n = (r as u64).checked_pow(h as u32).unwrap_or(u64::MAX);
    if n > cli.max_vertices as u64 {
        return Err(Error::TooLarge {
            what: format!("vertex count {r}^{h}"),
            size: n.to_string(),
            cap: cli.max_vertices.to_string(),
        });
    }
    check_edges(cli, r, n as usize)?;
    let t = build_crh(r, h)?;
    let bound = zero_lower_bound(r, h)?;
    let transversal = t.transversal_zeros();
    let mut result = json!({
        "r": r,
        "h": h,
        "n": t.n,
        "zeros": t.zero_positions.len(),
        "transversal_zeros": transversal,
        "transversal_zero_bound": bound.to_string(),
        "bound_holds": transversal as u128 >= bound,
    });
    let mut ok = transversal as u128 >= bound;
    let mut seed = None;
    let mut summary = format!("c_({r},{h}) on {} vertices: {} zeros", t.n, t.zero_positions.len());
    if let Some(mode) = verify {
        let mode = match mode {
            VerifyMode::All => CompletionMode::All,
            VerifyMode::Sample { count, seed: s } => {
                seed = Some(s);
                result["sampler"] = json!(SAMPLER);
                CompletionMode::Sample { count, seed: s }
            }
        };
        let mut checked = 0u64;
        let mut failure = None;
        for completion in t.completions(mode)? {
            checked += 1;
            if let Some(w) = completion.is_monotone()?.witness() {
                failure = Some(json!({ "completion": completion.color_string(), "witness": w }));
                break;
            }
        }
        ok &= failure.is_none();
        result["completions_checked"] = json!(checked);
        result["all_monotone"] = json!(failure.is_none());
        result["failure"] = failure.unwrap_or(Value::Null);
        summary.push_str(&format!("; {checked} completions checked, all monotone: {}", result["all_monotone"]));
    }
    if let Some(p) = emit {
        save(p, &to_mono_string(&t.coloring))?;
        result["emitted"] = json!(p);
    }
    Ok(Outcome {
        seed,
        ..Outcome::new(ok, result, summary)
    })
}

fn ramsey(cli: &Cli, r: usize, m: usize, n_max: usize, witness: Option<&PathBuf>) -> signotope::Result<Outcome> {
    check_edges(cli, r, n_max)?;
    let out = ramsey_number_with(r, m, n_max, &limits(cli))?;
    if let (Some(p), Some(w)) = (witness, out.witness()) {
        save(p, &to_mono_string(w))?;
    }
    let witness_json = out.witness().map(|w| json!({ "n": w.n(), "colors": w.color_string() }));
    let (result, summary) = match &out {
        RamseyOutcome::Exact { value, nodes, .. } => (
            json!({ "status": "exact", "value": value, "nodes": nodes, "witness": witness_json }),
            format!("ORS(P^{r}_{m}) = {value}"),
        ),
        RamseyOutcome::LowerBoundOnly { exceeds, nodes, .. } => (
            json!({ "status": "lower_bound_only", "exceeds": exceeds, "nodes": nodes, "witness": witness_json }),
            format!("ORS(P^{r}_{m}) > {exceeds}"),
        ),
    };
    Ok(Outcome::new(true, result, summary))
}

fn selftest(criterion: Option<u8>) -> signotope::Result<Outcome> {
    let results = match criterion {
        None => acceptance::run_all(),
        Some(id) => vec![acceptance::run_criterion(id)
            .ok_or_else(|| Error::InvalidArgument(format!("no acceptance criterion {id}")))?],
    };
    let lines: Vec<String> = results.iter().map(|r| r.line()).collect();
    let ok = results.iter().all(|r| r.pass);
    Ok(Outcome::new(ok, json!({ "criteria": results, "all_pass": ok }), lines.join("\n")))
}
