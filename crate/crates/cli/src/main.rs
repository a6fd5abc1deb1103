use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use mcgraph::cuts::barriers;
use mcgraph::decomposition::{is_solid, tight_cut_decomposition, ComponentKind};
use mcgraph::error::Error;
use mcgraph::family::{g_closure, ClosureOptions};
use mcgraph::format::{encode_graph6, encode_mg, parse_graphs};
use mcgraph::graph::Multigraph;
use mcgraph::mc::{is_bicritical, is_brick, is_matching_covered, removable_doubletons, removable_edges};
use mcgraph::verify::{run_campaign, CampaignParams};
use mcgraph::wheels::{is_wheel_like, make_wheel, splice, SpliceSpec, WheelSpec};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

/// Barriers listed by `analyze`; `barrier_count` has the full number.
const MAX_BARRIERS_SHOWN: usize = 64;

#[derive(Parser)]
#[command(name = "mcgraph", version, about = "Matching covered multigraphs: analysis, verification campaigns and generators")]
struct Cli {
    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Mg)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: hardware parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Mg,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for every graph in a file (.mg or graph6).
    Analyze { file: PathBuf },
    /// Run a verification campaign and print its JSON report.
    Verify(VerifyArgs),
    /// Emit wheels, family members or a splice.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct VerifyArgs {
    campaign: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    seeds: Option<usize>,
    #[arg(long)]
    mult_bound: Option<usize>,
    /// Graphs to check instead of the enumerated ones.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Rim lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    wheels: Option<Vec<usize>>,
    /// Leave the wall-clock field out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("family").required(true).args(["wheel", "g_closure", "splice"])))]
struct GenerateArgs {
    /// `K` or `K,m1,...,mK` (spoke multiplicities in rim order).
    #[arg(long)]
    wheel: Option<String>,
    /// All members of the family closure up to `--max-n` vertices.
    #[arg(long, requires = "max_n")]
    g_closure: bool,
    /// JSON file describing a splice.
    #[arg(long)]
    splice: Option<PathBuf>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    mult_bound: usize,
}

enum Failure {
    Usage(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

/// One field of the analysis; a bound overrun moves it to `skipped`.
fn field<T: Into<Value>>(
    report: &mut Map<String, Value>,
    skipped: &mut BTreeMap<String, String>,
    key: &str,
    value: mcgraph::error::Result<T>,
) -> Result<(), Failure> {
    match value {
        Ok(v) => {
            report.insert(key.into(), v.into());
        }
        Err(e @ Error::BoundExceeded { .. }) => {
            skipped.insert(key.into(), e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn analyze(g: &Multigraph) -> Result<(Value, bool), Failure> {
    let mut r = Map::new();
    let mut skipped = BTreeMap::new();
    r.insert("n".into(), json!(g.n()));
    r.insert("m".into(), json!(g.m()));
    r.insert("simple".into(), json!(g.is_simple()));
    r.insert("bipartite".into(), json!(g.is_bipartite()));
    r.insert("min_degree".into(), json!(g.min_degree()));
    r.insert("max_degree".into(), json!(g.max_degree()));
    let mc = is_matching_covered(g);
    r.insert("matching_covered".into(), json!(mc));
    r.insert("bicritical".into(), json!(is_bicritical(g)));
    let brick = is_brick(g);
    r.insert("brick".into(), json!(brick));
    if mc {
        let removable = removable_edges(g);
        if let Ok(rem) = &removable {
            r.insert("minimal".into(), json!(rem.is_empty()));
        }
        field(&mut r, &mut skipped, "removable_edges", removable.map(|v| json!(v)))?;
        let doubletons = removable_doubletons(g).map(|d| json!(d.iter().map(|&(e, f)| [e, f]).collect::<Vec<_>>()));
        field(&mut r, &mut skipped, "removable_doubletons", doubletons)?;
        let decomp = tight_cut_decomposition(g).map(|d| {
            let kinds = |k| d.components.iter().filter(|c| c.kind == k).count();
            json!({"bricks": kinds(ComponentKind::Brick), "braces": kinds(ComponentKind::Brace)})
        });
        if let Ok(d) = &decomp {
            r.insert("brace".into(), json!(g.is_bipartite() && d["braces"] == 1 && d["bricks"] == 0));
        }
        field(&mut r, &mut skipped, "tight_cut_decomposition", decomp)?;
        field(&mut r, &mut skipped, "solid", is_solid(g))?;
        match barriers(g) {
            Ok(bs) => {
                r.insert("barrier_count".into(), json!(bs.len()));
                let shown: Vec<_> = bs.iter().take(MAX_BARRIERS_SHOWN).map(|b| b.set.to_vec()).collect();
                r.insert("barriers".into(), json!(shown));
            }
            Err(e) => field::<Value>(&mut r, &mut skipped, "barriers", Err(e))?,
        }
    }
    if brick {
        field(&mut r, &mut skipped, "wheel_like_hubs", is_wheel_like(g).map(|h| json!(h.to_vec())))?;
    }
    let partial = !skipped.is_empty();
    r.insert("skipped".into(), json!(skipped));
    Ok((Value::Object(r), partial))
}

fn cmd_analyze(cli: &Cli, file: &Path) -> Result<u8, Failure> {
    let graphs = parse_graphs(&read(file)?)?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{}: no graphs", file.display())));
    }
    let mut reports = Vec::new();
    let mut partial = false;
    for g in &graphs {
        let (r, p) = analyze(g)?;
        partial |= p;
        reports.push(r);
    }
    let value = if reports.len() == 1 { reports.pop().unwrap() } else { Value::Array(reports) };
    emit(&cli.out, &(serde_json::to_string_pretty(&value).unwrap() + "\n"))?;
    Ok(if partial { EXIT_BOUND } else { 0 })
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> Result<u8, Failure> {
    let mut p = CampaignParams::defaults(&a.campaign)?;
    if let Some(v) = a.max_n {
        p.max_n = v;
    }
    if let Some(v) = a.seeds {
        p.seeds = v;
    }
    if let Some(v) = a.mult_bound {
        p.mult_bound = v;
    }
    if let Some(v) = a.seed {
        p.seed = v;
    }
    if let Some(v) = a.samples {
        p.samples = v;
    }
    if let Some(v) = &a.wheels {
        p.wheels = v.clone();
    }
    let corpus = match &a.corpus {
        Some(path) => {
            p.corpus = Some(path.display().to_string());
            Some(parse_graphs(&read(path)?)?)
        }
        None => None,
    };
    let mut report = run_campaign(&a.campaign, &p, corpus.as_deref())?;
    if a.no_timing {
        report.wall_clock_ms = None;
    }
    emit(&cli.out, &(report.to_json() + "\n"))?;
    Ok(if report.passed() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn parse_wheel(text: &str) -> Result<WheelSpec, Failure> {
    let nums: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("bad wheel {text:?}: {e}")))?;
    let k = nums[0];
    Ok(if nums.len() == 1 {
        WheelSpec::simple(k)
    } else {
        WheelSpec { k, mults: nums[1..].to_vec() }
    })
}

/// A splice input: a wheel spec, or a graph in `.mg` or graph6 text.
#[derive(Deserialize)]
#[serde(untagged)]
enum GraphSource {
    Wheel(WheelSpec),
    Text(String),
}

#[derive(Deserialize)]
struct SpliceFile {
    g: GraphSource,
    u: usize,
    h: GraphSource,
    v: usize,
    theta: Vec<usize>,
}

fn resolve(src: GraphSource) -> Result<Multigraph, Failure> {
    match src {
        GraphSource::Wheel(w) => Ok(make_wheel(&w)?),
        GraphSource::Text(t) => {
            let mut gs = parse_graphs(&t)?;
            if gs.len() != 1 {
                return Err(Failure::Usage(format!("expected one graph, found {}", gs.len())));
            }
            Ok(gs.pop().unwrap())
        }
    }
}

fn render(g: &Multigraph, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Mg => encode_mg(g),
        Format::Graph6 => encode_graph6(g)? + "\n",
    })
}

fn cmd_generate(cli: &Cli, a: &GenerateArgs) -> Result<u8, Failure> {
    let graphs = if let Some(w) = &a.wheel {
        vec![make_wheel(&parse_wheel(w)?)?]
    } else if let Some(path) = &a.splice {
        let f: SpliceFile = serde_json::from_str(&read(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let spec = SpliceSpec { g: resolve(f.g)?, u: f.u, h: resolve(f.h)?, v: f.v, theta: f.theta };
        vec![splice(&spec)?]
    } else {
        let closure = g_closure(ClosureOptions::new(a.max_n.unwrap(), a.mult_bound))?;
        closure.members.into_iter().map(|m| m.graph).collect()
    };
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&render(g, cli.format)?);
    }
    emit(&cli.out, &text)?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(cli, file),
        Command::Verify(a) => cmd_verify(cli, a),
        Command::Generate(a) => cmd_generate(cli, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BOUND)
        }
    }
}
