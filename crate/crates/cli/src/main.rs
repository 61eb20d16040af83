//! Command-line front end: seeded generation, exact enumeration, evolution
//! traces, homology and connectivity reports, and hub analysis.
//!
//! Document-producing commands (gen, gen-hier, enumerate, evolve) always
//! write canonical JSON; report commands write terse TSV by default and
//! JSON with `--format json`; emit-plot-data always writes TSV. With
//! `--out` the bytes go to the file and a `<out>.manifest.json` records
//! the command, configuration, effective seed, and artifact checksums.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 enumeration
//! choice cap exceeded.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use socioplex::analysis::{diffusion_min_dim, probe_matrix, q_components};
use socioplex::complex::{SimplicialComplex, VertexId};
use socioplex::dynamics::run;
use socioplex::homology::{betti_numbers, dimension_census, CoefficientMode};
use socioplex::io::{
    distribution_document, read_complex, read_schedule, read_table, to_json_pretty, write_complex,
    write_trace, ArtifactChecksum, RunManifest, TraceDocument,
};
use socioplex::leadership::{generate_hierarchical, hub_profile, is_hub, HubQuery};
use socioplex::random::{
    enumerate_distribution_with_cap, generate, RandomComplexConfig, DEFAULT_CHOICE_CAP,
};

#[derive(Parser)]
#[command(name = "socioplex", version, about = "Seeded simplicial complex toolkit")]
struct Cli {
    /// Seed for stochastic commands (default 0; evolve prefers the
    /// schedule's own seed over the default)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output here instead of stdout, plus a .manifest.json sidecar
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format (document commands always write JSON)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Gf2,
    Integer,
}

impl From<Mode> for CoefficientMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Gf2 => CoefficientMode::Gf2,
            Mode::Integer => CoefficientMode::Integer,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample one random complex with a constant acceptance probability
    Gen(GenArgs),
    /// Sample one random complex with per-tuple probabilities from a table
    GenHier(GenHierArgs),
    /// Enumerate the exact realization distribution (rational p only)
    Enumerate(EnumerateArgs),
    /// Run a schedule and emit the full evolution trace
    Evolve(EvolveArgs),
    /// Betti numbers of a stored complex
    Betti(BettiArgs),
    /// Per-component structure of a stored complex
    Census(InputArgs),
    /// Overlap classes at a given level
    Qcomp(QcompArgs),
    /// Flood a message between two vertices and report hops and rounds
    Diffuse(DiffuseArgs),
    /// Hub analysis over a probability table
    Hubs(HubsArgs),
    /// Tabular data for plotting (always TSV)
    EmitPlotData(PlotArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices")]
    n: u32,
    /// Highest simplex dimension the process attempts
    #[arg(short = 'N', long = "max-dim")]
    max_dim: usize,
    /// Acceptance probability ("0.3" or "3/10")
    #[arg(short = 'p', long = "probability")]
    p: String,
}

#[derive(Args)]
struct GenHierArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices")]
    n: u32,
    /// Probability table document
    #[arg(long)]
    table: PathBuf,
    /// Highest simplex dimension (defaults to the table's own bound)
    #[arg(short = 'N', long = "max-dim")]
    max_dim: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of vertices
    #[arg(short = 'n', long = "vertices")]
    n: u32,
    /// Highest simplex dimension the process attempts
    #[arg(short = 'N', long = "max-dim")]
    max_dim: usize,
    /// Acceptance probability as an exact rational ("1/2")
    #[arg(short = 'p', long = "probability")]
    p: String,
    /// Cap on the total number of accept/reject choices
    #[arg(long, default_value_t = DEFAULT_CHOICE_CAP)]
    cap: usize,
}

#[derive(Args)]
struct EvolveArgs {
    /// Schedule document
    #[arg(long)]
    schedule: PathBuf,
}

#[derive(Args)]
struct InputArgs {
    /// Complex document
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct BettiArgs {
    /// Complex document
    #[arg(long)]
    input: PathBuf,
    /// Coefficient ring
    #[arg(long, value_enum, default_value_t = Mode::Gf2)]
    mode: Mode,
}

#[derive(Args)]
struct QcompArgs {
    /// Complex document
    #[arg(long)]
    input: PathBuf,
    /// Overlap level q
    #[arg(short = 'q', long = "level")]
    q: usize,
}

#[derive(Args)]
struct DiffuseArgs {
    /// Complex document
    #[arg(long)]
    input: PathBuf,
    /// Vertex the message starts from
    #[arg(long)]
    source: u32,
    /// Vertex whose hop distance is reported
    #[arg(long)]
    target: u32,
    /// Messages only travel inside simplexes of at least this dimension
    #[arg(long, default_value_t = 1)]
    min_dim: usize,
}

#[derive(Args)]
struct HubsArgs {
    /// Probability table document
    #[arg(long)]
    table: PathBuf,
    /// Context size k
    #[arg(short = 'k', long = "context-size")]
    k: usize,
    /// Threshold t in percent; omit to report each vertex's best threshold
    #[arg(short = 't', long = "threshold")]
    t: Option<u8>,
    /// Restrict the question to one vertex (needs --threshold)
    #[arg(long)]
    vertex: Option<u32>,
    /// Universe 0..n
    #[arg(short = 'n', long = "vertices")]
    n: Option<u32>,
    /// Explicit universe, comma-separated ids
    #[arg(long, value_delimiter = ',')]
    universe: Option<Vec<u32>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKind {
    /// Newly reached vertices per diffusion round
    Rounds,
    /// Entry-by-exit hop matrix (-1 = unreachable)
    Probe,
    /// Size of each state along an evolution trace
    Growth,
}

#[derive(Args)]
struct PlotArgs {
    /// Complex document (rounds, probe) or trace document (growth)
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: PlotKind,
    /// Source vertex (rounds)
    #[arg(long)]
    source: Option<u32>,
    /// Entry vertices, comma-separated (probe)
    #[arg(long, value_delimiter = ',')]
    entries: Option<Vec<u32>>,
    /// Exit vertices, comma-separated (probe)
    #[arg(long, value_delimiter = ',')]
    exits: Option<Vec<u32>>,
    /// Channel dimension for rounds
    #[arg(long, default_value_t = 1)]
    min_dim: usize,
}

enum CliError {
    Core(socioplex::Error),
    Io(std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<socioplex::Error> for CliError {
    fn from(e: socioplex::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(socioplex::Error::TooManyChoices { .. }) => 2,
            _ => 1,
        }
    }
}

/// What a command produced: the output bytes plus the manifest fields.
struct Rendered {
    content: String,
    config: Value,
    seed: Option<u64>,
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => match dispatch(&cli) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            code
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let (name, rendered) = match &cli.command {
        Command::Gen(args) => ("gen", cmd_gen(cli, args)?),
        Command::GenHier(args) => ("gen-hier", cmd_gen_hier(cli, args)?),
        Command::Enumerate(args) => ("enumerate", cmd_enumerate(cli, args)?),
        Command::Evolve(args) => ("evolve", cmd_evolve(cli, args)?),
        Command::Betti(args) => ("betti", cmd_betti(cli, args)?),
        Command::Census(args) => ("census", cmd_census(cli, args)?),
        Command::Qcomp(args) => ("qcomp", cmd_qcomp(cli, args)?),
        Command::Diffuse(args) => ("diffuse", cmd_diffuse(cli, args)?),
        Command::Hubs(args) => ("hubs", cmd_hubs(cli, args)?),
        Command::EmitPlotData(args) => ("emit-plot-data", cmd_plot(cli, args)?),
    };
    emit(cli, name, rendered)
}

fn emit(cli: &Cli, command: &str, rendered: Rendered) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            fs::write(path, &rendered.content)?;
            let digest = Sha256::digest(rendered.content.as_bytes());
            let manifest = RunManifest {
                command: command.to_string(),
                config: rendered.config,
                seed: rendered.seed,
                artifacts: vec![ArtifactChecksum {
                    path: path.display().to_string(),
                    sha256: format!("{digest:x}"),
                }],
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            };
            let manifest_path = format!("{}.manifest.json", path.display());
            fs::write(manifest_path, to_json_pretty(&manifest))?;
        }
        None => print!("{}", rendered.content),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// argument plumbing
// ---------------------------------------------------------------------------

/// Accepts "1/2" style rationals and plain decimals.
fn parse_probability(text: &str) -> Result<f64, CliError> {
    if text.contains('/') {
        let r = parse_rational(text)?;
        return r
            .to_f64()
            .ok_or_else(|| CliError::Usage(format!("probability {text} does not fit in a float")));
    }
    text.trim()
        .parse::<f64>()
        .map_err(|_| CliError::Usage(format!("cannot parse probability {text:?}")))
}

/// Accepts only exact rationals: "1/2", "3/10", or a plain integer.
fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "{text:?} is not an exact rational; write it like 1/2 or 3/10"
        ))
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(CliError::Usage(format!("{text:?} divides by zero")));
    }
    Ok(BigRational::new(num, den))
}

fn report_format(cli: &Cli) -> Format {
    cli.format.unwrap_or(Format::Tsv)
}

/// Document commands ignore the report format but reject an explicit
/// request for TSV rather than surprise the caller.
fn require_json_output(cli: &Cli, command: &str) -> Result<(), CliError> {
    if cli.format == Some(Format::Tsv) {
        return Err(CliError::Usage(format!(
            "{command} writes JSON documents; --format tsv is not available here"
        )));
    }
    Ok(())
}

fn load_complex(path: &PathBuf) -> Result<SimplicialComplex, CliError> {
    Ok(read_complex(&fs::read_to_string(path)?)?)
}

// ---------------------------------------------------------------------------
// document commands
// ---------------------------------------------------------------------------

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<Rendered, CliError> {
    require_json_output(cli, "gen")?;
    let p = parse_probability(&args.p)?;
    let seed = cli.seed.unwrap_or(0);
    let cfg = RandomComplexConfig::new(args.n, args.max_dim, p, seed)?;
    let c = generate(&cfg)?;
    Ok(Rendered {
        content: write_complex(&c),
        config: json!({"n": args.n, "max_dim": args.max_dim, "p": args.p, "seed": seed}),
        seed: Some(seed),
    })
}

fn cmd_gen_hier(cli: &Cli, args: &GenHierArgs) -> Result<Rendered, CliError> {
    require_json_output(cli, "gen-hier")?;
    let table = read_table(&fs::read_to_string(&args.table)?)?;
    let max_dim = args.max_dim.unwrap_or_else(|| table.max_dim());
    let seed = cli.seed.unwrap_or(0);
    let c = generate_hierarchical(args.n, max_dim, &table, seed)?;
    Ok(Rendered {
        content: write_complex(&c),
        config: json!({
            "n": args.n,
            "max_dim": max_dim,
            "table": args.table.display().to_string(),
            "seed": seed,
        }),
        seed: Some(seed),
    })
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<Rendered, CliError> {
    require_json_output(cli, "enumerate")?;
    let p = parse_rational(&args.p)?;
    let dist = enumerate_distribution_with_cap(args.n, args.max_dim, &p, args.cap)?;
    let doc = distribution_document(args.n, args.max_dim, &p, &dist);
    Ok(Rendered {
        content: to_json_pretty(&doc),
        config: json!({"n": args.n, "max_dim": args.max_dim, "p": args.p, "cap": args.cap}),
        seed: None,
    })
}

fn cmd_evolve(cli: &Cli, args: &EvolveArgs) -> Result<Rendered, CliError> {
    require_json_output(cli, "evolve")?;
    let (mut sched, file_seed) = read_schedule(&fs::read_to_string(&args.schedule)?)?;
    let seed = cli.seed.or(file_seed).unwrap_or(0);
    sched.seed = seed;
    let trace = run(&sched)?;
    Ok(Rendered {
        content: write_trace(&trace, seed),
        config: json!({"schedule": args.schedule.display().to_string(), "seed": seed}),
        seed: Some(seed),
    })
}

// ---------------------------------------------------------------------------
// report commands
// ---------------------------------------------------------------------------

fn cmd_betti(cli: &Cli, args: &BettiArgs) -> Result<Rendered, CliError> {
    let c = load_complex(&args.input)?;
    let bv = betti_numbers(&c, args.mode.into());
    // one entry past the top dimension, which is always zero, so the
    // report shape never hides a dimension that simply has no cycles
    let len = (c.dimension() + 2).max(1) as usize;
    let padded: Vec<usize> = (0..len).map(|k| bv.get(k)).collect();
    let content = match report_format(cli) {
        Format::Tsv => {
            let words: Vec<String> = padded.iter().map(usize::to_string).collect();
            format!("{}\n", words.join(" "))
        }
        Format::Json => {
            let torsion: Option<Vec<Vec<String>>> = bv.torsion.as_ref().map(|per_dim| {
                per_dim
                    .iter()
                    .map(|factors| factors.iter().map(|f| f.to_string()).collect())
                    .collect()
            });
            to_json_pretty(&json!({"betti": padded, "torsion": torsion}))
        }
    };
    Ok(Rendered {
        content,
        config: json!({
            "input": args.input.display().to_string(),
            "mode": match args.mode { Mode::Gf2 => "gf2", Mode::Integer => "integer" },
        }),
        seed: None,
    })
}

fn cmd_census(cli: &Cli, args: &InputArgs) -> Result<Rendered, CliError> {
    let c = load_complex(&args.input)?;
    let census = dimension_census(&c);
    let content = match report_format(cli) {
        Format::Tsv => {
            let mut out = String::from("id\tvertices\tmax_dimension\tf_vector\n");
            for record in &census {
                let f: Vec<String> = record.f_vector.iter().map(usize::to_string).collect();
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    record.id,
                    record.vertex_count,
                    record.max_dimension,
                    f.join(",")
                ));
            }
            out
        }
        Format::Json => to_json_pretty(&census),
    };
    Ok(Rendered {
        content,
        config: json!({"input": args.input.display().to_string()}),
        seed: None,
    })
}

fn cmd_qcomp(cli: &Cli, args: &QcompArgs) -> Result<Rendered, CliError> {
    let c = load_complex(&args.input)?;
    let qc = q_components(&c, args.q);
    let content = match report_format(cli) {
        Format::Tsv => {
            let mut out = String::from("class\tsimplex\n");
            for (i, class) in qc.classes.iter().enumerate() {
                for s in class {
                    out.push_str(&format!("{i}\t{s}\n"));
                }
            }
            out
        }
        Format::Json => {
            let classes: Vec<Vec<Vec<u32>>> = qc
                .classes
                .iter()
                .map(|class| class.iter().map(|s| s.vertex_ids()).collect())
                .collect();
            to_json_pretty(&json!({"q": args.q, "classes": classes}))
        }
    };
    Ok(Rendered {
        content,
        config: json!({"input": args.input.display().to_string(), "q": args.q}),
        seed: None,
    })
}

fn cmd_diffuse(cli: &Cli, args: &DiffuseArgs) -> Result<Rendered, CliError> {
    let c = load_complex(&args.input)?;
    let report = diffusion_min_dim(&c, VertexId(args.source), VertexId(args.target), args.min_dim)?;
    let content = match report_format(cli) {
        Format::Tsv => match report.hop_count {
            Some(h) => format!("{h}\n"),
            None => "-1\n".to_string(),
        },
        Format::Json => to_json_pretty(&report),
    };
    Ok(Rendered {
        content,
        config: json!({
            "input": args.input.display().to_string(),
            "source": args.source,
            "target": args.target,
            "min_dim": args.min_dim,
        }),
        seed: None,
    })
}

fn cmd_hubs(cli: &Cli, args: &HubsArgs) -> Result<Rendered, CliError> {
    let table = read_table(&fs::read_to_string(&args.table)?)?;
    let universe: Vec<VertexId> = match (args.n, &args.universe) {
        (Some(n), None) => (0..n).map(VertexId).collect(),
        (None, Some(ids)) => ids.iter().copied().map(VertexId).collect(),
        _ => {
            return Err(CliError::Usage(
                "pass exactly one of -n or --universe".into(),
            ))
        }
    };
    let config = json!({
        "table": args.table.display().to_string(),
        "k": args.k,
        "t": args.t,
        "vertex": args.vertex,
        "universe": universe.iter().map(|v| v.id()).collect::<Vec<_>>(),
    });
    let content = match (args.t, args.vertex) {
        (None, Some(_)) => {
            return Err(CliError::Usage(
                "--vertex needs --threshold; without it use the full profile".into(),
            ))
        }
        (None, None) => {
            let profile = hub_profile(&table, &universe, args.k)?;
            match report_format(cli) {
                Format::Tsv => {
                    let mut out = String::from("vertex\tt_max\n");
                    for (v, t_max) in &profile {
                        let t: i32 = t_max.map(i32::from).unwrap_or(-1);
                        out.push_str(&format!("{v}\t{t}\n"));
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<Value> = profile
                        .iter()
                        .map(|(v, t_max)| json!({"vertex": v.id(), "t_max": t_max}))
                        .collect();
                    to_json_pretty(&rows)
                }
            }
        }
        (Some(t), Some(vertex)) => {
            let query = HubQuery { vertex: VertexId(vertex), k: args.k, t };
            let report = is_hub(&table, &universe, &query)?;
            match report_format(cli) {
                Format::Tsv => format!(
                    "vertex\tis_hub\tsubsets_per_rival\n{vertex}\t{}\t{}\n",
                    report.is_hub, report.subsets_per_rival
                ),
                Format::Json => to_json_pretty(&json!({
                    "vertex": vertex,
                    "t": t,
                    "is_hub": report.is_hub,
                    "subsets_per_rival": report.subsets_per_rival,
                    "rival_counts": report
                        .rival_counts
                        .iter()
                        .map(|(w, wins)| json!({"rival": w.id(), "wins": wins}))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        (Some(t), None) => {
            let reports: Vec<(VertexId, bool)> = universe
                .iter()
                .map(|&v| {
                    let query = HubQuery { vertex: v, k: args.k, t };
                    is_hub(&table, &universe, &query).map(|r| (v, r.is_hub))
                })
                .collect::<Result<_, _>>()?;
            match report_format(cli) {
                Format::Tsv => {
                    let mut out = String::from("vertex\tis_hub\n");
                    for (v, hub) in &reports {
                        out.push_str(&format!("{v}\t{hub}\n"));
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<Value> = reports
                        .iter()
                        .map(|(v, hub)| json!({"vertex": v.id(), "is_hub": hub}))
                        .collect();
                    to_json_pretty(&rows)
                }
            }
        }
    };
    Ok(Rendered { content, config, seed: None })
}

// ---------------------------------------------------------------------------
// plot data
// ---------------------------------------------------------------------------

fn cmd_plot(cli: &Cli, args: &PlotArgs) -> Result<Rendered, CliError> {
    if cli.format == Some(Format::Json) {
        return Err(CliError::Usage(
            "emit-plot-data always writes TSV; --format json is not available here".into(),
        ));
    }
    let content = match args.kind {
        PlotKind::Rounds => {
            let c = load_complex(&args.input)?;
            let source = args
                .source
                .ok_or_else(|| CliError::Usage("--kind rounds needs --source".into()))?;
            let source = VertexId(source);
            let report = diffusion_min_dim(&c, source, source, args.min_dim)?;
            let mut out = String::from("round\treached\n");
            for (i, count) in report.rounds.iter().enumerate() {
                out.push_str(&format!("{i}\t{count}\n"));
            }
            out
        }
        PlotKind::Probe => {
            let c = load_complex(&args.input)?;
            let entries: Vec<VertexId> = args
                .entries
                .as_ref()
                .filter(|list| !list.is_empty())
                .ok_or_else(|| CliError::Usage("--kind probe needs --entries".into()))?
                .iter()
                .copied()
                .map(VertexId)
                .collect();
            let exits: Vec<VertexId> = args
                .exits
                .as_ref()
                .filter(|list| !list.is_empty())
                .ok_or_else(|| CliError::Usage("--kind probe needs --exits".into()))?
                .iter()
                .copied()
                .map(VertexId)
                .collect();
            let matrix = probe_matrix(&c, &entries, &exits)?;
            let mut out = String::from("entry");
            for exit in &exits {
                out.push_str(&format!("\t{exit}"));
            }
            out.push('\n');
            for (entry, row) in entries.iter().zip(&matrix) {
                out.push_str(&entry.to_string());
                for hops in row {
                    let cell: i64 = hops.map(i64::from).unwrap_or(-1);
                    out.push_str(&format!("\t{cell}"));
                }
                out.push('\n');
            }
            out
        }
        PlotKind::Growth => {
            let doc: TraceDocument = serde_json::from_str(&fs::read_to_string(&args.input)?)
                .map_err(socioplex::Error::from)?;
            let mut out = String::from("t\tvertices\tsimplexes\tdimension\n");
            for (t, state) in doc.states.iter().enumerate() {
                let c = state.to_complex()?;
                out.push_str(&format!(
                    "{t}\t{}\t{}\t{}\n",
                    c.vertex_count(),
                    c.simplex_count(),
                    c.dimension()
                ));
            }
            out
        }
    };
    Ok(Rendered {
        content,
        config: json!({
            "input": args.input.display().to_string(),
            "kind": match args.kind {
                PlotKind::Rounds => "rounds",
                PlotKind::Probe => "probe",
                PlotKind::Growth => "growth",
            },
            "source": args.source,
            "entries": args.entries,
            "exits": args.exits,
            "min_dim": args.min_dim,
        }),
        seed: None,
    })
}
