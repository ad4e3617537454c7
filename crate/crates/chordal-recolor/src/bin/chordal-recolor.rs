use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chordal_recolor::engine::{transform, EngineConfig, EngineError};
use chordal_recolor::generators::{gen_coloring, generate, GenError, GenSpec, Model};
use chordal_recolor::graph_core::{load_graph, Graph};
use chordal_recolor::io::{parse_coloring, parse_sequence, write_sequence, SequenceMeta};
use chordal_recolor::oracle::{self, OracleAnswer, OracleError, OracleMode, DEFAULT_STATE_CAP};
use chordal_recolor::verifier::verify_sequence;

/// Recolor chordal graphs between proper colorings with few single-vertex changes.
#[derive(Parser)]
#[command(name = "chordal-recolor", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a recoloring sequence from one coloring to another.
    Recolor {
        /// Graph JSON file: {"n": .., "edges": [[u, v], ..]}.
        #[arg(long)]
        graph: PathBuf,
        /// Start coloring, a JSON array of colors in 1..=k.
        #[arg(long)]
        from: PathBuf,
        /// Target coloring.
        #[arg(long)]
        to: PathBuf,
        /// Number of available colors, at least omega + 3.
        #[arg(long)]
        k: usize,
        /// Output file for the JSON lines sequence.
        #[arg(long)]
        out: PathBuf,
        /// Print length, maxPerVertex, omega, delta and wall time.
        #[arg(long)]
        stats: bool,
    },
    /// Replay a sequence and check every intermediate coloring.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        start: PathBuf,
        /// Sequence file as written by `recolor`.
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        end: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exact answers by search over all proper colorings (small graphs only).
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Start coloring, for distance mode.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Target coloring, for distance mode.
        #[arg(long)]
        to: Option<PathBuf>,
        /// Largest number of proper colorings to enumerate.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Generate a seeded chordal graph.
    Gen {
        #[arg(long)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        seed: u64,
        /// Graph JSON output; metadata goes to the same path with `.meta.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Time `transform` over several sizes and print CSV rows.
    Bench {
        #[arg(long)]
        model: Model,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        repeats: u64,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Connected,
    Distance,
    Diameter,
}

struct Fail {
    code: u8,
    msg: String,
}

impl Fail {
    fn domain(msg: impl ToString) -> Self {
        Fail { code: 1, msg: msg.to_string() }
    }

    fn io(msg: impl ToString) -> Self {
        Fail { code: 2, msg: msg.to_string() }
    }
}

impl From<EngineError> for Fail {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Internal(_) => Fail { code: 3, msg: e.to_string() },
            _ => Fail::domain(e),
        }
    }
}

impl From<OracleError> for Fail {
    fn from(e: OracleError) -> Self {
        Fail::domain(e)
    }
}

impl From<GenError> for Fail {
    fn from(e: GenError) -> Self {
        Fail::domain(e)
    }
}

type Res<T = ()> = Result<T, Fail>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Fail::io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res {
    fs::write(path, text).map_err(|e| Fail::io(format!("{}: {e}", path.display())))
}

fn graph(path: &Path) -> Res<Graph> {
    load_graph(&read(path)?).map_err(|e| Fail::io(format!("{}: {e}", path.display())))
}

fn coloring(path: &Path) -> Res<Vec<u32>> {
    parse_coloring(&read(path)?).map_err(|e| Fail::io(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializes")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Cmd) -> Res<u8> {
    let cfg = EngineConfig::from_env();
    match cmd {
        Cmd::Recolor { graph: gp, from, to, k, out, stats } => {
            let g = graph(&gp)?;
            let (c1, c2) = (coloring(&from)?, coloring(&to)?);
            let t0 = Instant::now();
            let r = transform(&g, &c1, &c2, k, cfg)?;
            let millis = t0.elapsed().as_secs_f64() * 1e3;
            let meta = SequenceMeta {
                length: r.report.length,
                max_per_vertex: r.report.max_per_vertex,
                omega: r.report.omega,
                delta: r.report.delta,
                k,
            };
            write(&out, &write_sequence(&r.steps, &meta))?;
            if stats {
                println!(
                    "length={} maxPerVertex={} omega={} delta={} millis={millis:.1}",
                    meta.length, meta.max_per_vertex, meta.omega, meta.delta
                );
            }
            Ok(0)
        }
        Cmd::Verify { graph: gp, start, seq, end, k } => {
            let g = graph(&gp)?;
            let (c1, c2) = (coloring(&start)?, coloring(&end)?);
            let (steps, _) = parse_sequence(&read(&seq)?)
                .map_err(|e| Fail::io(format!("{}: {e}", seq.display())))?;
            let report = verify_sequence(&g, &c1, &steps, &c2, k);
            println!("{}", json(&report));
            Ok(if report.ok { 0 } else { 1 })
        }
        Cmd::Oracle { graph: gp, k, mode, from, to, cap } => {
            let g = graph(&gp)?;
            let answer = match mode {
                Mode::Connected => OracleAnswer {
                    mode: OracleMode::Connected,
                    value: oracle::reconfig_connected(&g, k, cap)?.into(),
                },
                Mode::Diameter => OracleAnswer {
                    mode: OracleMode::Diameter,
                    value: oracle::reconfig_diameter(&g, k, cap)?.into(),
                },
                Mode::Distance => {
                    let (Some(from), Some(to)) = (from, to) else {
                        return Err(Fail::io("distance mode needs --from and --to"));
                    };
                    let d = oracle::bfs_distance(&g, &coloring(&from)?, &coloring(&to)?, k, cap)?;
                    OracleAnswer {
                        mode: OracleMode::Distance,
                        value: d.into(),
                    }
                }
            };
            println!("{}", json(&answer));
            Ok(0)
        }
        Cmd::Gen { model, n, omega, max_degree, seed, out } => {
            let (g, meta) = generate(&GenSpec { model, n, omega, max_degree, seed })?;
            write(&out, &g.to_json())?;
            write(&out.with_extension("meta.json"), &json(&meta))?;
            Ok(0)
        }
        Cmd::Bench { model, sizes, omega, max_degree, k, repeats, out } => {
            bench(model, &sizes, omega, max_degree, k, repeats, out.as_deref(), cfg)
        }
    }
}

#[derive(Serialize)]
struct Row {
    n: usize,
    repeat: u64,
    length: usize,
    length_per_n: f64,
    #[serde(rename = "maxPerVertex")]
    max_per_vertex: u32,
    millis: f64,
}

#[allow(clippy::too_many_arguments)]
fn bench(
    model: Model,
    sizes: &[usize],
    omega: usize,
    max_degree: usize,
    k: usize,
    repeats: u64,
    out: Option<&Path>,
    cfg: EngineConfig,
) -> Res<u8> {
    let mut rows = Vec::new();
    for &n in sizes {
        for repeat in 0..repeats {
            let seed = repeat;
            let (g, _) = generate(&GenSpec { model, n, omega, max_degree, seed })?;
            let c1 = gen_coloring(&g, k, 2 * seed)?;
            let c2 = gen_coloring(&g, k, 2 * seed + 1)?;
            let t0 = Instant::now();
            let r = transform(&g, &c1, &c2, k, cfg)?;
            let millis = t0.elapsed().as_secs_f64() * 1e3;
            rows.push(Row {
                n,
                repeat,
                length: r.report.length,
                length_per_n: r.report.length as f64 / n.max(1) as f64,
                max_per_vertex: r.report.max_per_vertex,
                millis,
            });
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row).map_err(Fail::io)?;
    }
    let text = String::from_utf8(w.into_inner().map_err(Fail::io)?).expect("csv is utf-8");
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    let mpv: Vec<u32> = rows.iter().map(|r| r.max_per_vertex).collect();
    let lpn: Vec<f64> = rows.iter().map(|r| r.length_per_n).collect();
    let mean = lpn.iter().sum::<f64>() / lpn.len().max(1) as f64;
    let spread = lpn.iter().map(|x| (x - mean).abs() / mean).fold(0.0, f64::max);
    let same_mpv = mpv.windows(2).all(|w| w[0] == w[1]);
    let stable = same_mpv && spread <= 0.10;
    eprintln!(
        "maxPerVertex {} across sizes; length/n within {:.1}% of its mean: {}",
        if same_mpv { "identical" } else { "varies" },
        spread * 100.0,
        if stable { "stable" } else { "unstable" }
    );
    Ok(if stable { 0 } else { 1 })
}
