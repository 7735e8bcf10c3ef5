use std::fs;
use std::io::{self, Read, Write};
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use weylcode::experiments::{self, ExperimentReport};
use weylcode::graph::{self, ExplicitGraph, GraphPath, GraphRecord, YoungGraph};
use weylcode::prefix::PrefixRecord;
use weylcode::rng::substream;
use weylcode::rsk::{self, RealTableau, StandardTableau, TableauRecord};
use weylcode::triangular::{self, CodeRecord};
use weylcode::{RealPrefix, Shape, TriCode};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<weylcode::Error> for CliError {
    fn from(e: weylcode::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(format!("i/o error: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "weylcode",
    version,
    about = "Sequential-rank codes of uniform sequences, their transfer, RSK and graded-graph paths."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Read from this file instead of standard input.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode reals into a code record. Accepts a whitespace-separated
    /// stream of decimals, or JSONL prefix records.
    Encode {
        /// Keep only the first n values.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        io: Io,
    },
    /// Apply the transfer to each code record.
    Transfer {
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Estimate the leading coordinates from each code record.
    Reconstruct {
        /// Number of coordinates to estimate (defaults to the code length).
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        io: Io,
    },
    /// Row-insert reals into a pair of tableaux, or invert a pair.
    Rsk {
        #[arg(long)]
        n: Option<usize>,
        /// Read {"p":..,"q":..} records and write the prefix they encode.
        #[arg(long, conflicts_with = "n")]
        inverse: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Apply promotion to each standard tableau record.
    Promote {
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Apply the involution transfer to {"path": [...]} records.
    GraphTransfer {
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Explicit graph in {"levels":..,"covers":..} form; Young's lattice otherwise.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Draw seeded samples: uniform codes, or Plancherel shapes.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, value_enum)]
        measure: Option<Measure>,
    },
    /// Run a seeded experiment and write its report.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Measure {
    Plancherel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExperimentName {
    Distinguishability,
    Uniformity,
    Entropy,
    RskSeparation,
    PStabilization,
    Plancherel,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    name: ExperimentName,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Directory for <name>-<seed>.csv and .json; CSV goes to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct RskRecord<P, Q> {
    p: P,
    q: Q,
}

#[derive(Serialize, Deserialize)]
struct PathRecord<V> {
    path: Vec<V>,
}

#[derive(Serialize)]
struct ShapeRecord {
    n: usize,
    shape: Shape,
}

fn read_input(io: &Io) -> CliResult<String> {
    match &io.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            io::stdin().lock().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn json_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_line<'a, T: Deserialize<'a>>(lineno: usize, line: &'a str) -> CliResult<T> {
    serde_json::from_str(line).map_err(|e| CliError::Data(format!("line {lineno}: {e}")))
}

/// Prefixes from either JSONL records or a single stream of decimals.
fn read_prefixes(text: &str) -> CliResult<Vec<RealPrefix>> {
    if text.trim_start().starts_with('{') {
        return json_lines(text)
            .map(|(no, line)| {
                let rec: PrefixRecord = parse_line(no, line)?;
                RealPrefix::try_from(rec).map_err(|e| CliError::Data(format!("line {no}: {e}")))
            })
            .collect();
    }
    let values = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| CliError::Data(format!("not a decimal number: {tok:?}")))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    Ok(vec![RealPrefix::new(values)?])
}

fn truncate(x: RealPrefix, n: Option<usize>) -> CliResult<RealPrefix> {
    match n {
        Some(n) => Ok(x.truncate(n)?),
        None => Ok(x),
    }
}

fn emit<W: Write, T: Serialize>(out: &mut W, value: &T) -> CliResult<()> {
    let line = serde_json::to_string(value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn ensure(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Internal(what.to_string()))
    }
}

fn encode(n: Option<usize>, io: &Io, out: &mut impl Write) -> CliResult<()> {
    for x in read_prefixes(&read_input(io)?)? {
        let x = truncate(x, n)?;
        let code = triangular::encode_prefix(&x);
        ensure(
            triangular::tricode_to_ranks(&code).as_slice() == x.ranks().as_slice(),
            "code does not decode to the input ranks",
        )?;
        emit(out, &CodeRecord::from(code))?;
    }
    Ok(())
}

fn for_each_line<T, U, F>(io: &Io, out: &mut impl Write, mut f: F) -> CliResult<()>
where
    T: for<'a> Deserialize<'a>,
    U: Serialize,
    F: FnMut(T) -> CliResult<U>,
{
    let text = read_input(io)?;
    for (no, line) in json_lines(&text) {
        let record: T = parse_line(no, line)?;
        let result = f(record).map_err(|e| match e {
            CliError::Data(msg) => CliError::Data(format!("line {no}: {msg}")),
            other => other,
        })?;
        emit(out, &result)?;
    }
    Ok(())
}

fn transfer(steps: usize, io: &Io, out: &mut impl Write) -> CliResult<()> {
    for_each_line(io, out, |mut code: TriCode| {
        for _ in 0..steps {
            code = triangular::transfer(&code)?;
        }
        Ok(CodeRecord::from(code))
    })
}

fn reconstruct(m: Option<usize>, io: &Io, out: &mut impl Write) -> CliResult<()> {
    for_each_line(io, out, |code: TriCode| {
        let m = m.unwrap_or(code.len());
        let x = triangular::reconstruct_prefix(&code, m)?;
        Ok(PrefixRecord { n: x.len(), x })
    })
}

fn rsk_forward(n: Option<usize>, io: &Io, out: &mut impl Write) -> CliResult<()> {
    for x in read_prefixes(&read_input(io)?)? {
        let x = truncate(x, n)?;
        let (p, q) = rsk::rsk_word(&x);
        let back = rsk::rsk_inverse(&p, &q)?;
        ensure(back == x, "inverse insertion does not recover the input")?;
        emit(out, &RskRecord { p, q })?;
    }
    Ok(())
}

fn rsk_backward(io: &Io, out: &mut impl Write) -> CliResult<()> {
    for_each_line(io, out, |rec: RskRecord<RealTableau, StandardTableau>| {
        let x = rsk::rsk_inverse(&rec.p, &rec.q)?;
        Ok(PrefixRecord::from(x))
    })
}

fn promote(steps: usize, io: &Io, out: &mut impl Write) -> CliResult<()> {
    for_each_line(io, out, |mut q: StandardTableau| {
        for _ in 0..steps {
            let before = q.shape();
            q = rsk::promotion(&q)?;
            ensure(
                q.size() + 1 == before.size() && before.contains(&q.shape()),
                "promotion did not remove exactly one cell",
            )?;
        }
        Ok(TableauRecord::from(&q))
    })
}

fn transfer_path<G: graph::GradedGraph>(
    graph: &G,
    vertices: Vec<G::Vertex>,
    steps: usize,
) -> CliResult<Vec<G::Vertex>> {
    let mut path = GraphPath::new(graph, vertices)?;
    for _ in 0..steps {
        path = graph::graph_transfer(graph, &path)?;
    }
    Ok(path.into_vertices())
}

fn graph_transfer(
    steps: usize,
    graph_file: Option<&PathBuf>,
    io: &Io,
    out: &mut impl Write,
) -> CliResult<()> {
    match graph_file {
        None => for_each_line(io, out, |rec: PathRecord<Shape>| {
            let depth = rec.path.len().saturating_sub(1);
            let path = transfer_path(&YoungGraph::new(depth), rec.path, steps)?;
            Ok(PathRecord { path })
        }),
        Some(file) => {
            let text = fs::read_to_string(file)
                .map_err(|e| CliError::Data(format!("cannot read {}: {e}", file.display())))?;
            let rec: GraphRecord<String> = serde_json::from_str(&text)
                .map_err(|e| CliError::Data(format!("{}: {e}", file.display())))?;
            let g = ExplicitGraph::try_from(rec)?;
            for_each_line(io, out, |rec: PathRecord<String>| {
                let path = transfer_path(&g, rec.path, steps)?;
                Ok(PathRecord { path })
            })
        }
    }
}

fn sample(
    n: usize,
    seed: u64,
    samples: usize,
    measure: Option<Measure>,
    out: &mut impl Write,
) -> CliResult<()> {
    let mut rng = substream(seed, 0);
    for _ in 0..samples {
        match measure {
            None => emit(
                out,
                &CodeRecord::from(triangular::sample_tricode_with(n, &mut rng)),
            )?,
            Some(Measure::Plancherel) => {
                let shape = rsk::plancherel_sample_with(n, &mut rng);
                emit(out, &ShapeRecord { n, shape })?
            }
        }
    }
    Ok(())
}

fn run_experiment(args: &ExperimentArgs) -> CliResult<ExperimentReport> {
    use ExperimentName::*;
    let seed = match (args.name, args.seed) {
        (Entropy, s) => s.unwrap_or(0),
        (_, Some(s)) => s,
        (_, None) => {
            return Err(CliError::Usage(
                "this experiment is randomized and requires --seed".into(),
            ))
        }
    };
    let report = match args.name {
        Distinguishability => experiments::run_distinguishability(
            args.n.unwrap_or(10_000),
            args.trials.unwrap_or(100),
            seed,
        )?,
        Uniformity => experiments::run_uniformity(
            args.n.unwrap_or(20),
            args.samples.unwrap_or(100_000),
            seed,
        )?,
        Entropy => experiments::run_entropy_curve(args.n.unwrap_or(1_000))?,
        RskSeparation => experiments::run_rsk_separation(
            args.n.unwrap_or(50),
            args.trials.unwrap_or(1_000),
            seed,
        )?,
        PStabilization => experiments::run_p_stabilization(
            args.n.unwrap_or(10_000),
            args.trials.unwrap_or(50),
            seed,
        )?,
        Plancherel => experiments::run_plancherel_fit(
            args.n.unwrap_or(4),
            args.samples.unwrap_or(100_000),
            seed,
        )?,
    };
    Ok(report)
}

fn experiment(args: &ExperimentArgs, out: &mut impl Write) -> CliResult<()> {
    let report = run_experiment(args)?;
    match &args.out {
        None => out.write_all(report.to_csv().as_bytes())?,
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let stem = report.file_stem();
            let csv = dir.join(format!("{stem}.csv"));
            let json = dir.join(format!("{stem}.json"));
            fs::write(&csv, report.to_csv())?;
            fs::write(&json, report.to_json())?;
            eprintln!("wrote {} and {}", csv.display(), json.display());
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> CliResult<()> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Encode { n, io } => encode(*n, io, &mut out)?,
        Command::Transfer { steps, io } => transfer(*steps, io, &mut out)?,
        Command::Reconstruct { m, io } => reconstruct(*m, io, &mut out)?,
        Command::Rsk { n, inverse, io } => {
            if *inverse {
                rsk_backward(io, &mut out)?
            } else {
                rsk_forward(*n, io, &mut out)?
            }
        }
        Command::Promote { steps, io } => promote(*steps, io, &mut out)?,
        Command::GraphTransfer { steps, graph, io } => {
            graph_transfer(*steps, graph.as_ref(), io, &mut out)?
        }
        Command::Sample {
            n,
            seed,
            samples,
            measure,
        } => sample(*n, *seed, *samples, *measure, &mut out)?,
        Command::Experiment(args) => experiment(args, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("weylcode: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(3),
    }
}
