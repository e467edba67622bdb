//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::error::Error;
use crate::fan::{FanDims, PivotMove, SpanningTree};
use crate::greedy::GreedyRun;
use crate::oracle::{self, PivotGrayChecker};
use crate::rank::{self, Ranker};
use crate::recursive::{self, list_stream, Direction};

#[derive(Debug, Parser)]
#[command(name = "fan-pivot", version, about = "Pivot Gray code listing of the spanning trees of fan graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of spanning trees of F_n
    Count { n: usize },
    /// Print every spanning tree of F_n, one per line
    Generate {
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = Engine::Recursive)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
        /// Start tree as an edge list (greedy engine only)
        #[arg(long)]
        start: Option<String>,
    },
    /// Print the 1-indexed position of a tree in the listing
    Rank {
        n: usize,
        tree: String,
        /// Position within the reversed listing instead
        #[arg(long)]
        reverse: bool,
    },
    /// Print the tree at a 1-indexed position of the listing
    Unrank {
        n: usize,
        rank: String,
        /// Index into the reversed listing instead
        #[arg(long)]
        reverse: bool,
    },
    /// Check listing properties against brute force
    Verify {
        n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Check::ALL)]
        checks: Vec<Check>,
    },
    /// Time the recursive engine and check its structural bounds
    Bench { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated edge list
    Edges,
    /// Bit string in canonical edge order
    Bits,
    /// Initial tree, then one `pivot u: -v +w` line per move
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Recursive,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gray,
    Exhaustive,
    Reverse,
    Engines,
    Rank,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Gray,
        Check::Exhaustive,
        Check::Reverse,
        Check::Engines,
        Check::Rank,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Gray => "gray",
            Check::Exhaustive => "exhaustive",
            Check::Reverse => "reverse",
            Check::Engines => "engines",
            Check::Rank => "rank",
        }
    }

    /// Checks whose cost is exponential in memory or brute force.
    fn is_capped(self) -> bool {
        matches!(self, Check::Exhaustive | Check::Reverse | Check::Engines)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code as u8;
        }
    };
    let result = execute(&cli.command, out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one command, returning whether every check passed.
pub fn execute(command: &Command, out: &mut impl Write) -> Result<bool, CliError> {
    match command {
        Command::Count { n } => cmd_count(out, dims(*n)?).map(|_| true),
        Command::Generate {
            n,
            format,
            engine,
            direction,
            start,
        } => cmd_generate(out, dims(*n)?, *format, *engine, *direction, start.as_deref()).map(|_| true),
        Command::Rank { n, tree, reverse } => cmd_rank(out, dims(*n)?, tree, *reverse).map(|_| true),
        Command::Unrank { n, rank, reverse } => {
            cmd_unrank(out, dims(*n)?, rank, *reverse).map(|_| true)
        }
        Command::Verify { n, checks } => cmd_verify(out, dims(*n)?, checks),
        Command::Bench { n } => cmd_bench(out, dims(*n)?),
    }
}

fn dims(n: usize) -> Result<FanDims, CliError> {
    Ok(FanDims::new(n)?)
}

pub fn cmd_count(out: &mut impl Write, dims: FanDims) -> Result<(), CliError> {
    writeln!(out, "{}", rank::count(dims))?;
    Ok(())
}

fn write_event(
    out: &mut impl Write,
    format: OutputFormat,
    mv: Option<PivotMove>,
    tree: &SpanningTree,
) -> io::Result<()> {
    match (format, mv) {
        (OutputFormat::Edges, _) | (OutputFormat::Delta, None) => writeln!(out, "{tree}"),
        (OutputFormat::Bits, _) => writeln!(out, "{}", tree.to_bits()),
        (OutputFormat::Delta, Some(m)) => writeln!(out, "{m}"),
    }
}

pub fn cmd_generate(
    out: &mut impl Write,
    dims: FanDims,
    format: OutputFormat,
    engine: Engine,
    direction: DirectionArg,
    start: Option<&str>,
) -> Result<(), CliError> {
    match engine {
        Engine::Recursive => {
            if start.is_some() {
                return Err(CliError::Usage("--start requires --engine greedy".into()));
            }
            let direction = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Reverse => Direction::Reverse,
            };
            let mut stream = list_stream(dims, direction);
            while let Some(mv) = stream.next() {
                write_event(out, format, mv, stream.tree())?;
            }
        }
        Engine::Greedy => {
            if direction == DirectionArg::Reverse {
                return Err(CliError::Usage(
                    "--direction reverse requires --engine recursive".into(),
                ));
            }
            let start = match start {
                Some(s) => SpanningTree::parse_text(dims, s)?,
                None => SpanningTree::path(dims),
            };
            for (mv, tree) in GreedyRun::new(start)? {
                write_event(out, format, mv, &tree)?;
            }
        }
    }
    Ok(())
}

/// Rebuilds a listing from `delta` output.
pub fn replay_delta<'a>(
    dims: FanDims,
    lines: impl IntoIterator<Item = &'a str>,
) -> Result<Vec<SpanningTree>, Error> {
    let mut lines = lines.into_iter().filter(|l| !l.trim().is_empty());
    let Some(first) = lines.next() else {
        return Ok(Vec::new());
    };
    let mut current = SpanningTree::parse_text(dims, first)?;
    let mut out = vec![current.clone()];
    for line in lines {
        current.pivot(line.parse()?)?;
        if !current.is_spanning_tree() {
            return Err(Error::NotATree(dims.n()));
        }
        out.push(current.clone());
    }
    Ok(out)
}

pub fn cmd_rank(out: &mut impl Write, dims: FanDims, tree: &str, reverse: bool) -> Result<(), CliError> {
    let ranker = Ranker::new(dims);
    let tree = SpanningTree::parse_text(dims, tree)?;
    let mut r = ranker.rank(&tree)?;
    if reverse {
        r = ranker.count() + 1u32 - r;
    }
    writeln!(out, "{r}")?;
    Ok(())
}

pub fn cmd_unrank(out: &mut impl Write, dims: FanDims, r: &str, reverse: bool) -> Result<(), CliError> {
    let ranker = Ranker::new(dims);
    let mut r: BigUint = r
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid rank {r:?}")))?;
    if reverse {
        let total = ranker.count();
        if r == BigUint::ZERO || r > total {
            return Err(Error::RankOutOfRange { max: total.to_string() }.into());
        }
        r = total + 1u32 - r;
    }
    writeln!(out, "{}", ranker.unrank(&r)?)?;
    Ok(())
}

pub fn cmd_verify(out: &mut impl Write, dims: FanDims, checks: &[Check]) -> Result<bool, CliError> {
    if checks.iter().any(|c| c.is_capped()) && dims.n() > oracle::DEFAULT_CAP {
        return Err(Error::CapExceeded {
            n: dims.n(),
            cap: oracle::DEFAULT_CAP,
        }
        .into());
    }
    let mut all_ok = true;
    for &check in checks {
        let (ok, detail) = match check {
            Check::Gray => {
                let mut checker = PivotGrayChecker::default();
                let mut stream = list_stream(dims, Direction::Forward);
                while stream.next().is_some() {
                    checker.push(stream.tree());
                }
                let detail = match checker.first_violation() {
                    None => format!("{} trees", checker.length()),
                    Some(i) => format!("violation at index {i}"),
                };
                (checker.is_gray(), detail)
            }
            Check::Exhaustive => {
                let listing: Vec<_> = list_stream(dims, Direction::Forward)
                    .snapshots()
                    .map(|(_, t)| t)
                    .collect();
                let report = oracle::check_exhaustive(dims, &listing)?;
                let detail = format!(
                    "{} trees, {} duplicates",
                    report.length,
                    report.duplicates.len()
                );
                (report.is_exhaustive, detail)
            }
            Check::Reverse => (oracle::check_reversal(dims)?, String::new()),
            Check::Engines => (oracle::check_engines_agree(dims)?, String::new()),
            Check::Rank => (
                oracle::check_rank_bijection(dims)?,
                format!("{} ranks", rank::count(dims)),
            ),
        };
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        if detail.is_empty() {
            writeln!(out, "{}: {verdict}", check.name())?;
        } else {
            writeln!(out, "{}: {verdict} ({detail})", check.name())?;
        }
    }
    Ok(all_ok)
}

/// Instrumented run of the recursive engine.
#[derive(Clone, Debug)]
pub struct BenchReport {
    pub stats: recursive::EngineStats,
    pub count: BigUint,
    pub elapsed: Duration,
}

impl BenchReport {
    pub fn nanos_per_tree(&self) -> f64 {
        self.elapsed.as_nanos() as f64 / self.stats.trees.max(1) as f64
    }

    /// Moves are `t_n - 1`, activations at most `2 t_n`, depth at most `n`.
    pub fn bounds_hold(&self, dims: FanDims) -> bool {
        let moves_ok = BigUint::from(self.stats.moves) + 1u32 == self.count;
        let activations_ok = BigUint::from(self.stats.activations) <= &self.count * 2u32;
        moves_ok && activations_ok && self.stats.max_depth <= dims.n()
    }
}

pub fn bench(dims: FanDims) -> BenchReport {
    let count = rank::count(dims);
    let started = Instant::now();
    let stats = recursive::list(dims, &mut |_: Option<PivotMove>, t: &SpanningTree| {
        black_box(t);
    });
    BenchReport {
        stats,
        count,
        elapsed: started.elapsed(),
    }
}

pub fn cmd_bench(out: &mut impl Write, dims: FanDims) -> Result<bool, CliError> {
    let report = bench(dims);
    let s = report.stats;
    let secs = report.elapsed.as_secs_f64();
    writeln!(out, "n: {}", dims.n())?;
    writeln!(out, "trees: {}", s.trees)?;
    writeln!(out, "moves: {}", s.moves)?;
    writeln!(out, "activations: {} (bound {})", s.activations, &report.count * 2u32)?;
    writeln!(out, "max depth: {} (bound {})", s.max_depth, dims.n())?;
    writeln!(out, "elapsed: {secs:.3} s")?;
    if secs > 0.0 {
        writeln!(out, "throughput: {:.0} trees/s", s.trees as f64 / secs)?;
    }
    writeln!(out, "cost: {:.2} ns/tree", report.nanos_per_tree())?;
    let ok = report.bounds_hold(dims);
    writeln!(out, "bounds: {}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}
