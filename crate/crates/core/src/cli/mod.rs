//! Command-line front end. [`run`] parses arguments, executes one subcommand
//! and returns the rendered output; the `hvgrgs` binary only prints it.

pub mod output;
pub mod sample;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::exactnum::{bell, faulhaber_psi, NumberTables};
use crate::hvg::{Mode, VisibilityGraph};
use crate::moments::oracle::OracleTable;
use crate::moments::{classify_pair, EdgeEvent, EdgeModel};
use crate::rgs::{enumerate, format_word, parse_word, RestrictedGrowthSequence, SetPartition};
use crate::series::{p_k, q_moment_egf, sum_p};

use output::{Cell, Format, Report};
use sample::{exact_edges, expected_blocks, ExperimentConfig, Statistic};
use verify::VerifyConfig;

/// Exhaustive subcommands refuse `B_n` above this unless forced.
pub const BELL_GUARD: u64 = 10_000_000;
/// Largest accepted `--order` for series output.
pub const MAX_SERIES_ORDER: usize = 16;
/// Overrides the Bell-number guard with a plain bound on `n`.
pub const NMAX_ENV: &str = "HVGRGS_NMAX";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    /// 2 for bad input, 1 for a failed verification.
    pub code: i32,
    pub message: String,
    /// Anything already rendered before the failure.
    pub stdout: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
            stdout: String::new(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "hvgrgs",
    version,
    about = "Visibility graphs of random set partitions: exact edge statistics, series and sampling"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Render exact rationals as decimals with this many digits (ties to even).
    #[arg(long, global = true, value_name = "K")]
    pub decimal: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, short = 'o', global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Skip the enumeration size guard.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bell, Stirling and Bernoulli numbers, power sums and shifted Dobinski sums.
    Numbers(NumbersArgs),
    /// List restricted growth sequences of length n in lexicographic order.
    Enumerate(EnumerateArgs),
    /// Build the visibility graph of one sequence.
    Hvg(HvgArgs),
    /// Exact edge probabilities and expectations.
    Exact(ExactArgs),
    /// Truncated generating series.
    Series(SeriesArgs),
    /// Monte-Carlo experiments with Stam's sampler.
    Sample(SampleArgs),
    /// Certify every closed form against independent computations.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NumberKind {
    Bell,
    Stirling,
    Bernoulli,
    Theta,
    Psi,
}

#[derive(Debug, Args)]
pub struct NumbersArgs {
    #[arg(value_enum)]
    pub kind: NumberKind,
    #[arg(long)]
    pub n: usize,
    /// Single argument for theta/psi; default lists t = 0..=n.
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Restrict to exactly k blocks.
    #[arg(long)]
    pub k: Option<usize>,
    /// Print only the number of sequences.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["word", "partition"])))]
pub struct HvgArgs {
    /// Sequence such as 12122 or 1,2,10,3.
    #[arg(long)]
    pub word: Option<String>,
    /// Set partition such as {1,3}|{2}.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, default_value = "strong")]
    pub mode: Mode,
    /// List node degrees instead of edges.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(subcommand)]
    pub query: ExactQuery,
}

#[derive(Debug, Subcommand)]
pub enum ExactQuery {
    /// P((i, j) is an edge); mode strong, weak or weak-minus-strong.
    EdgeProb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value = "strong")]
        mode: EdgeEvent,
        /// Also count by exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// E(degree of node i).
    ExpectedDegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value = "strong")]
        mode: Mode,
    },
    /// E(number of edges).
    ExpectedEdges {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "strong")]
        mode: Mode,
    },
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(subcommand)]
    pub query: SeriesQuery,
}

#[derive(Debug, Subcommand)]
pub enum SeriesQuery {
    /// EGF coefficients c_n of B_n E(V_n), with E(V_n) = n! c_n / B_n.
    QMoments {
        #[arg(long)]
        order: usize,
    },
    /// Edge-count generating series of sequences with exactly k blocks.
    Pk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: usize,
    },
    /// Sum of P_k over all k.
    SumP {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Sequences,
    Stats,
    Histogram,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated: V, Vw, degree-histogram, block-count.
    #[arg(long, value_delimiter = ',', default_value = "V")]
    pub stats: Vec<Statistic>,
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Emit::Stats)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest n for the exhaustive checks.
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
    /// Permit max-n of 10 and above.
    #[arg(long)]
    pub slow: bool,
    /// Swap in a known-bad weak-minus-strong formula to show the suite catches it.
    #[arg(long)]
    pub mutate: bool,
}

/// Parses `args` (program name first) and runs the command, reading the
/// guard override from the environment.
pub fn run<I, T>(args: I) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let nmax = std::env::var(NMAX_ENV).ok();
    run_with_nmax(args, nmax.as_deref())
}

/// [`run`] with an explicit value for `HVGRGS_NMAX`.
pub fn run_with_nmax<I, T>(args: I, nmax: Option<&str>) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Ok(e.render().to_string());
            }
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            return Err(CliError::usage(
                first.trim_start_matches("error: ").to_string(),
            ));
        }
    };
    let guard = Guard {
        force: cli.force,
        nmax: nmax.map(parse_nmax).transpose()?,
    };
    let result = execute(&cli.command, &guard);
    let render = |r: &Report| r.render(cli.format, cli.decimal);
    let (text, failure) = match result {
        Ok(report) => (render(&report), None),
        Err(Failure::Usage(e)) => return Err(e),
        Err(Failure::Verify(report, message)) => (render(&report), Some(message)),
    };
    let stdout = match &cli.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            String::new()
        }
        None => text,
    };
    match failure {
        None => Ok(stdout),
        Some(message) => Err(CliError {
            code: 1,
            message,
            stdout,
        }),
    }
}

fn parse_nmax(s: &str) -> CliResult<usize> {
    s.trim().parse().map_err(|_| {
        CliError::usage(format!(
            "{NMAX_ENV} must be a non-negative integer, got {s:?}"
        ))
    })
}

enum Failure {
    Usage(CliError),
    Verify(Box<Report>, String),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

struct Guard {
    force: bool,
    nmax: Option<usize>,
}

impl Guard {
    fn check(&self, n: usize) -> CliResult<()> {
        if self.force {
            return Ok(());
        }
        if let Some(nmax) = self.nmax {
            if n > nmax {
                return Err(CliError::usage(format!(
                    "n = {n} exceeds {NMAX_ENV} = {nmax}; pass --force to override"
                )));
            }
            return Ok(());
        }
        let b = bell(n);
        if b.to_u64().is_none_or(|b| b > BELL_GUARD) {
            return Err(CliError::usage(format!(
                "B_{n} = {b} exceeds {BELL_GUARD} sequences; pass --force or set {NMAX_ENV}"
            )));
        }
        Ok(())
    }
}

fn positive(name: &str, v: usize) -> CliResult<()> {
    if v == 0 {
        return Err(CliError::usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn execute(cmd: &Command, guard: &Guard) -> Result<Report, Failure> {
    match cmd {
        Command::Numbers(a) => Ok(cmd_numbers(a)?),
        Command::Enumerate(a) => Ok(cmd_enumerate(a, guard)?),
        Command::Hvg(a) => Ok(cmd_hvg(a)?),
        Command::Exact(a) => Ok(cmd_exact(&a.query, guard)?),
        Command::Series(a) => Ok(cmd_series(&a.query)?),
        Command::Sample(a) => Ok(cmd_sample(a)?),
        Command::Verify(a) => cmd_verify(a, guard),
    }
}

fn big(x: impl Into<BigInt>) -> Cell {
    Cell::exact_int(x)
}

fn cmd_numbers(a: &NumbersArgs) -> CliResult<Report> {
    let n = a.n;
    let tables = NumberTables::shared(n + 1);
    let ts: Vec<u64> = match a.t {
        Some(t) => vec![t],
        None => (0..=n as u64).collect(),
    };
    let rep = match a.kind {
        NumberKind::Bell => {
            let mut r = Report::new(&["n", "bell"]);
            for m in 0..=n {
                r.push(vec![Cell::Index(m as u64), big(tables.bell(m).clone())]);
            }
            r
        }
        NumberKind::Stirling => {
            let mut r = Report::new(&["n", "k", "stirling2"]);
            for k in 0..=n {
                r.push(vec![
                    Cell::Index(n as u64),
                    Cell::Index(k as u64),
                    big(tables.stirling2(n, k)),
                ]);
            }
            r
        }
        NumberKind::Bernoulli => {
            let mut r = Report::new(&["l", "bernoulli"]);
            for l in 0..=n {
                r.push(vec![
                    Cell::Index(l as u64),
                    Cell::Exact(tables.bernoulli_plus(l).clone()),
                ]);
            }
            r
        }
        NumberKind::Theta => {
            let mut r = Report::new(&["n", "t", "theta"]);
            for t in ts {
                r.push(vec![
                    Cell::Index(n as u64),
                    Cell::Index(t),
                    big(tables.theta(n, t)),
                ]);
            }
            r
        }
        NumberKind::Psi => {
            positive("n", n)?;
            let mut r = Report::new(&["n", "t", "psi"]);
            for t in ts {
                r.push(vec![
                    Cell::Index(n as u64),
                    Cell::Index(t),
                    big(faulhaber_psi(n, t)),
                ]);
            }
            r
        }
    };
    Ok(rep)
}

fn cmd_enumerate(a: &EnumerateArgs, guard: &Guard) -> CliResult<Report> {
    positive("n", a.n)?;
    if let Some(k) = a.k {
        if k == 0 || k > a.n {
            return Err(CliError::usage(format!(
                "k must be in 1..={}, got {k}",
                a.n
            )));
        }
    }
    guard.check(a.n)?;
    if a.count {
        let mut r = Report::new(&["n", "k", "count"]);
        let count = enumerate(a.n, a.k).count() as u64;
        let k = a.k.map_or(Cell::Empty, |k| Cell::Index(k as u64));
        r.push(vec![Cell::Index(a.n as u64), k, Cell::Index(count)]);
        return Ok(r);
    }
    let mut r = Report::new(&["rgs", "blocks", "partition"]);
    enumerate(a.n, a.k).for_each_word(|w| {
        let s = RestrictedGrowthSequence::parse(w).expect("enumerated word");
        r.push(vec![
            Cell::text(s.to_string()),
            Cell::Index(s.block_count() as u64),
            Cell::text(s.to_partition().to_string()),
        ]);
    });
    Ok(r)
}

fn cmd_hvg(a: &HvgArgs) -> CliResult<Report> {
    let word: Vec<u32> = match (&a.word, &a.partition) {
        (Some(w), _) => parse_word(w)?,
        (None, Some(p)) => {
            let p: SetPartition = p.parse()?;
            RestrictedGrowthSequence::from_partition(&p)?.into_inner()
        }
        (None, None) => unreachable!("clap enforces one input"),
    };
    if word.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    let g = VisibilityGraph::build(&word, a.mode);
    if a.degrees {
        let mut r = Report::new(&["node", "degree"]);
        for (k, d) in g.degrees().iter().enumerate() {
            r.push(vec![Cell::Index(k as u64 + 1), Cell::Index(*d as u64)]);
        }
        return Ok(r);
    }
    let mut r = Report::new(&["i", "j"]);
    for &(i, j) in g.edges() {
        r.push(vec![Cell::Index(i as u64), Cell::Index(j as u64)]);
    }
    Ok(r.with_document(g.to_json()))
}

fn cmd_exact(q: &ExactQuery, guard: &Guard) -> CliResult<Report> {
    match *q {
        ExactQuery::EdgeProb {
            n,
            i,
            j,
            mode,
            oracle,
        } => {
            let class = classify_pair(n, i, j)?;
            let p = EdgeModel::new(n).edge_prob(i, j, mode)?;
            let mut cols = vec!["n", "i", "j", "mode", "class", "exact"];
            let mut row = vec![
                Cell::Index(n as u64),
                Cell::Index(i as u64),
                Cell::Index(j as u64),
                Cell::text(mode.as_str()),
                Cell::text(class.to_string()),
                Cell::Exact(p.value),
            ];
            if oracle {
                guard.check(n)?;
                let t = OracleTable::build(n, u64::MAX)?;
                cols.push("oracle");
                row.push(Cell::Exact(t.edge_prob(i, j, mode)?.value));
            }
            let mut r = Report::new(&cols);
            r.push(row);
            Ok(r)
        }
        ExactQuery::ExpectedDegree { n, i, mode } => {
            positive("n", n)?;
            let d = EdgeModel::new(n).expected_degree(i, mode)?;
            let mut r = Report::new(&["n", "i", "mode", "exact"]);
            r.push(vec![
                Cell::Index(n as u64),
                Cell::Index(i as u64),
                Cell::text(mode.as_str()),
                Cell::Exact(d),
            ]);
            Ok(r)
        }
        ExactQuery::ExpectedEdges { n, mode } => {
            positive("n", n)?;
            let e = EdgeModel::new(n).expected_edges(mode);
            let mut r = Report::new(&["n", "mode", "exact"]);
            r.push(vec![
                Cell::Index(n as u64),
                Cell::text(mode.as_str()),
                Cell::Exact(e),
            ]);
            Ok(r)
        }
    }
}

fn check_order(order: usize) -> CliResult<()> {
    if order == 0 || order > MAX_SERIES_ORDER {
        return Err(CliError::usage(format!(
            "order must be in 1..={MAX_SERIES_ORDER}, got {order}"
        )));
    }
    Ok(())
}

fn cmd_series(q: &SeriesQuery) -> CliResult<Report> {
    match *q {
        SeriesQuery::QMoments { order } => {
            check_order(order)?;
            let mut r = Report::new(&["n", "c_n", "expected_edges"]);
            let tables = NumberTables::shared(order);
            for (n, c) in q_moment_egf(order) {
                let fact: BigInt = (2..=n).map(BigInt::from).product();
                let ev = &c * BigRational::new(fact, BigInt::from(tables.bell(n).clone()));
                r.push(vec![Cell::Index(n as u64), Cell::Exact(c), Cell::Exact(ev)]);
            }
            Ok(r)
        }
        SeriesQuery::Pk { k, order } => {
            check_order(order)?;
            positive("k", k)?;
            Ok(series_report(p_k(k, order)))
        }
        SeriesQuery::SumP { order } => {
            check_order(order)?;
            Ok(series_report(sum_p(order)))
        }
    }
}

fn series_report(s: crate::series::TruncatedBivariateSeries) -> Report {
    let mut r = Report::new(&["x", "coefficient"]);
    for (n, p) in s.coeffs().iter().enumerate() {
        r.push(vec![Cell::Index(n as u64), Cell::text(p.to_string())]);
    }
    r.with_document(s.to_json())
}

fn cmd_sample(a: &SampleArgs) -> CliResult<Report> {
    let workers = match a.workers {
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |w| w.get()),
    };
    let mut statistics = a.stats.clone();
    statistics.dedup();
    let cfg = ExperimentConfig {
        n: a.n,
        samples: a.samples,
        seed: a.seed,
        statistics,
        workers,
    };
    cfg.validate()?;
    match a.emit {
        Emit::Sequences => {
            let mut r = Report::new(&["rgs"]);
            for w in cfg.sequences()? {
                r.push(vec![Cell::text(format_word(&w))]);
            }
            r.bare = true;
            Ok(r)
        }
        Emit::Stats => {
            let tally = cfg.run()?;
            let exact = if cfg
                .statistics
                .iter()
                .any(|s| matches!(s, Statistic::V | Statistic::Vw))
            {
                exact_edges(cfg.n)
            } else {
                None
            };
            let mut r = Report::new(&["statistic", "exact", "estimate", "stderr", "samples"]);
            let samples = Cell::Index(tally.samples());
            let est = |m: &sample::Moments| {
                (
                    Cell::Float(m.mean()),
                    m.stderr().map_or(Cell::Empty, Cell::Float),
                )
            };
            for s in &cfg.statistics {
                match s {
                    Statistic::V | Statistic::Vw | Statistic::BlockCount => {
                        let (m, ex) = match s {
                            Statistic::V => (&tally.v, exact.as_ref().map(|e| e.0.clone())),
                            Statistic::Vw => (&tally.vw, exact.as_ref().map(|e| e.1.clone())),
                            _ => (&tally.blocks, Some(expected_blocks(cfg.n))),
                        };
                        let (e, se) = est(m);
                        r.push(vec![
                            Cell::text(s.as_str()),
                            ex.map_or(Cell::Empty, Cell::Exact),
                            e,
                            se,
                            samples.clone(),
                        ]);
                    }
                    Statistic::DegreeHistogram => {
                        for (d, m) in tally.degree.iter().enumerate() {
                            if m.sum == 0 {
                                continue;
                            }
                            let (e, se) = est(m);
                            r.push(vec![
                                Cell::text(format!("nodes-of-degree-{d}")),
                                Cell::Empty,
                                e,
                                se,
                                samples.clone(),
                            ]);
                        }
                    }
                }
            }
            Ok(r)
        }
        Emit::Histogram => {
            let tally = cfg.run()?;
            let mut r = Report::new(&["statistic", "value", "count"]);
            for s in &cfg.statistics {
                let rows: Vec<(u64, u64)> = match s {
                    Statistic::V => tally.v_hist.iter().map(|(a, b)| (*a, *b)).collect(),
                    Statistic::Vw => tally.vw_hist.iter().map(|(a, b)| (*a, *b)).collect(),
                    Statistic::BlockCount => {
                        tally.block_hist.iter().map(|(a, b)| (*a, *b)).collect()
                    }
                    Statistic::DegreeHistogram => tally
                        .degree
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| m.sum > 0)
                        .map(|(d, m)| (d as u64, m.sum as u64))
                        .collect(),
                };
                for (value, count) in rows {
                    r.push(vec![
                        Cell::text(s.as_str()),
                        Cell::Index(value),
                        Cell::Index(count),
                    ]);
                }
            }
            Ok(r)
        }
    }
}

fn cmd_verify(a: &VerifyArgs, guard: &Guard) -> Result<Report, Failure> {
    positive("max-n", a.max_n)?;
    if a.max_n >= 10 && !a.slow {
        return Err(CliError::usage("max-n of 10 or more needs --slow").into());
    }
    guard.check(a.max_n)?;
    let results = verify::run_checks(&VerifyConfig {
        max_n: a.max_n,
        mutate: a.mutate,
    });
    let mut r = Report::new(&["check", "status", "cases", "detail"]);
    for c in &results {
        r.push(vec![
            Cell::text(c.name),
            Cell::text(if c.passed() { "PASS" } else { "FAIL" }),
            Cell::Index(c.cases),
            Cell::text(c.failure.clone().unwrap_or_default()),
        ]);
    }
    match results.iter().find(|c| !c.passed()) {
        None => Ok(r),
        Some(c) => {
            let msg = format!(
                "check {} failed: {}",
                c.name,
                c.failure.as_deref().unwrap_or("")
            );
            Err(Failure::Verify(Box::new(r), msg))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> String {
        let mut v = vec!["hvgrgs"];
        v.extend_from_slice(args);
        run_with_nmax(v, None).unwrap()
    }

    fn err(args: &[&str]) -> CliError {
        let mut v = vec!["hvgrgs"];
        v.extend_from_slice(args);
        run_with_nmax(v, None).unwrap_err()
    }

    #[test]
    fn exact_values() {
        assert!(out(&["exact", "edge-prob", "--n", "4", "--i", "2", "--j", "4"]).contains("2/15"));
        assert!(out(&["exact", "expected-edges", "--n", "4"]).contains("47/15"));
    }

    #[test]
    fn bad_pair_is_usage_error() {
        let e = err(&["exact", "edge-prob", "--n", "4", "--i", "3", "--j", "2"]);
        assert_eq!(e.code, 2);
        assert!(!e.message.contains('\n'));
    }

    #[test]
    fn guard_uses_env_bound() {
        let args = ["hvgrgs", "enumerate", "--n", "5", "--count"];
        assert!(run_with_nmax(args, Some("4")).is_err());
        assert!(run_with_nmax(args, Some("5")).is_ok());
        assert_eq!(run_with_nmax(args, Some("x")).unwrap_err().code, 2);
    }
}
