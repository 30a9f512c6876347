//! `triperm`: counting, series, classification, formulas, forests and the
//! verification suite from the command line.
//!
//! Tables go to standard output as CSV with a header row, or as one JSON
//! object per line with `--json`. Diagnostics go to standard error.
//! Exit codes: 0 success, 1 a requested check failed, 2 usage error,
//! 3 capacity exceeded.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{Map, Value};

use triperm::enumerate::{avoiders_of, count_avoiders_of, DEFAULT_CAPACITY};
use triperm::forest::{self, RuleSystem};
use triperm::verify::{self, VerificationReport, VerifyConfig};
use triperm::{cases, catalog, formulas, symmetry, Error, Perm};

#[derive(Parser, Debug)]
#[command(name = "triperm", version, about = "Permutations avoiding three patterns of length four")]
struct Cli {
    /// One JSON object per line instead of CSV.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Comma-separated patterns, e.g. 1234,1243,3412.
    #[arg(long, conflicts_with = "case")]
    patterns: Option<String>,
    /// A named case id.
    #[arg(long)]
    case: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of avoiders of each length 0..=n.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAPACITY)]
        capacity: usize,
    },
    /// The avoiders of length n in lexicographic order.
    List {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAPACITY)]
        capacity: usize,
    },
    /// Coefficients of a case's generating function or of a named auxiliary series.
    Series {
        #[arg(long)]
        case: u32,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = triperm::DEFAULT_ORDER)]
        order: usize,
    },
    /// Symmetry classes and, unless `--sym`, the Wilf census up to n.
    Classify {
        /// Only count symmetry classes.
        #[arg(long)]
        sym: bool,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Values of a formula family for all lengths up to n.
    Formula {
        #[arg(long)]
        case: u32,
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Level sizes of a generating forest, or a check of its rules.
    Forest {
        #[arg(long)]
        case: u32,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Runs the verification suite.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        case: Option<u32>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = triperm::DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_CAPACITY)]
        capacity: usize,
    },
}

/// Writes rows either as CSV under one header or as JSON lines.
struct Table<W: Write> {
    json: bool,
    cols: Vec<&'static str>,
    out: W,
}

enum Cell {
    Int(BigInt),
    Text(String),
    Bool(bool),
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v.into())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v.into())
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // Integers beyond 64 bits are written as strings to stay exact.
            Cell::Int(v) => i64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::from(v.to_string())),
            Cell::Bool(b) => Value::from(*b),
            Cell::Text(s) => Value::from(s.clone()),
        }
    }
}

impl<W: Write> Table<W> {
    fn new(json: bool, cols: &[&'static str], mut out: W) -> io::Result<Self> {
        if !json {
            writeln!(out, "{}", cols.join(","))?;
        }
        Ok(Table { json, cols: cols.to_vec(), out })
    }

    fn row(&mut self, cells: Vec<Cell>) -> io::Result<()> {
        debug_assert_eq!(cells.len(), self.cols.len());
        if self.json {
            let obj: Map<String, Value> = self.cols.iter().zip(&cells).map(|(k, c)| (k.to_string(), c.json())).collect();
            writeln!(self.out, "{}", Value::Object(obj))
        } else {
            writeln!(self.out, "{}", cells.iter().map(Cell::csv).collect::<Vec<_>>().join(","))
        }
    }
}

macro_rules! row {
    ($t:expr, $($c:expr),+ $(,)?) => { $t.row(vec![$(Cell::from($c)),+]) };
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn patterns_of(source: &Source) -> Result<Vec<Perm>, Failure> {
    match (&source.patterns, source.case) {
        (Some(list), None) => {
            let pats = list.split(',').map(|s| s.trim().parse::<Perm>()).collect::<Result<Vec<_>, _>>()?;
            if pats.is_empty() || pats.iter().any(|p| p.is_empty()) {
                return Err(Failure::Usage("empty pattern list".into()));
            }
            Ok(pats)
        }
        (None, Some(case)) => Ok(cases::named_triple(case).ok_or(Error::UnknownCase(case))?.patterns.to_vec()),
        _ => Err(Failure::Usage("give either --patterns or --case".into())),
    }
}

fn report_rows<W: Write>(report: &VerificationReport, t: &mut Table<W>) -> io::Result<()> {
    for e in &report.entries {
        let case = e.case_id.map_or(String::new(), |c| c.to_string());
        let status = if e.passed { "pass" } else { "fail" };
        row!(t, e.id.as_str(), case, e.n_range.0, e.n_range.1, status, e.witness.clone().unwrap_or_default())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = io::stdout().lock();
    let json = cli.json;
    match cli.command {
        Command::Count { source, n, capacity } => {
            let counts = count_avoiders_of(&patterns_of(&source)?, n, capacity)?;
            let mut t = Table::new(json, &["n", "count"], out)?;
            for (i, c) in counts.into_iter().enumerate() {
                row!(t, i, c)?;
            }
        }
        Command::List { source, n, capacity } => {
            let list = avoiders_of(&patterns_of(&source)?, n, capacity)?;
            let mut t = Table::new(json, &["permutation"], out)?;
            for p in list {
                row!(t, p.to_string())?;
            }
        }
        Command::Series { case, name, order } => {
            let s = match &name {
                Some(name) => catalog::intermediate_gf(case, name, order)?,
                None => catalog::gf_catalog(case, order)?,
            };
            let mut t = Table::new(json, &["n", "coefficient"], out)?;
            for (i, c) in s.to_integers()?.into_iter().enumerate() {
                row!(t, i, c)?;
            }
        }
        Command::Classify { sym, n } => {
            let classes = symmetry::symmetry_classes();
            if sym {
                let mut t = Table::new(json, &["key", "value"], out)?;
                row!(t, "symmetry_classes", classes.len())?;
                return Ok(());
            }
            let groups = symmetry::wilf_group(&classes, n, symmetry::dfs_counter)?;
            let mut index_of = std::collections::BTreeMap::new();
            for g in &groups {
                for &m in &g.members {
                    index_of.insert(m, g.index);
                }
            }
            let mut t = Table::new(json, &["class", "canonical", "orbit_size", "wilf_index", "case"], out)?;
            for c in &classes {
                let case = c.case_id().map_or(String::new(), |v| v.to_string());
                row!(t, c.id as usize, c.representative.to_string(), c.orbit.len(), index_of[&c.id] as usize, case)?;
            }
            eprintln!("{} symmetry classes, {} Wilf classes through length {n}", classes.len(), groups.len());
        }
        Command::Formula { case, name, n } => {
            let spec = formulas::family(case, &name)?;
            let mut cols: Vec<&'static str> = spec.params.to_vec();
            cols.push("value");
            let mut t = Table::new(json, &cols, out)?;
            for len in 0..=n {
                for args in formulas::param_space(spec, len) {
                    let v = formulas::evaluate(case, &name, &args)?;
                    let mut cells: Vec<Cell> = args.into_iter().map(Cell::from).collect();
                    cells.push(v.into());
                    t.row(cells)?;
                }
            }
        }
        Command::Forest { case, n, verify } => {
            let sys = RuleSystem::for_case(case)?;
            if verify {
                let r = forest::verify_rules(&sys, n)?;
                let mut t = Table::new(json, &["system", "n_max", "nodes_checked", "status", "witness", "detail"], out)?;
                let status = if r.passed() { "pass" } else { "fail" };
                if r.failures.is_empty() {
                    row!(t, r.system.as_str(), r.n_max, r.nodes_checked, status, "", "")?;
                }
                for f in &r.failures {
                    row!(t, r.system.as_str(), r.n_max, r.nodes_checked, status, f.witness.as_str(), f.detail.as_str())?;
                }
                if !r.passed() {
                    return Err(Failure::ChecksFailed);
                }
            } else {
                let levels = forest::level_counts(&sys, n.max(2))?;
                let mut t = Table::new(json, &["n", "total"], out)?;
                for (i, c) in levels.into_iter().enumerate().skip(2).take(n.saturating_sub(1)) {
                    row!(t, i, BigInt::from(c))?;
                }
            }
        }
        Command::Verify { case, all, n, order, capacity } => {
            let cfg = VerifyConfig { n_max: n, order, capacity };
            let report = match (case, all) {
                (Some(c), false) => verify::run_case(c, &cfg)?,
                _ => verify::run_all(&cfg),
            };
            let mut t = Table::new(json, &["check", "case", "n_min", "n_max", "status", "witness"], out)?;
            report_rows(&report, &mut t)?;
            let failed = report.failures().count();
            eprintln!("{} checks, {} failed", report.entries.len(), failed);
            if all {
                let uncovered = report.uncovered_ops();
                if !uncovered.is_empty() {
                    eprintln!("operations not exercised: {}", uncovered.join(", "));
                    return Err(Failure::ChecksFailed);
                }
            }
            if failed > 0 {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = match &f {
                Failure::ChecksFailed => 1,
                Failure::Usage(_) => 2,
                Failure::Lib(Error::Capacity { .. }) => 3,
                Failure::Lib(Error::Parse(_) | Error::UnknownCase(_) | Error::UnknownName { .. } | Error::Precondition(_)) => 2,
                Failure::Lib(_) | Failure::Io(_) => 1,
            };
            match f {
                Failure::ChecksFailed => {}
                Failure::Usage(m) => eprintln!("usage error: {m}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
