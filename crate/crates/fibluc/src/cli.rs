//! `fibluc` subcommands. [`run`] is the whole program minus the process
//! boundary, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use fibluc_core::idlang::{evaluate, parse, parse_expr, Binding, CheckError, EvalError, ParseError, Ranges};
use fibluc_core::identities::IdentityError;
use fibluc_core::report::{CheckReport, Status};
use fibluc_core::sequence::seq_prefix;
use fibluc_core::{seq, Rat, RingValue, SeqKind};
use num_traits::Zero;

use crate::corpus::{check_entries, Corpus, CorpusError, DEFAULT_CORPUS};
use crate::{json, runner};

/// Exact Fibonacci/Lucas polynomial algebra and identity checking.
#[derive(Debug, Parser)]
#[command(name = "fibluc", version)]
pub struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_n or L_n, optionally with substituted arguments or at a point.
    Eval(EvalArgs),
    /// Check the built-in identity catalog on an index grid.
    Catalog(CatalogArgs),
    /// Check an identity-language statement, or the corpus, on an index grid.
    Verify(VerifyArgs),
    /// Print the first terms of a numeric specialization.
    Sequence(SequenceArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// F or L.
    pub kind: SeqKind,
    pub n: u32,
    /// Expression substituted for x.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Expression substituted for y.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Evaluate at the rational point X,Y.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub at: Option<String>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    #[arg(long, default_value_t = 6)]
    pub k_max: u32,
    /// Comma-separated catalog ids, e.g. EQ11,EQ15.
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity such as "y*F[n-1] + F[n+1] = L[n]".
    #[arg(required_unless_present_any = ["corpus", "corpus_file"], conflicts_with_all = ["corpus", "corpus_file"])]
    pub identity: Option<String>,
    /// Inclusive index ranges, e.g. n=0..10,k=1..6.
    #[arg(long, default_value = "n=0..10,k=1..6")]
    pub range: String,
    /// Check the built-in corpus instead of a single identity.
    #[arg(long)]
    pub corpus: bool,
    /// Check the corpus read from this file.
    #[arg(long, value_name = "PATH")]
    pub corpus_file: Option<PathBuf>,
    /// Restrict a corpus run to these comma-separated ids.
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// F or L.
    pub kind: SeqKind,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub y: String,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub count: u32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error in {what}: {source}")]
    Parse { what: &'static str, source: ParseError },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (program name first) and runs the selected subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    execute(&cli).unwrap_or_else(|e| Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Eval(a) => cmd_eval(a, cli.json).map(Outcome::ok),
        Command::Catalog(a) => cmd_catalog(a, cli.json),
        Command::Verify(a) => cmd_verify(a, cli.json),
        Command::Sequence(a) => cmd_sequence(a, cli.json).map(Outcome::ok),
    }
}

fn substitution(text: Option<&str>, default: RingValue, what: &'static str) -> Result<RingValue, CliError> {
    match text {
        None => Ok(default),
        Some(t) => {
            let expr = parse_expr(t).map_err(|source| CliError::Parse { what, source })?;
            Ok(evaluate(&expr, &Binding::new())?)
        }
    }
}

fn rational(text: &str, what: &str) -> Result<Rat, CliError> {
    Rat::from_str(text.trim()).map_err(|_| CliError::Usage(format!("{what}: `{text}` is not a rational number")))
}

fn point(text: &str) -> Result<(Rat, Rat), CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--at expects X,Y, found `{text}`")))?;
    Ok((rational(a, "--at")?, rational(b, "--at")?))
}

pub fn cmd_eval(a: &EvalArgs, as_json: bool) -> Result<String, CliError> {
    let xs = substitution(a.x.as_deref(), RingValue::x(), "--x")?;
    let ys = substitution(a.y.as_deref(), RingValue::y(), "--y")?;
    let value = seq(a.kind, a.n, &xs, &ys);
    let text = match &a.at {
        None => value.to_string(),
        Some(p) => {
            let (x0, y0) = point(p)?;
            let (re, im) = value.parts();
            let (re, im) = (re.eval(&x0, &y0), im.eval(&x0, &y0));
            if im.is_zero() {
                re.to_string()
            } else {
                format!("({re}) + ({im})*D")
            }
        }
    };
    Ok(if as_json {
        let doc = serde_json::json!({ "kind": a.kind.letter().to_string(), "n": a.n, "value": text });
        format!("{doc}\n")
    } else {
        format!("{text}\n")
    })
}

pub fn cmd_catalog(a: &CatalogArgs, as_json: bool) -> Result<Outcome, CliError> {
    let ids: Vec<&str> = a.ids.iter().map(String::as_str).collect();
    let filter = (!ids.is_empty()).then_some(ids.as_slice());
    let report = runner::run_catalog(a.n_max, a.k_max, filter)?;
    Ok(report_outcome(&report, as_json))
}

/// Parses `n=a..b,k=c..d` over the defaults `n=0..10`, `k=1..6`.
pub fn parse_ranges(text: &str) -> Result<Ranges, CliError> {
    let mut ranges: Ranges = [("n".to_string(), (0, 10)), ("k".to_string(), (1, 6))]
        .into_iter()
        .collect();
    let bad = |part: &str| CliError::Usage(format!("bad range `{part}`, expected VAR=LO..HI"));
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (var, span) = part.split_once('=').ok_or_else(|| bad(part))?;
        let (lo, hi) = span.split_once("..").ok_or_else(|| bad(part))?;
        let lo: u32 = lo.trim().parse().map_err(|_| bad(part))?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad(part))?;
        let var = var.trim();
        if var != "n" && var != "k" {
            return Err(CliError::Usage(format!("unknown index variable `{var}`")));
        }
        if lo > hi {
            return Err(CliError::Usage(format!("empty range `{part}`")));
        }
        ranges.insert(var.to_string(), (lo, hi));
    }
    Ok(ranges)
}

pub fn cmd_verify(a: &VerifyArgs, as_json: bool) -> Result<Outcome, CliError> {
    let ranges = parse_ranges(&a.range)?;
    let report = match &a.identity {
        Some(src) => {
            let identity = parse(src).map_err(|source| CliError::Parse {
                what: "identity",
                source,
            })?;
            runner::check_identity(&identity, &ranges, "user")?
        }
        None => {
            let text = match &a.corpus_file {
                Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?,
                None => DEFAULT_CORPUS.to_string(),
            };
            let corpus = Corpus::parse(&text)?;
            let ids: Vec<&str> = a.ids.iter().map(String::as_str).collect();
            let entries = corpus.select((!ids.is_empty()).then_some(ids.as_slice()))?;
            check_entries(&entries, &ranges)?
        }
    };
    Ok(report_outcome(&report, as_json))
}

/// Exit 0 when every cell passes, 2 if any cell hit an evaluation error,
/// otherwise 1 with the first counterexample.
fn report_outcome(report: &CheckReport, as_json: bool) -> Outcome {
    let mut stdout = if as_json {
        json::to_json(report) + "\n"
    } else {
        report.to_text()
    };
    let mut stderr = String::new();
    let code = if report.count(Status::Error) > 0 {
        let first = report.records.iter().find(|r| r.status == Status::Error).unwrap();
        let _ = writeln!(
            stderr,
            "error: {} at {}: {}",
            first.id,
            first.indices(),
            first.note.as_deref().unwrap_or("evaluation error")
        );
        2
    } else if let Some(first) = report.first_failure() {
        let line = format!(
            "counterexample: {} at {}: lhs = {}, rhs = {}\n",
            first.id,
            first.indices(),
            first.lhs.as_deref().unwrap_or("?"),
            first.rhs.as_deref().unwrap_or("?")
        );
        if as_json {
            stderr.push_str(&line);
        } else {
            stdout.push_str(&line);
        }
        1
    } else {
        0
    };
    Outcome { code, stdout, stderr }
}

pub fn cmd_sequence(a: &SequenceArgs, as_json: bool) -> Result<String, CliError> {
    let x0 = rational(&a.x, "--x")?;
    let y0 = rational(&a.y, "--y")?;
    let terms: Vec<String> = seq_prefix(a.kind, a.count as usize, &x0, &y0)
        .iter()
        .map(Rat::to_string)
        .collect();
    Ok(if as_json {
        serde_json::to_string(&terms).expect("strings serialize") + "\n"
    } else {
        terms.iter().map(|t| format!("{t}\n")).collect()
    })
}
