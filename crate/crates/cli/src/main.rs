//! `qpb`: tables, single values, verification suites, the Sylvester-matrix
//! conjecture harness and OEIS cross-checks.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qpolyber::families::FamilyId;
use qpolyber::objects::{MAX_PERM_MATRIX_CELLS, MAX_PERM_MATRIX_COLS};
use qpolyber::verify::{self, Bounds, CheckReport, DEFAULT_SYLVESTER_BOUND};
use qpolyber::Error;
use qpolyber_oeis::{OeisClient, OeisError, OeisId, Reader};

const CONVENTIONS: &str = "\
Conventions:
  n and k are table coordinates starting at 0. Indices inside objects
  (matrix rows and columns, permutation entries, partition elements) are
  1-based.
  k-sign: for classical_negk, c_relative, ordered_q, lonesum_q,
  vesztergombi_q and permmatrix_q, k >= 0 names the superscript -k. For
  classical_anyk, cenkci_q and at_q, k is the signed superscript itself.
  Polynomials in q print in ascending powers; JSON output is exact, with
  big numbers as decimal strings.";

/// Largest `--max-n` / `--max-k` accepted by `table` and `eval`.
const TABLE_LIMIT: usize = 30;
/// Suites enumerate boards and permutations, so they stop much earlier.
const VERIFY_LIMIT: usize = 8;

#[derive(Parser)]
#[command(name = "qpb", version, about = "Exact q-analogues of poly-Bernoulli numbers", after_help = CONVENTIONS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the (n, k) grid of a family.
    #[command(after_help = CONVENTIONS)]
    Table {
        /// classical_negk, classical_anyk, c_relative, ordered_q, lonesum_q,
        /// vesztergombi_q, permmatrix_q, cenkci_q or at_q.
        #[arg(long)]
        family: FamilyId,
        /// Rows n = 0..=max-n.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Columns k = 0..=max-k; signed families run k = -max-k..=max-k.
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print one value, optionally evaluated at a rational q.
    #[command(after_help = CONVENTIONS)]
    Eval {
        /// classical_negk, classical_anyk, c_relative, ordered_q, lonesum_q,
        /// vesztergombi_q, permmatrix_q, cenkci_q or at_q.
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: usize,
        /// Superscript; see the k-sign convention below.
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Rational sample such as 2/3 or -1.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<BigRational>,
        #[arg(long, value_enum, default_value_t = EvalFormat::Text)]
        format: EvalFormat,
    },
    /// Run an identity suite; one JSON report per line.
    #[command(after_help = CONVENTIONS)]
    Verify {
        /// q1-collapse, oracles, rook-laws, cross-formula, gf,
        /// akiyama-tanigawa, cenkci-comb, conjecture or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Check pB_{n,2}(q) = (1+q) W_n(-q) for n = 2..=max-n.
    #[command(after_help = CONVENTIONS)]
    Conjecture {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Cross-check the classical table against an OEIS sequence.
    #[command(after_help = CONVENTIONS)]
    Oeis {
        #[arg(long, default_value = "A099594")]
        id: String,
        /// Use only the cache and the bundled fixtures.
        #[arg(long)]
        offline: bool,
        /// Flattening order; defaults to the fixture's recorded reader.
        #[arg(long)]
        reader: Option<Reader>,
        /// Number of leading terms compared.
        #[arg(long, default_value_t = 21)]
        bound: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFormat {
    Text,
    Json,
}

/// Exit status: 1 on a failing check or runtime error, 2 on bad flags,
/// 3 on size limits.
enum Failure {
    Checks,
    Flags(String),
    Size(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeTooLarge(_) | Error::DimensionTooLarge { .. } | Error::OutOfRange(_) => Failure::Size(e.to_string()),
            Error::Parse(_) | Error::InvalidConfig(_) | Error::UnknownSuite(_) | Error::ZeroQ => {
                Failure::Flags(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::MalformedId(_) => Failure::Flags(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Checks => (1, "one or more checks failed".to_string()),
                Failure::Runtime(m) => (1, m),
                Failure::Flags(m) => (2, m),
                Failure::Size(m) => (3, m),
            };
            eprintln!("qpb: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match command {
        Command::Table { family, max_n, max_k, format } => {
            check_table_size(family, max_n, max_k)?;
            let table = render::Table::compute(family, max_n, max_k)?;
            table.write(&mut out, format)?;
        }
        Command::Eval { family, n, k, q, format } => {
            if !family.signed_k() && k < 0 {
                return Err(Failure::Flags(format!("{family} takes k >= 0 (it names the superscript -k)")));
            }
            if n > TABLE_LIMIT || k.unsigned_abs() as usize > TABLE_LIMIT {
                return Err(Failure::Size(format!("n and |k| are limited to {TABLE_LIMIT}")));
            }
            if family == FamilyId::PermmatrixQ {
                check_table_size(family, n, k as usize)?;
            }
            let value = family.value(n, k)?;
            match (q, format) {
                (Some(q), EvalFormat::Text) => writeln!(out, "{}", value.eval(&q)?)?,
                (Some(q), EvalFormat::Json) => {
                    let v = value.eval(&q)?;
                    writeln!(out, "{}", serde_json::json!({ "family": family.name(), "n": n, "k": k, "q": q.to_string(), "value": v.to_string() }))?
                }
                (None, EvalFormat::Text) => writeln!(out, "{value}")?,
                (None, EvalFormat::Json) => {
                    writeln!(out, "{}", serde_json::json!({ "family": family.name(), "n": n, "k": k, "value": value }))?
                }
            }
        }
        Command::Verify { suite, max_n, max_k } => {
            if max_n > VERIFY_LIMIT || max_k > VERIFY_LIMIT {
                return Err(Failure::Size(format!("--max-n and --max-k are limited to {VERIFY_LIMIT} for verify")));
            }
            let reports = verify::run_suite(&suite, Bounds { max_n, max_k })?;
            emit(&mut out, &reports)?;
        }
        Command::Conjecture { max_n } => {
            if max_n < 2 {
                return Err(Failure::Flags("--max-n must be at least 2".into()));
            }
            if max_n > DEFAULT_SYLVESTER_BOUND {
                return Err(Failure::Size(format!("--max-n is limited to {DEFAULT_SYLVESTER_BOUND}")));
            }
            let reports = (2..=max_n).map(verify::sylvester_conjecture).collect::<Result<Vec<_>, _>>()?;
            emit(&mut out, &reports)?;
        }
        Command::Oeis { id, offline, reader, bound } => {
            let id: OeisId = id.parse()?;
            let reader = reader.or_else(|| qpolyber_oeis::bundled_reader(id)).unwrap_or(Reader::Antidiagonal);
            let fixture = OeisClient::default().fetch_sequence(id, offline)?;
            eprintln!("qpb: {id}: {} terms from {}", fixture.terms.len(), fixture.source);
            emit(&mut out, &[qpolyber_oeis::crosscheck_terms(&fixture, reader, bound)])?;
        }
    }
    Ok(())
}

fn check_table_size(family: FamilyId, max_n: usize, max_k: usize) -> Result<(), Failure> {
    if max_n > TABLE_LIMIT || max_k > TABLE_LIMIT {
        return Err(Failure::Size(format!("--max-n and --max-k are limited to {TABLE_LIMIT}")));
    }
    if family == FamilyId::PermmatrixQ && (max_k > MAX_PERM_MATRIX_COLS || max_n * max_k > MAX_PERM_MATRIX_CELLS) {
        return Err(Failure::Size(format!(
            "permmatrix_q is enumerated; needs max-k <= {MAX_PERM_MATRIX_COLS} and max-n * max-k <= {MAX_PERM_MATRIX_CELLS}"
        )));
    }
    Ok(())
}

fn emit(out: &mut impl Write, reports: &[CheckReport]) -> Result<(), Failure> {
    for r in reports {
        writeln!(out, "{}", r.to_json_line())?;
    }
    out.flush()?;
    if reports.iter().any(CheckReport::failed) {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}
