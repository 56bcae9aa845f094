use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use triads_core::catalog::{self, expand_roots, generalized_lah, RootSequence};
use triads_core::duality::{verify_triad, DualityReport};
use triads_core::path_oracle::oracle_triangle;
use triads_core::polynomials::triad_polynomials;
use triads_core::triangle::triangle;
use triads_core::{SequenceSpec, TriadError, TriadSpec};

use crate::expr::{parse_sequence, ExprError};
use crate::format::{
    render_polynomials, render_triangle, to_json, Header, MismatchDoc, OracleDoc, OutputFormat, VerifyDoc,
};

/// Rows compared against the walk enumeration by `verify --oracle`.
pub const ORACLE_CAP: usize = 10;

pub mod status {
    pub const OK: u8 = 0;
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const SEQUENCE_BOUNDS: u8 = 3;
    pub const NO_POLYNOMIALS: u8 = 4;
}

#[derive(Parser, Debug)]
#[command(name = "triads", version, about = "Duality triad triangles, polynomials and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the connection-constant triangle, rows 0..=N
    Show {
        #[command(flatten)]
        triad: TriadArgs,
        #[arg(short = 'n', long, default_value_t = 5)]
        rows: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the triad polynomials Φ0..ΦM
    Poly {
        #[command(flatten)]
        triad: TriadArgs,
        #[arg(long, default_value_t = 5)]
        degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check x^n = Σ c[n][k] Φk for n = 0..=N
    Verify {
        #[command(flatten)]
        triad: TriadArgs,
        #[arg(long, default_value_t = 10)]
        max: usize,
        /// Also compare against weighted walk enumeration (rows capped at 10)
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Connection constants between the root bases Π(x - r_j) and Π(x - s_j)
    Lah {
        /// Roots r_j, j = 1, 2, ... (expression in j or list:...)
        #[arg(long)]
        r: String,
        /// Roots s_j, j = 1, 2, ...
        #[arg(long)]
        s: String,
        #[arg(short = 'n', long, default_value_t = 5)]
        rows: usize,
        /// Recompute by direct basis change and compare
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Triangle by brute-force walk enumeration (N at most 12)
    Oracle {
        #[command(flatten)]
        triad: TriadArgs,
        #[arg(short = 'n', long, default_value_t = 5)]
        rows: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// A catalog name, or all three weight expressions in `k`.
#[derive(Args, Debug)]
struct TriadArgs {
    /// Catalog name: pascal, pascal_s(s), stirling2, stirling2_signed,
    /// newton_gregory, hermite, lah, laguerre, tchebychev
    name: Option<String>,
    /// Up weight i_k
    #[arg(long, allow_hyphen_values = true)]
    i: Option<String>,
    /// Stay weight q_k
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Down weight d_k (d_0 is ignored)
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Triad(#[from] TriadError),
}

impl CliError {
    fn status(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Expr(_) => status::USAGE,
            CliError::Triad(TriadError::IndexBeyondExplicitList { .. }) => status::SEQUENCE_BOUNDS,
            CliError::Triad(TriadError::NoPolynomialSequence(_)) => status::NO_POLYNOMIALS,
            CliError::Triad(TriadError::DegenerateBasis { .. }) => status::MISMATCH,
            CliError::Triad(_) => status::USAGE,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            status: status::OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let status = if e.use_stderr() { status::USAGE } else { status::OK };
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome { status, stdout, stderr };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            status: e.status(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Show { triad, rows, format } => {
            let (header, triad) = resolve(&triad)?;
            let tri = triangle(&triad, rows)?;
            Ok(Outcome::ok(render_triangle(&header, &tri.rows, format)))
        }
        Command::Poly { triad, degree, format } => {
            let (header, triad) = resolve(&triad)?;
            let polys = triad_polynomials(&triad, degree)?;
            Ok(Outcome::ok(render_polynomials(&header, &polys, format)))
        }
        Command::Verify {
            triad,
            max,
            oracle,
            format,
        } => verify(&triad, max, oracle, format),
        Command::Lah {
            r,
            s,
            rows,
            check,
            format,
        } => lah(&r, &s, rows, check, format),
        Command::Oracle { triad, rows, format } => {
            let (header, triad) = resolve(&triad)?;
            let tri = oracle_triangle(&triad, rows)?;
            Ok(Outcome::ok(render_triangle(&header, &tri.rows, format)))
        }
    }
}

fn resolve(args: &TriadArgs) -> Result<(Header, TriadSpec), CliError> {
    let custom = [&args.i, &args.q, &args.d];
    let triad = match (&args.name, custom) {
        (Some(name), [None, None, None]) => named(name)?,
        (Some(_), _) => {
            return Err(CliError::Usage(
                "give either a catalog name or --i/--q/--d, not both".into(),
            ))
        }
        (None, [Some(i), Some(q), Some(d)]) => TriadSpec::new(
            parse_sequence(i, 'k')?,
            parse_sequence(q, 'k')?,
            parse_sequence(d, 'k')?,
        ),
        (None, _) => {
            return Err(CliError::Usage(format!(
                "need a catalog name ({}) or all of --i, --q and --d",
                catalog::NAMES.join(", ")
            )))
        }
    };
    let header = Header {
        name: triad.name().unwrap_or("custom").to_string(),
        i: triad.i_spec().to_string(),
        q: triad.q_spec().to_string(),
        d: triad.d_spec().to_string(),
    };
    Ok((header, triad))
}

fn named(name: &str) -> Result<TriadSpec, CliError> {
    let name = name.trim();
    if let Some(arg) = name
        .strip_prefix("pascal_s(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let s = parse_sequence(arg, 'k')?;
        return match s {
            SequenceSpec::Polynomial([c, ref b, ref a]) if b.is_zero() && a.is_zero() => {
                Ok(catalog::pascal_s(c).triad)
            }
            _ => Err(CliError::Usage(format!("pascal_s needs a constant, got `{arg}`"))),
        };
    }
    Ok(catalog::builtin(name)?.triad)
}

fn verify(args: &TriadArgs, max: usize, oracle: bool, format: OutputFormat) -> Result<Outcome, CliError> {
    let (header, triad) = resolve(args)?;
    let report = verify_triad(&triad, max)?;
    let oracle_check = if oracle {
        let n = max.min(ORACLE_CAP);
        let walks = oracle_triangle(&triad, n)?;
        let tri = triangle(&triad, n)?;
        Some(OracleCheck::compare(n, &tri.rows, &walks.rows))
    } else {
        None
    };
    let passed = report.all_match() && oracle_check.as_ref().is_none_or(|c| c.mismatch.is_none());
    let stdout = match format {
        OutputFormat::Json => to_json(&verify_json(&header, &report, oracle_check.as_ref(), passed)),
        OutputFormat::Csv => {
            let mut out = String::from("n,match\n");
            for (n, ok) in report.row_matches.iter().enumerate() {
                let _ = writeln!(out, "{n},{ok}");
            }
            out
        }
        OutputFormat::Pretty => verify_text(&header, &report, oracle_check.as_ref()),
    };
    let mut stderr = String::new();
    if let Some(m) = &report.first_mismatch {
        let _ = writeln!(
            stderr,
            "duality mismatch at n={}, k={}: expected {}, actual {}",
            m.n, m.k, m.triangle, m.expansion
        );
    }
    if let Some((n, k, expected, actual)) = oracle_check.as_ref().and_then(|c| c.mismatch.as_ref()) {
        let _ = writeln!(
            stderr,
            "oracle mismatch at n={n}, k={k}: expected {expected}, actual {actual}"
        );
    }
    Ok(Outcome {
        status: if passed { status::OK } else { status::MISMATCH },
        stdout,
        stderr,
    })
}

struct OracleCheck {
    max_row: usize,
    /// (n, k, recurrence value, walk sum)
    mismatch: Option<(usize, usize, String, String)>,
}

impl OracleCheck {
    fn compare(max_row: usize, rows: &[triads_core::Row], walks: &[triads_core::Row]) -> Self {
        let mismatch = rows.iter().zip(walks).enumerate().find_map(|(n, (a, b))| {
            (0..=n).find(|&k| a[k] != b[k]).map(|k| (n, k, a[k].to_string(), b[k].to_string()))
        });
        Self { max_row, mismatch }
    }
}

fn verify_text(header: &Header, report: &DualityReport, oracle: Option<&OracleCheck>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: i = {}, q = {}, d = {}",
        header.name, header.i, header.q, header.d
    );
    for (n, ok) in report.row_matches.iter().enumerate() {
        let _ = writeln!(out, "  n = {n:>2}  {}", if *ok { "ok" } else { "MISMATCH" });
    }
    let good = report.row_matches.iter().filter(|ok| **ok).count();
    let _ = writeln!(
        out,
        "duality: {good}/{} rows match",
        report.row_matches.len()
    );
    if let Some(check) = oracle {
        let _ = writeln!(
            out,
            "oracle: rows 0..={} {}",
            check.max_row,
            if check.mismatch.is_none() { "match" } else { "differ" }
        );
    }
    out
}

fn verify_json(
    header: &Header,
    report: &DualityReport,
    oracle: Option<&OracleCheck>,
    passed: bool,
) -> VerifyDoc {
    VerifyDoc {
        name: header.name.clone(),
        i: header.i.clone(),
        q: header.q.clone(),
        d: header.d.clone(),
        max: report.max_index,
        rows_match: report.row_matches.clone(),
        first_mismatch: report.first_mismatch.as_ref().map(|m| MismatchDoc {
            n: m.n,
            k: m.k,
            expected: m.triangle.to_string(),
            actual: m.expansion.to_string(),
        }),
        oracle: oracle.map(|c| OracleDoc {
            max: c.max_row,
            first_mismatch: c.mismatch.clone().map(|(n, k, expected, actual)| MismatchDoc {
                n,
                k,
                expected,
                actual,
            }),
        }),
        passed,
    }
}

fn lah(r: &str, s: &str, rows: usize, check: bool, format: OutputFormat) -> Result<Outcome, CliError> {
    let r = RootSequence(parse_sequence(r, 'j')?);
    let s = RootSequence(parse_sequence(s, 'j')?);
    let table = generalized_lah(&r, &s, rows)?;
    let header = Header {
        name: "generalized_lah".into(),
        i: "1".into(),
        q: format!("r_(k+1) - s_(n+1); r_j = {}, s_j = {}", r.0.display_with('j'), s.0.display_with('j')),
        d: "0".into(),
    };
    let mut outcome = Outcome::ok(render_triangle(&header, &table, format));
    if check {
        let direct = expand_roots(&r, &s, rows)?;
        let diff = table.iter().zip(&direct).enumerate().find_map(|(n, (a, b))| {
            (0..a.len().max(b.len()))
                .find(|&k| a.get(k) != b.get(k))
                .map(|k| (n, k))
        });
        match diff {
            None => outcome.stderr = format!("check: rows 0..={rows} agree with direct expansion\n"),
            Some((n, k)) => {
                let show = |row: &triads_core::Row| row.get(k).map_or("-".into(), |v| v.to_string());
                outcome.status = status::MISMATCH;
                outcome.stderr = format!(
                    "check mismatch at n={n}, k={k}: expected {}, actual {}\n",
                    show(&direct[n]),
                    show(&table[n])
                );
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("triads").chain(args.iter().copied()))
    }

    #[test]
    fn exit_statuses() {
        assert_eq!(call(&["show", "pascal", "-n", "2"]).status, status::OK);
        assert_eq!(call(&["show", "nope"]).status, status::USAGE);
        assert_eq!(call(&["show", "--i", "k^3", "--q", "0", "--d", "0"]).status, status::USAGE);
        assert_eq!(call(&["show", "pascal", "--i", "1"]).status, status::USAGE);
        assert_eq!(call(&["show", "--i", "1"]).status, status::USAGE);
        assert_eq!(call(&["frobnicate"]).status, status::USAGE);
        assert_eq!(
            call(&["show", "--i", "list:1,1", "--q", "0", "--d", "1", "-n", "4"]).status,
            status::SEQUENCE_BOUNDS
        );
        assert_eq!(call(&["oracle", "hermite", "-n", "13"]).status, status::USAGE);
        assert_eq!(call(&["--help"]).status, status::OK);
    }

    #[test]
    fn pascal_s_names() {
        let out = call(&["show", "pascal_s(-1/2)", "-n", "2", "--format", "csv"]);
        assert_eq!(out.stdout, "1\n-1/2,1\n1/4,-1,1\n");
        assert_eq!(call(&["show", "pascal_s(k)"]).status, status::USAGE);
    }

    #[test]
    fn negative_expressions_are_values_not_flags() {
        let out = call(&["show", "--i", "-1", "--q", "2k", "--d", "-k^2+k", "-n", "3", "--format", "csv"]);
        assert_eq!(out.status, status::OK, "{}", out.stderr);
        assert!(out.stdout.ends_with("0,-6,6,-1\n"));
    }
}
