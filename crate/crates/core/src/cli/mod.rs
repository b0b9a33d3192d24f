//! Command-line front end. [`run`] takes the argument list and returns what
//! would be printed plus the exit status, so it can be driven from tests.

pub mod corpus;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::constants::{const_equal, const_eval, const_from_expr, ConstExpr, Verdict};
use crate::definite::{
    definite_from_antiderivative, definite_integrate, discontinuities, pi_discrepancy, Interval, Splitting,
};
use crate::error::Error;
use crate::expr::{expr_to_ratfun, Expr};
use crate::numeric::quad_oracle;
use crate::parser::parse;
use crate::ratint::integrate_rational;
use crate::symmetry::{evaluate_trig_definite, x_fsin_reduce, Bound};

pub use corpus::{run_corpus, CorpusEntry, CorpusReport, EntryOutcome, Op};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_IMPROPER: i32 = 4;
pub const EXIT_CORPUS: i32 = 5;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::UnsupportedAlgebraicDegree { .. }
        | Error::UnsupportedShape(_)
        | Error::UnsupportedNode(_)
        | Error::NotRationalInVar { .. }
        | Error::NotFullySplit(_)
        | Error::MixedRadicand(..) => EXIT_UNSUPPORTED,
        Error::ImproperIntegral { .. } | Error::PoleAtPoint(_) => EXIT_IMPROPER,
        _ => EXIT_FAILURE,
    }
}

#[derive(Parser, Debug)]
#[command(name = "symint", version, about = "Exact integration of rational functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Antiderivative, or exact value when both bounds are given.
    Integrate(IntegrateArgs),
    /// Decide whether two constant expressions are equal.
    CheckEqual(CheckEqualArgs),
    /// Run a line-delimited JSON corpus.
    Corpus(CorpusArgs),
    /// Adaptive Gauss-Kronrod quadrature.
    Oracle(OracleArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Emit a JSON document instead of text.
    #[arg(long)]
    pub json: bool,
    /// Significant digits for numeric output.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub digits: u32,
}

#[derive(Args, Debug)]
pub struct IntegrateArgs {
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
    #[arg(long, default_value = "x")]
    pub var: String,
    #[arg(long, allow_hyphen_values = true, requires = "to")]
    pub from: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "from")]
    pub to: Option<String>,
    /// Evaluate this antiderivative instead of computing one.
    #[arg(long, allow_hyphen_values = true)]
    pub antiderivative: Option<String>,
    /// Skip splitting at jumps of the antiderivative (diagnostic).
    #[arg(long)]
    pub naive_splitting: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CheckEqualArgs {
    #[arg(allow_hyphen_values = true)]
    pub lhs: String,
    #[arg(allow_hyphen_values = true)]
    pub rhs: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    pub path: std::path::PathBuf,
    /// Default tolerance for expected decimal values.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
    #[arg(long, default_value = "x")]
    pub var: String,
    #[arg(long, allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, allow_hyphen_values = true)]
    pub to: String,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

/// Printed output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize, Debug, Default)]
struct Report {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    antiderivative: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorReport>,
    diagnostics: Vec<String>,
}

#[derive(Serialize, Debug)]
struct ErrorReport {
    kind: String,
    message: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Integrate(a) => finish(&a.common, integrate(&a)),
        Command::CheckEqual(a) => check_equal(&a),
        Command::Oracle(a) => finish(&a.common, oracle(&a)),
        Command::Corpus(a) => corpus_cmd(&a),
    }
}

fn parse_expr(text: &str) -> Result<Expr, Error> {
    parse(text).map_err(Error::from)
}

/// Error report with the partial result, if any, in the diagnostics.
fn failure(e: &Error, diagnostics: Vec<String>) -> Report {
    let mut diagnostics = diagnostics;
    if let Error::UnsupportedAlgebraicDegree { partial: Some(p), .. } = e {
        diagnostics.push(format!("partial antiderivative (without the logarithmic part): {p}"));
    }
    Report {
        status: "error",
        error: Some(ErrorReport { kind: e.kind_name().into(), message: e.to_string() }),
        diagnostics,
        ..Report::default()
    }
}

fn finish(common: &Common, r: std::result::Result<Report, (Error, Vec<String>)>) -> Outcome {
    let (code, report) = match r {
        Ok(r) => (EXIT_OK, r),
        Err((e, d)) => (exit_code(&e), failure(&e, d)),
    };
    render(common, code, &report)
}

fn render(common: &Common, code: i32, r: &Report) -> Outcome {
    if common.json {
        let text = serde_json::to_string_pretty(r).expect("report serializes");
        return Outcome { code, stdout: text + "\n", stderr: String::new() };
    }
    let mut out = String::new();
    let mut err = String::new();
    for line in [&r.antiderivative, &r.value, &r.numeric, &r.verdict].into_iter().flatten() {
        let _ = writeln!(out, "{line}");
    }
    if let Some(est) = r.error_estimate {
        let _ = writeln!(out, "error estimate {est:.3e}");
    }
    if let Some(e) = &r.error {
        let _ = writeln!(err, "error[{}]: {}", e.kind, e.message);
    }
    for d in &r.diagnostics {
        let _ = writeln!(err, "note: {d}");
    }
    Outcome { code, stdout: out, stderr: err }
}

type CmdResult = std::result::Result<Report, (Error, Vec<String>)>;

fn bare<T>(r: Result<T, Error>) -> std::result::Result<T, (Error, Vec<String>)> {
    r.map_err(|e| (e, Vec::new()))
}

/// Exact definite integral of `e`, with notes on how it was obtained.
pub fn definite_value(
    e: &Expr,
    var: &str,
    lo: &Bound,
    hi: &Bound,
    antiderivative: Option<&Expr>,
    mode: Splitting,
) -> Result<(ConstExpr, Vec<String>), Error> {
    let mut notes = Vec::new();
    let rational_bounds = lo.pi.is_zero() && hi.pi.is_zero();
    let f = match expr_to_ratfun(e, var) {
        Ok(f) if rational_bounds => f,
        Ok(_) | Err(Error::NotRationalInVar { .. }) if antiderivative.is_none() => {
            notes.push("evaluated by trigonometric substitution".into());
            return Ok((evaluate_trig_definite(e, var, lo, hi)?, notes));
        }
        Ok(_) => return Err(Error::UnsupportedShape("bounds of a rational integrand must be rational".into())),
        Err(err) => return Err(err),
    };
    let iv = Interval::new(lo.rat.clone(), hi.rat.clone())?;
    let value = match antiderivative {
        None => {
            if mode == Splitting::Naive {
                notes.push("computed antiderivatives are continuous; nothing to split".into());
            }
            definite_integrate(&f, &iv)?
        }
        Some(anti) => {
            for r in discontinuities(anti, var, &iv)? {
                notes.push(format!("antiderivative jumps at {r}"));
            }
            let v = definite_from_antiderivative(anti, &f, var, &iv, mode)?;
            if mode == Splitting::Naive {
                let g = |x: f64| e.eval_f64(var, x).unwrap_or(f64::NAN);
                let reference = quad_oracle(&g, lo.to_f64(), hi.to_f64(), 1e-12)?.value;
                if let Some(k) = pi_discrepancy(&v, reference) {
                    notes.push(format!("naive value differs from the quadrature value by {}", pi_multiple(k)));
                }
            }
            v
        }
    };
    Ok((value, notes))
}

fn bound(text: &str) -> Result<Bound, Error> {
    Bound::from_expr(&parse_expr(text)?)
}

fn integrate(a: &IntegrateArgs) -> CmdResult {
    let e = bare(parse_expr(&a.expr))?;
    let digits = a.common.digits as usize;
    match (&a.from, &a.to) {
        (None, None) => {
            let f = expr_to_ratfun(&e, &a.var).map_err(|err| {
                let mut notes = Vec::new();
                if x_fsin_reduce(&e, &a.var).is_some() {
                    notes.push(
                        "the antiderivative is not elementary (it needs Li2); try bounds 0 and pi"
                            .to_string(),
                    );
                }
                (err, notes)
            })?;
            let anti = bare(integrate_rational(&f))?;
            Ok(Report {
                status: "ok",
                antiderivative: Some(anti.to_expr(&a.var).to_string()),
                diagnostics: vec!["derivative check: exact".into()],
                ..Report::default()
            })
        }
        (Some(lo), Some(hi)) => {
            let (lo, hi) = (bare(bound(lo))?, bare(bound(hi))?);
            let anti = match &a.antiderivative {
                Some(t) => Some(bare(parse_expr(t))?),
                None => None,
            };
            let mode = if a.naive_splitting { Splitting::Naive } else { Splitting::Split };
            let (value, notes) = bare(definite_value(&e, &a.var, &lo, &hi, anti.as_ref(), mode))?;
            Ok(Report {
                status: "ok",
                value: Some(value.to_string()),
                numeric: Some(const_eval(&value, digits).to_string()),
                diagnostics: notes,
                ..Report::default()
            })
        }
        _ => unreachable!("clap enforces --from and --to together"),
    }
}

fn check_equal(a: &CheckEqualArgs) -> Outcome {
    let parsed = (|| -> Result<(ConstExpr, ConstExpr), Error> {
        let l = const_from_expr(&parse_expr(&a.lhs)?)?;
        let r = const_from_expr(&parse_expr(&a.rhs)?)?;
        Ok((l, r))
    })();
    let (l, r) = match parsed {
        Ok(p) => p,
        Err(e) => return render(&a.common, exit_code(&e), &failure(&e, Vec::new())),
    };
    let v = const_equal(&l, &r);
    let digits = a.common.digits as usize;
    let report = Report {
        status: "ok",
        verdict: Some(v.to_string()),
        diagnostics: vec![
            format!("lhs = {}", const_eval(&l, digits)),
            format!("rhs = {}", const_eval(&r, digits)),
        ],
        ..Report::default()
    };
    let code = if v == Verdict::Equal { EXIT_OK } else { EXIT_FAILURE };
    render(&a.common, code, &report)
}

fn oracle(a: &OracleArgs) -> CmdResult {
    let e = bare(parse_expr(&a.expr))?;
    let (lo, hi) = (bare(bound(&a.from))?, bare(bound(&a.to))?);
    let f = |x: f64| e.eval_f64(&a.var, x).unwrap_or(f64::NAN);
    let q = bare(quad_oracle(&f, lo.to_f64(), hi.to_f64(), a.tol))?;
    let digits = (a.common.digits as usize).min(17);
    Ok(Report {
        status: "ok",
        numeric: Some(format_sig(q.value, digits)),
        error_estimate: Some(q.error_estimate),
        diagnostics: vec![format!("{} subdivisions", q.subdivisions)],
        ..Report::default()
    })
}

/// `k*pi` as text.
pub(crate) fn pi_multiple(k: i64) -> String {
    match k {
        1 => "pi".into(),
        -1 => "-pi".into(),
        k => format!("{k}*pi"),
    }
}

/// `v` with `digits` significant digits, trailing zeros dropped.
pub(crate) fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return v.to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn corpus_cmd(a: &CorpusArgs) -> Outcome {
    let text = match std::fs::read_to_string(&a.path) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: cannot read {}: {e}\n", a.path.display()),
            }
        }
    };
    let report = run_corpus(&text, a.tol);
    let code = if report.failed() == 0 { EXIT_OK } else { EXIT_CORPUS };
    let stdout = if a.common.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_string()
    };
    Outcome { code, stdout, stderr: String::new() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("symint").chain(args.iter().copied()))
    }

    #[test]
    fn quarter_pi() {
        let o = cli(&["integrate", "1/(1+x^2)", "--var", "x", "--from", "0", "--to", "1"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert_eq!(o.stdout.lines().next(), Some("pi/4"));
        assert_eq!(o.stdout.lines().nth(1), Some("0.7853981634"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["integrate", "1/(x^2-1)", "--from", "0", "--to", "2"]).code, EXIT_IMPROPER);
        assert_eq!(cli(&["integrate", "1/(1+"]).code, EXIT_PARSE);
        assert_eq!(cli(&["integrate", "1/(x^3-2)"]).code, EXIT_UNSUPPORTED);
        assert_eq!(cli(&["integrate", "x", "--from", "0"]).code, EXIT_PARSE);
        assert_eq!(cli(&["check-equal", "pi/4", "atan(1/2)"]).code, EXIT_FAILURE);
        assert_eq!(cli(&["check-equal", "5/4*pi-atan(2)", "pi-atan(1/3)"]).code, EXIT_OK);
        assert_eq!(cli(&["integrate", "-1/x", "--json"]).code, EXIT_OK);
        assert_eq!(cli(&["check-equal", "-atan(2)", "atan(1/2)-pi/2"]).code, EXIT_OK);
    }

    #[test]
    fn json_document() {
        let o = cli(&["integrate", "1/(1+x^2)", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["status"], "ok");
        assert_eq!(v["antiderivative"], "atan(x)");
    }

    #[test]
    fn oracle_values() {
        let o = cli(&["oracle", "x", "--from", "0", "--to", "1"]);
        assert_eq!(o.stdout.lines().next(), Some("0.5"));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(2.819_842_099_789_746, 7), "2.819842");
        assert_eq!(format_sig(0.5, 10), "0.5");
        assert_eq!(format_sig(1234.5, 6), "1234.5");
    }
}
