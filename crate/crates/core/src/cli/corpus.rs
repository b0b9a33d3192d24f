//! Golden corpus: one JSON object per line, checked independently.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{definite_value, format_sig, pi_multiple};
use crate::constants::{const_equal, const_eval, const_from_expr, Verdict};
use crate::definite::{pi_discrepancy, Splitting};
use crate::error::Error;
use crate::expr::{differentiate, expr_to_ratfun, exprs_equivalent, simplify, Expr};
use crate::numeric::quad_oracle;
use crate::parser::parse;
use crate::ratint::integrate_rational;
use crate::symmetry::Bound;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    #[default]
    Integrate,
    Diff,
    /// `input` and `expect` are constants compared by the checker.
    Equal,
}

fn default_var() -> String {
    "x".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    pub input: String,
    #[serde(default = "default_var")]
    pub var: String,
    #[serde(default)]
    pub op: Op,
    #[serde(default)]
    pub lo: Option<String>,
    #[serde(default)]
    pub hi: Option<String>,
    /// Closed form; compared exactly (see `exact`) or up to the checker.
    #[serde(default)]
    pub expect: Option<String>,
    /// Require the printed result to equal `expect` character for character.
    #[serde(default)]
    pub exact: bool,
    #[serde(default)]
    pub expect_value: Option<String>,
    /// For `equal`: `Equal` (default), `NotEqual` or `Undecided`.
    #[serde(default)]
    pub expect_verdict: Option<String>,
    /// Error taxonomy name the pipeline must fail with.
    #[serde(default)]
    pub expect_error: Option<String>,
    /// Evaluate this antiderivative instead of computing one.
    #[serde(default)]
    pub antiderivative: Option<String>,
    #[serde(default)]
    pub naive: bool,
    #[serde(default)]
    pub tol: Option<f64>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryOutcome {
    pub line: usize,
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryOutcome>,
    pub passed: usize,
    pub failed: usize,
}

impl CorpusReport {
    pub fn failed(&self) -> usize {
        self.failed
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in &self.entries {
            let tag = if e.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<width$}  {}", e.id, e.detail)?;
        }
        writeln!(
            f,
            "{} entries: {} passed, {} failed",
            self.entries.len(),
            self.passed,
            self.failed
        )
    }
}

/// Significant digits in a decimal string.
fn significant_digits(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    digits.trim_start_matches('0').len()
}

fn validate(e: &CorpusEntry) -> Result<(), String> {
    if e.lo.is_some() != e.hi.is_some() {
        return Err("definite entries need both lo and hi".into());
    }
    if let Some(x) = &e.expect {
        parse(x).map_err(|err| format!("expect does not parse: {err}"))?;
    }
    if let Some(v) = &e.expect_value {
        v.parse::<f64>().map_err(|_| format!("expect_value {v:?} is not a decimal"))?;
        if significant_digits(v) < 6 {
            return Err(format!("expect_value {v} has fewer than 6 significant digits"));
        }
    }
    if e.op == Op::Equal && e.expect.is_none() {
        return Err("equal entries need expect".into());
    }
    Ok(())
}

type Checked = Result<String, String>;

fn expected(e: &CorpusEntry) -> Result<Option<Expr>, Error> {
    e.expect.as_deref().map(parse).transpose().map_err(Error::from)
}

fn run_definite(e: &CorpusEntry, input: &Expr, tol: f64) -> Result<Checked, Error> {
    let lo = Bound::from_expr(&parse(e.lo.as_deref().unwrap_or_default())?)?;
    let hi = Bound::from_expr(&parse(e.hi.as_deref().unwrap_or_default())?)?;
    let anti = e.antiderivative.as_deref().map(parse).transpose()?;
    let mode = if e.naive { Splitting::Naive } else { Splitting::Split };
    let (value, _) = definite_value(input, &e.var, &lo, &hi, anti.as_ref(), mode)?;
    let numeric = const_eval(&value, 30).to_f64();
    if let Some(x) = expected(e)? {
        if e.exact && value.to_string() != x.to_string() {
            return Ok(Err(format!("got {value}, expected exactly {x}")));
        }
        let v = const_equal(&value, &const_from_expr(&x)?);
        if v != Verdict::Equal {
            return Ok(Err(format!("got {value}, expected {x}: {v}")));
        }
    }
    if let Some(s) = &e.expect_value {
        let want: f64 = s.parse().expect("validated");
        let delta = (numeric - want).abs();
        if delta > tol {
            return Ok(Err(format!("value {} differs from {s} by {delta:.3e}", format_sig(numeric, 12))));
        }
    }
    let f = |x: f64| input.eval_f64(&e.var, x).unwrap_or(f64::NAN);
    let q = quad_oracle(&f, lo.to_f64(), hi.to_f64(), 1e-12)?;
    if e.naive {
        return Ok(match pi_discrepancy(&value, q.value) {
            Some(k) => Ok(format!("{value} (naive; off by {} from the quadrature value)", pi_multiple(k))),
            None => Err(format!("naive value {value} shows no multiple-of-pi discrepancy")),
        });
    }
    if (numeric - q.value).abs() > 1e-9 {
        return Ok(Err(format!("{value} = {numeric} but quadrature gives {}", q.value)));
    }
    Ok(Ok(format!("{value} = {}", format_sig(numeric, 10))))
}

fn run_indefinite(e: &CorpusEntry, input: &Expr) -> Result<Checked, Error> {
    let f = expr_to_ratfun(input, &e.var)?;
    let anti = integrate_rational(&f)?;
    let shown = anti.to_expr(&e.var);
    if let Some(x) = expected(e)? {
        if e.exact {
            if shown.to_string() != x.to_string() {
                return Ok(Err(format!("got {shown}, expected exactly {x}")));
            }
        } else {
            // same derivative means the two differ by a constant
            let dx = expr_to_ratfun(&differentiate(&x, &e.var)?, &e.var)?;
            if dx != f {
                return Ok(Err(format!("expected form {x} is not an antiderivative")));
            }
        }
    }
    Ok(Ok(shown.to_string()))
}

fn run_diff(e: &CorpusEntry, input: &Expr) -> Result<Checked, Error> {
    let d = simplify(&differentiate(input, &e.var)?);
    if let Some(x) = expected(e)? {
        let ok = if e.exact { d.to_string() == x.to_string() } else { exprs_equivalent(&d, &x) };
        if !ok {
            return Ok(Err(format!("got {d}, expected {x}")));
        }
    }
    Ok(Ok(d.to_string()))
}

fn run_equal(e: &CorpusEntry, input: &Expr) -> Result<Checked, Error> {
    let x = expected(e)?.expect("validated");
    let v = const_equal(&const_from_expr(input)?, &const_from_expr(&x)?);
    let name = match v {
        Verdict::Equal => "Equal",
        Verdict::NotEqual => "NotEqual",
        Verdict::Undecided { .. } => "Undecided",
    };
    let want = e.expect_verdict.as_deref().unwrap_or("Equal");
    Ok(if name == want { Ok(v.to_string()) } else { Err(format!("verdict {v}, expected {want}")) })
}

fn run_entry(e: &CorpusEntry, tol: f64) -> Result<Checked, Error> {
    let input = parse(&e.input)?;
    match e.op {
        Op::Integrate if e.lo.is_some() => run_definite(e, &input, tol),
        Op::Integrate => run_indefinite(e, &input),
        Op::Diff => run_diff(e, &input),
        Op::Equal => run_equal(e, &input),
    }
}

fn check(e: &CorpusEntry, default_tol: f64) -> Checked {
    validate(e)?;
    let tol = e.tol.unwrap_or(default_tol);
    match (run_entry(e, tol), &e.expect_error) {
        (Ok(r), None) => r,
        (Ok(_), Some(kind)) => Err(format!("expected {kind}, but the pipeline succeeded")),
        (Err(err), None) => Err(format!("{}: {err}", err.kind_name())),
        (Err(err), Some(kind)) if err.kind_name() == kind => Ok(format!("{kind} as expected")),
        (Err(err), Some(kind)) => Err(format!("expected {kind}, got {}: {err}", err.kind_name())),
    }
}

/// Checks every entry of a corpus file. Entries run in parallel; the report
/// keeps file order.
pub fn run_corpus(text: &str, default_tol: f64) -> CorpusReport {
    let parsed: Vec<(usize, Result<CorpusEntry, String>)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, serde_json::from_str(l).map_err(|e| format!("malformed entry: {e}"))))
        .collect();
    let entries: Vec<EntryOutcome> = parsed
        .par_iter()
        .map(|(line, entry)| {
            let (id, result) = match entry {
                Ok(e) => (e.id.clone(), check(e, default_tol)),
                Err(msg) => (format!("line {line}"), Err(msg.clone())),
            };
            let (passed, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            EntryOutcome { line: *line, id, passed, detail }
        })
        .collect();
    let passed = entries.iter().filter(|e| e.passed).count();
    CorpusReport { failed: entries.len() - passed, passed, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus() {
        let r = run_corpus("", 1e-6);
        assert_eq!((r.entries.len(), r.failed()), (0, 0));
        assert_eq!(r.to_string(), "0 entries: 0 passed, 0 failed\n");
    }

    #[test]
    fn wrong_value_is_reported() {
        let line = r#"{"id":"bad","input":"1/(1+x^2)","lo":"0","hi":"1","expect_value":"0.7853","source":"t"}"#;
        let r = run_corpus(line, 1e-6);
        assert_eq!(r.failed(), 1);
        assert!(r.entries[0].detail.contains("significant"), "{}", r.entries[0].detail);
        let line = r#"{"id":"bad","input":"1/(1+x^2)","lo":"0","hi":"1","expect_value":"0.785390","source":"t"}"#;
        let r = run_corpus(line, 1e-6);
        assert_eq!(r.failed(), 1);
        assert!(r.entries[0].detail.contains("differs"), "{}", r.entries[0].detail);
    }

    #[test]
    fn malformed_line_has_number() {
        let r = run_corpus("\n{\"id\": 3}\n", 1e-6);
        assert_eq!(r.entries[0].id, "line 2");
        assert!(!r.entries[0].passed);
    }

    #[test]
    fn sample_entries() {
        let text = [
            r#"{"id":"a","input":"1/(1+x^2)","expect":"atan(x)","exact":true,"source":"t"}"#,
            r#"{"id":"b","op":"diff","input":"cos(3*x^2)","expect":"-6*x*sin(3*x^2)","exact":true,"source":"t"}"#,
            r#"{"id":"c","input":"1/(x^2-1)","lo":"0","hi":"2","expect_error":"ImproperIntegral","source":"t"}"#,
            r#"{"id":"d","op":"equal","input":"atan(2)+atan(3)","expect":"7/4*pi","expect_verdict":"NotEqual","source":"t"}"#,
        ]
        .join("\n");
        let r = run_corpus(&text, 1e-6);
        assert_eq!(r.failed(), 0, "{r}");
    }
}
