//! Definite integrals over finite rational intervals.

mod sturm;

use std::fmt;

use crate::algebra::{Field, OrderedField, QPoly, QRatFun, QuadExt, Rat};
use crate::constants::{const_simplify, ConstExpr};
use crate::error::{Error, Result};
use crate::expr::{differentiate, expr_to_ratfun, Expr, Func};
use crate::ratint::{integrate_rational, AntiDeriv};

pub use sturm::{real_roots_in_interval, real_roots_qpoly, refine, RootInterval, Sturm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo >= hi {
            return Err(Error::DomainError(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Which side a one-sided limit approaches from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// How [`definite_from_antiderivative`] treats jumps inside the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Splitting {
    /// Split at every discontinuity and add back the jumps.
    #[default]
    Split,
    /// Plain `F(hi) - F(lo)`; wrong for discontinuous `F`. Diagnostic only.
    Naive,
}

/// Sign of `p` just to one side of `x`, read off the first nonvanishing
/// derivative.
pub fn one_sided_sign(p: &QPoly, x: &Rat, side: Side) -> i32 {
    let x = QuadExt::from(x.clone());
    let mut d = p.clone();
    let mut k = 0;
    while !d.is_zero() {
        let s = d.eval(&x).signum();
        if s != 0 {
            return if side == Side::Left && k % 2 == 1 { -s } else { s };
        }
        d = d.derivative();
        k += 1;
    }
    0
}

/// `atan(u(x))`, or its one-sided limit `+-pi/2` at a pole of `u`.
fn atan_at(u: &QRatFun, x: &Rat, side: Side) -> ConstExpr {
    match u.eval(&QuadExt::from(x.clone())) {
        Some(v) => ConstExpr::atan(1, v),
        None => {
            let s = one_sided_sign(u.num(), x, side) * one_sided_sign(u.den(), x, side);
            ConstExpr::pi_times(Rat::new(s as i64, 2))
        }
    }
}

fn improper(at: impl fmt::Display) -> Error {
    Error::ImproperIntegral { location: at.to_string() }
}

/// Exact `F(x)`, limits of atan terms taken from `side`.
fn eval_antideriv(f: &AntiDeriv, x: &Rat, side: Side) -> Result<ConstExpr> {
    let xq = QuadExt::from(x.clone());
    let rat = f.rat_part.eval(&xq).ok_or_else(|| improper(format!("x = {x}")))?;
    let mut acc = ConstExpr::rational(f.poly_part.eval(&xq) + rat);
    for l in &f.logs {
        let v = l.arg.eval(&xq);
        if v.is_zero() {
            return Err(improper(format!("x = {x}")));
        }
        acc = acc.add(&ConstExpr::log_abs(l.coeff.clone(), v)?)?;
    }
    for a in &f.atans {
        acc = acc.add(&atan_at(&a.arg, x, side).scale(&a.coeff)?)?;
    }
    Ok(acc)
}

fn check_no_poles(den: &QPoly, iv: &Interval) -> Result<()> {
    match real_roots_qpoly(den, iv).first() {
        Some(r) => Err(improper(r)),
        None => Ok(()),
    }
}

/// `int_lo^hi f`, exact. Rejects poles in the closed interval.
pub fn definite_integrate(f: &QRatFun, iv: &Interval) -> Result<ConstExpr> {
    check_no_poles(f.den(), iv)?;
    let anti = integrate_rational(f)?;
    definite_from_rational_antideriv(&anti, iv)
}

/// `F(hi) - F(lo)` for an antiderivative from [`integrate_rational`], which
/// is continuous wherever the integrand is finite.
pub fn definite_from_rational_antideriv(anti: &AntiDeriv, iv: &Interval) -> Result<ConstExpr> {
    let hi = eval_antideriv(anti, &iv.hi, Side::Left)?;
    let lo = eval_antideriv(anti, &iv.lo, Side::Right)?;
    Ok(const_simplify(&hi.sub(&lo)?))
}

/// A user-supplied antiderivative split into a rational part and scalar
/// multiples of `atan(u)` and `log(u)` with rational `u`. Summands free of
/// the variable are dropped since they cancel.
#[derive(Debug, Clone)]
pub struct AntiTerms {
    pub rational: QRatFun,
    pub atans: Vec<(QuadExt, QRatFun)>,
    pub logs: Vec<(QuadExt, QRatFun)>,
}

impl AntiTerms {
    pub fn parse(e: &Expr, var: &str) -> Result<Self> {
        let mut out = AntiTerms { rational: QRatFun::zero(), atans: Vec::new(), logs: Vec::new() };
        collect(e, var, &QuadExt::one(), &mut out)?;
        Ok(out)
    }

    fn eval(&self, x: &Rat, side: Side) -> Result<ConstExpr> {
        let xq = QuadExt::from(x.clone());
        let rat = self.rational.eval(&xq).ok_or_else(|| improper(format!("x = {x}")))?;
        let mut acc = ConstExpr::rational(rat);
        for (k, u) in &self.atans {
            acc = acc.add(&atan_at(u, x, side).scale(k)?)?;
        }
        for (k, u) in &self.logs {
            match u.eval(&xq) {
                Some(v) if !v.is_zero() => acc = acc.add(&ConstExpr::log_abs(k.clone(), v)?)?,
                _ => return Err(improper(format!("x = {x}"))),
            }
        }
        Ok(acc)
    }
}

fn scalar(e: &Expr) -> Result<QuadExt> {
    let c = crate::constants::const_from_expr(e)?;
    c.as_scalar()
        .cloned()
        .ok_or_else(|| Error::UnsupportedShape(format!("non-algebraic coefficient {e}")))
}

fn collect(e: &Expr, var: &str, k: &QuadExt, out: &mut AntiTerms) -> Result<()> {
    if !e.contains_var(var) {
        return Ok(());
    }
    match e {
        Expr::Add(a, b) => {
            collect(a, var, k, out)?;
            collect(b, var, k, out)
        }
        Expr::Sub(a, b) => {
            collect(a, var, k, out)?;
            collect(b, var, &-k.clone(), out)
        }
        Expr::Neg(a) => collect(a, var, &-k.clone(), out),
        Expr::Mul(a, b) if !a.contains_var(var) => collect(b, var, &(k.clone() * scalar(a)?), out),
        Expr::Mul(a, b) if !b.contains_var(var) => collect(a, var, &(k.clone() * scalar(b)?), out),
        Expr::Div(a, b) if !b.contains_var(var) => {
            let s = scalar(b)?;
            if s.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            collect(a, var, &(k.clone() / s), out)
        }
        Expr::Call(Func::Atan, u) => {
            out.atans.push((k.clone(), expr_to_ratfun(u, var)?));
            Ok(())
        }
        Expr::Call(Func::Log, u) => {
            out.logs.push((k.clone(), expr_to_ratfun(u, var)?));
            Ok(())
        }
        _ => {
            let r = expr_to_ratfun(e, var)?;
            out.rational = out.rational.add(&r.scale(k));
            Ok(())
        }
    }
}

/// Interior poles of `u`.
fn interior_poles(u: &QRatFun, iv: &Interval) -> Vec<RootInterval> {
    real_roots_qpoly(u.den(), iv)
        .into_iter()
        .filter(|r| !r.is_exact() || (r.lo > iv.lo && r.hi < iv.hi))
        .collect()
}

/// Interior points where an atan argument of `terms` has a pole.
fn atan_poles(terms: &AntiTerms, iv: &Interval) -> Vec<RootInterval> {
    let mut pts: Vec<RootInterval> = Vec::new();
    for (_, u) in &terms.atans {
        for r in interior_poles(u, iv) {
            if !pts.contains(&r) {
                pts.push(r);
            }
        }
    }
    pts.sort_by(|a, b| a.lo.cmp(&b.lo));
    pts
}

/// Jump `F(s+) - F(s-)` of `k*atan(u)` at a pole `s` of `u` isolated by `r`.
fn atan_jump(k: &QuadExt, u: &QRatFun, r: &RootInterval) -> Result<ConstExpr> {
    let (left, right) = if r.is_exact() {
        let s = &r.lo;
        let sign = |side| one_sided_sign(u.num(), s, side) * one_sided_sign(u.den(), s, side);
        (sign(Side::Left), sign(Side::Right))
    } else {
        // shrink until neither the numerator nor another root of the
        // denominator lies in [lo, hi]; then endpoint signs are the limits
        let both = crate::algebra::norm_poly(&(u.num() * u.den()));
        let iv = Interval::new(r.lo.clone(), r.hi.clone())?;
        let mut r = r.clone();
        let mut roots = real_roots_in_interval(&both, &iv);
        while roots.len() > 1 || roots.iter().any(RootInterval::is_exact) {
            r = refine(&crate::algebra::norm_poly(u.den()), &r, &(r.width() / Rat::from_int(4)));
            if r.is_exact() {
                return atan_jump(k, u, &r);
            }
            roots = real_roots_in_interval(&both, &Interval::new(r.lo.clone(), r.hi.clone())?);
        }
        let sign = |x: &Rat| {
            let x = QuadExt::from(x.clone());
            u.num().eval(&x).signum() * u.den().eval(&x).signum()
        };
        (sign(&r.lo), sign(&r.hi))
    };
    ConstExpr::pi_times(Rat::new((right - left) as i64, 2)).scale(k)
}

/// `int_lo^hi f` from a supplied antiderivative `F` of `f`, which may jump
/// where its atan arguments have poles. With [`Splitting::Split`] the
/// interval is cut at those points and the jumps are removed.
pub fn definite_from_antiderivative(
    anti: &Expr,
    f: &QRatFun,
    var: &str,
    iv: &Interval,
    mode: Splitting,
) -> Result<ConstExpr> {
    let d = differentiate(anti, var)?;
    let d = expr_to_ratfun(&d, var).map_err(|e| Error::InvalidAntiderivative(format!("{anti}: {e}")))?;
    if d != *f {
        return Err(Error::InvalidAntiderivative(format!("d/d{var} {anti} is {d}, not {f}")));
    }
    check_no_poles(f.den(), iv)?;
    let terms = AntiTerms::parse(anti, var)?;
    check_no_poles(terms.rational.den(), iv)?;
    for (_, u) in &terms.logs {
        check_no_poles(&(u.num() * u.den()), iv)?;
    }
    let mut value = terms.eval(&iv.hi, Side::Left)?.sub(&terms.eval(&iv.lo, Side::Right)?)?;
    if mode == Splitting::Split {
        for (k, u) in &terms.atans {
            for r in interior_poles(u, iv) {
                value = value.sub(&atan_jump(k, u, &r)?)?;
            }
        }
    }
    Ok(const_simplify(&value))
}

/// Points inside the interval where the supplied antiderivative may jump.
pub fn discontinuities(anti: &Expr, var: &str, iv: &Interval) -> Result<Vec<RootInterval>> {
    Ok(atan_poles(&AntiTerms::parse(anti, var)?, iv))
}

/// `(oracle - value) / pi` when it is a nonzero integer to within `1e-6`.
pub fn pi_discrepancy(value: &ConstExpr, oracle: f64) -> Option<i64> {
    let k = (oracle - value.to_f64()) / std::f64::consts::PI;
    let n = k.round();
    ((k - n).abs() < 1e-6 && n != 0.0).then_some(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{const_equal, const_from_expr, Verdict};
    use crate::parser::parse;

    fn f(s: &str) -> QRatFun {
        expr_to_ratfun(&parse(s).unwrap(), "x").unwrap()
    }

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(Rat::from_int(a), Rat::from_int(b)).unwrap()
    }

    fn equal(c: &ConstExpr, s: &str) -> bool {
        const_equal(c, &const_from_expr(&parse(s).unwrap()).unwrap()) == Verdict::Equal
    }

    #[test]
    fn quarter_pi() {
        let v = definite_integrate(&f("1/(1+x^2)"), &iv(0, 1)).unwrap();
        assert_eq!(v.to_string(), "pi/4");
    }

    #[test]
    fn bronstein_on_1_2() {
        let v = definite_integrate(&f("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)"), &iv(1, 2)).unwrap();
        assert!(equal(&v, "5/4*pi-atan(2)"), "{v}");
    }

    #[test]
    fn pole_is_improper() {
        assert!(matches!(
            definite_integrate(&f("1/(x^2-1)"), &iv(0, 2)),
            Err(Error::ImproperIntegral { .. })
        ));
        assert!(matches!(
            definite_integrate(&f("1/x"), &iv(0, 2)),
            Err(Error::ImproperIntegral { .. })
        ));
    }

    #[test]
    fn adamchik_mathematica_form() {
        let g = f("(x^2+2*x+4)/(x^4-7*x^2+2*x+17)");
        let anti = parse("1/2*atan((-x-1)/(x^2-4))-1/2*atan((x+1)/(x^2-4))").unwrap();
        let split = definite_from_antiderivative(&anti, &g, "x", &iv(0, 4), Splitting::Split).unwrap();
        assert!(equal(&split, "pi-atan(1/4)-atan(5/12)"), "{split}");
        let naive = definite_from_antiderivative(&anti, &g, "x", &iv(0, 4), Splitting::Naive).unwrap();
        assert!(equal(&naive, "-atan(1/4)-atan(5/12)"), "{naive}");
        let exact = definite_integrate(&g, &iv(0, 4)).unwrap();
        assert_eq!(pi_discrepancy(&naive, exact.to_f64()), Some(1));
    }

    #[test]
    fn bronstein_mathematica_form_irrational_split() {
        let g = f("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)");
        let anti = parse("1/2*atan(x*(x^2-3)/(x^2-2))-1/2*atan(x*(x^2-3)/(2-x^2))").unwrap();
        let v = definite_from_antiderivative(&anti, &g, "x", &iv(1, 2), Splitting::Split).unwrap();
        assert!(equal(&v, "5/4*pi-atan(2)"), "{v}");
    }

    #[test]
    fn wrong_antiderivative_rejected() {
        let anti = parse("atan(x)").unwrap();
        assert!(matches!(
            definite_from_antiderivative(&anti, &f("1/(1+x^4)"), "x", &iv(0, 1), Splitting::Split),
            Err(Error::InvalidAntiderivative(_))
        ));
    }

    #[test]
    fn endpoint_limits() {
        // atan(1/x) on [0, 1] with the limit at 0 from the right
        let anti = parse("-atan(1/x)").unwrap();
        let v = definite_from_antiderivative(&anti, &f("1/(1+x^2)"), "x", &iv(0, 1), Splitting::Split)
            .unwrap();
        assert_eq!(v.to_string(), "pi/4");
    }
}
