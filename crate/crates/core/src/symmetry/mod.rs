//! Symmetry reductions for definite integrals of expressions in `x`,
//! `sin(x)` and `cos(x)`.

use std::fmt;

use crate::algebra::{QPoly, QRatFun, QuadExt, Rat};
use crate::constants::{const_from_expr, const_simplify, ConstExpr};
use crate::definite::{definite_integrate, Interval};
use crate::error::{Error, Result};
use crate::expr::kernel::{to_kfrac, KFrac, Kernel, KernelSet, MPoly};
use crate::expr::{exprs_equivalent, ratfun_to_expr, Expr, Func};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// `e(-var)` with `sin` and `atan` of odd arguments pulled out as signs.
fn reflect(e: &Expr, var: &str) -> Expr {
    let go = |a: &Expr| Box::new(reflect(a, var));
    match e {
        Expr::Var(v) if v == var => -Expr::var(var),
        Expr::Num(_) | Expr::Pi | Expr::Var(_) => e.clone(),
        Expr::Neg(a) => Expr::Neg(go(a)),
        Expr::Add(a, b) => Expr::Add(go(a), go(b)),
        Expr::Sub(a, b) => Expr::Sub(go(a), go(b)),
        Expr::Mul(a, b) => Expr::Mul(go(a), go(b)),
        Expr::Div(a, b) => Expr::Div(go(a), go(b)),
        Expr::Pow(a, n) => Expr::Pow(go(a), *n),
        Expr::Call(f, a) => {
            let r = reflect(a, var);
            if exprs_equivalent(&r, a) {
                return e.clone();
            }
            if exprs_equivalent(&r, &-(**a).clone()) {
                match f {
                    Func::Sin | Func::Atan => return -e.clone(),
                    Func::Cos => return e.clone(),
                    _ => {}
                }
            }
            Expr::call(*f, r)
        }
    }
}

/// Even/odd classification under `var -> -var`. The zero expression counts
/// as odd.
pub fn parity(e: &Expr, var: &str) -> Result<Parity> {
    to_kfrac(e, &mut KernelSet::new()).map_err(|err| Error::UnsupportedShape(format!("{e}: {err}")))?;
    let r = reflect(e, var);
    Ok(if exprs_equivalent(&r, &-e.clone()) {
        Parity::Odd
    } else if exprs_equivalent(&r, e) {
        Parity::Even
    } else {
        Parity::Neither
    })
}

/// An integration bound `rat + pi*pi`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bound {
    pub rat: Rat,
    pub pi: Rat,
}

impl Bound {
    pub fn rat(r: Rat) -> Self {
        Bound { rat: r, pi: Rat::zero() }
    }

    pub fn pi_times(q: Rat) -> Self {
        Bound { rat: Rat::zero(), pi: q }
    }

    pub fn from_expr(e: &Expr) -> Result<Self> {
        let c = const_from_expr(e)?;
        let bad = || Error::UnsupportedShape(format!("bound {e} is not of the form q + r*pi"));
        if !c.atans.is_empty() || !c.logs.is_empty() || !c.pi_sq.is_zero() {
            return Err(bad());
        }
        Ok(Bound {
            rat: c.rational.as_rational().ok_or_else(bad)?.clone(),
            pi: c.pi.as_rational().ok_or_else(bad)?.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    /// `k` when the bound is `k*pi/2`.
    pub fn quarter_turns(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        let k = &self.pi * &Rat::from_int(2);
        if !self.rat.is_zero() || !k.is_integer() {
            return None;
        }
        k.floor().to_i64()
    }

    pub fn to_const(&self) -> ConstExpr {
        ConstExpr::rational(self.rat.clone())
            .add(&ConstExpr::pi_times(self.pi.clone()))
            .expect("rational coefficients")
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64() + self.pi.to_f64() * std::f64::consts::PI
    }

    fn add(&self, o: &Self) -> Self {
        Bound { rat: &self.rat + &o.rat, pi: &self.pi + &o.pi }
    }

    fn sub(&self, o: &Self) -> Self {
        Bound { rat: &self.rat - &o.rat, pi: &self.pi - &o.pi }
    }

    fn half(&self) -> Self {
        let h = Rat::new(1, 2);
        Bound { rat: &self.rat * &h, pi: &self.pi * &h }
    }

    fn neg(&self) -> Self {
        Bound { rat: -&self.rat, pi: -&self.pi }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_const())
    }
}

/// Outcome of [`symmetric_interval_reduce`] for `int_{-a}^{a}`.
#[derive(Debug, Clone, PartialEq)]
pub enum Reduction {
    Zero,
    /// `2 * int_0^hi`.
    Twice { hi: Bound },
    Unchanged,
}

pub fn symmetric_interval_reduce(e: &Expr, var: &str, a: &Bound) -> Result<Reduction> {
    Ok(match parity(e, var)? {
        Parity::Odd => Reduction::Zero,
        Parity::Even => Reduction::Twice { hi: a.clone() },
        Parity::Neither => Reduction::Unchanged,
    })
}

const X: usize = 0;
const S: usize = 1;
const C: usize = 2;

/// Kernel form of `e` over exactly `var`, `sin(var)`, `cos(var)`.
fn trig_kfrac(e: &Expr, var: &str) -> Result<(KernelSet, KFrac)> {
    let v = var.to_string();
    let mut ks = KernelSet::with(&[
        Kernel::Var(v.clone()),
        Kernel::Call(Func::Sin, v.clone()),
        Kernel::Call(Func::Cos, v),
    ]);
    let f = to_kfrac(e, &mut ks).map_err(|err| Error::UnsupportedShape(format!("{e}: {err}")))?;
    if ks.len() > 3 {
        return Err(Error::UnsupportedShape(format!(
            "{e} is not rational in {var}, sin({var}), cos({var})"
        )));
    }
    Ok((ks, f))
}

/// `p` as a polynomial in kernel `i` alone.
fn univariate(p: &MPoly, i: usize) -> Option<QPoly> {
    let mut c = vec![QuadExt::from(0); p.degree_in(i) as usize + 1];
    for (exps, k) in p.terms() {
        if exps.iter().enumerate().any(|(j, &e)| j != i && e != 0) {
            return None;
        }
        c[exps.get(i).copied().unwrap_or(0) as usize] = QuadExt::from(k.clone());
    }
    Some(QPoly::new(c))
}

fn free_of(p: &MPoly, idx: &[usize]) -> bool {
    idx.iter().all(|&i| !p.uses(i))
}

/// `f` with `e = x*f(sin x)`, together with `(pi/2)*f(sin x)`.
#[derive(Debug, Clone)]
pub struct XSinForm {
    pub f: QRatFun,
    pub reduced: Expr,
}

/// Matches `x*f(sin x)`, rewriting `cos(x)^2` as `1 - sin(x)^2` if needed.
pub fn x_fsin_reduce(e: &Expr, var: &str) -> Option<XSinForm> {
    let (_, kf) = trig_kfrac(e, var).ok()?;
    let num = kf.num.eliminate_square(C, S);
    let den = kf.den.eliminate_square(C, S);
    if !free_of(&den, &[X, C]) || !free_of(&num, &[C]) {
        return None;
    }
    let parts = num.coefficients_in(X);
    if parts.len() != 2 || !parts[0].is_zero() {
        return None;
    }
    let f = QRatFun::new(univariate(&parts[1], S)?, univariate(&den, S)?).ok()?;
    let sin = Expr::sin(Expr::var(var));
    let reduced = Expr::Pi / Expr::int(2) * ratfun_to_expr(&f, "s").substitute("s", &sin);
    Some(XSinForm { f, reduced })
}

/// `int_lo^hi g(y) dy`, where `lo > hi` is allowed.
#[derive(Debug, Clone)]
pub struct RationalForm {
    pub g: QRatFun,
    pub lo: Rat,
    pub hi: Rat,
    /// `y = sin(x)` or `y = cos(x)`.
    pub substitution: Func,
}

impl RationalForm {
    pub fn integrate(&self) -> Result<ConstExpr> {
        match self.lo.cmp(&self.hi) {
            std::cmp::Ordering::Equal => Ok(ConstExpr::zero()),
            std::cmp::Ordering::Less => definite_integrate(&self.g, &Interval::new(self.lo.clone(), self.hi.clone())?),
            std::cmp::Ordering::Greater => {
                Ok(definite_integrate(&self.g, &Interval::new(self.hi.clone(), self.lo.clone())?)?.neg())
            }
        }
    }
}

fn sin_cos(b: &Bound) -> Result<(Rat, Rat)> {
    let k = b
        .quarter_turns()
        .ok_or_else(|| Error::UnsupportedShape(format!("bound {b} is not a multiple of pi/2")))?;
    let (s, c) = [(0, 1), (1, 0), (0, -1), (-1, 0)][k.rem_euclid(4) as usize];
    Ok((Rat::from_int(s), Rat::from_int(c)))
}

/// Rewrites `int_lo^hi sin(x)*R(cos x)` with `y = cos x`, or
/// `int_lo^hi cos(x)*R(sin x)` with `y = sin x`.
pub fn trig_to_rational(e: &Expr, var: &str, lo: &Bound, hi: &Bound) -> Result<RationalForm> {
    let (_, kf) = trig_kfrac(e, var)?;
    let (slo, clo) = sin_cos(lo)?;
    let (shi, chi) = sin_cos(hi)?;
    // (factor kernel, argument kernel)
    for (a, b) in [(S, C), (C, S)] {
        let num = kf.num.eliminate_square(a, b);
        let den = kf.den.eliminate_square(a, b);
        if !free_of(&den, &[X, a]) || !free_of(&num, &[X]) {
            continue;
        }
        let parts = num.coefficients_in(a);
        if parts.len() != 2 || !parts[0].is_zero() {
            continue;
        }
        let (Some(n), Some(d)) = (univariate(&parts[1], b), univariate(&den, b)) else {
            continue;
        };
        let g = QRatFun::new(n, d)?;
        return Ok(if a == S {
            // sin x dx = -d(cos x)
            RationalForm { g, lo: chi, hi: clo, substitution: Func::Cos }
        } else {
            RationalForm { g, lo: slo, hi: shi, substitution: Func::Sin }
        });
    }
    Err(Error::UnsupportedShape(format!(
        "{e} is neither sin({var})*R(cos({var})) nor cos({var})*R(sin({var}))"
    )))
}

/// Proof routes for `int x*f(sin x)` style integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `int_0^pi x f(sin x) = (pi/2) int_0^pi f(sin x)`, then `y = cos x`.
    Reflection,
    /// Shift `x = u + pi/2`; the `u`-part is odd and drops, the rest goes
    /// through `y = sin u` over the full interval.
    ShiftSplit,
    /// As `ShiftSplit`, but the even remainder is folded to twice the half
    /// interval before substituting.
    DirectSubstitution,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Reflection, Route::ShiftSplit, Route::DirectSubstitution];
}

/// Integral of an `x`-free integrand by substitution, optionally using
/// symmetry of the interval first.
fn integrate_x_free(e: &Expr, var: &str, lo: &Bound, hi: &Bound, fold: bool) -> Result<ConstExpr> {
    if fold && *lo == hi.neg() {
        match symmetric_interval_reduce(e, var, hi)? {
            Reduction::Zero => return Ok(ConstExpr::zero()),
            Reduction::Twice { hi } => {
                return integrate_x_free(e, var, &Bound::default(), &hi, false)?.scale(&QuadExt::from(2))
            }
            Reduction::Unchanged => {}
        }
    }
    trig_to_rational(e, var, lo, hi)?.integrate()
}

fn half_pi_times(c: &ConstExpr) -> Result<ConstExpr> {
    c.scale(&QuadExt::from(Rat::new(1, 2)))?.mul_pi()
}

/// Simultaneous `sin -> cos`, `cos -> -sin`, i.e. `x -> x + pi/2`, applied
/// `k` times.
fn shift_quarter_turns(p: &MPoly, k: i64) -> MPoly {
    let mut p = p.clone();
    for _ in 0..k.rem_euclid(4) {
        let tmp = 3;
        p = p.substitute(S, &MPoly::var(tmp));
        p = p.substitute(C, &MPoly::var(S).neg());
        p = p.substitute(tmp, &MPoly::var(C));
    }
    p
}

fn shift_route(e: &Expr, var: &str, lo: &Bound, hi: &Bound, fold: bool) -> Result<ConstExpr> {
    let (ks, kf) = trig_kfrac(e, var)?;
    let shape = || Error::UnsupportedShape(format!("{e} is not x*A + B with A, B free of {var}"));
    if kf.den.uses(X) || kf.num.degree_in(X) > 1 {
        return Err(shape());
    }
    let center = lo.add(hi).half();
    let k = center.quarter_turns().ok_or_else(|| {
        Error::UnsupportedShape(format!("interval center {center} is not a multiple of pi/2"))
    })?;
    let w = hi.sub(lo).half();
    let mut parts = kf.num.coefficients_in(X);
    parts.resize(2, MPoly::zero());
    let den = shift_quarter_turns(&kf.den, k);
    let a = shift_quarter_turns(&parts[1], k);
    let b = shift_quarter_turns(&parts[0], k);
    // u*A(u) must be odd, i.e. A even
    let even = a
        .reflect(&[S])
        .mul(&den)
        .sub(&a.mul(&den.reflect(&[S])));
    if !ks.reduce_circle(&even).is_zero() {
        return Err(Error::UnsupportedShape(format!(
            "the shifted {var}-part of {e} does not vanish by symmetry"
        )));
    }
    let as_expr = |n: &MPoly| ks.frac_to_expr(&KFrac { num: n.clone(), den: den.clone() });
    let mut total = ConstExpr::zero();
    if !a.is_zero() {
        let ia = integrate_x_free(&as_expr(&a), var, &w.neg(), &w, fold)?;
        // center * int A
        let shifted = ia.scale(&QuadExt::from(center.pi.clone()))?.mul_pi()?;
        total = total.add(&shifted)?;
    }
    if !b.is_zero() {
        total = total.add(&integrate_x_free(&as_expr(&b), var, &w.neg(), &w, fold)?)?;
    }
    Ok(total)
}

/// `int_lo^hi e`, exact, along a particular route.
pub fn evaluate_trig_definite_via(e: &Expr, var: &str, lo: &Bound, hi: &Bound, route: Route) -> Result<ConstExpr> {
    let value = match route {
        Route::Reflection => {
            if !lo.is_zero() || *hi != Bound::pi_times(Rat::one()) {
                return Err(Error::UnsupportedShape("the x*f(sin x) reflection needs the interval [0, pi]".into()));
            }
            let m = x_fsin_reduce(e, var)
                .ok_or_else(|| Error::UnsupportedShape(format!("{e} is not x*f(sin({var}))")))?;
            let f_sin = ratfun_to_expr(&m.f, "s").substitute("s", &Expr::sin(Expr::var(var)));
            half_pi_times(&integrate_x_free(&f_sin, var, lo, hi, false)?)?
        }
        Route::ShiftSplit => shift_route(e, var, lo, hi, false)?,
        Route::DirectSubstitution => shift_route(e, var, lo, hi, true)?,
    };
    Ok(const_simplify(&value))
}

/// `int_lo^hi e`, exact, for `e` rational in `var`, `sin(var)`, `cos(var)`
/// and within reach of the rules above.
pub fn evaluate_trig_definite(e: &Expr, var: &str, lo: &Bound, hi: &Bound) -> Result<ConstExpr> {
    if !e.contains_var(var) {
        return Ok(const_simplify(&const_from_expr(e)?.mul_by_length(lo, hi)?));
    }
    let (_, kf) = trig_kfrac(e, var)?;
    if !kf.num.uses(X) && !kf.den.uses(X) {
        return integrate_x_free(e, var, lo, hi, true).map(|c| const_simplify(&c));
    }
    let mut last = None;
    for route in Route::ALL {
        match evaluate_trig_definite_via(e, var, lo, hi, route) {
            Ok(v) => return Ok(v),
            Err(err) => last = Some(err),
        }
    }
    Err(last.expect("at least one route"))
}

impl ConstExpr {
    /// `self * (hi - lo)` for a constant integrand.
    fn mul_by_length(&self, lo: &Bound, hi: &Bound) -> Result<ConstExpr> {
        let len = hi.sub(lo);
        let a = self.scale(&QuadExt::from(len.rat.clone()))?;
        if len.pi.is_zero() {
            return Ok(a);
        }
        a.add(&self.scale(&QuadExt::from(len.pi))?.mul_pi()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{const_equal, Verdict};
    use crate::parser::parse;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn pi(q: i64, d: i64) -> Bound {
        Bound::pi_times(Rat::new(q, d))
    }

    #[test]
    fn parities() {
        assert_eq!(parity(&p("x^2/(x^2-1)"), "x").unwrap(), Parity::Even);
        assert_eq!(parity(&p("u*cos(u)/(1+sin(u)^2)"), "u").unwrap(), Parity::Odd);
        assert_eq!(parity(&p("x^3+x^2"), "x").unwrap(), Parity::Neither);
        assert_eq!(parity(&p("atan(x^3)*cos(x)"), "x").unwrap(), Parity::Odd);
    }

    #[test]
    fn symmetric_reductions() {
        let a = pi(1, 2);
        assert_eq!(symmetric_interval_reduce(&p("u*cos(u)/(1+sin(u)^2)"), "u", &a).unwrap(), Reduction::Zero);
        assert_eq!(
            symmetric_interval_reduce(&p("cos(u)/(1+sin(u)^2)"), "u", &a).unwrap(),
            Reduction::Twice { hi: a }
        );
        assert_eq!(
            symmetric_interval_reduce(&p("x"), "x", &Bound::rat(Rat::one())).unwrap(),
            Reduction::Zero
        );
    }

    #[test]
    fn reflection_matches() {
        let m = x_fsin_reduce(&p("x*sin(x)/(1+cos(x)^2)"), "x").unwrap();
        assert_eq!(ratfun_to_expr(&m.f, "s").to_string(), "-s/(s^2-2)");
        let m = x_fsin_reduce(&p("x*sin(x)"), "x").unwrap();
        assert_eq!(ratfun_to_expr(&m.f, "s").to_string(), "s");
        assert!(x_fsin_reduce(&p("x^2"), "x").is_none());
    }

    #[test]
    fn substitutions() {
        let r = trig_to_rational(&p("sin(x)/(1+cos(x)^2)"), "x", &Bound::default(), &pi(1, 1)).unwrap();
        assert_eq!(ratfun_to_expr(&r.g, "y").to_string(), "1/(y^2+1)");
        assert_eq!((r.lo.clone(), r.hi.clone()), (Rat::from_int(-1), Rat::one()));
        let r = trig_to_rational(&p("cos(u)/(1+sin(u)^2)"), "u", &Bound::default(), &pi(1, 2)).unwrap();
        assert_eq!((r.lo.clone(), r.hi.clone()), (Rat::zero(), Rat::one()));
        let r = trig_to_rational(&p("sin(x)*cos(x)"), "x", &Bound::default(), &pi(1, 1)).unwrap();
        assert_eq!(ratfun_to_expr(&r.g, "y").to_string(), "y");
        assert!(r.integrate().unwrap().is_zero());
    }

    #[test]
    fn three_routes_agree() {
        let e = p("x*sin(x)/(1+cos(x)^2)");
        let want = ConstExpr::pi_sq_times(Rat::new(1, 4));
        for route in Route::ALL {
            let v = evaluate_trig_definite_via(&e, "x", &Bound::default(), &pi(1, 1), route).unwrap();
            assert_eq!(const_equal(&v, &want), Verdict::Equal, "{route:?}: {v}");
            assert_eq!(v.to_string(), "pi^2/4");
        }
    }

    #[test]
    fn simple_values() {
        let zero = Bound::default();
        let v = evaluate_trig_definite(&p("sin(x)/(1+cos(x)^2)"), "x", &zero, &pi(1, 1)).unwrap();
        assert_eq!(v.to_string(), "pi/2");
        let v = evaluate_trig_definite(&p("sin(x)"), "x", &zero, &pi(1, 1)).unwrap();
        assert_eq!(v.to_string(), "2");
        let v = evaluate_trig_definite(&p("x*sin(x)"), "x", &zero, &pi(1, 1)).unwrap();
        assert_eq!(v.to_string(), "pi");
    }
}
