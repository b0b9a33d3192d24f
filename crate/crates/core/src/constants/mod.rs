//! Closed-form constants `r + q*pi + s*pi^2 + sum c*atan(a) + sum d*log(b)`
//! and a decision procedure for their equality.

mod gauss;

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{common_radicand, Field, OrderedField, QuadExt, Rat};
use crate::error::{Error, Result};
use crate::expr::{quad_magnitude, quad_to_expr, scaled_term, sum_terms, Expr, Func};
use crate::numeric::{eval_expr_in, Approx, Ctx};

/// `coeff * f(arg)` for `f` one of atan, log.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstTerm {
    pub coeff: QuadExt,
    pub arg: QuadExt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstExpr {
    pub rational: QuadExt,
    pub pi: QuadExt,
    /// Only the trigonometric reductions produce this.
    pub pi_sq: Rat,
    pub atans: Vec<ConstTerm>,
    /// Arguments are kept positive (`log|.|`).
    pub logs: Vec<ConstTerm>,
}

/// Outcome of [`const_equal`].
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Equal,
    NotEqual,
    /// No exact decision; `difference` is the high-precision value of
    /// `c1 - c2` and `numerically_zero` whether it fell below `1e-100`.
    Undecided { numerically_zero: bool, difference: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => f.write_str("Equal"),
            Verdict::NotEqual => f.write_str("NotEqual"),
            Verdict::Undecided { numerically_zero, difference } => {
                let v = if *numerically_zero { "numerically equal" } else { "numerically different" };
                write!(f, "Undecided({v}, difference {difference})")
            }
        }
    }
}

impl ConstExpr {
    pub fn zero() -> Self {
        ConstExpr {
            rational: QuadExt::zero(),
            pi: QuadExt::zero(),
            pi_sq: Rat::zero(),
            atans: Vec::new(),
            logs: Vec::new(),
        }
    }

    pub fn rational(q: impl Into<QuadExt>) -> Self {
        ConstExpr { rational: q.into(), ..Self::zero() }
    }

    pub fn pi_times(q: impl Into<QuadExt>) -> Self {
        ConstExpr { pi: q.into(), ..Self::zero() }
    }

    pub fn pi_sq_times(q: Rat) -> Self {
        ConstExpr { pi_sq: q, ..Self::zero() }
    }

    pub fn atan(coeff: impl Into<QuadExt>, arg: impl Into<QuadExt>) -> Self {
        ConstExpr {
            atans: vec![ConstTerm { coeff: coeff.into(), arg: arg.into() }],
            ..Self::zero()
        }
    }

    /// `coeff * log|arg|`.
    pub fn log_abs(coeff: impl Into<QuadExt>, arg: impl Into<QuadExt>) -> Result<Self> {
        let arg: QuadExt = arg.into();
        if arg.is_zero() {
            return Err(Error::DomainError("log(0)".into()));
        }
        Ok(ConstExpr {
            logs: vec![ConstTerm { coeff: coeff.into(), arg: arg.abs() }],
            ..Self::zero()
        })
    }

    fn scalars(&self) -> impl Iterator<Item = &QuadExt> {
        [&self.rational, &self.pi]
            .into_iter()
            .chain(self.atans.iter().chain(&self.logs).flat_map(|t| [&t.coeff, &t.arg]))
    }

    /// The single `sqrt(d)` used anywhere in the constant.
    pub fn radicand(&self) -> Result<Option<u64>> {
        common_radicand(self.scalars())
    }

    /// Only a rational (or `Q(sqrt(d))`) part.
    pub fn as_scalar(&self) -> Option<&QuadExt> {
        let bare = self.pi.is_zero() && self.pi_sq.is_zero() && self.atans.is_empty() && self.logs.is_empty();
        bare.then_some(&self.rational)
    }

    /// A pure multiple of pi.
    fn as_pi_multiple(&self) -> Option<&QuadExt> {
        let bare = self.rational.is_zero() && self.pi_sq.is_zero() && self.atans.is_empty() && self.logs.is_empty();
        bare.then_some(&self.pi)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        common_radicand(self.scalars().chain(o.scalars()))?;
        Ok(ConstExpr {
            rational: self.rational.clone() + o.rational.clone(),
            pi: self.pi.clone() + o.pi.clone(),
            pi_sq: &self.pi_sq + &o.pi_sq,
            atans: self.atans.iter().chain(&o.atans).cloned().collect(),
            logs: self.logs.iter().chain(&o.logs).cloned().collect(),
        })
    }

    pub fn neg(&self) -> Self {
        let flip = |ts: &[ConstTerm]| {
            ts.iter()
                .map(|t| ConstTerm { coeff: -t.coeff.clone(), arg: t.arg.clone() })
                .collect()
        };
        ConstExpr {
            rational: -self.rational.clone(),
            pi: -self.pi.clone(),
            pi_sq: -self.pi_sq.clone(),
            atans: flip(&self.atans),
            logs: flip(&self.logs),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &QuadExt) -> Result<Self> {
        common_radicand(self.scalars().chain([k]))?;
        if !k.is_rational() && !self.pi_sq.is_zero() {
            return Err(Error::UnsupportedShape("irrational multiple of pi^2".into()));
        }
        let sc = |ts: &[ConstTerm]| {
            ts.iter()
                .map(|t| ConstTerm { coeff: t.coeff.clone() * k.clone(), arg: t.arg.clone() })
                .collect()
        };
        Ok(ConstExpr {
            rational: self.rational.clone() * k.clone(),
            pi: self.pi.clone() * k.clone(),
            pi_sq: match k.as_rational() {
                Some(r) => &self.pi_sq * r,
                None => Rat::zero(),
            },
            atans: sc(&self.atans),
            logs: sc(&self.logs),
        })
    }

    /// `pi * self`; only rational multiples of `1` and `pi` qualify.
    pub fn mul_pi(&self) -> Result<Self> {
        let c = const_normalize(self);
        if !c.atans.is_empty() || !c.logs.is_empty() || !c.pi_sq.is_zero() {
            return Err(Error::UnsupportedShape(format!("pi * ({c}) is not a supported constant")));
        }
        let Some(q) = c.pi.as_rational() else {
            return Err(Error::UnsupportedShape("irrational multiple of pi^2".into()));
        };
        Ok(ConstExpr {
            pi: c.rational.clone(),
            pi_sq: q.clone(),
            ..Self::zero()
        })
    }

    pub fn is_zero(&self) -> bool {
        let c = const_normalize(self);
        c.rational.is_zero() && c.pi.is_zero() && c.pi_sq.is_zero() && c.atans.is_empty() && c.logs.is_empty()
    }

    pub fn to_expr(&self) -> Expr {
        let mut terms = Vec::new();
        if !self.rational.is_zero() {
            terms.push(quad_magnitude(&self.rational));
        }
        if !self.pi.is_zero() {
            terms.push(scaled_term(&self.pi, Expr::Pi));
        }
        if !self.pi_sq.is_zero() {
            terms.push(scaled_term(&QuadExt::from(self.pi_sq.clone()), Expr::Pi.pow(2)));
        }
        for t in &self.atans {
            terms.push(scaled_term(&t.coeff, Expr::atan(quad_to_expr(&t.arg))));
        }
        for t in &self.logs {
            terms.push(scaled_term(&t.coeff, Expr::log(quad_to_expr(&t.arg))));
        }
        sum_terms(terms)
    }

    /// Value to `digits` significant digits.
    pub fn eval(&self, digits: usize) -> Approx {
        const_eval(self, digits)
    }

    pub fn to_f64(&self) -> f64 {
        const_eval(self, 20).to_f64()
    }
}

impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn sort_key(x: &QuadExt) -> (u64, String) {
    (x.to_f64().to_bits(), x.to_string())
}

fn merge(terms: Vec<ConstTerm>) -> Vec<ConstTerm> {
    let mut out: Vec<ConstTerm> = Vec::new();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        match out.iter_mut().find(|o| o.arg == t.arg) {
            Some(o) => o.coeff = o.coeff.clone() + t.coeff,
            None => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    // positive arguments: the f64 bit pattern orders them
    out.sort_by_cached_key(|t| sort_key(&t.arg));
    out
}

/// Canonical form: atan arguments folded into `(0, 1)` using oddness and
/// `atan(x) + atan(1/x) = pi/2` for `x > 0`, log arguments folded into
/// `(1, oo)`, like terms merged and sorted.
pub fn const_normalize(c: &ConstExpr) -> ConstExpr {
    let mut out = ConstExpr {
        rational: c.rational.clone(),
        pi: c.pi.clone(),
        pi_sq: c.pi_sq.clone(),
        atans: Vec::new(),
        logs: Vec::new(),
    };
    let quarter = QuadExt::from(Rat::new(1, 4));
    let half = QuadExt::from(Rat::new(1, 2));
    let mut atans = Vec::new();
    for t in &c.atans {
        let (mut k, mut x) = (t.coeff.clone(), t.arg.clone());
        if x.is_zero() || k.is_zero() {
            continue;
        }
        if x.signum() < 0 {
            k = -k;
            x = -x;
        }
        if x.is_one() {
            out.pi = out.pi.clone() + k * quarter.clone();
            continue;
        }
        if x > QuadExt::one() {
            out.pi = out.pi.clone() + k.clone() * half.clone();
            k = -k;
            x = x.inv();
        }
        atans.push(ConstTerm { coeff: k, arg: x });
    }
    let mut logs = Vec::new();
    for t in &c.logs {
        let (mut k, mut x) = (t.coeff.clone(), t.arg.abs());
        if x.is_zero() || x.is_one() || k.is_zero() {
            continue;
        }
        if x < QuadExt::one() {
            k = -k;
            x = x.inv();
        }
        logs.push(ConstTerm { coeff: k, arg: x });
    }
    out.atans = merge(atans);
    out.logs = merge(logs);
    out
}

/// `atan(a) + atan(b)` as `atan((a+b)/(1-ab)) + k*pi`, with `k` chosen so the
/// identity holds for principal values.
pub fn arctan_add(a: &Rat, b: &Rat) -> ConstExpr {
    let ab = a * b;
    let one = Rat::one();
    let sign = Rat::from_int(a.signum());
    let raw = if ab == one {
        ConstExpr::pi_times(&sign * &Rat::new(1, 2))
    } else {
        let y = (a + b) / (&one - &ab);
        let mut c = ConstExpr::atan(Rat::one(), y);
        if ab > one {
            c.pi = QuadExt::from(sign);
        }
        c
    };
    const_normalize(&raw)
}

/// Working digits and threshold of the numeric fallback.
pub const NUMERIC_DIGITS: usize = 150;
const NUMERIC_THRESHOLD: f64 = 1e-100;

/// Value of `c` with `digits` significant digits.
pub fn const_eval(c: &ConstExpr, digits: usize) -> Approx {
    let mut ctx = Ctx::new(digits + 10);
    let v = eval_in(&mut ctx, c);
    ctx.approx(v).with_digits(digits)
}

fn eval_in(ctx: &mut Ctx, c: &ConstExpr) -> astro_float::BigFloat {
    let pi = ctx.pi();
    let mut acc = ctx.quad(&c.rational);
    let p = ctx.quad(&c.pi);
    acc = ctx.add(&acc, &ctx.mul(&p, &pi));
    let s = ctx.rat(&c.pi_sq);
    acc = ctx.add(&acc, &ctx.mul(&s, &ctx.mul(&pi, &pi)));
    for t in &c.atans {
        let x = ctx.quad(&t.arg);
        let v = ctx.atan(&x);
        let k = ctx.quad(&t.coeff);
        acc = ctx.add(&acc, &ctx.mul(&k, &v));
    }
    for t in &c.logs {
        let x = ctx.quad(&t.arg);
        let v = ctx.ln_abs(&x);
        let k = ctx.quad(&t.coeff);
        acc = ctx.add(&acc, &ctx.mul(&k, &v));
    }
    acc
}

fn numeric_verdict(mut value: impl FnMut(&mut Ctx) -> Result<astro_float::BigFloat>) -> Verdict {
    let mut ctx = Ctx::new(NUMERIC_DIGITS);
    match value(&mut ctx) {
        Ok(v) => {
            let a = ctx.approx(v).with_digits(10);
            Verdict::Undecided {
                numerically_zero: a.to_f64().abs() < NUMERIC_THRESHOLD,
                difference: a.to_string(),
            }
        }
        Err(e) => Verdict::Undecided {
            numerically_zero: false,
            difference: format!("not evaluable: {e}"),
        },
    }
}

/// Decides `c1 == c2`. Rational atan and log arguments with coefficients in
/// a single `Q(sqrt(d))` are decided exactly; anything else gets a labelled
/// 150-digit numeric verdict.
pub fn const_equal(c1: &ConstExpr, c2: &ConstExpr) -> Verdict {
    let Ok(d) = c1.sub(c2) else {
        return numeric_verdict(|ctx| {
            let (a, b) = (eval_in(ctx, c1), eval_in(ctx, c2));
            Ok(ctx.sub(&a, &b))
        });
    };
    let d = const_normalize(&d);
    match exact_zero(&d) {
        Some(true) => Verdict::Equal,
        Some(false) => Verdict::NotEqual,
        None => numeric_verdict(|ctx| Ok(eval_in(ctx, &d))),
    }
}

/// Exact test for a normalized constant; `None` outside the decidable class.
///
/// Logs of multiplicatively independent algebraic numbers are linearly
/// independent over the algebraic numbers, together with `1` (Baker). Writing
/// every atan and log through logs of Gaussian primes, the constant vanishes
/// iff the rational part, the real (log) part and the imaginary (atan, pi)
/// part vanish separately, and each of those splits again along `1` and
/// `sqrt(d)` in the coefficients.
fn exact_zero(d: &ConstExpr) -> Option<bool> {
    if !d.pi_sq.is_zero() {
        return None;
    }
    if d.logs.iter().any(|t| !t.arg.is_rational()) {
        let (radical, rest): (Vec<ConstTerm>, Vec<ConstTerm>) =
            d.logs.iter().cloned().partition(|t| !t.arg.is_rational());
        if !radical_logs_cancel(&radical)? {
            return None;
        }
        return exact_zero(&ConstExpr { logs: rest, ..d.clone() });
    }
    let args_rational = d.atans.iter().chain(&d.logs).all(|t| t.arg.is_rational());
    if !args_rational {
        return None;
    }
    if !d.rational.is_zero() {
        return Some(false);
    }
    let parts: [fn(&QuadExt) -> Rat; 2] = [|q| q.real_part().clone(), |q| q.sqrt_coeff().clone()];
    for part in parts {
        let logs: Vec<(Rat, Rat)> = d
            .logs
            .iter()
            .map(|t| (part(&t.coeff), t.arg.as_rational().unwrap().clone()))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        if !log_relation_holds(&logs)? {
            return Some(false);
        }
        let atans: Vec<(Rat, Rat)> = d
            .atans
            .iter()
            .map(|t| (part(&t.coeff), t.arg.as_rational().unwrap().clone()))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        let pi = part(&d.pi);
        if atans.is_empty() {
            if !pi.is_zero() {
                return Some(false);
            }
            continue;
        }
        let l = Rat::lcm_denominators(atans.iter().map(|(c, _)| c).chain([&pi]));
        let scale = Rat::from_int(l);
        let ints: Vec<(BigInt, Rat)> = atans
            .iter()
            .map(|(c, x)| ((c * &scale).numer().clone(), x.clone()))
            .collect();
        let m = (&pi * &scale).numer().clone();
        if !gauss::atan_relation_holds(&ints, &m)? {
            return Some(false);
        }
    }
    Some(true)
}

/// True when logs with quadratic-irrational arguments cancel among
/// themselves: grouped by coefficient up to a rational factor, each group's
/// argument product must be `+-1`. `None` when no such cancellation is found;
/// independence of the groups is not decided.
fn radical_logs_cancel(logs: &[ConstTerm]) -> Option<bool> {
    let mut classes: Vec<(QuadExt, Vec<(Rat, QuadExt)>)> = Vec::new();
    for t in logs {
        let found = classes.iter_mut().find_map(|(c, members)| {
            let ratio = (t.coeff.clone() / c.clone()).as_rational().cloned()?;
            Some((ratio, members))
        });
        match found {
            Some((ratio, members)) => members.push((ratio, t.arg.clone())),
            None => classes.push((t.coeff.clone(), vec![(Rat::one(), t.arg.clone())])),
        }
    }
    for (_, members) in classes {
        let l = Rat::from_int(Rat::lcm_denominators(members.iter().map(|(r, _)| r)));
        let mut acc = QuadExt::one();
        let mut budget = 0u64;
        for (r, x) in &members {
            let n: i64 = num_traits::ToPrimitive::to_i64((r * &l).numer())?;
            budget = budget.saturating_add(n.unsigned_abs());
            if budget > 4096 {
                return None;
            }
            acc = acc * x.pow(n);
        }
        if acc != QuadExt::one() && acc != -QuadExt::one() {
            return None;
        }
    }
    Some(true)
}

/// `sum c_j * log|x_j| == 0` for rational `c_j` and nonzero rational `x_j`.
///
/// Numerators and denominators are refined into a pairwise coprime base by
/// gcds; coprime integers above one are multiplicatively independent, so the
/// relation holds iff the coefficient sum at every base element vanishes.
fn log_relation_holds(logs: &[(Rat, Rat)]) -> Option<bool> {
    let parts: Vec<BigInt> = logs
        .iter()
        .flat_map(|(_, x)| [num_traits::Signed::abs(x.numer()), x.denom().clone()])
        .collect();
    let base = coprime_base(parts);
    for b in &base {
        let mut sum = Rat::zero();
        for (c, x) in logs {
            let v = valuation(&num_traits::Signed::abs(x.numer()), b) - valuation(x.denom(), b);
            sum = sum + c * &Rat::from_int(v);
        }
        if !sum.is_zero() {
            return Some(false);
        }
    }
    Some(true)
}

fn coprime_base(items: Vec<BigInt>) -> Vec<BigInt> {
    let one = BigInt::from(1);
    let mut base: Vec<BigInt> = items.into_iter().filter(|n| *n > one).collect();
    'refine: loop {
        base.sort();
        base.dedup();
        for i in 0..base.len() {
            for j in (i + 1)..base.len() {
                let g = num_integer::Integer::gcd(&base[i], &base[j]);
                if g > one {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.swap_remove(j);
                    base.swap_remove(i);
                    base.extend([a, b, g].into_iter().filter(|n| *n > one));
                    continue 'refine;
                }
            }
        }
        return base;
    }
}

fn valuation(n: &BigInt, b: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut v = 0;
    while !num_traits::Zero::is_zero(&n) && num_traits::Zero::is_zero(&(&n % b)) {
        n /= b;
        v += 1;
    }
    v
}

/// Equality of two constant expressions: exact when both convert to
/// [`ConstExpr`], numeric otherwise.
pub fn expr_const_equal(a: &Expr, b: &Expr) -> Verdict {
    match (const_from_expr(a), const_from_expr(b)) {
        (Ok(x), Ok(y)) => const_equal(&x, &y),
        _ => numeric_verdict(|ctx| {
            let (x, y) = (eval_expr_in(ctx, a, None)?, eval_expr_in(ctx, b, None)?);
            Ok(ctx.sub(&x, &y))
        }),
    }
}

/// Collapses integer combinations of rational-argument arctangents into a
/// single `atan(y) + k*pi`, and logs sharing a coefficient into one. The
/// result is checker-equal to the input.
pub fn const_simplify(c: &ConstExpr) -> ConstExpr {
    let c = merge_logs(&const_normalize(c));
    let out = fold_atan_terms(&c);
    debug_assert_eq!(const_equal(&out, &c), Verdict::Equal);
    out
}

/// `k*log(a) + k*log(b)` as `k*log(a*b)`.
fn merge_logs(c: &ConstExpr) -> ConstExpr {
    let mut logs: Vec<ConstTerm> = Vec::new();
    for t in &c.logs {
        match logs.iter_mut().find(|o| o.coeff == t.coeff && crate::algebra::common_radicand([&o.arg, &t.arg]).is_ok()) {
            Some(o) => o.arg = o.arg.clone() * t.arg.clone(),
            None => logs.push(t.clone()),
        }
    }
    const_normalize(&ConstExpr { logs, ..c.clone() })
}

fn fold_atan_terms(c: &ConstExpr) -> ConstExpr {
    let c = c.clone();
    let (foldable, rest): (Vec<ConstTerm>, Vec<ConstTerm>) = c.atans.iter().cloned().partition(|t| {
        t.arg.is_rational() && t.coeff.as_rational().is_some_and(|r| r.is_integer())
    });
    if foldable.len() < 2 {
        return c;
    }
    let ints: Vec<(BigInt, Rat)> = foldable
        .iter()
        .map(|t| (t.coeff.as_rational().unwrap().numer().clone(), t.arg.as_rational().unwrap().clone()))
        .collect();
    let Some((y, k)) = gauss::fold_atans(&ints) else {
        return c;
    };
    let mut out = ConstExpr { atans: rest, ..c.clone() };
    let k = QuadExt::from(Rat::from_int(k));
    match y {
        Some(y) => {
            out.pi = out.pi.clone() + k;
            if !y.is_zero() {
                out.atans.push(ConstTerm { coeff: QuadExt::one(), arg: QuadExt::from(y) });
            }
        }
        None => out.pi = out.pi.clone() + k + QuadExt::from(Rat::new(1, 2)),
    }
    const_normalize(&out)
}

/// `sin` and `cos` of `q*pi` for `q` a multiple of `1/2`.
fn trig_at_pi_multiple(f: Func, q: &Rat) -> Option<Rat> {
    let twice = q * &Rat::from_int(2);
    if !twice.is_integer() {
        return None;
    }
    let k: i64 = num_traits::ToPrimitive::to_i64(twice.numer())?.rem_euclid(4);
    let sin = [0, 1, 0, -1][k as usize];
    let cos = [1, 0, -1, 0][k as usize];
    Some(Rat::from_int(if f == Func::Sin { sin } else { cos }))
}

/// Reads a constant expression. Products are allowed when one side is a
/// scalar or both are multiples of pi.
pub fn const_from_expr(e: &Expr) -> Result<ConstExpr> {
    let unsupported = || Error::UnsupportedShape(format!("not a closed-form constant: {e}"));
    Ok(match e {
        Expr::Num(r) => ConstExpr::rational(r.clone()),
        Expr::Pi => ConstExpr::pi_times(1),
        Expr::Var(v) => return Err(Error::UnsupportedNode(format!("free symbol {v}"))),
        Expr::Neg(a) => const_from_expr(a)?.neg(),
        Expr::Add(a, b) => const_from_expr(a)?.add(&const_from_expr(b)?)?,
        Expr::Sub(a, b) => const_from_expr(a)?.sub(&const_from_expr(b)?)?,
        Expr::Mul(a, b) => {
            let (a, b) = (const_from_expr(a)?, const_from_expr(b)?);
            if let Some(k) = a.as_scalar() {
                b.scale(k)?
            } else if let Some(k) = b.as_scalar() {
                a.scale(k)?
            } else {
                match (a.as_pi_multiple(), b.as_pi_multiple()) {
                    (Some(p), Some(q)) => {
                        let r = p.clone() * q.clone();
                        ConstExpr::pi_sq_times(r.as_rational().ok_or_else(unsupported)?.clone())
                    }
                    _ => return Err(unsupported()),
                }
            }
        }
        Expr::Div(a, b) => {
            let (a, b) = (const_from_expr(a)?, const_from_expr(b)?);
            let k = b.as_scalar().ok_or_else(unsupported)?;
            if k.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            a.scale(&k.inv())?
        }
        Expr::Pow(a, n) => {
            let a = const_from_expr(a)?;
            if let Some(k) = a.as_scalar() {
                if k.is_zero() && *n < 0 {
                    return Err(Error::ZeroDenominator);
                }
                ConstExpr::rational(k.pow(*n))
            } else if *n == 1 {
                a
            } else if *n == 0 {
                ConstExpr::rational(1)
            } else if let (Some(p), 2) = (a.as_pi_multiple(), *n) {
                let r = p.clone() * p.clone();
                ConstExpr::pi_sq_times(r.as_rational().ok_or_else(unsupported)?.clone())
            } else {
                return Err(unsupported());
            }
        }
        Expr::Call(f, a) => {
            let a = const_from_expr(a)?;
            match f {
                Func::Sqrt => {
                    let k = a.as_scalar().and_then(|k| k.as_rational()).ok_or_else(unsupported)?;
                    ConstExpr::rational(QuadExt::sqrt_of(k).ok_or_else(|| {
                        Error::DomainError(format!("sqrt of a negative number in {e}"))
                    })?)
                }
                Func::Atan => ConstExpr::atan(1, a.as_scalar().ok_or_else(unsupported)?.clone()),
                Func::Log => ConstExpr::log_abs(1, a.as_scalar().ok_or_else(unsupported)?.clone())?,
                Func::Sin | Func::Cos => {
                    let q = if let Some(k) = a.as_scalar() {
                        if !k.is_zero() {
                            return Err(unsupported());
                        }
                        Rat::zero()
                    } else {
                        a.as_pi_multiple().and_then(|p| p.as_rational()).ok_or_else(unsupported)?.clone()
                    };
                    ConstExpr::rational(trig_at_pi_multiple(*f, &q).ok_or_else(unsupported)?)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn log_relations_with_large_coefficients() {
        let a = c("75559/28561*log(10)-75559/28561*log(2)-10124/28561*log(11/2)+10124/28561*log(11)");
        let b = c("75559/28561*log(5)+10124/28561*log(2)");
        assert_eq!(const_equal(&a, &b), Verdict::Equal);
        assert_eq!(const_equal(&c("log(6)"), &c("log(2)+log(3)+log(7/7)")), Verdict::Equal);
        assert_eq!(const_equal(&c("log(12)"), &c("2*log(2)+log(5)")), Verdict::NotEqual);
    }

    #[test]
    fn radical_logs_cancel() {
        // 17+12*sqrt(2) = (3+2*sqrt(2))^2
        let a = c("sqrt(2)*log(17+12*sqrt(2))");
        let b = c("2*sqrt(2)*log(3+2*sqrt(2))");
        assert_eq!(const_equal(&a, &b), Verdict::Equal);
        let d = c("sqrt(2)*log(3+2*sqrt(2))");
        assert!(matches!(const_equal(&a, &d), Verdict::Undecided { numerically_zero: false, .. }));
    }

    fn c(s: &str) -> ConstExpr {
        const_from_expr(&parse(s).unwrap()).unwrap()
    }

    fn norm(s: &str) -> String {
        const_normalize(&c(s)).to_string()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(norm("atan(8)"), "pi/2-atan(1/8)");
        assert_eq!(norm("atan(-1/3)"), "-atan(1/3)");
        assert_eq!(norm("atan(1/2)+atan(2)"), "pi/2");
        assert_eq!(norm("log(1/4)"), "-log(4)");
    }

    #[test]
    fn arctan_add_examples() {
        assert_eq!(arctan_add(&Rat::one(), &Rat::one()).to_string(), "pi/2");
        assert_eq!(arctan_add(&Rat::from_int(3), &Rat::from_int(2)).to_string(), "3/4*pi");
        assert_eq!(arctan_add(&Rat::from_int(8), &Rat::from_int(5)).to_string(), "pi-atan(1/3)");
    }

    #[test]
    fn printed_forms_agree() {
        let axiom = c("(2*atan(8)+2*atan(5)+2*atan(2)+2*atan(1/2)-pi)/2");
        assert_eq!(const_equal(&axiom, &c("5/4*pi-atan(2)")), Verdict::Equal);
        assert_eq!(const_equal(&c("5/4*pi-atan(2)"), &c("pi-atan(1/3)")), Verdict::Equal);
        let forms = [
            "pi/4+atan(3)-atan(5/3)+atan(41/3)",
            "5/4*pi-atan(75/11)",
            "pi-atan(1/4)-atan(5/12)",
        ];
        for a in forms {
            for b in forms {
                assert_eq!(const_equal(&c(a), &c(b)), Verdict::Equal, "{a} vs {b}");
            }
        }
        assert_eq!(const_equal(&c("pi/4"), &c("atan(1/2)+atan(1/3)")), Verdict::Equal);
        assert_eq!(const_equal(&c("pi/4"), &c("atan(1/2)")), Verdict::NotEqual);
    }

    #[test]
    fn wrong_branch_is_not_equal() {
        // same angle modulo pi, different value
        assert_eq!(const_equal(&c("atan(3)+atan(2)"), &c("7/4*pi")), Verdict::NotEqual);
        assert_eq!(const_equal(&c("atan(3)+atan(2)"), &c("3/4*pi")), Verdict::Equal);
    }

    #[test]
    fn logs_compare_multiplicatively() {
        assert_eq!(const_equal(&c("log(12)"), &c("2*log(2)+log(3)")), Verdict::Equal);
        assert_eq!(const_equal(&c("log(2)"), &c("log(3)")), Verdict::NotEqual);
        assert_eq!(const_equal(&c("log(2)+1"), &c("log(2)")), Verdict::NotEqual);
    }

    #[test]
    fn sqrt_coefficients_split() {
        assert_eq!(
            const_equal(&c("sqrt(2)*atan(1/2)+sqrt(2)*atan(1/3)"), &c("sqrt(2)*pi/4")),
            Verdict::Equal
        );
        assert!(matches!(
            const_equal(&c("atan(sqrt(2))"), &c("atan(sqrt(2))+0")),
            Verdict::Equal | Verdict::Undecided { numerically_zero: true, .. }
        ));
    }

    #[test]
    fn irrational_arguments_go_numeric() {
        let v = const_equal(&c("atan(sqrt(2)-1)"), &c("pi/8"));
        assert!(matches!(v, Verdict::Undecided { numerically_zero: true, .. }), "{v}");
    }

    #[test]
    fn evaluation() {
        assert_eq!(const_eval(&c("5/4*pi-atan(2)"), 7).to_string(), "2.819842");
        assert_eq!(const_eval(&c("pi-atan(1/4)-atan(5/12)"), 6).to_string(), "2.50182");
        assert_eq!(const_eval(&c("pi^2/4"), 10).to_string(), "2.4674011");
    }

    #[test]
    fn simplify_folds() {
        let s = const_simplify(&c("atan(2)+atan(8)+atan(5)-2*atan(1)+atan(1/2)"));
        assert_eq!(s.atans.len(), 1);
        assert_eq!(const_equal(&s, &c("5/4*pi-atan(2)")), Verdict::Equal);
        assert_eq!(const_simplify(&c("atan(1)")).to_string(), "pi/4");
    }

    #[test]
    fn trig_constants() {
        assert_eq!(c("sin(pi/2)+cos(pi)").to_string(), "0");
        assert_eq!(c("pi*pi/4").to_string(), "pi^2/4");
    }
}
