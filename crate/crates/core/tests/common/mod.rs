//! Generators and checks shared by the property suites and the acceptance run.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use symint::algebra::{is_squarefree, Poly, QPoly, QRatFun, QuadExt, Rat};
use symint::constants::{arctan_add, const_equal, const_eval, ConstExpr, Verdict};
use symint::definite::{definite_integrate, Interval};
use symint::expr::ratfun_to_expr;
use symint::numeric::quad_oracle;
use symint::ratint::{hermite_reduce, integrate_rational};

/// A factor of a random denominator.
#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    /// `x - a`
    Linear(Rat),
    /// `(x - a)^2 + b^2`
    Circle(Rat, Rat),
    /// `x^2 - d` for a non-square `d`
    Surd(i64),
}

impl Factor {
    fn poly(&self) -> Poly<Rat> {
        match self {
            Factor::Linear(a) => Poly::new(vec![-a.clone(), Rat::one()]),
            Factor::Circle(a, b) => {
                Poly::new(vec![a * a + b * b, Rat::from_int(-2) * a.clone(), Rat::one()])
            }
            Factor::Surd(d) => Poly::new(vec![Rat::from_int(-*d), Rat::zero(), Rat::one()]),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Factor::Linear(_) => 1,
            _ => 2,
        }
    }
}

/// A proper rational function whose denominator splits into linear and
/// quadratic factors over `Q`, with at most one real quadratic irrationality.
#[derive(Debug, Clone)]
pub struct Integrand {
    pub f: QRatFun,
    pub num: Vec<i64>,
    pub factors: Vec<(Factor, usize)>,
}

impl Integrand {
    pub fn real_poles(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (f, _) in &self.factors {
            match f {
                Factor::Linear(a) => out.push(a.to_f64()),
                Factor::Surd(d) => out.extend([(*d as f64).sqrt(), -(*d as f64).sqrt()]),
                Factor::Circle(..) => {}
            }
        }
        out
    }

    /// No pole within `gap` of `[lo, hi]`.
    pub fn clear_of_poles(&self, lo: &Rat, hi: &Rat, gap: f64) -> bool {
        let (lo, hi) = (lo.to_f64() - gap, hi.to_f64() + gap);
        self.real_poles().iter().all(|&p| p < lo || p > hi)
    }

    /// Evaluates the denominator factor by factor; the expanded form loses
    /// too many digits near complex poles.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let num = self.num.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
        let den: f64 = self
            .factors
            .iter()
            .map(|(f, m)| {
                let v = match f {
                    Factor::Linear(a) => x - a.to_f64(),
                    Factor::Circle(a, b) => (x - a.to_f64()).powi(2) + b.to_f64().powi(2),
                    Factor::Surd(d) => x * x - *d as f64,
                };
                v.powi(*m as i32)
            })
            .product();
        num / den
    }
}

pub fn eval_ratfun(f: &QRatFun, x: f64) -> f64 {
    let horner = |p: &QPoly| p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + quad_f64(c));
    horner(f.num()) / horner(f.den())
}

pub fn quad_f64(q: &QuadExt) -> f64 {
    let r = q.radicand().map_or(0.0, |d| (d as f64).sqrt());
    q.real_part().to_f64() + q.sqrt_coeff().to_f64() * r
}

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, prop_oneof![Just(1i64), Just(1), Just(2), Just(3)]).prop_map(|(n, d)| Rat::new(n, d))
}

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        3 => small_rat().prop_map(Factor::Linear),
        2 => (small_rat(), (1i64..=6, 1i64..=2).prop_map(|(n, d)| Rat::new(n, d)))
            .prop_map(|(a, b)| Factor::Circle(a, b)),
        1 => prop_oneof![Just(2i64), Just(3), Just(5)].prop_map(Factor::Surd),
    ]
}

fn denominator() -> impl Strategy<Value = Vec<(Factor, usize)>> {
    prop::collection::vec((factor(), 1usize..=3), 1..=4).prop_map(|raw| {
        let mut out: Vec<(Factor, usize)> = Vec::new();
        let mut degree = 0;
        let mut surd = false;
        for (f, m) in raw {
            if out.iter().any(|(g, _)| *g == f) || (surd && matches!(f, Factor::Surd(_))) {
                continue;
            }
            let m = m.min((6 - degree) / f.degree());
            if m == 0 {
                continue;
            }
            surd |= matches!(f, Factor::Surd(_));
            degree += m * f.degree();
            out.push((f, m));
        }
        out
    })
}

/// Random proper integrand with `deg den <= 6`.
pub fn integrand() -> impl Strategy<Value = Integrand> {
    denominator()
        .prop_flat_map(|factors| {
            let deg: usize = factors.iter().map(|(f, m)| f.degree() * m).sum();
            let num = prop::collection::vec(-6i64..=6, deg).prop_filter("nonzero numerator", |c| c.iter().any(|&v| v != 0));
            (Just(factors), num)
        })
        .prop_map(|(factors, num)| {
            let mut den = Poly::<Rat>::one();
            for (f, m) in &factors {
                for _ in 0..*m {
                    den = &den * &f.poly();
                }
            }
            let lift = |p: &Poly<Rat>| p.map(|c| QuadExt::from(c.clone()));
            let f = QRatFun::new(lift(&Poly::<Rat>::from_ints(&num)), lift(&den)).expect("nonzero denominator");
            Integrand { f, num, factors }
        })
}

/// Integrand together with a pole-free interval inside `[-5, 5]`.
pub fn definite_case() -> impl Strategy<Value = (Integrand, Rat, Rat)> {
    (integrand(), -20i64..=20, 1i64..=20).prop_map(|(f, lo, len)| {
        let lo = Rat::new(lo, 4);
        let hi = &lo + &Rat::new(len, 4);
        (f, lo, hi)
    })
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..=10_000, 1i64..=10_000)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rat::new(n, d))
}

pub fn any_rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..=10_000, 1i64..=10_000).prop_map(|(n, d)| Rat::new(n, d))
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

/// The produced antiderivative differentiates back to `f` exactly.
pub fn check_derivative_identity(c: &Integrand) -> Result<(), TestCaseError> {
    let anti = integrate_rational(&c.f).map_err(|e| fail(format!("{e} for {}", c.f)))?;
    if !anti.verify(&c.f) {
        return Err(fail(format!("derivative mismatch for {}: got {anti}", c.f)));
    }
    Ok(())
}

/// `U' + A == f` and `den(A)` squarefree.
pub fn check_hermite(c: &Integrand) -> Result<(), TestCaseError> {
    let (u, a) = hermite_reduce(&c.f).map_err(|e| fail(e.to_string()))?;
    if u.derivative().add(&a) != c.f {
        return Err(fail(format!("U' + A != f for {}", c.f)));
    }
    if !is_squarefree(a.den()) {
        return Err(fail(format!("den(A) = {} is not squarefree", a.den())));
    }
    Ok(())
}

/// `atan(x) + atan(1/x) = sign(x) * pi/2`, exactly and to 50 digits.
pub fn check_reciprocal(x: &Rat) -> Result<(), TestCaseError> {
    let lhs = ConstExpr::atan(Rat::one(), x.clone())
        .add(&ConstExpr::atan(Rat::one(), x.recip()))
        .map_err(|e| fail(e.to_string()))?;
    let rhs = ConstExpr::pi_times(Rat::new(x.signum() as i64, 2));
    if const_equal(&lhs, &rhs) != Verdict::Equal {
        return Err(fail(format!("atan({x}) + atan(1/({x})) not decided equal to {rhs}")));
    }
    let diff = const_eval(&lhs.sub(&rhs).map_err(|e| fail(e.to_string()))?, 50).to_f64();
    if diff.abs() > 1e-45 {
        return Err(fail(format!("numeric residue {diff:e} at x = {x}")));
    }
    Ok(())
}

/// `arctan_add(a, b)` matches `atan(a) + atan(b)` at 50 digits.
pub fn check_arctan_add(a: &Rat, b: &Rat) -> Result<(), TestCaseError> {
    let folded = arctan_add(a, b);
    let direct = ConstExpr::atan(Rat::one(), a.clone())
        .add(&ConstExpr::atan(Rat::one(), b.clone()))
        .map_err(|e| fail(e.to_string()))?;
    let diff = const_eval(&folded.sub(&direct).map_err(|e| fail(e.to_string()))?, 50).to_f64();
    if diff.abs() > 1e-45 {
        return Err(fail(format!("arctan_add({a}, {b}) = {folded} is off by {diff:e}")));
    }
    Ok(())
}

/// Exact definite value agrees with adaptive quadrature to `1e-9`.
pub fn check_oracle(c: &Integrand, lo: &Rat, hi: &Rat) -> Result<(), TestCaseError> {
    if !c.clear_of_poles(lo, hi, 0.25) {
        return Err(TestCaseError::reject("pole near interval"));
    }
    let iv = Interval::new(lo.clone(), hi.clone()).map_err(|e| fail(e.to_string()))?;
    let exact = match definite_integrate(&c.f, &iv) {
        Ok(v) => v,
        
        Err(e) => return Err(fail(format!("{e} for {} on {iv}", c.f))),
    };
    let q = quad_oracle(&|x| c.eval_f64(x), lo.to_f64(), hi.to_f64(), 1e-12)
        .map_err(|e| fail(format!("quadrature: {e}")))?;
    let v = exact.to_f64();
    if (v - q.value).abs() > 1e-9 * v.abs().max(1.0) {
        return Err(fail(format!(
            "int_{lo}^{hi} {} = {exact} = {v}, quadrature {}",
            ratfun_to_expr(&c.f, "x"),
            q.value
        )));
    }
    Ok(())
}

/// Deterministic runner for the acceptance target.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}
