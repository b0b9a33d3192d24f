mod common;

use common::*;
use proptest::prelude::*;

use symint::algebra::Rat;
use symint::constants::{const_equal, ConstExpr, Verdict};
use symint::definite::{definite_integrate, Interval};
use symint::expr::{differentiate, exprs_equivalent, ratfun_to_expr};
use symint::numeric::quad_oracle;
use symint::parser::{parse, print_expr};
use symint::symmetry::{evaluate_trig_definite, parity, trig_to_rational, x_fsin_reduce, Bound, Parity};
use symint::Error;

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn derivative_identity(c in integrand()) {
        check_derivative_identity(&c)?;
    }

    #[test]
    fn hermite_postcondition(c in integrand()) {
        check_hermite(&c)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reciprocal_arctan(x in nonzero_rat()) {
        check_reciprocal(&x)?;
    }

    #[test]
    fn arctan_add_branch(a in any_rat(), b in any_rat()) {
        check_arctan_add(&a, &b)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn oracle_agreement((c, lo, hi) in definite_case()) {
        check_oracle(&c, &lo, &hi)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn additivity((c, a, b) in definite_case(), extra in 1i64..=8) {
        let mid = b.clone();
        let hi = &b + &Rat::new(extra, 4);
        let whole = Interval::new(a.clone(), hi.clone()).unwrap();
        let total = match definite_integrate(&c.f, &whole) {
            Ok(v) => v,
            Err(Error::ImproperIntegral { .. }) => return Err(TestCaseError::reject("pole")),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let left = definite_integrate(&c.f, &Interval::new(a, mid.clone()).unwrap()).unwrap();
        let right = definite_integrate(&c.f, &Interval::new(mid, hi).unwrap()).unwrap();
        let sum = left.add(&right).unwrap();
        prop_assert_eq!(const_equal(&sum, &total), Verdict::Equal, "{} + {} vs {}", left, right, total);
    }

    #[test]
    fn odd_part_integrates_to_zero(c in integrand(), a in 1i64..=12) {
        // f(x) - f(-x) is odd
        let e = ratfun_to_expr(&c.f, "x");
        let odd = parse(&format!("({0})-({1})", print_expr(&e), print_expr(&e.substitute("x", &parse("-x").unwrap())))).unwrap();
        prop_assert_eq!(parity(&odd, "x").unwrap(), Parity::Odd);
        let rf = symint::expr::expr_to_ratfun(&odd, "x").unwrap();
        let a = Rat::new(a, 4);
        let iv = Interval::new(-a.clone(), a).unwrap();
        match definite_integrate(&rf, &iv) {
            Ok(v) => prop_assert_eq!(const_equal(&v, &ConstExpr::zero()), Verdict::Equal, "got {}", v),
            Err(Error::ImproperIntegral { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn print_parse_round_trip(c in integrand()) {
        let e = ratfun_to_expr(&c.f, "x");
        let back = parse(&print_expr(&e)).unwrap();
        prop_assert!(exprs_equivalent(&e, &back));
    }

    #[test]
    fn antiderivative_expr_differentiates_back(c in integrand()) {
        let anti = symint::ratint::integrate_rational(&c.f).unwrap();
        let d = differentiate(&anti.to_expr("x"), "x").unwrap();
        prop_assert!(exprs_equivalent(&d, &ratfun_to_expr(&c.f, "x")));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn trig_substitution_preserves_value(a in 1i64..=6, turns in 1i64..=4) {
        let text = format!("sin(x)/({a}+cos(x)^2)");
        let e = parse(&text).unwrap();
        let (lo, hi) = (Bound::rat(Rat::zero()), Bound::pi_times(Rat::new(turns, 2)));
        let form = trig_to_rational(&e, "x", &lo, &hi).unwrap();
        let v = form.integrate().unwrap().to_f64();
        let q = quad_oracle(&|x| e.eval_f64("x", x).unwrap(), 0.0, hi.to_f64(), 1e-12).unwrap().value;
        prop_assert!((v - q).abs() < 1e-9, "{}: {} vs {}", text, v, q);
    }

    #[test]
    fn x_sin_reflection_numerically(a in 1i64..=6, m in 1i64..=5, spelling in 0usize..2) {
        let den = [format!("{a}+{a}*cos(x)^2"), format!("2*{a}-{a}*sin(x)^2")];
        let text = format!("{m}*x*sin(x)/({})", den[spelling]);
        let e = parse(&text).unwrap();
        prop_assert!(x_fsin_reduce(&e, "x").is_some());
        let v = evaluate_trig_definite(&e, "x", &Bound::rat(Rat::zero()), &Bound::pi_times(Rat::one()))
            .unwrap()
            .to_f64();
        let q = quad_oracle(&|x| e.eval_f64("x", x).unwrap(), 0.0, std::f64::consts::PI, 1e-12).unwrap().value;
        prop_assert!((v - q).abs() < 1e-9, "{}: {} vs {}", text, v, q);
    }

    #[test]
    fn json_output_is_well_formed(c in integrand()) {
        let text = print_expr(&ratfun_to_expr(&c.f, "x"));
        let out = symint::cli::run(["symint", "integrate", text.as_str(), "--json"]);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        prop_assert_eq!(doc["status"].as_str(), Some("ok"));
        let anti = parse(doc["antiderivative"].as_str().unwrap()).unwrap();
        let d = differentiate(&anti, "x").unwrap();
        prop_assert!(exprs_equivalent(&d, &parse(&text).unwrap()));
    }
}

#[test]
fn corpus_run_is_deterministic() {
    let text = include_str!("../data/golden.jsonl");
    let a = symint::cli::corpus::run_corpus(text, 1e-6);
    let b = symint::cli::corpus::run_corpus(text, 1e-6);
    assert_eq!(a, b);
    assert_eq!(a.failed(), 0, "{a}");
}
