//! `int_0^pi x sin x / (1 + cos^2 x) dx` through three arguments.

use symint::algebra::Rat;
use symint::numeric::quad_oracle;
use symint::parser::parse;
use symint::symmetry::{evaluate_trig_definite_via, parity, x_fsin_reduce, Bound, Route};

fn main() -> symint::Result<()> {
    let e = parse("x*sin(x)/(1+cos(x)^2)")?;
    let (lo, hi) = (Bound::rat(Rat::zero()), Bound::pi_times(Rat::one()));

    println!("parity: {:?}", parity(&e, "x")?);
    if let Some(form) = x_fsin_reduce(&e, "x") {
        println!("x*f(sin x) with f(s) = {}", form.f);
    }
    for route in Route::ALL {
        let v = evaluate_trig_definite_via(&e, "x", &lo, &hi, route)?;
        println!("{route:?}: {v}");
    }
    let q = quad_oracle(&|x| e.eval_f64("x", x).unwrap(), 0.0, std::f64::consts::PI, 1e-12)?;
    println!("quadrature: {:.12}", q.value);
    Ok(())
}
