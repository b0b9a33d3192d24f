//! A valid antiderivative with a jump inside the interval.
//!
//! Plugging the endpoints into it directly loses a multiple of pi; the
//! default mode subtracts the jump at each interior pole of an atan argument.

use symint::algebra::Rat;
use symint::definite::{definite_from_antiderivative, discontinuities, pi_discrepancy, Interval, Splitting};
use symint::expr::expr_to_ratfun;
use symint::numeric::quad_oracle;
use symint::parser::parse;

fn main() -> symint::Result<()> {
    let f = parse("(x^2+2*x+4)/(x^4-7*x^2+2*x+17)")?;
    let anti = parse("1/2*atan((-x-1)/(x^2-4))-1/2*atan((x+1)/(x^2-4))")?;
    let rf = expr_to_ratfun(&f, "x")?;
    let iv = Interval::new(Rat::from_int(0), Rat::from_int(4))?;

    for r in discontinuities(&anti, "x", &iv)? {
        println!("jump at {r}");
    }
    let oracle = quad_oracle(&|x| f.eval_f64("x", x).unwrap(), 0.0, 4.0, 1e-12)?.value;
    for mode in [Splitting::Split, Splitting::Naive] {
        let v = definite_from_antiderivative(&anti, &rf, "x", &iv, mode)?;
        print!("{mode:?}: {v} ~ {:.10}", v.to_f64());
        match pi_discrepancy(&v, oracle) {
            Some(0) | None => println!(),
            Some(k) => println!("  (off from the oracle by {k}*pi)"),
        }
    }
    Ok(())
}
