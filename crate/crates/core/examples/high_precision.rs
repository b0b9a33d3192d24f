//! Evaluating expressions and antiderivatives to many digits.

use symint::algebra::Rat;
use symint::expr::expr_to_ratfun;
use symint::numeric::{eval_at, eval_expr};
use symint::parser::parse;
use symint::ratint::integrate_rational;

fn main() -> symint::Result<()> {
    let machin = parse("16*atan(1/5)-4*atan(1/239)")?;
    println!("pi ~ {}", eval_expr(&machin, None, 60)?);
    println!("sqrt(2) ~ {}", eval_expr(&parse("sqrt(2)")?, None, 40)?);

    let f = expr_to_ratfun(&parse("sqrt(2)/((x-1)^4+1/16)")?, "x")?;
    let anti = integrate_rational(&f)?;
    for x in [-3, 0, 1, 5] {
        println!("F({x}) = {}", eval_at(&anti, &Rat::from_int(x), 50)?);
    }
    Ok(())
}
