//! Antiderivative of a rational function with an exact derivative check.
//!
//! ```text
//! cargo run --example integrate_rational
//! ```

use symint::expr::expr_to_ratfun;
use symint::parser::parse;
use symint::ratint::integrate_rational;

fn main() -> symint::Result<()> {
    let inputs = [
        "1/(1+x^2)",
        "(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)",
        "(x^2+2*x+4)/(x^4-7*x^2+2*x+17)",
        "(3*x^2+1)/(x^3+x)",
        "x^3/(x^2-1)^2",
    ];
    for text in inputs {
        let f = expr_to_ratfun(&parse(text)?, "x")?;
        let anti = integrate_rational(&f)?;
        println!("int {text} dx");
        println!("  = {anti}");
        println!("  derivative matches: {}", anti.verify(&f));
    }
    Ok(())
}
