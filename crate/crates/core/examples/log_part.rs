//! Logarithmic part via the resultant `res_x(A - t D', D)`.
//!
//! The integrand below has a degree 14 denominator but only two logs,
//! with coefficients in Q(sqrt(2)).

use symint::algebra::squarefree_part;
use symint::expr::{expr_to_ratfun, poly_to_expr};
use symint::parser::parse;
use symint::ratint::{integrate_rational, resultant_roots, rothstein_trager_resultant};

const F: &str = "(7*x^13+10*x^8+4*x^7-7*x^6-4*x^3-4*x^2+3*x+3)\
                 /(x^14-2*x^8-2*x^7-2*x^4-4*x^3-x^2+2*x+1)";

fn main() -> symint::Result<()> {
    let f = expr_to_ratfun(&parse(F)?, "x")?;
    let r = rothstein_trager_resultant(f.num(), f.den());
    let rs = squarefree_part(&r);
    println!("squarefree part of r(t): {}", poly_to_expr(&rs, "t"));
    let mut field = None;
    for root in resultant_roots(&rs, &mut field)? {
        println!("  root {root:?}");
    }
    let anti = integrate_rational(&f)?;
    for l in &anti.logs {
        println!("({}) * log({})", l.coeff, poly_to_expr(&l.arg, "x"));
    }
    println!("verified: {}", anti.verify(&f));
    Ok(())
}
