//! Splitting off the rational part of an integral.
//!
//! `hermite_reduce(f)` returns `(U, A)` with `U' + A = f` and `A` having
//! a squarefree denominator.

use symint::algebra::is_squarefree;
use symint::expr::expr_to_ratfun;
use symint::parser::parse;
use symint::ratint::hermite_reduce;

fn main() -> symint::Result<()> {
    for text in ["1/(x^2+1)^2", "(x+2)/((x-1)^3*(x+1))", "x^4/(x^2+x+1)^3"] {
        let f = expr_to_ratfun(&parse(text)?, "x")?;
        let (_, proper) = f.split_polynomial();
        let (u, a) = hermite_reduce(&proper)?;
        println!("f = {text}");
        println!("  U = {u}");
        println!("  A = {a}");
        let back = u.derivative().add(&a) == proper;
        println!("  U' + A == f: {back}, den(A) squarefree: {}", is_squarefree(a.den()));
    }
    Ok(())
}
