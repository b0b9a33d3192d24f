//! Exact definite integrals with poles excluded.

use symint::algebra::Rat;
use symint::definite::{definite_integrate, Interval};
use symint::expr::expr_to_ratfun;
use symint::parser::parse;

fn main() -> symint::Result<()> {
    let cases = [
        ("1/(1+x^2)", 0, 1),
        ("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)", 1, 2),
        ("(x^2+2*x+4)/(x^4-7*x^2+2*x+17)", 0, 4),
        ("x^2/(x^2-1)", 0, 2),
    ];
    for (text, lo, hi) in cases {
        let f = expr_to_ratfun(&parse(text)?, "x")?;
        let iv = Interval::new(Rat::from_int(lo), Rat::from_int(hi))?;
        match definite_integrate(&f, &iv) {
            Ok(v) => println!("int_{lo}^{hi} {text} dx = {v} ~ {:.12}", v.to_f64()),
            Err(e) => println!("int_{lo}^{hi} {text} dx: {e}"),
        }
    }
    Ok(())
}
