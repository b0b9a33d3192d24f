//! Parsing, printing, differentiating.

use symint::expr::{differentiate, simplify};
use symint::parser::{parse, print_expr};

fn main() {
    for text in ["cos(3*x^2)", "atan(x)+atan(x^3)", "x*log(x^2+1)", "-x^2", "sqrt(2)*x/(1+2^-1)", "3*/x"] {
        match parse(text) {
            Ok(e) => {
                let d = differentiate(&e, "x").map(|d| print_expr(&simplify(&d)));
                println!("{} -> d/dx = {}", print_expr(&e), d.unwrap_or_else(|err| err.to_string()));
            }
            Err(err) => println!("{text}: {err}"),
        }
    }
}
