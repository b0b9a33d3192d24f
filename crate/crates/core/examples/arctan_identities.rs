//! Exact decisions about sums of arctangents.

use symint::algebra::Rat;
use symint::constants::{arctan_add, const_equal, const_from_expr, const_simplify};
use symint::parser::parse;

fn main() -> symint::Result<()> {
    let pairs = [
        ("4*atan(1/5)-atan(1/239)", "pi/4"),
        ("atan(1/2)+atan(1/3)", "pi/4"),
        ("atan(8)+atan(5)", "5/4*pi-atan(2)"),
        ("atan(3)+atan(2)", "7/4*pi"),
        ("pi/4+atan(3)-atan(5/3)+atan(41/3)", "5/4*pi-atan(75/11)"),
        ("atan(1/3)", "atan(1/4)"),
    ];
    for (a, b) in pairs {
        let ca = const_from_expr(&parse(a)?)?;
        let cb = const_from_expr(&parse(b)?)?;
        println!("{a} vs {b}: {}", const_equal(&ca, &cb));
    }

    let sum = arctan_add(&Rat::from_int(3), &Rat::from_int(2));
    println!("atan(3) + atan(2) = {sum}");
    let messy = const_from_expr(&parse("2*atan(8)+2*atan(5)+2*atan(2)+2*atan(1/2)-pi")?)?;
    println!("simplified: {}", const_simplify(&messy));
    Ok(())
}
