use super::{simplify, Expr, Func};
use crate::error::Result;

/// Symbolic derivative with respect to `var`, followed by algebraic cleanup
/// (constant folding and product normalization; no trig identities).
pub fn differentiate(e: &Expr, var: &str) -> Result<Expr> {
    Ok(simplify(&raw(e, var)))
}

fn raw(e: &Expr, var: &str) -> Expr {
    if !e.contains_var(var) {
        return Expr::int(0);
    }
    let d = |x: &Expr| raw(x, var);
    match e {
        Expr::Num(_) | Expr::Pi => Expr::int(0),
        Expr::Var(_) => Expr::int(1),
        Expr::Neg(a) => -d(a),
        Expr::Add(a, b) => d(a) + d(b),
        Expr::Sub(a, b) => d(a) - d(b),
        Expr::Mul(a, b) => d(a) * (**b).clone() + (**a).clone() * d(b),
        Expr::Div(a, b) => {
            if !b.contains_var(var) {
                return d(a) / (**b).clone();
            }
            (d(a) * (**b).clone() - (**a).clone() * d(b)) / (**b).clone().pow(2)
        }
        Expr::Pow(a, n) => Expr::int(*n) * (**a).clone().pow(n - 1) * d(a),
        Expr::Call(f, u) => {
            let u0 = (**u).clone();
            let du = d(u);
            match f {
                Func::Sin => Expr::cos(u0) * du,
                Func::Cos => -(Expr::sin(u0) * du),
                Func::Atan => du / (Expr::int(1) + u0.pow(2)),
                Func::Log => du / u0,
                Func::Sqrt => du / (Expr::int(2) * Expr::sqrt(u0)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn d(s: &str) -> String {
        differentiate(&parse(s).unwrap(), "x").unwrap().to_string()
    }

    #[test]
    fn table_row() {
        assert_eq!(d("cos(3*x^2)"), "-6*x*sin(3*x^2)");
    }

    #[test]
    fn atan_rule() {
        assert_eq!(d("atan(x)"), "1/(1+x^2)");
    }

    #[test]
    fn constants_vanish() {
        assert_eq!(d("pi+atan(2)"), "0");
    }
}
