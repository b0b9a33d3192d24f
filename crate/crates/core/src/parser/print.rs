use crate::expr::Expr;

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) => PRODUCT,
        Expr::Neg(_) => UNARY,
        Expr::Pow(..) => POWER,
        // `p/q` behaves like a product except where it gets absorbed
        Expr::Num(r) if !r.is_integer() => PRODUCT,
        _ => ATOM,
    }
}

/// Minimal-parenthesis rendering; `parse(print_expr(e)) == e`.
pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    write(e, &mut out);
    out
}

fn wrapped(e: &Expr, min: u8, out: &mut String) -> bool {
    if prec(e) < min {
        out.push('(');
        write(e, out);
        out.push(')');
        true
    } else {
        write(e, out);
        false
    }
}

/// Whether the printed form ends in an integer literal that the parser would
/// merge with a following `/integer`.
fn ends_combinable(e: &Expr) -> bool {
    match e {
        Expr::Num(r) => r.is_integer(),
        Expr::Neg(a) => prec(a) >= UNARY && ends_combinable(a),
        Expr::Mul(_, b) => prec(b) >= UNARY && ends_combinable(b),
        _ => false,
    }
}

fn write(e: &Expr, out: &mut String) {
    match e {
        Expr::Num(r) => out.push_str(&r.to_string()),
        Expr::Pi => out.push_str("pi"),
        Expr::Var(v) => out.push_str(v),
        Expr::Neg(a) => {
            out.push('-');
            // a fraction literal is absorbed after unary minus
            if matches!(**a, Expr::Num(_)) {
                write(a, out);
            } else {
                wrapped(a, UNARY, out);
            }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            wrapped(a, SUM, out);
            out.push(if matches!(e, Expr::Add(..)) { '+' } else { '-' });
            wrapped(b, PRODUCT, out);
        }
        Expr::Mul(a, b) => {
            let left_parens = wrapped(a, PRODUCT, out);
            let _ = left_parens;
            out.push('*');
            if matches!(**b, Expr::Num(_)) {
                write(b, out);
            } else {
                wrapped(b, UNARY, out);
            }
        }
        Expr::Div(a, b) => {
            let left_parens = wrapped(a, PRODUCT, out);
            out.push('/');
            match &**b {
                Expr::Num(r) if r.is_integer() && !left_parens && ends_combinable(a) => {
                    out.push('(');
                    write(b, out);
                    out.push(')');
                }
                _ => {
                    wrapped(b, POWER, out);
                }
            }
        }
        Expr::Pow(a, n) => {
            wrapped(a, ATOM, out);
            if *n < 0 {
                out.push_str(&format!("^({n})"));
            } else {
                out.push_str(&format!("^{n}"));
            }
        }
        Expr::Call(f, a) => {
            out.push_str(f.name());
            out.push('(');
            write(a, out);
            out.push(')');
        }
    }
}
