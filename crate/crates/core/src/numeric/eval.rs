//! High-precision evaluation of antiderivatives and expression trees.

use astro_float::BigFloat;

use super::bigfloat::{Approx, Ctx};
use crate::algebra::{Field, QuadExt, Rat};
use crate::error::{Error, Result};
use crate::expr::{Expr, Func};
use crate::ratint::AntiDeriv;

/// `F(x)` to `digits` significant digits; logs use `log|.|`.
pub fn eval_at(f: &AntiDeriv, x: &Rat, digits: usize) -> Result<Approx> {
    let mut c = Ctx::new(digits + 10);
    let v = eval_antideriv(&mut c, f, x)?;
    Ok(c.approx(v).with_digits(digits))
}

pub(crate) fn eval_antideriv(c: &mut Ctx, f: &AntiDeriv, x: &Rat) -> Result<BigFloat> {
    let xq = QuadExt::from(x.clone());
    let pole = || Error::PoleAtPoint(format!("x = {x}"));
    let exact = f.poly_part.eval(&xq) + f.rat_part.eval(&xq).ok_or_else(pole)?;
    let mut acc = c.quad(&exact);
    for l in &f.logs {
        let v = l.arg.eval(&xq);
        if v.is_zero() {
            return Err(pole());
        }
        let v = c.quad(&v);
        let t = c.ln_abs(&v);
        let k = c.quad(&l.coeff);
        acc = c.add(&acc, &c.mul(&k, &t));
    }
    for a in &f.atans {
        let v = a.arg.eval(&xq).ok_or_else(pole)?;
        let v = c.quad(&v);
        let t = c.atan(&v);
        let k = c.quad(&a.coeff);
        acc = c.add(&acc, &c.mul(&k, &t));
    }
    Ok(acc)
}

/// Value of `e` with `var` bound to `x` (or of a constant expression when
/// `at` is `None`).
pub fn eval_expr(e: &Expr, at: Option<(&str, &Rat)>, digits: usize) -> Result<Approx> {
    let mut c = Ctx::new(digits + 10);
    let v = eval_expr_in(&mut c, e, at)?;
    Ok(c.approx(v).with_digits(digits))
}

pub(crate) fn eval_expr_in(c: &mut Ctx, e: &Expr, at: Option<(&str, &Rat)>) -> Result<BigFloat> {
    Ok(match e {
        Expr::Num(r) => c.rat(r),
        Expr::Pi => c.pi(),
        Expr::Var(v) => match at {
            Some((name, x)) if name == v => c.rat(x),
            _ => return Err(Error::UnsupportedNode(format!("free symbol {v}"))),
        },
        Expr::Neg(a) => eval_expr_in(c, a, at)?.neg(),
        Expr::Add(a, b) => {
            let (a, b) = (eval_expr_in(c, a, at)?, eval_expr_in(c, b, at)?);
            c.add(&a, &b)
        }
        Expr::Sub(a, b) => {
            let (a, b) = (eval_expr_in(c, a, at)?, eval_expr_in(c, b, at)?);
            c.sub(&a, &b)
        }
        Expr::Mul(a, b) => {
            let (a, b) = (eval_expr_in(c, a, at)?, eval_expr_in(c, b, at)?);
            c.mul(&a, &b)
        }
        Expr::Div(a, b) => {
            let (a, b) = (eval_expr_in(c, a, at)?, eval_expr_in(c, b, at)?);
            if b.is_zero() {
                return Err(Error::PoleAtPoint(format!("division by zero in {e}")));
            }
            c.div(&a, &b)
        }
        Expr::Pow(a, n) => {
            let base = eval_expr_in(c, a, at)?;
            if base.is_zero() && *n < 0 {
                return Err(Error::PoleAtPoint(format!("zero to a negative power in {e}")));
            }
            let mut acc = c.int(1);
            for _ in 0..n.unsigned_abs() {
                acc = c.mul(&acc, &base);
            }
            if *n < 0 {
                c.div(&c.int(1), &acc)
            } else {
                acc
            }
        }
        Expr::Call(f, a) => {
            let v = eval_expr_in(c, a, at)?;
            match f {
                Func::Sin => c.sin(&v),
                Func::Cos => c.cos(&v),
                Func::Atan => c.atan(&v),
                Func::Log => {
                    if v.is_zero() {
                        return Err(Error::PoleAtPoint(format!("log(0) in {e}")));
                    }
                    c.ln_abs(&v)
                }
                Func::Sqrt => {
                    if v.is_negative() {
                        return Err(Error::DomainError(format!("sqrt of a negative number in {e}")));
                    }
                    c.sqrt(&v)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn constant_expression() {
        let v = eval_expr(&parse("5/4*pi-atan(2)").unwrap(), None, 7).unwrap();
        assert_eq!(v.to_string(), "2.819842");
    }

    #[test]
    fn pole_reported() {
        let e = parse("1/x").unwrap();
        assert!(matches!(
            eval_expr(&e, Some(("x", &Rat::zero())), 10),
            Err(Error::PoleAtPoint(_))
        ));
    }
}
