use std::collections::BTreeMap;

use super::{Expr, Func};
use crate::algebra::{ratfun_radicand, QRatFun, QuadExt};
use crate::error::{Error, Result};

/// Exact reduced rational function of `var` equal to `e` wherever defined.
///
/// Summands over different radicands are tolerated as long as at most one
/// radicand survives after like summands are combined.
pub fn expr_to_ratfun(e: &Expr, var: &str) -> Result<QRatFun> {
    let mut groups: BTreeMap<Option<u64>, QRatFun> = BTreeMap::new();
    for (pos, term) in e.summands() {
        let f = convert(term, var)?;
        let f = if pos { f } else { f.neg() };
        let key = ratfun_radicand(&f)?;
        let slot = groups.entry(key).or_insert_with(QRatFun::zero);
        *slot = slot.add(&f);
    }
    let mut total = QRatFun::zero();
    let mut seen: Option<u64> = None;
    for f in groups.into_values() {
        if let Some(d) = ratfun_radicand(&f)? {
            match seen {
                Some(s) if s != d => return Err(Error::MixedRadicand(s, d)),
                _ => seen = Some(d),
            }
        }
        total = total.add(&f);
    }
    Ok(total)
}

fn combine(a: &QRatFun, b: &QRatFun) -> Result<()> {
    if let (Some(x), Some(y)) = (ratfun_radicand(a)?, ratfun_radicand(b)?) {
        if x != y {
            return Err(Error::MixedRadicand(x, y));
        }
    }
    Ok(())
}

fn not_rational(e: &Expr, var: &str) -> Error {
    Error::NotRationalInVar {
        var: var.to_string(),
        node: e.to_string(),
    }
}

fn convert(e: &Expr, var: &str) -> Result<QRatFun> {
    Ok(match e {
        Expr::Num(r) => QRatFun::constant(QuadExt::from(r.clone())),
        Expr::Var(v) if v == var => QRatFun::x(),
        Expr::Var(v) => return Err(Error::UnsupportedNode(format!("free symbol {v}"))),
        Expr::Pi => return Err(Error::UnsupportedNode("pi".into())),
        Expr::Neg(a) => convert(a, var)?.neg(),
        Expr::Add(..) | Expr::Sub(..) => expr_to_ratfun(e, var)?,
        Expr::Mul(a, b) => {
            let (x, y) = (convert(a, var)?, convert(b, var)?);
            combine(&x, &y)?;
            x.mul(&y)
        }
        Expr::Div(a, b) => {
            let (x, y) = (convert(a, var)?, convert(b, var)?);
            combine(&x, &y)?;
            x.div(&y)?
        }
        Expr::Pow(a, n) => convert(a, var)?.pow(*n)?,
        Expr::Call(Func::Sqrt, a) => {
            let inner = match convert(a, var) {
                Ok(f) => f,
                Err(_) if a.contains_var(var) => return Err(not_rational(e, var)),
                Err(err) => return Err(err),
            };
            if !inner.is_constant() {
                return Err(not_rational(e, var));
            }
            let c = inner.num().coeff(0);
            let root = c
                .as_rational()
                .filter(|r| !r.is_negative())
                .and_then(QuadExt::sqrt_of)
                .ok_or_else(|| Error::UnsupportedNode(format!("sqrt of {c}")))?;
            QRatFun::constant(root)
        }
        Expr::Call(..) => {
            if e.contains_var(var) {
                return Err(not_rational(e, var));
            }
            return Err(Error::UnsupportedNode(e.to_string()));
        }
    })
}

/// Equality of reduced rational forms (removable singularities ignored).
pub fn expr_equal_as_ratfun(e1: &Expr, e2: &Expr, var: &str) -> Result<bool> {
    let a = expr_to_ratfun(e1, var)?;
    let b = expr_to_ratfun(e2, var)?;
    Ok(a == b || a.sub(&b).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::parser::parse;

    fn conv(s: &str) -> Result<QRatFun> {
        expr_to_ratfun(&parse(s).unwrap(), "x")
    }

    #[test]
    fn cancels() {
        let f = conv("(x^2-1)/(x-1)").unwrap();
        assert_eq!(f, QRatFun::from_poly(Poly::from_ints(&[1, 1])));
    }

    #[test]
    fn gartner_over_sqrt2() {
        let f = conv("sqrt(2)/((x-1)^4+1/16)").unwrap();
        assert_eq!(ratfun_radicand(&f).unwrap(), Some(2));
        assert_eq!(f.den().lc(), crate::algebra::QuadExt::from(1));
        assert_eq!(f.den().deg(), 4);
    }

    #[test]
    fn transcendental_rejected() {
        assert!(matches!(conv("sin(x)"), Err(Error::NotRationalInVar { .. })));
    }

    #[test]
    fn mixed_radicands_cancel() {
        let f = conv("sqrt(2)*x + sqrt(3) - sqrt(3) + 1").unwrap();
        assert_eq!(ratfun_radicand(&f).unwrap(), Some(2));
        assert!(matches!(conv("sqrt(2)+sqrt(3)*x"), Err(Error::MixedRadicand(..))));
    }

    #[test]
    fn equality() {
        let p = |s: &str| parse(s).unwrap();
        assert!(expr_equal_as_ratfun(&p("x+1"), &p("(x^2-1)/(x-1)"), "x").unwrap());
        assert!(!expr_equal_as_ratfun(&p("1/(1+x^2)"), &p("1/(1-x^2)"), "x").unwrap());
    }
}
