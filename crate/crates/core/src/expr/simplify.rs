//! Light algebraic cleanup: constant folding, flattening of sums and
//! products, merging of like terms and equal bases. No trig identities.

use super::{Expr, Func};
use crate::algebra::Rat;

pub fn simplify(e: &Expr) -> Expr {
    match e {
        Expr::Num(_) | Expr::Pi | Expr::Var(_) => e.clone(),
        Expr::Call(f, a) => call(*f, simplify(a)),
        Expr::Pow(a, n) => power(simplify(a), *n),
        Expr::Neg(_) | Expr::Add(..) | Expr::Sub(..) => {
            let mut terms = Vec::new();
            collect_sum(e, true, &mut terms);
            build_sum(terms)
        }
        Expr::Mul(..) | Expr::Div(..) => {
            let mut coeff = Rat::one();
            let mut factors = Vec::new();
            collect_product(e, 1, &mut coeff, &mut factors);
            build_product(coeff, factors)
        }
    }
}

fn call(f: Func, a: Expr) -> Expr {
    if a.is_zero() {
        match f {
            Func::Sin | Func::Atan | Func::Sqrt => return Expr::int(0),
            Func::Cos => return Expr::int(1),
            Func::Log => {}
        }
    }
    if f == Func::Log && a.is_one() {
        return Expr::int(0);
    }
    Expr::call(f, a)
}

fn power(base: Expr, n: i64) -> Expr {
    match (base, n) {
        (_, 0) => Expr::int(1),
        (b, 1) => b,
        (Expr::Num(r), n) if !(r.is_zero() && n < 0) => Expr::Num(r.pow(n)),
        (Expr::Pow(b, m), n) => power(*b, m * n),
        (Expr::Neg(b), n) => {
            let p = power(*b, n);
            if n % 2 == 0 {
                p
            } else {
                neg(p)
            }
        }
        (b, n) if n < 0 => build_product(Rat::one(), vec![(b, n)]),
        (b, n) => Expr::Pow(Box::new(b), n),
    }
}

fn neg(e: Expr) -> Expr {
    match e {
        Expr::Neg(a) => *a,
        e if e.is_zero() => e,
        e => Expr::Neg(Box::new(e)),
    }
}

fn collect_sum(e: &Expr, pos: bool, out: &mut Vec<(Rat, Option<Expr>)>) {
    match e {
        Expr::Add(a, b) => {
            collect_sum(a, pos, out);
            collect_sum(b, pos, out);
        }
        Expr::Sub(a, b) => {
            collect_sum(a, pos, out);
            collect_sum(b, !pos, out);
        }
        Expr::Neg(a) => collect_sum(a, !pos, out),
        _ => {
            let s = simplify(e);
            if matches!(s, Expr::Add(..) | Expr::Sub(..) | Expr::Neg(_)) {
                collect_sum(&s, pos, out);
                return;
            }
            let (c, rest) = split_coeff(s);
            out.push((if pos { c } else { -c }, rest));
        }
    }
}

/// `c * rest` decomposition of a simplified, non-sum term.
fn split_coeff(e: Expr) -> (Rat, Option<Expr>) {
    match e {
        Expr::Num(r) => (r, None),
        Expr::Neg(a) => {
            let (c, rest) = split_coeff(*a);
            (-c, rest)
        }
        Expr::Mul(a, b) if matches!(*a, Expr::Num(_)) => {
            let Expr::Num(c) = *a else { unreachable!() };
            (c, Some(*b))
        }
        Expr::Div(a, b) if matches!(*b, Expr::Num(_)) => {
            let Expr::Num(q) = *b else { unreachable!() };
            let (c, rest) = split_coeff(*a);
            (c / q, rest)
        }
        Expr::Mul(a, b) => {
            // coefficient may sit at the head of a left-nested chain
            let (c, rest) = split_coeff(*a);
            match rest {
                Some(r) if !c.is_one() => (c, Some(Expr::Mul(Box::new(r), b))),
                Some(r) => (Rat::one(), Some(Expr::Mul(Box::new(r), b))),
                None => (c, Some(*b)),
            }
        }
        e => (Rat::one(), Some(e)),
    }
}

fn build_sum(terms: Vec<(Rat, Option<Expr>)>) -> Expr {
    let mut merged: Vec<(Rat, Option<Expr>)> = Vec::new();
    for (c, rest) in terms {
        if let Some(slot) = merged.iter_mut().find(|(_, r)| *r == rest) {
            slot.0 = &slot.0 + &c;
        } else {
            merged.push((c, rest));
        }
    }
    let mut acc: Option<Expr> = None;
    for (c, rest) in merged {
        if c.is_zero() {
            continue;
        }
        let pos = c.is_positive();
        // a leading negative term carries its own sign
        let signed = if acc.is_none() { c.clone() } else { c.abs() };
        let term = match rest {
            None => Expr::num(signed),
            Some(r) => {
                let mut c = signed;
                let mut f = Vec::new();
                collect_product(&r, 1, &mut c, &mut f);
                build_product(c, f)
            }
        };
        acc = Some(match acc {
            None => term,
            Some(a) if pos => a + term,
            Some(a) => a - term,
        });
    }
    acc.unwrap_or_else(|| Expr::int(0))
}

fn collect_product(e: &Expr, exp: i64, coeff: &mut Rat, out: &mut Vec<(Expr, i64)>) {
    match e {
        Expr::Mul(a, b) => {
            collect_product(a, exp, coeff, out);
            collect_product(b, exp, coeff, out);
        }
        Expr::Div(a, b) => {
            collect_product(a, exp, coeff, out);
            collect_product(b, -exp, coeff, out);
        }
        _ => {
            let s = simplify(e);
            match s {
                Expr::Num(r) => {
                    if r.is_zero() && exp < 0 {
                        // left symbolic: division by a literal zero
                        out.push((Expr::Num(r), exp));
                    } else {
                        *coeff = &*coeff * &r.pow(exp);
                    }
                }
                Expr::Neg(a) => {
                    *coeff = -coeff.clone();
                    collect_product(&a, exp, coeff, out);
                }
                Expr::Mul(..) | Expr::Div(..) => collect_product(&s, exp, coeff, out),
                Expr::Pow(b, n) => push_factor(out, *b, n * exp),
                s => push_factor(out, s, exp),
            }
        }
    }
}

fn push_factor(out: &mut Vec<(Expr, i64)>, base: Expr, exp: i64) {
    if let Some(slot) = out.iter_mut().find(|(b, _)| *b == base) {
        slot.1 += exp;
    } else {
        out.push((base, exp));
    }
}

fn rank(e: &Expr) -> u8 {
    match e {
        Expr::Num(_) => 0,
        Expr::Pi => 1,
        Expr::Var(_) => 2,
        Expr::Pow(b, _) => rank(b),
        Expr::Call(..) => 4,
        _ => 3,
    }
}

fn chain(factors: Vec<Expr>) -> Option<Expr> {
    factors.into_iter().reduce(|a, b| a * b)
}

fn build_product(coeff: Rat, factors: Vec<(Expr, i64)>) -> Expr {
    if coeff.is_zero() {
        return Expr::int(0);
    }
    let mut factors: Vec<(Expr, i64)> = factors.into_iter().filter(|(_, n)| *n != 0).collect();
    factors.sort_by_cached_key(|(b, _)| (rank(b), b.to_string()));
    let pow_of = |b: Expr, n: i64| if n == 1 { b } else { Expr::Pow(Box::new(b), n) };
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (b, n) in factors {
        if n > 0 {
            num.push(pow_of(b, n));
        } else {
            den.push(pow_of(b, -n));
        }
    }
    let neg_sign = coeff.is_negative();
    let p = Rat::from_int(coeff.numer().clone()).abs();
    let q = Rat::from_int(coeff.denom().clone());
    if !p.is_one() || num.is_empty() {
        num.insert(0, Expr::Num(p));
    }
    if neg_sign {
        // the sign goes on the leading factor: `-6*x`, not `-(6*x)`
        num[0] = Expr::Neg(Box::new(num[0].clone()));
    }
    if !q.is_one() {
        den.insert(0, Expr::Num(q));
    }
    let n = chain(num).expect("nonempty numerator");
    match chain(den) {
        None => n,
        Some(d) => n / d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn s(text: &str) -> String {
        simplify(&parse(text).unwrap()).to_string()
    }

    #[test]
    fn folds_constants() {
        assert_eq!(s("1+2*3"), "7");
        assert_eq!(s("x*1+0"), "x");
        assert_eq!(s("x^1"), "x");
    }

    #[test]
    fn merges_like_terms() {
        assert_eq!(s("x+x"), "2*x");
        assert_eq!(s("x-x"), "0");
        assert_eq!(s("x*x"), "x^2");
    }

    #[test]
    fn orders_products() {
        assert_eq!(s("sin(x)*x*(-3)"), "-3*x*sin(x)");
        assert_eq!(s("x/2"), "x/2");
    }

    #[test]
    fn idempotent() {
        for t in ["1/(1+x^2)", "-6*x*sin(3*x^2)", "5/4*pi-atan(2)", "(x-1)/(x+2)^3"] {
            let once = simplify(&parse(t).unwrap());
            assert_eq!(simplify(&once), once, "{t}");
        }
    }
}
