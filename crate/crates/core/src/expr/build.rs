//! Rendering exact algebraic objects back into expression trees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Expr;
use crate::algebra::{Field, OrderedField, Poly, QuadExt, Rat, RatFun};

fn sqrt_node(d: u64) -> Expr {
    Expr::sqrt(Expr::int(d as i64))
}

/// `|r| * term` without a unit coefficient.
fn rat_times(r: &Rat, term: Expr) -> Expr {
    let r = r.abs();
    if r.is_one() {
        term
    } else if r.numer().is_one() {
        term / Expr::Num(Rat::from_int(r.denom().clone()))
    } else {
        Expr::Num(r) * term
    }
}

/// Negation written on the leading factor, `-2*x` rather than `-(2*x)`.
pub(crate) fn negate_leading(e: Expr) -> Expr {
    match e {
        Expr::Mul(a, b) => Expr::Mul(Box::new(negate_leading(*a)), b),
        Expr::Div(a, b) => Expr::Div(Box::new(negate_leading(*a)), b),
        Expr::Neg(a) => *a,
        e => Expr::Neg(Box::new(e)),
    }
}

/// Folds signed summands into a tree; an empty list is zero.
pub(crate) fn sum_terms(terms: Vec<(bool, Expr)>) -> Expr {
    let mut acc: Option<Expr> = None;
    for (pos, t) in terms {
        acc = Some(match (acc, pos) {
            (None, true) => t,
            (None, false) => negate_leading(t),
            (Some(a), true) => a + t,
            (Some(a), false) => a - t,
        });
    }
    acc.unwrap_or_else(|| Expr::int(0))
}

/// Magnitude of a nonzero scalar as an expression, with its sign.
pub(crate) fn quad_magnitude(c: &QuadExt) -> (bool, Expr) {
    let positive = c.signum() >= 0;
    let c = if positive { c.clone() } else { -c.clone() };
    let (a, b) = (c.real_part(), c.sqrt_coeff());
    let Some(d) = c.radicand() else {
        return (positive, Expr::Num(a.clone()));
    };
    if a.is_zero() {
        return (positive, rat_times(b, sqrt_node(d)));
    }
    // pull the rational content out: a + b*sqrt(d) = g*(a' + b'*sqrt(d))
    let g = rat_gcd(a, b);
    let (a1, b1) = (a / &g, b / &g);
    let mut parts = vec![
        (a1.is_positive(), Expr::Num(a1.abs())),
        (b1.is_positive(), rat_times(&b1, sqrt_node(d))),
    ];
    if !a1.is_positive() && b1.is_positive() {
        // sqrt(2)-1 rather than -1+sqrt(2)
        parts.swap(0, 1);
    }
    let inner = sum_terms(parts);
    (positive, rat_times(&g, inner))
}

fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    let l = a.denom().lcm(b.denom());
    let na = a.numer() * (&l / a.denom());
    let nb = b.numer() * (&l / b.denom());
    let g: BigInt = na.gcd(&nb);
    if g.is_zero() {
        Rat::one()
    } else {
        Rat::new(g.abs(), l)
    }
}

/// A scalar as an expression, e.g. `(1+sqrt(2))/2`.
pub fn quad_to_expr(c: &QuadExt) -> Expr {
    if c.is_zero() {
        return Expr::int(0);
    }
    let (pos, e) = quad_magnitude(c);
    if pos {
        e
    } else {
        negate_leading(e)
    }
}

/// `c * term` as a signed summand, dropping unit coefficients.
pub fn scaled_term(c: &QuadExt, term: Expr) -> (bool, Expr) {
    let (pos, mag) = quad_magnitude(c);
    let e = match mag {
        Expr::Num(ref r) if r.is_one() => term,
        Expr::Num(ref r) if r.numer().is_one() => term / Expr::Num(Rat::from_int(r.denom().clone())),
        m => m * term,
    };
    (pos, e)
}

fn power(var: &str, k: usize) -> Expr {
    match k {
        1 => Expr::var(var),
        _ => Expr::var(var).pow(k as i64),
    }
}

fn poly_terms(p: &Poly<QuadExt>, var: &str) -> Vec<(bool, Expr)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if k == 0 {
                quad_magnitude(c)
            } else {
                scaled_term(c, power(var, k))
            }
        })
        .collect()
}

/// Polynomial in `var`, highest degree first; rational content is factored
/// out of polynomials with several terms (`(x^5-3*x^3+x)/2`).
pub fn poly_to_expr(p: &Poly<QuadExt>, var: &str) -> Expr {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    let rational = p.coeffs().iter().all(|c| c.is_rational());
    if nonzero >= 2 && rational {
        let q = p.map(|c| c.as_rational().unwrap().clone());
        let norm = Rat::content_normalizer(q.coeffs());
        let content = norm.recip().abs();
        if !content.is_one() {
            let prim = p.scale(&QuadExt::from(content.recip()));
            let inner = sum_terms(poly_terms(&prim, var));
            return scale_expr(&content, inner);
        }
    }
    sum_terms(poly_terms(p, var))
}

fn scale_expr(c: &Rat, e: Expr) -> Expr {
    if c.numer().is_one() {
        e / Expr::Num(Rat::from_int(c.denom().clone()))
    } else {
        Expr::Num(c.clone()) * e
    }
}

pub fn ratfun_to_expr(f: &RatFun<QuadExt>, var: &str) -> Expr {
    let num = poly_to_expr(f.num(), var);
    if f.den().is_one() {
        return num;
    }
    let den = f.den();
    // clear rational denominators of the monic denominator
    if den.coeffs().iter().all(|c| c.is_rational()) {
        let q = den.map(|c| c.as_rational().unwrap().clone());
        let norm = Rat::content_normalizer(q.coeffs());
        if !norm.is_one() {
            let n2 = f.num().scale(&QuadExt::from(norm.clone()));
            let d2 = den.scale(&QuadExt::from(norm));
            return poly_to_expr(&n2, var) / poly_to_expr(&d2, var);
        }
    }
    num / poly_to_expr(den, var)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_sqrt_coefficients() {
        let c = QuadExt::new(Rat::new(1, 2), Rat::new(1, 2), 2).unwrap();
        assert_eq!(quad_to_expr(&c).to_string(), "(1+sqrt(2))/2");
        let c = QuadExt::new(Rat::zero(), Rat::from_int(-2), 2).unwrap();
        assert_eq!(quad_to_expr(&c).to_string(), "-2*sqrt(2)");
    }

    #[test]
    fn factors_content() {
        let p: Poly<QuadExt> = Poly::from_rats(&[
            Rat::zero(),
            Rat::new(1, 2),
            Rat::zero(),
            Rat::new(-3, 2),
            Rat::zero(),
            Rat::new(1, 2),
        ]);
        assert_eq!(poly_to_expr(&p, "x").to_string(), "(x^5-3*x^3+x)/2");
    }
}
