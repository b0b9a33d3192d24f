//! Partial fractions over `Q` or `Q(sqrt(k))` for denominators that split
//! into factors of degree at most two.

use crate::algebra::{
    norm_poly, poly_radicand, ratfun_radicand, small_degree_factors, to_quad_poly, Field, QPoly,
    QRatFun, QuadExt, SmallFactor,
};
use crate::error::{Error, Result};

/// One summand of a partial-fraction expansion.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq)]
pub enum PartialFraction {
    /// `residue / (x - root)`.
    Linear { residue: QuadExt, root: QuadExt },
    /// `num / factor` with `factor` monic, irreducible over the field and
    /// `deg num <= 1`.
    Quadratic { num: QPoly, factor: QPoly },
}

impl PartialFraction {
    pub fn to_ratfun(&self) -> QRatFun {
        match self {
            PartialFraction::Linear { residue, root } => QRatFun::new(
                QPoly::constant(residue.clone()),
                QPoly::new(vec![-root.clone(), QuadExt::one()]),
            )
            .expect("nonzero factor"),
            PartialFraction::Quadratic { num, factor } => {
                QRatFun::new(num.clone(), factor.clone()).expect("nonzero factor")
            }
        }
    }
}

/// Irreducible factors of `den` over `Q(sqrt(field))` of degree at most two.
fn split_over(den: &QPoly, field: Option<u64>) -> Result<Vec<QPoly>> {
    let rational = poly_radicand(den)?.is_none();
    let n = if rational {
        crate::algebra::as_rational_poly(den).expect("rational polynomial")
    } else {
        norm_poly(den)
    };
    let (factors, _) = small_degree_factors(&n);
    let mut out: Vec<QPoly> = Vec::new();
    let mut push = |f: QPoly| {
        let g = den.gcd(&f);
        if g.deg() > 0 && !out.contains(&g) {
            out.push(g);
        }
    };
    for f in factors {
        match f {
            SmallFactor::Linear(c) => push(to_quad_poly(&SmallFactor::Linear(c).poly())),
            SmallFactor::Quadratic { p, q } => {
                let disc = &p * &p - crate::algebra::Rat::from_int(4) * q.clone();
                let root = QuadExt::sqrt_of(&disc).filter(|r| field.is_some() && r.radicand() == field);
                match root {
                    Some(r) if disc.is_positive() => {
                        let half = QuadExt::from(crate::algebra::Rat::new(1, 2));
                        let alpha = QuadExt::from(-p.clone()) * half.clone();
                        for s in [r.clone(), -r] {
                            let c = alpha.clone() + s * half.clone();
                            push(QPoly::new(vec![-c, QuadExt::one()]));
                        }
                    }
                    _ => push(to_quad_poly(&SmallFactor::Quadratic { p, q }.poly())),
                }
            }
        }
    }
    let found = out.iter().fold(QPoly::one(), |acc, f| &acc * f);
    let rest = den.exact_div(&found)?.monic();
    match rest.deg() {
        0 => Ok(out),
        // an irreducible quadratic over the extension has an irreducible quartic norm
        2 => {
            out.push(rest);
            Ok(out)
        }
        _ => Err(Error::NotFullySplit(crate::expr::poly_to_expr(&rest, "x").to_string())),
    }
}

/// Expansion of a proper `a` with squarefree denominator. The field is
/// `Q(sqrt(field))` when given, otherwise the field of the coefficients.
pub fn partial_fractions(a: &QRatFun, field: Option<u64>) -> Result<Vec<PartialFraction>> {
    let own = ratfun_radicand(a)?;
    let field = match (own, field) {
        (Some(x), Some(y)) if x != y => return Err(Error::MixedRadicand(x, y)),
        (x, y) => x.or(y),
    };
    if a.is_zero() {
        return Ok(Vec::new());
    }
    let den = a.den();
    let factors = split_over(den, field)?;
    let mut out = Vec::new();
    for f in factors {
        let cofactor = den.exact_div(&f)?;
        if f.deg() == 1 {
            let root = -f.coeff(0);
            let residue = a.num().eval(&root) / den.derivative().eval(&root);
            out.push(PartialFraction::Linear { residue, root });
        } else {
            let (_, s, _) = cofactor.ext_gcd(&f);
            let num = (a.num() * &s).rem(&f)?;
            out.push(PartialFraction::Quadratic { num, factor: f });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Rat};

    fn q(n: i64) -> QuadExt {
        QuadExt::from(Rat::from_int(n))
    }

    fn sum(parts: &[PartialFraction]) -> QRatFun {
        parts.iter().fold(QRatFun::zero(), |acc, p| acc.add(&p.to_ratfun()))
    }

    #[test]
    fn difference_of_squares() {
        let a = QRatFun::new(QPoly::one(), Poly::new(vec![q(-1), q(0), q(1)])).unwrap();
        let parts = partial_fractions(&a, None).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&PartialFraction::Linear {
            residue: QuadExt::from(Rat::new(1, 2)),
            root: q(1)
        }));
        assert_eq!(sum(&parts), a);
    }

    #[test]
    fn splits_over_sqrt2() {
        let a = QRatFun::new(QPoly::one(), Poly::new(vec![q(-2), q(0), q(1)])).unwrap();
        assert!(matches!(
            partial_fractions(&a, None).unwrap().as_slice(),
            [PartialFraction::Quadratic { .. }]
        ));
        let parts = partial_fractions(&a, Some(2)).unwrap();
        assert_eq!(parts.len(), 2);
        let sqrt2 = QuadExt::new(Rat::zero(), Rat::one(), 2).unwrap();
        let expected = QuadExt::one() / (q(2) * sqrt2.clone());
        assert!(parts.contains(&PartialFraction::Linear { residue: expected, root: sqrt2 }));
        assert_eq!(sum(&parts), a);
    }

    #[test]
    fn bronstein_does_not_split() {
        let a = QRatFun::new(
            Poly::new(vec![q(6), q(0), q(-3), q(0), q(1)]),
            Poly::new(vec![q(4), q(0), q(5), q(0), q(-5), q(0), q(1)]),
        )
        .unwrap();
        assert!(matches!(partial_fractions(&a, None), Err(Error::NotFullySplit(_))));
    }
}
