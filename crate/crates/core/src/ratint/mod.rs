//! Indefinite integration of rational functions.

mod hermite;
mod logpart;
mod partial;

use std::fmt;

use crate::algebra::{ratfun_radicand, QPoly, QRatFun, QuadExt};
use crate::error::{Error, Result};
use crate::expr::{poly_to_expr, ratfun_to_expr, scaled_term, Expr};

pub use hermite::hermite_reduce;
pub use logpart::{log_part, log_to_atan, resultant_roots, rothstein_trager_resultant, ResultantRoot};
pub use partial::{partial_fractions, PartialFraction};

/// `coeff * log(arg)`; real evaluation uses `log|arg|`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogTerm {
    pub coeff: QuadExt,
    pub arg: QPoly,
}

impl LogTerm {
    /// Normalizes the argument (primitive over `Q`, monic otherwise).
    pub fn new(coeff: QuadExt, arg: QPoly) -> Self {
        LogTerm {
            coeff,
            arg: arg.normalized(),
        }
    }
}

/// `coeff * atan(arg)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AtanTerm {
    pub coeff: QuadExt,
    pub arg: QRatFun,
}

impl AtanTerm {
    pub fn new(coeff: QuadExt, arg: QRatFun) -> Self {
        AtanTerm { coeff, arg }
    }
}

/// `poly_part + rat_part + sum(logs) + sum(atans)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiDeriv {
    pub poly_part: QPoly,
    pub rat_part: QRatFun,
    pub logs: Vec<LogTerm>,
    pub atans: Vec<AtanTerm>,
}

impl AntiDeriv {
    pub fn zero() -> Self {
        AntiDeriv {
            poly_part: QPoly::zero(),
            rat_part: QRatFun::zero(),
            logs: Vec::new(),
            atans: Vec::new(),
        }
    }

    /// Exact derivative as a reduced rational function.
    pub fn derivative(&self) -> QRatFun {
        let mut acc = QRatFun::from_poly(self.poly_part.derivative()).add(&self.rat_part.derivative());
        for l in &self.logs {
            let t = QRatFun::new(l.arg.derivative(), l.arg.clone()).expect("nonzero argument");
            acc = acc.add(&t.scale(&l.coeff));
        }
        for a in &self.atans {
            let one_plus = QRatFun::one().add(&a.arg.mul(&a.arg));
            let t = a.arg.derivative().div(&one_plus).expect("1 + u^2 > 0");
            acc = acc.add(&t.scale(&a.coeff));
        }
        acc
    }

    /// True when the derivative reproduces `f` exactly.
    pub fn verify(&self, f: &QRatFun) -> bool {
        self.derivative() == *f
    }

    pub fn to_expr(&self, var: &str) -> Expr {
        let mut terms: Vec<(bool, Expr)> = Vec::new();
        if !self.poly_part.is_zero() {
            terms.extend(poly_to_expr(&self.poly_part, var).summands().into_iter().map(|(p, e)| (p, e.clone())));
        }
        if !self.rat_part.is_zero() {
            terms.push((true, ratfun_to_expr(&self.rat_part, var)));
        }
        for l in &self.logs {
            terms.push(scaled_term(&l.coeff, Expr::log(poly_to_expr(&l.arg, var))));
        }
        for a in &self.atans {
            terms.push(scaled_term(&a.coeff, Expr::atan(ratfun_to_expr(&a.arg, var))));
        }
        crate::expr::sum_terms(terms)
    }

    fn sort_terms(&mut self) {
        let key = |p: &QPoly| (p.deg(), format!("{p}"));
        self.logs.sort_by_cached_key(|l| (key(&l.arg), l.coeff.to_string()));
        self.atans
            .sort_by_cached_key(|a| (key(a.arg.num()), key(a.arg.den()), a.coeff.to_string()));
    }
}

impl fmt::Display for AntiDeriv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr("x"))
    }
}

/// Antiderivative of `f` over `Q` or a single `Q(sqrt(d))`.
///
/// The result is continuous on every interval free of real poles of `f`.
pub fn integrate_rational(f: &QRatFun) -> Result<AntiDeriv> {
    ratfun_radicand(f)?;
    let (q, proper) = f.split_polynomial();
    let mut out = AntiDeriv::zero();
    out.poly_part = q.integral();
    let (u, a) = hermite_reduce(&proper)?;
    out.rat_part = u;
    match log_part(&a) {
        Ok((logs, atans)) => {
            out.logs = logs;
            out.atans = atans;
        }
        Err(Error::UnsupportedAlgebraicDegree { detail, .. }) => {
            return Err(Error::UnsupportedAlgebraicDegree {
                detail,
                partial: Some(Box::new(out)),
            })
        }
        Err(e) => return Err(e),
    }
    out.sort_terms();
    if !out.verify(f) {
        return Err(Error::Internal(format!("derivative check failed for {f}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::expr_to_ratfun;
    use crate::parser::parse;

    fn integ(s: &str) -> AntiDeriv {
        let f = expr_to_ratfun(&parse(s).unwrap(), "x").unwrap();
        integrate_rational(&f).unwrap()
    }

    #[test]
    fn arctan_row() {
        assert_eq!(integ("1/(1+x^2)").to_string(), "atan(x)");
    }

    #[test]
    fn polynomial_and_log() {
        let f = integ("(x^2+1)/x");
        assert_eq!(f.to_string(), "x^2/2+log(x)");
    }

    #[test]
    fn bronstein_has_three_arctangents() {
        let f = integ("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)");
        assert!(f.logs.is_empty());
        assert_eq!(f.atans.len(), 3);
    }

    #[test]
    fn tobey_coefficients() {
        let f = integ("(7*x^13+10*x^8+4*x^7-7*x^6-4*x^3-4*x^2+3*x+3)/(x^14-2*x^8-2*x^7-2*x^4-4*x^3-x^2+2*x+1)");
        assert_eq!(f.logs.len(), 2);
        assert!(f.atans.is_empty());
        for l in &f.logs {
            assert_eq!(l.arg.deg(), 7);
            assert_eq!(l.coeff.real_part(), &crate::algebra::Rat::new(1, 2));
        }
    }

    #[test]
    fn unsupported_cubic_resultant() {
        let f = expr_to_ratfun(&parse("1/(x^3-2)").unwrap(), "x").unwrap();
        assert!(matches!(
            integrate_rational(&f),
            Err(Error::UnsupportedAlgebraicDegree { partial: Some(_), .. })
        ));
    }
}
