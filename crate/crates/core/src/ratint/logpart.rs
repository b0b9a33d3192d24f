//! Rothstein-Trager logarithmic part with real arctangent rectification.

use super::{AtanTerm, LogTerm};
use crate::algebra::{
    as_rational_poly, norm_poly, poly_radicand, ratfun_radicand, resultant, small_degree_factors,
    squarefree_part, Complex, Field, QPoly, QRatFun, QuadExt, Rat, SmallFactor,
};
use crate::error::{Error, Result};

type CPoly = crate::algebra::Poly<Complex<QuadExt>>;

/// Root of the Rothstein-Trager resultant.
#[derive(Debug, Clone, PartialEq)]
pub enum ResultantRoot {
    Real(QuadExt),
    /// The conjugate pair `alpha +- i*beta` with `beta > 0`.
    Pair { alpha: QuadExt, beta: QuadExt },
}

/// `r(t) = res_x(d, a - t*d')` for monic `d`, obtained from exact
/// subresultant evaluations at `t = 0..=deg d` and interpolation.
pub fn rothstein_trager_resultant(a: &QPoly, d: &QPoly) -> QPoly {
    let n = d.deg().max(0) as usize;
    let dp = d.derivative();
    let xs: Vec<QuadExt> = (0..=n as i64).map(QuadExt::from).collect();
    let ys: Vec<QuadExt> = xs
        .iter()
        .map(|t| resultant(d, &(a - &dp.scale(t))).value)
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub(crate) fn interpolate<T: Field>(xs: &[T], ys: &[T]) -> crate::algebra::Poly<T> {
    use crate::algebra::Poly;
    let m = xs.len();
    let mut c = ys.to_vec();
    for j in 1..m {
        for i in (j..m).rev() {
            c[i] = (c[i].clone() - c[i - 1].clone()) / (xs[i].clone() - xs[i - j].clone());
        }
    }
    let mut p = Poly::zero();
    for i in (0..m).rev() {
        p = &(&p * &Poly::new(vec![-xs[i].clone(), T::one()])) + &Poly::constant(c[i].clone());
    }
    p
}

fn adopt(field: &mut Option<u64>, q: &QuadExt) -> Result<()> {
    if let Some(m) = q.radicand() {
        match *field {
            None => *field = Some(m),
            Some(k) if k != m => {
                return Err(Error::unsupported_degree(format!(
                    "log coefficients need both sqrt({k}) and sqrt({m})"
                )))
            }
            _ => {}
        }
    }
    Ok(())
}

fn complex_poly(p: &QPoly) -> CPoly {
    p.map(|c| Complex::real(c.clone()))
}

/// Distinct roots of `rs` (squarefree over the coefficient field), provided
/// each lies in a quadratic extension compatible with `field`.
pub fn resultant_roots(rs: &QPoly, field: &mut Option<u64>) -> Result<Vec<ResultantRoot>> {
    let n = match as_rational_poly(rs) {
        Some(q) => q,
        None => norm_poly(rs),
    };
    let (factors, _) = small_degree_factors(&n);
    let mut roots = Vec::new();
    let half = QuadExt::from(Rat::new(1, 2));
    for f in factors {
        match f {
            SmallFactor::Linear(c) => {
                let c = QuadExt::from(c);
                if rs.eval(&c).is_zero() {
                    roots.push(ResultantRoot::Real(c));
                }
            }
            SmallFactor::Quadratic { p, q } => {
                let disc = &p * &p - Rat::from_int(4) * q;
                let alpha = QuadExt::from(-p) * half.clone();
                let s = QuadExt::sqrt_of(&disc.abs()).expect("nonnegative");
                let w = s * half.clone();
                if disc.is_positive() {
                    for c in [alpha.clone() + w.clone(), alpha.clone() - w.clone()] {
                        if compatible(&c, *field) && rs.eval(&c).is_zero() {
                            adopt(field, &c)?;
                            roots.push(ResultantRoot::Real(c));
                        } else if !compatible(&c, *field) {
                            // a root in another extension: only fatal if it is a root of rs
                            return Err(Error::unsupported_degree(format!(
                                "resultant root {c} lies outside the working field"
                            )));
                        }
                    }
                } else if compatible(&w, *field) {
                    let z = Complex::new(alpha.clone(), w.clone());
                    if complex_poly(rs).eval(&z).is_zero() {
                        adopt(field, &w)?;
                        roots.push(ResultantRoot::Pair { alpha, beta: w });
                    }
                } else {
                    return Err(Error::unsupported_degree(format!(
                        "resultant roots {alpha} +- {w}*i lie outside the working field"
                    )));
                }
            }
        }
    }
    let found: isize = roots
        .iter()
        .map(|r| match r {
            ResultantRoot::Real(_) => 1,
            ResultantRoot::Pair { .. } => 2,
        })
        .sum();
    if found != rs.deg() {
        return Err(Error::unsupported_degree(format!(
            "resultant {} has an irreducible factor of degree >= 3",
            crate::expr::poly_to_expr(rs, "t")
        )));
    }
    Ok(roots)
}

fn compatible(c: &QuadExt, field: Option<u64>) -> bool {
    match (c.radicand(), field) {
        (Some(m), Some(k)) => m == k,
        _ => true,
    }
}

/// Log and arctangent terms whose derivative is `a`, which must be proper
/// with squarefree denominator.
pub fn log_part(a: &QRatFun) -> Result<(Vec<LogTerm>, Vec<AtanTerm>)> {
    if a.is_zero() {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut field = ratfun_radicand(a)?;
    let (num, den) = (a.num(), a.den());
    let r = rothstein_trager_resultant(num, den);
    if r.is_zero() {
        return Err(Error::Internal("vanishing Rothstein-Trager resultant".into()));
    }
    let rs = squarefree_part(&r);
    let roots = resultant_roots(&rs, &mut field)?;
    let dp = den.derivative();
    let mut logs = Vec::new();
    let mut atans = Vec::new();
    for root in roots {
        match root {
            ResultantRoot::Real(c) => {
                let v = (num - &dp.scale(&c)).gcd(den);
                logs.push(LogTerm::new(c, v));
            }
            ResultantRoot::Pair { alpha, beta } => {
                let z = Complex::new(alpha.clone(), beta.clone());
                let p = &complex_poly(num) - &complex_poly(&dp).scale(&z);
                let g = p.gcd(&complex_poly(den));
                let u = g.map(|c| c.re.clone());
                let v = g.map(|c| c.im.clone());
                if !alpha.is_zero() {
                    let s = &(&u * &u) + &(&v * &v);
                    logs.push(LogTerm::new(alpha, s));
                }
                if !v.is_zero() {
                    let two_beta = QuadExt::from(2) * beta;
                    for arg in log_to_atan(&u, &v)? {
                        if arg.deg() > 0 {
                            atans.push(AtanTerm::new(two_beta.clone(), QRatFun::from_poly(arg)));
                        }
                    }
                }
            }
        }
    }
    for l in &logs {
        poly_radicand(&l.arg)?;
    }
    Ok((logs, atans))
}

/// Polynomials `p_k` with `sum 2*atan(p_k)` having the derivative of
/// `i*log((a + i*b)/(a - i*b))`; every term is continuous on the real line.
pub fn log_to_atan(a: &QPoly, b: &QPoly) -> Result<Vec<QPoly>> {
    let mut out = Vec::new();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        if b.is_zero() {
            return Err(Error::Internal("log_to_atan with zero imaginary part".into()));
        }
        let (q, r) = a.div_rem(&b)?;
        if r.is_zero() {
            out.push(q);
            return Ok(out);
        }
        if a.deg() < b.deg() {
            let na = -&b;
            b = a;
            a = na;
            continue;
        }
        // b*d - a*c = gcd(a, b)
        let (g, s, t) = b.ext_gcd(&a);
        let (d, c) = (s, -&t);
        let arg = (&(&a * &d) + &(&b * &c)).exact_div(&g)?;
        out.push(arg);
        a = d;
        b = c;
    }
}
