//! Linear and quadratic factors of rational polynomials.
//!
//! Candidate factors are proposed from floating-point roots and accepted only
//! after exact division, so a reported factor is always correct; a factor
//! that numerics fail to expose stays in the leftover part.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::complex::Complex;
use super::field::Field;

use super::poly::Poly;
use super::rat::Rat;
use super::sqfree::squarefree_part;

/// Irreducible factor of degree at most two over `Q`.
#[derive(Debug, Clone, PartialEq)]
pub enum SmallFactor {
    /// Rational root `c` (factor `t - c`).
    Linear(Rat),
    /// Irreducible monic quadratic `t^2 + p t + q`.
    Quadratic { p: Rat, q: Rat },
}

impl SmallFactor {
    pub fn poly(&self) -> Poly<Rat> {
        match self {
            SmallFactor::Linear(c) => Poly::new(vec![-c.clone(), Rat::one()]),
            SmallFactor::Quadratic { p, q } => Poly::new(vec![q.clone(), p.clone(), Rat::one()]),
        }
    }
}

/// Splits the distinct irreducible factors of degree <= 2 off `p`.
///
/// Returns the factors and the monic leftover (constant one when `p` splits
/// completely into such factors).
pub fn small_degree_factors(p: &Poly<Rat>) -> (Vec<SmallFactor>, Poly<Rat>) {
    let mut out = Vec::new();
    if p.is_zero() {
        return (out, Poly::zero());
    }
    let mut work = squarefree_part(p);
    loop {
        match work.deg() {
            d if d <= 0 => return (out, Poly::one()),
            1 => {
                out.push(SmallFactor::Linear(-work.coeff(0) / work.coeff(1)));
                return (out, Poly::one());
            }
            2 => {
                out.extend(split_quadratic(&work.coeff(1), &work.coeff(0)));
                return (out, Poly::one());
            }
            _ => {}
        }
        match find_factor(&work) {
            Some(f) => {
                work = work.exact_div(&f.poly()).expect("verified factor").monic();
                out.push(f);
            }
            None => return (out, work),
        }
    }
}

fn split_quadratic(p: &Rat, q: &Rat) -> Vec<SmallFactor> {
    let disc = p * p - Rat::from_int(4) * q.clone();
    if let Some(root) = rational_sqrt(&disc) {
        let two = Rat::from_int(2);
        vec![
            SmallFactor::Linear((-p.clone() + root.clone()) / two.clone()),
            SmallFactor::Linear((-p.clone() - root) / two),
        ]
    } else {
        vec![SmallFactor::Quadratic {
            p: p.clone(),
            q: q.clone(),
        }]
    }
}

pub(crate) fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

fn primitive_integer(p: &Poly<Rat>) -> Vec<BigInt> {
    let s = p.normalized();
    s.coeffs().iter().map(|c| c.numer().clone()).collect()
}

fn find_factor(work: &Poly<Rat>) -> Option<SmallFactor> {
    let ints = primitive_integer(work);
    let lead = ints.last().unwrap().abs();
    let roots = aberth(&ints)?;
    let leadf = lead.to_f64()?;
    // Scaling by the leading coefficient is exact only while it fits in a
    // double; continued fractions catch small denominators past that.
    let round = |v: f64| -> Vec<Rat> {
        let mut out = Vec::new();
        let scaled = (v * leadf).round();
        if scaled.is_finite() && scaled.abs() < 2f64.powi(53) {
            out.push(Rat::new(BigInt::from(scaled as i64), lead.clone()));
        }
        for max_den in [1_000u64, 1_000_000, 100_000_000] {
            if let Some(r) = Rat::approximate(v, max_den) {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
        out
    };
    let tol = 1e-6;
    for z in &roots {
        if z.im.abs() < tol * (1.0 + z.re.abs()) {
            for c in round(z.re) {
                if work.eval(&c).is_zero() {
                    return Some(SmallFactor::Linear(c));
                }
            }
        }
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            let s = roots[i] + roots[j];
            let pr = roots[i] * roots[j];
            if s.im.abs() > tol * (1.0 + s.re.abs()) || pr.im.abs() > tol * (1.0 + pr.re.abs()) {
                continue;
            }
            for p in round(-s.re) {
                for q in round(pr.re) {
                    let quad = Poly::new(vec![q.clone(), p.clone(), Rat::one()]);
                    if quad.divides(work) {
                        // a split quadratic would have been caught as a linear factor
                        if let [f, ..] = split_quadratic(&p, &q).as_slice() {
                            return Some(f.clone());
                        }
                    }
                }
            }
        }
    }
    exact_candidates(work, &lead, &roots)
}

/// Slow path: Newton-polish every root in rational arithmetic until the
/// error is below `1/(2 lead^2)`, then read the factor off by continued
/// fractions. By Gauss's lemma every denominator divides `lead`.
fn exact_candidates(work: &Poly<Rat>, lead: &BigInt, roots: &[Complex64]) -> Option<SmallFactor> {
    let bits = 2 * lead.bits() as usize + 64;
    let polished: Vec<Complex<Rat>> = roots.iter().filter_map(|z| polish(work, *z, bits)).collect();
    let tiny = Rat::new(BigInt::one(), BigInt::one() << (bits / 2));
    for z in &polished {
        if z.im.abs() < tiny {
            let c = best_rational(&z.re, lead);
            if work.eval(&c).is_zero() {
                return Some(SmallFactor::Linear(c));
            }
        }
    }
    for i in 0..polished.len() {
        for j in (i + 1)..polished.len() {
            let s = polished[i].clone() + polished[j].clone();
            let pr = polished[i].clone() * polished[j].clone();
            if s.im.abs() > tiny || pr.im.abs() > tiny {
                continue;
            }
            let (p, q) = (best_rational(&-s.re, lead), best_rational(&pr.re, lead));
            if Poly::new(vec![q.clone(), p.clone(), Rat::one()]).divides(work) {
                if let [f, ..] = split_quadratic(&p, &q).as_slice() {
                    return Some(f.clone());
                }
            }
        }
    }
    None
}

/// `x` rounded down to a multiple of `2^-bits`.
fn dyadic(x: &Rat, bits: usize) -> Rat {
    let scaled = (x.numer() << bits).div_floor(x.denom());
    Rat::new(scaled, BigInt::one() << bits)
}

fn polish(p: &Poly<Rat>, z: Complex64, bits: usize) -> Option<Complex<Rat>> {
    let cp: Poly<Complex<Rat>> = p.map(|c| Complex::real(c.clone()));
    let dp = cp.derivative();
    let start = |v: f64| BigRational::from_float(v).map(Rat::from);
    let mut w = Complex::new(start(z.re)?, start(z.im)?);
    let done = Rat::new(BigInt::one(), BigInt::one() << (bits - 8));
    for _ in 0..16 {
        let d = dp.eval(&w);
        if d.is_zero() {
            return None;
        }
        let step = cp.eval(&w) / d;
        w = w - step.clone();
        w = Complex::new(dyadic(&w.re, bits), dyadic(&w.im, bits));
        if step.re.abs() < done && step.im.abs() < done {
            return Some(w);
        }
    }
    None
}

/// The last continued-fraction convergent of `x` with denominator at most `max_den`.
fn best_rational(x: &Rat, max_den: &BigInt) -> Rat {
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    while !den.is_zero() {
        let (a, r) = num.div_mod_floor(&den);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > max_den {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        num = std::mem::replace(&mut den, r);
    }
    Rat::new(h1, k1)
}

/// All complex roots by the Aberth-Ehrlich iteration.
fn aberth(ints: &[BigInt]) -> Option<Vec<Complex64>> {
    let n = ints.len() - 1;
    let scale = ints.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = scale.saturating_sub(60);
    let coeffs: Vec<f64> = ints
        .iter()
        .map(|c| {
            let v = (c >> shift).to_f64().unwrap_or(0.0);
            if v == 0.0 && !c.is_zero() {
                c.to_f64().unwrap_or(0.0) / 2f64.powi(shift as i32)
            } else {
                v
            }
        })
        .collect();
    let lead = coeffs[n];
    if lead == 0.0 {
        return None;
    }
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let bound = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + monic[k];
        }
        (p, dp)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(bound * 0.5, theta)
        })
        .collect();
    for _ in 0..2000 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let diff = z[k] - z[j];
                    if diff.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        Complex64::new(1.0, 0.0) / diff
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    Some(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rat>;

    #[test]
    fn roots_with_large_denominators() {
        // (t - 123456791/987654323) (t^2 + 1/3 t + 77777777/99999989)
        let a = Rat::new(123_456_791, 987_654_323);
        let lin = P::new(vec![-a.clone(), Rat::one()]);
        let quad = P::new(vec![Rat::new(77_777_777, 99_999_989), Rat::new(1, 3), Rat::one()]);
        let (fs, rest) = small_degree_factors(&(&lin * &quad));
        assert!(rest.is_one());
        assert!(fs.contains(&SmallFactor::Linear(a)));
        assert!(fs.iter().any(|f| matches!(f, SmallFactor::Quadratic { .. })));
    }

    fn sorted_linear(fs: &[SmallFactor]) -> Vec<Rat> {
        let mut v: Vec<Rat> = fs
            .iter()
            .filter_map(|f| match f {
                SmallFactor::Linear(c) => Some(c.clone()),
                _ => None,
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn splits_rational_roots() {
        // (2t - 1)(t + 3)(t - 5)(3t + 2)
        let p = &(&P::from_ints(&[-1, 2]) * &P::from_ints(&[3, 1]))
            * &(&P::from_ints(&[-5, 1]) * &P::from_ints(&[2, 3]));
        let (fs, rest) = small_degree_factors(&p);
        assert!(rest.is_one());
        assert_eq!(
            sorted_linear(&fs),
            vec![Rat::from_int(-3), Rat::new(-2, 3), Rat::new(1, 2), Rat::from_int(5)]
        );
    }

    #[test]
    fn finds_irreducible_quadratics() {
        // (4t^2 + 1)(t^2 - t - 1/4)(t - 2)
        let p = &(&P::from_ints(&[1, 0, 4]) * &P::from_rats(&[Rat::new(-1, 4), Rat::from_int(-1), Rat::one()]))
            * &P::from_ints(&[-2, 1]);
        let (fs, rest) = small_degree_factors(&p);
        assert!(rest.is_one());
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&SmallFactor::Quadratic {
            p: Rat::zero(),
            q: Rat::new(1, 4)
        }));
        assert!(fs.contains(&SmallFactor::Quadratic {
            p: Rat::from_int(-1),
            q: Rat::new(-1, 4)
        }));
    }

    #[test]
    fn irreducible_cubic_is_left_over() {
        let p = P::from_ints(&[4, 5, -5, 1]);
        let (fs, rest) = small_degree_factors(&p);
        assert!(fs.is_empty());
        assert_eq!(rest.deg(), 3);
    }

    #[test]
    fn repeated_factors_reported_once() {
        let q = P::from_ints(&[1, 0, 1]);
        let p = &(&q * &q) * &q;
        let (fs, rest) = small_degree_factors(&p);
        assert!(rest.is_one());
        assert_eq!(fs, vec![SmallFactor::Quadratic { p: Rat::zero(), q: Rat::one() }]);
    }
}
