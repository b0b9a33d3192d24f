//! Integer relations among arctangents of rationals via Gaussian integers:
//! `atan(p/q)` is the argument of `q + p*i` when `q > 0`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Rat;

pub(crate) type Gauss = Complex<BigInt>;

/// Bit budget for exact products; larger relations fall back to numerics.
const MAX_BITS: u64 = 200_000;

fn gauss_of(x: &Rat) -> Gauss {
    // x = p/q with q > 0
    Complex::new(x.denom().clone(), x.numer().clone())
}

fn bits(g: &Gauss) -> u64 {
    g.re.bits().max(g.im.bits()) + 1
}

/// `prod (q_i + p_i*i)^{n_i}` as `a * conj(b)`, which has argument
/// `sum n_i * atan(x_i)` modulo `2*pi`. `None` when the product would be huge.
pub(crate) fn angle_product(terms: &[(BigInt, Rat)]) -> Option<Gauss> {
    let budget: u64 = terms
        .iter()
        .map(|(n, x)| n.abs().to_u64().unwrap_or(u64::MAX).saturating_mul(bits(&gauss_of(x))))
        .fold(0u64, u64::saturating_add);
    if budget > MAX_BITS || terms.iter().any(|(n, _)| n.bits() > 32) {
        return None;
    }
    let mut acc = Gauss::one();
    for (n, x) in terms {
        let g = gauss_of(x);
        let g = if n.is_negative() { g.conj() } else { g };
        let k: u32 = n.abs().try_into().ok()?;
        acc *= g.powu(k);
    }
    Some(acc)
}

/// Whether `sum n_i * atan(x_i) + m*pi == 0` exactly. The product test fixes
/// the angle modulo `2*pi`; the remaining multiple of `2*pi` is read off a
/// floating-point estimate, which is safe because it only has to
/// distinguish multiples of `2*pi`.
pub(crate) fn atan_relation_holds(terms: &[(BigInt, Rat)], m: &BigInt) -> Option<bool> {
    let w = angle_product(terms)?;
    if !w.im.is_zero() {
        return Some(false);
    }
    let odd = (m % 2u8) != BigInt::zero();
    let positive = w.re.is_positive() != odd;
    if !positive {
        return Some(false);
    }
    let s = approx_sum(terms) + f64_of(m) * std::f64::consts::PI;
    Some(s.abs() < std::f64::consts::PI)
}

/// `sum n_i * atan(x_i) = atan(y) + k*pi` with rational `y`, or `pi/2 + k*pi`
/// when `y` would be infinite (reported as `None` for `y`).
pub(crate) fn fold_atans(terms: &[(BigInt, Rat)]) -> Option<(Option<Rat>, BigInt)> {
    let w = angle_product(terms)?;
    let s = approx_sum(terms);
    let (y, base) = if w.re.is_zero() {
        (None, std::f64::consts::FRAC_PI_2)
    } else {
        let y = Rat::from(num_rational::BigRational::new(w.im.clone(), w.re.clone()));
        let b = y.to_f64().atan();
        (Some(y), b)
    };
    let k = ((s - base) / std::f64::consts::PI).round();
    Some((y, BigInt::from(k as i64)))
}

fn approx_sum(terms: &[(BigInt, Rat)]) -> f64 {
    terms.iter().map(|(n, x)| f64_of(n) * x.to_f64().atan()).sum()
}

fn f64_of(n: &BigInt) -> f64 {
    n.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64, p: i64, q: i64) -> (BigInt, Rat) {
        (BigInt::from(n), Rat::new(p, q))
    }

    #[test]
    fn classic_quarter_pi() {
        // atan(1/2) + atan(1/3) - pi/4 = 0, scaled by 4
        let terms = [t(4, 1, 2), t(4, 1, 3)];
        assert_eq!(atan_relation_holds(&terms, &BigInt::from(-1)), Some(true));
        assert_eq!(atan_relation_holds(&terms, &BigInt::from(-3)), Some(false));
    }

    #[test]
    fn machin() {
        // 4*atan(1/5) - atan(1/239) = pi/4
        let terms = [t(16, 1, 5), t(-4, 1, 239)];
        assert_eq!(atan_relation_holds(&terms, &BigInt::from(-1)), Some(true));
    }

    #[test]
    fn folding_bronstein_pieces() {
        // atan(8) + atan(5) = pi - atan(1/3)
        let (y, k) = fold_atans(&[t(1, 8, 1), t(1, 5, 1)]).unwrap();
        assert_eq!(y, Some(Rat::new(-1, 3)));
        assert_eq!(k, BigInt::from(1));
    }
}
