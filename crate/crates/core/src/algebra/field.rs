use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Exact scalar domain for polynomial coefficients.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Scalar multiplier bringing a nonzero coefficient list to a normalized
    /// representative of its associate class (used to tame remainder growth).
    fn content_normalizer(coeffs: &[Self]) -> Self {
        coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .map(|c| c.inv())
            .unwrap_or_else(Self::one)
    }
}

/// Subfields of the reals with exact sign determination.
pub trait OrderedField: Field {
    fn signum(&self) -> i32;
    fn to_f64(&self) -> f64;
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn inv(&self) -> Self {
        self.recip()
    }

    /// Scale to a primitive integer vector with positive leading coefficient.
    fn content_normalizer(coeffs: &[Self]) -> Self {
        let nonzero: Vec<&Rat> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Rat::one();
        }
        let lcm = Rat::lcm_denominators(nonzero.iter().copied());
        let gcd = nonzero
            .iter()
            .map(|c| (c.numer() * (&lcm / c.denom())).abs())
            .fold(BigInt::zero(), |g, n| g.gcd(&n));
        let sign = if nonzero.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Rat::new(lcm * sign, gcd)
    }
}

impl OrderedField for Rat {
    fn signum(&self) -> i32 {
        Rat::signum(self)
    }
    fn to_f64(&self) -> f64 {
        Rat::to_f64(self)
    }
}
