//! Elements of a real quadratic field `Q(sqrt(d))`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::field::{Field, OrderedField};
use super::rat::{squarefree_split, Rat};
use crate::error::Error;

/// `a + b*sqrt(d)` with `d` squarefree and greater than one.
///
/// Rationals are represented with `b = 0` and carry no radicand, so they mix
/// freely with elements of any `Q(sqrt(d))`. Combining two irrational values
/// over different radicands is a programming error and panics; use
/// [`QuadExt::check_compatible`] at API boundaries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: u64,
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: u64) -> Result<Self, Error> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if d == 0 {
            return Err(Error::DomainError("radicand must be positive".into()));
        }
        let (s, k) = squarefree_split(&BigInt::from(d));
        let s = Rat::from_int(s);
        let k = k.to_u64().expect("radicand fits in u64");
        if k == 1 {
            return Ok(Self::rational(a + b * s));
        }
        Ok(QuadExt { a, b: b * s, d: k }.canonical())
    }

    pub fn rational(a: Rat) -> Self {
        QuadExt {
            a,
            b: Rat::zero(),
            d: 0,
        }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_of(r: &Rat) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::rational(Rat::zero()));
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let pq = r.numer() * r.denom();
        let (s, k) = squarefree_split(&pq);
        let coeff = Rat::new(s, r.denom().clone());
        let k = k.to_u64()?;
        if k == 1 {
            Some(Self::rational(coeff))
        } else {
            Some(QuadExt {
                a: Rat::zero(),
                b: coeff,
                d: k,
            })
        }
    }

    pub fn real_part(&self) -> &Rat {
        &self.a
    }

    pub fn sqrt_coeff(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> Option<u64> {
        if self.b.is_zero() {
            None
        } else {
            Some(self.d)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * Rat::from_int(self.d)
    }

    pub fn check_compatible(&self, other: &QuadExt) -> Result<(), Error> {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) if x != y => Err(Error::MixedRadicand(x, y)),
            _ => Ok(()),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let mut base = if exp < 0 { self.inv() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = QuadExt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn canonical(mut self) -> Self {
        if self.b.is_zero() {
            self.d = 0;
        }
        self
    }

    fn join(&self, other: &QuadExt) -> u64 {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "arithmetic across different radicands");
                x
            }
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => 0,
        }
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::rational(r)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::rational(Rat::from_int(n))
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let d = self.join(&rhs);
        QuadExt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d,
        }
        .canonical()
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let d = self.join(&rhs);
        QuadExt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            d,
        }
        .canonical()
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        if self.b.is_zero() {
            return QuadExt {
                a: &self.a * &rhs.a,
                b: &self.a * &rhs.b,
                d: rhs.d,
            }
            .canonical();
        }
        if rhs.b.is_zero() {
            return QuadExt {
                a: &self.a * &rhs.a,
                b: &self.b * &rhs.a,
                d: self.d,
            }
            .canonical();
        }
        let d = self.join(&rhs);
        let dr = Rat::from_int(d);
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * dr,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        }
        .canonical()
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QuadExt) -> QuadExt {
        self * rhs.inv()
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rat(r: Rat) -> Self {
        QuadExt::rational(r)
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        if self.b.is_zero() {
            return QuadExt::rational(self.a.recip());
        }
        let n = self.norm();
        QuadExt {
            a: &self.a / &n,
            b: -(&self.b / &n),
            d: self.d,
        }
    }

    /// Rational coefficient lists are made primitive; others monic.
    fn content_normalizer(coeffs: &[Self]) -> Self {
        if coeffs.iter().all(|c| c.is_rational()) {
            let rats: Vec<Rat> = coeffs.iter().map(|c| c.a.clone()).collect();
            QuadExt::rational(<Rat as Field>::content_normalizer(&rats))
        } else {
            coeffs
                .iter()
                .rev()
                .find(|c| !Field::is_zero(*c))
                .map(|c| c.inv())
                .unwrap_or_else(QuadExt::one)
        }
    }
}

impl OrderedField for QuadExt {
    fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with d b^2
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rat::from_int(self.d);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return self.a.to_f64();
        }
        self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.check_compatible(other).is_err() {
            return None;
        }
        Some((self.clone() - other.clone()).signum().cmp(&0))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sq = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -1 {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{sq}")
        } else if sq.starts_with('-') {
            write!(f, "{}{}", self.a, sq)
        } else {
            write!(f, "{}+{}", self.a, sq)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Radicand shared by a set of scalars, if any is irrational.
pub fn common_radicand<'a>(items: impl IntoIterator<Item = &'a QuadExt>) -> Result<Option<u64>, Error> {
    let mut found: Option<u64> = None;
    for q in items {
        if let Some(d) = q.radicand() {
            match found {
                Some(e) if e != d => return Err(Error::MixedRadicand(e, d)),
                _ => found = Some(d),
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> QuadExt {
        QuadExt::sqrt_of(&Rat::from_int(2)).unwrap()
    }

    #[test]
    fn sqrt_squared_is_rational() {
        let r = s2() * s2();
        assert_eq!(r, QuadExt::from(2));
        assert!(r.is_rational());
    }

    #[test]
    fn sqrt_of_fraction() {
        let h = QuadExt::sqrt_of(&Rat::new(1, 2)).unwrap();
        // sqrt(1/2) = sqrt(2)/2
        assert_eq!(h, QuadExt::new(Rat::zero(), Rat::new(1, 2), 2).unwrap());
        assert_eq!(QuadExt::sqrt_of(&Rat::new(9, 4)).unwrap(), QuadExt::from(Rat::new(3, 2)));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QuadExt::new(Rat::from_int(1), Rat::from_int(1), 2).unwrap();
        assert_eq!(x.clone() * x.inv(), QuadExt::one());
    }

    #[test]
    fn sign_is_exact() {
        // 1 - sqrt(2) < 0, 3 - 2 sqrt(2) > 0
        let a = QuadExt::new(Rat::from_int(1), Rat::from_int(-1), 2).unwrap();
        assert_eq!(a.signum(), -1);
        let b = QuadExt::new(Rat::from_int(3), Rat::from_int(-2), 2).unwrap();
        assert_eq!(b.signum(), 1);
    }

    #[test]
    fn radicand_normalized() {
        let x = QuadExt::new(Rat::zero(), Rat::one(), 8).unwrap();
        assert_eq!(x.radicand(), Some(2));
        assert_eq!(x.sqrt_coeff(), &Rat::from_int(2));
        let y = QuadExt::new(Rat::one(), Rat::one(), 9).unwrap();
        assert_eq!(y, QuadExt::from(4));
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = s2();
        let b = QuadExt::sqrt_of(&Rat::from_int(3)).unwrap();
        assert_eq!(a.check_compatible(&b), Err(Error::MixedRadicand(2, 3)));
        assert!(common_radicand([&a, &b]).is_err());
    }

    #[test]
    #[should_panic]
    fn mixed_arithmetic_panics() {
        let _ = s2() + QuadExt::sqrt_of(&Rat::from_int(3)).unwrap();
    }
}
