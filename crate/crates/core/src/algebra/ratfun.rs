use std::fmt;

use super::field::Field;
use super::poly::Poly;
use crate::error::Error;

/// Reduced rational function: monic denominator, coprime numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Field> RatFun<T> {
    /// Normalizes `num/den`: removes the gcd and makes the denominator monic.
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let inv = den.lc().inv();
        Ok(RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn into_parts(self) -> (Poly<T>, Poly<T>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn is_proper(&self) -> bool {
        self.num.deg() < self.den.deg()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero den")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero den")
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 {
            Self::one().div(self)?
        } else {
            self.clone()
        };
        let n = e.unsigned_abs() as u32;
        Ok(RatFun {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero den")
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Polynomial quotient and proper remainder.
    pub fn split_polynomial(&self) -> (Poly<T>, Self) {
        let (q, r) = self.num.div_rem(&self.den).expect("nonzero den");
        (
            q,
            RatFun {
                num: r,
                den: self.den.clone(),
            },
        )
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U + Copy) -> RatFun<U> {
        RatFun::new(self.num.map(f), self.den.map(f)).expect("nonzero den")
    }

    /// `self(g)` for a rational function `g`.
    pub fn compose(&self, g: &Self) -> Result<Self, Error> {
        let eval = |p: &Poly<T>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Self::zero(), |acc, c| acc.mul(g).add(&Self::constant(c.clone())))
        };
        eval(&self.num).div(&eval(&self.den))
    }
}

impl<T: Field> fmt::Display for RatFun<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<T: Field> fmt::Debug for RatFun<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    type P = Poly<Rat>;
    type R = RatFun<Rat>;

    #[test]
    fn cancels_common_factor() {
        let r = R::new(P::from_ints(&[-1, 0, 1]), P::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r, R::from_poly(P::from_ints(&[1, 1])));
    }

    #[test]
    fn cancels_constants() {
        let r = R::new(P::from_ints(&[0, 2]), P::from_ints(&[2])).unwrap();
        assert_eq!(r, R::x());
    }

    #[test]
    fn already_reduced_is_unchanged() {
        let num = P::from_ints(&[6, 0, -3, 0, 1]);
        let den = P::from_ints(&[4, 0, 5, 0, -5, 0, 1]);
        let r = R::new(num.clone(), den.clone()).unwrap();
        assert_eq!(r.num(), &num);
        assert_eq!(r.den(), &den);
    }

    #[test]
    fn zero_denominator_errors() {
        assert_eq!(R::new(P::one(), P::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn derivative_of_inverse() {
        let r = R::new(P::one(), P::x()).unwrap();
        let expected = R::new(P::from_ints(&[-1]), P::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(r.derivative(), expected);
    }
}
