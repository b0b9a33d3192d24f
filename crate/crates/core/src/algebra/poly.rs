//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::rat::Rat;
use crate::error::Error;

/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `c * x^n`.
    pub fn monomial(c: T, n: usize) -> Self {
        let mut v = vec![T::zero(); n];
        v.push(c);
        Self::new(v)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    /// Normalized associate: primitive integer content over Q, monic otherwise.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&T::content_normalizer(&self.coeffs))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut v = vec![T::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v.push(c.clone() / T::from_int(i as i64 + 1));
        }
        Self::new(v)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division `a = q*b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), Error> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lc = b.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].clone() * inv_lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * bc.clone();
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self, Error> {
        Ok(self.div_rem(b)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, b: &Self) -> Result<Self, Error> {
        let (q, r) = self.div_rem(b)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{self} is not divisible by {b}")));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Pseudo-remainder `prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self, Error> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.deg() < b.deg() {
            return Ok(self.clone());
        }
        let delta = (self.deg() - b.deg() + 1) as u32;
        let mut factor = T::one();
        for _ in 0..delta {
            factor = factor * b.lc();
        }
        self.scale(&factor).rem(b)
    }

    /// Monic gcd; content is normalized along the remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").normalized();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b` (requires `gcd(a, b) | c`).
    pub fn diophantine(a: &Self, b: &Self, c: &Self) -> Result<(Self, Self), Error> {
        let (g, s, _) = a.ext_gcd(b);
        let (q, r) = c.div_rem(&g)?;
        if !r.is_zero() {
            return Err(Error::Internal("gcd does not divide right-hand side".into()));
        }
        let mut s = &s * &q;
        if !b.is_zero() && s.deg() >= b.deg() {
            s = s.rem(b)?;
        }
        let t = (c - &(&s * a)).exact_div(b)?;
        Ok((s, t))
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &T) -> Self {
        self.compose(&Self::new(vec![c.clone(), T::one()]))
    }
}

impl<T: Field> Poly<T> {
    /// Embed rational coefficients into the field.
    pub fn from_rats(coeffs: &[Rat]) -> Self {
        Self::new(coeffs.iter().cloned().map(T::from_rat).collect())
    }
}

impl<'a, T: Field> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Field> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Field> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Field> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Field> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Field> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Field> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rat>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    #[test]
    fn divmod_exact_factor() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_with_remainder() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn divmod_proper_fraction_is_all_remainder() {
        let num = p(&[6, 0, -3, 0, 1]);
        let den = p(&[4, 0, 5, 0, -5, 0, 1]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, num);
    }

    #[test]
    fn divmod_by_zero_errors() {
        assert_eq!(p(&[1, 1]).div_rem(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[2, -3, 1])), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&P::zero()), P::from_rats(&[Rat::new(1, 2), Rat::one()]));
        let den = p(&[4, 0, 5, 0, -5, 0, 1]);
        assert_eq!(den.gcd(&den.derivative()), P::one());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[2, -3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).shift(&Rat::from_int(-1)), p(&[1, -2, 1]));
        let q = p(&[3, 1, 4]);
        assert_eq!(q.shift(&Rat::zero()), q);
        // (x-1)^4 + 1/16 shifted by 1 is y^4 + 1/16
        let xm1 = p(&[-1, 1]);
        let g = &xm1.pow(4) + &P::constant(Rat::new(1, 16));
        let expected = P::from_rats(&[Rat::new(1, 16), Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()]);
        assert_eq!(g.shift(&Rat::one()), expected);
    }

    #[test]
    fn diophantine_solves() {
        let a = p(&[1, 0, 1]);
        let b = p(&[0, 1]);
        let c = p(&[5, 2]);
        let (s, t) = P::diophantine(&a, &b, &c).unwrap();
        assert!(s.deg() < b.deg());
        assert_eq!(&(&s * &a) + &(&t * &b), c);
    }

    #[test]
    fn normalized_is_primitive() {
        let q = P::from_rats(&[Rat::new(1, 2), Rat::new(-3, 4)]);
        assert_eq!(q.normalized(), p(&[-2, 3]));
    }
}
