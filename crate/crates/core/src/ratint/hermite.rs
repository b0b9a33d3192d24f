use crate::algebra::{Field, Poly, RatFun};
use crate::error::{Error, Result};

/// Splits a proper `f` into `U' + A` with `A` proper and squarefree
/// denominator (linear-system-free Hermite reduction).
///
/// The postcondition is checked on every call.
pub fn hermite_reduce<T: Field>(f: &RatFun<T>) -> Result<(RatFun<T>, RatFun<T>)> {
    if f.is_zero() {
        return Ok((RatFun::zero(), RatFun::zero()));
    }
    if !f.is_proper() {
        return Err(Error::Internal("hermite_reduce expects a proper fraction".into()));
    }
    let d = f.den().clone();
    let mut a = f.num().clone();
    let mut g = RatFun::zero();
    let mut d_minus = d.gcd(&d.derivative());
    let d_star = d.exact_div(&d_minus)?;
    while d_minus.deg() > 0 {
        let d_minus2 = d_minus.gcd(&d_minus.derivative());
        let d_minus_star = d_minus.exact_div(&d_minus2)?;
        let lhs = -(&d_star * &d_minus.derivative()).exact_div(&d_minus)?;
        let (b, c) = Poly::diophantine(&lhs, &d_minus_star, &a)?;
        a = &c - &(&b.derivative() * &d_star.exact_div(&d_minus_star)?);
        g = g.add(&RatFun::new(b, d_minus.clone())?);
        d_minus = d_minus2;
    }
    let a_out = RatFun::new(a, d_star)?;
    check(f, &g, &a_out)?;
    Ok((g, a_out))
}

fn check<T: Field>(f: &RatFun<T>, u: &RatFun<T>, a: &RatFun<T>) -> Result<()> {
    let ok = u.derivative().add(a) == *f
        && a.is_proper()
        && a.den().gcd(&a.den().derivative()).deg() <= 0;
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("Hermite postcondition failed for {f}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    type P = Poly<Rat>;
    type R = RatFun<Rat>;

    #[test]
    fn squarefree_is_untouched() {
        let f = R::new(P::from_ints(&[6, 0, -3, 0, 1]), P::from_ints(&[4, 0, 5, 0, -5, 0, 1])).unwrap();
        let (u, a) = hermite_reduce(&f).unwrap();
        assert!(u.is_zero());
        assert_eq!(a, f);
    }

    #[test]
    fn inverse_square() {
        let f = R::new(P::one(), P::from_ints(&[0, 0, 1])).unwrap();
        let (u, a) = hermite_reduce(&f).unwrap();
        assert_eq!(u, R::new(P::from_ints(&[-1]), P::x()).unwrap());
        assert!(a.is_zero());
    }

    #[test]
    fn squared_quadratic() {
        let q = P::from_ints(&[1, 0, 1]);
        let f = R::new(P::one(), &q * &q).unwrap();
        let (u, a) = hermite_reduce(&f).unwrap();
        assert_eq!(u, R::new(P::from_rats(&[Rat::zero(), Rat::new(1, 2)]), q.clone()).unwrap());
        assert_eq!(a, R::new(P::from_rats(&[Rat::new(1, 2)]), q).unwrap());
    }

    #[test]
    fn high_multiplicity() {
        // (x^2 + 3) / ((x - 1)^3 (x + 2)^2)
        let l1 = P::from_ints(&[-1, 1]);
        let l2 = P::from_ints(&[2, 1]);
        let den = &l1.pow(3) * &l2.pow(2);
        let f = R::new(P::from_ints(&[3, 0, 1]), den).unwrap();
        let (u, a) = hermite_reduce(&f).unwrap();
        assert_eq!(u.derivative().add(&a), f);
    }
}
