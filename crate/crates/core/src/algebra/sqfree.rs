use super::field::Field;
use super::poly::Poly;

/// Yun's squarefree decomposition.
///
/// Returns monic, pairwise coprime, squarefree factors with their
/// multiplicities; the product of `factor^mult` equals `p / lc(p)`.
pub fn squarefree_factor<T: Field>(p: &Poly<T>) -> Vec<(Poly<T>, u32)> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    let mut c = p.exact_div(&g).expect("gcd divides p").monic();
    let mut d = &dp.exact_div(&g).expect("gcd divides p'").scale(&p.lc().inv()) - &c.derivative();
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.exact_div(&a).expect("gcd divides c");
        d = &d.exact_div(&a).expect("gcd divides d") - &c.derivative();
        i += 1;
    }
    out
}

/// Product of the distinct irreducible factors, monic.
pub fn squarefree_part<T: Field>(p: &Poly<T>) -> Poly<T> {
    if p.is_zero() {
        return Poly::zero();
    }
    let g = p.gcd(&p.derivative());
    p.exact_div(&g).expect("gcd divides p").monic()
}

pub fn is_squarefree<T: Field>(p: &Poly<T>) -> bool {
    p.gcd(&p.derivative()).is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    type P = Poly<Rat>;

    #[test]
    fn square_of_x() {
        assert_eq!(squarefree_factor(&P::from_ints(&[0, 0, 1])), vec![(P::x(), 2)]);
    }

    #[test]
    fn gaertner_denominator_is_squarefree() {
        let p = P::from_ints(&[1, 0, 0, 0, 16]);
        let f = squarefree_factor(&p);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].1, 1);
        assert_eq!(f[0].0, p.monic());
    }

    #[test]
    fn constructed_input() {
        let xm1 = P::from_ints(&[-1, 1]);
        let xp2 = P::from_ints(&[2, 1]);
        let p = &(&xm1 * &xm1) * &xp2;
        assert_eq!(squarefree_factor(&p), vec![(xp2, 1), (xm1, 2)]);
    }

    #[test]
    fn non_monic_input() {
        let xm1 = P::from_ints(&[-1, 1]);
        let p = (&xm1 * &xm1).scale(&Rat::from_int(3));
        assert_eq!(squarefree_factor(&p), vec![(xm1.clone(), 2)]);
        assert_eq!(squarefree_part(&p), xm1);
    }
}
