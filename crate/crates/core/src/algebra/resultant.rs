//! Resultants and the subresultant polynomial remainder sequence.

use super::field::Field;
use super::poly::Poly;

/// Resultant value together with the subresultant PRS that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Resultant<T: Field> {
    pub value: T,
    /// `R0 = a, R1 = b, R2, ...`, ending with the last nonzero remainder.
    pub sequence: Vec<Poly<T>>,
}

fn pow<T: Field>(base: &T, e: i64) -> T {
    let b = if e < 0 { base.inv() } else { base.clone() };
    let mut acc = T::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * b.clone();
    }
    acc
}

fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Subresultant PRS of `a` and `b` with `deg a >= deg b`, both nonzero.
fn subresultant_ordered<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Resultant<T> {
    let mut seq = vec![a.clone(), b.clone()];
    let mut lcs: Vec<T> = vec![T::zero()]; // r_0 unused
    let mut betas: Vec<T> = vec![T::zero()];
    let mut deltas: Vec<i64> = vec![0];
    let delta1 = a.deg() as i64 - b.deg() as i64;
    let mut gamma = -T::one();
    let mut delta = delta1;
    let mut beta = T::from_int(sign_pow(delta1 + 1));
    betas.push(beta.clone());
    deltas.push(delta);
    let mut i = 1;
    while !seq[i].is_zero() {
        let ri = seq[i].lc();
        lcs.push(ri.clone());
        let prem = seq[i - 1].pseudo_rem(&seq[i]).expect("nonzero divisor");
        let next = prem.scale(&beta.inv());
        seq.push(next);
        i += 1;
        if seq[i].is_zero() {
            break;
        }
        // gamma_i = (-r_{i-1})^{delta_{i-1}} gamma_{i-1}^{1 - delta_{i-1}}
        gamma = pow(&(-ri.clone()), delta) * pow(&gamma, 1 - delta);
        delta = seq[i - 1].deg() as i64 - seq[i].deg() as i64;
        beta = -ri * pow(&gamma, delta);
        betas.push(beta.clone());
        deltas.push(delta);
    }
    let k = i - 1;
    seq.truncate(k + 1);
    if seq[k].deg() > 0 {
        return Resultant {
            value: T::zero(),
            sequence: seq,
        };
    }
    if seq[k - 1].deg() == 1 {
        return Resultant {
            value: seq[k].lc(),
            sequence: seq,
        };
    }
    let mut s = 1i64;
    let mut c = T::one();
    for j in 1..k {
        let dj1 = seq[j - 1].deg() as i64;
        let dj = seq[j].deg() as i64;
        let dj2 = seq[j + 1].deg() as i64;
        if dj1 % 2 == 1 && dj % 2 == 1 {
            s = -s;
        }
        let rj = lcs[j].clone();
        let ratio = betas[j].clone() / pow(&rj, 1 + deltas[j]);
        c = c * pow(&ratio, dj) * pow(&rj, dj1 - dj2);
    }
    let value = T::from_int(s) * c * pow(&seq[k].lc(), seq[k - 1].deg() as i64);
    Resultant {
        value,
        sequence: seq,
    }
}

/// Resultant `res_x(a, b)` computed through the subresultant PRS.
pub fn resultant<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Resultant<T> {
    if a.is_zero() || b.is_zero() {
        return Resultant {
            value: T::zero(),
            sequence: vec![a.clone(), b.clone()],
        };
    }
    if a.deg() >= b.deg() {
        subresultant_ordered(a, b)
    } else {
        let mut r = subresultant_ordered(b, a);
        let sign = sign_pow(a.deg() as i64 * b.deg() as i64);
        r.value = T::from_int(sign) * r.value;
        r
    }
}

/// Resultant by the plain Euclidean recurrence; an independent route used to
/// cross-check the subresultant computation.
pub fn resultant_euclid<T: Field>(a: &Poly<T>, b: &Poly<T>) -> T {
    if a.is_zero() || b.is_zero() {
        return T::zero();
    }
    let (m, n) = (a.deg() as i64, b.deg() as i64);
    if m == 0 {
        return pow(&a.lc(), n);
    }
    if n == 0 {
        return pow(&b.lc(), m);
    }
    let r = a.rem(b).expect("nonzero divisor");
    if r.is_zero() {
        return T::zero();
    }
    let factor = T::from_int(sign_pow(m * n)) * pow(&b.lc(), m - r.deg() as i64);
    factor * resultant_euclid(b, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    type P = Poly<Rat>;

    #[test]
    fn evaluation_case() {
        let r = resultant(&P::from_ints(&[1, 0, 1]), &P::from_ints(&[-2, 1]));
        assert_eq!(r.value, Rat::from_int(5));
    }

    #[test]
    fn linear_pair() {
        // res(x - a, x - b) = a - b... up to orientation: res(x-a, x-b) = (a-b)*(-1)^0? check b - a
        let (a, b) = (Rat::new(3, 2), Rat::from_int(-4));
        let pa = P::new(vec![-a.clone(), Rat::one()]);
        let pb = P::new(vec![-b.clone(), Rat::one()]);
        // res(f, g) = prod g(roots of f) = a - b
        assert_eq!(resultant(&pa, &pb).value, &a - &b);
    }

    #[test]
    fn sqrt2_sqrt3() {
        let r = resultant(&P::from_ints(&[-2, 0, 1]), &P::from_ints(&[-3, 0, 1]));
        assert_eq!(r.value, Rat::one());
        assert_eq!(resultant_euclid(&P::from_ints(&[-2, 0, 1]), &P::from_ints(&[-3, 0, 1])), Rat::one());
    }

    #[test]
    fn common_root_gives_zero() {
        let a = P::from_ints(&[-1, 0, 1]);
        let b = P::from_ints(&[2, -3, 1]);
        assert_eq!(resultant(&a, &b).value, Rat::zero());
    }

    #[test]
    fn sequence_starts_with_inputs() {
        let a = P::from_ints(&[1, 2, 0, 1]);
        let b = P::from_ints(&[3, 0, 1]);
        let r = resultant(&a, &b);
        assert_eq!(r.sequence[0], a);
        assert_eq!(r.sequence[1], b);
        assert_eq!(r.value, resultant_euclid(&a, &b));
    }
}
