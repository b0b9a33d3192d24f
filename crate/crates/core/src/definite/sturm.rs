//! Real root isolation by Sturm sequences, with rational endpoints.

use crate::algebra::{
    norm_poly, poly_radicand, small_degree_factors, squarefree_part, OrderedField, Poly, QPoly, Rat,
    SmallFactor,
};

use super::Interval;

/// An isolating interval; `lo == hi` marks an exact rational root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_int(2)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

impl std::fmt::Display for RootInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "x = {}", self.lo)
        } else {
            write!(f, "x in ({}, {}) ~ {:.6}", self.lo, self.hi, self.midpoint().to_f64())
        }
    }
}

pub struct Sturm {
    seq: Vec<Poly<Rat>>,
}

impl Sturm {
    /// Sequence for the squarefree part of `p`.
    pub fn new(p: &Poly<Rat>) -> Self {
        let p0 = squarefree_part(p);
        let mut seq = vec![p0.clone(), p0.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
            seq.push(-&r);
        }
        seq.pop();
        Sturm { seq }
    }

    pub fn poly(&self) -> &Poly<Rat> {
        &self.seq[0]
    }

    fn changes(&self, x: &Rat) -> usize {
        let mut last = 0;
        let mut n = 0;
        for p in &self.seq {
            let s = p.eval(x).signum();
            if s != 0 {
                if last != 0 && s != last {
                    n += 1;
                }
                last = s;
            }
        }
        n
    }

    /// Distinct roots in the half-open `(a, b]`.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.changes(a) - self.changes(b)
    }
}

/// Isolating intervals for the distinct real roots of `p` in the closed
/// interval, sorted. Open intervals have nonroot endpoints.
pub fn real_roots_in_interval(p: &Poly<Rat>, iv: &Interval) -> Vec<RootInterval> {
    if p.deg() <= 0 {
        return Vec::new();
    }
    let s = Sturm::new(p);
    let q = s.poly();
    let mut out = Vec::new();
    if q.eval(&iv.lo).is_zero() {
        out.push(RootInterval { lo: iv.lo.clone(), hi: iv.lo.clone() });
    }
    let mut stack = vec![(iv.lo.clone(), iv.hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = s.count(&a, &b);
        if n == 0 {
            continue;
        }
        let b_root = q.eval(&b).is_zero();
        if n == 1 && b_root {
            out.push(RootInterval { lo: b.clone(), hi: b });
            continue;
        }
        if n == 1 && !q.eval(&a).is_zero() {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let m = (&a + &b) / Rat::from_int(2);
        stack.push((a, m.clone()));
        stack.push((m, b));
    }
    // rational roots inside an open interval become exact
    let (factors, _) = small_degree_factors(q);
    for r in out.iter_mut().filter(|r| !r.is_exact()) {
        for f in &factors {
            if let SmallFactor::Linear(c) = f {
                if &r.lo < c && c < &r.hi {
                    *r = RootInterval { lo: c.clone(), hi: c.clone() };
                }
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
    out
}

/// Shrinks an open isolating interval of a root of `p` below width `eps`.
pub fn refine(p: &Poly<Rat>, iv: &RootInterval, eps: &Rat) -> RootInterval {
    let s = Sturm::new(p);
    let q = s.poly();
    let (mut a, mut b) = (iv.lo.clone(), iv.hi.clone());
    while &b - &a > *eps {
        let m = (&a + &b) / Rat::from_int(2);
        if q.eval(&m).is_zero() {
            return RootInterval { lo: m.clone(), hi: m };
        }
        if s.count(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    RootInterval { lo: a, hi: b }
}

/// Real roots of a polynomial over `Q(sqrt(d))` in the closed interval.
pub fn real_roots_qpoly(p: &QPoly, iv: &Interval) -> Vec<RootInterval> {
    if p.deg() <= 0 {
        return Vec::new();
    }
    let rational = matches!(poly_radicand(p), Ok(None));
    let n = if rational {
        crate::algebra::as_rational_poly(p).expect("rational")
    } else {
        norm_poly(p)
    };
    let sq = squarefree_part(p);
    let sign_at = |x: &Rat| sq.eval(&crate::algebra::QuadExt::from(x.clone())).signum();
    real_roots_in_interval(&n, iv)
        .into_iter()
        .filter(|r| {
            if rational {
                return true;
            }
            if r.is_exact() {
                sign_at(&r.lo) == 0
            } else {
                // the norm has a single simple root here, so a root of the
                // squarefree part of p shows as a sign change
                sign_at(&r.lo) != sign_at(&r.hi)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(Rat::from_int(a), Rat::from_int(b)).unwrap()
    }

    #[test]
    fn bronstein_denominator_has_no_root_in_1_2() {
        let p = Poly::<Rat>::from_ints(&[4, 0, 5, 0, -5, 0, 1]);
        assert!(real_roots_in_interval(&p, &iv(1, 2)).is_empty());
    }

    #[test]
    fn simple_cases() {
        let r = real_roots_in_interval(&Poly::from_ints(&[-1, 0, 1]), &iv(0, 2));
        assert_eq!(r, vec![RootInterval { lo: Rat::one(), hi: Rat::one() }]);
        let r = real_roots_in_interval(&Poly::from_ints(&[-4, 0, 1]), &iv(0, 4));
        assert_eq!(r, vec![RootInterval { lo: Rat::from_int(2), hi: Rat::from_int(2) }]);
    }

    #[test]
    fn irrational_root_refines() {
        let p = Poly::<Rat>::from_ints(&[-2, 0, 1]);
        let r = real_roots_in_interval(&p, &iv(0, 3));
        assert_eq!(r.len(), 1);
        let fine = refine(&p, &r[0], &Rat::new(1, 1000));
        assert!(fine.width() <= Rat::new(1, 1000));
        assert!((fine.midpoint().to_f64() - 2f64.sqrt()).abs() < 1e-3);
    }

    #[test]
    fn roots_at_both_ends_and_multiplicity() {
        // x^2 (x - 3)^3 on [0, 3]
        let p = &Poly::<Rat>::from_ints(&[0, 0, 1]) * &Poly::from_ints(&[-3, 1]).pow(3);
        let r = real_roots_in_interval(&p, &iv(0, 3));
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(RootInterval::is_exact));
    }

    #[test]
    fn conjugate_roots_filtered() {
        use crate::algebra::QuadExt;
        let s2 = QuadExt::new(Rat::zero(), Rat::one(), 2).unwrap();
        // x - sqrt(2) has a root in [0, 2]; x + sqrt(2) does not
        let p = QPoly::new(vec![-s2.clone(), QuadExt::from(1)]);
        assert_eq!(real_roots_qpoly(&p, &iv(0, 2)).len(), 1);
        let p = QPoly::new(vec![s2, QuadExt::from(1)]);
        assert!(real_roots_qpoly(&p, &iv(0, 2)).is_empty());
    }
}
