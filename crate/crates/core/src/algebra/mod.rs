//! Exact scalars and univariate polynomial arithmetic.

mod complex;
mod field;
mod poly;
mod quad;
mod rat;
mod ratfun;
mod resultant;
mod roots;
mod sqfree;

pub use complex::Complex;
pub use field::{Field, OrderedField};
pub use poly::Poly;
pub use quad::{common_radicand, QuadExt};
pub use rat::{squarefree_split, ParseRatError, Rat};
pub use ratfun::RatFun;
pub use resultant::{resultant, resultant_euclid, Resultant};
pub use roots::{small_degree_factors, SmallFactor};
pub use sqfree::{is_squarefree, squarefree_factor, squarefree_part};

/// Polynomial over `Q` or a single `Q(sqrt(d))`.
pub type QPoly = Poly<QuadExt>;
/// Rational function over `Q` or a single `Q(sqrt(d))`.
pub type QRatFun = RatFun<QuadExt>;

/// Euclidean division.
pub fn poly_divmod<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Result<(Poly<T>, Poly<T>), crate::Error> {
    a.div_rem(b)
}

/// Monic greatest common divisor; `gcd(0, 0)` is zero.
pub fn poly_gcd<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    a.gcd(b)
}

/// `p(y + c)`.
pub fn poly_shift<T: Field>(p: &Poly<T>, c: &T) -> Poly<T> {
    p.shift(c)
}

pub fn rat_normalize<T: Field>(num: Poly<T>, den: Poly<T>) -> Result<RatFun<T>, crate::Error> {
    RatFun::new(num, den)
}

/// Common radicand of all coefficients of a polynomial.
pub fn poly_radicand(p: &QPoly) -> Result<Option<u64>, crate::Error> {
    common_radicand(p.coeffs())
}

pub fn ratfun_radicand(f: &QRatFun) -> Result<Option<u64>, crate::Error> {
    common_radicand(f.num().coeffs().iter().chain(f.den().coeffs()))
}

/// Coefficients as rationals, if none is irrational.
pub fn as_rational_poly(p: &QPoly) -> Option<Poly<Rat>> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        out.push(c.as_rational()?.clone());
    }
    Some(Poly::new(out))
}

pub fn to_quad_poly(p: &Poly<Rat>) -> QPoly {
    p.map(|c| QuadExt::from(c.clone()))
}

/// `p * conj(p)`, a polynomial over `Q`.
pub fn norm_poly(p: &QPoly) -> Poly<Rat> {
    let conj = p.map(|c| c.conj());
    let n = p * &conj;
    as_rational_poly(&n).expect("norm is rational")
}
