//! Expressions viewed as rational functions over `Q` in a set of kernels
//! (variables, `pi`, square roots of constants and function applications).

use std::collections::BTreeMap;
use std::fmt;

use super::{simplify, Expr, Func};
use crate::algebra::{QuadExt, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kernel {
    Var(String),
    Pi,
    /// `sqrt(d)` for squarefree `d > 1`.
    Sqrt(u64),
    /// Function applied to an argument, keyed by the argument's canonical text.
    Call(Func, String),
}

/// Kernel registry; indices are exponent positions in [`MPoly`].
#[derive(Debug, Clone, Default)]
pub struct KernelSet {
    kernels: Vec<Kernel>,
    args: Vec<Option<Expr>>,
}

impl KernelSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers kernels up front so they get predictable indices.
    pub fn with(kernels: &[Kernel]) -> Self {
        let mut s = Self::new();
        for k in kernels {
            s.index(k.clone(), None);
        }
        s
    }

    pub fn index(&mut self, k: Kernel, arg: Option<Expr>) -> usize {
        if let Some(i) = self.kernels.iter().position(|x| *x == k) {
            if self.args[i].is_none() {
                self.args[i] = arg;
            }
            return i;
        }
        self.kernels.push(k);
        self.args.push(arg);
        self.kernels.len() - 1
    }

    pub fn kernels(&self) -> &[Kernel] {
        &self.kernels
    }

    pub fn len(&self) -> usize {
        self.kernels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kernels.is_empty()
    }

    /// Replaces `sqrt(d)^2` by `d`.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let roots: Vec<(usize, u64)> = self
            .kernels
            .iter()
            .enumerate()
            .filter_map(|(i, k)| match k {
                Kernel::Sqrt(d) => Some((i, *d)),
                _ => None,
            })
            .collect();
        if roots.is_empty() {
            return p.clone();
        }
        let mut out = MPoly::zero();
        for (exps, c) in &p.terms {
            let mut exps = exps.clone();
            let mut c = c.clone();
            for &(i, d) in &roots {
                if let Some(e) = exps.get_mut(i) {
                    let half = *e / 2;
                    *e %= 2;
                    c = c * Rat::from_int(d as i64).pow(half as i64);
                }
            }
            out.add_term(exps, c);
        }
        out
    }

    /// Rewrites `cos(u)^2` as `1 - sin(u)^2` for every argument `u` that
    /// appears under both functions.
    pub fn reduce_circle(&self, p: &MPoly) -> MPoly {
        let mut out = p.clone();
        for (i, k) in self.kernels.iter().enumerate() {
            if let Kernel::Call(Func::Cos, arg) = k {
                let sin = Kernel::Call(Func::Sin, arg.clone());
                if let Some(j) = self.kernels.iter().position(|x| *x == sin) {
                    out = out.eliminate_square(i, j);
                }
            }
        }
        out
    }

    pub fn to_expr(&self, p: &MPoly) -> Expr {
        let mut terms = Vec::new();
        for (exps, c) in p.terms.iter().rev() {
            let mut factors: Vec<Expr> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = self.kernel_expr(i);
                factors.push(if e == 1 { base } else { base.pow(e as i64) });
            }
            let body = factors.into_iter().reduce(|a, b| a * b);
            let term = match body {
                None => Expr::Num(c.abs()),
                Some(b) if c.abs().is_one() => b,
                Some(b) => Expr::Num(c.abs()) * b,
            };
            terms.push((c.is_positive(), term));
        }
        simplify(&super::build::sum_terms(terms))
    }

    fn kernel_expr(&self, i: usize) -> Expr {
        match &self.kernels[i] {
            Kernel::Var(v) => Expr::var(v),
            Kernel::Pi => Expr::Pi,
            Kernel::Sqrt(d) => Expr::sqrt(Expr::int(*d as i64)),
            Kernel::Call(f, key) => Expr::call(
                *f,
                self.args[i]
                    .clone()
                    .unwrap_or_else(|| crate::parser::parse(key).expect("canonical argument reparses")),
            ),
        }
    }

    pub fn frac_to_expr(&self, f: &KFrac) -> Expr {
        let n = self.to_expr(&f.num);
        if f.den.is_one() {
            n
        } else {
            simplify(&(n / self.to_expr(&f.den)))
        }
    }
}

/// Sparse multivariate polynomial over `Q`; exponent vectors carry no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, Rat>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The kernel with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut p = Self::zero();
        p.add_term(e, Rat::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let exps = trim(exps);
        let sum = match self.terms.remove(&exps) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exps, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn uses(&self, i: usize) -> bool {
        self.degree_in(i) > 0
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let n = e1.len().max(e2.len());
                let e: Vec<u32> = (0..n)
                    .map(|k| e1.get(k).copied().unwrap_or(0) + e2.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Coefficients with respect to kernel `i`, lowest power first.
    pub fn coefficients_in(&self, i: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(i) as usize + 1];
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let k = if i < e.len() { std::mem::take(&mut e[i]) } else { 0 };
            out[k as usize].add_term(e, c.clone());
        }
        out
    }

    /// Substitutes kernel `i` by `with`.
    pub fn substitute(&self, i: usize, with: &MPoly) -> Self {
        let coeffs = self.coefficients_in(i);
        coeffs
            .iter()
            .rev()
            .fold(MPoly::zero(), |acc, c| acc.mul(with).add(c))
    }

    /// Replaces `x_i^2` by `1 - x_j^2` until kernel `i` has degree at most one.
    pub fn eliminate_square(&self, i: usize, j: usize) -> Self {
        let one_minus = MPoly::one().sub(&MPoly::var(j).pow(2));
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let k = e.get(i).copied().unwrap_or(0);
            if k < 2 {
                out.add_term(e.clone(), c.clone());
                continue;
            }
            let mut rest = e.clone();
            rest[i] = k % 2;
            let mut t = MPoly::zero();
            t.add_term(rest, c.clone());
            out = out.add(&t.mul(&one_minus.pow(k / 2)));
        }
        out
    }

    /// Applies a sign flip `x_i -> -x_i` for every `i` in `odd`.
    pub fn reflect(&self, odd: &[usize]) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let flips: u32 = odd.iter().map(|&i| e.get(i).copied().unwrap_or(0)).sum();
            out.add_term(e.clone(), if flips % 2 == 1 { -c } else { c.clone() });
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}*{e:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Quotient of kernel polynomials (not reduced; compare by cross-multiplying).
#[derive(Clone, Debug)]
pub struct KFrac {
    pub num: MPoly,
    pub den: MPoly,
}

impl KFrac {
    pub fn poly(p: MPoly) -> Self {
        KFrac { num: p, den: MPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::poly(MPoly::constant(c))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }
}

/// Converts `e` into a kernel fraction, registering new kernels in `ks`.
pub fn to_kfrac(e: &Expr, ks: &mut KernelSet) -> Result<KFrac> {
    let r = |p: MPoly, ks: &KernelSet| ks.reduce(&p);
    Ok(match e {
        Expr::Num(c) => KFrac::constant(c.clone()),
        Expr::Pi => KFrac::poly(MPoly::var(ks.index(Kernel::Pi, None))),
        Expr::Var(v) => KFrac::poly(MPoly::var(ks.index(Kernel::Var(v.clone()), None))),
        Expr::Neg(a) => {
            let a = to_kfrac(a, ks)?;
            KFrac { num: a.num.neg(), den: a.den }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (a, b) = (to_kfrac(a, ks)?, to_kfrac(b, ks)?);
            let (x, y) = (a.num.mul(&b.den), b.num.mul(&a.den));
            let num = if matches!(e, Expr::Add(..)) { x.add(&y) } else { x.sub(&y) };
            KFrac { num: r(num, ks), den: r(a.den.mul(&b.den), ks) }
        }
        Expr::Mul(a, b) => {
            let (a, b) = (to_kfrac(a, ks)?, to_kfrac(b, ks)?);
            KFrac { num: r(a.num.mul(&b.num), ks), den: r(a.den.mul(&b.den), ks) }
        }
        Expr::Div(a, b) => {
            let (a, b) = (to_kfrac(a, ks)?, to_kfrac(b, ks)?);
            if b.num.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            KFrac { num: r(a.num.mul(&b.den), ks), den: r(a.den.mul(&b.num), ks) }
        }
        Expr::Pow(a, n) => {
            let a = to_kfrac(a, ks)?;
            let k = n.unsigned_abs() as u32;
            let (num, den) = if *n >= 0 { (a.num, a.den) } else { (a.den, a.num) };
            if num.is_zero() && *n < 0 {
                return Err(Error::ZeroDenominator);
            }
            KFrac { num: r(num.pow(k), ks), den: r(den.pow(k), ks) }
        }
        Expr::Call(f, a) => {
            let inner = to_kfrac(a, ks)?;
            if *f == Func::Sqrt {
                if let Some(c) = inner.as_constant() {
                    if let Some(q) = QuadExt::sqrt_of(&c) {
                        return Ok(match q.radicand() {
                            None => KFrac::constant(q.real_part().clone()),
                            Some(d) => KFrac::poly(
                                MPoly::var(ks.index(Kernel::Sqrt(d), None)).scale(q.sqrt_coeff()),
                            ),
                        });
                    }
                }
            }
            let arg = simplify(a);
            let key = arg.to_string();
            KFrac::poly(MPoly::var(ks.index(Kernel::Call(*f, key), Some(arg))))
        }
    })
}

/// Sound equality test: true only when both sides agree as rational
/// functions of their kernels modulo `sqrt(d)^2 = d` and
/// `sin(u)^2 + cos(u)^2 = 1`.
pub fn exprs_equivalent(a: &Expr, b: &Expr) -> bool {
    let mut ks = KernelSet::new();
    let (Ok(fa), Ok(fb)) = (to_kfrac(a, &mut ks), to_kfrac(b, &mut ks)) else {
        return false;
    };
    let diff = fa.num.mul(&fb.den).sub(&fb.num.mul(&fa.den));
    ks.reduce_circle(&ks.reduce(&diff)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn eq(a: &str, b: &str) -> bool {
        exprs_equivalent(&parse(a).unwrap(), &parse(b).unwrap())
    }

    #[test]
    fn reordered_products() {
        assert!(eq("-6*x*sin(3*x^2)", "-sin(3*x^2)*6*x"));
        assert!(eq("sin(x^2*3)", "sin(3*x^2)"));
        assert!(!eq("sin(x)", "cos(x)"));
    }

    #[test]
    fn circle_relation() {
        assert!(eq("sin(x)^2+cos(x)^2", "1"));
        assert!(eq("1/(1+cos(x)^2)", "1/(2-sin(x)^2)"));
    }

    #[test]
    fn square_roots() {
        assert!(eq("sqrt(8)", "2*sqrt(2)"));
        assert!(eq("sqrt(2)*sqrt(2)", "2"));
        assert!(eq("1/sqrt(2)", "sqrt(2)/2"));
    }
}
