//! Expression trees: the bridge between text input and the algebra core.

mod build;
mod diff;
pub mod kernel;
mod simplify;
mod to_ratfun;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::algebra::Rat;

pub use build::{poly_to_expr, quad_to_expr, ratfun_to_expr, scaled_term};
pub(crate) use build::{quad_magnitude, sum_terms};
pub use diff::differentiate;
pub use kernel::exprs_equivalent;
pub use simplify::simplify;
pub use to_ratfun::{expr_equal_as_ratfun, expr_to_ratfun};

/// Supported function symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Sin,
    Cos,
    Atan,
    Log,
    Sqrt,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Atan => "atan",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "atan" | "arctan" => Func::Atan,
            "log" | "ln" => Func::Log,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }
}

/// Expression tree. Numeric literals are nonnegative; negation is a node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(Rat),
    Pi,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn num(r: Rat) -> Expr {
        if r.is_negative() {
            Expr::Neg(Box::new(Expr::Num(-r)))
        } else {
            Expr::Num(r)
        }
    }

    pub fn int(n: i64) -> Expr {
        Expr::num(Rat::from_int(n))
    }

    pub fn frac(p: i64, q: i64) -> Expr {
        Expr::num(Rat::new(p, q))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn call(f: Func, arg: Expr) -> Expr {
        Expr::Call(f, Box::new(arg))
    }

    pub fn sin(arg: Expr) -> Expr {
        Expr::call(Func::Sin, arg)
    }

    pub fn cos(arg: Expr) -> Expr {
        Expr::call(Func::Cos, arg)
    }

    pub fn atan(arg: Expr) -> Expr {
        Expr::call(Func::Atan, arg)
    }

    pub fn log(arg: Expr) -> Expr {
        Expr::call(Func::Log, arg)
    }

    pub fn sqrt(arg: Expr) -> Expr {
        Expr::call(Func::Sqrt, arg)
    }

    pub fn pow(self, n: i64) -> Expr {
        Expr::Pow(Box::new(self), n)
    }

    pub fn as_num(&self) -> Option<&Rat> {
        match self {
            Expr::Num(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Num(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Expr::Num(r) if r.is_one())
    }

    pub fn contains_var(&self, var: &str) -> bool {
        match self {
            Expr::Num(_) | Expr::Pi => false,
            Expr::Var(v) => v == var,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.contains_var(var),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_var(var) || b.contains_var(var)
            }
        }
    }

    /// Replace every occurrence of `var` by `with`.
    pub fn substitute(&self, var: &str, with: &Expr) -> Expr {
        let go = |e: &Expr| Box::new(e.substitute(var, with));
        match self {
            Expr::Var(v) if v == var => with.clone(),
            Expr::Num(_) | Expr::Pi | Expr::Var(_) => self.clone(),
            Expr::Neg(a) => Expr::Neg(go(a)),
            Expr::Pow(a, n) => Expr::Pow(go(a), *n),
            Expr::Call(f, a) => Expr::Call(*f, go(a)),
            Expr::Add(a, b) => Expr::Add(go(a), go(b)),
            Expr::Sub(a, b) => Expr::Sub(go(a), go(b)),
            Expr::Mul(a, b) => Expr::Mul(go(a), go(b)),
            Expr::Div(a, b) => Expr::Div(go(a), go(b)),
        }
    }

    /// Top-level summands with their signs (`true` for positive).
    pub fn summands(&self) -> Vec<(bool, &Expr)> {
        fn walk<'a>(e: &'a Expr, positive: bool, out: &mut Vec<(bool, &'a Expr)>) {
            match e {
                Expr::Add(a, b) => {
                    walk(a, positive, out);
                    walk(b, positive, out);
                }
                Expr::Sub(a, b) => {
                    walk(a, positive, out);
                    walk(b, !positive, out);
                }
                Expr::Neg(a) => walk(a, !positive, out),
                _ => out.push((positive, e)),
            }
        }
        let mut out = Vec::new();
        walk(self, true, &mut out);
        out
    }

    /// Evaluates in double precision with `var = x`; `None` at poles or
    /// outside a function's domain.
    pub fn eval_f64(&self, var: &str, x: f64) -> Option<f64> {
        let v = match self {
            Expr::Num(r) => r.to_f64(),
            Expr::Pi => std::f64::consts::PI,
            Expr::Var(name) if name == var => x,
            Expr::Var(_) => return None,
            Expr::Neg(a) => -a.eval_f64(var, x)?,
            Expr::Add(a, b) => a.eval_f64(var, x)? + b.eval_f64(var, x)?,
            Expr::Sub(a, b) => a.eval_f64(var, x)? - b.eval_f64(var, x)?,
            Expr::Mul(a, b) => a.eval_f64(var, x)? * b.eval_f64(var, x)?,
            Expr::Div(a, b) => {
                let d = b.eval_f64(var, x)?;
                if d == 0.0 {
                    return None;
                }
                a.eval_f64(var, x)? / d
            }
            Expr::Pow(a, n) => {
                let base = a.eval_f64(var, x)?;
                if base == 0.0 && *n < 0 {
                    return None;
                }
                base.powi(*n as i32)
            }
            Expr::Call(f, a) => {
                let u = a.eval_f64(var, x)?;
                match f {
                    Func::Sin => u.sin(),
                    Func::Cos => u.cos(),
                    Func::Atan => u.atan(),
                    Func::Log => {
                        if u == 0.0 {
                            return None;
                        }
                        u.abs().ln()
                    }
                    Func::Sqrt => {
                        if u < 0.0 {
                            return None;
                        }
                        u.sqrt()
                    }
                }
            }
        };
        v.is_finite().then_some(v)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::print_expr(self))
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}
