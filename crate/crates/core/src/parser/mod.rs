//! Infix expression grammar and a printer that round-trips through it.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := ['-'|'+'] integer ('^' exponent)? | '(' ['-'|'+'] integer ')'
//! atom     := number | identifier | function '(' expr ')' | '(' expr ')'
//! ```
//!
//! An integer literal followed by `/` and another integer literal forms one
//! rational literal (`3/4*x`), except when the literal is itself a divisor
//! or the second integer carries an exponent.

mod lexer;
mod print;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::Rat;
use crate::expr::{Expr, Func};
use lexer::{Lexer, Tok, Token};

pub use print::print_expr;

/// Byte range into the input text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "error at {}..{}: expected {}",
            self.span.start,
            self.span.end,
            self.expected.join(" or ")
        )
    }
}

impl std::error::Error for ParseError {}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    match p.peek().tok {
        Tok::End => Ok(e),
        _ => Err(p.error(&["operator", "end of input"])),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

/// A parsed unary operand, remembering whether it is a bare integer literal
/// (possibly negated) that may absorb a following `/integer`.
struct Operand {
    expr: Expr,
    bare_int: bool,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            span: SourceSpan { start: t.start, end: t.end },
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs - self.term()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.combining_operand()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    lhs = lhs * self.combining_operand()?;
                }
                Tok::Slash => {
                    self.bump();
                    lhs = lhs / self.unary()?.expr;
                }
                _ => return Ok(lhs),
            }
        }
    }

    /// Operand in a position where `p/q` literals are recognized.
    fn combining_operand(&mut self) -> Result<Expr, ParseError> {
        let op = self.unary()?;
        if !op.bare_int {
            return Ok(op.expr);
        }
        let den = match (self.peek_at(0), self.peek_at(1), self.peek_at(2)) {
            (Tok::Slash, Tok::Int(q), next) if !q.is_zero() && *next != Tok::Caret => q.clone(),
            _ => return Ok(op.expr),
        };
        self.bump();
        self.bump();
        Ok(absorb_denominator(op.expr, &den))
    }

    fn unary(&mut self) -> Result<Operand, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            let inner = self.unary()?;
            return Ok(Operand {
                expr: -inner.expr,
                bare_int: inner.bare_int,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Operand, ParseError> {
        let (base, bare_int) = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(Operand { expr: base, bare_int });
        }
        self.bump();
        let n = self.exponent()?;
        Ok(Operand {
            expr: base.pow(n),
            bare_int: false,
        })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek().tok == Tok::LParen {
            self.bump();
            let n = self.signed_int()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(n);
        }
        let n = self.signed_int()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let start = self.peek().start;
            let m = self.exponent()?;
            let v = u32::try_from(m)
                .ok()
                .and_then(|m| n.checked_pow(m))
                .ok_or_else(|| ParseError {
                    span: SourceSpan { start, end: self.peek().start },
                    expected: vec!["small nonnegative exponent".into()],
                })?;
            return Ok(v);
        }
        Ok(n)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let Tok::Int(v) = self.peek().tok.clone() else {
            return Err(self.error(&["integer"]));
        };
        let n = v.to_i64().ok_or_else(|| self.error(&["exponent within 64-bit range"]))?;
        self.bump();
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<(Expr, bool), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.bump();
                Ok((Expr::Num(Rat::from_int(v)), true))
            }
            Tok::Decimal(r) => {
                self.bump();
                Ok((Expr::Num(r), false))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok((e, false))
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(f) = Func::from_name(&name) {
                    self.expect(Tok::LParen, "'('")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    return Ok((Expr::call(f, arg), false));
                }
                if name == "pi" || name == "%pi" {
                    return Ok((Expr::Pi, false));
                }
                Ok((Expr::Var(name), false))
            }
            _ => Err(self.error(&["number", "identifier", "'('", "'-'"])),
        }
    }
}

fn absorb_denominator(e: Expr, q: &BigInt) -> Expr {
    match e {
        Expr::Neg(inner) => -absorb_denominator(*inner, q),
        Expr::Num(p) => Expr::Num(p / Rat::from_int(q.clone())),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> String {
        print_expr(&parse(s).unwrap())
    }

    #[test]
    fn corpus_inputs_parse() {
        for s in [
            "(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)",
            "sqrt(2)/((x-1)^4+1/16)",
            "x*sin(x)/(1+cos(x)^2)",
            "arctan(x)+atan(x^3)",
        ] {
            parse(s).unwrap();
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse("1/16").unwrap(), Expr::Num(Rat::new(1, 16)));
        assert_eq!(parse("-3/4").unwrap(), -Expr::Num(Rat::new(3, 4)));
        assert_eq!(
            parse("x/2/3").unwrap(),
            Expr::var("x") / Expr::int(2) / Expr::int(3)
        );
        assert_eq!(
            parse("3/4^2").unwrap(),
            Expr::int(3) / Expr::int(4).pow(2)
        );
    }

    #[test]
    fn unary_minus_below_power() {
        assert_eq!(parse("-x^2").unwrap(), -(Expr::var("x").pow(2)));
        assert_eq!(rt("-x^2"), "-x^2");
    }

    #[test]
    fn power_chain() {
        assert_eq!(parse("x^2^3").unwrap(), Expr::var("x").pow(8));
        assert_eq!(parse("x^(-2)").unwrap(), Expr::var("x").pow(-2));
    }

    #[test]
    fn printer_examples() {
        assert_eq!(rt("atan(x-1)"), "atan(x-1)");
        assert_eq!(rt("5/4*pi-atan(2)"), "5/4*pi-atan(2)");
        assert_eq!(rt("arctan(x)"), "atan(x)");
    }

    #[test]
    fn division_guard() {
        let e = Expr::int(3) / Expr::int(4);
        let s = print_expr(&e);
        assert_eq!(s, "3/(4)");
        assert_eq!(parse(&s).unwrap(), e);
    }

    #[test]
    fn dangling_caret() {
        let err = parse("x^").unwrap_err();
        assert_eq!(err.span.start, 2);
        assert_eq!(err.to_string(), "error at 2..2: expected integer");
    }

    #[test]
    fn unbalanced() {
        let err = parse("(x+1").unwrap_err();
        assert_eq!(err.span.start, 4);
        assert!(parse("sin x").is_err());
        assert!(parse("x $ y").is_err());
    }
}
