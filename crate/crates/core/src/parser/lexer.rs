use num_bigint::BigInt;

use super::{ParseError, SourceSpan};
use crate::algebra::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Int(BigInt),
    Decimal(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
pub(super) struct Token {
    pub tok: Tok,
    pub start: usize,
    pub end: usize,
}

pub(super) struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    pub fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    pub fn tokens(mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        loop {
            let t = self.next_token()?;
            let end = t.tok == Tok::End;
            out.push(t);
            if end {
                return Ok(out);
            }
        }
    }

    fn next_token(&mut self) -> Result<Token, ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(start) else {
            return Ok(Token { tok: Tok::End, start, end: start });
        };
        let single = |tok| Some(tok);
        let punct = match c {
            b'+' => single(Tok::Plus),
            b'-' => single(Tok::Minus),
            b'*' => single(Tok::Star),
            b'/' => single(Tok::Slash),
            b'^' => single(Tok::Caret),
            b'(' => single(Tok::LParen),
            b')' => single(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = punct {
            self.pos += 1;
            return Ok(Token { tok, start, end: self.pos });
        }
        if c.is_ascii_digit() || (c == b'.' && bytes.get(start + 1).is_some_and(u8::is_ascii_digit)) {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let mut decimal = false;
            if self.pos < bytes.len() && bytes[self.pos] == b'.' {
                decimal = true;
                self.pos += 1;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            }
            let text = &self.src[start..self.pos];
            let tok = if decimal {
                Tok::Decimal(text.parse().map_err(|_| self.err(start, "number"))?)
            } else {
                Tok::Int(text.parse().map_err(|_| self.err(start, "number"))?)
            };
            return Ok(Token { tok, start, end: self.pos });
        }
        if c.is_ascii_alphabetic() || c == b'_' || c == b'%' {
            self.pos += 1;
            while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_') {
                self.pos += 1;
            }
            let tok = Tok::Ident(self.src[start..self.pos].to_string());
            return Ok(Token { tok, start, end: self.pos });
        }
        let len = self.src[start..].chars().next().map_or(1, char::len_utf8);
        Err(ParseError {
            span: SourceSpan { start, end: start + len },
            expected: vec!["number".into(), "identifier".into(), "operator".into()],
        })
    }

    fn err(&self, start: usize, what: &str) -> ParseError {
        ParseError {
            span: SourceSpan { start, end: self.pos },
            expected: vec![what.into()],
        }
    }
}
