//! Text form of polynomials: `2*L^2 - L`, `u*v - 1`, `x2_0^2 - x1_0^3`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := atom (('*' atom) | ('/' integer))*
//! atom   := integer | ident | '(' expr ')' , optionally followed by '^' uint
//! ```
//!
//! `/` is only allowed with an integer divisor, giving rational coefficients
//! such as `1/2*L`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::mpoly::MPoly;
use super::{ExactError, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ExactError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token::Ident(input[start..i].to_string()));
            }
            other => return Err(ExactError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MPoly, ExactError> {
        let mut negate = false;
        if let Some(Token::Minus) = self.peek() {
            self.next();
            negate = true;
        } else if let Some(Token::Plus) = self.peek() {
            self.next();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Token::Minus => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly, ExactError> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let a = self.atom()?;
                    acc = &acc * &a;
                }
                Some(Token::Slash) => {
                    self.next();
                    match self.next() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return Err(ExactError::ZeroDenominator);
                            }
                            acc = acc.scale(&Rational::new(1.into(), d));
                        }
                        _ => {
                            return Err(ExactError::Parse(
                                "`/` in a polynomial must be followed by an integer".into(),
                            ))
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MPoly, ExactError> {
        let base = match self.next() {
            Some(Token::Int(n)) => MPoly::constant(Rational::from_integer(n)),
            Some(Token::Ident(name)) => MPoly::var(name.as_str()),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => e,
                    _ => return Err(ExactError::Parse("unbalanced parenthesis".into())),
                }
            }
            Some(Token::Minus) => {
                let a = self.atom()?;
                -a
            }
            other => return Err(ExactError::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Token::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Token::Int(e)) => {
                    let exp: u32 = e
                        .try_into()
                        .map_err(|_| ExactError::Parse("exponent out of range".into()))?;
                    return Ok(base.pow(exp));
                }
                _ => return Err(ExactError::Parse("`^` must be followed by a non-negative integer".into())),
            }
        }
        Ok(base)
    }
}

/// Parse the canonical polynomial text form.
pub fn parse_poly(input: &str) -> Result<MPoly, ExactError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ExactError::Parse("empty polynomial".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(ExactError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(poly)
}
