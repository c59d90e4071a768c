//! Shared element expression mini-language.
//!
//! Grammar: a sum of signed products, each product a `*`-separated list of
//! factors; a factor is a rational (`3`, `3/2`) or a symbol name with an
//! optional `^` power (`x1^2`). Example: `3/2*x1^2*y2 - h`.
//!
//! Parsing just produces signed products; callers bind names (basis names in
//! enveloping algebras, `x1..xn, y1..yn` in Weyl algebras, `e1..eq` in
//! Clifford algebras) and multiply factors left to right, so input need not
//! be in normal order.

use crate::exactmath::Rational;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol {0:?}")]
    UnknownName(String),
}

/// One parsed product: overall rational coefficient and symbol powers in
/// written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub coeff: Rational,
    pub factors: Vec<(String, u32)>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Name(String),
    Star,
    Caret,
    Plus,
    Minus,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = input[start..i].parse().unwrap();
                let mut den = BigInt::one();
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(ExprError::Syntax { pos: i, msg: "expected denominator".into() });
                    }
                    den = input[dstart..i].parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(ExprError::Syntax { pos: dstart, msg: "zero denominator".into() });
                    }
                }
                out.push((start, Token::Number(Rational::new(num, den))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'')
                {
                    i += 1;
                }
                out.push((start, Token::Name(input[start..i].to_string())));
            }
            other => {
                return Err(ExprError::Syntax { pos: i, msg: format!("unexpected character {other:?}") })
            }
        }
    }
    Ok(out)
}

/// Parse a sum of signed products.
pub fn parse_products(input: &str) -> Result<Vec<Product>, ExprError> {
    let tokens = tokenize(input)?;
    let mut products = Vec::new();
    let mut pos = 0usize;
    if tokens.is_empty() {
        return Err(ExprError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    while pos < tokens.len() {
        // sign prefix
        let mut sign = Rational::one();
        while pos < tokens.len() {
            match &tokens[pos].1 {
                Token::Plus => pos += 1,
                Token::Minus => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        if pos >= tokens.len() {
            return Err(ExprError::Syntax {
                pos: tokens.last().map(|t| t.0).unwrap_or(0),
                msg: "dangling sign".into(),
            });
        }
        let mut coeff = sign;
        let mut factors: Vec<(String, u32)> = Vec::new();
        loop {
            // one factor
            match &tokens[pos] {
                (_, Token::Number(r)) => {
                    coeff *= r;
                    pos += 1;
                }
                (_, Token::Name(name)) => {
                    let name = name.clone();
                    pos += 1;
                    let mut power = 1u32;
                    if pos < tokens.len() && tokens[pos].1 == Token::Caret {
                        let caret_pos = tokens[pos].0;
                        pos += 1;
                        match tokens.get(pos) {
                            Some((_, Token::Number(r)))
                                if r.is_integer() && *r.numer() >= BigInt::from(0) =>
                            {
                                power = u32::try_from(r.to_integer()).map_err(|_| {
                                    ExprError::Syntax {
                                        pos: caret_pos,
                                        msg: "exponent too large".into(),
                                    }
                                })?;
                                pos += 1;
                            }
                            _ => {
                                return Err(ExprError::Syntax {
                                    pos: caret_pos,
                                    msg: "expected nonnegative integer exponent".into(),
                                });
                            }
                        }
                    }
                    factors.push((name, power));
                }
                (p, tok) => {
                    return Err(ExprError::Syntax { pos: *p, msg: format!("unexpected token {tok:?}") })
                }
            }
            // continue product?
            match tokens.get(pos) {
                Some((_, Token::Star)) => {
                    let star_pos = tokens[pos].0;
                    pos += 1;
                    if pos >= tokens.len() {
                        return Err(ExprError::Syntax { pos: star_pos, msg: "dangling '*'".into() });
                    }
                }
                Some((_, Token::Plus)) | Some((_, Token::Minus)) | None => break,
                Some((p, tok)) => {
                    return Err(ExprError::Syntax { pos: *p, msg: format!("unexpected token {tok:?}") })
                }
            }
        }
        products.push(Product { coeff, factors });
    }
    Ok(products)
}
