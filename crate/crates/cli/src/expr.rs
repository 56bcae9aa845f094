//! Weight-sequence expressions.
//!
//! ```text
//! spec    := "list:" scalar ("," scalar)*  |  expr
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary | unary)*     juxtaposition multiplies: 2k, k(k-1)
//! unary   := "-" unary | power
//! power   := atom ("^" integer)?                    exponent at most 2
//! atom    := integer | VAR | "(" expr ")"
//! ```
//!
//! `VAR` is `k` for triad weights and `j` for root sequences. Results are
//! polynomials of degree at most 2; division is only by nonzero constants.

use thiserror::Error;
use triads_core::sequence::MAX_SEQUENCE_DEGREE;
use triads_core::{ExactScalar, SequenceSpec, TriadError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected `{found}` at offset {offset}")]
    Unexpected { found: String, offset: usize },
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("unknown variable `{name}`; expected `{expected}`")]
    UnknownVariable { name: char, expected: char },
    #[error("exponent {0} is not allowed; use 0, 1 or 2")]
    Exponent(String),
    #[error("division by a non-constant or zero expression")]
    BadDivisor,
    #[error("expression has degree {0}; at most 2 is supported")]
    DegreeTooHigh(usize),
    #[error("bad list entry `{0}`")]
    ListEntry(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u64),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str, var: char) -> Result<Vec<(Token, usize)>, ExprError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = offset;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let text = &src[offset..end];
            let n = text.parse().map_err(|_| ExprError::Unexpected {
                found: text.into(),
                offset,
            })?;
            out.push((Token::Num(n), offset));
            continue;
        }
        chars.next();
        let tok = match c {
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_alphabetic() => {
                if c != var {
                    return Err(ExprError::UnknownVariable { name: c, expected: var });
                }
                Token::Var(c)
            }
            other => {
                return Err(ExprError::Unexpected {
                    found: other.to_string(),
                    offset,
                })
            }
        };
        out.push((tok, offset));
    }
    Ok(out)
}

/// Ascending coefficients; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<ExactScalar>);

impl Poly {
    fn constant(c: ExactScalar) -> Self {
        Self(vec![c]).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(ExactScalar::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn coeff(&self, j: usize) -> ExactScalar {
        self.0.get(j).cloned().unwrap_or_default()
    }

    fn add(&self, rhs: &Poly, sign: i64) -> Poly {
        let sign = ExactScalar::from(sign);
        let len = self.0.len().max(rhs.0.len());
        Poly((0..len).map(|j| self.coeff(j) + &sign * rhs.coeff(j)).collect()).trimmed()
    }

    fn mul(&self, rhs: &Poly) -> Result<Poly, ExprError> {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Ok(Poly(Vec::new()));
        }
        let degree = self.degree() + rhs.degree();
        if degree > MAX_SEQUENCE_DEGREE {
            return Err(ExprError::DegreeTooHigh(degree));
        }
        let mut out = vec![ExactScalar::zero(); degree + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Poly(out).trimmed())
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ExprError {
        match self.tokens.get(self.pos) {
            Some((tok, offset)) => ExprError::Unexpected {
                found: format!("{tok:?}"),
                offset: *offset,
            },
            None => ExprError::UnexpectedEnd,
        }
    }

    fn expr(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Some(Token::Plus) => 1,
                Some(Token::Minus) => -1,
                _ => return Ok(acc),
            };
            self.next();
            let rhs = self.term()?;
            acc = acc.add(&rhs, sign);
        }
    }

    fn term(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs)?;
                }
                Some(Token::Slash) => {
                    self.next();
                    let rhs = self.unary()?;
                    if rhs.degree() > 0 || rhs.0.is_empty() {
                        return Err(ExprError::BadDivisor);
                    }
                    let inv = rhs.0[0].recip().ok_or(ExprError::BadDivisor)?;
                    acc = acc.mul(&Poly::constant(inv))?;
                }
                Some(Token::Num(_) | Token::Var(_) | Token::LParen) => {
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.next();
            let inner = self.unary()?;
            return Ok(Poly(Vec::new()).add(&inner, -1));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.next();
        let exp = match self.next() {
            Some(Token::Num(e)) if e <= MAX_SEQUENCE_DEGREE as u64 => e,
            Some(Token::Num(e)) => return Err(ExprError::Exponent(e.to_string())),
            Some(other) => return Err(ExprError::Exponent(format!("{other:?}"))),
            None => return Err(ExprError::UnexpectedEnd),
        };
        let mut acc = Poly::constant(ExactScalar::one());
        for _ in 0..exp {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly, ExprError> {
        let err = self.unexpected();
        match self.next() {
            Some(Token::Num(n)) => Ok(Poly::constant(n.into())),
            Some(Token::Var(_)) => Ok(Poly(vec![ExactScalar::zero(), ExactScalar::one()])),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ExprError::UnexpectedEnd),
                }
            }
            _ => Err(err),
        }
    }
}

/// Parses a weight sequence in the variable `var`.
pub fn parse_sequence(src: &str, var: char) -> Result<SequenceSpec, ExprError> {
    let src = src.trim();
    if let Some(list) = src.strip_prefix("list:") {
        let values = list
            .split(',')
            .map(|entry| {
                entry
                    .trim()
                    .parse::<ExactScalar>()
                    .map_err(|_| ExprError::ListEntry(entry.trim().into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SequenceSpec::explicit(values));
    }
    let tokens = tokenize(src, var)?;
    if tokens.is_empty() {
        return Err(ExprError::Empty);
    }
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(parser.unexpected());
    }
    SequenceSpec::polynomial(poly.0).map_err(|e| match e {
        TriadError::DegreeTooHigh(d) => ExprError::DegreeTooHigh(d),
        other => unreachable!("polynomial construction only fails on degree: {other}"),
    })
}
