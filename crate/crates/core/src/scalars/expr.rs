//! Tokenizer and parser for scalar and element expressions.
//!
//! The grammar covers the rendered forms of scalars and elements:
//! sums, products (`*` or `.`), quotients, unary minus, integer powers,
//! `q^k`, `q^(1/2)`, `q^(2a+b-1/2)`, indexed identifiers such as `z[2][1]`
//! and calls such as `p(det)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use super::laurent::Exp;
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((Tok::Num(s.parse().expect("digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^.()[],".contains(c) {
            out.push((Tok::Sym(c), pos));
            i += 1;
        } else {
            return Err(ParseError::new(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    /// `s^es u^eu v^ev`.
    QPow(Exp),
    Ident {
        name: String,
        indices: Vec<i64>,
        pos: usize,
    },
    Call {
        name: String,
        args: Vec<Expr>,
        pos: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.1).unwrap_or(self.end)
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.is_sym(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            if self.is_sym('+') {
                self.i += 1;
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.is_sym('-') {
                self.i += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.is_sym('*') || self.is_sym('.') {
                self.i += 1;
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.is_sym('/') {
                let pos = self.pos();
                self.i += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.is_sym('-') {
            self.i += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.is_sym('+') {
            self.i += 1;
            return self.unary();
        }
        self.power()
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let paren = self.is_sym('(');
        if paren {
            self.i += 1;
        }
        let neg = self.is_sym('-');
        if neg {
            self.i += 1;
        }
        let pos = self.pos();
        let v = match self.peek() {
            Some(Tok::Num(n)) => n
                .to_i64()
                .ok_or_else(|| ParseError::new(pos, "exponent too large"))?,
            _ => return Err(ParseError::new(pos, "expected integer exponent")),
        };
        self.i += 1;
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -v } else { v })
    }

    /// Exponent of `q`: a signed integer, `a`, `b`, or a parenthesized
    /// linear form in `a`, `b` with a half-integral constant.
    fn q_exponent(&mut self) -> Result<Exp, ParseError> {
        let start = self.pos();
        if !self.is_sym('(') {
            if let Some(Tok::Ident(name)) = self.peek().cloned() {
                self.i += 1;
                return match name.as_str() {
                    "a" => Ok([0, 1, 0]),
                    "b" => Ok([0, 0, 1]),
                    _ => Err(ParseError::new(start, format!("unknown exponent `{name}`"))),
                };
            }
            let k = self.signed_int()?;
            return to_i32(2 * k, start).map(|k| [k, 0, 0]);
        }
        self.i += 1;
        let mut cst = BigRational::zero();
        let (mut ea, mut eb) = (0i64, 0i64);
        let mut first = true;
        loop {
            if self.is_sym(')') {
                self.i += 1;
                break;
            }
            let sign = if self.is_sym('-') {
                self.i += 1;
                -1
            } else if self.is_sym('+') {
                self.i += 1;
                1
            } else if first {
                1
            } else {
                return Err(ParseError::new(self.pos(), "expected `+`, `-` or `)`"));
            };
            first = false;
            let mut coeff: Option<BigRational> = None;
            if let Some(Tok::Num(n)) = self.peek().cloned() {
                self.i += 1;
                let mut c = BigRational::from_integer(n);
                if self.is_sym('/') {
                    self.i += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.i += 1;
                            c /= BigRational::from_integer(d);
                        }
                        _ => return Err(ParseError::new(self.pos(), "expected denominator")),
                    }
                }
                coeff = Some(c);
            }
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Ident(name)) if name == "a" || name == "b" => {
                    self.i += 1;
                    let c = coeff.unwrap_or_else(BigRational::one) * BigRational::from_integer(sign.into());
                    if !c.is_integer() {
                        return Err(ParseError::new(pos, "parameter coefficients must be integers"));
                    }
                    let c = c.to_integer().to_i64().ok_or_else(|| ParseError::new(pos, "overflow"))?;
                    if name == "a" {
                        ea += c;
                    } else {
                        eb += c;
                    }
                }
                _ => match coeff {
                    Some(c) => cst += c * BigRational::from_integer(sign.into()),
                    None => return Err(ParseError::new(pos, "expected number, `a` or `b`")),
                },
            }
        }
        let twice = cst * BigRational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(ParseError::new(start, "q exponents must be multiples of 1/2"));
        }
        let es = twice
            .to_integer()
            .to_i64()
            .ok_or_else(|| ParseError::new(start, "overflow"))?;
        Ok([to_i32(es, start)?, to_i32(ea, start)?, to_i32(eb, start)?])
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.i += 1;
        if let Expr::QPow(e) = &base {
            if *e == [2, 0, 0] {
                return Ok(Expr::QPow(self.q_exponent()?));
            }
        }
        let k = self.signed_int()?;
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some(Tok::Sym('(')) => {
                self.i += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "q" {
                    return Ok(Expr::QPow([2, 0, 0]));
                }
                if self.is_sym('(') {
                    self.i += 1;
                    let mut args = Vec::new();
                    if !self.is_sym(')') {
                        loop {
                            args.push(self.sum()?);
                            if self.is_sym(',') {
                                self.i += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(')')?;
                    return Ok(Expr::Call { name, args, pos });
                }
                let mut indices = Vec::new();
                while self.is_sym('[') {
                    self.i += 1;
                    let ipos = self.pos();
                    let k = self.signed_int()?;
                    if indices.len() > 8 {
                        return Err(ParseError::new(ipos, "too many indices"));
                    }
                    indices.push(k);
                    self.expect(']')?;
                }
                Ok(Expr::Ident { name, indices, pos })
            }
            Some(Tok::Sym(c)) => Err(ParseError::new(pos, format!("unexpected `{c}`"))),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

fn to_i32(x: i64, pos: usize) -> Result<i32, ParseError> {
    i32::try_from(x).map_err(|_| ParseError::new(pos, "exponent out of range"))
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: src.len(),
    };
    let e = p.sum()?;
    if p.i != p.toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// Evaluate an expression that contains only scalars. `u`, `v`, `s` are
/// accepted as names for `q^a`, `q^b`, `q^(1/2)`.
pub fn eval_scalar(e: &Expr) -> Result<Scalar, ParseError> {
    Ok(match e {
        Expr::Num(c) => Scalar::from_rational(c.clone()),
        Expr::QPow(x) => Scalar::monomial(*x),
        Expr::Ident { name, indices, pos } => {
            if !indices.is_empty() {
                return Err(ParseError::new(*pos, format!("`{name}` is not a scalar")));
            }
            match name.as_str() {
                "u" => Scalar::u(),
                "v" => Scalar::v(),
                "s" => Scalar::s_pow(1),
                _ => return Err(ParseError::new(*pos, format!("unknown symbol `{name}`"))),
            }
        }
        Expr::Call { name, pos, .. } => {
            return Err(ParseError::new(*pos, format!("unknown function `{name}`")))
        }
        Expr::Add(a, b) => eval_scalar(a)?.add(&eval_scalar(b)?),
        Expr::Sub(a, b) => eval_scalar(a)?.sub(&eval_scalar(b)?),
        Expr::Mul(a, b) => eval_scalar(a)?.mul(&eval_scalar(b)?),
        Expr::Div(a, b, pos) => eval_scalar(a)?
            .div(&eval_scalar(b)?)
            .map_err(|_| ParseError::new(*pos, "division by zero"))?,
        Expr::Neg(a) => eval_scalar(a)?.neg(),
        Expr::Pow(a, k) => {
            let k = i32::try_from(*k).map_err(|_| ParseError::new(0, "power out of range"))?;
            eval_scalar(a)?
                .pow(k)
                .map_err(|_| ParseError::new(0, "zero to a negative power"))?
        }
    })
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    eval_scalar(&parse(src)?)
}

impl std::str::FromStr for Scalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_scalar(s)
    }
}
