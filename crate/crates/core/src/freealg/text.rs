//! Element text format: `c1 * g1.g2 + c2 * g3 - ...`.

use crate::scalars::expr::{parse, Expr};
use crate::scalars::render::render_coefficient;
use crate::scalars::{ParseError, Scalar};

use super::element::AlgebraElement;
use super::presentation::Presentation;
use super::AlgError;

impl Presentation {
    /// Render with terms ordered by degree, then word.
    pub fn render(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = x.terms().iter().collect();
        terms.sort_by(|a, b| super::deglex(a.0, b.0));
        let mut out = String::new();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let (neg, body) = render_coefficient(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = if w.is_empty() { String::new() } else { self.render_word(w) };
            match (body.is_empty(), word.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&word),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push_str(" * ");
                    out.push_str(&word);
                }
            }
        }
        out
    }

    /// Parse an element; identifiers with indices are looked up as
    /// `name[i][j]` labels.
    pub fn parse_element(&self, src: &str) -> Result<AlgebraElement, AlgError> {
        let e = parse(src)?;
        eval_element(self, &e, &mut |_| None)
    }
}

/// Evaluate a parsed expression in `p`. `hook` gets the first chance at
/// identifiers and calls, which lets callers add names such as `det`.
pub fn eval_element(
    p: &Presentation,
    e: &Expr,
    hook: &mut dyn FnMut(&Expr) -> Option<Result<AlgebraElement, AlgError>>,
) -> Result<AlgebraElement, AlgError> {
    Ok(match e {
        Expr::Num(c) => p.scalar(Scalar::from_rational(c.clone())),
        Expr::QPow(x) => p.scalar(Scalar::monomial(*x)),
        Expr::Ident { name, indices, pos } => {
            if let Some(r) = hook(e) {
                return r;
            }
            let mut label = name.clone();
            for i in indices {
                label.push_str(&format!("[{i}]"));
            }
            if let Some(g) = p.lookup(&label) {
                p.gen(g)
            } else {
                match name.as_str() {
                    "u" if indices.is_empty() => p.scalar(Scalar::u()),
                    "v" if indices.is_empty() => p.scalar(Scalar::v()),
                    "s" if indices.is_empty() => p.scalar(Scalar::s_pow(1)),
                    _ => {
                        return Err(ParseError::new(*pos, format!("unknown generator `{label}`")).into())
                    }
                }
            }
        }
        Expr::Call { name, pos, .. } => {
            if let Some(r) = hook(e) {
                return r;
            }
            return Err(ParseError::new(*pos, format!("unknown function `{name}`")).into());
        }
        Expr::Add(a, b) => eval_element(p, a, hook)?.add(&eval_element(p, b, hook)?),
        Expr::Sub(a, b) => eval_element(p, a, hook)?.sub(&eval_element(p, b, hook)?),
        Expr::Mul(a, b) => {
            let x = eval_element(p, a, hook)?;
            let y = eval_element(p, b, hook)?;
            p.mul(&x, &y)?
        }
        Expr::Div(a, b, pos) => {
            let x = eval_element(p, a, hook)?;
            let y = eval_element(p, b, hook)?;
            let c = y
                .as_scalar()
                .ok_or_else(|| ParseError::new(*pos, "can only divide by scalars"))?;
            let inv = c
                .inv()
                .map_err(|_| ParseError::new(*pos, "division by zero"))?;
            x.scale(&inv)
        }
        Expr::Neg(a) => eval_element(p, a, hook)?.neg(),
        Expr::Pow(a, k) => {
            let x = eval_element(p, a, hook)?;
            if *k < 0 {
                let c = x
                    .as_scalar()
                    .ok_or_else(|| ParseError::new(0, "negative powers need a scalar base"))?;
                let c = c
                    .pow(*k as i32)
                    .map_err(|_| ParseError::new(0, "zero to a negative power"))?;
                p.scalar(c)
            } else {
                p.pow(&x, *k as u32)?
            }
        }
    })
}
