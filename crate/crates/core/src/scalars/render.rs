//! Text rendering in `q` notation: `s^k` prints as `q^(k/2)`, `u` as `q^a`,
//! `v` as `q^b`. The output parses back through [`super::expr`].

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::laurent::{Exp, LaurentPoly};
use super::scalar::Scalar;

fn push_linear(out: &mut String, coeff: i32, name: &str) {
    if coeff == 0 {
        return;
    }
    if !out.is_empty() {
        out.push(if coeff < 0 { '-' } else { '+' });
    } else if coeff < 0 {
        out.push('-');
    }
    if coeff.abs() != 1 {
        out.push_str(&coeff.abs().to_string());
    }
    out.push_str(name);
}

/// The `q`-power for an exponent vector, or `None` for the unit monomial.
pub fn render_monomial(e: &Exp) -> Option<String> {
    let [es, eu, ev] = *e;
    if *e == [0, 0, 0] {
        return None;
    }
    if eu == 0 && ev == 0 {
        return Some(if es % 2 == 0 {
            match es / 2 {
                1 => "q".to_string(),
                k => format!("q^{k}"),
            }
        } else {
            format!("q^({es}/2)")
        });
    }
    let mut lin = String::new();
    push_linear(&mut lin, eu, "a");
    push_linear(&mut lin, ev, "b");
    if es != 0 {
        lin.push(if es < 0 { '-' } else { '+' });
        if es % 2 == 0 {
            lin.push_str(&(es.abs() / 2).to_string());
        } else {
            lin.push_str(&format!("{}/2", es.abs()));
        }
    }
    if lin == "a" || lin == "b" {
        Some(format!("q^{lin}"))
    } else {
        Some(format!("q^({lin})"))
    }
}

fn render_term(e: &Exp, c: &BigRational) -> String {
    let c = c.abs();
    match render_monomial(e) {
        None => c.to_string(),
        Some(m) if c.is_one() => m,
        Some(m) => format!("{c}*{m}"),
    }
}

/// Terms in descending exponent order with signs folded into the joins.
pub fn render_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&render_term(e, c));
    }
    out
}

/// True when the first displayed term carries a minus sign.
pub fn leading_negative(p: &LaurentPoly) -> bool {
    p.terms()
        .next_back()
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false)
}

pub fn render_scalar(x: &Scalar) -> String {
    if x.is_laurent() {
        return render_poly(x.numer());
    }
    let n = if x.numer().len() == 1 {
        render_poly(x.numer())
    } else {
        format!("({})", render_poly(x.numer()))
    };
    format!("{n}/({})", render_poly(x.denom()))
}

/// Render as a coefficient in front of a word: returns the sign and the
/// body, where the body is empty for a unit coefficient.
pub fn render_coefficient(x: &Scalar) -> (bool, String) {
    let neg = leading_negative(x.numer());
    let y = if neg { x.neg() } else { x.clone() };
    if y.is_one() {
        return (neg, String::new());
    }
    let body = if y.is_laurent() && y.numer().len() == 1 {
        render_poly(y.numer())
    } else if y.is_laurent() {
        format!("({})", render_poly(y.numer()))
    } else {
        render_scalar(&y)
    };
    (neg, body)
}
