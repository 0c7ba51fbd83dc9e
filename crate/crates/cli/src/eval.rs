use qshilov_core::freealg::{eval_element, LocalElement};
use qshilov_core::scalars::expr::{parse, Expr};
use qshilov_core::scalars::ParseError;

use crate::model::Model;

fn err(pos: usize, msg: impl Into<String>) -> String {
    ParseError::new(pos, msg).to_string()
}

/// Evaluate an expression in the localized algebra. Besides generators it
/// knows `det`, `p(x)` and `star(x)`; negative powers and division are
/// allowed for scalar multiples of powers of `det`.
pub fn evaluate(model: &Model, src: &str) -> Result<LocalElement, String> {
    let e = parse(src).map_err(|e| e.to_string())?;
    eval(model, &e)
}

fn invert(model: &Model, x: &LocalElement, pos: usize) -> Result<LocalElement, String> {
    let loc = model.loc();
    let (c, k) = loc
        .as_scaled_d_power(x)
        .ok_or_else(|| err(pos, "only scalar multiples of det powers can be inverted"))?;
    let ci = c.inv().map_err(|_| err(pos, "division by zero"))?;
    Ok(loc.scale(&loc.d_pow(-k), &ci))
}

fn eval(model: &Model, e: &Expr) -> Result<LocalElement, String> {
    let loc = model.loc();
    let p = model.pres();
    Ok(match e {
        Expr::Ident { name, indices, .. } if name == "det" && indices.is_empty() => loc.from_poly(model.det().clone()),
        Expr::Call { name, args, pos } => {
            if args.len() != 1 {
                return Err(err(*pos, format!("`{name}` takes one argument")));
            }
            let x = eval(model, &args[0])?;
            match name.as_str() {
                "p" => loc.from_poly(p.scalar(model.point_eval(&x).map_err(|e| err(*pos, e.to_string()))?)),
                "star" => {
                    let s = model.star().map_err(|e| err(*pos, e.to_string()))?;
                    s.star(loc, &x).map_err(|e| err(*pos, e.to_string()))?
                }
                _ => return Err(err(*pos, format!("unknown function `{name}`"))),
            }
        }
        Expr::Add(a, b) => loc.add(&eval(model, a)?, &eval(model, b)?),
        Expr::Sub(a, b) => loc.sub(&eval(model, a)?, &eval(model, b)?),
        Expr::Mul(a, b) => loc.mul(&eval(model, a)?, &eval(model, b)?),
        Expr::Neg(a) => loc.neg(&eval(model, a)?),
        Expr::Div(a, b, pos) => {
            let x = eval(model, a)?;
            let y = eval(model, b)?;
            loc.mul(&x, &invert(model, &y, *pos)?)
        }
        Expr::Pow(a, k) => {
            let x = eval(model, a)?;
            let base = if *k < 0 { invert(model, &x, 0)? } else { x };
            let mut out = loc.from_poly(p.one());
            for _ in 0..k.unsigned_abs() {
                out = loc.mul(&out, &base);
            }
            out
        }
        other => loc.from_poly(eval_element(p, other, &mut |_| None).map_err(|e| e.to_string())?),
    })
}
