//! Numeric specialization at `q in (0,1)` and complex parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{rat_to_f64, LaurentPoly};
use super::scalar::Scalar;
use super::ScalarError;

/// `x + y*pi/h*i` with rational `x`, `y`. With `q = e^{-h/2}` this makes
/// `q^param = q^x e^{-i pi y / 2}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactParam {
    #[serde(with = "rat_string")]
    pub re: BigRational,
    #[serde(with = "rat_string")]
    pub im: BigRational,
}

mod rat_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(s.trim()).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s.strip_prefix('+').unwrap_or(s).trim()),
    };
    let r = if let Some((a, b)) = body.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
        let b: BigInt = b.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
        if b.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        BigRational::new(a, b)
    } else if let Some((a, b)) = body.split_once('.') {
        let digits = format!("{a}{b}");
        let n: BigInt = digits.parse().map_err(|_| format!("bad decimal `{s}`"))?;
        let d = num_traits::pow(BigInt::from(10), b.len());
        BigRational::new(n, d)
    } else {
        BigRational::from_integer(body.parse().map_err(|_| format!("bad rational `{s}`"))?)
    };
    Ok(if neg { -r } else { r })
}

impl ExactParam {
    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn add_int(&self, k: i64) -> Self {
        Self {
            re: &self.re + BigRational::from_integer(k.into()),
            im: self.im.clone(),
        }
    }

    /// Imaginary part reduced into `[0, m)`.
    pub fn im_mod(&self, m: i64) -> BigRational {
        rat_mod(&self.im, m)
    }
}

pub(crate) fn rat_mod(x: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(m.into());
    let k = (x / &m).floor();
    x - k * m
}

impl fmt::Display for ExactParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let y = if self.im == BigRational::from_integer(1.into()) {
            String::new()
        } else if self.im == BigRational::from_integer((-1).into()) {
            "-".to_string()
        } else {
            format!("{}*", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{y}pi/h*i")
        } else if self.im.is_negative() {
            let y = y.trim_start_matches('-');
            write!(f, "{}-{y}pi/h*i", self.re)
        } else {
            write!(f, "{}+{y}pi/h*i", self.re)
        }
    }
}

impl fmt::Debug for ExactParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactParam {
    type Err = String;

    /// Accepts `x`, `x+y*pi/h*i`, `x-y*pi/h*i`, `y*pi/h*i` and `pi/h*i`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty parameter".into());
        }
        let Some(body) = t.strip_suffix("pi/h*i") else {
            return Ok(Self::real(parse_rational(&t)?));
        };
        // body is `x+y*`, `x-y*`, `y*`, `x+`, `-` or empty.
        let body = body.strip_suffix('*').unwrap_or(body);
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re)?
        };
        let im = match im {
            "" | "+" => BigRational::from_integer(1.into()),
            "-" => BigRational::from_integer((-1).into()),
            other => parse_rational(other)?,
        };
        Ok(Self { re, im })
    }
}

/// A point where scalars can be evaluated numerically.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericParams {
    pub q: f64,
    pub alpha: ExactParam,
    pub beta: ExactParam,
}

impl NumericParams {
    pub fn new(q: f64, alpha: ExactParam, beta: ExactParam) -> Self {
        assert!(q > 0.0 && q < 1.0, "q must lie in (0, 1)");
        Self { q, alpha, beta }
    }

    pub fn with_q(q: f64) -> Self {
        Self::new(q, ExactParam::from_ints(0, 0), ExactParam::from_ints(0, 0))
    }

    /// `h` with `q = e^{-h/2}`.
    pub fn h(&self) -> f64 {
        -2.0 * self.q.ln()
    }
}

fn unit_phase(quarter_turns: &BigRational) -> Complex64 {
    // e^{-i pi t / 2}, exact on integer t.
    let t = rat_mod(quarter_turns, 4);
    if t.is_integer() {
        return match t.to_integer().to_i64().unwrap_or(0) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
    }
    let theta = -std::f64::consts::FRAC_PI_2 * rat_to_f64(&t);
    Complex64::new(theta.cos(), theta.sin())
}

fn eval_poly(p: &LaurentPoly, pt: &NumericParams) -> Complex64 {
    let lq = pt.q.ln();
    p.eval_with(Complex64::new(0.0, 0.0), |e, c| {
        let real_exp = e[0] as f64 / 2.0
            + e[1] as f64 * rat_to_f64(&pt.alpha.re)
            + e[2] as f64 * rat_to_f64(&pt.beta.re);
        let turns = BigRational::from_integer(e[1].into()) * &pt.alpha.im
            + BigRational::from_integer(e[2].into()) * &pt.beta.im;
        unit_phase(&turns) * (real_exp * lq).exp() * rat_to_f64(c)
    })
}

/// Substitute `s -> sqrt(q)`, `u -> q^alpha`, `v -> q^beta`.
pub fn specialize(a: &Scalar, pt: &NumericParams) -> Result<Complex64, ScalarError> {
    let num = eval_poly(a.numer(), pt);
    if a.is_laurent() {
        return Ok(num);
    }
    let den = eval_poly(a.denom(), pt);
    let scale = a.denom().abs_weight().max(1.0);
    if den.norm() <= 1e-12 * scale {
        return Err(ScalarError::Pole {
            denominator: super::render::render_poly(a.denom()),
        });
    }
    Ok(num / den)
}

/// Relative closeness used by numeric property checks.
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qcomb::q_int;

    #[test]
    fn q_integer_at_half() {
        let p = NumericParams::with_q(0.5);
        let z = specialize(&q_int(2), &p).unwrap();
        assert!(close(z, Complex64::new(2.5, 0.0), 1e-14));
    }

    #[test]
    fn parameter_phases() {
        let p = NumericParams::new(0.5, ExactParam::from_ints(1, 0), ExactParam::from_ints(0, 0));
        assert!(close(specialize(&Scalar::u(), &p).unwrap(), Complex64::new(0.5, 0.0), 1e-14));
        let p = NumericParams::new(0.5, ExactParam::from_ints(0, 1), ExactParam::from_ints(0, 0));
        assert_eq!(specialize(&Scalar::u(), &p).unwrap(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn poles_are_reported() {
        let x = Scalar::one()
            .div(&Scalar::one().sub(&Scalar::u()))
            .unwrap();
        let p = NumericParams::with_q(0.3);
        assert!(matches!(specialize(&x, &p), Err(ScalarError::Pole { .. })));
    }

    #[test]
    fn parse_params() {
        let p: ExactParam = "1/2+3*pi/h*i".parse().unwrap();
        assert_eq!(p.re, BigRational::new(1.into(), 2.into()));
        assert_eq!(p.im, BigRational::from_integer(3.into()));
        let p: ExactParam = "-2".parse().unwrap();
        assert!(p.is_integer());
        let p: ExactParam = "pi/h*i".parse().unwrap();
        assert_eq!(p.im, BigRational::from_integer(1.into()));
        let p: ExactParam = "-1-1/2*pi/h*i".parse().unwrap();
        assert_eq!(p.im, BigRational::new((-1).into(), 2.into()));
        assert_eq!(p.re, BigRational::from_integer((-1).into()));
        for s in ["0", "1/2+pi/h*i", "-3+2*pi/h*i", "5/3-1/2*pi/h*i", "pi/h*i"] {
            let p: ExactParam = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<ExactParam>().unwrap(), p);
        }
        assert!("x".parse::<ExactParam>().is_err());
    }
}
