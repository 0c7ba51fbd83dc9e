//! Reduced rational functions in `s`, `u`, `v`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::gcd::{div_exact, monic, poly_gcd};
use super::laurent::{Exp, LaurentPoly};
use super::ScalarError;

/// `numerator / denominator` in canonical form.
///
/// The denominator is a polynomial without monomial factors whose graded-lex
/// leading coefficient is 1, and it shares no factor with the numerator.
/// Canonical form makes structural equality the field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

fn neg_exp(e: &Exp) -> Exp {
    [-e[0], -e[1], -e[2]]
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `s^es u^eu v^ev`.
    pub fn monomial(e: Exp) -> Self {
        Self::from_poly(LaurentPoly::monomial(e, BigRational::one()))
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial([2 * k, 0, 0])
    }

    /// `q^(k/2)`.
    pub fn s_pow(k: i32) -> Self {
        Self::monomial([k, 0, 0])
    }

    /// `q^a`.
    pub fn u() -> Self {
        Self::monomial([0, 1, 0])
    }

    /// `q^b`.
    pub fn v() -> Self {
        Self::monomial([0, 0, 1])
    }

    /// `q^k - q^-k`.
    pub fn q_minus_qinv(k: i32) -> Self {
        Self::q_pow(k).sub(&Self::q_pow(-k))
    }

    /// Build and reduce `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let m = den.min_exponents();
        let (num, den) = if m != [0, 0, 0] {
            (num.shift(&neg_exp(&m)), den.shift(&neg_exp(&m)))
        } else {
            (num, den)
        };
        if let Some(c) = den.as_constant() {
            let inv = BigRational::one() / c;
            return Self::from_poly(num.scale(&inv));
        }
        let nm = num.min_exponents();
        let npoly = num.shift(&neg_exp(&nm));
        let g = poly_gcd(&npoly, &den);
        let (npoly, den) = if g.is_one() {
            (npoly, den)
        } else {
            (
                div_exact(&npoly, &g).expect("gcd divides numerator"),
                div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        let lc = den
            .grlex_leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = BigRational::one() / lc;
        let den = monic(&den);
        let num = npoly.shift(&nm).scale(&inv);
        if den.is_one() {
            return Self::from_poly(num);
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// `(exponent, coefficient)` when this is a single monomial.
    pub fn as_monomial(&self) -> Option<(Exp, BigRational)> {
        if !self.is_laurent() {
            return None;
        }
        self.num.as_monomial().map(|(e, c)| (e, c.clone()))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_laurent() {
            return None;
        }
        self.num.as_constant()
    }

    pub fn is_parameter_free(&self) -> bool {
        self.num.is_parameter_free() && self.den.is_parameter_free()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Apply a linear change of the exponent lattice to numerator and
    /// denominator; used for monomial substitutions such as `u -> q^-n v^-1`.
    pub fn map_exponents(&self, m: &[[i32; 3]; 3]) -> Result<Self, ScalarError> {
        let num = self.num.map_exponents(m);
        let den = self.den.map_exponents(m);
        if den.is_zero() {
            return Err(ScalarError::Pole {
                denominator: super::render::render_poly(&self.den),
            });
        }
        Ok(Self::reduce(num, den))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render::render_scalar(self))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render::render_scalar(self))
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}
