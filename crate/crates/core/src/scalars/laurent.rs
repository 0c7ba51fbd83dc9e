//! Sparse Laurent polynomials in `s`, `u`, `v` over the rationals.
//!
//! `s` is the square root of the deformation parameter `q`; `u` and `v`
//! stand for the formal parameters `q^a` and `q^b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector `(e_s, e_u, e_v)`.
pub type Exp = [i32; 3];

pub const VAR_S: usize = 0;
pub const VAR_U: usize = 1;
pub const VAR_V: usize = 2;

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &Exp, b: &Exp) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(e: Exp, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `s^k`, i.e. `q^(k/2)`.
    pub fn s_pow(k: i32) -> Self {
        Self::monomial([k, 0, 0], BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0, 0, 0])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Exp, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some(([0, 0, 0], c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// True when `u` and `v` do not occur.
    pub fn is_parameter_free(&self) -> bool {
        self.terms.keys().all(|e| e[VAR_U] == 0 && e[VAR_V] == 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &Exp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]], c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent; `[0,0,0]` for the zero polynomial.
    pub fn min_exponents(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return [0, 0, 0];
        };
        let mut m = *first;
        for e in it {
            for k in 0..3 {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    pub fn max_exponents(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return [0, 0, 0];
        };
        let mut m = *first;
        for e in it {
            for k in 0..3 {
                m[k] = m[k].max(e[k]);
            }
        }
        m
    }

    /// Leading term under graded lex.
    pub fn grlex_leading(&self) -> Option<(&Exp, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Leading term under plain lex (s, u, v).
    pub fn lex_leading(&self) -> Option<(&Exp, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Apply the linear exponent map `e -> m * e` (columns of `m` are the
    /// images of the three variables).
    pub fn map_exponents(&self, m: &[[i32; 3]; 3]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = [0i32; 3];
            for (row, slot) in ne.iter_mut().enumerate() {
                *slot = (0..3).map(|col| m[row][col] * e[col]).sum();
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Evaluate with a caller-supplied monomial evaluator.
    pub fn eval_with<T, F>(&self, zero: T, mut mono: F) -> T
    where
        T: std::ops::Add<Output = T>,
        F: FnMut(&Exp, &BigRational) -> T,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            acc = acc + mono(e, c);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Sum of absolute values of the coefficients, as a float; used to scale
    /// numeric pole tests.
    pub fn abs_weight(&self) -> f64 {
        self.terms
            .values()
            .map(|c| rat_to_f64(&c.abs()))
            .sum()
    }
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => r.to_f64().unwrap_or(f64::NAN),
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::render::render_poly(self))
    }
}
