//! Multivariate polynomial gcd over Q by recursive primitive remainder
//! sequences. All inputs here are genuine polynomials (no negative
//! exponents); callers strip monomial factors first.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::laurent::{Exp, LaurentPoly};

fn deg_in(p: &LaurentPoly, var: usize) -> i32 {
    p.terms().map(|(e, _)| e[var]).max().unwrap_or(0)
}

/// Split `p` into coefficients of powers of `var`.
fn coeffs_in(p: &LaurentPoly, var: usize) -> BTreeMap<i32, LaurentPoly> {
    let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = *e;
        e2[var] = 0;
        out.entry(e[var])
            .or_default()
            .add_term(e2, c.clone());
    }
    out
}

fn var_pow(var: usize, k: i32) -> Exp {
    let mut e = [0, 0, 0];
    e[var] = k;
    e
}

/// Make the grlex leading coefficient 1.
pub fn monic(p: &LaurentPoly) -> LaurentPoly {
    match p.grlex_leading() {
        Some((_, c)) if !c.is_one() => p.scale(&(BigRational::one() / c)),
        _ => p.clone(),
    }
}

/// Exact division of polynomials; `None` if `b` does not divide `a`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    if b.is_one() {
        return Some(a.clone());
    }
    if let Some(c) = b.as_constant() {
        return Some(a.scale(&(BigRational::one() / c)));
    }
    let (lb_e, lb_c) = b.lex_leading().map(|(e, c)| (*e, c.clone()))?;
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while let Some((le, lc)) = rem.lex_leading().map(|(e, c)| (*e, c.clone())) {
        let qe = [le[0] - lb_e[0], le[1] - lb_e[1], le[2] - lb_e[2]];
        if qe.iter().any(|&x| x < 0) {
            return None;
        }
        let qc = lc / &lb_c;
        let t = LaurentPoly::monomial(qe, qc);
        rem = rem.sub(&b.mul(&t));
        quot = quot.add(&t);
    }
    Some(quot)
}

fn content_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero();
    for c in coeffs_in(p, var).values() {
        g = poly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let c = content_in(p, var);
    if c.is_zero() {
        return p.clone();
    }
    div_exact(p, &c).expect("content divides polynomial")
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn prem(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let db = deg_in(b, var);
    let bc = coeffs_in(b, var);
    let lcb = bc.get(&db).cloned().unwrap_or_default();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = deg_in(&r, var);
        if dr < db {
            return r;
        }
        let lcr = coeffs_in(&r, var).remove(&dr).unwrap_or_default();
        let shifted = b.mul(&lcr).shift(&var_pow(var, dr - db));
        r = r.mul(&lcb).sub(&shifted);
    }
}

fn is_const(p: &LaurentPoly) -> bool {
    p.terms().all(|(e, _)| *e == [0, 0, 0])
}

/// Greatest common divisor of two polynomials, normalized to grlex-monic.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if is_const(a) || is_const(b) {
        return LaurentPoly::one();
    }
    let ma = a.max_exponents();
    let mb = b.max_exponents();
    let Some(var) = (0..3).rev().find(|&k| ma[k] > 0 || mb[k] > 0) else {
        return LaurentPoly::one();
    };
    if ma[var] == 0 {
        return poly_gcd(a, &content_in(b, var));
    }
    if mb[var] == 0 {
        return poly_gcd(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let gc = poly_gcd(&ca, &cb);
    let mut pa = div_exact(a, &ca).expect("content divides");
    let mut pb = div_exact(b, &cb).expect("content divides");
    if deg_in(&pa, var) < deg_in(&pb, var) {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = prem(&pa, &pb, var);
        if r.is_zero() {
            break;
        }
        if deg_in(&r, var) == 0 {
            pb = LaurentPoly::one();
            break;
        }
        pa = pb;
        pb = primitive_in(&r, var);
    }
    let g = if pb.is_one() {
        gc
    } else {
        gc.mul(&primitive_in(&pb, var))
    };
    monic(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[([i32; 3], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            terms
                .iter()
                .map(|(e, c)| (*e, BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    #[test]
    fn gcd_of_univariate_q_polynomials() {
        // (1 - s^4) and (1 - s^2) share (1 - s^2).
        let a = p(&[([0, 0, 0], 1), ([4, 0, 0], -1)]);
        let b = p(&[([0, 0, 0], 1), ([2, 0, 0], -1)]);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, monic(&b));
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        // f = (1 - u^2 s^2), a = f (1 + v), b = f (s - v)
        let f = p(&[([0, 0, 0], 1), ([2, 2, 0], -1)]);
        let a = f.mul(&p(&[([0, 0, 0], 1), ([0, 0, 1], 1)]));
        let b = f.mul(&p(&[([1, 0, 0], 1), ([0, 0, 1], -1)]));
        assert_eq!(poly_gcd(&a, &b), monic(&f));
    }

    #[test]
    fn coprime_gives_one() {
        let a = p(&[([1, 0, 0], 1), ([0, 0, 0], 1)]);
        let b = p(&[([0, 1, 0], 1), ([0, 0, 0], -2)]);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = p(&[([2, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = p(&[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        let q = div_exact(&a, &b).unwrap();
        assert_eq!(q, p(&[([1, 0, 0], 1), ([0, 0, 0], 1)]));
        let c = p(&[([1, 0, 0], 1), ([0, 0, 0], 2)]);
        assert!(div_exact(&a, &c).is_none());
    }
}
