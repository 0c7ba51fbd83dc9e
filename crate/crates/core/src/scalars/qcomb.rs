//! q-integers, q-factorials and Gaussian binomials.

use super::scalar::Scalar;
use super::ScalarError;

/// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`, as a Laurent sum.
pub fn q_int_d(n: i64, d: i32) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let m = n.unsigned_abs() as i32;
    let mut out = Scalar::zero();
    for i in 0..m {
        out = out.add(&Scalar::q_pow(d * (m - 1 - 2 * i)));
    }
    if n < 0 {
        out.neg()
    } else {
        out
    }
}

pub fn q_int(n: i64) -> Scalar {
    q_int_d(n, 1)
}

pub fn q_factorial_d(n: i64, d: i32) -> Result<Scalar, ScalarError> {
    if n < 0 {
        return Err(ScalarError::Domain(format!("q-factorial of negative {n}")));
    }
    let mut out = Scalar::one();
    for k in 1..=n {
        out = out.mul(&q_int_d(k, d));
    }
    Ok(out)
}

pub fn q_factorial(n: i64) -> Result<Scalar, ScalarError> {
    q_factorial_d(n, 1)
}

/// Gaussian binomial `[m n]` in `q_i = q^d`.
pub fn q_binomial(m: i64, n: i64, d: i32) -> Result<Scalar, ScalarError> {
    if n < 0 || m < 0 || n > m {
        return Err(ScalarError::Domain(format!(
            "q-binomial needs 0 <= n <= m, got m={m}, n={n}"
        )));
    }
    let num = q_factorial_d(m, d)?;
    let den = q_factorial_d(n, d)?.mul(&q_factorial_d(m - n, d)?);
    num.div(&den)
}
