use num_complex::Complex64;
use proptest::prelude::*;
use qshilov_core::scalars::numeric::close;
use qshilov_core::scalars::{parse_scalar, q_binomial, specialize, ExactParam, LaurentPoly, NumericParams, Scalar};

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(((-2i32..3, -1i32..2, -1i32..2), -3i64..4), 1..3).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, ((es, eu, ev), c)| {
            acc.add(&Scalar::monomial([es, eu, ev]).mul(&Scalar::from_int(c)))
        })
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("zero denominator", |(a, b)| a.div(&b).ok())
}

fn point() -> NumericParams {
    NumericParams::new(0.37, "1/3".parse().unwrap(), "-2/5+1/2*pi/h*i".parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn field_laws(a in scalar(), b in scalar(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar()) {
        let pt = point();
        let (Ok(x), Ok(y)) = (specialize(&a, &pt), specialize(&b, &pt)) else { return Ok(()) };
        if let Ok(s) = specialize(&a.add(&b), &pt) {
            prop_assert!(close(s, x + y, 1e-9));
        }
        if let Ok(p) = specialize(&a.mul(&b), &pt) {
            prop_assert!(close(p, x * y, 1e-9));
        }
    }

    #[test]
    fn render_parse_round_trip(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn q_binomials_satisfy_pascal() {
    // [m, k] = q^k [m-1, k] + q^(k-m) [m-1, k-1]
    for m in 1..7 {
        for k in 1..m {
            let lhs = q_binomial(m, k, 1).unwrap();
            let rhs = Scalar::q_pow(k as i32)
                .mul(&q_binomial(m - 1, k, 1).unwrap())
                .add(&Scalar::q_pow((k - m) as i32).mul(&q_binomial(m - 1, k - 1, 1).unwrap()));
            assert_eq!(lhs, rhs, "m={m} k={k}");
        }
    }
}

#[test]
fn imaginary_parameters_rotate_by_quarter_turns() {
    // q^(i pi / h) = e^{-i pi / 2}
    let pt = NumericParams::new(0.5, "pi/h*i".parse().unwrap(), ExactParam::from_ints(0, 0));
    let x = specialize(&Scalar::u(), &pt).unwrap();
    assert!(close(x, Complex64::new(0.0, -1.0), 1e-12));
    let y = specialize(&Scalar::u().pow(4).unwrap(), &pt).unwrap();
    assert!(close(y, Complex64::new(1.0, 0.0), 1e-12));
}

#[test]
fn poles_are_reported() {
    let x = parse_scalar("1/(u - 1)").unwrap();
    let pt = NumericParams::with_q(0.5);
    assert!(specialize(&x, &pt).is_err());
}

#[test]
fn parameter_strings() {
    let p: ExactParam = "3/2-1/3*pi/h*i".parse().unwrap();
    assert_eq!(p.to_string(), "3/2-1/3*pi/h*i");
    assert_eq!(p.to_string().parse::<ExactParam>().unwrap(), p);
    assert!("x+1".parse::<ExactParam>().is_err());
    assert!(ExactParam::from_ints(-2, 0).is_integer());
}

#[test]
fn laurent_substitution_matches_manual_expansion() {
    let p = LaurentPoly::s_pow(2).add(&LaurentPoly::from_int(-1));
    let x = Scalar::from_poly(p).pow(3).unwrap();
    let q = Scalar::q_pow(1);
    let manual = q.pow(3).unwrap().sub(&q.pow(2).unwrap().mul(&Scalar::from_int(3))).add(&q.mul(&Scalar::from_int(3))).sub(&Scalar::one());
    assert_eq!(x, manual);
}
