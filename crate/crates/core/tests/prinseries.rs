use proptest::prelude::*;
use qshilov_core::prinseries::{
    canonicalize, central_scalar, central_scalar_at, classify, intertwiner_coeff, partner_exponents, verify_intertwiner,
    window, BoundaryVector, CaseLabel, KVector, ParamPair, PrincipalSeries, RepParams, Unitarity,
};
use qshilov_core::scalars::numeric::close;
use qshilov_core::scalars::{ExactParam, Scalar};
use qshilov_core::uqaction::Chevalley;

fn kv(k: &[i64]) -> KVector {
    KVector::new(k.to_vec()).unwrap()
}

/// `[E_n, F_n] = (K_n - K_n^-1)/(q - q^-1)` and `K_n E_n K_n^-1 = q^2 E_n`
/// on a vector, with symbolic parameters.
fn relation_residuals(s: &PrincipalSeries, w: &BoundaryVector) -> Vec<(String, bool)> {
    let n = s.n();
    let p = RepParams::symbolic();
    let (e, f, k, ki) = (Chevalley::E(n), Chevalley::F(n), Chevalley::K(n), Chevalley::KInv(n));
    let ef = s.sub(&s.pi_seq(&[e, f], w, &p).unwrap(), &s.pi_seq(&[f, e], w, &p).unwrap());
    let kk = s.sub(&s.pi_act(k, w, &p).unwrap(), &s.pi_act(ki, w, &p).unwrap());
    let kk = s.scale(&kk, &Scalar::q_minus_qinv(1).inv().unwrap());
    let conj = s.pi_seq(&[k, e, ki], w, &p).unwrap();
    let qe = s.scale(&s.pi_act(e, w, &p).unwrap(), &Scalar::q_pow(2));
    let kinv = s.pi_seq(&[k, ki], w, &p).unwrap();
    let mut out = vec![
        ("[En,Fn]".to_string(), s.equal(&ef, &kk)),
        ("Kn En Kn^-1".to_string(), s.equal(&conj, &qe)),
        ("Kn Kn^-1".to_string(), s.equal(&kinv, w)),
    ];
    if n >= 2 {
        let e1 = Chevalley::E(n - 1);
        let c = s.sub(&s.pi_seq(&[e1, f], w, &p).unwrap(), &s.pi_seq(&[f, e1], w, &p).unwrap());
        out.push(("[E(n-1),Fn]".into(), s.is_zero(&c)));
    }
    out
}

#[test]
fn pi_is_a_representation() {
    for n in 1..=2 {
        let s = PrincipalSeries::new(n).unwrap();
        for k in window(n, 1) {
            let v = s.highest_vector(&k).unwrap();
            let fv = s.pi_act(Chevalley::F(n), &v, &RepParams::symbolic()).unwrap();
            for w in [&v, &fv] {
                for (name, ok) in relation_residuals(&s, w) {
                    assert!(ok, "n={n} k={k} {name}");
                }
            }
        }
    }
}

#[test]
fn rank_one_boundary_action() {
    // E 1 = q^(1/2)(1 - q^-2b)/(q^2 - 1) z, K 1 = q^(a-b).
    let s = PrincipalSeries::new(1).unwrap();
    let p = RepParams::symbolic();
    let one = s.highest_vector(&kv(&[0])).unwrap();
    let e = s.pi_act(Chevalley::E(1), &one, &p).unwrap();
    let want = Scalar::s_pow(1)
        .mul(&Scalar::one().sub(&Scalar::v().pow(-2).unwrap()))
        .div(&Scalar::q_pow(2).sub(&Scalar::one()))
        .unwrap();
    let z = s.vector(s.algebra().z(1, 1), 0);
    assert!(s.equal(&e, &s.scale(&z, &want)));
    let k = s.pi_act(Chevalley::K(1), &one, &p).unwrap();
    assert!(s.equal(&k, &s.scale(&one, &Scalar::u().div(&Scalar::v()).unwrap())));
}

#[test]
fn decompositions_reassemble() {
    let s = PrincipalSeries::new(2).unwrap();
    let p = RepParams::symbolic();
    for k in window(2, 1) {
        let v = s.highest_vector(&k).unwrap();
        for x in [Chevalley::E(2), Chevalley::F(2)] {
            let w = s.pi_act(x, &v, &p).unwrap();
            let parts = s.isotypic_decompose(&w).unwrap();
            let mut sum = s.scale(&w, &Scalar::zero());
            for (m, part) in &parts {
                // Components of E_n, F_n images sit next to k.
                let d: i64 = m.0.iter().zip(&k.0).map(|(a, b)| (a - b).abs()).sum();
                assert_eq!(d, 1, "k={k} {x} -> {m}");
                sum = s.add(&sum, part);
            }
            assert!(s.equal(&sum, &w), "k={k} {x}");
        }
    }
}

#[test]
fn highest_vectors_in_rank_three() {
    let s = PrincipalSeries::new(3).unwrap();
    let p = RepParams::symbolic();
    for k in [kv(&[1, 0, -1]), kv(&[2, 2, 0]), kv(&[0, -1, -1])] {
        let v = s.highest_vector(&k).unwrap();
        for j in [1, 2, 4, 5] {
            assert!(s.is_zero(&s.pi_act(Chevalley::E(j), &v, &p).unwrap()), "k={k} E{j}");
        }
        let w = s.weight_of(&v, &p).unwrap().unwrap();
        // (k1-k2, k2-k3, q^(2 k3) u/v, k2-k3, k1-k2) as q-powers
        let d = |a: usize, b: usize| Scalar::q_pow((k.0[a] - k.0[b]) as i32);
        let mid = Scalar::q_pow(2 * k.0[2] as i32).mul(&Scalar::u()).div(&Scalar::v()).unwrap();
        assert_eq!(w, vec![d(0, 1), d(1, 2), mid, d(1, 2), d(0, 1)]);
    }
}

#[test]
fn intertwiner_in_rank_one() {
    let s = PrincipalSeries::new(1).unwrap();
    let bad = verify_intertwiner(&s, &window(1, 2), &[Chevalley::E(1), Chevalley::F(1), Chevalley::K(1)]).unwrap();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(intertwiner_coeff(&kv(&[0]), 1).is_one());
    // a_(-1) = (1 - q^(-2(b+1))) / (1 - q^(2a))
    let want = Scalar::one()
        .sub(&Scalar::q_pow(-2).mul(&Scalar::v().pow(-2).unwrap()))
        .div(&Scalar::one().sub(&Scalar::u().pow(2).unwrap()))
        .unwrap();
    assert_eq!(intertwiner_coeff(&kv(&[-1]), 1), want);
}

#[test]
fn classifier_table() {
    let row = |a: i64, b: i64| classify(&ParamPair::ints(a, b), 2).unwrap();
    let r = row(0, 0);
    assert_eq!(r.case_label, CaseLabel::Case1);
    let inside: Vec<KVector> = window(2, 3).into_iter().filter(|k| r.submodules[0].contains(k)).collect();
    assert_eq!(inside, vec![kv(&[0, 0])]);
    assert_eq!(row(2, -3).case_label, CaseLabel::Case2);
    assert_eq!(row(0, -1).submodules.len(), 2);
    let r = row(1, -3);
    assert_eq!((r.case_label, r.completely_reducible), (CaseLabel::Case3, Some(true)));
    assert_eq!(r.submodules.len(), 3);
    let r = row(-1, -3);
    assert_eq!((r.case_label, r.completely_reducible), (CaseLabel::Case4, Some(false)));
    assert_eq!(r.unitarity, Unitarity::SubmodulesOnly);
    let half = |s: &str| s.parse::<ExactParam>().unwrap();
    let r = classify(&ParamPair::new(half("1/2"), half("-1/2")), 2).unwrap();
    assert!(r.irreducible);
    assert!(r.equivalence_partner.is_some());
    assert!(classify(&ParamPair::new(half("1/2"), half("0")), 2).is_err());
}

#[test]
fn unitary_series_verdicts() {
    let pp = |a: &str, b: &str| ParamPair::new(a.parse().unwrap(), b.parse().unwrap());
    let u = |a: &str, b: &str| classify(&pp(a, b), 2).unwrap().unitarity;
    assert_eq!(u("-1/2+1/3*pi/h*i", "-3/2+1/3*pi/h*i"), Unitarity::Principal);
    assert_eq!(u("-3/4", "-7/4"), Unitarity::Complementary);
    assert_eq!(u("1/2+pi/h*i", "-1/2+pi/h*i"), Unitarity::Strange);
    assert_eq!(u("1/2", "-1/2"), Unitarity::None);
}

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..12, 1i64..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalize_is_idempotent((x, d) in rational(), shift in -4i64..5, y in 0i64..4, lift in -2i64..3) {
        let re = format!("{x}/{d}");
        let a: ExactParam = format!("{re}+{y}*pi/h*i").parse().unwrap();
        let b = ExactParam { re: a.re.clone() - num_rational::BigRational::from_integer(shift.into()), im: a.im.clone() + num_rational::BigRational::from_integer((4 * lift).into()) };
        let p = ParamPair::new(a, b);
        let c = canonicalize(&p, 2).unwrap();
        let c2 = canonicalize(&c.params, 2).unwrap();
        prop_assert_eq!(&c2.params, &c.params);
        if let Some(q) = &c.partner {
            let back = canonicalize(q, 2).unwrap();
            prop_assert_eq!(back.partner.as_ref(), Some(&c.params));
        }
        let z1 = central_scalar_at(&p, 2, 0.4).unwrap();
        let z2 = central_scalar_at(&c.params, 2, 0.4).unwrap();
        prop_assert!(close(z1, z2, 1e-9), "{z1} vs {z2}");
    }
}

#[test]
fn central_scalar_is_partner_invariant() {
    for n in 1..=4 {
        let c = central_scalar(n);
        assert_eq!(c.map_exponents(&partner_exponents(n)).unwrap(), c);
    }
}
