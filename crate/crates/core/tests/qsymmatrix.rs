use std::collections::BTreeMap;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qshilov_core::freealg::AlgebraElement;
use qshilov_core::qsymmatrix::QSymMatAlgebra;
use qshilov_core::scalars::{LaurentPoly, Scalar};
use qshilov_core::uqaction::verify_star;

fn at_q_one(x: &Scalar) -> BigRational {
    let ev = |p: &LaurentPoly| p.eval_with(BigRational::zero(), |_, c| c.clone());
    ev(x.numer()) / ev(x.denom())
}

/// Commutative image at `q = 1`: words become sorted generator multisets.
fn classical(x: &AlgebraElement) -> BTreeMap<Vec<u16>, BigRational> {
    let mut out: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
    for (w, c) in x.terms() {
        let mut k = w.clone();
        k.sort();
        *out.entry(k).or_insert_with(BigRational::zero) += at_q_one(c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn symmetric_det(a: &QSymMatAlgebra) -> BTreeMap<Vec<u16>, BigRational> {
    let n = a.n();
    let mut out: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
    for perm in (1..=n).permutations(n) {
        let inv = perm.iter().tuple_combinations().filter(|(x, y)| x > y).count();
        let mut k: Vec<u16> = (1..=n)
            .zip(&perm)
            .map(|(i, &j)| a.gen(i.max(j), i.min(j)))
            .collect();
        k.sort();
        let s = if inv % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        *out.entry(k).or_insert_with(BigRational::zero) += s;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn determinant_has_the_classical_limit() {
    for n in 1..=3 {
        let a = QSymMatAlgebra::new(n).unwrap();
        assert_eq!(classical(a.sym_det()), symmetric_det(&a), "n={n}");
    }
    let a = QSymMatAlgebra::new(2).unwrap();
    assert_eq!(a.presentation().render(a.sym_det()), "z[1][1].z[2][2] - q^3 * z[2][1].z[2][1]");
}

#[test]
fn determinant_is_central() {
    for n in 1..=3 {
        let a = QSymMatAlgebra::new(n).unwrap();
        let p = a.presentation();
        for g in 0..p.num_generators() as u16 {
            assert!(p.commutator(a.sym_det(), &p.gen(g)).unwrap().is_zero());
            let (i, j) = a.indices(g);
            assert!(a.sym_det_commutant_scalar(i, j).unwrap().is_one());
        }
    }
}

#[test]
fn mirrored_entries() {
    let a = QSymMatAlgebra::new(2).unwrap();
    assert_eq!(a.z(1, 2), a.z(2, 1).scale(&Scalar::q_pow(-2)));
}

#[test]
fn transported_involution() {
    for n in 2..=3 {
        let a = QSymMatAlgebra::new(n).unwrap();
        let st = a.derived_star().unwrap();
        let checks = verify_star(a.engine(), a.localization(), a.spec(), &st).unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c.ok), "n={n}");
    }
    let a = QSymMatAlgebra::new(2).unwrap();
    let loc = a.localization();
    let st = a.derived_star().unwrap();
    let di = loc.d_pow(-1);
    let img = |x: AlgebraElement, c: i32| loc.mul(&loc.from_poly(x.scale(&Scalar::q_pow(c))), &di);
    assert!(loc.equal(st.image(a.gen(1, 1)), &img(a.z(2, 2), -2)));
    assert!(loc.equal(st.image(a.gen(2, 2)), &img(a.z(1, 1), 0)));
    let z21 = loc.mul(&loc.from_poly(a.z(2, 1).scale(&Scalar::s_pow(-2).neg())), &di);
    assert!(loc.equal(st.image(a.gen(2, 1)), &z21));
}

#[test]
fn point_kills_relations() {
    for n in 1..=3 {
        let a = QSymMatAlgebra::new(n).unwrap();
        for r in a.presentation().relations() {
            let v = r.terms.iter().fold(Scalar::zero(), |acc, (w, c)| {
                acc.add(&w.iter().fold(c.clone(), |t, &g| t.mul(&a.point_value(g))))
            });
            assert!(v.is_zero());
        }
    }
}
