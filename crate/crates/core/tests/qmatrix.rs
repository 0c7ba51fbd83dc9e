use itertools::Itertools;
use qshilov_core::freealg::AlgebraElement;
use qshilov_core::qmatrix::QMatAlgebra;
use qshilov_core::scalars::Scalar;
use qshilov_core::uqaction::verify_star;

fn minus_q(k: i32) -> Scalar {
    let c = Scalar::q_pow(k);
    if k.rem_euclid(2) == 1 {
        c.neg()
    } else {
        c
    }
}

/// Sum over permutations of `(-q)^inv(s) z[r1][c_s1] ... z[rk][c_sk]`.
fn minor_oracle(a: &QMatAlgebra, rows: &[usize], cols: &[usize]) -> AlgebraElement {
    let p = a.presentation();
    let mut out = p.zero();
    for perm in (0..cols.len()).permutations(cols.len()) {
        let inv = perm.iter().tuple_combinations().filter(|(x, y)| x > y).count() as i32;
        let mut term = p.scalar(minus_q(inv));
        for (r, &s) in rows.iter().zip(&perm) {
            term = p.mul(&term, &a.z(*r, cols[s])).unwrap();
        }
        out = out.add(&term);
    }
    out
}

#[test]
fn determinants_match_permutation_sum() {
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let all: Vec<usize> = (1..=n).collect();
        assert_eq!(a.det(), &minor_oracle(&a, &all, &all), "n={n}");
    }
    let a = QMatAlgebra::new(2).unwrap();
    assert_eq!(a.presentation().render(a.det()), "z[1][1].z[2][2] - q * z[1][2].z[2][1]");
}

#[test]
fn star_formula_against_oracle() {
    for n in 2..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let loc = a.localization();
        let st = a.explicit_star().unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let rows: Vec<usize> = (1..=n).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
                let m = minor_oracle(&a, &rows, &cols).scale(&minus_q((i + j) as i32 - 2 * n as i32));
                let want = loc.mul(&loc.from_poly(m), &loc.d_pow(-1));
                assert!(loc.equal(st.image(a.gen(i, j)), &want), "n={n} z[{i}][{j}]");
            }
        }
        let derived = a.derived_star().unwrap();
        for g in 0..(n * n) as u16 {
            assert!(loc.equal(st.image(g), derived.image(g)));
        }
    }
}

#[test]
fn star_is_an_involutive_antihomomorphism() {
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let st = a.explicit_star().unwrap();
        let checks = verify_star(a.engine(), a.localization(), a.spec(), &st).unwrap();
        assert!(checks.iter().all(|c| c.ok), "n={n}");
    }
    // On a product, by hand: (z11 z12)* = z12* z11*.
    let a = QMatAlgebra::new(2).unwrap();
    let loc = a.localization();
    let x = loc.from_poly(a.presentation().mul(&a.z(1, 1), &a.z(1, 2)).unwrap());
    let lhs = a.star(&x).unwrap();
    let rhs = loc.mul(
        &a.star(&loc.from_poly(a.z(1, 2))).unwrap(),
        &a.star(&loc.from_poly(a.z(1, 1))).unwrap(),
    );
    assert!(loc.equal(&lhs, &rhs));
    assert!(loc.equal(&a.star(&lhs).unwrap(), &x));
}

#[test]
fn det_star_is_inverse_det() {
    let a = QMatAlgebra::new(2).unwrap();
    let loc = a.localization();
    let ds = a.star(&loc.d_pow(1)).unwrap();
    assert!(loc.equal(&ds, &loc.scale(&loc.d_pow(-1), &Scalar::q_pow(-2))));
}

#[test]
fn det_is_central() {
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                assert!(a.det_commutant_scalar(i, j).unwrap().is_one());
            }
        }
    }
}

#[test]
fn point_values() {
    let a = QMatAlgebra::new(3).unwrap();
    assert_eq!(a.point_eval_poly(a.det()), Scalar::q_pow(3));
    let loc = a.localization();
    let x = loc.mul(&loc.from_poly(a.z(1, 1)), &loc.d_pow(-1));
    assert_eq!(a.point_eval(&x).unwrap(), Scalar::q_pow(-1));
    assert!(a.point_eval_poly(&a.z(1, 2)).is_zero());
}
