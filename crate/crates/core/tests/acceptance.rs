//! Acceptance criteria 1 to 10, one line each.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use itertools::Itertools;
use qshilov_core::freealg::{confluence_check, graded_dimension, AlgebraElement, Presentation};
use qshilov_core::prinseries::{
    canonicalize, central_scalar, central_scalar_at, classify, intertwiner_coeff, partner_exponents,
    submodule_invariance_check, verify_intertwiner, window, CaseLabel, CaseReport, KVector, ParamPair,
    PrincipalSeries, RepParams, Unitarity,
};
use qshilov_core::qmatrix::QMatAlgebra;
use qshilov_core::qsymmatrix::QSymMatAlgebra;
use qshilov_core::scalars::numeric::close;
use qshilov_core::scalars::{specialize, ExactParam, NumericParams, Scalar};
use qshilov_core::uqaction::{verify_module_algebra, verify_serre_and_commutator, verify_star, ActionEngine, Chevalley, UqSpec};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

enum Alg {
    A(String, QMatAlgebra),
    C(String, QSymMatAlgebra),
}

impl Alg {
    fn name(&self) -> &str {
        match self { Alg::A(n, _) | Alg::C(n, _) => n }
    }
    fn parts(&self) -> (&Presentation, &ActionEngine, &UqSpec) {
        match self {
            Alg::A(_, a) => (a.presentation(), a.engine(), a.spec()),
            Alg::C(_, c) => (c.presentation(), c.engine(), c.spec()),
        }
    }
}

fn algebras(ns: &[usize]) -> Vec<Alg> {
    let mut out = Vec::new();
    for &n in ns {
        out.push(Alg::A(format!("A{n}"), QMatAlgebra::new(n).unwrap()));
        out.push(Alg::C(format!("C{n}"), QSymMatAlgebra::new(n).unwrap()));
    }
    out
}

fn criterion_1() -> Outcome {
    let mut checks = 0;
    for a in algebras(&[2, 3]) {
        let (pres, engine, _) = a.parts();
        let bad = verify_module_algebra(engine, pres);
        ensure(bad.is_empty(), || format!("{}: {} violations, first {:?}", a.name(), bad.len(), bad.first()))?;
        checks += pres.relations().len() * 4 * engine.rank();
    }
    Ok(format!("{checks} relation x operator checks"))
}

fn criterion_2() -> Outcome {
    for a in algebras(&[2]) {
        let (_, engine, spec) = a.parts();
        let bad = verify_serre_and_commutator(engine, spec, 2);
        ensure(bad.is_empty(), || format!("{}: {:?}", a.name(), bad.first()))?;
    }
    // By hand: [E2, F2] z22 = (K2 - K2^-1)/(q - q^-1) z22 = (q + q^-1) z22.
    let a = QMatAlgebra::new(2).unwrap();
    let e = a.engine();
    let z = a.z(2, 2);
    let c = e
        .act_seq(&[Chevalley::E(2), Chevalley::F(2)], &z)
        .unwrap()
        .sub(&e.act_seq(&[Chevalley::F(2), Chevalley::E(2)], &z).unwrap());
    ensure(c == z.scale(&Scalar::q_pow(1).add(&Scalar::q_pow(-1))), || "[E2,F2] z22".into())?;
    Ok("A2, C2 on all normal words of degree <= 2".into())
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_3() -> Outcome {
    for a in algebras(&[1, 2, 3]) {
        let (pres, _, _) = a.parts();
        let o = confluence_check(pres, 3);
        ensure(o.is_empty(), || format!("{}: {} overlaps fail", a.name(), o.len()))?;
        let g = pres.num_generators() as u128;
        for d in 0..=4u128 {
            let got = graded_dimension(pres, d as usize) as u128;
            ensure(got == binom(g + d - 1, d), || format!("{} d={d}: {got}", a.name()))?;
        }
    }
    let a2 = graded_dimension(QMatAlgebra::new(2).unwrap().presentation(), 2);
    let c2 = graded_dimension(QSymMatAlgebra::new(2).unwrap().presentation(), 2);
    ensure(a2 == 10 && c2 == 6, || format!("quoted dimensions {a2}, {c2}"))?;
    Ok("confluent at degree 3; dimensions agree for d <= 4".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let c = QSymMatAlgebra::new(n).unwrap();
        let p = a.presentation();
        for i in 1..=n {
            for j in 1..=n {
                let s = a.det_commutant_scalar(i, j).map_err(|e| e.to_string())?;
                ensure(s.is_one(), || format!("A{n} z[{i}][{j}]: {s}"))?;
                // Oracle: det z = z det directly.
                ensure(p.commutator(a.det(), &a.z(i, j)).unwrap().is_zero(), || format!("A{n} commutator"))?;
            }
        }
        for i in 1..=n {
            for j in 1..=i {
                c.sym_det_commutant_scalar(i, j).map_err(|e| format!("C{n} z[{i}][{j}]: {e}"))?;
            }
        }
    }
    Ok("det central in A1..A3; scalars exist in C1..C3".into())
}

fn minus_q(k: i32) -> Scalar {
    let c = Scalar::q_pow(k);
    if k.rem_euclid(2) == 1 {
        c.neg()
    } else {
        c
    }
}

fn minor_oracle(a: &QMatAlgebra, rows: &[usize], cols: &[usize]) -> AlgebraElement {
    let p = a.presentation();
    let mut out = p.zero();
    for perm in (0..cols.len()).permutations(cols.len()) {
        let inv = perm.iter().tuple_combinations().filter(|(x, y)| x > y).count() as i32;
        let mut t = p.scalar(minus_q(inv));
        for (r, &s) in rows.iter().zip(&perm) {
            t = p.mul(&t, &a.z(*r, cols[s])).unwrap();
        }
        out = out.add(&t);
    }
    out
}

fn criterion_5() -> Outcome {
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let st = a.explicit_star().map_err(|e| e.to_string())?;
        let cs = verify_star(a.engine(), a.localization(), a.spec(), &st).map_err(|e| e.to_string())?;
        ensure(cs.iter().all(|c| c.ok), || format!("A{n} star check fails"))?;
    }
    let n = 2;
    let a = QMatAlgebra::new(n).unwrap();
    let loc = a.localization();
    let derived = a.derived_star().map_err(|e| e.to_string())?;
    for i in 1..=n {
        for j in 1..=n {
            let rows: Vec<usize> = (1..=n).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
            let m = minor_oracle(&a, &rows, &cols).scale(&minus_q((i + j) as i32 - 2 * n as i32));
            let want = loc.mul(&loc.from_poly(m), &loc.d_pow(-1));
            ensure(loc.equal(derived.image(a.gen(i, j)), &want), || format!("transported z[{i}][{j}]*"))?;
        }
    }
    let mut mismatches = Vec::new();
    for n in 1..=3 {
        let a = QMatAlgebra::new(n).unwrap();
        let c = QSymMatAlgebra::new(n).unwrap();
        for r in a.presentation().relations() {
            let v = r.terms.iter().fold(Scalar::zero(), |acc, (w, k)| acc.add(&w.iter().fold(k.clone(), |t, &g| t.mul(&a.point_value(g)))));
            ensure(v.is_zero(), || format!("A{n} relation at the point"))?;
        }
        for r in c.presentation().relations() {
            let v = r.terms.iter().fold(Scalar::zero(), |acc, (w, k)| acc.add(&w.iter().fold(k.clone(), |t, &g| t.mul(&c.point_value(g)))));
            ensure(v.is_zero(), || format!("C{n} relation at the point"))?;
        }
        let pt = NumericParams::with_q(0.5);
        let sa = a.explicit_star().unwrap();
        let sc = c.derived_star().unwrap();
        type Eval<'a> = Box<dyn Fn(u16) -> (Scalar, Scalar) + 'a>;
        let cases: [(String, usize, Eval); 2] = [
            (format!("A{n}"), n * n, Box::new(|g| {
                let x = a.localization().from_poly(a.presentation().gen(g));
                (a.point_eval(&sa.star(a.localization(), &x).unwrap()).unwrap(), a.point_eval(&x).unwrap())
            })),
            (format!("C{n}"), n * (n + 1) / 2, Box::new(|g| {
                let x = c.localization().from_poly(c.presentation().gen(g));
                (c.point_eval(&sc.star(c.localization(), &x).unwrap()).unwrap(), c.point_eval(&x).unwrap())
            })),
        ];
        for (name, count, f) in &cases {
            for g in 0..*count as u16 {
                let (lhs, rhs) = f(g);
                let l = specialize(&lhs, &pt).unwrap();
                let r = specialize(&rhs, &pt).unwrap().conj();
                if !close(l, r, 1e-12) {
                    mismatches.push(format!("{name} gen {g}: p(x*) = {lhs}, conj p(x) = {rhs}"));
                }
            }
        }
    }
    ensure(mismatches.is_empty(), || {
        format!(
            "star, transport and relations pass; point is not *-compatible ({} generators), e.g. {}",
            mismatches.len(),
            mismatches[0]
        )
    })?;
    Ok("star suite and *-character".into())
}

fn criterion_6() -> Outcome {
    let sym = RepParams::symbolic();
    let mut count = 0;
    for n in [2, 3] {
        let s = PrincipalSeries::new(n).unwrap();
        for k in window(n, 2) {
            let v = s.highest_vector(&k).map_err(|e| e.to_string())?;
            for j in (1..2 * n).filter(|&j| j != n) {
                let x = s.pi_act(Chevalley::E(j), &v, &sym).map_err(|e| e.to_string())?;
                ensure(s.is_zero(&x), || format!("E{j} v{k} != 0"))?;
            }
            let got = s.weight_of(&v, &sym).map_err(|e| e.to_string())?.ok_or("not a weight vector")?;
            // (k1-k2, ..., 2k_n + a - b, ..., k1-k2) as K-eigenvalues
            let mut want: Vec<Scalar> = (0..n - 1).map(|i| Scalar::q_pow((k.0[i] - k.0[i + 1]) as i32)).collect();
            let mirror: Vec<Scalar> = want.iter().rev().cloned().collect();
            want.push(Scalar::q_pow(2 * k.0[n - 1] as i32).mul(&Scalar::u()).div(&Scalar::v()).unwrap());
            want.extend(mirror);
            ensure(got == want, || format!("weight of v{k}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} highest vectors"))
}

fn criterion_7() -> Outcome {
    for (n, w) in [(1, 2), (2, 1)] {
        let s = PrincipalSeries::new(n).unwrap();
        let gens = [Chevalley::E(n), Chevalley::F(n), Chevalley::K(n)];
        let bad = verify_intertwiner(&s, &window(n, w), &gens).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("n={n}: {:?}", bad.first()))?;
        ensure(intertwiner_coeff(&KVector::zero(n), n).is_one(), || "a_0 != 1".into())?;
    }
    // Spot value, n = 1: a_1 = (1 - q^(2(a+1)))/(1 - q^(-2b)).
    let want = Scalar::one()
        .sub(&Scalar::q_pow(2).mul(&Scalar::u().pow(2).unwrap()))
        .div(&Scalar::one().sub(&Scalar::v().pow(-2).unwrap()))
        .unwrap();
    ensure(intertwiner_coeff(&KVector(vec![1]), 1) == want, || "a_1 for n = 1".into())?;
    Ok("n=1 |k|<=2 and n=2 |k_i|<=1".into())
}

fn lattice(pred: impl Fn(i64, i64) -> bool) -> BTreeSet<(i64, i64)> {
    window(2, 6).into_iter().map(|k| (k.0[0], k.0[1])).filter(|&(a, b)| pred(a, b)).collect()
}

fn pieces(r: &CaseReport) -> BTreeSet<BTreeSet<(i64, i64)>> {
    r.submodules
        .iter()
        .map(|m| lattice(|a, b| m.contains(&KVector(vec![a, b]))))
        .collect()
}

fn criterion_8() -> Outcome {
    for (a0, b0) in [(0, 0), (3, -2), (2, 1), (0, -1), (4, -5), (0, -2), (-3, 1), (0, -3), (-2, -4), (5, -12)] {
        let r = classify(&ParamPair::ints(a0, b0), 2).map_err(|e| e.to_string())?;
        let (a, b) = r.canonical_params.as_ints().ok_or("canonical point not integral")?;
        ensure(a + b == a0 + b0, || "shift changed a + b".into())?;
        let sum = a + b;
        // Predicates as printed for n = 2, per regime of a + b.
        let (label, want, cr, unit): (CaseLabel, Vec<BTreeSet<(i64, i64)>>, Option<bool>, usize) = if sum >= 0 {
            (CaseLabel::Case1, vec![lattice(|k1, k2| k1 <= b && k2 >= -a)], None, 0)
        } else if sum == -1 {
            (CaseLabel::Case2, vec![lattice(|k1, _| k1 == -1 - a), lattice(|_, k2| k2 == -a)], None, 2)
        } else {
            let three = vec![
                lattice(|k1, _| k1 <= b),
                lattice(|_, k2| k2 >= -a),
                lattice(|k1, k2| k1 >= -a - 1 && k2 <= b + 1),
            ];
            if sum == -2 {
                (CaseLabel::Case3, three, Some(true), 3)
            } else {
                (CaseLabel::Case4, three, Some(false), 3)
            }
        };
        ensure(r.case_label == label, || format!("({a0},{b0}): {:?}", r.case_label))?;
        ensure(pieces(&r) == want.into_iter().collect(), || format!("({a0},{b0}): submodules {:?}", r.submodules))?;
        ensure(r.completely_reducible == cr, || format!("({a0},{b0}): direct sum flag"))?;
        ensure(r.unitarizable.len() == unit && !r.irreducible, || format!("({a0},{b0}): unitarizable {:?}", r.unitarizable))?;
        if label == CaseLabel::Case3 {
            // The three pieces partition the cone.
            let total: usize = pieces(&r).iter().map(|s| s.len()).sum();
            ensure(total == lattice(|_, _| true).len(), || "Case 3 pieces overlap".into())?;
        }
    }
    let pp = |a: &str, b: &str| ParamPair::new(a.parse().unwrap(), b.parse().unwrap());
    let table = [
        ("1/2", "-1/2", Unitarity::None),
        ("1/3", "-2/3", Unitarity::None),
        ("-1/2+1/3*pi/h*i", "-3/2+1/3*pi/h*i", Unitarity::Principal),
        ("-1+1/2*pi/h*i", "-1+1/2*pi/h*i", Unitarity::Principal),
        ("-3/4", "-7/4", Unitarity::Complementary),
        ("-1/2", "-1/2", Unitarity::None),
        ("1/2+pi/h*i", "-1/2+pi/h*i", Unitarity::Strange),
    ];
    for (x, y, u) in table {
        let r = classify(&pp(x, y), 2).map_err(|e| e.to_string())?;
        ensure(r.irreducible && r.case_label == CaseLabel::Nonintegral, || format!("({x}, {y}) not irreducible"))?;
        ensure(r.unitarity == u, || format!("({x}, {y}): {:?} != {u:?}", r.unitarity))?;
    }
    ensure(classify(&pp("1/2", "0"), 2).is_err(), || "non-HC parameters accepted".into())?;
    Ok("four regimes, nonintegral irreducibility, unitarity verdicts".into())
}

fn criterion_9() -> Outcome {
    let s = PrincipalSeries::new(2).unwrap();
    let r = classify(&ParamPair::ints(0, 0), 2).map_err(|e| e.to_string())?;
    let bad = submodule_invariance_check(&s, 0, 0, &r.submodules, 2).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), || format!("{:?}", bad.first()))?;
    let p = RepParams::integral(0, 0);
    let v = s.highest_vector(&KVector::zero(2)).unwrap();
    for x in [Chevalley::E(2), Chevalley::F(2)] {
        let w = s.pi_act(x, &v, &p).map_err(|e| e.to_string())?;
        ensure(s.is_zero(&w), || format!("{x} v(0,0) != 0 at u = v = 1"))?;
    }
    let s1 = PrincipalSeries::new(1).unwrap();
    let mut walls = 0;
    for a in -2..=2 {
        for b in -2..=2 {
            let p = RepParams::integral(a, b);
            for k in -3..=3 {
                let v = s1.highest_vector(&KVector(vec![k])).unwrap();
                for (x, target, wall) in [(Chevalley::E(1), k + 1, k == b), (Chevalley::F(1), k - 1, k == -a)] {
                    let w = s1.pi_act(x, &v, &p).map_err(|e| e.to_string())?;
                    let parts = s1.isotypic_decompose(&w).map_err(|e| e.to_string())?;
                    let hit = parts.iter().any(|(m, _)| m.0[0] == target);
                    ensure(hit != wall, || format!("n=1 (a,b)=({a},{b}) k={k} {x}: component present = {hit}"))?;
                    walls += usize::from(wall);
                }
            }
        }
    }
    Ok(format!("(0,0) region invariant; {walls} wall crossings vanish exactly"))
}

fn criterion_10() -> Outcome {
    let mut seen = 0;
    for n in 1..=3usize {
        let c = central_scalar(n);
        ensure(c.map_exponents(&partner_exponents(n)).unwrap() == c, || format!("n={n} symbolic"))?;
        for x in -6..=6 {
            for d in [1, 2, 3] {
                for shift in -3..=3 {
                    for y in [0, 1, 3] {
                        let a: ExactParam = format!("{x}/{d}+{y}*pi/h*i").parse().unwrap();
                        let b = ExactParam { re: a.re.clone() - num_rational::BigRational::from_integer(shift.into()), im: a.im.clone() };
                        let p = ParamPair::new(a.clone(), b.clone());
                        let c1 = canonicalize(&p, n).map_err(|e| e.to_string())?;
                        let c2 = canonicalize(&c1.params, n).map_err(|e| e.to_string())?;
                        ensure(c1 == c2, || format!("not idempotent at {p}"))?;
                        // y + 4 on both is the same module; central scalars agree.
                        let lifted = ParamPair::new(a.add(&ExactParam::from_ints(0, 4)), b.add(&ExactParam::from_ints(0, 4)));
                        ensure(canonicalize(&lifted, n).unwrap() == c1, || format!("period 4 at {p}"))?;
                        let z = central_scalar_at(&p, n, 0.3).unwrap();
                        ensure(close(z, central_scalar_at(&c1.params, n, 0.3).unwrap(), 1e-9), || format!("central scalar moved at {p}"))?;
                        if let Some(q) = &c1.partner {
                            ensure(close(z, central_scalar_at(q, n, 0.3).unwrap(), 1e-9), || format!("partner of {p}"))?;
                        }
                        // Unequal imaginary parts modulo 4 are rejected.
                        let skew = ParamPair::new(a.add(&ExactParam::from_ints(0, 2)), b.clone());
                        ensure(canonicalize(&skew, n).is_err(), || format!("y mismatch accepted at {p}"))?;
                        seen += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{seen} parameter points"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "module-algebra verification", criterion_1),
        (2, "Hopf-operator identities", criterion_2),
        (3, "rewriting soundness", criterion_3),
        (4, "localization model", criterion_4),
        (5, "involution suite", criterion_5),
        (6, "isotypic structure", criterion_6),
        (7, "intertwiner identity", criterion_7),
        (8, "classifier golden table", criterion_8),
        (9, "submodule invariance", criterion_9),
        (10, "equivalence layer", criterion_10),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (id, name, f) in criteria {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(d) => println!("criterion {id:>2} PASS  {name}: {d} ({secs:.2}s)"),
            Err(d) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {d} ({secs:.2}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
