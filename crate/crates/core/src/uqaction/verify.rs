use rayon::prelude::*;
use serde::Serialize;

use crate::freealg::{AlgebraElement, Presentation, Word};
use crate::scalars::{q_binomial, Scalar};

use super::engine::ActionEngine;
use super::{ActionError, Chevalley, UqSpec};

/// A defining relation not annihilated by an operator.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub relation: usize,
    pub operator: String,
    pub residual: String,
}

/// Check that `X(lhs - rhs) = 0` for every relation and every generator.
pub fn verify_module_algebra(engine: &ActionEngine, pres: &Presentation) -> Vec<Violation> {
    let ops = Chevalley::all(engine.rank());
    let jobs: Vec<(usize, Chevalley)> = (0..pres.relations().len())
        .flat_map(|r| ops.iter().map(move |&x| (r, x)))
        .collect();
    let mut out: Vec<Violation> = jobs
        .into_par_iter()
        .filter_map(|(r, x)| {
            match engine.act_raw(x, &pres.relations()[r].terms) {
                Ok(res) if res.is_zero() => None,
                Ok(res) => Some(Violation {
                    relation: r,
                    operator: x.to_string(),
                    residual: pres.render(&res),
                }),
                Err(e) => Some(Violation {
                    relation: r,
                    operator: x.to_string(),
                    residual: e.to_string(),
                }),
            }
        })
        .collect();
    out.sort_by(|a, b| (a.relation, &a.operator).cmp(&(b.relation, &b.operator)));
    out
}

/// An operator identity failing on a normal word.
#[derive(Clone, Debug, Serialize)]
pub struct OperatorViolation {
    pub identity: String,
    pub word: String,
    pub residual: String,
}

fn e_or_f(typ: char, k: usize) -> Chevalley {
    if typ == 'E' {
        Chevalley::E(k)
    } else {
        Chevalley::F(k)
    }
}

/// Commutator, K-conjugation and q-Serre relations as operator identities
/// on all normal words of degree at most `max_degree`.
pub fn verify_serre_and_commutator(engine: &ActionEngine, spec: &UqSpec, max_degree: usize) -> Vec<OperatorViolation> {
    let pres = engine.presentation();
    let r = spec.rank();
    assert_eq!(r, engine.rank(), "spec and table ranks differ");
    let words = pres.normal_words_up_to(max_degree);
    let mut out: Vec<OperatorViolation> = words
        .par_iter()
        .flat_map_iter(|w| check_word(engine, spec, w))
        .collect();
    out.sort_by(|a, b| (&a.identity, &a.word).cmp(&(&b.identity, &b.word)));
    out
}

fn check_word(engine: &ActionEngine, spec: &UqSpec, w: &Word) -> Vec<OperatorViolation> {
    let pres = engine.presentation();
    let f = pres.normal_form(w);
    let r = spec.rank();
    let mut bad = Vec::new();
    let mut report = |identity: String, res: Result<AlgebraElement, ActionError>| match res {
        Ok(x) if x.is_zero() => {}
        Ok(x) => bad.push(OperatorViolation {
            identity,
            word: pres.render_word(w),
            residual: pres.render(&x),
        }),
        Err(e) => bad.push(OperatorViolation {
            identity,
            word: pres.render_word(w),
            residual: e.to_string(),
        }),
    };
    for i in 1..=r {
        let qi = spec.d[i - 1];
        for j in 1..=r {
            // [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
            let res = (|| {
                let ef = engine.act_seq(&[Chevalley::E(i), Chevalley::F(j)], &f)?;
                let fe = engine.act_seq(&[Chevalley::F(j), Chevalley::E(i)], &f)?;
                let mut lhs = ef.sub(&fe);
                if i == j {
                    let kk = engine
                        .act(Chevalley::K(i), &f)?
                        .sub(&engine.act(Chevalley::KInv(i), &f)?);
                    let den = Scalar::q_minus_qinv(qi).inv().expect("q not a root of unity");
                    lhs = lhs.sub(&kk.scale(&den));
                }
                Ok(lhs)
            })();
            report(format!("[E{i},F{j}]"), res);
            // K_i X_j K_i^-1 = q_i^(+-a_ij) X_j
            let a = spec.cartan[i - 1][j - 1];
            for (typ, sign) in [('E', 1), ('F', -1)] {
                let x = e_or_f(typ, j);
                let res = (|| {
                    let l = engine.act_seq(&[Chevalley::K(i), x, Chevalley::KInv(i)], &f)?;
                    let rr = engine.act(x, &f)?.scale(&Scalar::q_pow(sign * qi * a));
                    Ok(l.sub(&rr))
                })();
                report(format!("K{i} {typ}{j} K{i}^-1"), res);
            }
            if i != j {
                let m = (1 - a) as usize;
                for typ in ['E', 'F'] {
                    let res = (|| {
                        let mut tot = pres.zero();
                        for s in 0..=m {
                            let mut ops = vec![e_or_f(typ, i); m - s];
                            ops.push(e_or_f(typ, j));
                            ops.extend(std::iter::repeat(e_or_f(typ, i)).take(s));
                            let c = q_binomial(m as i64, s as i64, qi).expect("in range");
                            let c = if s % 2 == 1 { c.neg() } else { c };
                            tot = tot.add(&engine.act_seq(&ops, &f)?.scale(&c));
                        }
                        Ok(tot)
                    })();
                    report(format!("Serre {typ}{i},{typ}{j}"), res);
                }
            }
        }
    }
    bad
}

/// `K_j` eigenvalues, `j = 1..rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub eigen: Vec<Scalar>,
}

/// Common `K`-eigenvalues of all terms of `f`.
pub fn weight_of(engine: &ActionEngine, f: &AlgebraElement) -> Result<WeightVector, ActionError> {
    let mut words = f.terms().keys();
    let first = words.next().ok_or(ActionError::ZeroVector)?;
    let wt = |w: &Word| -> Vec<Scalar> {
        (1..=engine.rank())
            .map(|k| engine.k_eigen_word(Chevalley::K(k), w))
            .collect()
    };
    let w0 = wt(first);
    let mut mixed = Vec::new();
    for w in words {
        let wi = wt(w);
        if wi != w0 {
            mixed.push(format!("{:?}", wi));
        }
    }
    if mixed.is_empty() {
        Ok(WeightVector { eigen: w0 })
    } else {
        mixed.insert(0, format!("{:?}", w0));
        Err(ActionError::MixedWeights(mixed.join(" vs ")))
    }
}
