use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::scalars::Scalar;
use crate::uqaction::Chevalley;

use super::action::{KVector, PrincipalSeries, RepParams};
use super::SeriesError;

fn one_minus(x: Scalar) -> Scalar {
    Scalar::one().sub(&x)
}

/// `1 - q^(2(a + m))` with `a` given by `u`; `sign = -1` uses `-b` via `v`.
fn factor(param: &Scalar, sign: i32, m: i64) -> Scalar {
    let p = param.pow(2 * sign).expect("monomial");
    one_minus(p.mul(&Scalar::q_pow(2 * m as i32)))
}

/// Eigenvalue `a_k(a, b)` of the intertwiner onto `pi_{-n-b,-n-a}`.
pub fn intertwiner_coeff(k: &KVector, n: usize) -> Scalar {
    let u = Scalar::u();
    let v = Scalar::v();
    let n = n as i64;
    let mut out = Scalar::one();
    for (j0, &kj) in k.0.iter().enumerate() {
        let j = j0 as i64 + 1;
        if kj > 0 {
            for i in 0..kj {
                let num = factor(&u, 1, n + i - j + 1);
                let den = factor(&v, -1, i - j + 1);
                out = out.mul(&num).div(&den).expect("nonzero factor");
            }
        } else if kj < 0 {
            for i in (1 + kj)..=0 {
                let num = factor(&v, -1, i - j);
                let den = factor(&u, 1, n + i - j);
                out = out.mul(&num).div(&den).expect("nonzero factor");
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntertwinerViolation {
    pub k: KVector,
    pub generator: String,
    pub component: KVector,
    pub residual: String,
}

/// Check `A pi_{a,b}(x) v^h_k = pi_{-n-b,-n-a}(x) A v^h_k` componentwise,
/// with `A = a_m` on `V_m`.
pub fn verify_intertwiner(
    series: &PrincipalSeries,
    ks: &[KVector],
    generators: &[Chevalley],
) -> Result<Vec<IntertwinerViolation>, SeriesError> {
    let n = series.n();
    let sym = RepParams::symbolic();
    let partner = RepParams::partner(n);
    let jobs: Vec<(KVector, Chevalley)> = ks
        .iter()
        .flat_map(|k| generators.iter().map(move |&x| (k.clone(), x)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|(k, x)| -> Result<Vec<IntertwinerViolation>, SeriesError> {
            let v = series.highest_vector(k)?;
            let left = series.isotypic_decompose(&series.pi_act(*x, &v, &sym)?)?;
            let right = series.isotypic_decompose(&series.pi_act(*x, &v, &partner)?)?;
            let ak = intertwiner_coeff(k, n);
            let mut diff: BTreeMap<KVector, _> = BTreeMap::new();
            for (m, c) in left {
                let am = intertwiner_coeff(&m, n);
                diff.insert(m, series.scale(&c, &am));
            }
            for (m, c) in right {
                let c = series.scale(&c, &ak);
                let d = match diff.remove(&m) {
                    Some(l) => series.sub(&l, &c),
                    None => series.scale(&c, &Scalar::from_int(-1)),
                };
                diff.insert(m, d);
            }
            Ok(diff
                .into_iter()
                .filter(|(_, d)| !series.is_zero(d))
                .map(|(m, d)| IntertwinerViolation {
                    k: k.clone(),
                    generator: x.to_string(),
                    component: m,
                    residual: series.presentation().render(&d.poly),
                })
                .collect())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(results.into_iter().flatten().collect())
}
