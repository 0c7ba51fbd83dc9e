//! Quantum `n x n` matrices `z_a^b`, their minors, the localization at the
//! quantum determinant, the involution and the point evaluation.

mod table;

use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::freealg::{AlgError, AlgebraElement, Gen, LocalElement, Localization, Presentation, Relation};
use crate::scalars::Scalar;
use crate::uqaction::{derive_star, ActionEngine, ActionError, StarStructure, UqSpec};

pub use table::action_table;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum MatrixError {
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{rows} rows but {cols} columns")]
    CardinalityMismatch { rows: usize, cols: usize },
    #[error("indices must be strictly increasing")]
    NotIncreasing,
    #[error("no scalar relation between the determinant and {generator}; residual {residual}")]
    NotQuasiCommuting { generator: String, residual: String },
    #[error("point evaluation of the denominator vanishes")]
    PointPole,
    #[error(transparent)]
    Algebra(#[from] AlgError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Number of inversions of a permutation.
pub(crate) fn inversions(p: &[usize]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

/// `(-q)^k`.
pub(crate) fn minus_q_pow(k: i32) -> Scalar {
    let c = Scalar::q_pow(k);
    if k.rem_euclid(2) == 1 {
        c.neg()
    } else {
        c
    }
}

/// Sigma with `d x = sigma x d`, or an error carrying the residual.
pub(crate) fn commutant_scalar(
    pres: &Presentation,
    d: &AlgebraElement,
    g: Gen,
) -> Result<Scalar, MatrixError> {
    let x = pres.gen(g);
    let left = pres.mul(d, &x)?;
    let right = pres.mul(&x, d)?;
    let fail = |res: &AlgebraElement| MatrixError::NotQuasiCommuting {
        generator: pres.label(g).to_string(),
        residual: pres.render(res),
    };
    let (w, c) = right.terms().iter().next().ok_or_else(|| fail(&left))?;
    let sigma = left.coeff(w).div(c).expect("nonzero coefficient");
    let res = left.sub(&right.scale(&sigma));
    if res.is_zero() {
        Ok(sigma)
    } else {
        Err(fail(&res))
    }
}

/// Multiplicative extension of generator values to a localized element.
pub(crate) fn evaluate_character(
    loc: &Localization,
    value: &dyn Fn(Gen) -> Scalar,
    f: &LocalElement,
) -> Result<Scalar, MatrixError> {
    let eval = |x: &AlgebraElement| {
        x.terms().iter().fold(Scalar::zero(), |acc, (w, c)| {
            acc.add(&w.iter().fold(c.clone(), |p, &g| p.mul(&value(g))))
        })
    };
    let num = eval(&f.num);
    if f.m == 0 {
        return Ok(num);
    }
    let pd = eval(loc.denominator());
    let inv = pd.pow(-(f.m as i32)).map_err(|_| MatrixError::PointPole)?;
    Ok(num.mul(&inv))
}

/// `C[Mat_n]_q` together with its localization, action and involutions.
#[derive(Debug)]
pub struct QMatAlgebra {
    n: usize,
    pres: Arc<Presentation>,
    det: AlgebraElement,
    loc: Localization,
    engine: ActionEngine,
    spec: UqSpec,
}

impl QMatAlgebra {
    pub fn new(n: usize) -> Result<Self, MatrixError> {
        assert!(n >= 1, "matrix size must be positive");
        let pres = Arc::new(presentation(n)?);
        let det = minor_in(&pres, n, &(1..=n).collect_vec(), &(1..=n).collect_vec())?;
        let loc = Localization::new(pres.clone(), det.clone())?;
        let table = action_table(&pres, n)?;
        let engine = ActionEngine::new(pres.clone(), table);
        Ok(Self {
            n,
            pres,
            det,
            loc,
            engine,
            spec: UqSpec::type_a(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn localization(&self) -> &Localization {
        &self.loc
    }

    pub fn engine(&self) -> &ActionEngine {
        &self.engine
    }

    pub fn spec(&self) -> &UqSpec {
        &self.spec
    }

    /// Generator `z_a^b`.
    pub fn gen(&self, a: usize, b: usize) -> Gen {
        gen_index(self.n, a, b)
    }

    pub fn z(&self, a: usize, b: usize) -> AlgebraElement {
        self.pres.gen(self.gen(a, b))
    }

    /// `(a, b)` for a generator.
    pub fn indices(&self, g: Gen) -> (usize, usize) {
        let g = g as usize;
        (g / self.n + 1, g % self.n + 1)
    }

    pub fn q_minor(&self, rows: &[usize], cols: &[usize]) -> Result<AlgebraElement, MatrixError> {
        minor_in(&self.pres, self.n, rows, cols)
    }

    pub fn det(&self) -> &AlgebraElement {
        &self.det
    }

    /// The minor with row `a` and column `b` removed.
    pub fn complementary_minor(&self, a: usize, b: usize) -> Result<AlgebraElement, MatrixError> {
        let rows = (1..=self.n).filter(|&i| i != a).collect_vec();
        let cols = (1..=self.n).filter(|&j| j != b).collect_vec();
        self.q_minor(&rows, &cols)
    }

    pub fn det_commutant_scalar(&self, a: usize, b: usize) -> Result<Scalar, MatrixError> {
        check_index(a, self.n)?;
        check_index(b, self.n)?;
        commutant_scalar(&self.pres, &self.det, self.gen(a, b))
    }

    /// `(z_a^b)^* = (-q)^(a+b-2n) det^-1 M_ab`.
    pub fn star_image(&self, a: usize, b: usize) -> Result<LocalElement, MatrixError> {
        let m = self.complementary_minor(a, b)?;
        let c = minus_q_pow((a + b) as i32 - 2 * self.n as i32);
        Ok(self.loc.canonical(LocalElement { num: m.scale(&c), m: 1 }))
    }

    pub fn explicit_star(&self) -> Result<StarStructure, MatrixError> {
        let images = (0..self.pres.num_generators() as Gen)
            .map(|g| {
                let (a, b) = self.indices(g);
                self.star_image(a, b)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StarStructure::new(&self.loc, images)?)
    }

    /// Star transported from `z_n^n` through the action.
    pub fn derived_star(&self) -> Result<StarStructure, MatrixError> {
        let seed = self.star_image(self.n, self.n)?;
        Ok(derive_star(
            &self.engine,
            &self.loc,
            &self.spec,
            &[(self.gen(self.n, self.n), seed)],
        )?)
    }

    pub fn star(&self, f: &LocalElement) -> Result<LocalElement, MatrixError> {
        Ok(self.explicit_star()?.star(&self.loc, f)?)
    }

    /// `p(z_a^b) = q^(n-a)` on the diagonal, zero elsewhere.
    pub fn point_value(&self, g: Gen) -> Scalar {
        let (a, b) = self.indices(g);
        if a == b {
            Scalar::q_pow((self.n - a) as i32)
        } else {
            Scalar::zero()
        }
    }

    pub fn point_eval(&self, f: &LocalElement) -> Result<Scalar, MatrixError> {
        evaluate_character(&self.loc, &|g| self.point_value(g), f)
    }

    pub fn point_eval_poly(&self, f: &AlgebraElement) -> Scalar {
        self.point_eval(&self.loc.from_poly(f.clone()))
            .expect("no denominator")
    }
}

fn gen_index(n: usize, a: usize, b: usize) -> Gen {
    assert!((1..=n).contains(&a) && (1..=n).contains(&b), "index out of range");
    ((a - 1) * n + (b - 1)) as Gen
}

fn check_index(i: usize, n: usize) -> Result<(), MatrixError> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(MatrixError::IndexOutOfRange { index: i, n })
    }
}

fn check_set(s: &[usize], n: usize) -> Result<(), MatrixError> {
    for &i in s {
        check_index(i, n)?;
    }
    if s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(MatrixError::NotIncreasing);
    }
    Ok(())
}

/// `sum_s (-q)^l(s) z_{a_1}^{b_s(1)} ... z_{a_k}^{b_s(k)}`.
fn minor_in(pres: &Presentation, n: usize, rows: &[usize], cols: &[usize]) -> Result<AlgebraElement, MatrixError> {
    if rows.len() != cols.len() {
        return Err(MatrixError::CardinalityMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_set(rows, n)?;
    check_set(cols, n)?;
    let k = rows.len();
    let mut out = pres.zero();
    for perm in (0..k).permutations(k) {
        let w: Vec<Gen> = (0..k).map(|i| gen_index(n, rows[i], cols[perm[i]])).collect();
        let c = minus_q_pow(inversions(&perm) as i32);
        out = out.add(&pres.normal_form(&w).scale(&c));
    }
    Ok(out)
}

/// Generators `z[a][b]` in row-major order, graded by `(e_a, e_b)`.
pub fn presentation(n: usize) -> Result<Presentation, AlgError> {
    let g = |a: usize, b: usize| gen_index(n, a, b);
    let mut labels = Vec::new();
    let mut grading = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            labels.push(format!("z[{a}][{b}]"));
            let mut gr = vec![0; 2 * n];
            gr[a - 1] = 1;
            gr[n + b - 1] = 1;
            grading.push(gr);
        }
    }
    let one = Scalar::one();
    let mq = Scalar::q_pow(1).neg();
    let mut rels = Vec::new();
    let r = 1..=n;
    for a in r.clone() {
        for (b1, b2) in r.clone().tuple_combinations() {
            rels.push(Relation {
                terms: vec![(vec![g(a, b1), g(a, b2)], one.clone()), (vec![g(a, b2), g(a, b1)], mq.clone())],
            });
        }
    }
    for b in r.clone() {
        for (a1, a2) in r.clone().tuple_combinations() {
            rels.push(Relation {
                terms: vec![(vec![g(a1, b), g(a2, b)], one.clone()), (vec![g(a2, b), g(a1, b)], mq.clone())],
            });
        }
    }
    for (b1, b2) in r.clone().tuple_combinations() {
        for (a1, a2) in r.clone().tuple_combinations() {
            rels.push(Relation {
                terms: vec![
                    (vec![g(a2, b1), g(a1, b2)], one.clone()),
                    (vec![g(a1, b2), g(a2, b1)], one.neg()),
                ],
            });
            rels.push(Relation {
                terms: vec![
                    (vec![g(a1, b1), g(a2, b2)], one.clone()),
                    (vec![g(a2, b2), g(a1, b1)], one.neg()),
                    (vec![g(a1, b2), g(a2, b1)], Scalar::q_minus_qinv(1).neg()),
                ],
            });
        }
    }
    Presentation::from_relations(labels, grading, rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_helpers() {
        assert_eq!(inversions(&[1, 2, 3]), 0);
        assert_eq!(inversions(&[3, 2, 1]), 3);
        assert_eq!(inversions(&[2, 3, 1]), 2);
        assert_eq!(minus_q_pow(3), Scalar::q_pow(3).neg());
        assert_eq!(minus_q_pow(-2), Scalar::q_pow(-2));
    }

    #[test]
    fn index_round_trip() {
        let a = QMatAlgebra::new(3).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(a.indices(a.gen(i, j)), (i, j));
            }
        }
    }

    #[test]
    fn one_by_one() {
        let a = QMatAlgebra::new(1).unwrap();
        assert!(a.presentation().relations().is_empty());
        assert_eq!(a.det(), &a.z(1, 1));
        let zs = a.star(&a.localization().from_poly(a.z(1, 1))).unwrap();
        assert!(a.localization().equal(&zs, &a.localization().d_pow(-1)));
        assert_eq!(a.point_value(a.gen(1, 1)), Scalar::one());
    }

    #[test]
    fn relation_count() {
        for n in 1..=3 {
            let m = n * n;
            let a = QMatAlgebra::new(n).unwrap();
            assert_eq!(a.presentation().relations().len(), m * (m - 1) / 2);
        }
    }

    #[test]
    fn minor_index_checks() {
        let a = QMatAlgebra::new(2).unwrap();
        assert!(matches!(a.q_minor(&[1, 3], &[1, 2]), Err(MatrixError::IndexOutOfRange { .. })));
        assert!(matches!(a.q_minor(&[2, 1], &[1, 2]), Err(MatrixError::NotIncreasing)));
        assert!(matches!(a.q_minor(&[1], &[1, 2]), Err(MatrixError::CardinalityMismatch { .. })));
    }
}
