//! Quantum symmetric matrices `z_ij`, `j <= i`, the symmetric quantum
//! determinant and the involution grown from `z_nn`.

mod table;

use std::sync::Arc;

use itertools::Itertools;

use crate::freealg::{AlgebraElement, Gen, LocalElement, Localization, Presentation, Relation, Word};
use crate::qmatrix::{commutant_scalar, evaluate_character, inversions, MatrixError};
use crate::scalars::Scalar;
use crate::uqaction::{derive_star, ActionEngine, StarStructure, UqSpec};

pub use table::action_table;

/// Index of the stored generator `z_ij`, `j <= i`.
fn gen_index(i: usize, j: usize) -> Gen {
    assert!(j >= 1 && j <= i, "only lower-triangular entries are stored");
    ((i - 1) * i / 2 + (j - 1)) as Gen
}

fn indices(g: Gen) -> (usize, usize) {
    let g = g as usize;
    let mut i = 1;
    while i * (i + 1) / 2 <= g {
        i += 1;
    }
    (i, g - (i - 1) * i / 2 + 1)
}

/// `z_ij` as a stored letter and coefficient, using `z_kl = q^-2 z_lk` above
/// the diagonal.
fn mirrored(i: usize, j: usize) -> (Gen, Scalar) {
    if i >= j {
        (gen_index(i, j), Scalar::one())
    } else {
        (gen_index(j, i), Scalar::q_pow(-2))
    }
}

/// A word in possibly mirrored entries.
fn entry_word(pairs: &[(usize, usize)]) -> (Word, Scalar) {
    let mut w = Vec::with_capacity(pairs.len());
    let mut c = Scalar::one();
    for &(i, j) in pairs {
        let (g, x) = mirrored(i, j);
        w.push(g);
        c = c.mul(&x);
    }
    (w, c)
}

#[derive(Debug)]
pub struct QSymMatAlgebra {
    n: usize,
    pres: Arc<Presentation>,
    det: AlgebraElement,
    loc: Localization,
    engine: ActionEngine,
    spec: UqSpec,
}

impl QSymMatAlgebra {
    pub fn new(n: usize) -> Result<Self, MatrixError> {
        assert!(n >= 1, "matrix size must be positive");
        let pres = Arc::new(presentation(n)?);
        let det = sym_minor_in(&pres, &(1..=n).collect_vec());
        let loc = Localization::new(pres.clone(), det.clone())?;
        let table = action_table(&pres, n)?;
        let engine = ActionEngine::new(pres.clone(), table);
        Ok(Self {
            n,
            pres,
            det,
            loc,
            engine,
            spec: UqSpec::type_c(n),
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

    pub fn gen(&self, i: usize, j: usize) -> Gen {
        gen_index(i, j)
    }

    pub fn indices(&self, g: Gen) -> (usize, usize) {
        indices(g)
    }

    /// `z_ij` for any `i, j`, mirrored when `i < j`.
    pub fn z(&self, i: usize, j: usize) -> AlgebraElement {
        let (g, c) = mirrored(i, j);
        self.pres.gen(g).scale(&c)
    }

    pub fn sym_det(&self) -> &AlgebraElement {
        &self.det
    }

    /// The symmetric determinant of the rows and columns `idx`.
    pub fn sym_minor(&self, idx: &[usize]) -> Result<AlgebraElement, MatrixError> {
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(MatrixError::NotIncreasing);
        }
        if let Some(&i) = idx.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(MatrixError::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(sym_minor_in(&self.pres, idx))
    }

    /// Line `n` and column `n` deleted; `1` when `n = 1`.
    pub fn sym_det_minor_nn(&self) -> AlgebraElement {
        sym_minor_in(&self.pres, &(1..self.n).collect_vec())
    }

    pub fn sym_det_commutant_scalar(&self, i: usize, j: usize) -> Result<Scalar, MatrixError> {
        if !(1..=self.n).contains(&i) || !(1..=i).contains(&j) {
            return Err(MatrixError::IndexOutOfRange { index: i.max(j), n: self.n });
        }
        commutant_scalar(&self.pres, &self.det, self.gen(i, j))
    }

    /// `z_nn^*`.
    pub fn star_seed(&self) -> LocalElement {
        self.loc.canonical(LocalElement {
            num: self.sym_det_minor_nn(),
            m: 1,
        })
    }

    pub fn derived_star(&self) -> Result<StarStructure, MatrixError> {
        let g = self.gen(self.n, self.n);
        Ok(derive_star(&self.engine, &self.loc, &self.spec, &[(g, self.star_seed())])?)
    }

    /// `p(z_ij) = q^(n-i)` on the diagonal, zero elsewhere.
    pub fn point_value(&self, g: Gen) -> Scalar {
        let (i, j) = indices(g);
        if i == j {
            Scalar::q_pow((self.n - i) as i32)
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

/// `sum_s (-q)^-l(s) q^(m - #fixed) z_{s(m) m} ... z_{s(1) 1}` over `idx`.
fn sym_minor_in(pres: &Presentation, idx: &[usize]) -> AlgebraElement {
    let m = idx.len();
    let mut out = pres.zero();
    for s in (0..m).permutations(m) {
        let l = inversions(&s) as i32;
        let fixed = (0..m).filter(|&i| s[i] == i).count() as i32;
        let sign = if l % 2 == 1 { Scalar::from_int(-1) } else { Scalar::one() };
        let c = sign.mul(&Scalar::q_pow(m as i32 - fixed - l));
        let pairs = (0..m).rev().map(|i| (idx[s[i]], idx[i])).collect_vec();
        let (w, x) = entry_word(&pairs);
        out = out.add(&pres.normal_form(&w).scale(&c.mul(&x)));
    }
    out
}

/// The eleven relation families on `z_ij`, `j <= i`, graded by `e_i + e_j`.
pub fn presentation(n: usize) -> Result<Presentation, crate::freealg::AlgError> {
    let mut labels = Vec::new();
    let mut grading = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            labels.push(format!("z[{i}][{j}]"));
            let mut gr = vec![0; n];
            gr[i - 1] += 1;
            gr[j - 1] += 1;
            grading.push(gr);
        }
    }
    let mut rels = Vec::new();
    let mut rel = |terms: Vec<(Scalar, [(usize, usize); 2])>| {
        let terms = terms
            .into_iter()
            .map(|(c, ps)| {
                let (w, x) = entry_word(&ps);
                (w, c.mul(&x))
            })
            .collect();
        rels.push(Relation { terms });
    };
    let one = Scalar::one;
    let m1 = || Scalar::from_int(-1);
    let q = Scalar::q_pow;
    let qmq = || Scalar::q_minus_qinv(1);
    let q2m = || Scalar::q_minus_qinv(2);
    let r = 1..=n;
    for (i, k) in r.clone().tuple_combinations() {
        rel(vec![(one(), [(i, i), (k, i)]), (q(2).neg(), [(k, i), (i, i)])]);
        rel(vec![(one(), [(k, i), (k, k)]), (q(2).neg(), [(k, k), (k, i)])]);
    }
    for (i, j, k) in r.clone().cartesian_product(r.clone()).cartesian_product(r.clone()).map(|((a, b), c)| (a, b, c)) {
        if j < k && k < i {
            rel(vec![(one(), [(i, j), (i, k)]), (q(1).neg(), [(i, k), (i, j)])]);
        }
        if j < i && i < k {
            rel(vec![(one(), [(i, j), (k, j)]), (q(1).neg(), [(k, j), (i, j)])]);
        }
    }
    let quads = || {
        r.clone()
            .cartesian_product(r.clone())
            .cartesian_product(r.clone())
            .cartesian_product(r.clone())
            .map(|(((i, j), k), l)| (i, j, k, l))
    };
    for (i, j, k, l) in quads() {
        if j < l && l <= k && k < i {
            rel(vec![(one(), [(i, j), (k, l)]), (m1(), [(k, l), (i, j)])]);
        }
    }
    for (i, j) in r.clone().tuple_combinations() {
        rel(vec![
            (one(), [(i, i), (j, j)]),
            (m1(), [(j, j), (i, i)]),
            (q(1).mul(&q2m()).neg(), [(j, i), (j, i)]),
        ]);
    }
    for (i, j, k) in r.clone().cartesian_product(r.clone()).cartesian_product(r.clone()).map(|((a, b), c)| (a, b, c)) {
        if i < k && k < j {
            rel(vec![(one(), [(i, i), (j, k)]), (m1(), [(j, k), (i, i)]), (q2m().neg(), [(k, i), (j, i)])]);
        }
        if k < i && i < j {
            rel(vec![(one(), [(i, k), (j, j)]), (m1(), [(j, j), (i, k)]), (q2m().neg(), [(j, k), (j, i)])]);
        }
    }
    for (i, j, k, l) in quads() {
        if j < i && i < l && l < k {
            rel(vec![
                (one(), [(i, j), (k, l)]),
                (m1(), [(k, l), (i, j)]),
                (qmq().mul(&q(1)).neg(), [(l, i), (k, j)]),
                (qmq().neg(), [(k, i), (l, j)]),
            ]);
        }
        if j < l && l < i && i < k {
            rel(vec![(one(), [(i, j), (k, l)]), (m1(), [(k, l), (i, j)]), (qmq().neg(), [(i, l), (k, j)])]);
        }
        if j < i && i == l && l < k {
            rel(vec![(one(), [(i, j), (k, l)]), (q(1).neg(), [(k, l), (i, j)]), (qmq().neg(), [(i, l), (k, j)])]);
        }
    }
    crate::freealg::Presentation::from_relations(labels, grading, rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for i in 1..=4 {
            for j in 1..=i {
                assert_eq!(indices(gen_index(i, j)), (i, j));
            }
        }
    }
}
