use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use crate::freealg::{AlgebraElement, Terms, Word};
use crate::scalars::{solve_linear, LinSolve, Scalar};
use crate::uqaction::Chevalley;

use super::action::{BoundaryVector, KVector, PrincipalSeries};
use super::SeriesError;

/// Partitions of `d` into at most `n` parts, padded with zeros.
fn partitions(d: i64, n: usize, max: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d.min(max)).rev() {
        for mut rest in partitions(d - first, n - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `k` with `k_1 >= ... >= k_n` and `|k_i| <= w`.
pub fn window(n: usize, w: i64) -> Vec<KVector> {
    (0..n)
        .map(|_| (-w..=w).rev())
        .multi_cartesian_product()
        .filter(|k| k.windows(2).all(|p| p[0] >= p[1]))
        .map(KVector)
        .collect()
}

/// Incremental row echelon form for rank tests.
#[derive(Default)]
struct Echelon {
    rows: Vec<(Word, Terms)>,
}

impl Echelon {
    /// Adds `v` and returns true when it is independent of the rows so far.
    fn insert(&mut self, v: &Terms) -> bool {
        let mut r = v.clone();
        for (p, row) in &self.rows {
            let Some(c) = r.get(p).cloned() else { continue };
            let f = c.div(&row[p]).expect("pivot is nonzero");
            for (w, x) in row {
                let e = r.entry(w.clone()).or_default();
                *e = e.sub(&f.mul(x));
                if e.is_zero() {
                    r.remove(w);
                }
            }
        }
        match r.keys().next_back().cloned() {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

fn dominates(a: &[i32], b: &[i32]) -> bool {
    let mut sa = 0;
    let mut sb = 0;
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa < sb {
            return false;
        }
    }
    true
}

impl PrincipalSeries {
    /// `k'_n >= 0` version of the highest vector, as a polynomial.
    fn polynomial_highest(&self, k: &[i64]) -> AlgebraElement {
        let v = self.highest_vector(&KVector(k.to_vec())).expect("valid partition");
        self.lower_to(&v, 0).poly
    }

    /// A basis of the polynomial component `V_k` in one multidegree.
    pub(super) fn component_basis(&self, k: &[i64], grade: &[i32]) -> Arc<Vec<AlgebraElement>> {
        let key = (k.to_vec(), grade.to_vec());
        if let Some(b) = self.bases.read().expect("lock").get(&key) {
            return b.clone();
        }
        let n = self.n();
        let p = self.presentation();
        let eng = self.algebra().engine();
        let reachable = |g: &[i32]| dominates(&g[..n], &grade[..n]) && dominates(&g[n..], &grade[n..]);
        let lowering: Vec<Chevalley> = (1..2 * n).filter(|&j| j != n).map(Chevalley::F).collect();
        let mut echelons: BTreeMap<Vec<i32>, Echelon> = BTreeMap::new();
        let mut found = Vec::new();
        let mut queue = VecDeque::new();
        let mut seen = HashSet::new();
        let top = self.polynomial_highest(k);
        queue.push_back(top);
        while let Some(x) = queue.pop_front() {
            let Some(w) = x.terms().keys().next() else { continue };
            let g = p.word_grade(w);
            if !reachable(&g) || !seen.insert(x.terms().clone()) {
                continue;
            }
            if !echelons.entry(g.clone()).or_default().insert(x.terms()) {
                continue;
            }
            if g == grade {
                found.push(x.clone());
            }
            for &f in &lowering {
                let y = eng.act(f, &x).expect("lowering stays in the table");
                if !y.is_zero() {
                    queue.push_back(y);
                }
            }
        }
        let b = Arc::new(found);
        self.bases.write().expect("lock").insert(key, b.clone());
        b
    }

    /// Split `w` into its isotypic components.
    pub fn isotypic_decompose(&self, w: &BoundaryVector) -> Result<Vec<(KVector, BoundaryVector)>, SeriesError> {
        let n = self.n();
        let p = self.presentation();
        let mut pieces: BTreeMap<(usize, Vec<i32>), Terms> = BTreeMap::new();
        for (word, c) in w.poly.terms() {
            pieces
                .entry((word.len(), p.word_grade(word)))
                .or_default()
                .insert(word.clone(), c.clone());
        }
        let mut out: BTreeMap<KVector, AlgebraElement> = BTreeMap::new();
        for ((deg, grade), f) in pieces {
            let mut cols: Vec<(Vec<i64>, AlgebraElement)> = Vec::new();
            for k in partitions(deg as i64, n, deg as i64) {
                for b in self.component_basis(&k, &grade).iter() {
                    cols.push((k.clone(), b.clone()));
                }
            }
            let mut words: Vec<Word> = f.keys().cloned().collect();
            for (_, b) in &cols {
                words.extend(b.terms().keys().cloned());
            }
            words.sort();
            words.dedup();
            let a: Vec<Vec<Scalar>> = words
                .iter()
                .map(|wd| cols.iter().map(|(_, b)| b.coeff(wd)).collect())
                .collect();
            let rhs: Vec<Scalar> = words.iter().map(|wd| f.get(wd).cloned().unwrap_or_default()).collect();
            let x = match solve_linear(&a, &rhs) {
                LinSolve::Solved { x, .. } => x,
                LinSolve::Inconsistent => return Err(SeriesError::Residual { degree: deg }),
            };
            for ((k, b), xi) in cols.iter().zip(x) {
                if xi.is_zero() {
                    continue;
                }
                let key = KVector(k.clone()).shifted(w.c);
                let e = out.entry(key).or_insert_with(|| p.zero());
                *e = e.add(&b.scale(&xi));
            }
        }
        Ok(out
            .into_iter()
            .rev()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, BoundaryVector { poly: v, c: w.c }))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_three() {
        assert_eq!(partitions(3, 2, 3), vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(partitions(0, 3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn window_counts() {
        assert_eq!(window(1, 2).len(), 5);
        // pairs k1 >= k2 in [-1, 1]
        assert_eq!(window(2, 1).len(), 6);
    }
}
