use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::scalars::{solve_linear, LinSolve, Scalar};

use super::element::{AlgebraElement, Terms};
use super::presentation::{Presentation, Word};
use super::AlgError;

/// `num * D^(-m)` for a fixed central element `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalElement {
    pub num: AlgebraElement,
    pub m: u32,
}

/// Localization of a presentation at a central, multihomogeneous element.
pub struct Localization {
    pres: Arc<Presentation>,
    d: AlgebraElement,
    d_grade: Vec<i32>,
    d_degree: usize,
    basis: RwLock<HashMap<Vec<i32>, Arc<Vec<(Word, Terms)>>>>,
}

impl std::fmt::Debug for Localization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Localization").field("d", &self.d).finish()
    }
}

impl Localization {
    /// Fails unless `d` is nonzero, multihomogeneous and commutes with every
    /// generator.
    pub fn new(pres: Arc<Presentation>, d: AlgebraElement) -> Result<Self, AlgError> {
        if d.is_zero() || d.presentation_id() != pres.id() {
            return Err(AlgError::PresentationMismatch);
        }
        let mut grades = d.terms().keys().map(|w| (w.len(), pres.word_grade(w)));
        let (d_degree, d_grade) = grades.next().expect("nonzero");
        if grades.any(|(l, g)| l != d_degree || g != d_grade) {
            return Err(AlgError::NotHomogeneous);
        }
        for g in 0..pres.num_generators() {
            let x = pres.gen(g as u16);
            if !pres.commutator(&d, &x)?.is_zero() {
                return Err(AlgError::NotCentral(pres.label(g as u16).to_string()));
            }
        }
        Ok(Self {
            pres,
            d,
            d_grade,
            d_degree,
            basis: RwLock::new(HashMap::new()),
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn denominator(&self) -> &AlgebraElement {
        &self.d
    }

    pub fn from_poly(&self, f: AlgebraElement) -> LocalElement {
        LocalElement { num: f, m: 0 }
    }

    /// `D^k` for any integer `k`.
    pub fn d_pow(&self, k: i64) -> LocalElement {
        if k >= 0 {
            LocalElement {
                num: self.pres.pow(&self.d, k as u32).expect("same presentation"),
                m: 0,
            }
        } else {
            LocalElement {
                num: self.pres.one(),
                m: (-k) as u32,
            }
        }
    }

    fn candidates(&self, grade: &[i32]) -> Arc<Vec<(Word, Terms)>> {
        if let Some(hit) = self.basis.read().expect("lock").get(grade) {
            return hit.clone();
        }
        let words = self.pres.normal_words_of_grade(grade);
        let out: Vec<(Word, Terms)> = words
            .into_iter()
            .map(|w| {
                let x = self.pres.normal_form(&w);
                let prod = self.pres.mul_unchecked(&x, &self.d);
                (w, prod.terms().clone())
            })
            .collect();
        let out = Arc::new(out);
        self.basis
            .write()
            .expect("lock")
            .insert(grade.to_vec(), out.clone());
        out
    }

    /// `Some(q)` with `q D = f`, or `None` when `D` does not divide `f`.
    pub fn divide(&self, f: &AlgebraElement) -> Option<AlgebraElement> {
        if f.is_zero() {
            return Some(f.clone());
        }
        let mut groups: BTreeMap<(usize, Vec<i32>), Terms> = BTreeMap::new();
        for (w, c) in f.terms() {
            if w.len() < self.d_degree {
                return None;
            }
            groups
                .entry((w.len(), self.pres.word_grade(w)))
                .or_default()
                .insert(w.clone(), c.clone());
        }
        let mut quotient = Terms::new();
        for ((_, grade), part) in groups {
            let target: Vec<i32> = grade.iter().zip(&self.d_grade).map(|(a, b)| a - b).collect();
            if target.iter().any(|&x| x < 0) {
                return None;
            }
            let cands = self.candidates(&target);
            if cands.is_empty() {
                return None;
            }
            let mut rows: BTreeMap<&Word, usize> = BTreeMap::new();
            for (w, _) in &part {
                let len = rows.len();
                rows.entry(w).or_insert(len);
            }
            for (_, prod) in cands.iter() {
                for w in prod.keys() {
                    let len = rows.len();
                    rows.entry(w).or_insert(len);
                }
            }
            let mut a = vec![vec![Scalar::zero(); cands.len()]; rows.len()];
            for (j, (_, prod)) in cands.iter().enumerate() {
                for (w, c) in prod {
                    a[rows[w]][j] = c.clone();
                }
            }
            let mut b = vec![Scalar::zero(); rows.len()];
            for (w, c) in &part {
                b[rows[w]] = c.clone();
            }
            match solve_linear(&a, &b) {
                LinSolve::Solved { x, .. } => {
                    for ((w, _), c) in cands.iter().zip(x) {
                        if !c.is_zero() {
                            quotient.insert(w.clone(), c);
                        }
                    }
                }
                LinSolve::Inconsistent => return None,
            }
        }
        Some(self.pres.element(quotient))
    }

    /// Lower `m` as far as exact division by `D` allows.
    pub fn canonical(&self, x: LocalElement) -> LocalElement {
        let LocalElement { mut num, mut m } = x;
        if num.is_zero() {
            return LocalElement { num, m: 0 };
        }
        while m > 0 {
            match self.divide(&num) {
                Some(q) => {
                    num = q;
                    m -= 1;
                }
                None => break,
            }
        }
        LocalElement { num, m }
    }

    fn raise(&self, x: &LocalElement, m: u32) -> AlgebraElement {
        debug_assert!(m >= x.m);
        let k = m - x.m;
        if k == 0 {
            return x.num.clone();
        }
        let dk = self.pres.pow(&self.d, k).expect("same presentation");
        self.pres.mul_unchecked(&x.num, &dk)
    }

    pub fn add(&self, a: &LocalElement, b: &LocalElement) -> LocalElement {
        let m = a.m.max(b.m);
        let num = self.raise(a, m).add(&self.raise(b, m));
        self.canonical(LocalElement { num, m })
    }

    pub fn sub(&self, a: &LocalElement, b: &LocalElement) -> LocalElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &LocalElement) -> LocalElement {
        LocalElement {
            num: a.num.neg(),
            m: a.m,
        }
    }

    pub fn scale(&self, a: &LocalElement, c: &Scalar) -> LocalElement {
        if c.is_zero() {
            return LocalElement {
                num: self.pres.zero(),
                m: 0,
            };
        }
        LocalElement {
            num: a.num.scale(c),
            m: a.m,
        }
    }

    pub fn mul(&self, a: &LocalElement, b: &LocalElement) -> LocalElement {
        let num = self.pres.mul_unchecked(&a.num, &b.num);
        self.canonical(LocalElement { num, m: a.m + b.m })
    }

    /// Exact equality, independent of the representatives.
    pub fn equal(&self, a: &LocalElement, b: &LocalElement) -> bool {
        let m = a.m.max(b.m);
        self.raise(a, m) == self.raise(b, m)
    }

    pub fn is_zero(&self, a: &LocalElement) -> bool {
        a.num.is_zero()
    }

    /// `Some(c * D^k)` data when `a` is a scalar multiple of a power of `D`.
    pub fn as_scaled_d_power(&self, a: &LocalElement) -> Option<(Scalar, i64)> {
        let mut num = a.num.clone();
        let mut k: i64 = -(a.m as i64);
        loop {
            if let Some(c) = num.as_scalar() {
                return (!c.is_zero()).then_some((c, k));
            }
            num = self.divide(&num)?;
            k += 1;
        }
    }
}
