use std::collections::BTreeMap;

use crate::scalars::Scalar;

use super::presentation::{Gen, Word};

pub type Terms = BTreeMap<Word, Scalar>;

/// `out += c * t`, dropping cancelled terms.
pub(crate) fn add_into(out: &mut Terms, t: &Terms, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (w, x) in t {
        let y = if c.is_one() { x.clone() } else { x.mul(c) };
        match out.get_mut(w) {
            Some(z) => {
                *z = z.add(&y);
                if z.is_zero() {
                    out.remove(w);
                }
            }
            None => {
                out.insert(w.clone(), y);
            }
        }
    }
}

/// Linear combination of normal words of one presentation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pres: u64,
    terms: Terms,
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl AlgebraElement {
    pub(crate) fn from_terms(pres: u64, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { pres, terms }
    }

    pub fn presentation_id(&self) -> u64 {
        self.pres
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The coefficient when this is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// `(word, coefficient)` when there is exactly one term.
    pub fn as_single_term(&self) -> Option<(&Word, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn same(&self, o: &Self) {
        assert!(
            self.pres == o.pres || self.is_zero() || o.is_zero(),
            "elements of different presentations"
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same(o);
        let mut t = self.terms.clone();
        add_into(&mut t, &o.terms, &Scalar::one());
        Self {
            pres: if self.is_zero() { o.pres } else { self.pres },
            terms: t,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.same(o);
        let mut t = self.terms.clone();
        add_into(&mut t, &o.terms, &Scalar::from_int(-1));
        Self { pres: self.pres, terms: t }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self {
                pres: self.pres,
                terms: Terms::new(),
            };
        }
        Self {
            pres: self.pres,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect(),
        }
    }

    /// Apply a coefficient map, dropping terms that become zero.
    pub fn map_coefficients<F: FnMut(&Scalar) -> Scalar>(&self, mut f: F) -> Self {
        Self::from_terms(
            self.pres,
            self.terms.iter().map(|(w, c)| (w.clone(), f(c))).collect(),
        )
    }

    /// Degrees (word lengths) present.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|w| w.len()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        Self {
            pres: self.pres,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_parameter_free(&self) -> bool {
        self.terms.values().all(|c| c.is_parameter_free())
    }
}
