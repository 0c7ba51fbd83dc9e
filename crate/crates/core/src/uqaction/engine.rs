use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::freealg::{AlgebraElement, Gen, LocalElement, Localization, Presentation, Terms, Word};
use crate::scalars::Scalar;

use super::{ActionError, Chevalley};

/// Values of `E_k`, `F_k`, `K_k^{+-1}` on each generator.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pres_id: u64,
    rank: usize,
    e: Vec<Vec<AlgebraElement>>,
    f: Vec<Vec<AlgebraElement>>,
    k: Vec<Vec<Scalar>>,
    kinv: Vec<Vec<Scalar>>,
}

impl ActionTable {
    /// Fill the table from `entry(X, g)`; K entries must be diagonal and
    /// reciprocal.
    pub fn build<F>(pres: &Presentation, rank: usize, mut entry: F) -> Result<Self, ActionError>
    where
        F: FnMut(Chevalley, Gen) -> AlgebraElement,
    {
        let n = pres.num_generators() as Gen;
        let mut e = Vec::with_capacity(rank);
        let mut f = Vec::with_capacity(rank);
        let mut k = Vec::with_capacity(rank);
        let mut kinv = Vec::with_capacity(rank);
        let diag = |x: &AlgebraElement, g: Gen| -> Result<Scalar, ActionError> {
            match x.as_single_term() {
                Some((w, c)) if w.as_slice() == [g] => Ok(c.clone()),
                _ => Err(ActionError::NotDiagonal {
                    generator: pres.label(g).to_string(),
                }),
            }
        };
        for j in 1..=rank {
            e.push((0..n).map(|g| entry(Chevalley::E(j), g)).collect());
            f.push((0..n).map(|g| entry(Chevalley::F(j), g)).collect());
            let mut kr = Vec::new();
            let mut kir = Vec::new();
            for g in 0..n {
                let a = diag(&entry(Chevalley::K(j), g), g)?;
                let b = diag(&entry(Chevalley::KInv(j), g), g)?;
                if !a.mul(&b).is_one() {
                    return Err(ActionError::NotReciprocal {
                        generator: pres.label(g).to_string(),
                    });
                }
                kr.push(a);
                kir.push(b);
            }
            k.push(kr);
            kinv.push(kir);
        }
        Ok(Self {
            pres_id: pres.id(),
            rank,
            e,
            f,
            k,
            kinv,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, x: Chevalley, g: Gen) -> AlgebraElement {
        let j = x.index() - 1;
        match x {
            Chevalley::E(_) => self.e[j][g as usize].clone(),
            Chevalley::F(_) => self.f[j][g as usize].clone(),
            Chevalley::K(_) | Chevalley::KInv(_) => AlgebraElement::from_terms(
                self.pres_id,
                Terms::from([(vec![g], self.k_eigen(x, g))]),
            ),
        }
    }

    /// Eigenvalue of `K_k` or `K_k^-1` on a generator.
    pub fn k_eigen(&self, x: Chevalley, g: Gen) -> Scalar {
        match x {
            Chevalley::K(j) => self.k[j - 1][g as usize].clone(),
            Chevalley::KInv(j) => self.kinv[j - 1][g as usize].clone(),
            _ => panic!("not a K generator"),
        }
    }

    /// Overwrite one entry; used to build deliberately broken tables.
    pub fn set_entry(&mut self, x: Chevalley, g: Gen, value: AlgebraElement) {
        let j = x.index() - 1;
        match x {
            Chevalley::E(_) => self.e[j][g as usize] = value,
            Chevalley::F(_) => self.f[j][g as usize] = value,
            _ => panic!("K entries are fixed by diagonality"),
        }
    }
}

/// Extends a table to all of the algebra by the twisted Leibniz rules
/// `E(fg) = E(f)g + K(f)E(g)`, `F(fg) = F(f)K^-1(g) + fF(g)`,
/// `K(fg) = K(f)K(g)`.
pub struct ActionEngine {
    pres: Arc<Presentation>,
    table: ActionTable,
    cache: RwLock<HashMap<(Chevalley, Word), Arc<Terms>>>,
}

impl std::fmt::Debug for ActionEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ActionEngine").field("rank", &self.table.rank).finish()
    }
}

fn add_scaled(out: &mut Terms, t: &Terms, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (w, x) in t {
        let y = x.mul(c);
        let e = out.entry(w.clone()).or_default();
        *e = e.add(&y);
        if e.is_zero() {
            out.remove(w);
        }
    }
}

impl ActionEngine {
    pub fn new(pres: Arc<Presentation>, table: ActionTable) -> Self {
        Self {
            pres,
            table,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn table(&self) -> &ActionTable {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.table.rank
    }

    fn check(&self, x: Chevalley) -> Result<(), ActionError> {
        let k = x.index();
        if k == 0 || k > self.table.rank {
            Err(ActionError::OutsideTable(x))
        } else {
            Ok(())
        }
    }

    /// Eigenvalue of `K_k^{+-1}` on a word.
    pub fn k_eigen_word(&self, x: Chevalley, w: &[Gen]) -> Scalar {
        let mut c = Scalar::one();
        for &g in w {
            c = c.mul(&self.table.k_eigen(x, g));
        }
        c
    }

    fn word_elem(&self, w: &[Gen]) -> AlgebraElement {
        self.pres.element(Terms::from([(w.to_vec(), Scalar::one())]))
    }

    fn act_word(&self, x: Chevalley, w: &[Gen]) -> Arc<Terms> {
        if let Chevalley::K(_) | Chevalley::KInv(_) = x {
            let c = self.k_eigen_word(x, w);
            if self.pres.is_normal(w) {
                return Arc::new(Terms::from([(w.to_vec(), c)]));
            }
            return Arc::new(self.pres.normal_form(w).scale(&c).terms().clone());
        }
        if w.is_empty() {
            return Arc::new(Terms::new());
        }
        let key = (x, w.to_vec());
        if let Some(hit) = self.cache.read().expect("lock").get(&key) {
            return hit.clone();
        }
        let g = w[0];
        let rest = &w[1..];
        let j = x.index() - 1;
        let mut out = Terms::new();
        match x {
            Chevalley::E(_) => {
                let eg = &self.table.e[j][g as usize];
                if !eg.is_zero() {
                    let t = self.pres.mul_unchecked(eg, &self.word_elem(rest));
                    add_scaled(&mut out, t.terms(), &Scalar::one());
                }
                if !rest.is_empty() {
                    let er = self.act_word(x, rest);
                    if !er.is_empty() {
                        let t = self
                            .pres
                            .mul_unchecked(&self.word_elem(&[g]), &self.pres.element((*er).clone()));
                        add_scaled(&mut out, t.terms(), &self.table.k[j][g as usize]);
                    }
                }
            }
            Chevalley::F(_) => {
                let fg = &self.table.f[j][g as usize];
                if !fg.is_zero() {
                    let t = self.pres.mul_unchecked(fg, &self.word_elem(rest));
                    let c = self.k_eigen_word(Chevalley::KInv(j + 1), rest);
                    add_scaled(&mut out, t.terms(), &c);
                }
                if !rest.is_empty() {
                    let fr = self.act_word(x, rest);
                    if !fr.is_empty() {
                        let t = self
                            .pres
                            .mul_unchecked(&self.word_elem(&[g]), &self.pres.element((*fr).clone()));
                        add_scaled(&mut out, t.terms(), &Scalar::one());
                    }
                }
            }
            _ => unreachable!(),
        }
        let out = Arc::new(out);
        self.cache.write().expect("lock").insert(key, out.clone());
        out
    }

    /// Action of one generator on an element (normal words assumed).
    pub fn act(&self, x: Chevalley, f: &AlgebraElement) -> Result<AlgebraElement, ActionError> {
        self.check(x)?;
        if f.presentation_id() != self.pres.id() && !f.is_zero() {
            return Err(crate::freealg::AlgError::PresentationMismatch.into());
        }
        let mut out = Terms::new();
        for (w, c) in f.terms() {
            add_scaled(&mut out, &self.act_word(x, w), c);
        }
        Ok(self.pres.element(out))
    }

    /// Action on a combination of arbitrary, not necessarily normal, words.
    pub fn act_raw(&self, x: Chevalley, terms: &[(Word, Scalar)]) -> Result<AlgebraElement, ActionError> {
        self.check(x)?;
        let mut out = Terms::new();
        for (w, c) in terms {
            add_scaled(&mut out, &self.act_word(x, w), c);
        }
        Ok(self.pres.element(out))
    }

    /// `X_1 X_2 ... X_r f`, applied right to left.
    pub fn act_seq(&self, ops: &[Chevalley], f: &AlgebraElement) -> Result<AlgebraElement, ActionError> {
        let mut cur = f.clone();
        for &x in ops.iter().rev() {
            cur = self.act(x, &cur)?;
        }
        Ok(cur)
    }
}

/// The action on a localization at a weight vector `D`.
pub struct LocalAction<'a> {
    pub engine: &'a ActionEngine,
    pub loc: &'a Localization,
    mu: Vec<Scalar>,
    ed: Vec<AlgebraElement>,
    fd: Vec<AlgebraElement>,
}

impl<'a> LocalAction<'a> {
    pub fn new(engine: &'a ActionEngine, loc: &'a Localization) -> Result<Self, ActionError> {
        let d = loc.denominator();
        let mut mu = Vec::new();
        let mut ed = Vec::new();
        let mut fd = Vec::new();
        for k in 1..=engine.rank() {
            let kd = engine.act(Chevalley::K(k), d)?;
            let (w, c) = d.terms().iter().next().expect("nonzero");
            let m = kd.coeff(w).div(c).map_err(|e| {
                ActionError::Algebra(crate::freealg::AlgError::Other(e.to_string()))
            })?;
            if kd != d.scale(&m) {
                return Err(ActionError::MixedWeights("denominator".into()));
            }
            mu.push(m);
            ed.push(engine.act(Chevalley::E(k), d)?);
            fd.push(engine.act(Chevalley::F(k), d)?);
        }
        Ok(Self { engine, loc, mu, ed, fd })
    }

    /// `K_k` eigenvalue of the denominator.
    pub fn mu(&self, k: usize) -> &Scalar {
        &self.mu[k - 1]
    }

    pub fn act(&self, x: Chevalley, f: &LocalElement) -> Result<LocalElement, ActionError> {
        let k = x.index();
        self.engine.check(x)?;
        let m = f.m;
        let mu = &self.mu[k - 1];
        let mu_inv = mu.inv().expect("weight eigenvalues are monomials");
        let out = match x {
            Chevalley::K(_) => LocalElement {
                num: self.engine.act(x, &f.num)?.scale(&mu_inv.pow(m as i32).expect("nonzero")),
                m,
            },
            Chevalley::KInv(_) => LocalElement {
                num: self.engine.act(x, &f.num)?.scale(&mu.pow(m as i32).expect("nonzero")),
                m,
            },
            Chevalley::E(_) => {
                let first = LocalElement {
                    num: self.engine.act(x, &f.num)?,
                    m,
                };
                if m == 0 {
                    first
                } else {
                    // E(D^-m) = c_m E(D) D^(-m-1), c_m = mu^-1 (c_{m-1} - 1).
                    let mut c = Scalar::zero();
                    for _ in 0..m {
                        c = mu_inv.mul(&c.sub(&Scalar::one()));
                    }
                    let kn = self.engine.act(Chevalley::K(k), &f.num)?;
                    let prod = self.engine.pres.mul_unchecked(&kn, &self.ed[k - 1]).scale(&c);
                    self.loc.add(&first, &LocalElement { num: prod, m: m + 1 })
                }
            }
            Chevalley::F(_) => {
                let fk = self.engine.act(x, &f.num)?.scale(&mu.pow(m as i32).expect("nonzero"));
                let first = LocalElement { num: fk, m };
                if m == 0 {
                    first
                } else {
                    // F(D^-m) = d_m F(D) D^(-m-1), d_m = d_{m-1} - mu^m.
                    let mut c = Scalar::zero();
                    let mut p = Scalar::one();
                    for _ in 0..m {
                        p = p.mul(mu);
                        c = c.sub(&p);
                    }
                    let prod = self.engine.pres.mul_unchecked(&f.num, &self.fd[k - 1]).scale(&c);
                    self.loc.add(&first, &LocalElement { num: prod, m: m + 1 })
                }
            }
        };
        Ok(self.loc.canonical(out))
    }

    pub fn act_seq(&self, ops: &[Chevalley], f: &LocalElement) -> Result<LocalElement, ActionError> {
        let mut cur = f.clone();
        for &x in ops.iter().rev() {
            cur = self.act(x, &cur)?;
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Relation;
    use crate::uqaction::{verify_module_algebra, verify_serre_and_commutator, UqSpec};

    /// `U_q(sl_2)` on the quantum plane `y x = q^c x y`: `E y = x`, `F x = y`.
    fn plane(c: i32) -> ActionEngine {
        let rel = Relation {
            terms: vec![(vec![1, 0], Scalar::one()), (vec![0, 1], Scalar::q_pow(c).neg())],
        };
        let p = Arc::new(
            Presentation::from_relations(vec!["x".into(), "y".into()], vec![vec![1], vec![1]], vec![rel]).unwrap(),
        );
        let table = ActionTable::build(&p, 1, |x, g| match (x, g) {
            (Chevalley::E(_), 1) => p.gen(0),
            (Chevalley::F(_), 0) => p.gen(1),
            (Chevalley::K(_), 0) | (Chevalley::KInv(_), 1) => p.gen(g).scale(&Scalar::q_pow(1)),
            (Chevalley::K(_), _) | (Chevalley::KInv(_), _) => p.gen(g).scale(&Scalar::q_pow(-1)),
            _ => p.zero(),
        })
        .unwrap();
        ActionEngine::new(p, table)
    }

    #[test]
    fn quantum_plane_is_a_module_algebra() {
        let good = plane(-1);
        assert!(verify_module_algebra(&good, good.presentation()).is_empty());
        let bad = plane(1);
        assert!(!verify_module_algebra(&bad, bad.presentation()).is_empty());
    }

    #[test]
    fn operator_relations_hold_on_the_plane() {
        let e = plane(-1);
        let mut spec = UqSpec::type_a(1);
        spec.l0 = 1;
        assert!(verify_serre_and_commutator(&e, &spec, 3).is_empty());
    }

    #[test]
    fn leibniz_on_a_product() {
        let e = plane(-1);
        let p = e.presentation().clone();
        // E(y^2) = x y + q^-1 y x = (1 + q^-2) x y
        let y2 = p.mul(&p.gen(1), &p.gen(1)).unwrap();
        let got = e.act(Chevalley::E(1), &y2).unwrap();
        assert_eq!(got.coeff(&[0, 1]), Scalar::one().add(&Scalar::q_pow(-2)));
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn k_must_be_diagonal() {
        let p = Presentation::from_relations(vec!["x".into()], vec![vec![]], vec![]).unwrap();
        let r = ActionTable::build(&p, 1, |x, g| match x {
            Chevalley::K(_) => p.zero(),
            _ => p.gen(g),
        });
        assert!(matches!(r, Err(ActionError::NotDiagonal { .. })));
    }
}
