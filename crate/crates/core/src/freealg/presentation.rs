use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};

use crate::scalars::Scalar;

use super::element::{add_into, AlgebraElement, Terms};
use super::AlgError;

pub type Gen = u16;
pub type Word = Vec<Gen>;

/// A defining relation `sum c_i w_i = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Word, Scalar)>,
}

/// `lhs -> rhs` with `lhs = [a, b]`, `a > b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: (Gen, Gen),
    pub rhs: Vec<(Word, Scalar)>,
}

/// Degree, then lexicographic.
pub fn deglex(a: &[Gen], b: &[Gen]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Ordered generators with one straightening rule per out-of-order pair.
/// Normal words are the nondecreasing ones.
pub struct Presentation {
    id: u64,
    labels: Vec<String>,
    index: HashMap<String, Gen>,
    grading: Vec<Vec<i32>>,
    rules: HashMap<(Gen, Gen), Vec<(Word, Scalar)>>,
    relations: Vec<Relation>,
    cache: RwLock<HashMap<(Word, Gen), Arc<Terms>>>,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("id", &self.id)
            .field("generators", &self.labels)
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl Presentation {
    /// Orient each relation at its degree-lex largest word.
    ///
    /// `grading` assigns every generator a multidegree; pass an empty vector
    /// per generator when none is needed.
    pub fn from_relations(
        labels: Vec<String>,
        grading: Vec<Vec<i32>>,
        relations: Vec<Relation>,
    ) -> Result<Self, AlgError> {
        let mut rules = Vec::with_capacity(relations.len());
        for (index, rel) in relations.iter().enumerate() {
            let mut merged: BTreeMap<Word, Scalar> = BTreeMap::new();
            for (w, c) in &rel.terms {
                let e = merged.entry(w.clone()).or_default();
                *e = e.add(c);
            }
            merged.retain(|_, c| !c.is_zero());
            let (lead, lc) = merged
                .iter()
                .max_by(|a, b| deglex(a.0, b.0))
                .map(|(w, c)| (w.clone(), c.clone()))
                .ok_or(AlgError::NotQuadratic { index })?;
            if lead.len() != 2 {
                return Err(AlgError::NotQuadratic { index });
            }
            if lead[0] <= lead[1] {
                return Err(AlgError::NotOrientable {
                    index,
                    word: render_word(&labels, &lead),
                });
            }
            let inv = lc.inv().map_err(|e| AlgError::Other(e.to_string()))?;
            let rhs = merged
                .into_iter()
                .filter(|(w, _)| *w != lead)
                .map(|(w, c)| (w, c.mul(&inv).neg()))
                .collect();
            rules.push(Rule {
                lhs: (lead[0], lead[1]),
                rhs,
            });
        }
        let mut p = Self::from_rules(labels, grading, rules)?;
        p.relations = relations;
        Ok(p)
    }

    /// Build from explicit rules, checking orientation, termination under
    /// degree-lex and exact coverage of out-of-order pairs.
    pub fn from_rules(labels: Vec<String>, grading: Vec<Vec<i32>>, rules: Vec<Rule>) -> Result<Self, AlgError> {
        assert_eq!(labels.len(), grading.len(), "one grade per generator");
        assert!(labels.len() < Gen::MAX as usize, "too many generators");
        let mut map = HashMap::new();
        for r in rules {
            let lhs = vec![r.lhs.0, r.lhs.1];
            let name = render_word(&labels, &lhs);
            if r.lhs.0 <= r.lhs.1 {
                return Err(AlgError::NotOrientable { index: map.len(), word: name });
            }
            for (w, _) in &r.rhs {
                if deglex(w, &lhs) != Ordering::Less {
                    return Err(AlgError::NonTerminating {
                        lhs: name,
                        rhs: render_word(&labels, w),
                    });
                }
            }
            let rhs: Vec<_> = r.rhs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if map.insert(r.lhs, rhs).is_some() {
                return Err(AlgError::DuplicateRule(name));
            }
        }
        let n = labels.len() as Gen;
        for a in 0..n {
            for b in 0..a {
                if !map.contains_key(&(a, b)) {
                    return Err(AlgError::MissingRule(render_word(&labels, &[a, b])));
                }
            }
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as Gen))
            .collect();
        Ok(Self {
            id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
            labels,
            index,
            grading,
            rules: map,
            relations: Vec::new(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: Gen) -> &str {
        &self.labels[g as usize]
    }

    pub fn lookup(&self, label: &str) -> Option<Gen> {
        self.index.get(label).copied()
    }

    pub fn grading(&self, g: Gen) -> &[i32] {
        &self.grading[g as usize]
    }

    /// Multidegree of a word.
    pub fn word_grade(&self, w: &[Gen]) -> Vec<i32> {
        let dim = self.grading.first().map(|g| g.len()).unwrap_or(0);
        let mut out = vec![0; dim];
        for &g in w {
            for (o, x) in out.iter_mut().zip(&self.grading[g as usize]) {
                *o += x;
            }
        }
        out
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rule(&self, a: Gen, b: Gen) -> Option<&[(Word, Scalar)]> {
        self.rules.get(&(a, b)).map(|v| v.as_slice())
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Gen, Gen), &Vec<(Word, Scalar)>)> {
        self.rules.iter()
    }

    pub fn is_normal(&self, w: &[Gen]) -> bool {
        w.windows(2).all(|p| !self.rules.contains_key(&(p[0], p[1])))
    }

    pub fn element(&self, terms: Terms) -> AlgebraElement {
        AlgebraElement::from_terms(self.id, terms)
    }

    pub fn zero(&self) -> AlgebraElement {
        self.element(Terms::new())
    }

    pub fn scalar(&self, c: Scalar) -> AlgebraElement {
        let mut t = Terms::new();
        if !c.is_zero() {
            t.insert(Vec::new(), c);
        }
        self.element(t)
    }

    pub fn one(&self) -> AlgebraElement {
        self.scalar(Scalar::one())
    }

    pub fn gen(&self, g: Gen) -> AlgebraElement {
        let mut t = Terms::new();
        t.insert(vec![g], Scalar::one());
        self.element(t)
    }

    pub fn gen_by_label(&self, label: &str) -> Result<AlgebraElement, AlgError> {
        self.lookup(label)
            .map(|g| self.gen(g))
            .ok_or_else(|| AlgError::UnknownGenerator(label.to_string()))
    }

    /// Normal word `w` followed by generator `g`, reduced.
    fn insert(&self, w: &[Gen], g: Gen) -> Arc<Terms> {
        let Some(&h) = w.last() else {
            return Arc::new(Terms::from([(vec![g], Scalar::one())]));
        };
        if h <= g {
            let mut ww = w.to_vec();
            ww.push(g);
            return Arc::new(Terms::from([(ww, Scalar::one())]));
        }
        let key = (w.to_vec(), g);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let prefix = &w[..w.len() - 1];
        let rhs = self.rules.get(&(h, g)).expect("coverage checked at construction");
        let mut out = Terms::new();
        for (r, c) in rhs {
            let mut acc = Terms::from([(prefix.to_vec(), c.clone())]);
            for &x in r {
                acc = self.append_letter(&acc, x);
            }
            add_into(&mut out, &acc, &Scalar::one());
        }
        let out = Arc::new(out);
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, out.clone());
        out
    }

    fn append_letter(&self, t: &Terms, g: Gen) -> Terms {
        let mut out = Terms::new();
        for (w, c) in t {
            add_into(&mut out, &self.insert(w, g), c);
        }
        out
    }

    /// Normal form of `start * letters`, where `start` is already normal.
    pub(crate) fn append_word(&self, start: Terms, letters: &[Gen]) -> Terms {
        let mut acc = start;
        for &g in letters {
            acc = self.append_letter(&acc, g);
        }
        acc
    }

    /// Normal form of an arbitrary word.
    pub fn normal_form(&self, w: &[Gen]) -> AlgebraElement {
        self.element(self.append_word(Terms::from([(Vec::new(), Scalar::one())]), w))
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn normalize(&self, terms: &[(Word, Scalar)]) -> AlgebraElement {
        let mut out = Terms::new();
        for (w, c) in terms {
            let nf = self.append_word(Terms::from([(Vec::new(), Scalar::one())]), w);
            add_into(&mut out, &nf, c);
        }
        self.element(out)
    }

    fn check(&self, a: &AlgebraElement) -> Result<(), AlgError> {
        if a.presentation_id() == self.id {
            Ok(())
        } else {
            Err(AlgError::PresentationMismatch)
        }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = Terms::new();
        for (w2, c2) in b.terms() {
            let start: Terms = a
                .terms()
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(c2)))
                .collect();
            if w2.is_empty() {
                add_into(&mut out, &start, &Scalar::one());
            } else {
                add_into(&mut out, &self.append_word(start, w2), &Scalar::one());
            }
        }
        self.element(out)
    }

    /// Product of several elements, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a AlgebraElement>>(&self, it: I) -> Result<AlgebraElement, AlgError> {
        let mut acc = self.one();
        for x in it {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &AlgebraElement, k: u32) -> Result<AlgebraElement, AlgError> {
        self.check(a)?;
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul_unchecked(&acc, a);
        }
        Ok(acc)
    }

    /// `a b - b a`.
    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgError> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// All normal words of length exactly `d`.
    pub fn normal_words(&self, d: usize) -> Vec<Word> {
        let n = self.labels.len() as Gen;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(p: &Presentation, n: Gen, d: usize, cur: &mut Word, out: &mut Vec<Word>) {
            if cur.len() == d {
                out.push(cur.clone());
                return;
            }
            for g in 0..n {
                if let Some(&last) = cur.last() {
                    if p.rules.contains_key(&(last, g)) {
                        continue;
                    }
                }
                cur.push(g);
                rec(p, n, d, cur, out);
                cur.pop();
            }
        }
        rec(self, n, d, &mut cur, &mut out);
        out
    }

    /// Normal words of length at most `d`.
    pub fn normal_words_up_to(&self, d: usize) -> Vec<Word> {
        (0..=d).flat_map(|k| self.normal_words(k)).collect()
    }

    /// Normal words with the given multidegree.
    pub fn normal_words_of_grade(&self, grade: &[i32]) -> Vec<Word> {
        let n = self.labels.len() as Gen;
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut rem = grade.to_vec();
        fn rec(p: &Presentation, n: Gen, cur: &mut Word, rem: &mut Vec<i32>, out: &mut Vec<Word>) {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
                return;
            }
            for g in 0..n {
                if let Some(&last) = cur.last() {
                    if p.rules.contains_key(&(last, g)) {
                        continue;
                    }
                }
                let gr = &p.grading[g as usize];
                if gr.iter().all(|&x| x == 0) || gr.iter().zip(rem.iter()).any(|(a, b)| a > b) {
                    continue;
                }
                for (r, a) in rem.iter_mut().zip(gr) {
                    *r -= a;
                }
                cur.push(g);
                rec(p, n, cur, rem, out);
                cur.pop();
                for (r, a) in rem.iter_mut().zip(gr) {
                    *r += a;
                }
            }
        }
        if rem.iter().any(|&x| x < 0) {
            return out;
        }
        rec(self, n, &mut cur, &mut rem, &mut out);
        out
    }

    pub fn render_word(&self, w: &[Gen]) -> String {
        render_word(&self.labels, w)
    }

    /// Number of cached insertion results.
    pub fn cache_len(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }
}

pub(crate) fn render_word(labels: &[String], w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|&g| labels[g as usize].as_str())
        .collect::<Vec<_>>()
        .join(".")
}

/// A degree-3 ambiguity whose two resolutions differ.
#[derive(Clone, Debug)]
pub struct Overlap {
    pub word: Word,
    pub difference: AlgebraElement,
}

/// Resolve every overlap `a.b.c` with `a > b > c` both ways and report the
/// ones that disagree. Quadratic rules only overlap in degree 3, so larger
/// `max_degree` values add nothing.
pub fn confluence_check(p: &Presentation, max_degree: usize) -> Vec<Overlap> {
    assert!(max_degree >= 3, "overlaps live in degree 3");
    use rayon::prelude::*;
    let n = p.num_generators() as Gen;
    let triples: Vec<(Gen, Gen, Gen)> = (0..n)
        .flat_map(|a| (0..a).flat_map(move |b| (0..b).map(move |c| (a, b, c))))
        .collect();
    triples
        .into_par_iter()
        .filter_map(|(a, b, c)| {
            let mut left = Terms::new();
            for (w, k) in p.rule(a, b).expect("rule") {
                let mut ww = w.clone();
                ww.push(c);
                add_into(&mut left, p.normal_form(&ww).terms(), k);
            }
            let mut right = Terms::new();
            for (w, k) in p.rule(b, c).expect("rule") {
                let mut ww = vec![a];
                ww.extend_from_slice(w);
                add_into(&mut right, p.normal_form(&ww).terms(), k);
            }
            let diff = p.element(left).sub(&p.element(right));
            (!diff.is_zero()).then(|| Overlap {
                word: vec![a, b, c],
                difference: diff,
            })
        })
        .collect()
}

/// Number of normal (irreducible) words of length `d`, by dynamic
/// programming over the last letter.
pub fn graded_dimension(p: &Presentation, d: usize) -> u128 {
    let n = p.num_generators();
    if d == 0 {
        return 1;
    }
    let mut counts = vec![1u128; n];
    for _ in 1..d {
        let mut next = vec![0u128; n];
        for (g, slot) in next.iter_mut().enumerate() {
            for (h, c) in counts.iter().enumerate() {
                if !p.rules.contains_key(&(h as Gen, g as Gen)) {
                    *slot += c;
                }
            }
        }
        counts = next;
    }
    counts.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `y x = q x y`.
    fn qplane() -> Presentation {
        let rel = Relation {
            terms: vec![(vec![1, 0], Scalar::one()), (vec![0, 1], Scalar::q_pow(1).neg())],
        };
        Presentation::from_relations(vec!["x".into(), "y".into()], vec![vec![1, 0], vec![0, 1]], vec![rel]).unwrap()
    }

    #[test]
    fn straightening_collects_q_powers() {
        let p = qplane();
        let nf = p.normal_form(&[1, 1, 0]);
        assert_eq!(nf.coeff(&[0, 1, 1]), Scalar::q_pow(2));
        assert_eq!(nf.len(), 1);
    }

    #[test]
    fn deglex_orders_by_length_first() {
        assert_eq!(deglex(&[1], &[0, 0]), Ordering::Less);
        assert_eq!(deglex(&[0, 1], &[1, 0]), Ordering::Less);
    }

    #[test]
    fn qplane_dimensions() {
        let p = qplane();
        for d in 0..6 {
            assert_eq!(graded_dimension(&p, d), d as u128 + 1);
        }
        assert!(confluence_check(&p, 3).is_empty());
    }

    #[test]
    fn misoriented_rules_are_rejected() {
        let rel = Relation {
            terms: vec![(vec![0, 0], Scalar::one())],
        };
        let r = Presentation::from_relations(vec!["x".into()], vec![vec![]], vec![rel]);
        assert!(r.is_err());
    }

    #[test]
    fn graded_words() {
        let p = qplane();
        assert_eq!(p.normal_words_of_grade(&[2, 1]), vec![vec![0, 0, 1]]);
    }
}
