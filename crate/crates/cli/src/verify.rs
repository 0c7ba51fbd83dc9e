use std::collections::{BTreeMap, BTreeSet};

use qshilov_core::freealg::Presentation;
use qshilov_core::scalars::Scalar;
use qshilov_core::uqaction::{verify_module_algebra, verify_serre_and_commutator, verify_star, Chevalley};
use serde::{Deserialize, Serialize};

use crate::model::Model;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ModuleAlgebra,
    Serre,
    Star,
    Confluence,
    Dimension,
    Localization,
    Point,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![ModuleAlgebra, Serre, Star, Confluence, Dimension, Localization, Point],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::ModuleAlgebra => "module-algebra",
            Suite::Serre => "serre",
            Suite::Star => "star",
            Suite::Confluence => "confluence",
            Suite::Dimension => "dimension",
            Suite::Localization => "localization",
            Suite::Point => "point",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub algebra: String,
    pub n: usize,
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.ok { "ok  " } else { "FAIL" };
            out.push_str(&format!("{tag} {:<14} {}", c.suite, c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!("  [{}]", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} {} n={}: {} passed, {} failed\n",
            self.algebra, self.suite, self.n, self.passed, self.failed
        ));
        out
    }
}

pub struct Options {
    pub degree: Option<usize>,
}

fn relation_text(p: &Presentation, r: usize) -> String {
    p.relations()[r]
        .terms
        .iter()
        .map(|(w, c)| {
            let w = p.render_word(w);
            if c.is_one() { w } else { format!("({c})*{w}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn run(model: &Model, algebra: &str, suite: Suite, opts: &Options) -> VerifyReport {
    let mut checks = Vec::new();
    for s in suite.expand() {
        let mut push = |name: String, ok: bool, detail: String| {
            checks.push(Check { suite: s.name().into(), name, ok, detail })
        };
        match s {
            Suite::ModuleAlgebra => module_algebra(model, &mut push),
            Suite::Serre => serre(model, opts.degree.unwrap_or(2), &mut push),
            Suite::Star => star(model, &mut push),
            Suite::Confluence => confluence(model, opts.degree.unwrap_or(3), &mut push),
            Suite::Dimension => {
                let gens = model.pres().num_generators() as u128;
                for d in 0..=opts.degree.unwrap_or(4) {
                    let got = model.dimension(d);
                    let want = binom(gens + d as u128 - 1, d as u128);
                    push(format!("degree {d}"), got == want, format!("{got} normal words, commutative count {want}"));
                }
            }
            Suite::Localization => localization(model, &mut push),
            Suite::Point => point(model, &mut push),
            Suite::All => unreachable!(),
        }
    }
    let failed = checks.iter().filter(|c| !c.ok).count();
    VerifyReport {
        schema: 1,
        algebra: algebra.into(),
        n: model.n(),
        suite: suite.name().into(),
        passed: checks.len() - failed,
        failed,
        checks,
    }
}

type Push<'a> = dyn FnMut(String, bool, String) + 'a;

fn module_algebra(model: &Model, push: &mut Push) {
    let p = model.pres();
    let bad: BTreeMap<(usize, String), String> = verify_module_algebra(model.engine(), p)
        .into_iter()
        .map(|v| ((v.relation, v.operator), v.residual))
        .collect();
    for r in 0..p.relations().len() {
        for x in Chevalley::all(model.engine().rank()) {
            let key = (r, x.to_string());
            let detail = bad.get(&key).cloned().unwrap_or_default();
            let name = format!("{x} on relation {r}: {}", relation_text(p, r));
            push(name, detail.is_empty(), detail);
        }
    }
}

fn serre(model: &Model, degree: usize, push: &mut Push) {
    let spec = model.spec();
    let mut bad: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for v in verify_serre_and_commutator(model.engine(), spec, degree) {
        bad.entry(v.identity).or_default().push(format!("{}: {}", v.word, v.residual));
    }
    let r = spec.rank();
    let mut names = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            names.push(format!("[E{i},F{j}]"));
            names.push(format!("K{i} E{j} K{i}^-1"));
            names.push(format!("K{i} F{j} K{i}^-1"));
            if i != j {
                names.push(format!("Serre E{i},E{j}"));
                names.push(format!("Serre F{i},F{j}"));
            }
        }
    }
    for name in names {
        let fails = bad.remove(&name).unwrap_or_default();
        let detail = match fails.first() {
            None => String::new(),
            Some(f) => format!("{} words fail, e.g. {f}", fails.len()),
        };
        push(format!("{name} on words of degree <= {degree}"), fails.is_empty(), detail);
    }
}

fn star(model: &Model, push: &mut Push) {
    let st = match model.star() {
        Ok(s) => s,
        Err(e) => return push("construct involution".into(), false, e.to_string()),
    };
    match verify_star(model.engine(), model.loc(), model.spec(), &st) {
        Ok(cs) => {
            for c in cs {
                push(format!("{} {}", c.property, c.subject), c.ok, String::new());
            }
        }
        Err(e) => push("star checks".into(), false, e.to_string()),
    }
    if let Model::An(a) = model {
        let (Ok(ex), Ok(de)) = (a.explicit_star(), a.derived_star()) else {
            return push("transported star matches formula".into(), false, "transport failed".into());
        };
        for g in 0..a.presentation().num_generators() as u16 {
            let ok = a.localization().equal(ex.image(g), de.image(g));
            push(format!("transported star matches formula on {}", a.presentation().label(g)), ok, String::new());
        }
    }
}

fn confluence(model: &Model, degree: usize, push: &mut Push) {
    let p = model.pres();
    let bad: BTreeMap<String, String> = qshilov_core::freealg::confluence_check(p, degree)
        .into_iter()
        .map(|o| (p.render_word(&o.word), p.render(&o.difference)))
        .collect();
    let heads: BTreeSet<(u16, u16)> = p.rules().map(|(k, _)| *k).collect();
    for &(a, b) in &heads {
        for &(b2, c) in heads.range((b, 0)..=(b, u16::MAX)) {
            debug_assert_eq!(b, b2);
            let w = p.render_word(&[a, b, c]);
            let detail = bad.get(&w).cloned().unwrap_or_default();
            push(format!("overlap {w}"), detail.is_empty(), detail);
        }
    }
    if heads.is_empty() {
        push("no rewriting rules".into(), true, String::new());
    }
}

fn localization(model: &Model, push: &mut Push) {
    let p = model.pres();
    let is_an = matches!(model, Model::An(_));
    for g in 0..p.num_generators() as u16 {
        let label = p.label(g);
        match model.commutant(g) {
            Ok(c) if !is_an || c.is_one() => push(format!("det commutes with {label}"), true, format!("scalar {c}")),
            Ok(c) => push(format!("det commutes with {label}"), false, format!("scalar {c}")),
            Err(e) => push(format!("det commutes with {label}"), false, e.to_string()),
        }
    }
}

fn point(model: &Model, push: &mut Push) {
    let p = model.pres();
    for r in 0..p.relations().len() {
        let x = p.relations()[r].terms.iter().fold(Scalar::zero(), |acc, (w, c)| {
            acc.add(&w.iter().fold(c.clone(), |t, &g| t.mul(&model.point_value(g))))
        });
        push(format!("relation {r} vanishes at the point"), x.is_zero(), String::new());
    }
    let st = match model.star() {
        Ok(s) => s,
        Err(e) => return push("construct involution".into(), false, e.to_string()),
    };
    for g in 0..p.num_generators() as u16 {
        let x = model.loc().from_poly(p.gen(g));
        let lhs = st.star(model.loc(), &x).map_err(|e| e.to_string()).and_then(|s| model.point_eval(&s).map_err(|e| e.to_string()));
        let rhs = model.point_eval(&x).map_err(|e| e.to_string());
        let (ok, detail) = match (lhs, rhs) {
            (Ok(l), Ok(r)) => (l == r, format!("p(x*) = {l}, conj p(x) = {r}")),
            (Err(e), _) | (_, Err(e)) => (false, e),
        };
        push(format!("p commutes with star on {}", p.label(g)), ok, detail);
    }
}
