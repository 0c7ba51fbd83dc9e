use qshilov_core::prinseries::{
    classify, intertwiner_coeff, verify_intertwiner, window, CaseReport, IntertwinerViolation, KVector,
    ParamPair, PrincipalSeries, RepParams,
};
use qshilov_core::uqaction::Chevalley;
use serde::{Deserialize, Serialize};

use crate::verify::{Check, VerifyReport};

pub fn report(p: &ParamPair, n: usize) -> Result<CaseReport, String> {
    classify(p, n).map_err(|e| e.to_string())
}

pub fn report_text(r: &CaseReport) -> String {
    let mut out = format!("n = {}, (alpha, beta) = ({}, {})\n", r.n, r.input.alpha, r.input.beta);
    out.push_str(&format!("canonical: ({}, {})\n", r.canonical_params.alpha, r.canonical_params.beta));
    if let Some(q) = &r.equivalence_partner {
        out.push_str(&format!("equivalent to: ({}, {})\n", q.alpha, q.beta));
    }
    out.push_str(&format!("case: {:?}\n", r.case_label).to_lowercase());
    out.push_str(&format!("irreducible: {}\n", r.irreducible));
    if let Some(c) = r.completely_reducible {
        out.push_str(&format!("completely reducible: {c}\n"));
    }
    for m in &r.submodules {
        out.push_str(&format!("  {m}\n"));
    }
    out.push_str(&format!("unitarity: {}\n", serde_json::to_value(r.unitarity).unwrap().as_str().unwrap_or("")));
    if !r.unitarizable.is_empty() {
        out.push_str(&format!("unitarizable: {}\n", r.unitarizable.join(", ")));
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntertwinerReport {
    pub schema: u32,
    pub n: usize,
    pub k: KVector,
    pub coefficient: String,
    pub violations: Vec<ViolationRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ViolationRow {
    pub generator: String,
    pub component: String,
    pub residual: String,
}

fn nodes(n: usize) -> Vec<Chevalley> {
    vec![Chevalley::E(n), Chevalley::F(n), Chevalley::K(n)]
}

fn rows(v: Vec<IntertwinerViolation>) -> Vec<ViolationRow> {
    v.into_iter()
        .map(|v| ViolationRow { generator: v.generator, component: v.component.to_string(), residual: v.residual })
        .collect()
}

pub fn intertwiner(n: usize, k: &KVector) -> Result<IntertwinerReport, String> {
    let series = PrincipalSeries::new(n).map_err(|e| e.to_string())?;
    let v = verify_intertwiner(&series, std::slice::from_ref(k), &nodes(n)).map_err(|e| e.to_string())?;
    Ok(IntertwinerReport {
        schema: 1,
        n,
        k: k.clone(),
        coefficient: intertwiner_coeff(k, n).to_string(),
        violations: rows(v),
    })
}

/// Highest-vector annihilation, weights and the intertwiner identity on a
/// window of highest weights.
pub fn verify(n: usize, w: i64) -> Result<VerifyReport, String> {
    let series = PrincipalSeries::new(n).map_err(|e| e.to_string())?;
    let sym = RepParams::symbolic();
    let ks = window(n, w);
    let mut checks = Vec::new();
    let mut push = |suite: &str, name: String, ok: bool, detail: String| {
        checks.push(Check { suite: suite.into(), name, ok, detail })
    };
    for k in &ks {
        let v = series.highest_vector(k).map_err(|e| e.to_string())?;
        for j in (1..2 * n).filter(|&j| j != n) {
            let ok = match series.pi_act(Chevalley::E(j), &v, &sym) {
                Ok(x) => series.is_zero(&x),
                Err(_) => false,
            };
            push("highest", format!("E{j} kills v{k}"), ok, String::new());
        }
        let got = series.weight_of(&v, &sym).map_err(|e| e.to_string())?;
        let want = series.predicted_weight(k, &sym);
        push("weight", format!("weight of v{k}"), got.as_ref() == Some(&want), String::new());
    }
    let bad = verify_intertwiner(&series, &ks, &nodes(n)).map_err(|e| e.to_string())?;
    for k in &ks {
        for x in nodes(n) {
            let g = x.to_string();
            let hit: Vec<&IntertwinerViolation> = bad.iter().filter(|v| &v.k == k && v.generator == g).collect();
            let detail = hit.first().map(|v| format!("component {}: {}", v.component, v.residual)).unwrap_or_default();
            push("intertwiner", format!("{g} at k = {k}"), hit.is_empty(), detail);
        }
    }
    let failed = checks.iter().filter(|c| !c.ok).count();
    Ok(VerifyReport {
        schema: 1,
        algebra: "an".into(),
        n,
        suite: "series".into(),
        passed: checks.len() - failed,
        failed,
        checks,
    })
}
