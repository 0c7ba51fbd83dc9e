use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::scalars::{specialize, ExactParam, NumericParams, Scalar};
use crate::uqaction::Chevalley;

use super::action::{KVector, PrincipalSeries, RepParams};
use super::isotypic::window;
use super::SeriesError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamPair {
    pub alpha: ExactParam,
    pub beta: ExactParam,
}

impl ParamPair {
    pub fn new(alpha: ExactParam, beta: ExactParam) -> Self {
        Self { alpha, beta }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        Self::new(ExactParam::from_ints(a, 0), ExactParam::from_ints(b, 0))
    }

    pub fn is_integral(&self) -> bool {
        self.alpha.is_integer() && self.beta.is_integer()
    }

    /// Integer values, when both parameters are integers.
    pub fn as_ints(&self) -> Option<(i64, i64)> {
        if !self.is_integral() {
            return None;
        }
        Some((self.alpha.re.to_integer().to_i64()?, self.beta.re.to_integer().to_i64()?))
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// Shift by `(a - 1, b + 1)` until `a - b` is 0 or 1 and bring the common
/// imaginary part into `[0, 2)`.
fn normalize(p: &ParamPair) -> ParamPair {
    let y = p.alpha.im_mod(2);
    let d = (&p.alpha.re - &p.beta.re).to_integer();
    let k = num_integer_floor_half(&d);
    ParamPair {
        alpha: ExactParam { re: &p.alpha.re - rat(k), im: y.clone() },
        beta: ExactParam { re: &p.beta.re + rat(k), im: y },
    }
}

fn num_integer_floor_half(d: &num_bigint::BigInt) -> i64 {
    let d = d.to_i64().expect("parameter difference fits in i64");
    d.div_euclid(2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Canonical {
    pub params: ParamPair,
    pub partner: Option<ParamPair>,
}

/// The representative in the fundamental set and, for non-integral
/// parameters, the equivalent second point.
pub fn canonicalize(p: &ParamPair, n: usize) -> Result<Canonical, SeriesError> {
    let dx = &p.alpha.re - &p.beta.re;
    if !dx.is_integer() {
        return Err(SeriesError::NotHarishChandra(format!("a - b = {dx} is not an integer")));
    }
    let dy = &p.alpha.im - &p.beta.im;
    if !crate::scalars::numeric::rat_mod(&dy, 4).is_zero() {
        return Err(SeriesError::NotHarishChandra(
            "imaginary parts of a and b differ by a non-multiple of 4*pi/h".into(),
        ));
    }
    let params = normalize(p);
    let partner = (!params.is_integral()).then(|| {
        let nn = rat(n as i64);
        let im = if params.alpha.im.is_zero() {
            BigRational::zero()
        } else {
            rat(2) - &params.alpha.im
        };
        normalize(&ParamPair {
            alpha: ExactParam { re: -&nn - &params.beta.re, im: im.clone() },
            beta: ExactParam { re: -&nn - &params.alpha.re, im },
        })
    });
    Ok(Canonical { params, partner })
}

/// Exponent map for `(a, b) -> (-n - b, -n - a)` on `(s, u, v)`.
pub fn partner_exponents(n: usize) -> [[i32; 3]; 3] {
    let m = -2 * n as i32;
    [[1, m, m], [0, 0, -1], [0, -1, 0]]
}

/// `4 ch(h(a+b+n)/2) sum_j ch(hj/2)` written in `q`, `u`, `v`.
pub fn central_scalar(n: usize) -> Scalar {
    let x = Scalar::u().mul(&Scalar::v()).mul(&Scalar::q_pow(n as i32));
    let ch = |y: &Scalar| y.add(&y.inv().expect("monomial")).mul(&Scalar::ratio(1, 2));
    let mut sum = Scalar::zero();
    for j in 0..n as i32 {
        sum = sum.add(&ch(&Scalar::q_pow(j)));
    }
    Scalar::from_int(4).mul(&ch(&x)).mul(&sum)
}

pub fn central_scalar_at(p: &ParamPair, n: usize, q: f64) -> Result<Complex64, SeriesError> {
    let pt = NumericParams::new(q, p.alpha.clone(), p.beta.clone());
    Ok(specialize(&central_scalar(n), &pt)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    Nonintegral,
    Case1,
    Case2,
    Case3,
    Case4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Unitarity {
    Principal,
    Complementary,
    Strange,
    None,
    SubmodulesOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

/// `k_index (<=|>=|=) bound`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub index: usize,
    pub relation: Relation,
    pub bound: i64,
}

impl Bound {
    fn le(index: usize, bound: i64) -> Self {
        Self { index, relation: Relation::Le, bound }
    }

    fn ge(index: usize, bound: i64) -> Self {
        Self { index, relation: Relation::Ge, bound }
    }

    fn eq(index: usize, bound: i64) -> Self {
        Self { index, relation: Relation::Eq, bound }
    }

    pub fn holds(&self, k: &KVector) -> bool {
        let x = k.0[self.index - 1];
        match self.relation {
            Relation::Le => x <= self.bound,
            Relation::Ge => x >= self.bound,
            Relation::Eq => x == self.bound,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.relation {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        };
        write!(f, "k{} {r} {}", self.index, self.bound)
    }
}

/// The sum of the `V_k` over the monotone `k` meeting every bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Submodule {
    pub name: String,
    pub bounds: Vec<Bound>,
}

impl Submodule {
    pub fn contains(&self, k: &KVector) -> bool {
        k.0.windows(2).all(|w| w[0] >= w[1]) && self.bounds.iter().all(|b| b.holds(k))
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.bounds.iter().map(|b| b.to_string()).collect();
        write!(f, "{}: {{{}}}", self.name, b.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub schema: u32,
    pub n: usize,
    pub input: ParamPair,
    pub canonical_params: ParamPair,
    pub equivalence_partner: Option<ParamPair>,
    pub irreducible: bool,
    pub case_label: CaseLabel,
    /// Whether the whole space is the direct sum of the listed submodules.
    pub completely_reducible: Option<bool>,
    pub submodules: Vec<Submodule>,
    pub unitarity: Unitarity,
    pub unitarizable: Vec<String>,
}

/// The `n + 1` pieces cut out by consecutive walls.
fn wall_pieces(a: i64, b: i64, n: usize) -> Vec<Submodule> {
    let ni = n as i64;
    (1..=n + 1)
        .map(|i| {
            let ii = i as i64;
            let mut bounds = Vec::new();
            if i >= 2 {
                bounds.push(Bound::ge(i - 1, -a - ni + ii - 1));
            }
            if i <= n {
                bounds.push(Bound::le(i, b + ii - 1));
            }
            Submodule { name: format!("K{i}"), bounds }
        })
        .collect()
}

fn floor(x: &BigRational) -> BigRational {
    x.floor()
}

pub fn classify(p: &ParamPair, n: usize) -> Result<CaseReport, SeriesError> {
    let canon = canonicalize(p, n)?;
    let cp = canon.params.clone();
    let ni = n as i64;
    let mut report = CaseReport {
        schema: 1,
        n,
        input: p.clone(),
        canonical_params: cp.clone(),
        equivalence_partner: canon.partner.clone(),
        irreducible: true,
        case_label: CaseLabel::Nonintegral,
        completely_reducible: None,
        submodules: Vec::new(),
        unitarity: Unitarity::None,
        unitarizable: Vec::new(),
    };
    let Some((a, b)) = cp.as_ints() else {
        let sum_re = &cp.alpha.re + &cp.beta.re;
        let sum_im_zero = cp.alpha.im.is_zero();
        let nn = rat(ni);
        report.unitarity = if sum_re == -nn.clone() {
            Unitarity::Principal
        } else if sum_im_zero && floor(&(-&cp.alpha.re - &nn)) == floor(&cp.beta.re) {
            Unitarity::Complementary
        } else if cp.alpha.im == rat(1) {
            Unitarity::Strange
        } else {
            Unitarity::None
        };
        return Ok(report);
    };
    report.irreducible = false;
    let s = a + b + ni - 1;
    if s >= 1 {
        report.case_label = CaseLabel::Case1;
        let mut bounds = Vec::new();
        for j in 1..=n {
            let jj = j as i64;
            bounds.push(Bound::ge(j, -a - ni + jj));
            bounds.push(Bound::le(j, b + jj - 1));
        }
        report.submodules = vec![Submodule { name: "V".into(), bounds }];
        report.unitarity = Unitarity::None;
    } else if s == 0 {
        report.case_label = CaseLabel::Case2;
        report.submodules = (1..=n)
            .map(|j| Submodule {
                name: format!("V{j}"),
                bounds: vec![Bound::eq(j, b + j as i64 - 1)],
            })
            .collect();
        report.unitarity = Unitarity::SubmodulesOnly;
    } else {
        report.case_label = if s == -1 { CaseLabel::Case3 } else { CaseLabel::Case4 };
        report.completely_reducible = Some(s == -1);
        report.submodules = wall_pieces(a, b, n);
        report.unitarity = Unitarity::SubmodulesOnly;
    }
    if report.unitarity == Unitarity::SubmodulesOnly {
        report.unitarizable = report.submodules.iter().map(|m| m.name.clone()).collect();
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceViolation {
    pub submodule: String,
    pub k: KVector,
    pub generator: String,
    pub component: KVector,
}

/// For integral parameters: the images of `v^h_k` under `E_n`, `F_n` have no
/// component outside a predicted submodule containing `k`.
pub fn submodule_invariance_check(
    series: &PrincipalSeries,
    a: i64,
    b: i64,
    submodules: &[Submodule],
    w: i64,
) -> Result<Vec<InvarianceViolation>, SeriesError> {
    let n = series.n();
    let params = RepParams::integral(a, b);
    let mut out = Vec::new();
    let ks = window(n, w);
    for m in submodules {
        for k in ks.iter().filter(|k| m.contains(k)) {
            let v = series.highest_vector(k)?;
            for x in [Chevalley::E(n), Chevalley::F(n)] {
                let y = series.pi_act(x, &v, &params)?;
                for (c, _) in series.isotypic_decompose(&y)? {
                    if !m.contains(&c) {
                        out.push(InvarianceViolation {
                            submodule: m.name.clone(),
                            k: k.clone(),
                            generator: x.to_string(),
                            component: c,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_shift() {
        let c = canonicalize(&ParamPair::ints(3, -1), 2).unwrap();
        assert_eq!(c.params, ParamPair::ints(1, 1));
        assert_eq!(c.partner, None);
    }
}
