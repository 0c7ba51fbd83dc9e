use std::collections::VecDeque;

use serde::Serialize;

use crate::freealg::{AlgebraElement, Gen, LocalElement, Localization};
use crate::scalars::Scalar;

use super::engine::{ActionEngine, LocalAction};
use super::{ActionError, Chevalley, UqSpec};

/// Involution given on generators, extended antilinearly and
/// anti-multiplicatively. `q` is real, so only parameter-free coefficients
/// are handled and conjugation fixes them.
#[derive(Clone, Debug)]
pub struct StarStructure {
    images: Vec<LocalElement>,
    d_star: (Scalar, i64),
}

impl StarStructure {
    /// `images[g]` is the star of generator `g`. The star of the central
    /// denominator must come out as `c D^k`.
    pub fn new(loc: &Localization, images: Vec<LocalElement>) -> Result<Self, ActionError> {
        let pres = loc.presentation();
        assert_eq!(images.len(), pres.num_generators(), "one image per generator");
        let mut s = Self {
            images,
            d_star: (Scalar::one(), 0),
        };
        let ds = s.star_poly(loc, loc.denominator())?;
        s.d_star = loc.as_scaled_d_power(&ds).ok_or(ActionError::StarDenominator)?;
        Ok(s)
    }

    pub fn image(&self, g: Gen) -> &LocalElement {
        &self.images[g as usize]
    }

    /// `D^* = c D^k`.
    pub fn denominator_star(&self) -> &(Scalar, i64) {
        &self.d_star
    }

    pub fn star_word(&self, loc: &Localization, w: &[Gen]) -> LocalElement {
        let mut acc = loc.from_poly(loc.presentation().one());
        for &g in w.iter().rev() {
            acc = loc.mul(&acc, &self.images[g as usize]);
        }
        acc
    }

    pub fn star_poly(&self, loc: &Localization, f: &AlgebraElement) -> Result<LocalElement, ActionError> {
        if !f.is_parameter_free() {
            return Err(ActionError::StarParameters);
        }
        let mut acc = loc.from_poly(loc.presentation().zero());
        for (w, c) in f.terms() {
            let x = self.star_word(loc, w);
            acc = loc.add(&acc, &loc.scale(&x, c));
        }
        Ok(acc)
    }

    /// `(N D^-m)^* = (D^*)^-m N^*`.
    pub fn star(&self, loc: &Localization, f: &LocalElement) -> Result<LocalElement, ActionError> {
        let ns = self.star_poly(loc, &f.num)?;
        if f.m == 0 {
            return Ok(ns);
        }
        let (c, k) = &self.d_star;
        let cm = c.pow(-(f.m as i32)).map_err(|_| ActionError::StarDenominator)?;
        let dpow = loc.d_pow(-k * f.m as i64);
        Ok(loc.scale(&loc.mul(&dpow, &ns), &cm))
    }
}

/// `(S(X))^*` as an operator word, applied right to left: for `E_k` it is
/// `-+ K_k F_k K_k^-1`, for `F_k` it is `-+ K_k E_k K_k^-1`, with the plus
/// sign at the distinguished node.
pub fn s_star_ops(x: Chevalley, spec: &UqSpec) -> Option<(Scalar, Vec<Chevalley>)> {
    let k = x.index();
    let sign = if k == spec.l0 { Scalar::one() } else { Scalar::from_int(-1) };
    match x {
        Chevalley::E(_) => Some((sign, vec![Chevalley::K(k), Chevalley::F(k), Chevalley::KInv(k)])),
        Chevalley::F(_) => Some((sign, vec![Chevalley::K(k), Chevalley::E(k), Chevalley::KInv(k)])),
        _ => None,
    }
}

/// Spread the star from seed generators: whenever `X g = c h` with `h` a
/// generator, `h^* = c^-1 (S(X))^* g^*`. Every reachable derivation of a
/// generator must agree.
pub fn derive_star(
    engine: &ActionEngine,
    loc: &Localization,
    spec: &UqSpec,
    seeds: &[(Gen, LocalElement)],
) -> Result<StarStructure, ActionError> {
    let pres = engine.presentation();
    let la = LocalAction::new(engine, loc)?;
    let n = pres.num_generators();
    let mut known: Vec<Option<LocalElement>> = vec![None; n];
    let mut queue = VecDeque::new();
    for (g, img) in seeds {
        known[*g as usize] = Some(loc.canonical(img.clone()));
        queue.push_back(*g);
    }
    while let Some(g) = queue.pop_front() {
        let gs = known[g as usize].clone().expect("queued generators are known");
        for k in 1..=engine.rank() {
            for x in [Chevalley::E(k), Chevalley::F(k)] {
                let xg = engine.act(x, &pres.gen(g))?;
                let Some((w, c)) = xg.as_single_term() else {
                    continue;
                };
                if w.len() != 1 {
                    continue;
                }
                let h = w[0];
                if !c.is_parameter_free() {
                    return Err(ActionError::StarParameters);
                }
                let (sign, ops) = s_star_ops(x, spec).expect("E or F");
                let img = la.act_seq(&ops, &gs)?;
                let coef = sign.mul(&c.inv().expect("nonzero coefficient"));
                let img = loc.canonical(loc.scale(&img, &coef));
                match &known[h as usize] {
                    None => {
                        known[h as usize] = Some(img);
                        queue.push_back(h);
                    }
                    Some(prev) => {
                        if !loc.equal(prev, &img) {
                            return Err(ActionError::StarInconsistent {
                                generator: pres.label(h).to_string(),
                                detail: format!("via {x} from {}", pres.label(g)),
                            });
                        }
                    }
                }
            }
        }
    }
    let mut images = Vec::with_capacity(n);
    for (g, img) in known.into_iter().enumerate() {
        images.push(img.ok_or_else(|| ActionError::StarUnreached(pres.label(g as Gen).to_string()))?);
    }
    StarStructure::new(loc, images)
}

/// Outcome of one star property check.
#[derive(Clone, Debug, Serialize)]
pub struct StarCheck {
    pub property: String,
    pub subject: String,
    pub ok: bool,
}

/// Anti-multiplicativity on generator pairs, involutivity on generators and
/// equivariance `(X g)^* = (S(X))^* g^*` for every `E_k`, `F_k`, `K_k`.
pub fn verify_star(
    engine: &ActionEngine,
    loc: &Localization,
    spec: &UqSpec,
    star: &StarStructure,
) -> Result<Vec<StarCheck>, ActionError> {
    use rayon::prelude::*;
    let pres = engine.presentation();
    let la = LocalAction::new(engine, loc)?;
    let n = pres.num_generators() as Gen;
    let pairs: Vec<(Gen, Gen)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut out: Vec<StarCheck> = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<StarCheck, ActionError> {
            let prod = pres.normal_form(&[a, b]);
            let lhs = star.star_poly(loc, &prod)?;
            let rhs = loc.mul(star.image(b), star.image(a));
            Ok(StarCheck {
                property: "anti-multiplicative".into(),
                subject: format!("{}.{}", pres.label(a), pres.label(b)),
                ok: loc.equal(&lhs, &rhs),
            })
        })
        .collect::<Result<_, _>>()?;
    for g in 0..n {
        let twice = star.star(loc, star.image(g))?;
        out.push(StarCheck {
            property: "involutive".into(),
            subject: pres.label(g).to_string(),
            ok: loc.equal(&twice, &loc.from_poly(pres.gen(g))),
        });
    }
    for g in 0..n {
        for k in 1..=engine.rank() {
            for x in [Chevalley::E(k), Chevalley::F(k), Chevalley::K(k)] {
                let xg = engine.act(x, &pres.gen(g))?;
                let lhs = star.star_poly(loc, &xg)?;
                let rhs = match s_star_ops(x, spec) {
                    Some((sign, ops)) => loc.scale(&la.act_seq(&ops, star.image(g))?, &sign),
                    // S(K)^* = K^-1
                    None => la.act(Chevalley::KInv(k), star.image(g))?,
                };
                out.push(StarCheck {
                    property: format!("equivariant {x}"),
                    subject: pres.label(g).to_string(),
                    ok: loc.equal(&lhs, &rhs),
                });
            }
        }
    }
    Ok(out)
}
