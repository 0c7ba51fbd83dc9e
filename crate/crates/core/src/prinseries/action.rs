use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::freealg::{AlgebraElement, Presentation};
use crate::qmatrix::QMatAlgebra;
use crate::scalars::Scalar;
use crate::uqaction::Chevalley;

use super::SeriesError;

/// A nonincreasing integer sequence labelling an isotypic component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KVector(pub Vec<i64>);

impl KVector {
    pub fn new(k: Vec<i64>) -> Result<Self, SeriesError> {
        if k.windows(2).any(|w| w[0] < w[1]) {
            return Err(SeriesError::NotMonotone(k));
        }
        Ok(Self(k))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The component `k + c(1, ..., 1)`.
    pub fn shifted(&self, c: i64) -> Self {
        Self(self.0.iter().map(|x| x + c).collect())
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for KVector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let k = t
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad entry `{x}`")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(k).map_err(|e| e.to_string())
    }
}

/// `poly * det^(a + c) * t^(a + b)`; as a vector of the representation
/// space this is `poly * det^c`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryVector {
    pub poly: AlgebraElement,
    pub c: i64,
}

/// The parameters entering `pi`, as the scalars `q^a` and `q^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepParams {
    pub u: Scalar,
    pub v: Scalar,
}

impl RepParams {
    pub fn symbolic() -> Self {
        Self {
            u: Scalar::u(),
            v: Scalar::v(),
        }
    }

    /// `(a, b) -> (-n - b, -n - a)`.
    pub fn partner(n: usize) -> Self {
        let qn = Scalar::q_pow(-(n as i32));
        Self {
            u: qn.mul(&Scalar::v().inv().expect("monomial")),
            v: qn.mul(&Scalar::u().inv().expect("monomial")),
        }
    }

    pub fn integral(a: i64, b: i64) -> Self {
        Self {
            u: Scalar::q_pow(a as i32),
            v: Scalar::q_pow(b as i32),
        }
    }
}

/// `pi_{a,b}` on `C[S(D)]_q` for the quantum `n x n` matrices.
pub struct PrincipalSeries {
    alg: Arc<QMatAlgebra>,
    /// `z^(wedge j)` for `j = 0..=n`.
    minors: Vec<AlgebraElement>,
    pub(super) bases: RwLock<HashMap<(Vec<i64>, Vec<i32>), Arc<Vec<AlgebraElement>>>>,
}

impl fmt::Debug for PrincipalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrincipalSeries").field("n", &self.n()).finish()
    }
}

impl PrincipalSeries {
    pub fn new(n: usize) -> Result<Self, SeriesError> {
        Ok(Self::from_algebra(Arc::new(QMatAlgebra::new(n)?))?)
    }

    pub fn from_algebra(alg: Arc<QMatAlgebra>) -> Result<Self, SeriesError> {
        let n = alg.n();
        let minors = (0..=n)
            .map(|j| {
                let idx: Vec<usize> = (1..=j).collect();
                alg.q_minor(&idx, &idx)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            alg,
            minors,
            bases: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn algebra(&self) -> &Arc<QMatAlgebra> {
        &self.alg
    }

    pub fn presentation(&self) -> &Presentation {
        self.alg.presentation()
    }

    /// `z^(wedge j)`, the leading principal minor of size `j`.
    pub fn leading_minor(&self, j: usize) -> &AlgebraElement {
        &self.minors[j]
    }

    pub fn vector(&self, poly: AlgebraElement, c: i64) -> BoundaryVector {
        BoundaryVector { poly, c }
    }

    fn det_pow(&self, k: u32) -> AlgebraElement {
        self.presentation()
            .pow(self.alg.det(), k)
            .expect("same presentation")
    }

    /// Rewrite at offset `c <= w.c`.
    pub fn lower_to(&self, w: &BoundaryVector, c: i64) -> BoundaryVector {
        assert!(c <= w.c, "can only lower the offset");
        let d = self.det_pow((w.c - c) as u32);
        BoundaryVector {
            poly: self.presentation().mul(&w.poly, &d).expect("same presentation"),
            c,
        }
    }

    /// Divide out as many determinants as possible.
    pub fn canonical(&self, w: &BoundaryVector) -> BoundaryVector {
        if w.poly.is_zero() {
            return BoundaryVector { poly: w.poly.clone(), c: 0 };
        }
        let loc = self.alg.localization();
        let mut out = w.clone();
        while let Some(p) = loc.divide(&out.poly) {
            out = BoundaryVector { poly: p, c: out.c + 1 };
        }
        out
    }

    pub fn add(&self, a: &BoundaryVector, b: &BoundaryVector) -> BoundaryVector {
        let c = a.c.min(b.c);
        let x = self.lower_to(a, c);
        let y = self.lower_to(b, c);
        BoundaryVector { poly: x.poly.add(&y.poly), c }
    }

    pub fn sub(&self, a: &BoundaryVector, b: &BoundaryVector) -> BoundaryVector {
        self.add(a, &self.scale(b, &Scalar::from_int(-1)))
    }

    pub fn scale(&self, a: &BoundaryVector, x: &Scalar) -> BoundaryVector {
        BoundaryVector { poly: a.poly.scale(x), c: a.c }
    }

    pub fn is_zero(&self, a: &BoundaryVector) -> bool {
        a.poly.is_zero()
    }

    pub fn equal(&self, a: &BoundaryVector, b: &BoundaryVector) -> bool {
        self.sub(a, b).poly.is_zero()
    }

    /// `x` with `a = x b`, when one exists.
    pub fn proportionality(&self, a: &BoundaryVector, b: &BoundaryVector) -> Option<Scalar> {
        let c = a.c.min(b.c);
        let x = self.lower_to(a, c).poly;
        let y = self.lower_to(b, c).poly;
        let (w, cy) = y.terms().iter().next()?;
        let r = x.coeff(w).div(cy).ok()?;
        x.sub(&y.scale(&r)).is_zero().then_some(r)
    }

    /// `v^h_k = (z^1)^(k_1-k_2) ... (z^(n-1))^(k_(n-1)-k_n) (z^n)^(k_n)`.
    pub fn highest_vector(&self, k: &KVector) -> Result<BoundaryVector, SeriesError> {
        let n = self.n();
        if k.len() != n {
            return Err(SeriesError::WrongLength { got: k.len(), expected: n });
        }
        let k = KVector::new(k.0.clone())?;
        let p = self.presentation();
        let mut poly = p.one();
        for j in 1..n {
            let e = (k.0[j - 1] - k.0[j]) as u32;
            poly = p.mul(&poly, &p.pow(&self.minors[j], e).expect("same presentation")).expect("same presentation");
        }
        Ok(BoundaryVector { poly, c: k.0[n - 1] })
    }

    /// `pi_{a,b}(x) w`.
    pub fn pi_act(&self, x: Chevalley, w: &BoundaryVector, params: &RepParams) -> Result<BoundaryVector, SeriesError> {
        let n = self.n();
        let eng = self.alg.engine();
        if x.index() != n {
            return Ok(BoundaryVector {
                poly: eng.act(x, &w.poly)?,
                c: w.c,
            });
        }
        let p = self.presentation();
        let one = Scalar::one();
        let q2 = Scalar::q_pow(2);
        let uc = params.u.mul(&Scalar::q_pow(w.c as i32));
        let uc2 = uc.mul(&uc);
        let uv = params.u.mul(&params.v);
        Ok(match x {
            Chevalley::E(_) => {
                let c_det = Scalar::s_pow(1)
                    .neg()
                    .mul(&one.sub(&uc2))
                    .div(&one.sub(&q2))?;
                let c_t = Scalar::s_pow(-3)
                    .mul(&one.sub(&uv.pow(-2)?))
                    .div(&one.sub(&q2.inv()?))?;
                let coef = c_det.add(&uc2.mul(&c_t));
                let kf = eng.act(Chevalley::K(n), &w.poly)?;
                let znn = self.alg.z(n, n);
                let tail = p.mul(&kf, &znn).expect("same presentation").scale(&coef);
                BoundaryVector {
                    poly: eng.act(x, &w.poly)?.add(&tail),
                    c: w.c,
                }
            }
            Chevalley::F(_) => {
                let uc2i = uc2.inv()?;
                let ff = eng.act(x, &w.poly)?;
                let first = p.mul(&ff, self.alg.det()).expect("same presentation").scale(&uc2i);
                let coef = Scalar::s_pow(1)
                    .mul(&one.sub(&uc2i))
                    .div(&one.sub(&q2.inv()?))?;
                let second = p
                    .mul(&w.poly, &self.minors[n - 1])
                    .expect("same presentation")
                    .scale(&coef);
                BoundaryVector {
                    poly: first.add(&second).scale(&uv),
                    c: w.c - 1,
                }
            }
            Chevalley::K(_) => BoundaryVector {
                poly: eng.act(x, &w.poly)?.scale(&uc2.div(&uv)?),
                c: w.c,
            },
            Chevalley::KInv(_) => BoundaryVector {
                poly: eng.act(x, &w.poly)?.scale(&uv.div(&uc2)?),
                c: w.c,
            },
        })
    }

    /// Apply a word of generators right to left.
    pub fn pi_seq(&self, ops: &[Chevalley], w: &BoundaryVector, params: &RepParams) -> Result<BoundaryVector, SeriesError> {
        let mut out = w.clone();
        for &x in ops.iter().rev() {
            out = self.pi_act(x, &out, params)?;
        }
        Ok(out)
    }

    /// `K_j` eigenvalue of `v^h_k` predicted from `k`.
    pub fn predicted_weight(&self, k: &KVector, params: &RepParams) -> Vec<Scalar> {
        let n = self.n();
        (1..2 * n)
            .map(|j| {
                let i = if j < n { j } else { 2 * n - j };
                if j == n {
                    Scalar::q_pow(2 * k.0[n - 1] as i32)
                        .mul(&params.u)
                        .mul(&params.v.inv().expect("monomial"))
                } else {
                    Scalar::q_pow((k.0[i - 1] - k.0[i]) as i32)
                }
            })
            .collect()
    }

    /// Common eigenvalues of `pi(K_j)` on `w`, or `None` if `w` is not a
    /// weight vector.
    pub fn weight_of(&self, w: &BoundaryVector, params: &RepParams) -> Result<Option<Vec<Scalar>>, SeriesError> {
        let mut out = Vec::new();
        for j in 1..2 * self.n() {
            let kw = self.pi_act(Chevalley::K(j), w, params)?;
            match self.proportionality(&kw, w) {
                Some(x) => out.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }
}
