//! Actions of `U_q g` on presented algebras through the coproduct.

mod engine;
mod star;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freealg::AlgError;

pub use engine::{ActionEngine, ActionTable, LocalAction};
pub use star::{derive_star, s_star_ops, verify_star, StarCheck, StarStructure};
pub use verify::{verify_module_algebra, verify_serre_and_commutator, weight_of, OperatorViolation, Violation, WeightVector};

/// Chevalley generators, indexed from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Chevalley {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Chevalley {
    pub fn index(&self) -> usize {
        match *self {
            Chevalley::E(k) | Chevalley::F(k) | Chevalley::K(k) | Chevalley::KInv(k) => k,
        }
    }

    /// `E_k, F_k, K_k, K_k^-1` for every node.
    pub fn all(rank: usize) -> Vec<Chevalley> {
        (1..=rank)
            .flat_map(|k| [Chevalley::E(k), Chevalley::F(k), Chevalley::K(k), Chevalley::KInv(k)])
            .collect()
    }
}

impl fmt::Display for Chevalley {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chevalley::E(k) => write!(f, "E{k}"),
            Chevalley::F(k) => write!(f, "F{k}"),
            Chevalley::K(k) => write!(f, "K{k}"),
            Chevalley::KInv(k) => write!(f, "K{k}^-1"),
        }
    }
}

impl std::str::FromStr for Chevalley {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad Chevalley generator `{s}`");
        let (head, rest) = s.split_at(1.min(s.len()));
        let (num, inv) = match rest.strip_suffix("^-1") {
            Some(r) => (r, true),
            None => (rest, false),
        };
        let k: usize = num.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match (head, inv) {
            ("E", false) => Ok(Chevalley::E(k)),
            ("F", false) => Ok(Chevalley::F(k)),
            ("K", false) => Ok(Chevalley::K(k)),
            ("K", true) => Ok(Chevalley::KInv(k)),
            _ => Err(bad()),
        }
    }
}

/// Cartan data and the distinguished node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqSpec {
    pub cartan: Vec<Vec<i32>>,
    pub d: Vec<i32>,
    pub l0: usize,
}

impl UqSpec {
    /// `sl_{2n}`, distinguished node `n`.
    pub fn type_a(n: usize) -> Self {
        let r = 2 * n - 1;
        let mut cartan = vec![vec![0; r]; r];
        for i in 0..r {
            cartan[i][i] = 2;
            if i + 1 < r {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        Self {
            cartan,
            d: vec![1; r],
            l0: n,
        }
    }

    /// `sp_{2n}` with the long simple root last.
    pub fn type_c(n: usize) -> Self {
        let mut cartan = vec![vec![0; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
            if i + 1 < n {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        if n >= 2 {
            cartan[n - 2][n - 1] = -2;
            cartan[n - 1][n - 2] = -1;
        }
        let mut d = vec![1; n];
        d[n - 1] = 2;
        if n == 1 {
            d[0] = 2;
        }
        Self { cartan, d, l0: n }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `d_i a_ij` must be symmetric.
    pub fn is_symmetrizable(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| self.d[i] * self.cartan[i][j] == self.d[j] * self.cartan[j][i]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("no table entry for {0}")]
    OutsideTable(Chevalley),
    #[error("K action on {generator} is not diagonal")]
    NotDiagonal { generator: String },
    #[error("K and K^-1 entries on {generator} are not reciprocal")]
    NotReciprocal { generator: String },
    #[error("element is not a weight vector: {0}")]
    MixedWeights(String),
    #[error("zero has no weight")]
    ZeroVector,
    #[error("{0}")]
    Algebra(#[from] AlgError),
    #[error("star images inconsistent for {generator}: {detail}")]
    StarInconsistent { generator: String, detail: String },
    #[error("star could not reach {0}")]
    StarUnreached(String),
    #[error("symbolic star needs parameter-free coefficients")]
    StarParameters,
    #[error("star of the denominator is not a multiple of a power of it")]
    StarDenominator,
}
