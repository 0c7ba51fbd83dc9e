use crate::freealg::{AlgebraElement, Gen, Presentation};
use crate::scalars::Scalar;
use crate::uqaction::{ActionError, ActionTable, Chevalley};

/// Action of `U_q sp_2n` on `z_ij`; node `n` is the long root.
pub fn action_table(pres: &Presentation, n: usize) -> Result<ActionTable, ActionError> {
    let z = |i: usize, j: usize| {
        let (g, c) = super::mirrored(i, j);
        pres.gen(g).scale(&c)
    };
    let zz = |x: (usize, usize), y: (usize, usize)| {
        let (w, c) = super::entry_word(&[x, y]);
        pres.normal_form(&w).scale(&c)
    };
    let sh = Scalar::s_pow(1);
    let sih = Scalar::s_pow(-1);
    let q = Scalar::q_pow;
    let two = q(1).add(&q(-1));
    let entry = |x: Chevalley, gen: Gen| -> AlgebraElement {
        let (i, j) = super::indices(gen);
        let k = x.index();
        match x {
            Chevalley::K(_) | Chevalley::KInv(_) => {
                let e = if k == n {
                    2 * ((i == n) as i32 + (j == n) as i32)
                } else if i == k && j == k {
                    2
                } else if i == k + 1 && j == k + 1 {
                    -2
                } else if (i == k && j < k) || (i > k + 1 && j == k) {
                    1
                } else if (i == k + 1 && j < k) || (i > k + 1 && j == k + 1) {
                    -1
                } else {
                    0
                };
                let e = if matches!(x, Chevalley::K(_)) { e } else { -e };
                z(i, j).scale(&q(e))
            }
            Chevalley::F(_) => {
                if k == n {
                    if i == n && j == n {
                        pres.scalar(q(1))
                    } else {
                        pres.zero()
                    }
                } else if i == k && j == k {
                    z(i + 1, j).scale(&sh.mul(&two))
                } else if i == k && j < k {
                    z(i + 1, j).scale(&sh)
                } else if i > k && j == k {
                    z(i, j + 1).scale(&sh)
                } else {
                    pres.zero()
                }
            }
            Chevalley::E(_) => {
                if k == n {
                    if i == n || j == n {
                        zz((n, n), (i, j)).scale(&q(1).neg())
                    } else {
                        zz((n, i), (n, j)).neg()
                    }
                } else if i == k + 1 && j == k + 1 {
                    z(i, j - 1).scale(&sih.mul(&two))
                } else if i == k + 1 && j < k + 1 {
                    z(i - 1, j).scale(&sih)
                } else if i > k + 1 && j == k + 1 {
                    z(i, j - 1).scale(&sih)
                } else {
                    pres.zero()
                }
            }
        }
    };
    ActionTable::build(pres, n, entry)
}
