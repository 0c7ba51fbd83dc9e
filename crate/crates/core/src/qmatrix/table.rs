use crate::freealg::{AlgebraElement, Gen, Presentation};
use crate::scalars::Scalar;
use crate::uqaction::{ActionError, ActionTable, Chevalley};

/// Action of `U_q sl_2n` on `z_a^b`; node `n` is the distinguished one.
pub fn action_table(pres: &Presentation, n: usize) -> Result<ActionTable, ActionError> {
    let g = |a: usize, b: usize| ((a - 1) * n + (b - 1)) as Gen;
    let z = |a: usize, b: usize| pres.gen(g(a, b));
    let zz = |x: (usize, usize), y: (usize, usize)| pres.normal_form(&[g(x.0, x.1), g(y.0, y.1)]);
    let sh = Scalar::s_pow(1);
    let entry = |x: Chevalley, gen: Gen| -> AlgebraElement {
        let (a, b) = (gen as usize / n + 1, gen as usize % n + 1);
        let k = x.index();
        match x {
            Chevalley::K(_) | Chevalley::KInv(_) => {
                let e = if k == n {
                    (a == n) as i32 + (b == n) as i32
                } else if (k < n && a == k) || (k > n && b == 2 * n - k) {
                    1
                } else if (k < n && a == k + 1) || (k > n && b == 2 * n - k + 1) {
                    -1
                } else {
                    0
                };
                let e = if matches!(x, Chevalley::K(_)) { e } else { -e };
                z(a, b).scale(&Scalar::q_pow(e))
            }
            Chevalley::F(_) => {
                if k == n {
                    if a == n && b == n {
                        pres.scalar(sh.clone())
                    } else {
                        pres.zero()
                    }
                } else if k < n && a == k {
                    z(a + 1, b).scale(&sh)
                } else if k > n && b == 2 * n - k {
                    z(a, b + 1).scale(&sh)
                } else {
                    pres.zero()
                }
            }
            Chevalley::E(_) => {
                if k == n {
                    let m = sh.neg();
                    if a != n && b != n {
                        zz((a, n), (n, b)).scale(&m.mul(&Scalar::q_pow(-1)))
                    } else {
                        zz((n, n), (a, b)).scale(&m)
                    }
                } else if k < n && a == k + 1 {
                    z(a - 1, b).scale(&Scalar::s_pow(-1))
                } else if k > n && b == 2 * n - k + 1 {
                    z(a, b - 1).scale(&Scalar::s_pow(-1))
                } else {
                    pres.zero()
                }
            }
        }
    };
    ActionTable::build(pres, 2 * n - 1, entry)
}
