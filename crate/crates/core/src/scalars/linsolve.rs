//! Gaussian elimination over the scalar field.

use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum LinSolve {
    /// A particular solution with free variables set to zero.
    Solved {
        x: Vec<Scalar>,
        rank: usize,
        free: Vec<usize>,
    },
    Inconsistent,
}

impl LinSolve {
    pub fn solution(&self) -> Option<&[Scalar]> {
        match self {
            LinSolve::Solved { x, .. } => Some(x),
            LinSolve::Inconsistent => None,
        }
    }
}

fn weight(x: &Scalar) -> usize {
    x.numer().len() + x.denom().len()
}

/// Reduce `rows` (each of length `ncols`, plus an augmented tail) to reduced
/// row echelon form; returns pivot columns.
fn rref(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| weight(&rows[i][c]))
        else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve `a x = b`.
pub fn solve_linear(a: &[Vec<Scalar>], b: &[Scalar]) -> LinSolve {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut rows: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols);
    let rank = pivots.len();
    if rows[rank..].iter().any(|r| !r[ncols].is_zero()) {
        return LinSolve::Inconsistent;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][ncols].clone();
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    LinSolve::Solved { x, rank, free }
}

/// Rank of a matrix.
pub fn rank(a: &[Vec<Scalar>]) -> usize {
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut rows = a.to_vec();
    rref(&mut rows, ncols).len()
}
