//! Exact Gaussian elimination, enough to compute solution spaces of small
//! linear systems over a field.

use crate::scalar::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<S: Scalar>(rows: &mut [Vec<S>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..cols {
                    let v = rows[r][j].clone() * factor.clone();
                    rows[i][j] = rows[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<S: Scalar>(matrix: &[Vec<S>]) -> usize {
    let mut m = matrix.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{x : M x = 0}`, one vector per free column.
pub fn nullspace<S: Scalar>(matrix: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    let mut m = matrix.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); cols];
            v[f] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational as r, Rational};

    #[test]
    fn rank_and_kernel() {
        let m: Vec<Vec<Rational>> = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
        ];
        assert_eq!(rank(&m), 2);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&k[0]).fold(r(0), |acc, (a, b)| acc + a * b);
            assert_eq!(dot, r(0));
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        assert!(nullspace(&m, 2).is_empty());
        assert_eq!(nullspace::<Rational>(&[], 3).len(), 3);
    }
}
