use num_traits::Zero;

use super::{Scalar, Vector};

/// Outcome of solving `sum_j x_j * cols[j] = rhs` by exact elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    /// Rank of the coefficient matrix (the column family).
    pub rank: usize,
    /// Whether `rhs` lies in the span of the columns.
    pub consistent: bool,
    /// The unique solution, present iff consistent and of full column rank.
    pub solution: Option<Vec<Scalar>>,
}

/// Row-reduce the augmented matrix `[cols | rhs]`.
pub fn solve_columns<const N: usize>(cols: &[Vector<N>], rhs: &Vector<N>) -> LinearSolution {
    let k = cols.len();
    let mut m: Vec<Vec<Scalar>> = (0..N)
        .map(|r| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivots = Vec::with_capacity(k);
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..N).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..=k {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..N {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == N {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = (rank..N).all(|r| m[r][k].is_zero());
    let solution = (consistent && rank == k).then(|| (0..k).map(|i| m[i][k].clone()).collect());
    LinearSolution {
        rank,
        consistent,
        solution,
    }
}

/// Exact determinant of the matrix with the given columns.
pub fn determinant<const N: usize>(cols: &[Vector<N>; N]) -> Scalar {
    let mut m: Vec<Vec<Scalar>> = (0..N).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mut det = Scalar::from_integer(1.into());
    for col in 0..N {
        let Some(p) = (col..N).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..N {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..N {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}
