//! Exact Gauss-Jordan elimination and the linear solvers built on it.
//!
//! Pivot choice is deterministic: the leftmost unresolved column, first
//! nonzero entry from the top. No numerical pivoting is needed since every
//! field here is exact.
//!
//! Matrix equations are kept in the "unknown on the left" form `X * S = B`.
//! Row `t` of `X` solves the system `x * S = b_t` independently, which is
//! `S^T x^T = b_t^T` column-wise; all rows share the coefficient matrix `S`.

use crate::algebra::{Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Result of solving `X * S = B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub consistent: bool,
    /// Particular solution with every free variable set to zero.
    pub particular: Option<Matrix>,
    /// Degrees of freedom of the homogeneous system `X * S = 0`, summed over
    /// all rows of `X`.
    pub nullspace_dim: usize,
    /// `rank(S)`.
    pub rank: usize,
    /// `rank` of `S` with the rows of `B` stacked below.
    pub rank_augmented: usize,
}

impl SolveOutcome {
    /// Splits a particular solution `[X_1 | X_2 | ...]` into its `width`-column blocks.
    pub fn particular_blocks(&self, width: usize) -> Option<Vec<Matrix>> {
        let x = self.particular.as_ref()?;
        assert!(width > 0 && x.cols() % width == 0, "block width must divide the column count");
        Some((0..x.cols() / width).map(|j| x.column_block(j * width, (j + 1) * width)).collect())
    }
}

pub fn rref(m: &Matrix) -> RrefResult {
    let field = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.row_vecs();
    let mut pivot_columns = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for e in a[r].iter_mut() {
            *e = &inv * e;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (entry, pivot) in row.iter_mut().zip(&pivot_row).skip(c) {
                if pivot.is_zero() {
                    continue;
                }
                let delta = &factor * pivot;
                *entry = &*entry - &delta;
            }
        }
        pivot_columns.push(c);
        r += 1;
    }
    let rref = Matrix::from_rows(field, a).unwrap_or_else(|_| Matrix::zero(rows, cols, field));
    RrefResult { rref, rank: pivot_columns.len(), pivot_columns }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let k = m.rows();
    let aug = m.hstack(&Matrix::identity(k, m.field())).ok()?;
    let red = rref(&aug);
    if red.pivot_columns.iter().take_while(|&&c| c < k).count() < k {
        return None;
    }
    Some(red.rref.column_block(k, 2 * k))
}

/// Basis of `{ y : m * y = 0 }`, one column vector per free column of `rref(m)`.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let field = m.field();
    let red = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !red.pivot_columns.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![field.zero(); m.cols()];
            y[f] = field.one();
            for (row, &pc) in red.pivot_columns.iter().enumerate() {
                y[pc] = -red.rref.get(row, f);
            }
            y
        })
        .collect()
}

/// Basis of `{ v : v * s = 0 }` as `1 x rows(s)` matrices.
pub fn left_nullspace(s: &Matrix) -> Vec<Matrix> {
    nullspace_basis(&s.transpose())
        .into_iter()
        .map(|v| Matrix::from_rows(s.field(), vec![v]).expect("single row"))
        .collect()
}

/// Solves `X * s = b` for `X` (`rows(b) x rows(s)`), deciding consistency by
/// comparing `rank(s)` with the rank of `s` stacked over `b`.
pub fn solve_left(s: &Matrix, b: &Matrix) -> Result<SolveOutcome> {
    if s.cols() != b.cols() || s.field() != b.field() {
        return Err(Error::ShapeMismatch(format!(
            "X*S = B needs matching column counts: S is {}x{}, B is {}x{}",
            s.rows(),
            s.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let field = s.field();
    let unknowns = s.rows();
    let rank_s = rank(s);
    let rank_augmented = rank(&s.vstack(b)?);
    let nullspace_dim = b.rows() * (unknowns - rank_s);
    if rank_s != rank_augmented {
        return Ok(SolveOutcome {
            consistent: false,
            particular: None,
            nullspace_dim,
            rank: rank_s,
            rank_augmented,
        });
    }

    // Column form: S^T y_t = b_t^T for every row t of B, all at once.
    let red = rref(&s.transpose().hstack(&b.transpose())?);
    let mut x = Matrix::zero(b.rows(), unknowns, field);
    for (row, &pc) in red.pivot_columns.iter().enumerate() {
        if pc >= unknowns {
            return Err(Error::Invariant(
                "rank test reported consistency but elimination found a pivot in the right-hand side"
                    .into(),
            ));
        }
        for t in 0..b.rows() {
            x.set(t, pc, red.rref.get(row, unknowns + t).clone());
        }
    }
    Ok(SolveOutcome {
        consistent: true,
        particular: Some(x),
        nullspace_dim,
        rank: rank_s,
        rank_augmented,
    })
}

/// Solves `X * a = b` for square `a`, `b` of equal size.
pub fn solve_xa_eq_b(a: &Matrix, b: &Matrix) -> Result<SolveOutcome> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "expected equal square matrices, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    solve_left(a, b)
}

/// Solves `sum_j X_j * A_j = rhs` jointly for all `X_j`.
///
/// The unknowns are concatenated as `[X_1 | X_2 | ...]` against the blocks
/// stacked vertically; use [`SolveOutcome::particular_blocks`] to split the
/// answer back into one matrix per block.
pub fn solve_stacked(blocks: &[Matrix], rhs: &Matrix) -> Result<SolveOutcome> {
    let Some(first) = blocks.first() else {
        return Err(Error::ShapeMismatch("at least one block is required".into()));
    };
    let k = rhs.rows();
    if !rhs.is_square() || blocks.iter().any(|m| !m.is_square() || m.rows() != k) {
        return Err(Error::ShapeMismatch("all blocks and the right-hand side must be kxk".into()));
    }
    let mut stacked = first.clone();
    for m in &blocks[1..] {
        stacked = stacked.vstack(m)?;
    }
    solve_left(&stacked, rhs)
}
