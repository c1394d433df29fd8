//! Exact rational linear feasibility and elimination utilities.
//!
//! Everything here is dense and exact: a phase-1 simplex with Bland's rule
//! decides convex-combination membership with no tolerances anywhere, and
//! Gaussian elimination supplies forced solutions and kernel vectors for
//! certificate diagnostics and Caratheodory reduction.

use num_bigint::BigInt;

use crate::rational::Rational;

/// Finds `lambda >= 0` with `sum_k lambda_k * columns[k] = target` and
/// `sum lambda <= 1` (when `allow_slack`, i.e. the origin is an implicit
/// vertex) or `sum lambda = 1` otherwise. Returns `None` iff infeasible.
///
/// Deterministic: Bland's rule with fixed column order.
pub(crate) fn convex_combination(
    columns: &[Vec<BigInt>],
    target: &[BigInt],
    allow_slack: bool,
) -> Option<Vec<Rational>> {
    let k = columns.len();
    let dim = target.len();
    let structural = k + usize::from(allow_slack);
    let rows = dim + 1;

    // A z = b over z >= 0, where z = (lambda, [sigma]).
    let mut matrix = vec![vec![Rational::zero(); structural]; rows];
    let mut rhs = vec![Rational::zero(); rows];
    for (r, t) in target.iter().enumerate() {
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), dim);
            matrix[r][c] = Rational::from_int(col[r].clone());
        }
        rhs[r] = Rational::from_int(t.clone());
    }
    for cell in matrix[dim].iter_mut().take(k) {
        *cell = Rational::one();
    }
    if allow_slack {
        matrix[dim][k] = Rational::one();
    }
    rhs[dim] = Rational::one();

    let values = phase_one(matrix, rhs)?;
    Some(values[..k].to_vec())
}

/// Phase-1 simplex: artificial variables, minimize their sum under Bland's
/// rule. Returns the structural variable values of a basic feasible solution,
/// or `None` when the system `A z = b, z >= 0` is infeasible.
fn phase_one(mut matrix: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = matrix.len();
    let structural = matrix.first().map(Vec::len).unwrap_or(0);
    let total = structural + rows;

    for r in 0..rows {
        if rhs[r].is_negative() {
            for v in matrix[r].iter_mut() {
                *v = -&*v;
            }
            rhs[r] = -&rhs[r];
        }
    }

    // Tableau rows: structural columns, artificial identity, rhs.
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = Vec::with_capacity(total + 1);
        row.append(&mut matrix[r]);
        for a in 0..rows {
            row.push(if a == r {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(rhs[r].clone());
        tab.push(row);
    }
    let mut basis: Vec<usize> = (structural..total).collect();

    // Phase-1 reduced costs: cost[j] = c_j - sum of rows over basic columns;
    // with the all-artificial basis this is -sum_r tab[r][j] on structural
    // columns and 0 on artificials. The last cell tracks -objective.
    let mut cost = vec![Rational::zero(); total + 1];
    for j in (0..structural).chain([total]) {
        let mut acc = Rational::zero();
        for row in &tab {
            acc += &row[j];
        }
        cost[j] = -acc;
    }

    // Bland: entering column = lowest index with negative reduced cost.
    while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
        // Leaving row: minimum ratio, ties by lowest basis variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..rows {
            if !tab[r][enter].is_negative() && !tab[r][enter].is_zero() {
                let ratio = &tab[r][total] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pivot_row, _) = leave.expect("phase-1 objective is bounded below");

        let pivot = tab[pivot_row][enter].clone();
        for v in tab[pivot_row].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_values = tab[pivot_row].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r != pivot_row && !row[enter].is_zero() {
                let factor = row[enter].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_values) {
                    *cell = &*cell - &(&factor * p);
                }
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (cell, p) in cost.iter_mut().zip(&pivot_values) {
                *cell = &*cell - &(&factor * p);
            }
        }
        basis[pivot_row] = enter;
    }

    // cost[total] = -objective = -(sum of artificial values).
    if !cost[total].is_zero() {
        return None;
    }
    let mut values = vec![Rational::zero(); structural];
    for r in 0..rows {
        if basis[r] < structural {
            values[basis[r]] = tab[r][total].clone();
        } else {
            debug_assert!(tab[r][total].is_zero(), "artificial basic at nonzero value");
        }
    }
    Some(values)
}

/// Solves `sum_k lambda_k * columns[k] = target` over the rationals with no
/// sign constraint. Returns the solution only when it is unique (full column
/// rank and consistent); `None` when inconsistent or underdetermined.
pub(crate) fn unique_equality_solution(
    columns: &[Vec<BigInt>],
    target: &[BigInt],
) -> Option<Vec<Rational>> {
    let k = columns.len();
    let dim = target.len();
    if k == 0 {
        return None;
    }
    let mut aug = vec![vec![Rational::zero(); k + 1]; dim];
    for r in 0..dim {
        for (c, col) in columns.iter().enumerate() {
            aug[r][c] = Rational::from_int(col[r].clone());
        }
        aug[r][k] = Rational::from_int(target[r].clone());
    }
    let (rank, pivots) = row_reduce(&mut aug, k);
    // Inconsistent: a zero row with nonzero rhs.
    for row in aug.iter().skip(rank) {
        if !row[k].is_zero() {
            return None;
        }
    }
    if rank < k {
        return None;
    }
    let mut out = vec![Rational::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        out[col] = aug[r][k].clone();
    }
    Some(out)
}

/// A nontrivial rational dependency `sum_k gamma_k * columns[k] = 0`, or
/// `None` when the columns are linearly independent.
pub(crate) fn kernel_vector(columns: &[Vec<BigInt>]) -> Option<Vec<Rational>> {
    let k = columns.len();
    if k == 0 {
        return None;
    }
    let dim = columns[0].len();
    let mut mat = vec![vec![Rational::zero(); k]; dim];
    for r in 0..dim {
        for (c, col) in columns.iter().enumerate() {
            mat[r][c] = Rational::from_int(col[r].clone());
        }
    }
    let (_, pivots) = row_reduce(&mut mat, k);
    let free = (0..k).find(|c| !pivots.contains(c))?;
    let mut gamma = vec![Rational::zero(); k];
    gamma[free] = Rational::one();
    for (r, &col) in pivots.iter().enumerate() {
        gamma[col] = -&mat[r][free];
    }
    Some(gamma)
}

/// Reduced row echelon over the first `cols` columns (extra columns ride
/// along). Returns the rank and the pivot column of each pivot row.
fn row_reduce(mat: &mut [Vec<Rational>], cols: usize) -> (usize, Vec<usize>) {
    let rows = mat.len();
    let width = mat.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col].clone();
        for v in mat[rank][col..width].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_values = mat[rank][col..width].to_vec();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row[col..width].iter_mut().zip(&pivot_values) {
                    *cell = &*cell - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, pivots)
}
