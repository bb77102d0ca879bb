//! Deciding whether an equation has an (injective) solution in the class of
//! a reduced string.
//!
//! A solution is a [`WitnessMatrix`]: every column reduces to `sigma` and
//! every row annihilates the coefficient vector. [`solve_in_class`] searches
//! the product of the per-column expansion automata breadth first, so it is
//! complete: the state graph is finite and an exhausted search is a proof
//! that no witness exists. [`brute_force_oracle`] enumerates matrices
//! directly and exists to test the search.

mod oracle;
mod search;

use alloc::vec::Vec;

use crate::strings::{is_coherent, ReducedString};
use crate::{Error, LinearEquation, Result};

pub use oracle::{brute_force_oracle, OracleVerdict};
pub use search::{solve_in_class, solve_with_distinctness};

/// `k x m` integer matrix, `k >= 1`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WitnessMatrix {
    rows: Vec<Vec<i64>>,
}

impl WitnessMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::argument("witness matrix needs at least one row"));
        };
        let width = first.len();
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::argument("witness rows have different lengths"));
        }
        Ok(WitnessMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<i64>> {
        self.rows
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.width()).map(|j| self.column(j)).collect()
    }

    pub fn has_zero_row(&self) -> bool {
        self.rows.iter().any(|r| r.iter().all(|&v| v == 0))
    }
}

/// Distinctness requirement on the columns of a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distinctness {
    Any,
    /// Not all columns equal.
    NonConstant,
    /// Columns pairwise distinct.
    Injective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Sat,
    Unsat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverVerdict {
    /// Present exactly when a solution exists.
    pub witness: Option<WitnessMatrix>,
    pub states_explored: u64,
    /// Largest breadth-first layer.
    pub frontier_peak: u64,
}

impl SolverVerdict {
    pub fn status(&self) -> SolveStatus {
        if self.witness.is_some() {
            SolveStatus::Sat
        } else {
            SolveStatus::Unsat
        }
    }

    pub fn is_sat(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    /// Cap on distinct search states; exceeding it is
    /// [`Error::Indeterminate`].
    pub max_states: u64,
}

impl SolveLimits {
    pub const DEFAULT_MAX_STATES: u64 = 50_000_000;
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }
}

/// Checks that every column of `matrix` is coherent with `sigma`, every row
/// annihilates the coefficients, and, if `injective`, that the columns are
/// pairwise distinct. Rows of zeros are accepted; see
/// [`verify_canonical_witness`].
pub fn verify_witness(
    eq: &LinearEquation,
    sigma: &ReducedString,
    matrix: &WitnessMatrix,
    injective: bool,
) -> Result<bool> {
    if matrix.width() != eq.arity() {
        return Err(Error::argument(alloc::format!(
            "witness has {} columns, equation has {} variables",
            matrix.width(),
            eq.arity()
        )));
    }
    if matrix.rows().iter().any(|r| eq.evaluate(r) != 0) {
        return Ok(false);
    }
    let columns = matrix.columns();
    if !columns.iter().all(|c| is_coherent(c, sigma)) {
        return Ok(false);
    }
    if injective {
        for (j, a) in columns.iter().enumerate() {
            if columns[j + 1..].iter().any(|b| a == b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`verify_witness`] plus the requirement that no row is all zeros, which
/// holds for every witness the solver produces.
pub fn verify_canonical_witness(
    eq: &LinearEquation,
    sigma: &ReducedString,
    matrix: &WitnessMatrix,
    injective: bool,
) -> Result<bool> {
    Ok(!matrix.has_zero_row() && verify_witness(eq, sigma, matrix, injective)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn eq(c: &[i64]) -> LinearEquation {
        LinearEquation::new(c.to_vec()).unwrap()
    }

    fn sigma(v: &[i64]) -> ReducedString {
        ReducedString::new(v.to_vec()).unwrap()
    }

    fn six_variable_matrix() -> WitnessMatrix {
        WitnessMatrix::new(vec![
            vec![1, 1, 0, 1, 1, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 1, 0, 0, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn six_variable_matrix_verifies() {
        let e = eq(&[4, 2, 3, -5, -1, -2]);
        let m = six_variable_matrix();
        assert!(verify_witness(&e, &sigma(&[1]), &m, true).unwrap());
        assert!(verify_canonical_witness(&e, &sigma(&[1]), &m, true).unwrap());
        for row in m.rows() {
            assert_eq!(e.evaluate(row), 0);
        }
    }

    #[test]
    fn verify_small_cases() {
        let one_row = WitnessMatrix::new(vec![vec![1, 1, 1]]).unwrap();
        assert!(!verify_witness(&eq(&[1, 1, -1]), &sigma(&[1]), &one_row, false).unwrap());
        assert!(verify_witness(&eq(&[2, 3, -5]), &sigma(&[1]), &one_row, false).unwrap());
        assert!(!verify_witness(&eq(&[2, 3, -5]), &sigma(&[1]), &one_row, true).unwrap());
        assert!(verify_witness(&eq(&[1, 1]), &sigma(&[1]), &one_row, false).is_err());
    }

    #[test]
    fn zero_rows_only_fail_canonical_check() {
        let m = WitnessMatrix::new(vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let e = eq(&[2, 3, -5]);
        assert!(verify_witness(&e, &sigma(&[1]), &m, false).unwrap());
        assert!(!verify_canonical_witness(&e, &sigma(&[1]), &m, false).unwrap());
    }

    #[test]
    fn incoherent_column_rejected() {
        let m = WitnessMatrix::new(vec![vec![2, 2], vec![1, 1]]).unwrap();
        assert!(!verify_witness(&eq(&[1, -1]), &sigma(&[1, 2]), &m, false).unwrap());
        assert!(verify_witness(&eq(&[1, -1]), &sigma(&[2, 1]), &m, false).unwrap());
    }

    #[test]
    fn matrix_shape_checks() {
        assert!(WitnessMatrix::new(vec![]).is_err());
        assert!(WitnessMatrix::new(vec![vec![1], vec![1, 2]]).is_err());
    }
}
