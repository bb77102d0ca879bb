use alloc::vec::Vec;

use super::{verify_witness, WitnessMatrix};
use crate::strings::{reduce, ReducedString};
use crate::{LinearEquation, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Sat(WitnessMatrix),
    /// No witness with at most `max_rows` rows.
    UnsatUpToBound {
        max_rows: usize,
    },
}

/// Direct enumeration of witness matrices with at most `max_rows` rows and
/// entries in `{0} ∪ entries(sigma)`, for differential testing of the
/// solver.
///
/// Nominal cost is `|values|^(k·m)` per row count `k`. Two reductions keep
/// tiny instances cheap without touching the automaton: only nonzero rows
/// that annihilate the coefficients are stacked (a zero row never helps), and
/// a partial matrix is dropped once some column's reduced prefix is not a
/// prefix of `sigma`, since reduction never rewrites an existing prefix.
/// Every candidate is confirmed with [`verify_witness`]. The first hit is
/// the least one by row count, then lexicographic row order.
pub fn brute_force_oracle(
    eq: &LinearEquation,
    sigma: &ReducedString,
    injective: bool,
    max_rows: usize,
) -> Result<OracleVerdict> {
    let m = eq.arity();
    let mut values: Vec<i64> = sigma.to_vec();
    values.push(0);
    values.sort_unstable();
    values.dedup();

    let total = values.len().pow(m as u32);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for mut code in 0..total {
        let mut row = alloc::vec![0i64; m];
        for slot in row.iter_mut().rev() {
            *slot = values[code % values.len()];
            code /= values.len();
        }
        if row.iter().any(|&v| v != 0) && eq.evaluate(&row) == 0 {
            rows.push(row);
        }
    }

    for k in 1..=max_rows {
        let mut stack: Vec<usize> = Vec::with_capacity(k);
        if let Some(found) = extend(eq, sigma, injective, &rows, k, &mut stack)? {
            return Ok(OracleVerdict::Sat(found));
        }
    }
    Ok(OracleVerdict::UnsatUpToBound { max_rows })
}

fn extend(
    eq: &LinearEquation,
    sigma: &ReducedString,
    injective: bool,
    rows: &[Vec<i64>],
    k: usize,
    stack: &mut Vec<usize>,
) -> Result<Option<WitnessMatrix>> {
    if stack.len() == k {
        let m = WitnessMatrix::new(stack.iter().map(|&i| rows[i].clone()).collect())?;
        return Ok(verify_witness(eq, sigma, &m, injective)?.then_some(m));
    }
    for i in 0..rows.len() {
        stack.push(i);
        let viable = (0..eq.arity()).all(|j| {
            let col: Vec<i64> = stack.iter().map(|&r| rows[r][j]).collect();
            sigma.starts_with(&reduce(&col))
        });
        if viable {
            if let Some(found) = extend(eq, sigma, injective, rows, k, stack)? {
                return Ok(Some(found));
            }
        }
        stack.pop();
    }
    Ok(None)
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

    #[test]
    fn oracle_examples() {
        assert!(matches!(
            brute_force_oracle(&eq(&[1, 1, -1]), &sigma(&[1]), false, 2).unwrap(),
            OracleVerdict::Sat(_)
        ));
        assert_eq!(
            brute_force_oracle(&eq(&[1, -1]), &sigma(&[1]), false, 1).unwrap(),
            OracleVerdict::Sat(WitnessMatrix::new(vec![vec![1, 1]]).unwrap())
        );
        assert_eq!(
            brute_force_oracle(&eq(&[1, -1, 2]), &sigma(&[1]), false, 4).unwrap(),
            OracleVerdict::UnsatUpToBound { max_rows: 4 }
        );
    }

    /// Schur's equation has exactly two injective 2-row witnesses over
    /// `{0,1}`; the oracle returns the lexicographically smaller.
    #[test]
    fn oracle_returns_least_schur_witness() {
        let found = brute_force_oracle(&eq(&[1, 1, -1]), &sigma(&[1]), true, 2).unwrap();
        assert_eq!(
            found,
            OracleVerdict::Sat(WitnessMatrix::new(vec![vec![0, 1, 1], vec![1, 0, 1]]).unwrap())
        );
        let other = WitnessMatrix::new(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(verify_witness(&eq(&[1, 1, -1]), &sigma(&[1]), &other, true).unwrap());
    }
}
