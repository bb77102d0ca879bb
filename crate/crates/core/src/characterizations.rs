//! Closed-form criteria that avoid the general search.
//!
//! * `sigma = (1)`: solvable iff every coefficient can be cancelled by a
//!   nonempty set of the others.
//! * Three variables with `c_1 + c_2 + c_3 = 0`: constant solutions always
//!   exist; an injective one exists in the class of `(a_1, ..., a_n)` iff
//!   some adjacent pair `(a_h, a_{h+1})` is parallel to `(c_i, -c_j)` with
//!   `i != j`.
//! * Three variables shaped `c(x_1 - x_2) + d x_3` with `gcd(c, d) = 1`:
//!   solvable for every `sigma` when `|c| = |d| = 1` (Schur's equation) and
//!   for none otherwise.
//!
//! Every test is exact integer arithmetic.

use alloc::vec::Vec;

use crate::equations::{content_normalize, gcd};
use crate::strings::ReducedString;
use crate::{Error, LinearEquation, Result};

/// Whether every `c_j` is cancelled by `c_j + sum_{l in H} c_l = 0` for some
/// nonempty `H` not containing `j`. Exhaustive over subsets.
pub fn sigma_one_criterion(eq: &LinearEquation) -> bool {
    let c = eq.coefficients();
    (0..c.len()).all(|j| {
        let others: Vec<i128> = c
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .map(|(_, &v)| v as i128)
            .collect();
        nonempty_subset_sums_to(&others, -(c[j] as i128))
    })
}

fn nonempty_subset_sums_to(values: &[i128], target: i128) -> bool {
    fn go(values: &[i128], target: i128, sum: i128, taken: bool) -> bool {
        match values.split_first() {
            None => taken && sum == target,
            Some((&v, rest)) => go(rest, target, sum + v, true) || go(rest, target, sum, taken),
        }
    }
    go(values, target, 0, false)
}

/// Which Rado case a three-variable equation falls in. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThreeVarClass {
    /// `c_1 + c_2 + c_3 = 0`.
    TripleSumZero,
    /// `c_i + c_j = 0` for the first such pair.
    PairSumZero {
        pair: (usize, usize),
    },
    NotRado,
}

impl ThreeVarClass {
    /// The zero-sum index set, empty for [`ThreeVarClass::NotRado`].
    pub fn zero_sum_indices(&self) -> Vec<usize> {
        match *self {
            ThreeVarClass::TripleSumZero => alloc::vec![1, 2, 3],
            ThreeVarClass::PairSumZero { pair: (i, j) } => alloc::vec![i, j],
            ThreeVarClass::NotRado => Vec::new(),
        }
    }
}

fn require_three(eq: &LinearEquation) -> Result<[i64; 3]> {
    match *eq.coefficients() {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(Error::argument(alloc::format!(
            "expected a 3-variable equation, got {} variables",
            eq.arity()
        ))),
    }
}

/// The two cases are exclusive: a zero pair and a zero triple together
/// would force the third coefficient to vanish.
pub fn classify_three_var(eq: &LinearEquation) -> Result<ThreeVarClass> {
    let c = require_three(eq)?.map(|v| v as i128);
    if c[0] + c[1] + c[2] == 0 {
        return Ok(ThreeVarClass::TripleSumZero);
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if c[i] + c[j] == 0 {
            return Ok(ThreeVarClass::PairSumZero { pair: (i + 1, j + 1) });
        }
    }
    Ok(ThreeVarClass::NotRado)
}

fn require_case_one(eq: &LinearEquation, sigma: &ReducedString) -> Result<[i64; 3]> {
    let c = require_three(eq)?;
    if eq.coefficient_sum() != 0 {
        return Err(Error::argument("coefficients must sum to zero"));
    }
    if sigma.is_empty() {
        return Err(Error::argument("sigma must be nonempty"));
    }
    Ok(c)
}

/// `(a, b)` is a nonzero multiple of `(c_i, -c_j)` for some `i != j`.
///
/// Equivalently, some arrangement of `(0, a, b)` over the three variables
/// solves the equation: with `0` in slot `k`, `c_p a + c_q b = 0` makes
/// `(a, b)` parallel to `(c_q, -c_p)`. Allowing `i = j` would accept every
/// pair `(a, -a)` regardless of the equation, which the solver refutes.
fn pair_admits_injective(c: &[i64; 3], a: i64, b: i64) -> bool {
    (0..3).any(|i| {
        (0..3).any(|j| {
            // r (a, b) = s (c_i, -c_j) with r, s nonzero  <=>  2x2 determinant
            // vanishes, all four entries being nonzero.
            i != j && (a as i128) * -(c[j] as i128) == (b as i128) * (c[i] as i128)
        })
    })
}

/// Injective solvability of a zero-sum three-variable equation in the class
/// of `sigma`.
pub fn three_var_sum_zero_injective(eq: &LinearEquation, sigma: &ReducedString) -> Result<bool> {
    Ok(reduce_to_adjacent_pair(eq, sigma)?.is_some())
}

/// Least 1-based `h` such that the equation has an injective solution in the
/// class of `(a_h, a_{h+1})`.
pub fn reduce_to_adjacent_pair(eq: &LinearEquation, sigma: &ReducedString) -> Result<Option<usize>> {
    let c = require_case_one(eq, sigma)?;
    Ok(sigma
        .windows(2)
        .position(|w| pair_admits_injective(&c, w[0], w[1]))
        .map(|h| h + 1))
}

/// For `c(x_1 - x_2) + d x_3 = 0` with `gcd(c, d) = 1`: `true` means
/// solvable in the class of every nonempty reduced string, `false` means
/// solvable in none.
pub fn schur_only_test(c: i64, d: i64) -> Result<bool> {
    if c == 0 || d == 0 {
        return Err(Error::argument("c and d must be nonzero"));
    }
    if gcd(c.unsigned_abs(), d.unsigned_abs()) != 1 {
        return Err(Error::argument(alloc::format!("gcd({c}, {d}) != 1")));
    }
    Ok(c.unsigned_abs() == 1 && d.unsigned_abs() == 1)
}

/// A pair-sum-zero equation rewritten as `c(x_1 - x_2) + d x_3` with
/// `gcd(c, d) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchurShape {
    pub c: i64,
    pub d: i64,
    /// Original 1-based index placed in each of the three canonical slots.
    pub permutation: [usize; 3],
    /// Content divided out of the original coefficients.
    pub content: u64,
}

pub fn schur_shape(eq: &LinearEquation) -> Result<SchurShape> {
    let ThreeVarClass::PairSumZero { pair: (i, j) } = classify_three_var(eq)? else {
        return Err(Error::argument("no pair of coefficients sums to zero"));
    };
    let k = 6 - i - j;
    let (normalized, content) = content_normalize(eq);
    let n = normalized.coefficients();
    Ok(SchurShape {
        c: n[i - 1],
        d: n[k - 1],
        permutation: [i, j, k],
        content,
    })
}
