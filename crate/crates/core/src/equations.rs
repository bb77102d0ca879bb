//! Linear homogeneous equations `c_1 x_1 + ... + c_m x_m = 0`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Coefficient vector of a linear homogeneous equation. At least two
/// variables, every coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEquation {
    coefficients: Vec<i64>,
}

impl LinearEquation {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::argument(alloc::format!(
                "an equation needs at least 2 variables, got {}",
                coefficients.len()
            )));
        }
        if let Some(i) = coefficients.iter().position(|&c| c == 0) {
            return Err(Error::argument(alloc::format!("coefficient of x{} is zero", i + 1)));
        }
        Ok(LinearEquation { coefficients })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    /// Exact value of `sum c_i * v_i`. `v` must have one entry per variable.
    pub fn evaluate(&self, v: &[i64]) -> i128 {
        debug_assert_eq!(v.len(), self.coefficients.len());
        self.coefficients
            .iter()
            .zip(v)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum()
    }

    pub fn coefficient_sum(&self) -> i128 {
        self.coefficients.iter().map(|&c| c as i128).sum()
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let coefficients = self
            .coefficients
            .iter()
            .map(|&c| c.checked_mul(k).ok_or(Error::Overflow("equation scaling")))
            .collect::<Result<Vec<_>>>()?;
        LinearEquation::new(coefficients)
    }

    /// Reorders variables: variable `i` of the result is variable `perm[i]`
    /// of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let m = self.arity();
        let mut seen = alloc::vec![false; m];
        if perm.len() != m || perm.iter().any(|&p| p >= m || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::argument("not a permutation of the variables"));
        }
        Ok(LinearEquation {
            coefficients: perm.iter().map(|&p| self.coefficients[p]).collect(),
        })
    }
}

impl fmt::Display for LinearEquation {
    /// Canonical text form, e.g. `4x1+2x2-x3`. Parses back to `self`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.coefficients.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            f.write_str(sign)?;
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

/// Parses text such as `4x1+2x2+3x3-5x4-x5-2x6=0`.
///
/// Terms are optionally signed integer coefficients (omitted means 1)
/// followed by `x<index>`, with an optional `*` between. Whitespace is
/// ignored and a trailing `= 0` is optional. Indices `1..=m` must each occur
/// exactly once, in any order.
pub fn parse_equation(text: &str) -> Result<LinearEquation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lhs = match compact.split_once('=') {
        Some((lhs, rhs)) => {
            if rhs != "0" {
                return Err(Error::parse(alloc::format!("={rhs}"), "right-hand side must be 0"));
            }
            lhs
        }
        None => compact.as_str(),
    };
    if lhs.is_empty() {
        return Err(Error::parse(text.to_string(), "empty equation"));
    }

    // Split into signed terms at every +/- that is not the leading char.
    let mut terms: Vec<&str> = Vec::new();
    let mut start = 0;
    for (i, ch) in lhs.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&lhs[start..i]);
            start = i;
        }
    }
    terms.push(&lhs[start..]);

    let mut by_index: Vec<(usize, i64, &str)> = Vec::with_capacity(terms.len());
    for term in terms {
        let (index, coef) = parse_term(term)?;
        if coef == 0 {
            return Err(Error::parse(term, "zero coefficient"));
        }
        if by_index.iter().any(|&(i, _, _)| i == index) {
            return Err(Error::parse(term, alloc::format!("variable x{index} repeated")));
        }
        by_index.push((index, coef, term));
    }
    by_index.sort_unstable_by_key(|&(i, _, _)| i);
    for (pos, &(index, _, term)) in by_index.iter().enumerate() {
        if index != pos + 1 {
            return Err(Error::parse(term, alloc::format!("variable x{} missing", pos + 1)));
        }
    }
    LinearEquation::new(by_index.into_iter().map(|(_, c, _)| c).collect())
        .map_err(|e| Error::parse(text.to_string(), e.to_string()))
}

fn parse_term(term: &str) -> Result<(usize, i64)> {
    let (negative, body) = match term.as_bytes().first() {
        Some(b'+') => (false, &term[1..]),
        Some(b'-') => (true, &term[1..]),
        _ => (false, term),
    };
    let Some(xpos) = body.find(['x', 'X']) else {
        return Err(Error::parse(term, "expected a variable x<index>"));
    };
    let mut coef_text = &body[..xpos];
    if let Some(stripped) = coef_text.strip_suffix('*') {
        coef_text = stripped;
    }
    let index_text = &body[xpos + 1..];

    let magnitude: i64 = if coef_text.is_empty() {
        1
    } else if coef_text.bytes().all(|b| b.is_ascii_digit()) {
        coef_text
            .parse()
            .map_err(|_| Error::parse(term, "coefficient out of range"))?
    } else {
        return Err(Error::parse(term, "malformed coefficient"));
    };
    if index_text.is_empty() || !index_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(term, "malformed variable index"));
    }
    let index: usize = index_text
        .parse()
        .map_err(|_| Error::parse(term, "variable index out of range"))?;
    if index == 0 {
        return Err(Error::parse(term, "variable indices start at 1"));
    }
    Ok((index, if negative { -magnitude } else { magnitude }))
}

/// Rado's condition: some nonempty set of coefficients sums to zero.
///
/// Returns the witness set (1-based indices, ascending) that is least in
/// lexicographic order of index sequences, so `[1, 2, 3]` precedes `[1, 3]`.
/// Enumerates up to `2^m - 1` subsets; intended for `m` up to about 20.
pub fn is_rado(eq: &LinearEquation) -> Option<Vec<usize>> {
    fn dfs(c: &[i64], from: usize, sum: i128, chosen: &mut Vec<usize>) -> bool {
        for i in from..c.len() {
            chosen.push(i + 1);
            let s = sum + c[i] as i128;
            if s == 0 || dfs(c, i + 1, s, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    dfs(eq.coefficients(), 0, 0, &mut chosen).then_some(chosen)
}

/// Divides out the positive gcd of the coefficients.
pub fn content_normalize(eq: &LinearEquation) -> (LinearEquation, u64) {
    let g = eq.coefficients().iter().fold(0u64, |g, &c| gcd(g, c.unsigned_abs()));
    let coefficients = eq
        .coefficients()
        .iter()
        .map(|&c| (c as i128 / g as i128) as i64)
        .collect();
    (LinearEquation { coefficients }, g)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
