//! Finite integer strings and the coherence relation.
//!
//! Coherence is the smallest equivalence on strings that identifies `()` with
//! `(0)`, `(a)` with `(a, a)`, and is compatible with concatenation. Every
//! class has exactly one reduced member: no zero entries and no two equal
//! adjacent entries. [`reduce`] computes it.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::{Error, Result};

/// An arbitrary finite string of integers, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZString(Vec<i64>);

impl ZString {
    pub fn new(entries: Vec<i64>) -> Self {
        ZString(entries)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn reduce(&self) -> ReducedString {
        reduce(&self.0)
    }
}

impl From<Vec<i64>> for ZString {
    fn from(entries: Vec<i64>) -> Self {
        ZString(entries)
    }
}

impl Deref for ZString {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

/// The canonical member of a coherence class.
///
/// Constructing one from arbitrary entries goes through [`ReducedString::new`],
/// which rejects strings with zeros or adjacent repeats; use [`reduce`] to
/// canonicalize instead.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedString(Vec<i64>);

impl ReducedString {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&a| a == 0) {
            return Err(Error::argument(alloc::format!(
                "string is not reduced: zero entry at position {}",
                pos + 1
            )));
        }
        if let Some(pos) = entries.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::argument(alloc::format!(
                "string is not reduced: positions {} and {} are equal",
                pos + 1,
                pos + 2
            )));
        }
        Ok(ReducedString(entries))
    }

    /// The empty reduced string `()`.
    pub fn empty() -> Self {
        ReducedString(Vec::new())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Entrywise multiple `h * self`. Reducedness is preserved for `h != 0`.
    pub fn scaled(&self, h: i64) -> Result<Self> {
        if h == 0 {
            return Err(Error::argument("scaling factor must be nonzero"));
        }
        let entries = self
            .0
            .iter()
            .map(|&a| a.checked_mul(h).ok_or(Error::Overflow("string scaling")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ReducedString(entries))
    }
}

impl Deref for ReducedString {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl TryFrom<Vec<i64>> for ReducedString {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        ReducedString::new(entries)
    }
}

impl fmt::Display for ReducedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Canonical form: drop every zero, then collapse runs of equal entries.
///
/// Zeros go first so that a run split by zeros, as in `(3, 3, 0, 3)`, still
/// collapses to a single `3`.
pub fn reduce(s: &[i64]) -> ReducedString {
    let mut out: Vec<i64> = Vec::with_capacity(s.len());
    for &a in s {
        if a != 0 && out.last() != Some(&a) {
            out.push(a);
        }
    }
    ReducedString(out)
}

pub fn is_reduced(s: &[i64]) -> bool {
    s.iter().all(|&a| a != 0) && s.windows(2).all(|w| w[0] != w[1])
}

pub fn are_equivalent(s: &[i64], t: &[i64]) -> bool {
    reduce(s) == reduce(t)
}

pub fn is_coherent(s: &[i64], sigma: &ReducedString) -> bool {
    reduce(s) == *sigma
}

/// Values a string coherent with `sigma` may take next, given that the
/// reduced form of what it has emitted so far is `sigma[..state]`.
///
/// Returned in ascending order. Emitting `sigma[state]` (1-based
/// `sigma[state+1]`) advances the state; `0` and the current last entry keep
/// it.
pub fn allowed_emissions(sigma: &ReducedString, state: usize) -> Result<Vec<i64>> {
    if state > sigma.len() {
        return Err(Error::argument(alloc::format!(
            "automaton state {state} out of range 0..={}",
            sigma.len()
        )));
    }
    let mut out = Vec::with_capacity(3);
    out.push(0);
    if state >= 1 {
        out.push(sigma[state - 1]);
    }
    if state < sigma.len() {
        out.push(sigma[state]);
    }
    out.sort_unstable();
    Ok(out)
}

/// One transition of the expansion automaton of `sigma`.
///
/// Returns the next state, or `None` when `value` cannot be emitted from
/// `state`. The caller guarantees `state <= sigma.len()`.
#[inline]
pub fn step(sigma: &[i64], state: usize, value: i64) -> Option<usize> {
    if value == 0 || (state >= 1 && sigma[state - 1] == value) {
        Some(state)
    } else if state < sigma.len() && sigma[state] == value {
        Some(state + 1)
    } else {
        None
    }
}

/// Runs the expansion automaton over `s`, returning the final state or
/// `None` if some entry was rejected. `s` is coherent with `sigma` exactly
/// when this returns `Some(sigma.len())`.
pub fn run_automaton(sigma: &ReducedString, s: &[i64]) -> Option<usize> {
    s.iter().try_fold(0usize, |q, &v| step(sigma, q, v))
}
