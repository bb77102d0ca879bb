//! Breadth-first search over the product of expansion automata.
//!
//! A search state records, per column, how much of `sigma` that column has
//! emitted (`0..=n`), and in injective mode one bit per column pair that is
//! set once the two columns have differed in some row. Both components only
//! grow, so the graph is a DAG apart from self-loops, and every reachable
//! state other than the initial one has a self-loop: repeating the row that
//! entered it changes nothing.
//!
//! The witness contract is: fewest rows, then lexicographically least
//! sequence of rows. The breadth-first pass only finds the row count `k`.
//! Parent pointers would not give the least sequence, because a lex-smaller
//! sequence can pass through a state later than its shortest distance. The
//! witness is instead rebuilt greedily, taking at each step the least row
//! after which an accepting state is still reachable in exactly the
//! remaining number of rows.

use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

use super::{Distinctness, SolveLimits, SolverVerdict, WitnessMatrix};
use crate::strings::ReducedString;
use crate::{Error, LinearEquation, Result};

type Key = u128;

struct Space<'a> {
    coefficients: &'a [i64],
    sigma: &'a [i64],
    m: usize,
    mode: Distinctness,
    /// `(j, l)` for every unordered column pair, in bit order.
    pairs: Vec<(usize, usize)>,
    radix: u128,
    /// Multiplier of the diff-bit field in the packed key.
    bits_base: u128,
}

#[derive(Clone, PartialEq, Eq)]
struct State {
    columns: Vec<usize>,
    diff: u128,
}

impl<'a> Space<'a> {
    fn new(eq: &'a LinearEquation, sigma: &'a ReducedString, mode: Distinctness) -> Result<Self> {
        let m = eq.arity();
        let pairs: Vec<(usize, usize)> = if mode != Distinctness::Any {
            (0..m).flat_map(|j| (j + 1..m).map(move |l| (j, l))).collect()
        } else {
            Vec::new()
        };
        let too_large = Error::Indeterminate {
            reason: "state-space-too-large",
            states_explored: 0,
        };
        let radix = sigma.len() as u128 + 1;
        let bits_base = (0..m).try_fold(1u128, |acc, _| acc.checked_mul(radix));
        let bits_base = bits_base.ok_or(too_large.clone())?;
        if pairs.len() >= 128 || bits_base.checked_mul(1u128 << pairs.len()).is_none() {
            return Err(too_large);
        }
        Ok(Space {
            coefficients: eq.coefficients(),
            sigma: sigma.as_slice(),
            m,
            mode,
            pairs,
            radix,
            bits_base,
        })
    }

    fn encode(&self, s: &State) -> Key {
        let cols = s
            .columns
            .iter()
            .rev()
            .fold(0u128, |acc, &q| acc * self.radix + q as u128);
        cols + s.diff * self.bits_base
    }

    fn decode(&self, mut key: Key) -> State {
        let diff = key / self.bits_base;
        key %= self.bits_base;
        let columns = (0..self.m)
            .map(|_| {
                let q = (key % self.radix) as usize;
                key /= self.radix;
                q
            })
            .collect();
        State { columns, diff }
    }

    fn initial(&self) -> State {
        State {
            columns: alloc::vec![0; self.m],
            diff: 0,
        }
    }

    fn accepting(&self, s: &State) -> bool {
        let n = self.sigma.len();
        s.columns.iter().all(|&q| q == n)
            && match self.mode {
                Distinctness::Any => true,
                Distinctness::NonConstant => s.diff != 0,
                Distinctness::Injective => s.diff.count_ones() as usize == self.pairs.len(),
            }
    }

    /// Calls `visit(row, successor)` for every nonzero annihilating row that
    /// all columns can emit from `s`, in ascending lexicographic row order.
    fn for_each_successor(&self, s: &State, mut visit: impl FnMut(&[i64], State) -> bool) -> bool {
        let m = self.m;
        // Per column: (value, next state) sorted by value.
        let mut options: Vec<Vec<(i64, usize)>> = Vec::with_capacity(m);
        for &q in &s.columns {
            let mut opts: Vec<(i64, usize)> = Vec::with_capacity(3);
            opts.push((0, q));
            if q >= 1 {
                opts.push((self.sigma[q - 1], q));
            }
            if q < self.sigma.len() {
                opts.push((self.sigma[q], q + 1));
            }
            opts.sort_unstable();
            options.push(opts);
        }
        // Reachable range of sum_{l >= j} c_l v_l, for pruning.
        let mut suffix_min = alloc::vec![0i128; m + 1];
        let mut suffix_max = alloc::vec![0i128; m + 1];
        for j in (0..m).rev() {
            let c = self.coefficients[j] as i128;
            let terms = options[j].iter().map(|&(v, _)| c * v as i128);
            suffix_min[j] = suffix_min[j + 1] + terms.clone().min().unwrap_or(0);
            suffix_max[j] = suffix_max[j + 1] + terms.max().unwrap_or(0);
        }

        let mut row = alloc::vec![0i64; m];
        let mut next = alloc::vec![0usize; m];
        let ctx = RowSearch {
            space: self,
            options: &options,
            suffix_min: &suffix_min,
            suffix_max: &suffix_max,
        };
        ctx.descend(0, 0, false, &mut row, &mut next, s, &mut visit)
    }

    fn successor_diff(&self, diff: u128, row: &[i64]) -> u128 {
        let mut d = diff;
        for (bit, &(j, l)) in self.pairs.iter().enumerate() {
            if row[j] != row[l] {
                d |= 1u128 << bit;
            }
        }
        d
    }
}

struct RowSearch<'s, 'a> {
    space: &'s Space<'a>,
    options: &'s [Vec<(i64, usize)>],
    suffix_min: &'s [i128],
    suffix_max: &'s [i128],
}

impl RowSearch<'_, '_> {
    /// Returns false if `visit` asked to stop.
    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        j: usize,
        partial: i128,
        nonzero: bool,
        row: &mut [i64],
        next: &mut [usize],
        from: &State,
        visit: &mut impl FnMut(&[i64], State) -> bool,
    ) -> bool {
        let m = self.space.m;
        if j == m {
            if partial != 0 || !nonzero {
                return true;
            }
            let succ = State {
                columns: next.to_vec(),
                diff: self.space.successor_diff(from.diff, row),
            };
            return visit(row, succ);
        }
        if partial + self.suffix_min[j] > 0 || partial + self.suffix_max[j] < 0 {
            return true;
        }
        let c = self.space.coefficients[j] as i128;
        for &(v, q) in &self.options[j] {
            row[j] = v;
            next[j] = q;
            if !self.descend(
                j + 1,
                partial + c * v as i128,
                nonzero || v != 0,
                row,
                next,
                from,
                visit,
            ) {
                return false;
            }
        }
        true
    }
}

/// Decides whether `eq` has a solution (injective if requested) in the class
/// of `sigma`, returning the canonical witness when it does.
///
/// The canonical witness has the fewest rows, ties broken by the
/// lexicographically least sequence of rows. It never contains a zero row.
/// Hitting `limits` yields [`Error::Indeterminate`].
pub fn solve_in_class(
    eq: &LinearEquation,
    sigma: &ReducedString,
    injective: bool,
    limits: SolveLimits,
) -> Result<SolverVerdict> {
    let mode = if injective {
        Distinctness::Injective
    } else {
        Distinctness::Any
    };
    solve_with_distinctness(eq, sigma, mode, limits)
}

/// [`solve_in_class`] with a choice of how distinct the columns must be.
pub fn solve_with_distinctness(
    eq: &LinearEquation,
    sigma: &ReducedString,
    mode: Distinctness,
    limits: SolveLimits,
) -> Result<SolverVerdict> {
    if sigma.is_empty() {
        return Err(Error::argument("sigma must be a nonempty reduced string"));
    }
    let space = Space::new(eq, sigma, mode)?;
    let init = space.initial();

    let mut visited: HashSet<Key> = HashSet::new();
    visited.insert(space.encode(&init));
    let mut layer: Vec<Key> = alloc::vec![space.encode(&init)];
    let mut frontier_peak = 1u64;
    let mut depth = 0usize;

    let found = loop {
        if layer.iter().any(|&k| space.accepting(&space.decode(k))) {
            break true;
        }
        if layer.is_empty() {
            break false;
        }
        let mut next_layer = Vec::new();
        let mut overflow = false;
        for &key in &layer {
            let s = space.decode(key);
            space.for_each_successor(&s, |_, t| {
                let tk = space.encode(&t);
                if visited.insert(tk) {
                    next_layer.push(tk);
                    if visited.len() as u64 > limits.max_states {
                        overflow = true;
                        return false;
                    }
                }
                true
            });
            if overflow {
                return Err(Error::Indeterminate {
                    reason: "state-limit",
                    states_explored: visited.len() as u64,
                });
            }
        }
        frontier_peak = frontier_peak.max(next_layer.len() as u64);
        layer = next_layer;
        depth += 1;
    };

    let states_explored = visited.len() as u64;
    drop(visited);
    if !found {
        return Ok(SolverVerdict {
            witness: None,
            states_explored,
            frontier_peak,
        });
    }

    let rows = rebuild_least_witness(&space, init, depth);
    Ok(SolverVerdict {
        witness: Some(WitnessMatrix::new(rows)?),
        states_explored,
        frontier_peak,
    })
}

fn rebuild_least_witness(space: &Space<'_>, init: State, k: usize) -> Vec<Vec<i64>> {
    let mut memo: HashMap<(Key, usize), bool> = HashMap::new();
    let mut rows = Vec::with_capacity(k);
    let mut current = init;
    for remaining in (0..k).rev() {
        let mut chosen: Option<(Vec<i64>, State)> = None;
        space.for_each_successor(&current, |row, t| {
            if completes(space, &t, remaining, &mut memo) {
                chosen = Some((row.to_vec(), t));
                false
            } else {
                true
            }
        });
        let (row, t) = chosen.expect("breadth-first depth guarantees a completion");
        rows.push(row);
        current = t;
    }
    debug_assert!(space.accepting(&current));
    rows
}

/// Whether an accepting state is reachable from `s` in exactly `remaining`
/// rows. Accepting states qualify for any `remaining` by repeating their
/// entering row.
fn completes(space: &Space<'_>, s: &State, remaining: usize, memo: &mut HashMap<(Key, usize), bool>) -> bool {
    if space.accepting(s) {
        return true;
    }
    if remaining == 0 {
        return false;
    }
    let key = (space.encode(s), remaining);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut ok = false;
    space.for_each_successor(s, |_, t| {
        ok = completes(space, &t, remaining - 1, memo);
        !ok
    });
    memo.insert(key, ok);
    ok
}
