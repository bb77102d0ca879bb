//! Finite evidence for partition regularity: look for a monochromatic
//! solution under one concrete coloring of `[-N, N] \ {0}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, LinearEquation, Result};

/// Total map from `[-N, N] \ {0}` to colors `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    n: u32,
    r: u32,
    /// Index `n + v` for `v < 0`, `n + v - 1` for `v > 0`.
    colors: Vec<u32>,
}

impl Coloring {
    pub fn from_map(n: u32, r: u32, colors: &BTreeMap<i64, u32>) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::argument("coloring needs N >= 1 and r >= 1"));
        }
        let mut out = Vec::with_capacity(2 * n as usize);
        for v in domain(n) {
            let c = *colors
                .get(&v)
                .ok_or_else(|| Error::argument(alloc::format!("no color for {v}")))?;
            if c == 0 || c > r {
                return Err(Error::argument(alloc::format!("color {c} of {v} outside 1..={r}")));
            }
            out.push(c);
        }
        if colors.len() != out.len() {
            return Err(Error::argument(alloc::format!(
                "coloring assigns colors outside [-{n}, {n}] or to 0"
            )));
        }
        Ok(Coloring { n, r, colors: out })
    }

    pub fn from_fn(n: u32, r: u32, mut f: impl FnMut(i64) -> u32) -> Result<Self> {
        let map: BTreeMap<i64, u32> = domain(n).map(|v| (v, f(v))).collect();
        Coloring::from_map(n, r, &map)
    }

    /// Odd numbers get color 1, even numbers color 2.
    pub fn parity(n: u32) -> Result<Self> {
        Coloring::from_fn(n, 2, |v| if v % 2 != 0 { 1 } else { 2 })
    }

    /// Positive numbers get color 1, negative numbers color 2.
    pub fn sign(n: u32) -> Result<Self> {
        Coloring::from_fn(n, 2, |v| if v > 0 { 1 } else { 2 })
    }

    pub fn random(n: u32, r: u32, seed: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::argument("r must be at least 1"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Coloring::from_fn(n, r, |_| rng.random_range(1..=r))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Color of `v`, or `None` outside the domain.
    pub fn color(&self, v: i64) -> Option<u32> {
        let n = self.n as i64;
        match v {
            0 => None,
            v if v < -n || v > n => None,
            v if v < 0 => Some(self.colors[(n + v) as usize]),
            v => Some(self.colors[(n + v - 1) as usize]),
        }
    }

    /// `(value, color)` pairs in ascending value order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        domain(self.n).map(move |v| (v, self.color(v).unwrap_or(0)))
    }
}

fn domain(n: u32) -> impl Iterator<Item = i64> {
    let n = n as i64;
    (-n..=n).filter(|&v| v != 0)
}

/// Search order `1, -1, 2, -2, ...`.
fn search_order(n: u32) -> Vec<i64> {
    (1..=n as i64).flat_map(|v| [v, -v]).collect()
}

/// A tuple of nonzero values in `[-N, N]`, all one color, solving `eq`.
///
/// The first `m - 1` variables are enumerated and the last is solved for,
/// so the cost is `O((2N)^(m-1))`; `O(N^2)` for three variables.
pub fn color_check(eq: &LinearEquation, coloring: &Coloring) -> Option<Vec<i64>> {
    let c = eq.coefficients();
    let m = c.len();
    let order = search_order(coloring.n);
    let last = c[m - 1] as i128;

    let mut idx = alloc::vec![0usize; m - 1];
    loop {
        let head: Vec<i64> = idx.iter().map(|&i| order[i]).collect();
        let color = coloring.color(head[0])?;
        if head.iter().all(|&v| coloring.color(v) == Some(color)) {
            let partial: i128 = head.iter().zip(c).map(|(&v, &k)| v as i128 * k as i128).sum();
            if partial % last == 0 {
                let x = -partial / last;
                if let Ok(x) = i64::try_from(x) {
                    if coloring.color(x) == Some(color) {
                        let mut out = head;
                        out.push(x);
                        return Some(out);
                    }
                }
            }
        }
        // odometer over the first m-1 variables
        let mut pos = m - 1;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < order.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
