//! Sparse sequences and Milliken-Taylor sums.
//!
//! For a reduced `sigma = (a_1, ..., a_n)` and a sequence `x_1, x_2, ...`,
//! the Milliken-Taylor set holds every `sum_i a_i * sum_{d in F_i} x_d` over
//! nonempty index blocks `F_1 < ... < F_n`. When the sequence grows fast
//! enough, a sum `sum_d e_d x_d` with small coefficients vanishes only if
//! every `e_d` does. That is what turns integer solutions drawn from such a
//! set back into witness matrices, and lets a witness matrix be instantiated
//! into integers by sending row `d` to `x_d`.
//!
//! Sparsity here is the absolute-sum form `|x_{t+1}| > M * sum_{i<=t} |x_i|`.
//! The weaker `|x_{t+1}| > M * |sum_{i<=t} x_i|` does not give cancellation
//! once signs are mixed: `(1, -5, 17)` satisfies it for `M = 4`, yet
//! `-2*1 + 3*(-5) + 1*17 = 0`.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::solver::{verify_witness, WitnessMatrix};
use crate::strings::ReducedString;
use crate::{Error, LinearEquation, Result};

/// `sum_i sum_j |a_i c_j| + 1`, the sparsity that makes levelwise
/// cancellation hold for sums arising from `eq` over `sigma`.
pub fn sparsity_constant(sigma: &ReducedString, eq: &LinearEquation) -> Result<u64> {
    if sigma.is_empty() {
        return Err(Error::argument("sigma must be nonempty"));
    }
    let mut total: u64 = 1;
    for &a in sigma.iter() {
        for &c in eq.coefficients() {
            let term = a
                .unsigned_abs()
                .checked_mul(c.unsigned_abs())
                .ok_or(Error::Overflow("sparsity constant"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("sparsity constant"))?;
        }
    }
    Ok(total)
}

/// A finite sequence of nonzero integers with `|x_{t+1}| > M * sum_{i<=t} |x_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSequence {
    values: Vec<i128>,
    sparsity: u64,
}

impl SparseSequence {
    pub fn new(values: Vec<i128>, sparsity: u64) -> Result<Self> {
        if sparsity == 0 {
            return Err(Error::argument("sparsity must be positive"));
        }
        if values.contains(&0) {
            return Err(Error::argument("sparse sequence entries must be nonzero"));
        }
        if let Some(t) = first_violation(&values, sparsity) {
            return Err(Error::argument(alloc::format!(
                "entry {} is too small for sparsity {sparsity}",
                t + 1
            )));
        }
        Ok(SparseSequence { values, sparsity })
    }

    /// Values `x_1, ..., x_T`, stored 0-based.
    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn sparsity(&self) -> u64 {
        self.sparsity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether the sequence is also `bound`-sparse.
    pub fn is_sparse_for(&self, bound: u64) -> bool {
        bound <= self.sparsity || first_violation(&self.values, bound).is_none()
    }
}

/// Index of the first entry breaking `bound`-sparsity, if any.
fn first_violation(values: &[i128], bound: u64) -> Option<usize> {
    let mut abs_sum: u128 = 0;
    for (t, &x) in values.iter().enumerate() {
        if t > 0 {
            match abs_sum.checked_mul(bound as u128) {
                Some(need) if x.unsigned_abs() > need => {}
                _ => return Some(t),
            }
        }
        abs_sum = match abs_sum.checked_add(x.unsigned_abs()) {
            Some(v) => v,
            None => return Some(t),
        };
    }
    None
}

/// Whether `|x_{t+1}| > M * |sum_{i<=t} x_i|` holds throughout, the growth
/// condition in its signed-sum form. Implied by [`SparseSequence`]'s own
/// invariant.
pub fn satisfies_signed_growth(values: &[i128], bound: u64) -> bool {
    let mut sum: i128 = 0;
    for (t, &x) in values.iter().enumerate() {
        if t > 0 {
            match sum.unsigned_abs().checked_mul(bound as u128) {
                Some(need) if x.unsigned_abs() > need => {}
                _ => return false,
            }
        }
        sum += x;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignPolicy {
    #[default]
    AllPositive,
    /// `+, -, +, ...` starting with `x_1 = 1`.
    Alternating,
    /// Signs of `x_2, x_3, ...` drawn from the seed.
    SeededRandom,
}

/// Deterministic `M`-sparse sequence: `x_1 = 1` and
/// `x_{t+1} = ±(M * sum_{i<=t} |x_i| + 1 + jitter)` with `jitter` in
/// `[0, M]` drawn from `seed`. `jitter = false` pins it to zero.
pub fn gen_sparse_sequence(
    sparsity: u64,
    length: usize,
    seed: u64,
    signs: SignPolicy,
    jitter: bool,
) -> Result<SparseSequence> {
    if length == 0 {
        return Err(Error::argument("sequence length must be at least 1"));
    }
    if sparsity == 0 {
        return Err(Error::argument("sparsity must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let overflow = Error::Overflow("sparse sequence generation");
    let mut values: Vec<i128> = alloc::vec![1];
    let mut abs_sum: i128 = 1;
    for t in 1..length {
        let extra = if jitter { rng.random_range(0..=sparsity) } else { 0 };
        let magnitude = abs_sum
            .checked_mul(sparsity as i128)
            .and_then(|v| v.checked_add(1 + extra as i128))
            .ok_or(overflow.clone())?;
        let negative = match signs {
            SignPolicy::AllPositive => false,
            SignPolicy::Alternating => t % 2 == 1,
            SignPolicy::SeededRandom => rng.random_bool(0.5),
        };
        values.push(if negative { -magnitude } else { magnitude });
        abs_sum = abs_sum.checked_add(magnitude).ok_or(overflow.clone())?;
    }
    SparseSequence::new(values, sparsity)
}

/// A Milliken-Taylor sum with its blocks. Indices are 1-based into the
/// generating sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MtElement {
    pub value: i128,
    pub blocks: Vec<Vec<usize>>,
}

/// `sum_i a_i * sum_{d in F_i} x_d`, checking block shape.
pub fn mt_value(sigma: &ReducedString, seq: &SparseSequence, blocks: &[Vec<usize>]) -> Result<i128> {
    if blocks.len() != sigma.len() {
        return Err(Error::argument("need one block per entry of sigma"));
    }
    let mut prev_max = 0usize;
    let mut value: i128 = 0;
    let overflow = Error::Overflow("Milliken-Taylor sum");
    for (block, &a) in blocks.iter().zip(sigma.iter()) {
        if block.is_empty() {
            return Err(Error::argument("blocks must be nonempty"));
        }
        for (pos, &d) in block.iter().enumerate() {
            if d <= prev_max || d > seq.len() || (pos > 0 && d <= block[pos - 1]) {
                return Err(Error::argument(
                    "block indices must be increasing, ordered across blocks and within the sequence",
                ));
            }
            prev_max = d;
            let term = (a as i128).checked_mul(seq.values[d - 1]).ok_or(overflow.clone())?;
            value = value.checked_add(term).ok_or(overflow.clone())?;
        }
    }
    Ok(value)
}

/// Every Milliken-Taylor sum whose blocks use indices `1..=max_index` and
/// have at most `max_block_size` elements.
///
/// Ordered by the flattened block indices, then by block lengths. The
/// count grows exponentially in `max_index`.
pub fn mt_enumerate(
    sigma: &ReducedString,
    seq: &SparseSequence,
    max_index: usize,
    max_block_size: usize,
) -> Result<Vec<MtElement>> {
    if sigma.is_empty() {
        return Err(Error::argument("sigma must be nonempty"));
    }
    if max_index > seq.len() {
        return Err(Error::argument(alloc::format!(
            "max_index {max_index} exceeds sequence length {}",
            seq.len()
        )));
    }
    let mut families: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::with_capacity(sigma.len());
    collect_blocks(sigma.len(), 1, max_index, max_block_size, &mut current, &mut families);

    let mut out = families
        .into_iter()
        .map(|blocks| {
            let value = mt_value(sigma, seq, &blocks)?;
            Ok(MtElement { value, blocks })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| {
        let flat = |e: &MtElement| e.blocks.concat();
        let lens = |e: &MtElement| e.blocks.iter().map(Vec::len).collect::<Vec<_>>();
        flat(x).cmp(&flat(y)).then_with(|| lens(x).cmp(&lens(y)))
    });
    Ok(out)
}

fn collect_blocks(
    remaining: usize,
    start: usize,
    max_index: usize,
    max_block_size: usize,
    current: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    // Each later block needs at least one index of its own.
    if start + remaining - 1 > max_index {
        return;
    }
    let mut block = Vec::new();
    subsets_from(
        start,
        max_index + 1 - (remaining - 1),
        max_block_size,
        &mut block,
        &mut |b| {
            current.push(b.to_vec());
            let next = b[b.len() - 1] + 1;
            collect_blocks(remaining - 1, next, max_index, max_block_size, current, out);
            current.pop();
        },
    );
}

/// Nonempty increasing subsets of `[lo, hi)` with at most `cap` elements.
fn subsets_from(lo: usize, hi: usize, cap: usize, block: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    for d in lo..hi {
        block.push(d);
        f(block);
        if block.len() < cap {
            subsets_from(d + 1, hi, cap, block, f);
        }
        block.pop();
    }
}

/// Level coefficients `e_1..e_T` with `value = sum_d e_d x_d` and every
/// `e_d` in `{0} ∪ entries(sigma)`, recovered greedily from the largest
/// index down.
///
/// Unique when the sequence is `(2A+1)`-sparse, `A = max |a_i|`: two
/// candidates for the top level would differ by at least `|x_d|` while both
/// leave a remainder below `A * sum_{i<d} |x_i| < |x_d| / 2`.
pub fn decompose_levels(sigma: &ReducedString, seq: &SparseSequence, value: i128) -> Option<Vec<i64>> {
    let amax = sigma.iter().map(|a| a.unsigned_abs()).max()? as u128;
    if !seq.is_sparse_for((2 * amax + 1) as u64) {
        return None;
    }
    let mut candidates: Vec<i64> = sigma.to_vec();
    candidates.push(0);
    let xs = seq.values();
    let mut prefix_abs: Vec<u128> = Vec::with_capacity(xs.len() + 1);
    prefix_abs.push(0);
    for x in xs {
        prefix_abs.push(prefix_abs.last()? + x.unsigned_abs());
    }
    let mut rest = value;
    let mut levels = alloc::vec![0i64; xs.len()];
    for d in (0..xs.len()).rev() {
        let slack = amax.checked_mul(prefix_abs[d])?;
        let e = candidates.iter().copied().find(|&e| {
            (e as i128)
                .checked_mul(xs[d])
                .and_then(|t| rest.checked_sub(t))
                .is_some_and(|r| r.unsigned_abs() <= slack)
        })?;
        levels[d] = e;
        rest -= e as i128 * xs[d];
    }
    (rest == 0).then_some(levels)
}

/// Blocks of a coherent level string: the runs of its nonzero entries.
/// `None` unless the runs spell out `sigma` exactly.
pub fn blocks_of(sigma: &ReducedString, levels: &[i64]) -> Option<Vec<Vec<usize>>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<i64> = None;
    for (d, &e) in levels.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if last != Some(e) {
            if blocks.len() == sigma.len() || sigma[blocks.len()] != e {
                return None;
            }
            blocks.push(Vec::new());
            last = Some(e);
        }
        blocks.last_mut()?.push(d + 1);
    }
    (blocks.len() == sigma.len()).then_some(blocks)
}

/// Sends row `d` of the witness to `x_d`: `y_j = sum_d W[d][j] * x_d`.
///
/// Each `y_j` comes back with its blocks, read off column `j`, so it is
/// visibly a Milliken-Taylor sum, and `P(y) = 0` exactly because every row
/// annihilates the coefficients.
pub fn instantiate_witness(
    witness: &WitnessMatrix,
    eq: &LinearEquation,
    sigma: &ReducedString,
    seq: &SparseSequence,
) -> Result<Vec<MtElement>> {
    if !verify_witness(eq, sigma, witness, false)? {
        return Err(Error::argument("matrix is not a witness for this equation and sigma"));
    }
    if seq.len() < witness.k() {
        return Err(Error::argument(alloc::format!(
            "sequence has {} terms, witness has {} rows",
            seq.len(),
            witness.k()
        )));
    }
    (0..eq.arity())
        .map(|j| {
            let column = witness.column(j);
            let blocks =
                blocks_of(sigma, &column).ok_or_else(|| Error::argument("witness column does not expand sigma"))?;
            let value = mt_value(sigma, seq, &blocks)?;
            Ok(MtElement { value, blocks })
        })
        .collect()
}

/// Evaluates `P(y)` exactly.
pub fn evaluate_at(eq: &LinearEquation, ys: &[i128]) -> Result<i128> {
    let overflow = Error::Overflow("equation evaluation");
    eq.coefficients().iter().zip(ys).try_fold(0i128, |acc, (&c, &y)| {
        (c as i128)
            .checked_mul(y)
            .and_then(|t| acc.checked_add(t))
            .ok_or(overflow.clone())
    })
}

/// Whether `sum_d e_d x_{d+1} = 0` for level sums `e_0..e_D`.
///
/// Requires `|e_d| < bound` for every level, a `bound`-sparse sequence and
/// more than `D` terms. Under those conditions the sum vanishes exactly when
/// every `e_d` is zero; the result is the direct evaluation, so callers can
/// test that equivalence.
pub fn levelwise_cancellation_check(levels: &[i64], seq: &SparseSequence, bound: u64) -> Result<bool> {
    if levels.iter().any(|e| e.unsigned_abs() >= bound) {
        return Err(Error::argument(alloc::format!(
            "level sums must be below {bound} in absolute value"
        )));
    }
    if !seq.is_sparse_for(bound) {
        return Err(Error::argument(alloc::format!("sequence is not {bound}-sparse")));
    }
    if seq.len() < levels.len() {
        return Err(Error::argument("sequence shorter than the level vector"));
    }
    let overflow = Error::Overflow("level sum");
    let total = levels.iter().zip(seq.values()).try_fold(0i128, |acc, (&e, &x)| {
        (e as i128)
            .checked_mul(x)
            .and_then(|t| acc.checked_add(t))
            .ok_or(overflow.clone())
    })?;
    Ok(total == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn eq(c: &[i64]) -> LinearEquation {
        LinearEquation::new(c.to_vec()).unwrap()
    }

    fn sigma(v: &[i64]) -> ReducedString {
        ReducedString::new(v.to_vec()).unwrap()
    }

    fn seq(v: &[i128], m: u64) -> SparseSequence {
        SparseSequence::new(v.to_vec(), m).unwrap()
    }

    #[test]
    fn sparsity_constant_examples() {
        assert_eq!(sparsity_constant(&sigma(&[1]), &eq(&[1, 1, -1])).unwrap(), 4);
        assert_eq!(sparsity_constant(&sigma(&[1, -2]), &eq(&[1, -1])).unwrap(), 7);
        assert_eq!(sparsity_constant(&sigma(&[2]), &eq(&[3, -5, 2])).unwrap(), 21);
    }

    #[test]
    fn generator_examples() {
        let s = gen_sparse_sequence(4, 3, 0, SignPolicy::AllPositive, false).unwrap();
        assert_eq!(s.values(), &[1, 5, 25]);
        let s = gen_sparse_sequence(4, 3, 0, SignPolicy::Alternating, false).unwrap();
        assert_eq!(s.values(), &[1, -5, 25]);
        assert!(satisfies_signed_growth(s.values(), 4));
        assert!(gen_sparse_sequence(4, 0, 0, SignPolicy::AllPositive, false).is_err());
    }

    #[test]
    fn generator_is_deterministic_in_seed() {
        let a = gen_sparse_sequence(7, 6, 42, SignPolicy::SeededRandom, true).unwrap();
        let b = gen_sparse_sequence(7, 6, 42, SignPolicy::SeededRandom, true).unwrap();
        assert_eq!(a, b);
        let c = gen_sparse_sequence(7, 6, 43, SignPolicy::SeededRandom, true).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn full_range_coefficients_are_not_unique() {
        // 3-sparse, entries in (-3, 3), same sum.
        let s = seq(&[1, 4], 3);
        assert_eq!(2 * s.values()[0], -2 * s.values()[0] + s.values()[1]);
    }

    #[test]
    fn signed_growth_alone_does_not_cancel_levelwise() {
        let weak = [1i128, -5, 17];
        assert!(satisfies_signed_growth(&weak, 4));
        assert!(SparseSequence::new(weak.to_vec(), 4).is_err());
        assert_eq!(-2 * weak[0] + 3 * weak[1] + weak[2], 0);
    }

    #[test]
    fn mt_enumeration_examples() {
        let s = seq(&[1, 5, 25], 4);
        let one = mt_enumerate(&sigma(&[1]), &s, 2, 2).unwrap();
        let values: Vec<i128> = one.iter().map(|e| e.value).collect();
        assert_eq!(values, vec![1, 6, 5]);
        assert_eq!(one[1].blocks, vec![vec![1, 2]]);

        let two = mt_enumerate(&sigma(&[1, -2]), &s, 3, 1).unwrap();
        let values: Vec<i128> = two.iter().map(|e| e.value).collect();
        assert_eq!(values, vec![-9, -49, -45]);

        let scaled = mt_enumerate(&sigma(&[2]), &s, 3, 3).unwrap();
        let plain = mt_enumerate(&sigma(&[1]), &s, 3, 3).unwrap();
        assert_eq!(scaled.len(), 7);
        for (a, b) in scaled.iter().zip(&plain) {
            assert_eq!(a.value, 2 * b.value);
        }
        assert!(mt_enumerate(&sigma(&[1]), &s, 4, 1).is_err());
    }

    #[test]
    fn mt_value_rejects_bad_blocks() {
        let s = seq(&[1, 5, 25], 4);
        assert!(mt_value(&sigma(&[1, 2]), &s, &[vec![2], vec![1]]).is_err());
        assert!(mt_value(&sigma(&[1, 2]), &s, &[vec![1], vec![]]).is_err());
        assert!(mt_value(&sigma(&[1]), &s, &[vec![4]]).is_err());
        assert!(mt_value(&sigma(&[1]), &s, &[vec![2, 2]]).is_err());
    }

    #[test]
    fn instantiation_examples() {
        let w = WitnessMatrix::new(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let s = seq(&[1, 5, 25], 4);
        let ys = instantiate_witness(&w, &eq(&[1, 1, -1]), &sigma(&[1]), &s).unwrap();
        let values: Vec<i128> = ys.iter().map(|y| y.value).collect();
        assert_eq!(values, vec![1, 5, 6]);
        assert_eq!(ys[2].blocks, vec![vec![1, 2]]);

        let six = WitnessMatrix::new(vec![
            vec![1, 1, 0, 1, 1, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 0, 1, 0, 1, 1],
            vec![0, 1, 0, 0, 0, 1],
        ])
        .unwrap();
        let e = eq(&[4, 2, 3, -5, -1, -2]);
        let m = sparsity_constant(&sigma(&[1]), &e).unwrap();
        let s = gen_sparse_sequence(m, 4, 9, SignPolicy::SeededRandom, true).unwrap();
        let ys: Vec<i128> = instantiate_witness(&six, &e, &sigma(&[1]), &s)
            .unwrap()
            .into_iter()
            .map(|y| y.value)
            .collect();
        assert_eq!(evaluate_at(&e, &ys).unwrap(), 0);

        let constant = WitnessMatrix::new(vec![vec![1, 1, 1]]).unwrap();
        let ys = instantiate_witness(&constant, &eq(&[2, 3, -5]), &sigma(&[1]), &seq(&[1], 1)).unwrap();
        assert!(ys.iter().all(|y| y.value == 1));
    }

    #[test]
    fn instantiation_preconditions() {
        let w = WitnessMatrix::new(vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(instantiate_witness(&w, &eq(&[1, 1, -1]), &sigma(&[1]), &seq(&[1], 4)).is_err());
        let bad = WitnessMatrix::new(vec![vec![1, 1, 1]]).unwrap();
        assert!(instantiate_witness(&bad, &eq(&[1, 1, -1]), &sigma(&[1]), &seq(&[1], 4)).is_err());
    }

    #[test]
    fn cancellation_examples() {
        let s = seq(&[1, 5, 25], 4);
        assert!(levelwise_cancellation_check(&[0, 0, 0], &s, 4).unwrap());
        assert!(!levelwise_cancellation_check(&[3, -1], &s, 4).unwrap());
        assert!(levelwise_cancellation_check(&[4, -1], &s, 4).is_err());
        assert!(levelwise_cancellation_check(&[1, 1], &s, 5).is_err());
        assert!(levelwise_cancellation_check(&[1, 1, 1, 1], &s, 4).is_err());
    }

    #[test]
    fn decomposition_recovers_blocks() {
        let sg = sigma(&[1, -2]);
        let s = gen_sparse_sequence(5, 5, 3, SignPolicy::SeededRandom, true).unwrap();
        for el in mt_enumerate(&sg, &s, 5, 5).unwrap() {
            let levels = decompose_levels(&sg, &s, el.value).unwrap();
            assert_eq!(blocks_of(&sg, &levels).unwrap(), el.blocks);
        }
    }

    fn level_case() -> impl Strategy<Value = (u64, Vec<i64>, u64, SignPolicy)> {
        (2u64..40, 1usize..=8).prop_flat_map(|(m, len)| {
            let bound = m as i64 - 1;
            (
                Just(m),
                proptest::collection::vec(-bound..=bound, len),
                any::<u64>(),
                prop_oneof![
                    Just(SignPolicy::AllPositive),
                    Just(SignPolicy::Alternating),
                    Just(SignPolicy::SeededRandom)
                ],
            )
        })
    }

    proptest! {
        #[test]
        fn cancellation_iff_all_levels_zero((m, e, seed, signs) in level_case()) {
            let s = gen_sparse_sequence(m, e.len(), seed, signs, true).unwrap();
            let zero = levelwise_cancellation_check(&e, &s, m).unwrap();
            prop_assert_eq!(zero, e.iter().all(|&v| v == 0));
        }

        /// Two vectors with entries of magnitude at most `(M-1)/2` differ by
        /// less than `M` entrywise, so equal sums force equal vectors.
        #[test]
        fn sparse_representations_are_unique(
            (m, e, seed, signs) in level_case(),
            other in proptest::collection::vec(-20i64..=20, 8),
        ) {
            let h = (m as i64 - 1) / 2;
            let e: Vec<i64> = e.iter().map(|&v| v.clamp(-h, h)).collect();
            let f: Vec<i64> = other[..e.len()].iter().map(|&v| v.clamp(-h, h)).collect();
            let s = gen_sparse_sequence(m, e.len(), seed, signs, true).unwrap();
            let sum = |v: &[i64]| v.iter().zip(s.values()).map(|(&a, &x)| a as i128 * x).sum::<i128>();
            prop_assert_eq!(sum(&e) == sum(&f), e == f);
        }

        #[test]
        fn generated_sequences_meet_both_growth_forms(m in 1u64..50, len in 1usize..10, seed in any::<u64>()) {
            let s = gen_sparse_sequence(m, len, seed, SignPolicy::SeededRandom, true).unwrap();
            prop_assert!(satisfies_signed_growth(s.values(), m));
            prop_assert!(s.is_sparse_for(m));
        }
    }
}
