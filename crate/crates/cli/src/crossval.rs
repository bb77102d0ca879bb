//! Randomized and exhaustive agreement suites between the general solver,
//! the closed-form criteria, the brute-force oracle and the sparse-sequence
//! machinery. Shared by `rado cross-validate` and the acceptance tests.

use rado_core::characterizations::{
    reduce_to_adjacent_pair, schur_only_test, schur_shape, sigma_one_criterion, three_var_sum_zero_injective,
};
use rado_core::equations::content_normalize;
use rado_core::mtsystems::{
    evaluate_at, gen_sparse_sequence, instantiate_witness, levelwise_cancellation_check, sparsity_constant, SignPolicy,
};
use rado_core::solver::{
    brute_force_oracle, solve_in_class, solve_with_distinctness, verify_canonical_witness, Distinctness, OracleVerdict,
};
use rado_core::strings::{is_coherent, reduce, run_automaton};
use rado_core::{LinearEquation, ReducedString, SolveLimits, WitnessMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// UNSAT verdicts are checked against the oracle up to this many rows.
pub const ORACLE_UNSAT_ROWS: usize = 4;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub disagreements: Vec<String>,
    #[serde(skip)]
    pub sat_cases: Vec<SatCase>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            disagreements: Vec::new(),
            sat_cases: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// A satisfiable query together with the witness the solver returned.
#[derive(Debug, Clone)]
pub struct SatCase {
    pub eq: LinearEquation,
    pub sigma: ReducedString,
    pub injective: bool,
    pub witness: WitnessMatrix,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero(rng: &mut impl Rng, max_abs: i64) -> i64 {
    let v = rng.random_range(1..=max_abs);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

pub fn random_equation(rng: &mut impl Rng, min_m: usize, max_m: usize, max_abs: i64) -> LinearEquation {
    let m = rng.random_range(min_m..=max_m);
    LinearEquation::new((0..m).map(|_| nonzero(rng, max_abs)).collect()).expect("nonzero coefficients")
}

/// Uniform over triples with `c_1 + c_2 + c_3 = 0` and `|c_i| <= max_abs`.
pub fn random_zero_sum_triple(rng: &mut impl Rng, max_abs: i64) -> LinearEquation {
    loop {
        let a = nonzero(rng, max_abs);
        let b = nonzero(rng, max_abs);
        let c = -(a + b);
        if c != 0 && c.abs() <= max_abs {
            return LinearEquation::new(vec![a, b, c]).expect("nonzero");
        }
    }
}

pub fn random_reduced_sigma(rng: &mut impl Rng, max_len: usize, max_abs: i64) -> ReducedString {
    let n = rng.random_range(1..=max_len);
    let mut out: Vec<i64> = Vec::with_capacity(n);
    while out.len() < n {
        let v = nonzero(rng, max_abs);
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    ReducedString::new(out).expect("reduced by construction")
}

/// Every nonempty reduced string of length at most `max_len` with entries in
/// `[-max_abs, max_abs] \ {0}`.
pub fn all_reduced_sigmas(max_len: usize, max_abs: i64) -> Vec<ReducedString> {
    let values: Vec<i64> = (-max_abs..=max_abs).filter(|&v| v != 0).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &v in &values {
                if s.last() != Some(&v) {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned().map(|s| ReducedString::new(s).expect("reduced")));
        layer = next;
    }
    out
}

fn solve(eq: &LinearEquation, sigma: &ReducedString, injective: bool, report: &mut SuiteReport) -> Option<bool> {
    match solve_in_class(eq, sigma, injective, SolveLimits::default()) {
        Ok(v) => {
            if let Some(w) = &v.witness {
                if !verify_canonical_witness(eq, sigma, w, injective).unwrap_or(false) {
                    report.disagreements.push(format!(
                        "{eq} in {sigma} (injective={injective}): witness fails verification"
                    ));
                }
                report.sat_cases.push(SatCase {
                    eq: eq.clone(),
                    sigma: sigma.clone(),
                    injective,
                    witness: w.clone(),
                });
            }
            Some(v.is_sat())
        }
        Err(e) => {
            report
                .disagreements
                .push(format!("{eq} in {sigma} (injective={injective}): solver error {e}"));
            None
        }
    }
}

/// Closed-form `sigma = (1)` criterion against the non-injective solver.
pub fn sigma_one_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("sigma-one-criterion");
    let one = ReducedString::new(vec![1]).expect("reduced");
    for _ in 0..trials {
        let eq = random_equation(rng, 2, 5, 4);
        report.cases += 1;
        let fast = sigma_one_criterion(&eq);
        if let Some(solver) = solve(&eq, &one, false, &mut report) {
            if fast != solver {
                report
                    .disagreements
                    .push(format!("{eq}: criterion={fast} solver={solver}"));
            }
        }
    }
    report
}

/// Zero-sum three-variable equations: adjacent-pair criterion, the
/// adjacent-pair reduction evaluated by the solver, and non-constant vs
/// injective solvability, all against the injective solver.
pub fn three_var_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("three-var-sum-zero");
    for _ in 0..trials {
        let (eq, _) = content_normalize(&random_zero_sum_triple(rng, 5));
        let sigma = random_reduced_sigma(rng, 3, 5);
        report.cases += 1;
        let Some(solver) = solve(&eq, &sigma, true, &mut report) else {
            continue;
        };
        let fast = three_var_sum_zero_injective(&eq, &sigma).expect("preconditions hold");
        if fast != solver {
            report
                .disagreements
                .push(format!("{eq} in {sigma}: criterion={fast} solver={solver}"));
        }
        let h = reduce_to_adjacent_pair(&eq, &sigma).expect("preconditions hold");
        if h.is_some() != solver {
            report
                .disagreements
                .push(format!("{eq} in {sigma}: adjacent pair {h:?} but solver={solver}"));
        }
        let mut by_pair = None;
        for (i, w) in sigma.windows(2).enumerate() {
            let pair = ReducedString::new(w.to_vec()).expect("adjacent entries differ");
            if solve(&eq, &pair, true, &mut report) == Some(true) {
                by_pair = Some(i + 1);
                break;
            }
        }
        if by_pair.is_some() != solver || by_pair != h {
            report.disagreements.push(format!(
                "{eq} in {sigma}: solver on adjacent pairs gives {by_pair:?}, criterion {h:?}, solver on sigma {solver}"
            ));
        }
        match solve_with_distinctness(&eq, &sigma, Distinctness::NonConstant, SolveLimits::default()) {
            Ok(v) if v.is_sat() != solver => report.disagreements.push(format!(
                "{eq} in {sigma}: non-constant={} injective={solver}",
                v.is_sat()
            )),
            Ok(_) => {}
            Err(e) => report.disagreements.push(format!("{eq} in {sigma}: {e}")),
        }
    }
    report
}

/// Schur's equation is solvable in every class, injectively too.
pub fn schur_universality_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("schur-universality");
    let schur = LinearEquation::new(vec![1, 1, -1]).expect("valid");
    for _ in 0..trials {
        let sigma = random_reduced_sigma(rng, 3, 3);
        report.cases += 1;
        for injective in [false, true] {
            if solve(&schur, &sigma, injective, &mut report) == Some(false) {
                report
                    .disagreements
                    .push(format!("{schur} unsolvable in {sigma} (injective={injective})"));
            }
        }
    }
    report
}

/// Random pair-sum-zero triples: the Schur-only test against the solver in
/// both modes.
pub fn schur_shape_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("schur-shape");
    for _ in 0..trials {
        let c = nonzero(rng, 3);
        let d = nonzero(rng, 3);
        let mut coefs = vec![c, -c, d];
        // move d to a random slot
        let slot = rng.random_range(0..3);
        coefs.swap(2, slot);
        let eq = LinearEquation::new(coefs).expect("nonzero");
        let sigma = random_reduced_sigma(rng, 2, 3);
        report.cases += 1;
        let shape = match schur_shape(&eq) {
            Ok(s) => s,
            Err(e) => {
                report.disagreements.push(format!("{eq}: {e}"));
                continue;
            }
        };
        let fast = schur_only_test(shape.c, shape.d).expect("coprime after normalization");
        for injective in [false, true] {
            if let Some(solver) = solve(&eq, &sigma, injective, &mut report) {
                if solver != fast {
                    report.disagreements.push(format!(
                        "{eq} in {sigma} (injective={injective}): schur test {fast}, solver {solver}"
                    ));
                }
            }
        }
    }
    report
}

/// `x1 - x2 + 2x3 = 0` is solvable in no class; exhaustive over reduced
/// strings of length <= 3 with entries in `[-4, 4]`.
pub fn non_schur_exhaustive_suite() -> SuiteReport {
    let mut report = SuiteReport::new("non-schur-exhaustive");
    let eq = LinearEquation::new(vec![1, -1, 2]).expect("valid");
    for sigma in all_reduced_sigmas(3, 4) {
        report.cases += 1;
        if solve(&eq, &sigma, false, &mut report) == Some(true) {
            report.disagreements.push(format!("{eq} solvable in {sigma}"));
        }
    }
    report
}

/// Solver against the brute-force oracle on one query. SAT witnesses must
/// coincide exactly (both return the least witness); UNSAT must leave the
/// oracle empty up to [`ORACLE_UNSAT_ROWS`].
fn oracle_case(eq: &LinearEquation, sigma: &ReducedString, injective: bool, report: &mut SuiteReport) {
    report.cases += 1;
    let Ok(v) = solve_in_class(eq, sigma, injective, SolveLimits::default()) else {
        report.disagreements.push(format!("{eq} in {sigma}: solver error"));
        return;
    };
    let bound = v.witness.as_ref().map_or(ORACLE_UNSAT_ROWS, WitnessMatrix::k);
    let oracle = brute_force_oracle(eq, sigma, injective, bound).expect("valid arguments");
    match (&v.witness, oracle) {
        (Some(w), OracleVerdict::Sat(o)) if *w == o => report.sat_cases.push(SatCase {
            eq: eq.clone(),
            sigma: sigma.clone(),
            injective,
            witness: w.clone(),
        }),
        (None, OracleVerdict::UnsatUpToBound { .. }) => {}
        (w, o) => report.disagreements.push(format!(
            "{eq} in {sigma} (injective={injective}): solver {:?} oracle {o:?}",
            w.as_ref().map(|w| w.rows())
        )),
    }
}

/// Exhaustive family: `m <= 3`, `|c_i| <= 3`, `sigma` of length <= 2 with
/// entries in `[-2, 2]`, both modes.
pub fn oracle_family_suite() -> SuiteReport {
    let mut report = SuiteReport::new("oracle-family");
    let coefs: Vec<i64> = (-3..=3).filter(|&c| c != 0).collect();
    let mut equations = Vec::new();
    for &a in &coefs {
        for &b in &coefs {
            equations.push(vec![a, b]);
            for &c in &coefs {
                equations.push(vec![a, b, c]);
            }
        }
    }
    let sigmas = all_reduced_sigmas(2, 2);
    for c in equations {
        let eq = LinearEquation::new(c).expect("nonzero");
        for sigma in &sigmas {
            for injective in [false, true] {
                oracle_case(&eq, sigma, injective, &mut report);
            }
        }
    }
    report
}

/// Random sample of the oracle family, for the CLI driver.
pub fn oracle_sample_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("oracle-sample");
    for _ in 0..trials {
        let eq = random_equation(rng, 2, 3, 3);
        let sigma = random_reduced_sigma(rng, 2, 2);
        let injective = rng.random_bool(0.5);
        oracle_case(&eq, &sigma, injective, &mut report);
    }
    report
}

/// Random level vectors with `|e_d| < M` over random `M`-sparse sequences of
/// length <= 8: the sum vanishes exactly when every level does.
pub fn cancellation_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("levelwise-cancellation");
    let policies = [
        SignPolicy::AllPositive,
        SignPolicy::Alternating,
        SignPolicy::SeededRandom,
    ];
    for _ in 0..trials {
        report.cases += 1;
        let m: u64 = rng.random_range(2..=60);
        let len = rng.random_range(1..=8);
        let signs = policies[rng.random_range(0..policies.len())];
        let seq = gen_sparse_sequence(m, len, rng.random(), signs, true).expect("fits in i128");
        let bound = m as i64 - 1;
        // Bias toward vectors with few nonzero levels, the hardest case.
        let levels: Vec<i64> = (0..len)
            .map(|_| {
                if rng.random_bool(0.4) {
                    0
                } else {
                    rng.random_range(-bound..=bound)
                }
            })
            .collect();
        let all_zero = levels.iter().all(|&e| e == 0);
        match levelwise_cancellation_check(&levels, &seq, m) {
            Ok(vanishes) if vanishes == all_zero => {}
            Ok(vanishes) => report.disagreements.push(format!(
                "levels {levels:?} over {:?}: vanishes={vanishes}",
                seq.values()
            )),
            Err(e) => report.disagreements.push(format!("levels {levels:?}: {e}")),
        }
    }
    report
}

/// Instantiates each witness over a sequence with sparsity
/// `sparsity_constant(sigma, eq)`: `P(y) = 0` exactly, and the `y_j` are
/// pairwise distinct for injective witnesses.
pub fn instantiation_suite(cases: &[SatCase], seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("witness-instantiation");
    let mut rng = rng(seed);
    let policies = [
        SignPolicy::AllPositive,
        SignPolicy::Alternating,
        SignPolicy::SeededRandom,
    ];
    for case in cases {
        report.cases += 1;
        let label = format!("{} in {} (injective={})", case.eq, case.sigma, case.injective);
        let outcome = (|| -> Result<(), String> {
            let m = sparsity_constant(&case.sigma, &case.eq).map_err(|e| e.to_string())?;
            let signs = policies[rng.random_range(0..policies.len())];
            let seq = gen_sparse_sequence(m, case.witness.k(), rng.random(), signs, true).map_err(|e| e.to_string())?;
            let ys: Vec<i128> = instantiate_witness(&case.witness, &case.eq, &case.sigma, &seq)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|y| y.value)
                .collect();
            if evaluate_at(&case.eq, &ys).map_err(|e| e.to_string())? != 0 {
                return Err(format!("P(y) != 0 for y = {ys:?}"));
            }
            if case.injective {
                for (i, a) in ys.iter().enumerate() {
                    if ys[i + 1..].contains(a) {
                        return Err(format!("repeated value in {ys:?}"));
                    }
                }
            }
            Ok(())
        })();
        if let Err(msg) = outcome {
            report.disagreements.push(format!("{label}: {msg}"));
        }
    }
    report
}

/// Random strings with entries in `[-3, 3]` (zeros and repeats are common):
/// reduction is idempotent, unchanged by inserting or deleting a zero or
/// duplicating an entry, compatible with concatenation, and the result is
/// accepted by the expansion automaton of itself.
pub fn string_suite(trials: usize, rng: &mut impl Rng) -> SuiteReport {
    let mut report = SuiteReport::new("string-rewriting");
    fn draw(rng: &mut impl Rng) -> Vec<i64> {
        let len = rng.random_range(0..=12);
        (0..len).map(|_| rng.random_range(-3..=3)).collect()
    }
    for _ in 0..trials {
        report.cases += 1;
        let s = draw(rng);
        let t = draw(rng);
        let r = reduce(&s);
        let mut failures = Vec::new();
        if reduce(&r) != r {
            failures.push("idempotence");
        }
        let pos = rng.random_range(0..=s.len());
        let mut with_zero = s.clone();
        with_zero.insert(pos, 0);
        if reduce(&with_zero) != r {
            failures.push("zero insertion");
        }
        if let Some(z) = s.iter().position(|&v| v == 0) {
            let mut without = s.clone();
            without.remove(z);
            if reduce(&without) != r {
                failures.push("zero deletion");
            }
        }
        if !s.is_empty() {
            let i = rng.random_range(0..s.len());
            let mut dup = s.clone();
            dup.insert(i, s[i]);
            if reduce(&dup) != r {
                failures.push("duplication");
            }
        }
        let joined: Vec<i64> = s.iter().chain(&t).copied().collect();
        let rejoined: Vec<i64> = r.iter().chain(reduce(&t).iter()).copied().collect();
        if reduce(&joined) != reduce(&rejoined) {
            failures.push("concatenation");
        }
        if !is_coherent(&s, &r) || run_automaton(&r, &s) != Some(r.len()) {
            failures.push("coherence");
        }
        if !failures.is_empty() {
            report
                .disagreements
                .push(format!("{s:?} / {t:?}: {}", failures.join(", ")));
        }
    }
    report
}

/// Everything `rado cross-validate` runs.
pub fn run_all(trials: usize, seed: u64) -> Vec<SuiteReport> {
    let mut r = rng(seed);
    let mut reports = vec![
        sigma_one_suite(trials, &mut r),
        three_var_suite(trials, &mut r),
        schur_universality_suite(trials, &mut r),
        schur_shape_suite(trials, &mut r),
        oracle_sample_suite(trials, &mut r),
        cancellation_suite(trials, &mut r),
        string_suite(trials, &mut r),
    ];
    let sat: Vec<SatCase> = reports.iter().flat_map(|s| s.sat_cases.iter().cloned()).collect();
    reports.push(instantiation_suite(&sat, seed));
    reports
}
