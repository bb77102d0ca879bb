//! Argument definitions and command dispatch for the `rado` binary.

use clap::{Parser, Subcommand, ValueEnum};
use rado_core::characterizations::{
    classify_three_var, reduce_to_adjacent_pair, schur_only_test, schur_shape, sigma_one_criterion, ThreeVarClass,
};
use rado_core::coloring::color_check;
use rado_core::equations::is_rado;
use rado_core::mtsystems::{
    evaluate_at, gen_sparse_sequence, instantiate_witness, levelwise_cancellation_check, mt_enumerate,
    sparsity_constant, SignPolicy,
};
use rado_core::solver::{brute_force_oracle, solve_in_class, OracleVerdict};
use rado_core::strings::{are_equivalent, is_reduced, reduce};
use rado_core::{LinearEquation, ReducedString, SolveLimits, WitnessMatrix};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::crossval::{self, ORACLE_UNSAT_ROWS};
use crate::formats::{load_coloring, parse_equation_arg, parse_string, MtElementDoc, SequenceDoc, VerdictDoc};
use crate::CliError;

/// `--oracle-check` is skipped when a single row has more candidates than this.
const ORACLE_MAX_ROW_CANDIDATES: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "rado",
    version,
    about = "Decide solvability of linear equations in classes of integer strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical reduced form of a string given as a JSON array.
    Reduce { string: String },
    /// Whether two strings reduce to the same form.
    Equiv { s: String, t: String },
    /// Rado condition, least zero-sum subset and three-variable case.
    Classify { equation: String },
    /// Run the general solver.
    Solve {
        equation: String,
        sigma: String,
        #[arg(long)]
        injective: bool,
        #[arg(long, default_value_t = SolveLimits::default().max_states)]
        max_states: u64,
        /// Re-check the verdict with the brute-force oracle.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Decide with a closed-form criterion, if one applies.
    Fastpath {
        equation: String,
        sigma: String,
        #[arg(long)]
        injective: bool,
    },
    /// Sparse sequences and Milliken-Taylor sums.
    #[command(subcommand)]
    Mt(MtCommand),
    /// Search for a monochromatic solution under one coloring.
    ColorCheck {
        equation: String,
        #[arg(long = "N")]
        n: u32,
        /// Coloring file, `random:<r>:<seed>`, `parity` or `sign`.
        #[arg(long)]
        colors: String,
    },
    /// Seeded agreement suites between solver, criteria and oracle.
    CrossValidate {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum MtCommand {
    /// Generate a sparse sequence.
    Gen {
        #[arg(long = "M")]
        sparsity: u64,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Signs::Positive)]
        signs: Signs,
        /// Use the minimal growth step instead of seeded jitter.
        #[arg(long)]
        no_jitter: bool,
    },
    /// The sparsity constant that makes witness instantiation injective.
    Sparsity { equation: String, sigma: String },
    /// Enumerate Milliken-Taylor sums with bounded blocks.
    Enum {
        sigma: String,
        /// Sequence document, inline JSON or a file path.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        max_index: usize,
        #[arg(long)]
        max_block_size: usize,
    },
    /// Turn a witness matrix into integers solving the equation.
    Instantiate {
        equation: String,
        sigma: String,
        /// Witness rows as JSON; solved for when omitted.
        #[arg(long)]
        witness: Option<String>,
        /// Sequence document; defaults to the unjittered positive sequence
        /// with the sparsity constant.
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        injective: bool,
    },
    /// Evaluate a level vector over a sparse sequence.
    Cancel {
        levels: String,
        #[arg(long)]
        seq: String,
        /// Level bound; defaults to the sequence sparsity.
        #[arg(long = "M")]
        bound: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Signs {
    Positive,
    Alternating,
    Random,
}

impl From<Signs> for SignPolicy {
    fn from(s: Signs) -> Self {
        match s {
            Signs::Positive => SignPolicy::AllPositive,
            Signs::Alternating => SignPolicy::Alternating,
            Signs::Random => SignPolicy::SeededRandom,
        }
    }
}

/// A JSON document for stdout and the exit status to go with it.
#[derive(Debug)]
pub struct Outcome {
    pub doc: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc, code: 0 }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize")
}

/// Reads a document given inline (`{...}` or `[...]`) or as a file path.
fn read_doc<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T, CliError> {
    let t = arg.trim();
    let text = if t.starts_with('{') || t.starts_with('[') {
        t.to_string()
    } else {
        std::fs::read_to_string(t).map_err(|e| CliError::Usage(format!("cannot read {what} `{t}`: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad {what}: {e}")))
}

/// The library is strict about reduced input; the command line reduces and
/// says so on stderr.
fn sigma_arg(text: &str) -> Result<ReducedString, CliError> {
    let raw = parse_string(text)?;
    let sigma = if is_reduced(&raw) {
        ReducedString::new(raw)?
    } else {
        let r = reduce(&raw);
        eprintln!("note: sigma {raw:?} is not reduced; using {r}");
        r
    };
    if sigma.is_empty() {
        return Err(CliError::Usage("sigma reduces to the empty string".into()));
    }
    Ok(sigma)
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Reduce { string } => Ok(Outcome::ok(json!(reduce(&parse_string(&string)?).as_slice()))),
        Command::Equiv { s, t } => {
            let (s, t) = (parse_string(&s)?, parse_string(&t)?);
            Ok(Outcome::ok(json!({
                "equivalent": are_equivalent(&s, &t),
                "reduced": [reduce(&s).as_slice(), reduce(&t).as_slice()],
            })))
        }
        Command::Classify { equation } => classify(&parse_equation_arg(&equation)?).map(Outcome::ok),
        Command::Solve {
            equation,
            sigma,
            injective,
            max_states,
            oracle_check,
        } => solve(
            &parse_equation_arg(&equation)?,
            &sigma_arg(&sigma)?,
            injective,
            max_states,
            oracle_check,
        ),
        Command::Fastpath {
            equation,
            sigma,
            injective,
        } => fastpath(&parse_equation_arg(&equation)?, &sigma_arg(&sigma)?, injective).map(Outcome::ok),
        Command::Mt(cmd) => mt(cmd).map(Outcome::ok),
        Command::ColorCheck { equation, n, colors } => {
            let eq = parse_equation_arg(&equation)?;
            let coloring = load_coloring(&colors, n)?;
            Ok(Outcome::ok(match color_check(&eq, &coloring) {
                Some(xs) => json!({
                    "found": true,
                    "solution": xs,
                    "color": coloring.color(xs[0]),
                }),
                None => json!({ "found": false, "N": n }),
            }))
        }
        Command::CrossValidate { trials, seed } => {
            let reports = crossval::run_all(trials, seed);
            let passed = reports.iter().all(|r| r.passed());
            for r in reports.iter().filter(|r| !r.passed()) {
                eprintln!("{}: {} disagreement(s)", r.name, r.disagreements.len());
            }
            Ok(Outcome {
                doc: json!({ "trials": trials, "seed": seed, "passed": passed, "suites": reports }),
                code: if passed { 0 } else { 1 },
            })
        }
    }
}

fn classify(eq: &LinearEquation) -> Result<Value, CliError> {
    let subset = is_rado(eq);
    let mut doc = json!({
        "equation": eq.to_string(),
        "rado": subset.is_some(),
        "I": subset,
    });
    if eq.arity() == 3 {
        let class = classify_three_var(eq)?;
        let extra = match class {
            ThreeVarClass::TripleSumZero => json!({ "case": "triple-sum-zero" }),
            ThreeVarClass::PairSumZero { pair } => {
                let shape = schur_shape(eq)?;
                json!({
                    "case": "pair-sum-zero",
                    "pair": [pair.0, pair.1],
                    "c": shape.c,
                    "d": shape.d,
                    "permutation": shape.permutation,
                    "content": shape.content,
                    "schur": schur_only_test(shape.c, shape.d)?,
                })
            }
            ThreeVarClass::NotRado => json!({ "case": "not-rado" }),
        };
        doc["three_var_class"] = extra;
    }
    Ok(doc)
}

fn solve(
    eq: &LinearEquation,
    sigma: &ReducedString,
    injective: bool,
    max_states: u64,
    oracle_check: bool,
) -> Result<Outcome, CliError> {
    let verdict = solve_in_class(eq, sigma, injective, SolveLimits { max_states })?;
    let mut doc = to_value(&VerdictDoc::from_verdict(&verdict));
    if !oracle_check {
        return Ok(Outcome::ok(doc));
    }
    let mut values: Vec<i64> = sigma.to_vec();
    values.push(0);
    values.sort_unstable();
    values.dedup();
    let too_large = values
        .len()
        .checked_pow(eq.arity() as u32)
        .is_none_or(|n| n > ORACLE_MAX_ROW_CANDIDATES);
    if too_large {
        eprintln!("note: instance too large for the oracle; check skipped");
        doc["oracle"] = json!({ "checked": false });
        return Ok(Outcome::ok(doc));
    }
    let bound = verdict.witness.as_ref().map_or(ORACLE_UNSAT_ROWS, WitnessMatrix::k);
    let oracle = brute_force_oracle(eq, sigma, injective, bound)?;
    let agrees = match (&verdict.witness, &oracle) {
        (Some(w), OracleVerdict::Sat(o)) => w == o,
        (None, OracleVerdict::UnsatUpToBound { .. }) => true,
        _ => false,
    };
    doc["oracle"] = json!({ "checked": true, "max_rows": bound, "agrees": agrees });
    if !agrees {
        eprintln!("solver and oracle disagree: oracle returned {oracle:?}");
    }
    Ok(Outcome {
        doc,
        code: if agrees { 0 } else { 1 },
    })
}

fn fast_sat(method: &str, rows: Option<Vec<Vec<i64>>>) -> VerdictDoc {
    VerdictDoc::Sat {
        k: rows.as_ref().map(Vec::len),
        rows,
        method: Some(method.into()),
        states_explored: None,
        frontier_peak: None,
    }
}

fn fast_unsat(method: &str) -> VerdictDoc {
    VerdictDoc::Unsat {
        method: Some(method.into()),
        states_explored: None,
        frontier_peak: None,
    }
}

fn fastpath(eq: &LinearEquation, sigma: &ReducedString, injective: bool) -> Result<Value, CliError> {
    if !injective && sigma.as_slice() == [1] {
        let method = "fastpath-sigma1";
        let doc = if sigma_one_criterion(eq) {
            fast_sat(method, None)
        } else {
            fast_unsat(method)
        };
        return Ok(to_value(&doc));
    }
    if eq.arity() == 3 {
        match classify_three_var(eq)? {
            ThreeVarClass::TripleSumZero => {
                let method = "fastpath-3var";
                if !injective {
                    // one constant row per entry of sigma
                    let rows = sigma.iter().map(|&a| vec![a; 3]).collect();
                    return Ok(to_value(&fast_sat(method, Some(rows))));
                }
                let mut doc = match reduce_to_adjacent_pair(eq, sigma)? {
                    Some(h) => {
                        let mut d = to_value(&fast_sat(method, None));
                        d["adjacent_pair"] = json!(h);
                        d
                    }
                    None => to_value(&fast_unsat(method)),
                };
                doc["injective"] = json!(true);
                return Ok(doc);
            }
            ThreeVarClass::PairSumZero { .. } => {
                let shape = schur_shape(eq)?;
                let doc = if schur_only_test(shape.c, shape.d)? {
                    fast_sat("fastpath-schur", None)
                } else {
                    fast_unsat("fastpath-schur")
                };
                return Ok(to_value(&doc));
            }
            ThreeVarClass::NotRado => {}
        }
    }
    Err(CliError::Usage(format!(
        "no closed-form criterion applies to {eq} in the class of {sigma}{}; use `rado solve`",
        if injective { " (injective)" } else { "" }
    )))
}

fn mt(cmd: MtCommand) -> Result<Value, CliError> {
    match cmd {
        MtCommand::Gen {
            sparsity,
            length,
            seed,
            signs,
            no_jitter,
        } => {
            let seq = gen_sparse_sequence(sparsity, length, seed, signs.into(), !no_jitter)?;
            Ok(to_value(&SequenceDoc::from_sequence(&seq)))
        }
        MtCommand::Sparsity { equation, sigma } => {
            let m = sparsity_constant(&sigma_arg(&sigma)?, &parse_equation_arg(&equation)?)?;
            Ok(json!({ "M": m }))
        }
        MtCommand::Enum {
            sigma,
            seq,
            max_index,
            max_block_size,
        } => {
            let seq = read_doc::<SequenceDoc>(&seq, "sequence")?.into_sequence()?;
            let elements = mt_enumerate(&sigma_arg(&sigma)?, &seq, max_index, max_block_size)?;
            let docs: Vec<MtElementDoc> = elements.iter().map(MtElementDoc::from).collect();
            Ok(to_value(&docs))
        }
        MtCommand::Instantiate {
            equation,
            sigma,
            witness,
            seq,
            injective,
        } => {
            let eq = parse_equation_arg(&equation)?;
            let sigma = sigma_arg(&sigma)?;
            let witness = match witness {
                Some(text) => WitnessMatrix::new(read_doc(&text, "witness")?)?,
                None => solve_in_class(&eq, &sigma, injective, SolveLimits::default())?
                    .witness
                    .ok_or_else(|| CliError::Usage(format!("{eq} has no solution in the class of {sigma}")))?,
            };
            let seq = match seq {
                Some(text) => read_doc::<SequenceDoc>(&text, "sequence")?.into_sequence()?,
                None => gen_sparse_sequence(
                    sparsity_constant(&sigma, &eq)?,
                    witness.k(),
                    0,
                    SignPolicy::AllPositive,
                    false,
                )?,
            };
            let elements = instantiate_witness(&witness, &eq, &sigma, &seq)?;
            let ys: Vec<i128> = elements.iter().map(|e| e.value).collect();
            Ok(json!({
                "y": ys,
                "P": evaluate_at(&eq, &ys)?,
                "elements": elements.iter().map(MtElementDoc::from).collect::<Vec<_>>(),
                "sequence": SequenceDoc::from_sequence(&seq),
            }))
        }
        MtCommand::Cancel { levels, seq, bound } => {
            let levels: Vec<i64> = read_doc(&levels, "level vector")?;
            let seq = read_doc::<SequenceDoc>(&seq, "sequence")?.into_sequence()?;
            let bound = bound.unwrap_or(seq.sparsity());
            let vanishes = levelwise_cancellation_check(&levels, &seq, bound)?;
            Ok(json!({
                "vanishes": vanishes,
                "all_zero": levels.iter().all(|&e| e == 0),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let mut argv = vec!["rado"];
        argv.extend_from_slice(args);
        run(Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?)
    }

    #[test]
    fn argument_definitions_are_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn reduce_and_equiv() {
        let out = run_args(&["reduce", "[0,1,1,-2,0,-2,0,0,3,3,0,3]"]).unwrap();
        assert_eq!(out.doc, json!([1, -2, 3]));
        let out = run_args(&["equiv", "[1,0,1,2]", "[1,2,2]"]).unwrap();
        assert_eq!(out.doc["equivalent"], json!(true));
    }

    #[test]
    fn fastpath_methods() {
        let d = run_args(&["fastpath", "x1+x2-x3", "[2,-1]"]).unwrap().doc;
        assert_eq!(d["method"], "fastpath-schur");
        assert_eq!(d["status"], "sat");
        let d = run_args(&["fastpath", "[3,-5,2]", "[5,7,-10,-6,13]", "--injective"])
            .unwrap()
            .doc;
        assert_eq!(
            (d["method"].clone(), d["adjacent_pair"].clone()),
            (json!("fastpath-3var"), json!(3))
        );
        let d = run_args(&["fastpath", "[1,1,-3]", "[1]"]).unwrap().doc;
        assert_eq!(
            (d["method"].clone(), d["status"].clone()),
            (json!("fastpath-sigma1"), json!("unsat"))
        );
        assert!(run_args(&["fastpath", "[1,1,1,-3]", "[2,1]"]).is_err());
    }

    #[test]
    fn instantiate_defaults() {
        let d = run_args(&["mt", "instantiate", "x1+x2-x3", "[1]", "--witness", "[[1,0,1],[0,1,1]]"])
            .unwrap()
            .doc;
        assert_eq!(d["y"], json!([1, 5, 6]));
        assert_eq!(d["P"], json!(0));
    }
}
