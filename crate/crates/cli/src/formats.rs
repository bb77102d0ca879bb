//! JSON documents read and written by the `rado` binary.
//!
//! Field order is fixed by the struct definitions, so output is
//! byte-deterministic for given inputs and seeds.

use std::collections::BTreeMap;
use std::path::Path;

use rado_core::coloring::Coloring;
use rado_core::equations::parse_equation;
use rado_core::mtsystems::{MtElement, SparseSequence};
use rado_core::{LinearEquation, SolverVerdict};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Strings are plain JSON arrays of integers.
pub fn parse_string(text: &str) -> Result<Vec<i64>, CliError> {
    serde_json::from_str(text.trim())
        .map_err(|e| CliError::Usage(format!("expected a JSON integer array, got `{text}`: {e}")))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EquationDoc {
    pub coefficients: Vec<i64>,
}

/// Accepts text (`3x1-5x2+2x3`), a JSON array, or `{"coefficients": [...]}`.
pub fn parse_equation_arg(text: &str) -> Result<LinearEquation, CliError> {
    let t = text.trim();
    let coefficients = if t.starts_with('[') {
        serde_json::from_str::<Vec<i64>>(t).map_err(|e| CliError::Usage(format!("bad coefficient array: {e}")))?
    } else if t.starts_with('{') {
        serde_json::from_str::<EquationDoc>(t)
            .map_err(|e| CliError::Usage(format!("bad equation document: {e}")))?
            .coefficients
    } else {
        return Ok(parse_equation(t)?);
    };
    Ok(LinearEquation::new(coefficients)?)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum VerdictDoc {
    Sat {
        /// Witness row count and rows; fast paths may decide without one.
        #[serde(skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rows: Option<Vec<Vec<i64>>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        method: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        states_explored: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        frontier_peak: Option<u64>,
    },
    Unsat {
        #[serde(skip_serializing_if = "Option::is_none")]
        method: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        states_explored: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        frontier_peak: Option<u64>,
    },
    Indeterminate {
        reason: String,
    },
}

impl VerdictDoc {
    pub fn from_verdict(v: &SolverVerdict) -> Self {
        let method = Some("general-solver".to_string());
        match &v.witness {
            Some(w) => VerdictDoc::Sat {
                k: Some(w.k()),
                rows: Some(w.rows().to_vec()),
                method,
                states_explored: Some(v.states_explored),
                frontier_peak: Some(v.frontier_peak),
            },
            None => VerdictDoc::Unsat {
                method,
                states_explored: Some(v.states_explored),
                frontier_peak: Some(v.frontier_peak),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SequenceDoc {
    #[serde(rename = "M")]
    pub sparsity: u64,
    pub values: Vec<i128>,
}

impl SequenceDoc {
    pub fn from_sequence(s: &SparseSequence) -> Self {
        SequenceDoc {
            sparsity: s.sparsity(),
            values: s.values().to_vec(),
        }
    }

    pub fn into_sequence(self) -> Result<SparseSequence, CliError> {
        Ok(SparseSequence::new(self.values, self.sparsity)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MtElementDoc {
    pub value: i128,
    pub blocks: Vec<Vec<usize>>,
}

impl From<&MtElement> for MtElementDoc {
    fn from(e: &MtElement) -> Self {
        MtElementDoc {
            value: e.value,
            blocks: e.blocks.clone(),
        }
    }
}

/// `{"N":100,"r":2,"colors":{"1":1,"-1":2,...}}`
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringDoc {
    #[serde(rename = "N")]
    pub n: u32,
    pub r: u32,
    pub colors: BTreeMap<String, u32>,
}

impl ColoringDoc {
    pub fn from_coloring(c: &Coloring) -> Self {
        ColoringDoc {
            n: c.n(),
            r: c.r(),
            colors: c.entries().map(|(v, k)| (v.to_string(), k)).collect(),
        }
    }

    pub fn into_coloring(self) -> Result<Coloring, CliError> {
        let mut map = BTreeMap::new();
        for (key, color) in self.colors {
            let v: i64 = key
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("coloring key `{key}` is not an integer")))?;
            if map.insert(v, color).is_some() {
                return Err(CliError::Usage(format!("coloring key {v} given twice")));
            }
        }
        Ok(Coloring::from_map(self.n, self.r, &map)?)
    }
}

/// `--colors` value: a file path, `random:r:seed`, `parity` or `sign`.
pub fn load_coloring(source: &str, n: u32) -> Result<Coloring, CliError> {
    if let Some(rest) = source.strip_prefix("random:") {
        let (r, seed) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Usage("expected random:<r>:<seed>".into()))?;
        let r: u32 = r
            .parse()
            .map_err(|_| CliError::Usage(format!("bad color count `{r}`")))?;
        let seed: u64 = seed
            .parse()
            .map_err(|_| CliError::Usage(format!("bad seed `{seed}`")))?;
        return Ok(Coloring::random(n, r, seed)?);
    }
    match source {
        "parity" => return Ok(Coloring::parity(n)?),
        "sign" => return Ok(Coloring::sign(n)?),
        _ => {}
    }
    let text = std::fs::read_to_string(Path::new(source))
        .map_err(|e| CliError::Usage(format!("cannot read coloring file `{source}`: {e}")))?;
    let doc: ColoringDoc =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad coloring file: {e}")))?;
    if doc.n != n {
        return Err(CliError::Usage(format!(
            "coloring file covers N={}, but --N {n} was given",
            doc.n
        )));
    }
    doc.into_coloring()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_shapes() {
        let unsat = VerdictDoc::Indeterminate {
            reason: "state-limit".into(),
        };
        assert_eq!(
            serde_json::to_string(&unsat).unwrap(),
            r#"{"status":"indeterminate","reason":"state-limit"}"#
        );
        let sat = VerdictDoc::Sat {
            k: Some(1),
            rows: Some(vec![vec![1, 1]]),
            method: None,
            states_explored: None,
            frontier_peak: None,
        };
        assert_eq!(
            serde_json::to_string(&sat).unwrap(),
            r#"{"status":"sat","k":1,"rows":[[1,1]]}"#
        );
    }

    #[test]
    fn equation_forms() {
        let a = parse_equation_arg("3x1-5x2+2x3").unwrap();
        let b = parse_equation_arg("[3,-5,2]").unwrap();
        let c = parse_equation_arg(r#"{"coefficients":[3,-5,2]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert!(parse_equation_arg("[3,0]").is_err());
    }

    #[test]
    fn coloring_document_round_trip() {
        let c = Coloring::random(4, 3, 11).unwrap();
        let doc = ColoringDoc::from_coloring(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back: ColoringDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_coloring().unwrap(), c);
    }

    #[test]
    fn sequence_document() {
        let doc: SequenceDoc = serde_json::from_str(r#"{"M":4,"values":[1,5,25]}"#).unwrap();
        assert_eq!(doc.clone().into_sequence().unwrap().values(), &[1, 5, 25]);
        let bad: SequenceDoc = serde_json::from_str(r#"{"M":4,"values":[1,-5,17]}"#).unwrap();
        assert!(bad.into_sequence().is_err());
    }
}
