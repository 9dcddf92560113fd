//! File formats and driver for the `assemble` subcommand: a word-sample
//! file plus an optional tabulated cocycle/trivialization file, producing
//! a JSON report.
//!
//! Sample file:
//!
//! ```json
//! {
//!   "genus": 4,
//!   "words": [{"letters": [...]}, ...],
//!   "ta": [{"letters": [...]}],          // optional, defaults to the
//!   "tb": [{"letters": [...]}],          //   standard one-sided families
//!   "conjugators": [[[...], ...]]        // optional 2g x 2g matrices
//! }
//! ```
//!
//! Table file (all fields optional; defaults shown):
//!
//! ```json
//! {
//!   "rank": 1,
//!   "x": [1],
//!   "cocycle": {"kind": "zero"},
//!   "trivialization": {"kind": "zero"}
//! }
//! ```
//!
//! Cocycle kinds: `zero`, `coboundary-of-mu`, or `table` with
//! `{"default": [..], "entries": [{"left": i, "right": j, "value": [..]}]}`
//! indexed into the sampled word list. Trivialization kinds: `zero`,
//! `mu`, or `table` with `{"default": [..], "entries": [{"word": i,
//! "value": [..]}]}`; a table evaluator matches words structurally
//! against the listed samples, so concatenations fall back to the
//! default unless they happen to equal a listed word.

use crate::wordfile::{word_from_file, FileError, LetterDto, WordFile};
use rohlin_core::assembly::{
    assemble, check_conditions, check_trivialization, coboundary, torsor_cochain, CocycleOracle,
    Samples, TrivializationOracle,
};
use rohlin_core::bcj::mu_x;
use rohlin_core::gf2::F2Vector;
use rohlin_core::symplectic::SpMatrix;
use rohlin_core::words::TorelliWord;
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SamplesFile {
    pub genus: usize,
    pub words: Vec<InlineWord>,
    #[serde(default)]
    pub ta: Option<Vec<InlineWord>>,
    #[serde(default)]
    pub tb: Option<Vec<InlineWord>>,
    #[serde(default)]
    pub conjugators: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct InlineWord {
    pub letters: Vec<LetterDto>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    #[serde(default = "default_rank")]
    pub rank: usize,
    #[serde(default)]
    pub x: Option<Vec<u8>>,
    #[serde(default)]
    pub cocycle: Option<OracleSpec>,
    #[serde(default)]
    pub trivialization: Option<OracleSpec>,
}

fn default_rank() -> usize {
    1
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum OracleSpec {
    Zero,
    Mu,
    CoboundaryOfMu,
    Table {
        #[serde(default)]
        default: Option<Vec<u8>>,
        #[serde(default)]
        entries: Vec<TableEntry>,
    },
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    #[serde(default)]
    pub left: Option<usize>,
    #[serde(default)]
    pub right: Option<usize>,
    #[serde(default)]
    pub word: Option<usize>,
    pub value: Vec<u8>,
}

fn bits(v: &[u8], rank: usize) -> Result<F2Vector, FileError> {
    if v.len() != rank {
        return Err(FileError::Parse {
            letter: None,
            message: format!("coefficient vector has length {}, expected rank {rank}", v.len()),
        });
    }
    Ok(F2Vector::from_bits(v.iter().map(|&b| b % 2 == 1)))
}

fn parse_inline_words(genus: usize, words: &[InlineWord]) -> Result<Vec<TorelliWord>, FileError> {
    words.iter().map(|w| word_from_file(&WordFile { genus, letters: w.letters.clone() })).collect()
}

/// Parses the sample file, filling missing sections from the standard
/// set at its genus.
pub fn parse_samples(text: &str) -> Result<Samples, FileError> {
    let file: SamplesFile = serde_json::from_str(text)
        .map_err(|e| FileError::Parse { letter: None, message: e.to_string() })?;
    if file.genus < 3 {
        return Err(FileError::Parse {
            letter: None,
            message: "sample files need genus >= 3".into(),
        });
    }
    let defaults = Samples::standard(file.genus);
    let words = parse_inline_words(file.genus, &file.words)?;
    let ta = match &file.ta {
        Some(ws) => parse_inline_words(file.genus, ws)?,
        None => defaults.ta_words().to_vec(),
    };
    let tb = match &file.tb {
        Some(ws) => parse_inline_words(file.genus, ws)?,
        None => defaults.tb_words().to_vec(),
    };
    let conjugators = match &file.conjugators {
        Some(ms) => ms
            .iter()
            .map(|rows| {
                SpMatrix::try_new(rows.clone()).map_err(|e| FileError::Validation {
                    letter: None,
                    message: format!("conjugator: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => defaults.conjugators().to_vec(),
    };
    Ok(Samples::new(file.genus, words, ta, tb, conjugators))
}

fn build_cocycle(
    spec: Option<&OracleSpec>,
    rank: usize,
    x: &F2Vector,
    samples: &Samples,
) -> Result<CocycleOracle, FileError> {
    match spec {
        None | Some(OracleSpec::Zero) => Ok(CocycleOracle::zero(rank)),
        Some(OracleSpec::Mu) => Err(FileError::Parse {
            letter: None,
            message: "kind 'mu' is a trivialization, not a cocycle".into(),
        }),
        Some(OracleSpec::CoboundaryOfMu) => Ok(coboundary(&TrivializationOracle::mu(x.clone()))),
        Some(OracleSpec::Table { default, entries }) => {
            let default = match default {
                Some(v) => bits(v, rank)?,
                None => F2Vector::zeros(rank),
            };
            let mut table = Vec::new();
            for e in entries {
                let (Some(left), Some(right)) = (e.left, e.right) else {
                    return Err(FileError::Parse {
                        letter: None,
                        message: "cocycle table entries need 'left' and 'right' indices".into(),
                    });
                };
                let bound = samples.words().len();
                if left >= bound || right >= bound {
                    return Err(FileError::Parse {
                        letter: None,
                        message: format!("table entry ({left}, {right}) out of range"),
                    });
                }
                table.push((
                    samples.words()[left].clone(),
                    samples.words()[right].clone(),
                    bits(&e.value, rank)?,
                ));
            }
            Ok(CocycleOracle::new(rank, move |w1, w2| {
                table
                    .iter()
                    .find(|(a, b, _)| a == w1 && b == w2)
                    .map(|(_, _, v)| v.clone())
                    .unwrap_or_else(|| default.clone())
            }))
        }
    }
}

fn build_trivialization(
    spec: Option<&OracleSpec>,
    rank: usize,
    x: &F2Vector,
    samples: &Samples,
) -> Result<TrivializationOracle, FileError> {
    match spec {
        None | Some(OracleSpec::Zero) => Ok(TrivializationOracle::zero(rank)),
        Some(OracleSpec::Mu) => Ok(TrivializationOracle::mu(x.clone())),
        Some(OracleSpec::CoboundaryOfMu) => Err(FileError::Parse {
            letter: None,
            message: "kind 'coboundary-of-mu' is a cocycle, not a trivialization".into(),
        }),
        Some(OracleSpec::Table { default, entries }) => {
            let default = match default {
                Some(v) => bits(v, rank)?,
                None => F2Vector::zeros(rank),
            };
            let mut table = Vec::new();
            for e in entries {
                let Some(word) = e.word else {
                    return Err(FileError::Parse {
                        letter: None,
                        message: "trivialization table entries need a 'word' index".into(),
                    });
                };
                if word >= samples.words().len() {
                    return Err(FileError::Parse {
                        letter: None,
                        message: format!("table entry {word} out of range"),
                    });
                }
                table.push((samples.words()[word].clone(), bits(&e.value, rank)?));
            }
            Ok(TrivializationOracle::new(rank, move |w| {
                table
                    .iter()
                    .find(|(a, _)| a == w)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(|| default.clone())
            }))
        }
    }
}

/// Runs the whole harness and reports as a JSON value. `passed` is the
/// conjunction of every sampled check.
pub fn run(samples: &Samples, table: &TableFile) -> Result<(serde_json::Value, bool), FileError> {
    let rank = table.rank;
    let x = match &table.x {
        Some(v) => bits(v, rank)?,
        None => {
            let mut v = F2Vector::zeros(rank);
            if rank > 0 {
                v.set(0, true);
            }
            v
        }
    };
    let c = build_cocycle(table.cocycle.as_ref(), rank, &x, samples)?;
    let q = build_trivialization(table.trivialization.as_ref(), rank, &x, samples)?;

    let conditions = check_conditions(&c, samples);
    let trivialization = check_trivialization(&q, &c, samples);

    let torsor: Vec<serde_json::Value> = samples
        .conjugators()
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let rho = torsor_cochain(&q, f);
            let nonzero: Vec<usize> = samples
                .words()
                .iter()
                .enumerate()
                .filter(|(_, w)| !rho.eval(w).is_zero())
                .map(|(i, _)| i)
                .collect();
            json!({"conjugator": k, "nonzero_on": nonzero})
        })
        .collect();
    let torsor_zero = torsor.iter().all(|t| t["nonzero_on"].as_array().is_some_and(Vec::is_empty));

    let assembled = assemble(&q, &c, &x, samples);
    let (candidate_values, matches_mu, assemble_report, assemble_ok) = match &assembled {
        Ok((candidate, report)) => {
            let values: Vec<Vec<u8>> = samples
                .words()
                .iter()
                .map(|w| {
                    candidate.eval(w).ones().fold(vec![0u8; rank], |mut acc, i| {
                        acc[i] = 1;
                        acc
                    })
                })
                .collect();
            let matches = samples.words().iter().all(|w| {
                candidate.eval(w) == q.eval(w).xor(&mu_x(w, &x).expect("sample words are Torelli"))
            });
            (
                values,
                matches,
                json!({
                    "ta_nonvanishing": report.ta_nonvanishing,
                    "tb_nonvanishing": report.tb_nonvanishing,
                    "stabilization_violations": report.stabilization,
                }),
                report.passed(),
            )
        }
        Err(e) => (Vec::new(), false, json!({"error": e.to_string()}), false),
    };

    let passed = conditions.passed() && trivialization.is_empty() && torsor_zero && assemble_ok;
    let report = json!({
        "genus": samples.genus(),
        "rank": rank,
        "conditions": {
            "stabilization_violations": conditions.stabilization,
            "conjugation_violations": conditions.conjugation,
            "one_sided_vanishing_violations": conditions.one_sided_vanishing,
        },
        "trivialization_violations": trivialization,
        "torsor": torsor,
        "torsor_zero_on_samples": torsor_zero,
        "assemble": assemble_report,
        "candidate_values": candidate_values,
        "candidate_equals_q_plus_mu_x": matches_mu,
        "passed": passed,
        "note": "all checks are on generator samples, not whole groups",
    });
    Ok((report, passed))
}
