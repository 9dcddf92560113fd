//! JSON word files and their conversion to domain words.
//!
//! Schema: `{"genus": G, "letters": [...]}` with homology classes as
//! length-2G integer arrays in (a_1..a_G, b_1..b_G) order and letters
//! tagged by `"type"`:
//!
//! ```json
//! {"type": "bscc",  "pairs": [[[1,0,0,0,0,0,0,0], [0,0,0,0,1,0,0,0]]]}
//! {"type": "bp",    "e": [...], "pairs": [[[...], [...]], ...]}
//! {"type": "twist", "class": [...], "power": -1}
//! {"type": "conj",  "by": {"matrix": [[...], ...]}, "inner": {...}}
//! ```
//!
//! Parsing separates structural problems (exit code 2) from mathematical
//! validation failures (exit code 3); both carry the offending letter
//! index.

use rohlin_core::symplectic::{HClass, SpMatrix};
use rohlin_core::words::{GeneratorSpec, SymplecticPairList, TorelliWord};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum FileError {
    /// Malformed JSON or wrong shapes; letter index when known.
    Parse { letter: Option<usize>, message: String },
    /// Well-formed data violating a mathematical invariant.
    Validation { letter: Option<usize>, message: String },
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Parse { letter: Some(i), message } => {
                write!(f, "parse error at letter {i}: {message}")
            }
            FileError::Parse { letter: None, message } => write!(f, "parse error: {message}"),
            FileError::Validation { letter: Some(i), message } => {
                write!(f, "validation error at letter {i}: {message}")
            }
            FileError::Validation { letter: None, message } => {
                write!(f, "validation error: {message}")
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct WordFile {
    pub genus: usize,
    pub letters: Vec<LetterDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum LetterDto {
    Bscc { pairs: Vec<(Vec<i64>, Vec<i64>)> },
    Bp { e: Vec<i64>, pairs: Vec<(Vec<i64>, Vec<i64>)> },
    Twist { class: Vec<i64>, power: i64 },
    Conj { by: MatrixDto, inner: Box<LetterDto> },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct MatrixDto {
    pub matrix: Vec<Vec<i64>>,
}

fn class_from(coords: &[i64], genus: usize, letter: usize) -> Result<HClass, FileError> {
    if coords.len() != 2 * genus {
        return Err(FileError::Parse {
            letter: Some(letter),
            message: format!("class has {} coordinates, expected {}", coords.len(), 2 * genus),
        });
    }
    Ok(HClass::from_coords(coords.to_vec()))
}

fn pairs_from(
    pairs: &[(Vec<i64>, Vec<i64>)],
    genus: usize,
    letter: usize,
) -> Result<SymplecticPairList, FileError> {
    if pairs.is_empty() {
        return Err(FileError::Parse {
            letter: Some(letter),
            message: "pair list must be nonempty".into(),
        });
    }
    let mut out = Vec::with_capacity(pairs.len());
    for (c, d) in pairs {
        out.push((class_from(c, genus, letter)?, class_from(d, genus, letter)?));
    }
    Ok(SymplecticPairList::new(out))
}

fn letter_from(dto: &LetterDto, genus: usize, letter: usize) -> Result<GeneratorSpec, FileError> {
    match dto {
        LetterDto::Bscc { pairs } => Ok(GeneratorSpec::Bscc(pairs_from(pairs, genus, letter)?)),
        LetterDto::Bp { e, pairs } => Ok(GeneratorSpec::Bp {
            class: class_from(e, genus, letter)?,
            pairs: pairs_from(pairs, genus, letter)?,
        }),
        LetterDto::Twist { class, power } => {
            Ok(GeneratorSpec::Twist { class: class_from(class, genus, letter)?, power: *power })
        }
        LetterDto::Conj { by, inner } => {
            let n = 2 * genus;
            if by.matrix.len() != n || by.matrix.iter().any(|r| r.len() != n) {
                return Err(FileError::Parse {
                    letter: Some(letter),
                    message: format!("conjugating matrix must be {n}x{n}"),
                });
            }
            let by = SpMatrix::try_new(by.matrix.clone()).map_err(|e| FileError::Validation {
                letter: Some(letter),
                message: e.to_string(),
            })?;
            Ok(GeneratorSpec::Conj { by, inner: Box::new(letter_from(inner, genus, letter)?) })
        }
    }
}

/// Parses a word file into a validated Torelli-or-mapping-class word.
pub fn parse_word(text: &str) -> Result<TorelliWord, FileError> {
    let file: WordFile = serde_json::from_str(text)
        .map_err(|e| FileError::Parse { letter: None, message: e.to_string() })?;
    word_from_file(&file)
}

/// Converts an already-deserialized file, validating every letter.
pub fn word_from_file(file: &WordFile) -> Result<TorelliWord, FileError> {
    if file.genus == 0 {
        return Err(FileError::Parse { letter: None, message: "genus must be positive".into() });
    }
    let mut letters = Vec::with_capacity(file.letters.len());
    for (i, dto) in file.letters.iter().enumerate() {
        letters.push(letter_from(dto, file.genus, i)?);
    }
    let word = TorelliWord::new(file.genus, letters);
    word.validate().map_err(|e| FileError::Validation {
        letter: match &e {
            rohlin_core::words::WordError::InvalidLetter { index, .. } => Some(*index),
            _ => None,
        },
        message: e.to_string(),
    })?;
    Ok(word)
}

fn letter_to(spec: &GeneratorSpec) -> LetterDto {
    match spec {
        GeneratorSpec::Bscc(pairs) => LetterDto::Bscc {
            pairs: pairs
                .pairs()
                .iter()
                .map(|(c, d)| (c.coords().to_vec(), d.coords().to_vec()))
                .collect(),
        },
        GeneratorSpec::Bp { class, pairs } => LetterDto::Bp {
            e: class.coords().to_vec(),
            pairs: pairs
                .pairs()
                .iter()
                .map(|(c, d)| (c.coords().to_vec(), d.coords().to_vec()))
                .collect(),
        },
        GeneratorSpec::Twist { class, power } => {
            LetterDto::Twist { class: class.coords().to_vec(), power: *power }
        }
        GeneratorSpec::Conj { by, inner } => LetterDto::Conj {
            by: MatrixDto { matrix: by.rows() },
            inner: Box::new(letter_to(inner)),
        },
    }
}

/// Renders a word back into its file form; parsing the rendering yields
/// an identical word.
pub fn word_to_file(word: &TorelliWord) -> WordFile {
    WordFile { genus: word.genus(), letters: word.letters().iter().map(letter_to).collect() }
}
