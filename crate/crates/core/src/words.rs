//! Generator specifications for Torelli and mapping-class elements, word
//! containers, validation, evaluation through the symplectic
//! representation, and the standard-position constructors.
//!
//! A spec carries homology-level data only: the classes and symplectic
//! pairings that the twist formulas consume. Twists about bounding simple
//! closed curves (BSCC) and bounding-pair maps (BP) act trivially on
//! homology, so they contribute the identity matrix; plain twist letters
//! contribute a transvection power; a conjugation letter wraps another
//! spec in an explicit symplectic matrix.

use crate::symplectic::{is_symplectic, omega, transvection_power, HClass, SpMatrix};
use thiserror::Error;

/// A list of pairs (c_i, d_i) forming a symplectic basis of a subsurface:
/// omega(c_i, d_i) = +-1 and every other pairing between listed classes
/// vanishes exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymplecticPairList {
    genus: usize,
    pairs: Vec<(HClass, HClass)>,
}

impl SymplecticPairList {
    /// # Panics
    /// Panics if the list is empty or the classes disagree on genus.
    /// Pairing conditions are checked by [`validate`], not here.
    #[must_use]
    pub fn new(pairs: Vec<(HClass, HClass)>) -> Self {
        assert!(!pairs.is_empty(), "pair list must be nonempty");
        let genus = pairs[0].0.genus();
        for (c, d) in &pairs {
            assert_eq!(c.genus(), genus, "genus mismatch in pair list");
            assert_eq!(d.genus(), genus, "genus mismatch in pair list");
        }
        Self { genus, pairs }
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of pairs (the genus of the subsurface).
    #[must_use]
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[must_use]
    pub fn pairs(&self) -> &[(HClass, HClass)] {
        &self.pairs
    }
}

/// One letter of a mapping-class word.
#[derive(Clone, PartialEq, Debug)]
pub enum GeneratorSpec {
    /// Twist about a bounding simple closed curve of genus k, carrying a
    /// symplectic basis of the bounded subsurface.
    Bscc(SymplecticPairList),
    /// BP-map T_beta T_beta'^{-1}: the common homology class of the pair
    /// plus a symplectic basis of the spanned subsurface.
    Bp { class: HClass, pairs: SymplecticPairList },
    /// Plain Dehn twist power (not Torelli unless the class is zero).
    Twist { class: HClass, power: i64 },
    /// Formal conjugate f . w . f^{-1} by a symplectic matrix.
    Conj { by: SpMatrix, inner: Box<GeneratorSpec> },
}

/// Why a spec failed validation; the report names the failed pairing.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum Violation {
    #[error("pair {index}: omega(c, d) = {value}, expected +-1")]
    PairNotUnimodular { index: usize, value: i64 },
    #[error("classes {left} and {right} pair to {value}, expected 0")]
    CrossPairingNonzero { left: String, right: String, value: i64 },
    #[error("BP class pairs with {with} to {value}, expected 0")]
    BpClassNotOrthogonal { with: String, value: i64 },
    #[error("BP class is null-homologous mod 2")]
    BpClassNullMod2,
    #[error("conjugating matrix genus {0} does not match spec genus {1}")]
    ConjGenusMismatch(usize, usize),
    #[error("spec genus {0} does not match expected genus {1}")]
    GenusMismatch(usize, usize),
}

#[derive(Debug, Error, PartialEq)]
pub enum WordError {
    #[error("letter {index}: {violation}")]
    InvalidLetter { index: usize, violation: Violation },
    #[error("sigma is undefined on a plain twist letter (letter {index})")]
    TwistLetter { index: usize },
    #[error("subsurface genus {k} out of range for surface genus {genus}")]
    SubsurfaceOutOfRange { genus: usize, k: usize },
    #[error("cannot stabilize genus {from} down to {to}")]
    StabilizeDown { from: usize, to: usize },
    #[error("decomposition data is only derived for standard-position BP specs")]
    NonStandardBp,
}

impl GeneratorSpec {
    #[must_use]
    pub fn genus(&self) -> usize {
        match self {
            Self::Bscc(pairs) => pairs.genus(),
            Self::Bp { class, .. } => class.genus(),
            Self::Twist { class, .. } => class.genus(),
            Self::Conj { by, .. } => by.genus(),
        }
    }

    /// Whether the letter is Torelli-valued (BSCC, BP, or a conjugate of
    /// such). Plain twist letters make a word merely a mapping-class word.
    #[must_use]
    pub fn is_torelli(&self) -> bool {
        match self {
            Self::Bscc(_) | Self::Bp { .. } => true,
            Self::Twist { .. } => false,
            Self::Conj { inner, .. } => inner.is_torelli(),
        }
    }
}

fn validate_pair_list(pairs: &SymplecticPairList) -> Result<(), Violation> {
    let list = pairs.pairs();
    for (i, (c, d)) in list.iter().enumerate() {
        let w = omega(c, d);
        if w != 1 && w != -1 {
            return Err(Violation::PairNotUnimodular { index: i, value: w });
        }
    }
    // every non-partner pairing among the listed classes must vanish
    let labeled: Vec<(String, &HClass)> = list
        .iter()
        .enumerate()
        .flat_map(|(i, (c, d))| [(format!("c{}", i + 1), c), (format!("d{}", i + 1), d)])
        .collect();
    for i in 0..labeled.len() {
        for j in i + 1..labeled.len() {
            if j == i + 1 && i % 2 == 0 {
                continue; // partners (c_k, d_k)
            }
            let w = omega(labeled[i].1, labeled[j].1);
            if w != 0 {
                return Err(Violation::CrossPairingNonzero {
                    left: labeled[i].0.clone(),
                    right: labeled[j].0.clone(),
                    value: w,
                });
            }
        }
    }
    Ok(())
}

/// Checks the type invariants of a spec.
pub fn validate(spec: &GeneratorSpec) -> Result<(), Violation> {
    match spec {
        GeneratorSpec::Bscc(pairs) => validate_pair_list(pairs),
        GeneratorSpec::Bp { class, pairs } => {
            if class.genus() != pairs.genus() {
                return Err(Violation::GenusMismatch(class.genus(), pairs.genus()));
            }
            validate_pair_list(pairs)?;
            for (i, (c, d)) in pairs.pairs().iter().enumerate() {
                let wc = omega(class, c);
                if wc != 0 {
                    return Err(Violation::BpClassNotOrthogonal {
                        with: format!("c{}", i + 1),
                        value: wc,
                    });
                }
                let wd = omega(class, d);
                if wd != 0 {
                    return Err(Violation::BpClassNotOrthogonal {
                        with: format!("d{}", i + 1),
                        value: wd,
                    });
                }
            }
            if class.mod2().is_zero() {
                return Err(Violation::BpClassNullMod2);
            }
            Ok(())
        }
        GeneratorSpec::Twist { .. } => Ok(()),
        GeneratorSpec::Conj { by, inner } => {
            // the SpMatrix type already guarantees the form is preserved
            debug_assert!(is_symplectic(&by.rows()).unwrap_or(false));
            if by.genus() != inner.genus() {
                return Err(Violation::ConjGenusMismatch(by.genus(), inner.genus()));
            }
            validate(inner)
        }
    }
}

/// A finite sequence of generator specs at a fixed genus.
#[derive(Clone, PartialEq, Debug)]
pub struct TorelliWord {
    genus: usize,
    letters: Vec<GeneratorSpec>,
}

impl TorelliWord {
    #[must_use]
    pub fn empty(genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        Self { genus, letters: Vec::new() }
    }

    /// # Panics
    /// Panics if a letter disagrees on genus.
    #[must_use]
    pub fn new(genus: usize, letters: Vec<GeneratorSpec>) -> Self {
        for (i, l) in letters.iter().enumerate() {
            assert_eq!(l.genus(), genus, "letter {i} has mismatched genus");
        }
        Self { genus, letters }
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn letters(&self) -> &[GeneratorSpec] {
        &self.letters
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[must_use]
    pub fn is_torelli(&self) -> bool {
        self.letters.iter().all(GeneratorSpec::is_torelli)
    }

    /// Concatenation (the group product of the presented elements).
    ///
    /// # Panics
    /// Panics on genus mismatch.
    #[must_use]
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self { genus: self.genus, letters }
    }

    /// Validates every letter, reporting the first failure with its index.
    pub fn validate(&self) -> Result<(), WordError> {
        for (index, letter) in self.letters.iter().enumerate() {
            validate(letter).map_err(|violation| WordError::InvalidLetter { index, violation })?;
        }
        Ok(())
    }
}

fn psi_spec(spec: &GeneratorSpec) -> SpMatrix {
    match spec {
        GeneratorSpec::Bscc(pairs) => SpMatrix::identity(pairs.genus()),
        GeneratorSpec::Bp { class, .. } => SpMatrix::identity(class.genus()),
        GeneratorSpec::Twist { class, power } => transvection_power(class, *power),
        GeneratorSpec::Conj { by, inner } => by.mul(&psi_spec(inner)).mul(&by.inverse()),
    }
}

/// Image of a word under the symplectic representation. Torelli letters
/// contribute the identity; twist letters contribute transvection powers.
pub fn psi_of_word(word: &TorelliWord) -> Result<SpMatrix, WordError> {
    word.validate()?;
    let mut acc = SpMatrix::identity(word.genus());
    for letter in word.letters() {
        acc = acc.mul(&psi_spec(letter));
    }
    Ok(acc)
}

/// Wraps a letter in conjugation by a mapping-class word: only the
/// word's symplectic image matters for value transport, so the word is
/// evaluated first and the matrix stored.
pub fn conj_by_word(word: &TorelliWord, inner: GeneratorSpec) -> Result<GeneratorSpec, WordError> {
    Ok(GeneratorSpec::Conj { by: psi_of_word(word)?, inner: Box::new(inner) })
}

/// The standard-position BSCC twist of genus k: the separating curve
/// bounding handles 1..k, with pairs {(a_i, b_i)}_{i<=k}.
pub fn standard_bscc(genus: usize, k: usize) -> Result<GeneratorSpec, WordError> {
    if k < 1 || k > genus {
        return Err(WordError::SubsurfaceOutOfRange { genus, k });
    }
    let pairs = (1..=k).map(|i| (HClass::a(genus, i), HClass::b(genus, i))).collect();
    Ok(GeneratorSpec::Bscc(SymplecticPairList::new(pairs)))
}

/// The standard-position BP map of genus k: the bounding pair around
/// handle k+1 (class b_{k+1}), spanning handles 1..k.
pub fn standard_bp(genus: usize, k: usize) -> Result<GeneratorSpec, WordError> {
    if k < 1 || k + 1 > genus {
        return Err(WordError::SubsurfaceOutOfRange { genus, k });
    }
    let pairs = (1..=k).map(|i| (HClass::a(genus, i), HClass::b(genus, i))).collect();
    Ok(GeneratorSpec::Bp { class: HClass::b(genus, k + 1), pairs: SymplecticPairList::new(pairs) })
}

/// Splits a standard-position genus-k BP into k genus-1 BPs, one per
/// spanned handle, all sharing the bounding-pair class. The interpolating
/// curves of the figure are all homologous to the original pair.
pub fn decompose_bp(spec: &GeneratorSpec) -> Result<Vec<GeneratorSpec>, WordError> {
    let GeneratorSpec::Bp { class, pairs } = spec else {
        return Err(WordError::NonStandardBp);
    };
    let g = class.genus();
    let k = pairs.len();
    if standard_bp(g, k).ok().as_ref() != Some(spec) {
        return Err(WordError::NonStandardBp);
    }
    Ok((1..=k)
        .map(|i| GeneratorSpec::Bp {
            class: class.clone(),
            pairs: SymplecticPairList::new(vec![(HClass::a(g, i), HClass::b(g, i))]),
        })
        .collect())
}

fn stabilize_spec(spec: &GeneratorSpec, to_genus: usize) -> GeneratorSpec {
    match spec {
        GeneratorSpec::Bscc(pairs) => GeneratorSpec::Bscc(SymplecticPairList::new(
            pairs
                .pairs()
                .iter()
                .map(|(c, d)| (c.stabilize(to_genus), d.stabilize(to_genus)))
                .collect(),
        )),
        GeneratorSpec::Bp { class, pairs } => GeneratorSpec::Bp {
            class: class.stabilize(to_genus),
            pairs: SymplecticPairList::new(
                pairs
                    .pairs()
                    .iter()
                    .map(|(c, d)| (c.stabilize(to_genus), d.stabilize(to_genus)))
                    .collect(),
            ),
        },
        GeneratorSpec::Twist { class, power } => {
            GeneratorSpec::Twist { class: class.stabilize(to_genus), power: *power }
        }
        GeneratorSpec::Conj { by, inner } => GeneratorSpec::Conj {
            by: by.stabilize(to_genus),
            inner: Box::new(stabilize_spec(inner, to_genus)),
        },
    }
}

/// Zero-pads every class of the word into a larger surface.
pub fn stabilize_word(word: &TorelliWord, to_genus: usize) -> Result<TorelliWord, WordError> {
    if to_genus < word.genus() {
        return Err(WordError::StabilizeDown { from: word.genus(), to: to_genus });
    }
    Ok(TorelliWord::new(
        to_genus,
        word.letters().iter().map(|l| stabilize_spec(l, to_genus)).collect(),
    ))
}
