//! The Birman–Craggs–Johnson homomorphism on generator specs and words,
//! its equivariance transport, the projection to the constant coefficient,
//! and the reassembled Rohlin invariant of a Torelli gluing word.
//!
//! On a BSCC twist of genus k the value is sum_i c̄_i d̄_i over the
//! symplectic basis of the bounded subsurface; on a BP map it is
//! sum_i c̄_i d̄_i (ē + 1̄), where e is the class of the bounding pair.
//! The homomorphism is mapping-class-group equivariant, so a formal
//! conjugate contributes the symplectic action on the inner value. All
//! values land in the degree-<=3 filtration piece of the Boolean algebra.
//!
//! The Rohlin invariant of the homology sphere glued along a Torelli word
//! is the constant coefficient of the word's value: mu = pi  ∘ sigma, and
//! mu^x embeds that bit into any 2-torsion group by 1̄ -> x.

use crate::boolean::{bar, sp_action, BoolElement, Monomial};
use crate::gf2::F2Vector;
use crate::symplectic::{HClass, SpMatrix};
use crate::words::{
    decompose_bp, validate, GeneratorSpec, SymplecticPairList, TorelliWord, WordError,
};

/// A finite elementary abelian 2-group with a labeled basis; the model of
/// the 2-torsion subgroup A_2 of the coefficient group. Elements are
/// GF(2) coordinate vectors of the group's rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTorsionGroup {
    labels: Vec<String>,
}

impl TwoTorsionGroup {
    #[must_use]
    pub fn new(labels: Vec<String>) -> Self {
        Self { labels }
    }

    /// Rank-r group with labels x1..xr.
    #[must_use]
    pub fn of_rank(rank: usize) -> Self {
        Self::new((1..=rank).map(|i| format!("x{i}")).collect())
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[must_use]
    pub fn zero(&self) -> F2Vector {
        F2Vector::zeros(self.rank())
    }

    /// The i-th basis element (0-based).
    #[must_use]
    pub fn basis(&self, i: usize) -> F2Vector {
        F2Vector::from_indices(self.rank(), &[i])
    }
}

fn sigma_pairs(pairs: &SymplecticPairList) -> BoolElement {
    let g = pairs.genus();
    let mut acc = BoolElement::zero(g);
    for (c, d) in pairs.pairs() {
        acc = acc.add(&bar(c.mod2()).mul(&bar(d.mod2())));
    }
    acc
}

/// Value of the homomorphism on a single generator spec.
///
/// Twist letters are rejected: the homomorphism is defined on Torelli
/// letters only.
pub fn sigma_spec(spec: &GeneratorSpec) -> Result<BoolElement, WordError> {
    validate(spec).map_err(|violation| WordError::InvalidLetter { index: 0, violation })?;
    sigma_spec_validated(spec)
}

fn sigma_spec_validated(spec: &GeneratorSpec) -> Result<BoolElement, WordError> {
    match spec {
        GeneratorSpec::Bscc(pairs) => Ok(sigma_pairs(pairs)),
        GeneratorSpec::Bp { class, pairs } => {
            let g = class.genus();
            let factor = bar(class.mod2()).add(&BoolElement::one(g));
            Ok(sigma_pairs(pairs).mul(&factor))
        }
        GeneratorSpec::Twist { .. } => Err(WordError::TwistLetter { index: 0 }),
        GeneratorSpec::Conj { by, inner } => Ok(sp_action(by, &sigma_spec_validated(inner)?)),
    }
}

/// Value on a word: the GF(2) sum over letters (the target has exponent
/// two, so an inverse letter contributes the same value).
pub fn sigma_word(word: &TorelliWord) -> Result<BoolElement, WordError> {
    word.validate()?;
    let mut acc = BoolElement::zero(word.genus());
    for (index, letter) in word.letters().iter().enumerate() {
        let value = sigma_spec_validated(letter).map_err(|e| match e {
            WordError::TwistLetter { .. } => WordError::TwistLetter { index },
            other => other,
        })?;
        acc = acc.add(&value);
    }
    Ok(acc)
}

/// Moves a spec along a symplectic matrix: every homology class in the
/// spec is replaced by its image. Symplectic matrices preserve all the
/// pairing conditions, so transported specs stay valid.
#[must_use]
pub fn transport(f: &SpMatrix, spec: &GeneratorSpec) -> GeneratorSpec {
    match spec {
        GeneratorSpec::Bscc(pairs) => GeneratorSpec::Bscc(transport_pairs(f, pairs)),
        GeneratorSpec::Bp { class, pairs } => {
            GeneratorSpec::Bp { class: f.apply(class), pairs: transport_pairs(f, pairs) }
        }
        GeneratorSpec::Twist { class, power } => {
            GeneratorSpec::Twist { class: f.apply(class), power: *power }
        }
        GeneratorSpec::Conj { by, inner } => {
            GeneratorSpec::Conj { by: f.mul(by), inner: inner.clone() }
        }
    }
}

fn transport_pairs(f: &SpMatrix, pairs: &SymplecticPairList) -> SymplecticPairList {
    SymplecticPairList::new(pairs.pairs().iter().map(|(c, d)| (f.apply(c), f.apply(d))).collect())
}

/// Conjugates a whole word letterwise.
#[must_use]
pub fn conjugate_word(f: &SpMatrix, word: &TorelliWord) -> TorelliWord {
    TorelliWord::new(word.genus(), word.letters().iter().map(|l| transport(f, l)).collect())
}

/// The constant-coefficient functional: the projection of the degree-<=3
/// piece onto degree 0. It kills every monomial of degree >= 1.
#[must_use]
pub fn pi0(p: &BoolElement) -> bool {
    p.coefficient(Monomial::one())
}

/// The Rohlin invariant of the homology sphere presented by a Torelli
/// gluing word: the constant coefficient of the word's sigma-value.
pub fn rohlin(word: &TorelliWord) -> Result<bool, WordError> {
    Ok(pi0(&sigma_word(word)?))
}

/// mu^x: embeds the Rohlin bit into a 2-torsion group by sending 1̄ to x.
pub fn mu_x(word: &TorelliWord, x: &F2Vector) -> Result<F2Vector, WordError> {
    if rohlin(word)? {
        Ok(x.clone())
    } else {
        Ok(F2Vector::zeros(x.len()))
    }
}

/// A genus-1 BSCC whose classes mix the two Lagrangians, so its value
/// carries a constant term: the pair (a_1 + b_1 + a_2, -(a_1 + b_1 + b_2))
/// stabilized into the requested genus. Its one-letter word has Rohlin
/// invariant one.
///
/// # Panics
/// Panics if `genus < 2`.
#[must_use]
pub fn nontrivial_bscc_example(genus: usize) -> GeneratorSpec {
    assert!(genus >= 2, "the example needs two handles");
    let c = HClass::from_coords(vec![1, 1, 1, 0]).stabilize(genus);
    let d = HClass::from_coords(vec![-1, 0, -1, -1]).stabilize(genus);
    GeneratorSpec::Bscc(SymplecticPairList::new(vec![(c, d)]))
}

/// Bounded enumeration of genus-1 BSCC data (c, d) with coordinates in
/// {-1, 0, 1} and omega(c, d) = +-1, in deterministic coordinate order,
/// yielding the one-letter words whose Rohlin invariant is nonzero.
/// Surjectivity of the homomorphism guarantees such words exist; this
/// exhibits explicit witnesses at small genus.
#[must_use]
pub fn search_rohlin_witnesses(genus: usize, limit: usize) -> Vec<TorelliWord> {
    assert!((1..=3).contains(&genus), "bounded search is sized for genus <= 3");
    let n = 2 * genus;
    let total = 3usize.pow(n as u32);
    let decode = |code: usize| {
        let mut coords = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            coords.push((c % 3) as i64 - 1);
            c /= 3;
        }
        HClass::from_coords(coords)
    };
    let mut out = Vec::new();
    'outer: for cc in 0..total {
        let c = decode(cc);
        if c.is_zero() {
            continue;
        }
        for dc in 0..total {
            let d = decode(dc);
            let w = crate::symplectic::omega(&c, &d);
            if w != 1 && w != -1 {
                continue;
            }
            let spec = GeneratorSpec::Bscc(SymplecticPairList::new(vec![(c.clone(), d)]));
            debug_assert!(validate(&spec).is_ok());
            let word = TorelliWord::new(genus, vec![spec]);
            if rohlin(&word).unwrap() {
                out.push(word);
                if out.len() >= limit {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// First Rohlin-nontrivial one-letter word found by the bounded search.
#[must_use]
pub fn search_rohlin_witness(genus: usize) -> Option<TorelliWord> {
    search_rohlin_witnesses(genus, 1).into_iter().next()
}

/// sigma of a standard genus-k BP equals the sum over its genus-1
/// decomposition; exposed for the verification suites.
pub fn bp_decomposition_consistent(genus: usize, k: usize) -> Result<bool, WordError> {
    let spec = crate::words::standard_bp(genus, k)?;
    let whole = sigma_spec(&spec)?;
    let mut sum = BoolElement::zero(genus);
    for piece in decompose_bp(&spec)? {
        sum = sum.add(&sigma_spec(&piece)?);
    }
    Ok(whole == sum)
}
