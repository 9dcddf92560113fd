//! Harness for 2-cocycles on Torelli words, their trivializations, the
//! three gluing conditions, the torsor cochain, and assembly of candidate
//! invariants q + mu^x with double-coset vanishing checks.
//!
//! Cocycles and trivializations are user-supplied callables with values
//! in a 2-torsion coefficient group (GF(2) coordinate vectors). Every
//! group-level condition is checked on generator samples only — standard
//! inner-handlebody bounding pairs for one side, their outer mirrors for
//! the other — and the reports say "sampled", never "proved": membership
//! testing beyond standard position is topological and out of scope here.

use crate::bcj::{conjugate_word, mu_x, nontrivial_bscc_example};
use crate::gf2::F2Vector;
use crate::symplectic::{gl_embed, GLMatrix, HClass, SpMatrix};
use crate::words::{
    stabilize_word, standard_bp, standard_bscc, GeneratorSpec, SymplecticPairList, TorelliWord,
};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("trivialization check failed: {0}")]
    TrivializationFailed(String),
}

/// A 2-cochain evaluator C(phi, psi) with values in a rank-r 2-torsion
/// group. Evaluators must be pure; they may be called at any genus the
/// sampled words reach (stabilization checks evaluate one genus up).
#[derive(Clone)]
pub struct CocycleOracle {
    rank: usize,
    eval: Arc<PairEvaluator>,
}

type PairEvaluator = dyn Fn(&TorelliWord, &TorelliWord) -> F2Vector + Send + Sync;
type WordEvaluator = dyn Fn(&TorelliWord) -> F2Vector + Send + Sync;

impl CocycleOracle {
    pub fn new(
        rank: usize,
        eval: impl Fn(&TorelliWord, &TorelliWord) -> F2Vector + Send + Sync + 'static,
    ) -> Self {
        Self { rank, eval: Arc::new(eval) }
    }

    /// The zero cocycle.
    #[must_use]
    pub fn zero(rank: usize) -> Self {
        Self::new(rank, move |_, _| F2Vector::zeros(rank))
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[must_use]
    pub fn eval(&self, phi: &TorelliWord, psi: &TorelliWord) -> F2Vector {
        let v = (self.eval)(phi, psi);
        assert_eq!(v.len(), self.rank, "cocycle evaluator returned wrong rank");
        v
    }
}

/// A word evaluator q with values in a rank-r 2-torsion group.
#[derive(Clone)]
pub struct TrivializationOracle {
    rank: usize,
    eval: Arc<WordEvaluator>,
}

impl TrivializationOracle {
    pub fn new(
        rank: usize,
        eval: impl Fn(&TorelliWord) -> F2Vector + Send + Sync + 'static,
    ) -> Self {
        Self { rank, eval: Arc::new(eval) }
    }

    #[must_use]
    pub fn zero(rank: usize) -> Self {
        Self::new(rank, move |_| F2Vector::zeros(rank))
    }

    /// The homomorphism mu^x for a fixed 2-torsion element.
    #[must_use]
    pub fn mu(x: F2Vector) -> Self {
        let rank = x.len();
        Self::new(rank, move |w| mu_x(w, &x).expect("mu is defined on Torelli words"))
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[must_use]
    pub fn eval(&self, w: &TorelliWord) -> F2Vector {
        let v = (self.eval)(w);
        assert_eq!(v.len(), self.rank, "trivialization evaluator returned wrong rank");
        v
    }

    /// Pointwise sum of two evaluators.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let (a, b) = (self.clone(), other.clone());
        Self::new(self.rank, move |w| a.eval(w).xor(&b.eval(w)))
    }
}

impl std::fmt::Debug for CocycleOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CocycleOracle").field("rank", &self.rank).finish_non_exhaustive()
    }
}

impl std::fmt::Debug for TrivializationOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TrivializationOracle").field("rank", &self.rank).finish_non_exhaustive()
    }
}

/// The coboundary of a word evaluator:
/// (phi, psi) -> F(phi) + F(psi) - F(phi psi). In a 2-torsion group the
/// sign is immaterial; the result satisfies the cocycle identity by
/// construction.
#[must_use]
pub fn coboundary(f: &TrivializationOracle) -> CocycleOracle {
    let f = f.clone();
    CocycleOracle::new(f.rank(), move |phi, psi| {
        f.eval(phi).xor(&f.eval(psi)).xor(&f.eval(&phi.concat(psi)))
    })
}

/// The torsor cochain of q at a conjugator: w -> q(f w f^{-1}) - q(w).
/// q is a sampled fixed point of the conjugation action exactly when
/// this evaluator vanishes on the samples for every sampled conjugator.
#[must_use]
pub fn torsor_cochain(q: &TrivializationOracle, f: &SpMatrix) -> TrivializationOracle {
    let q = q.clone();
    let f = f.clone();
    TrivializationOracle::new(q.rank(), move |w| q.eval(&conjugate_word(&f, w)).xor(&q.eval(w)))
}

/// Sample material for the condition checks: general Torelli words, the
/// two one-sided generator families, and conjugating matrices.
#[derive(Clone)]
pub struct Samples {
    genus: usize,
    words: Vec<TorelliWord>,
    ta_words: Vec<TorelliWord>,
    tb_words: Vec<TorelliWord>,
    conjugators: Vec<SpMatrix>,
}

impl Samples {
    pub fn new(
        genus: usize,
        words: Vec<TorelliWord>,
        ta_words: Vec<TorelliWord>,
        tb_words: Vec<TorelliWord>,
        conjugators: Vec<SpMatrix>,
    ) -> Self {
        for w in words.iter().chain(&ta_words).chain(&tb_words) {
            assert_eq!(w.genus(), genus, "sample word genus mismatch");
        }
        for c in &conjugators {
            assert_eq!(c.genus(), genus, "conjugator genus mismatch");
        }
        Self { genus, words, ta_words, tb_words, conjugators }
    }

    /// Default sample set: standard separating twists and bounding pairs,
    /// one Rohlin-nontrivial word, inner/outer standard-position bounding
    /// pairs as the one-sided families, and embedded GL conjugators.
    #[must_use]
    pub fn standard(genus: usize) -> Self {
        assert!(genus >= 3, "standard samples need genus >= 3");
        let g = genus;
        let bscc = |k| TorelliWord::new(g, vec![standard_bscc(g, k).unwrap()]);
        let bp = |k| TorelliWord::new(g, vec![standard_bp(g, k).unwrap()]);
        let words = vec![
            TorelliWord::empty(g),
            bscc(1),
            bscc(2),
            bp(1),
            bp(1).concat(&bscc(1)),
            TorelliWord::new(g, vec![nontrivial_bscc_example(g)]),
        ];
        // outer-handlebody mirrors: bounding-pair class in the a-span
        let ta_words = (1..g.min(3))
            .map(|k| {
                let pairs = (1..=k).map(|i| (HClass::a(g, i), HClass::b(g, i))).collect();
                TorelliWord::new(
                    g,
                    vec![GeneratorSpec::Bp {
                        class: HClass::a(g, k + 1),
                        pairs: SymplecticPairList::new(pairs),
                    }],
                )
            })
            .collect();
        let tb_words = (1..g.min(3)).map(bp).collect();
        let conjugators = vec![
            gl_embed(&GLMatrix::elementary(g, 1, 2)),
            gl_embed(&GLMatrix::elementary(g, 2, 1)),
            gl_embed(&GLMatrix::permutation(
                &(0..g)
                    .map(|i| match i {
                        0 => 1,
                        1 => 0,
                        other => other,
                    })
                    .collect::<Vec<_>>(),
            )),
        ];
        Self::new(g, words, ta_words, tb_words, conjugators)
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn words(&self) -> &[TorelliWord] {
        &self.words
    }

    #[must_use]
    pub fn ta_words(&self) -> &[TorelliWord] {
        &self.ta_words
    }

    #[must_use]
    pub fn tb_words(&self) -> &[TorelliWord] {
        &self.tb_words
    }

    #[must_use]
    pub fn conjugators(&self) -> &[SpMatrix] {
        &self.conjugators
    }
}

/// Violations of the three cocycle conditions on the samples, in
/// deterministic order.
#[derive(Clone, Debug, Default)]
pub struct ConditionReport {
    pub stabilization: Vec<String>,
    pub conjugation: Vec<String>,
    pub one_sided_vanishing: Vec<String>,
}

impl ConditionReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.stabilization.is_empty()
            && self.conjugation.is_empty()
            && self.one_sided_vanishing.is_empty()
    }
}

/// Checks conditions (1)-(3) on every sampled combination:
/// compatibility with stabilization, invariance under the sampled
/// conjugators, and vanishing when either argument comes from the
/// one-sided families.
#[must_use]
pub fn check_conditions(c: &CocycleOracle, samples: &Samples) -> ConditionReport {
    let mut report = ConditionReport::default();
    let up = samples.genus() + 1;
    for (i, w1) in samples.words().iter().enumerate() {
        for (j, w2) in samples.words().iter().enumerate() {
            let base = c.eval(w1, w2);
            let stabilized =
                c.eval(&stabilize_word(w1, up).unwrap(), &stabilize_word(w2, up).unwrap());
            if base != stabilized {
                report.stabilization.push(format!("words[{i}], words[{j}]"));
            }
            for (k, f) in samples.conjugators().iter().enumerate() {
                let conjugated = c.eval(&conjugate_word(f, w1), &conjugate_word(f, w2));
                if base != conjugated {
                    report.conjugation.push(format!("conjugators[{k}] on words[{i}], words[{j}]"));
                }
            }
        }
    }
    for (i, ta) in samples.ta_words().iter().enumerate() {
        for (j, w) in samples.words().iter().enumerate() {
            if !c.eval(ta, w).is_zero() {
                report.one_sided_vanishing.push(format!("ta[{i}], words[{j}]"));
            }
        }
    }
    for (i, w) in samples.words().iter().enumerate() {
        for (j, tb) in samples.tb_words().iter().enumerate() {
            if !c.eval(w, tb).is_zero() {
                report.one_sided_vanishing.push(format!("words[{i}], tb[{j}]"));
            }
        }
    }
    report
}

/// Violations of q(phi) + q(psi) - q(phi psi) = C(phi, psi) on sampled
/// pairs.
#[must_use]
pub fn check_trivialization(
    q: &TrivializationOracle,
    c: &CocycleOracle,
    samples: &Samples,
) -> Vec<String> {
    let mut violations = Vec::new();
    for (i, w1) in samples.words().iter().enumerate() {
        for (j, w2) in samples.words().iter().enumerate() {
            let delta = q.eval(w1).xor(&q.eval(w2)).xor(&q.eval(&w1.concat(w2)));
            if delta != c.eval(w1, w2) {
                violations.push(format!("words[{i}], words[{j}]"));
            }
        }
    }
    violations
}

/// Whether the torsor cochain of q vanishes on all samples for all
/// sampled conjugators (the sampled fixed-point condition).
#[must_use]
pub fn torsor_vanishes(q: &TrivializationOracle, samples: &Samples) -> bool {
    samples.conjugators().iter().all(|f| {
        let rho = torsor_cochain(q, f);
        samples.words().iter().all(|w| rho.eval(w).is_zero())
    })
}

/// Well-definedness evidence for an assembled candidate, all on samples.
#[derive(Clone, Debug, Default)]
pub struct AssembleReport {
    pub ta_nonvanishing: Vec<String>,
    pub tb_nonvanishing: Vec<String>,
    pub stabilization: Vec<String>,
}

impl AssembleReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.ta_nonvanishing.is_empty()
            && self.tb_nonvanishing.is_empty()
            && self.stabilization.is_empty()
    }
}

/// Builds the candidate invariant w -> q(w) + mu^x(w) after checking that
/// q trivializes C on the samples; the report collects vanishing on the
/// one-sided generator samples and stabilization compatibility.
pub fn assemble(
    q: &TrivializationOracle,
    c: &CocycleOracle,
    x: &F2Vector,
    samples: &Samples,
) -> Result<(TrivializationOracle, AssembleReport), AssembleError> {
    let violations = check_trivialization(q, c, samples);
    if !violations.is_empty() {
        return Err(AssembleError::TrivializationFailed(violations.join("; ")));
    }
    let candidate = q.add(&TrivializationOracle::mu(x.clone()));
    let mut report = AssembleReport::default();
    for (i, ta) in samples.ta_words().iter().enumerate() {
        if !candidate.eval(ta).is_zero() {
            report.ta_nonvanishing.push(format!("ta[{i}]"));
        }
    }
    for (i, tb) in samples.tb_words().iter().enumerate() {
        if !candidate.eval(tb).is_zero() {
            report.tb_nonvanishing.push(format!("tb[{i}]"));
        }
    }
    let up = samples.genus() + 1;
    for (i, w) in samples.words().iter().enumerate() {
        if candidate.eval(&stabilize_word(w, up).unwrap()) != candidate.eval(w) {
            report.stabilization.push(format!("words[{i}]"));
        }
    }
    Ok((candidate, report))
}
