//! One-shot machine verifications of concrete matrix and word
//! identities: the symmetric-matrix lifts, the handlebody conjugation
//! identity, the IA-relation in the free group, the lantern consistency
//! of the two embedded lantern configurations, and the randomized
//! equivariance and coinvariant-table suites.
//!
//! Every suite returns a structured report whose items name each checked
//! sub-identity, so a failure points at the first broken piece.

use crate::bcj::{sigma_spec, transport};
use crate::boolean::sp_action;
use crate::coinvariants::{self, CoinvariantError};
use crate::freegroup::FreeAut;
use crate::symplectic::{GLMatrixLike, HClass, SpMatrix};
use crate::words::{psi_of_word, validate, GeneratorSpec, SymplecticPairList, TorelliWord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("suite {suite} needs genus >= {min}, got {got}")]
    GenusTooSmall { suite: &'static str, min: usize, got: usize },
    #[error(transparent)]
    Coinvariant(#[from] CoinvariantError),
}

/// Outcome of one verified sub-identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportItem {
    pub label: String,
    pub passed: bool,
}

/// A named bundle of verified sub-identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), items: Vec::new() }
    }

    fn push(&mut self, label: impl Into<String>, passed: bool) {
        self.items.push(ReportItem { label: label.into(), passed });
    }

    #[must_use]
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    #[must_use]
    pub fn first_failure(&self) -> Option<&ReportItem> {
        self.items.iter().find(|i| !i.passed)
    }
}

fn lower_block_matrix(genus: usize, block: &GLMatrixLike) -> SpMatrix {
    SpMatrix::from_blocks(
        &GLMatrixLike::identity(genus),
        &GLMatrixLike::zero(genus),
        block,
        &GLMatrixLike::identity(genus),
    )
    .expect("lower unipotent block matrices are symplectic")
}

/// Checks the twist-word lifts of the generators E_ii and SE_ij of the
/// symmetric matrices against the displayed block forms.
pub fn verify_sg_lifts(genus: usize) -> Result<Report, CheckError> {
    if genus < 2 {
        return Err(CheckError::GenusTooSmall { suite: "sg-lifts", min: 2, got: genus });
    }
    let mut report = Report::new("sg-lifts");
    for k in 1..=genus {
        let word = TorelliWord::new(
            genus,
            vec![GeneratorSpec::Twist { class: HClass::b(genus, k), power: -1 }],
        );
        let expected = lower_block_matrix(genus, &GLMatrixLike::unit(genus, k, k));
        let got = psi_of_word(&word).expect("twist words validate");
        report.push(format!("E_{k}{k} lift"), got == expected);
    }
    for i in 1..=genus {
        for j in i + 1..=genus {
            let gamma = HClass::b(genus, i).sub(&HClass::b(genus, j));
            let word = TorelliWord::new(
                genus,
                vec![
                    GeneratorSpec::Twist { class: HClass::b(genus, i), power: -1 },
                    GeneratorSpec::Twist { class: gamma, power: 1 },
                    GeneratorSpec::Twist { class: HClass::b(genus, j), power: -1 },
                ],
            );
            let expected = lower_block_matrix(genus, &GLMatrixLike::symmetric_unit(genus, i, j));
            let got = psi_of_word(&word).expect("twist words validate");
            report.push(format!("SE_{i}{j} lift"), got == expected);
        }
    }
    Ok(report)
}

/// The conjugation identity of the handlebody argument: with
/// Psi(f) = [[Id - E_34, 0], [0, Id + E_43]], conjugating the SE_13 lift
/// produces the product of the SE_13 and SE_14 lifts.
pub fn verify_luft_conjugation(genus: usize) -> Result<Report, CheckError> {
    if genus < 4 {
        return Err(CheckError::GenusTooSmall { suite: "luft", min: 4, got: genus });
    }
    let mut report = Report::new("luft");
    let g = genus;

    let a_block = GLMatrixLike::identity(g).sub(&GLMatrixLike::unit(g, 3, 4));
    let d_block = GLMatrixLike::identity(g).add(&GLMatrixLike::unit(g, 4, 3));
    let psi_f =
        SpMatrix::from_blocks(&a_block, &GLMatrixLike::zero(g), &GLMatrixLike::zero(g), &d_block)
            .expect("diag(G, tG^{-1}) is symplectic");

    // the same matrix from its twist word T_{alpha_3} T_{eta_34}^{-1} T_{beta_4},
    // with the eta class oriented as a_3 - b_4
    let f_word = TorelliWord::new(
        g,
        vec![
            GeneratorSpec::Twist { class: HClass::a(g, 3), power: 1 },
            GeneratorSpec::Twist { class: HClass::a(g, 3).sub(&HClass::b(g, 4)), power: -1 },
            GeneratorSpec::Twist { class: HClass::b(g, 4), power: 1 },
        ],
    );
    report.push(
        "Psi(f) matches its twist word",
        psi_of_word(&f_word).expect("twist words validate") == psi_f,
    );

    let lift13 = lower_block_matrix(g, &GLMatrixLike::symmetric_unit(g, 1, 3));
    let lift14 = lower_block_matrix(g, &GLMatrixLike::symmetric_unit(g, 1, 4));
    let conjugated = psi_f.mul(&lift13).mul(&psi_f.inverse());
    report.push("conjugation identity", conjugated == lift13.mul(&lift14));

    let expected_block =
        GLMatrixLike::symmetric_unit(g, 1, 3).add(&GLMatrixLike::symmetric_unit(g, 1, 4));
    let block_ok =
        (0..g).all(|i| (0..g).all(|j| conjugated.get(g + i, j) == expected_block.get(i, j)));
    report.push("lower-left block is SE_13 + SE_14", block_ok);

    Ok(report)
}

/// Compares f K_13 f^{-1} with K_12 K_13 image-by-image for the supplied
/// f; the reference argument uses f: alpha_3 -> alpha_3 alpha_2.
#[must_use]
pub fn ia_conjugation_report(f: &FreeAut) -> Report {
    let rank = f.rank();
    let mut report = Report::new("ia");
    let k13 = FreeAut::k_map(rank, 1, 3);
    let k12 = FreeAut::k_map(rank, 1, 2);
    let lhs = f.compose(&k13).compose(&f.inverse());
    let rhs = k12.compose(&k13);
    for i in 0..rank {
        report.push(format!("image of alpha{}", i + 1), lhs.image(i) == rhs.image(i));
    }
    report
}

/// The IA-relation f K_13 f^{-1} = K_12 K_13 in rank g.
pub fn verify_ia_relation(genus: usize) -> Result<Report, CheckError> {
    if genus < 3 {
        return Err(CheckError::GenusTooSmall { suite: "ia", min: 3, got: genus });
    }
    Ok(ia_conjugation_report(&FreeAut::right_multiplier(genus, 3, 2)))
}

/// Frozen homology data for the two embedded lantern configurations.
/// The bounding-pair classes are read directly off the figure (handles 1
/// and 2 for the first lantern, 3 and 4 for the second, with the third
/// curve of each lantern homologous to the sum); the subsurface pair
/// lists were fixed once by a bounded search over figure-consistent
/// choices and are committed here as golden data.
#[derive(Clone, Debug)]
pub struct LanternAssignment {
    pub zeta: [GeneratorSpec; 3],
    pub xi: [GeneratorSpec; 3],
    pub gamma: GeneratorSpec,
}

/// The committed assignment at the given genus (>= 4); classes live on
/// handles 1..4 and are zero elsewhere.
pub fn lantern_assignment(genus: usize) -> Result<LanternAssignment, CheckError> {
    if genus < 4 {
        return Err(CheckError::GenusTooSmall { suite: "lantern", min: 4, got: genus });
    }
    let g = genus;
    let pair = |i: usize| (HClass::a(g, i), HClass::b(g, i));
    let std2 = || SymplecticPairList::new(vec![pair(1), pair(2)]);

    let zeta = [
        // top/bottom meridians of handle 2, spanning handle 1
        GeneratorSpec::Bp { class: HClass::b(g, 2), pairs: SymplecticPairList::new(vec![pair(1)]) },
        // meridian of handle 1 against the curve swung around handle 2
        GeneratorSpec::Bp { class: HClass::b(g, 1), pairs: SymplecticPairList::new(vec![pair(2)]) },
        // the neck curve between handles 1 and 2 against the overarching one
        GeneratorSpec::Bp {
            class: HClass::b(g, 1).add(&HClass::b(g, 2)),
            pairs: SymplecticPairList::new(vec![(
                HClass::b(g, 1),
                HClass::a(g, 1).sub(&HClass::a(g, 2)),
            )]),
        },
    ];
    let xi = [
        GeneratorSpec::Bp { class: HClass::b(g, 3), pairs: std2() },
        GeneratorSpec::Bp { class: HClass::b(g, 4), pairs: std2() },
        GeneratorSpec::Bp { class: HClass::b(g, 3).add(&HClass::b(g, 4)), pairs: std2() },
    ];
    let gamma = GeneratorSpec::Bscc(std2());
    Ok(LanternAssignment { zeta, xi, gamma })
}

/// Sigma-level consistency of both lantern relations and the combined
/// identity, for the frozen assignment. The lantern relation itself is
/// topological input; this checks that the homology data assigned to the
/// figure is consistent with it.
pub fn verify_lantern_sigma(genus: usize) -> Result<Report, CheckError> {
    let data = lantern_assignment(genus)?;
    let g = genus;
    let mut report = Report::new("lantern");

    for (name, spec) in data
        .zeta
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("zeta{}", i + 1), s))
        .chain(data.xi.iter().enumerate().map(|(i, s)| (format!("xi{}", i + 1), s)))
        .chain(std::iter::once(("gamma".to_string(), &data.gamma)))
    {
        report.push(format!("{name} data validates"), validate(spec).is_ok());
    }

    let sigma_of = |s: &GeneratorSpec| sigma_spec(s).expect("assignment letters are Torelli");
    let gamma_sigma = sigma_of(&data.gamma);

    let zeta_sum = data
        .zeta
        .iter()
        .map(&sigma_of)
        .fold(crate::boolean::BoolElement::zero(g), |acc, s| acc.add(&s));
    report.push("first lantern: sum of zeta pairs equals sigma(T_gamma)", zeta_sum == gamma_sigma);

    let xi_sum = data
        .xi
        .iter()
        .map(&sigma_of)
        .fold(crate::boolean::BoolElement::zero(g), |acc, s| acc.add(&s));
    report.push("second lantern: sum of xi pairs equals sigma(T_gamma)", xi_sum == gamma_sigma);

    let mut combined = sigma_of(&data.zeta[1]).add(&sigma_of(&data.zeta[2]));
    for s in &data.xi {
        combined = combined.add(&sigma_of(s));
    }
    report.push("combined identity resolves zeta1", combined == sigma_of(&data.zeta[0]));

    let lhs_word = TorelliWord::new(g, data.zeta.to_vec());
    let rhs_word = TorelliWord::new(g, vec![data.gamma.clone()]);
    let psi_ok = psi_of_word(&lhs_word).expect("letters validate").is_identity()
        && psi_of_word(&rhs_word).expect("letters validate").is_identity();
    report.push("both sides act trivially on homology", psi_ok);

    Ok(report)
}

/// Randomized equivariance suite: for seeded random pairs of a symplectic
/// matrix (a product of at most ten generators) and a valid Torelli
/// letter, moving the letter and acting on the value agree exactly.
pub fn verify_equivariance(genus: usize, cases: usize, seed: u64) -> Result<Report, CheckError> {
    if genus < 2 {
        return Err(CheckError::GenusTooSmall { suite: "equivariance", min: 2, got: genus });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("equivariance");
    let mut failures = 0usize;
    for case in 0..cases {
        let f = crate::sampling::random_symplectic(genus, &mut rng, 10);
        let spec = crate::sampling::random_torelli_spec(genus, &mut rng);
        let lhs = sigma_spec(&transport(&f, &spec)).expect("transported specs validate");
        let rhs = sp_action(&f, &sigma_spec(&spec).expect("specs validate"));
        if lhs != rhs {
            failures += 1;
            report.push(format!("case {case} disagreement"), false);
        }
    }
    report.push(
        format!("sigma-equivariance on {} random (f, spec) pairs at genus {genus}", cases),
        failures == 0,
    );
    Ok(report)
}

/// Coinvariant-table suite: computes the filtration table and checks the
/// asserted dimensions and representatives.
pub fn verify_lemma_coinv(genus: usize) -> Result<Report, CheckError> {
    let rows = coinvariants::verify_lemma_coinvariants(genus)?;
    let mut report = Report::new("lemma-coinv");
    for row in rows {
        match &row.asserted {
            Some((dim, reps)) => report.push(
                format!(
                    "degree {}: dim {} reps [{}] (asserted {} [{}])",
                    row.degree,
                    row.dim,
                    row.representatives.join(", "),
                    dim,
                    reps.join(", ")
                ),
                row.matches_assertion() == Some(true),
            ),
            None => report.push(
                format!(
                    "degree {}: dim {} reps [{}] (reported, no asserted value)",
                    row.degree,
                    row.dim,
                    row.representatives.join(", ")
                ),
                true,
            ),
        }
    }
    Ok(report)
}

/// Vanishing of the third exterior coinvariants and agreement with the
/// top graded piece of the filtration.
pub fn verify_lambda3(genus: usize) -> Result<Report, CheckError> {
    let mut report = Report::new("lambda3");
    let lambda = coinvariants::coinvariants(&coinvariants::gl_action_on_lambda3(genus)?)?;
    let graded =
        coinvariants::coinvariants(&coinvariants::gl_action_on_degree_quotient(genus, 3)?)?;
    if genus >= 4 {
        report.push("third exterior coinvariants vanish", lambda.dim() == 0);
    } else {
        report.push(format!("third exterior coinvariant dim = {} (reported)", lambda.dim()), true);
    }
    report.push(
        "third exterior coinvariants match the top graded piece",
        lambda.dim() == graded.dim(),
    );
    Ok(report)
}

/// Decomposition suite: sigma of the standard genus-k BP equals the sum
/// over its genus-1 pieces for k = 2, 3 (at genus k + 2).
pub fn verify_bp_decomposition() -> Result<Report, CheckError> {
    let mut report = Report::new("bp-decomposition");
    for k in [2usize, 3] {
        let genus = k + 2;
        let ok = crate::bcj::bp_decomposition_consistent(genus, k).expect("standard BPs decompose");
        report.push(format!("genus-{k} BP splits into {k} genus-1 pieces at genus {genus}"), ok);
    }
    Ok(report)
}

/// Rohlin-homomorphism suite: additivity on seeded random word pairs,
/// stabilization invariance, vanishing on the empty word, and existence
/// of a nontrivial witness at genus 2.
pub fn verify_rohlin_properties(
    genus: usize,
    pairs: usize,
    seed: u64,
) -> Result<Report, CheckError> {
    if genus < 2 {
        return Err(CheckError::GenusTooSmall { suite: "rohlin", min: 2, got: genus });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("rohlin");

    let mut additive_failures = 0usize;
    let mut stab_failures = 0usize;
    for _ in 0..pairs {
        let w1 = crate::sampling::random_torelli_word(genus, &mut rng, 3);
        let w2 = crate::sampling::random_torelli_word(genus, &mut rng, 3);
        let concat = w1.concat(&w2);
        let additive = crate::bcj::rohlin(&concat).unwrap()
            == (crate::bcj::rohlin(&w1).unwrap() ^ crate::bcj::rohlin(&w2).unwrap());
        if !additive {
            additive_failures += 1;
        }
        let up = crate::words::stabilize_word(&w1, genus + 2).unwrap();
        if crate::bcj::rohlin(&up).unwrap() != crate::bcj::rohlin(&w1).unwrap() {
            stab_failures += 1;
        }
    }
    report.push(format!("additive on {pairs} random word pairs"), additive_failures == 0);
    report.push("stabilization-invariant on sampled words", stab_failures == 0);
    report.push(
        "empty word glues back the standard sphere",
        !crate::bcj::rohlin(&TorelliWord::empty(genus)).unwrap(),
    );

    let witness = crate::bcj::search_rohlin_witness(2);
    report.push(
        "bounded search exhibits a nontrivial word at genus 2",
        witness.is_some_and(|w| crate::bcj::rohlin(&w).unwrap()),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::FreeWord;

    #[test]
    fn sg_lifts_pass_small_genus() {
        for g in [2, 3, 4] {
            let report = verify_sg_lifts(g).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
            assert_eq!(report.items.len(), g + g * (g - 1) / 2);
        }
        assert!(verify_sg_lifts(1).is_err());
    }

    #[test]
    fn luft_conjugation_passes() {
        for g in [4, 5] {
            let report = verify_luft_conjugation(g).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        }
        assert_eq!(
            verify_luft_conjugation(3),
            Err(CheckError::GenusTooSmall { suite: "luft", min: 4, got: 3 })
        );
    }

    #[test]
    fn luft_sign_flip_fails() {
        // replacing Psi(f) by diag(Id + E_34, Id - E_43) must break the identity
        let g = 4;
        let a_block = GLMatrixLike::identity(g).add(&GLMatrixLike::unit(g, 3, 4));
        let d_block = GLMatrixLike::identity(g).sub(&GLMatrixLike::unit(g, 4, 3));
        let flipped = SpMatrix::from_blocks(
            &a_block,
            &GLMatrixLike::zero(g),
            &GLMatrixLike::zero(g),
            &d_block,
        )
        .unwrap();
        let lift13 = lower_block_matrix(g, &GLMatrixLike::symmetric_unit(g, 1, 3));
        let lift14 = lower_block_matrix(g, &GLMatrixLike::symmetric_unit(g, 1, 4));
        assert_ne!(flipped.mul(&lift13).mul(&flipped.inverse()), lift13.mul(&lift14));
    }

    #[test]
    fn ia_relation_passes() {
        for g in [3, 4] {
            let report = verify_ia_relation(g).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        }
        assert!(verify_ia_relation(2).is_err());
    }

    #[test]
    fn ia_relation_displayed_image() {
        // f K_13 f^{-1}(alpha_1) = alpha_3 alpha_2 alpha_1 alpha_2^{-1} alpha_3^{-1}
        let f = FreeAut::right_multiplier(3, 3, 2);
        let k13 = FreeAut::k_map(3, 1, 3);
        let lhs = f.compose(&k13).compose(&f.inverse());
        assert_eq!(
            lhs.image(0),
            &FreeWord::from_letters(3, &[(2, 1), (1, 1), (0, 1), (1, -1), (2, -1)])
        );
    }

    #[test]
    fn perturbed_f_breaks_ia_relation() {
        // alpha_3 -> alpha_2 alpha_3 instead of alpha_3 alpha_2
        let rank = 3;
        let mut images = Vec::new();
        let mut inverses = Vec::new();
        for t in 0..rank {
            if t == 2 {
                images.push(FreeWord::from_letters(rank, &[(1, 1), (2, 1)]));
                inverses.push(FreeWord::from_letters(rank, &[(1, -1), (2, 1)]));
            } else {
                images.push(FreeWord::generator(rank, t));
                inverses.push(FreeWord::generator(rank, t));
            }
        }
        // inverse of alpha_3 -> alpha_2 alpha_3 sends alpha_3 -> alpha_2^{-1} alpha_3
        let perturbed = FreeAut::new(images, inverses).unwrap();
        let report = ia_conjugation_report(&perturbed);
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().label, "image of alpha1");
    }

    #[test]
    fn lantern_sigma_passes_at_four_and_five() {
        for g in [4, 5] {
            let report = verify_lantern_sigma(g).unwrap();
            assert!(report.passed(), "genus {g}: {:?}", report.first_failure());
        }
        assert!(verify_lantern_sigma(3).is_err());
    }

    #[test]
    fn lantern_assignment_found_by_bounded_search() {
        // Re-derive the zeta_3 pair by bounded search over classes
        // supported on handles 1 and 2 with entries in {-1, 0, 1}; the
        // committed pair must be among the solutions.
        let g = 4;
        let data = lantern_assignment(g).unwrap();
        let sigma_of = |s: &GeneratorSpec| sigma_spec(s).unwrap();
        let target =
            sigma_of(&data.gamma).add(&sigma_of(&data.zeta[0])).add(&sigma_of(&data.zeta[1]));
        let e3 = HClass::b(g, 1).add(&HClass::b(g, 2));

        let decode = |code: usize| {
            let mut coords = vec![0i64; 2 * g];
            let mut c = code;
            for slot in [0usize, 1, g, g + 1] {
                coords[slot] = (c % 3) as i64 - 1;
                c /= 3;
            }
            HClass::from_coords(coords)
        };
        let mut solutions = Vec::new();
        for cc in 0..81 {
            for dc in 0..81 {
                let (c, d) = (decode(cc), decode(dc));
                let spec = GeneratorSpec::Bp {
                    class: e3.clone(),
                    pairs: SymplecticPairList::new(vec![(c.clone(), d.clone())]),
                };
                if validate(&spec).is_ok() && sigma_of(&spec) == target {
                    solutions.push((c, d));
                }
            }
        }
        assert!(!solutions.is_empty());
        let committed = (HClass::b(g, 1), HClass::a(g, 1).sub(&HClass::a(g, 2)));
        assert!(solutions.contains(&committed));

        // Same for the xi side: search standard two-handle pair lists.
        let handle_pairs: Vec<(usize, usize)> =
            (1..=g).flat_map(|i| (i + 1..=g).map(move |j| (i, j))).collect();
        let gamma_sigma = sigma_of(&data.gamma);
        let xi1_sigma = sigma_of(&data.xi[0]);
        let mut xi_solutions = Vec::new();
        for &(i2, j2) in &handle_pairs {
            for &(i3, j3) in &handle_pairs {
                let list = |i: usize, j: usize| {
                    SymplecticPairList::new(vec![
                        (HClass::a(g, i), HClass::b(g, i)),
                        (HClass::a(g, j), HClass::b(g, j)),
                    ])
                };
                let xi2 = GeneratorSpec::Bp { class: HClass::b(g, 4), pairs: list(i2, j2) };
                let xi3 = GeneratorSpec::Bp {
                    class: HClass::b(g, 3).add(&HClass::b(g, 4)),
                    pairs: list(i3, j3),
                };
                if validate(&xi2).is_err() || validate(&xi3).is_err() {
                    continue;
                }
                let total = xi1_sigma.add(&sigma_of(&xi2)).add(&sigma_of(&xi3));
                if total == gamma_sigma {
                    xi_solutions.push(((i2, j2), (i3, j3)));
                }
            }
        }
        assert!(xi_solutions.contains(&((1, 2), (1, 2))));
    }

    #[test]
    fn equivariance_suite_small_run() {
        let report = verify_equivariance(3, 50, 0xBC1).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn lemma_coinv_suite() {
        for g in [3, 4] {
            let report = verify_lemma_coinv(g).unwrap();
            assert!(report.passed(), "genus {g}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn lambda3_suite() {
        let report = verify_lambda3(4).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn rohlin_suite_small_run() {
        let report = verify_rohlin_properties(2, 25, 0xBC2).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn bp_decomposition_suite() {
        assert!(verify_bp_decomposition().unwrap().passed());
    }
}
