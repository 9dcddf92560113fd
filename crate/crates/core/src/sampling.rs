//! Deterministic random generation of symplectic matrices, generator
//! specs and Torelli words for the randomized verification suites. All
//! entry points take a caller-seeded RNG, so suites are reproducible.

use crate::symplectic::{gl_embed, transvection_power, GLMatrix, HClass, SpMatrix};
use crate::words::{standard_bp, standard_bscc, GeneratorSpec, TorelliWord};
use rand::Rng;

/// A random product of at most `max_factors` generator matrices: embedded
/// GL transvections Id + E_ij and symplectic transvections along short
/// integral classes.
pub fn random_symplectic<R: Rng>(genus: usize, rng: &mut R, max_factors: usize) -> SpMatrix {
    let mut m = SpMatrix::identity(genus);
    let count = rng.gen_range(0..=max_factors);
    for _ in 0..count {
        let factor = if rng.gen_bool(0.5) {
            let i = rng.gen_range(1..=genus);
            let mut j = rng.gen_range(1..=genus);
            if i == j {
                j = if i == genus { 1 } else { i + 1 };
            }
            gl_embed(&GLMatrix::elementary(genus, i, j))
        } else {
            transvection_power(&short_class(genus, rng), if rng.gen_bool(0.5) { 1 } else { -1 })
        };
        m = m.mul(&factor);
    }
    m
}

/// A class with one or two nonzero coordinates in {-1, 1}.
pub fn short_class<R: Rng>(genus: usize, rng: &mut R) -> HClass {
    let mut coords = vec![0i64; 2 * genus];
    let first = rng.gen_range(0..2 * genus);
    coords[first] = if rng.gen_bool(0.5) { 1 } else { -1 };
    if rng.gen_bool(0.5) {
        let second = rng.gen_range(0..2 * genus);
        if second != first {
            coords[second] = if rng.gen_bool(0.5) { 1 } else { -1 };
        }
    }
    HClass::from_coords(coords)
}

/// A valid Torelli letter: a standard BSCC or BP moved by a random
/// symplectic matrix, occasionally wrapped in a formal conjugation.
/// Transport preserves the pairing conditions, so the result validates.
pub fn random_torelli_spec<R: Rng>(genus: usize, rng: &mut R) -> GeneratorSpec {
    let base = if rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=genus);
        standard_bscc(genus, k).unwrap()
    } else {
        let k = rng.gen_range(1..genus.max(2));
        standard_bp(genus, k).unwrap()
    };
    let moved = crate::bcj::transport(&random_symplectic(genus, rng, 6), &base);
    if rng.gen_bool(0.2) {
        GeneratorSpec::Conj { by: random_symplectic(genus, rng, 4), inner: Box::new(moved) }
    } else {
        moved
    }
}

/// A Torelli word of at most `max_len` random letters.
pub fn random_torelli_word<R: Rng>(genus: usize, rng: &mut R, max_len: usize) -> TorelliWord {
    let len = rng.gen_range(0..=max_len);
    TorelliWord::new(genus, (0..len).map(|_| random_torelli_spec(genus, rng)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::is_symplectic;
    use crate::words::validate;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_symplectic_preserves_form() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let m = random_symplectic(3, &mut rng, 10);
            assert!(is_symplectic(&m.rows()).unwrap());
        }
    }

    #[test]
    fn random_specs_validate() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..100 {
            let spec = random_torelli_spec(4, &mut rng);
            assert_eq!(validate(&spec), Ok(()));
            assert!(spec.is_torelli());
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let word1 = random_torelli_word(3, &mut StdRng::seed_from_u64(9), 4);
        let word2 = random_torelli_word(3, &mut StdRng::seed_from_u64(9), 4);
        assert_eq!(word1, word2);
    }
}
