//! Free-group words and automorphisms of the handlebody fundamental
//! group, just enough to compose explicit maps and compare images.
//!
//! Words are stored freely reduced; automorphisms carry a supplied
//! inverse whose composite is checked to be the identity on every
//! generator.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("supplied inverse fails on generator {0}")]
    NotInverse(usize),
    #[error("expected {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
}

/// A freely reduced word in the rank-g free group. Letters are
/// (generator index, exponent) with 0-based indices and exponents +-1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    #[must_use]
    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    /// The generator alpha_i (0-based).
    #[must_use]
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i < rank, "generator index out of range");
        Self { rank, letters: vec![(i, 1)] }
    }

    /// Builds a word from letters, reducing adjacent inverse pairs.
    #[must_use]
    pub fn from_letters(rank: usize, letters: &[(usize, i8)]) -> Self {
        let mut out = Self::identity(rank);
        for &(i, e) in letters {
            assert!(i < rank, "generator index out of range");
            assert!(e == 1 || e == -1, "exponents must be +-1");
            out.push(i, e);
        }
        out
    }

    fn push(&mut self, i: usize, e: i8) {
        if let Some(&(j, f)) = self.letters.last() {
            if i == j && e == -f {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((i, e));
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[must_use]
    pub fn letters(&self) -> &[(usize, i8)] {
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

    /// Concatenation with free reduction at the seam.
    ///
    /// # Panics
    /// Panics on rank mismatch.
    #[must_use]
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = self.clone();
        for &(i, e) in &other.letters {
            out.push(i, e);
        }
        out
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for &(i, e) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "a{}{}", i + 1, if e == 1 { "" } else { "^-1" })?;
        }
        Ok(())
    }
}

/// An automorphism of the free group, given by generator images together
/// with a witness inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeAut {
    rank: usize,
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl FreeAut {
    /// Validates that the two assignments compose to the identity both
    /// ways.
    pub fn new(
        images: Vec<FreeWord>,
        inverse_images: Vec<FreeWord>,
    ) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(FreeGroupError::WrongImageCount {
                expected: rank,
                got: inverse_images.len(),
            });
        }
        for w in images.iter().chain(&inverse_images) {
            if w.rank() != rank {
                return Err(FreeGroupError::RankMismatch(w.rank(), rank));
            }
        }
        let aut = Self { rank, images, inverse_images };
        let inv = aut.inverse();
        for i in 0..rank {
            let gen = FreeWord::generator(rank, i);
            if aut.apply(&inv.apply(&gen)) != gen || inv.apply(&aut.apply(&gen)) != gen {
                return Err(FreeGroupError::NotInverse(i));
            }
        }
        Ok(aut)
    }

    #[must_use]
    pub fn identity(rank: usize) -> Self {
        let images: Vec<FreeWord> = (0..rank).map(|i| FreeWord::generator(rank, i)).collect();
        Self { rank, images: images.clone(), inverse_images: images }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[must_use]
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i]
    }

    /// Substitutes generator images and freely reduces.
    #[must_use]
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        assert_eq!(w.rank(), self.rank, "rank mismatch");
        let mut out = FreeWord::identity(self.rank);
        for &(i, e) in w.letters() {
            let img = if e == 1 { self.images[i].clone() } else { self.images[i].inverse() };
            out = out.concat(&img);
        }
        out
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// Composition (self ∘ other): apply `other` first.
    ///
    /// # Panics
    /// Panics on rank mismatch.
    #[must_use]
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let images = (0..self.rank).map(|i| self.apply(&other.images[i])).collect();
        let inverse_images =
            (0..self.rank).map(|i| other.inverse().apply(&self.inverse_images[i])).collect();
        Self { rank: self.rank, images, inverse_images }
    }

    /// Whether the maps agree on every generator; returns the first
    /// disagreeing generator otherwise.
    #[must_use]
    pub fn first_disagreement(&self, other: &Self) -> Option<usize> {
        (0..self.rank).find(|&i| self.images[i] != other.images[i])
    }

    /// The conjugation map K_ij: alpha_i -> alpha_j alpha_i alpha_j^{-1},
    /// fixing every other generator (1-based indices).
    #[must_use]
    pub fn k_map(rank: usize, i: usize, j: usize) -> Self {
        assert!(i != j && (1..=rank).contains(&i) && (1..=rank).contains(&j));
        let (i, j) = (i - 1, j - 1);
        let mut images = Vec::new();
        let mut inverse_images = Vec::new();
        for t in 0..rank {
            if t == i {
                images.push(FreeWord::from_letters(rank, &[(j, 1), (i, 1), (j, -1)]));
                inverse_images.push(FreeWord::from_letters(rank, &[(j, -1), (i, 1), (j, 1)]));
            } else {
                images.push(FreeWord::generator(rank, t));
                inverse_images.push(FreeWord::generator(rank, t));
            }
        }
        Self { rank, images, inverse_images }
    }

    /// The elementary map sending alpha_i to alpha_i alpha_j and fixing
    /// the rest (1-based indices).
    #[must_use]
    pub fn right_multiplier(rank: usize, i: usize, j: usize) -> Self {
        assert!(i != j && (1..=rank).contains(&i) && (1..=rank).contains(&j));
        let (i, j) = (i - 1, j - 1);
        let mut images = Vec::new();
        let mut inverse_images = Vec::new();
        for t in 0..rank {
            if t == i {
                images.push(FreeWord::from_letters(rank, &[(i, 1), (j, 1)]));
                inverse_images.push(FreeWord::from_letters(rank, &[(i, 1), (j, -1)]));
            } else {
                images.push(FreeWord::generator(rank, t));
                inverse_images.push(FreeWord::generator(rank, t));
            }
        }
        Self { rank, images, inverse_images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let w = FreeWord::from_letters(3, &[(0, 1), (1, 1), (1, -1), (0, -1)]);
        assert!(w.is_empty());
    }

    #[test]
    fn identity_composition() {
        let k = FreeAut::k_map(3, 1, 2);
        assert_eq!(FreeAut::identity(3).compose(&k), k);
        assert_eq!(k.compose(&FreeAut::identity(3)), k);
    }

    #[test]
    fn k12_squared() {
        // K_12^2: alpha_1 -> alpha_2^2 alpha_1 alpha_2^{-2}
        let k = FreeAut::k_map(3, 1, 2);
        let sq = k.compose(&k);
        assert_eq!(
            sq.image(0),
            &FreeWord::from_letters(3, &[(1, 1), (1, 1), (0, 1), (1, -1), (1, -1)])
        );
        assert_eq!(sq.image(1), &FreeWord::generator(3, 1));
    }

    #[test]
    fn f_times_f_inverse_is_identity() {
        // f: alpha_3 -> alpha_3 alpha_2
        let f = FreeAut::right_multiplier(3, 3, 2);
        assert!(f.compose(&f.inverse()).first_disagreement(&FreeAut::identity(3)).is_none());
        assert!(f.inverse().compose(&f).first_disagreement(&FreeAut::identity(3)).is_none());
    }

    #[test]
    fn bad_inverse_rejected() {
        let images = vec![FreeWord::from_letters(2, &[(0, 1), (1, 1)]), FreeWord::generator(2, 1)];
        let wrong_inverse = vec![FreeWord::generator(2, 0), FreeWord::generator(2, 1)];
        assert_eq!(FreeAut::new(images, wrong_inverse), Err(FreeGroupError::NotInverse(0)));
    }

    #[test]
    fn validated_constructor_accepts_real_inverse() {
        let images = vec![FreeWord::from_letters(2, &[(0, 1), (1, 1)]), FreeWord::generator(2, 1)];
        let inverse =
            vec![FreeWord::from_letters(2, &[(0, 1), (1, -1)]), FreeWord::generator(2, 1)];
        assert!(FreeAut::new(images, inverse).is_ok());
    }

    #[test]
    fn reduction_confluent_under_random_insertions() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..200 {
            let rank = rng.gen_range(2..=4);
            let base: Vec<(usize, i8)> = (0..rng.gen_range(0..8))
                .map(|_| (rng.gen_range(0..rank), if rng.gen_bool(0.5) { 1 } else { -1 }))
                .collect();
            let reduced = FreeWord::from_letters(rank, &base);

            // splice cancelling pairs into random positions of the raw
            // letter sequence; the normal form must not change
            let mut padded = base.clone();
            for _ in 0..rng.gen_range(1..6) {
                let pos = rng.gen_range(0..=padded.len());
                let i = rng.gen_range(0..rank);
                let e: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                padded.insert(pos, (i, -e));
                padded.insert(pos, (i, e));
            }
            assert_eq!(FreeWord::from_letters(rank, &padded), reduced);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(FreeWord::identity(2).to_string(), "1");
        let w = FreeWord::from_letters(3, &[(2, 1), (1, -1)]);
        assert_eq!(w.to_string(), "a3 a2^-1");
    }
}
