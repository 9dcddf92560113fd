//! Exact computer algebra for homology 3-spheres presented as Torelli
//! gluing words.
//!
//! The crate implements, over the integers and GF(2) with no floating
//! point anywhere:
//!
//! - [`gf2`]: bit-packed linear algebra over the two-element field;
//! - [`symplectic`]: the symplectic homology of the bordered surface,
//!   Dehn-twist transvections and the GL block embedding;
//! - [`boolean`]: the Boolean polynomial algebra on mod-2 homology
//!   classes with its degree filtration and symplectic action;
//! - [`words`]: homology-level generator specs (separating twists,
//!   bounding pairs, plain twists, formal conjugates) and word containers;
//! - [`bcj`]: the Birman–Craggs–Johnson homomorphism, equivariance
//!   transport, and the Rohlin invariant of a gluing word;
//! - [`coinvariants`]: coinvariant quotients of GF(2) modules under
//!   matrix-generated groups, instantiated on the Boolean filtration and
//!   the third exterior power;
//! - [`freegroup`] and [`checks`]: free-group automorphism composition
//!   and the machine-verified identity suites;
//! - [`assembly`]: the cocycle/trivialization harness assembling
//!   candidate invariants q + mu^x;
//! - [`sampling`]: seeded random material for the randomized suites.

pub mod assembly;
pub mod bcj;
pub mod boolean;
pub mod checks;
pub mod coinvariants;
pub mod freegroup;
pub mod gf2;
pub mod sampling;
pub mod symplectic;
pub mod words;

pub use bcj::{mu_x, pi0, rohlin, sigma_spec, sigma_word, TwoTorsionGroup};
pub use boolean::{bar, sp_action, BoolElement, Monomial};
pub use gf2::{F2Matrix, F2Vector};
pub use symplectic::{gl_embed, omega, transvection_power, GLMatrix, HClass, SpMatrix};
pub use words::{GeneratorSpec, SymplecticPairList, TorelliWord};
