//! The Boolean polynomial algebra on the mod-2 homology of the surface.
//!
//! There is one generator x̄ for every mod-2 homology class x, subject to
//!
//!   (a)  bar(x + y) = bar(x) + bar(y) + omega(x, y) mod 2,
//!   (b)  bar(x)^2 = bar(x).
//!
//! Square-free monomials in the 2g basis generators (a̅_1..a̅_g, b̅_1..b̅_g)
//! form a GF(2)-basis. A monomial is a support bitmask (bit i-1 for a̅_i,
//! bit g+i-1 for b̅_i); an element is a set of monomials with GF(2)
//! cancellation applied eagerly. Genus is capped at 16 so a support always
//! fits in a u32.
//!
//! The symplectic group acts through its mod-2 image: a matrix replaces
//! each generator in each monomial by the bar of its image class, and the
//! results multiply out. The degree-k filtration pieces are views (the
//! `degree` of an element), not separate types, because multiplication
//! escapes the filtration while the group action does not.

use crate::gf2::F2Matrix;
use crate::symplectic::{is_symplectic_mod2, Mod2Class, SpMatrix};
use std::collections::BTreeSet;
use std::fmt;

/// A square-free monomial, stored as a support bitmask over the 2g
/// generators. Ordered by (degree, then index-lexicographic support).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    mask: u32,
}

impl Monomial {
    /// The empty monomial (the unit 1̄).
    #[must_use]
    pub const fn one() -> Self {
        Self { mask: 0 }
    }

    #[must_use]
    pub const fn from_mask(mask: u32) -> Self {
        Self { mask }
    }

    #[must_use]
    pub const fn mask(self) -> u32 {
        self.mask
    }

    #[must_use]
    pub const fn degree(self) -> usize {
        self.mask.count_ones() as usize
    }

    /// 0-based generator indices in the support, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32u32).filter(move |i| self.mask >> i & 1 == 1).map(|i| i as usize)
    }

    /// Product by support union (relation (b) makes repeats collapse).
    #[must_use]
    pub const fn mul(self, other: Self) -> Self {
        Self { mask: self.mask | other.mask }
    }

    /// Renders against the labels a1..ag, b1..bg; the unit renders as "1".
    #[must_use]
    pub fn render(self, genus: usize) -> String {
        if self.mask == 0 {
            return "1".to_string();
        }
        self.indices().map(|i| generator_label(genus, i)).collect::<Vec<_>>().join("*")
    }
}

/// Label of generator index i (0-based): a1..ag then b1..bg.
#[must_use]
pub fn generator_label(genus: usize, index: usize) -> String {
    assert!(index < 2 * genus, "generator index out of range");
    if index < genus {
        format!("a{}", index + 1)
    } else {
        format!("b{}", index - genus + 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // index-lexicographic within a degree: the smallest differing
        // index is the highest differing bit of the reversed mask, and
        // the monomial containing it sorts first
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.mask.reverse_bits().cmp(&self.mask.reverse_bits()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the Boolean algebra: a GF(2) sum of monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoolElement {
    genus: usize,
    terms: BTreeSet<Monomial>,
}

impl BoolElement {
    /// The zero element.
    #[must_use]
    pub fn zero(genus: usize) -> Self {
        assert!((1..=16).contains(&genus), "genus must be in 1..=16");
        Self { genus, terms: BTreeSet::new() }
    }

    /// The unit 1̄.
    #[must_use]
    pub fn one(genus: usize) -> Self {
        let mut e = Self::zero(genus);
        e.toggle(Monomial::one());
        e
    }

    /// A single basis monomial.
    #[must_use]
    pub fn monomial(genus: usize, m: Monomial) -> Self {
        assert_eq!(u64::from(m.mask()) >> (2 * genus), 0, "monomial support beyond 2g");
        let mut e = Self::zero(genus);
        e.toggle(m);
        e
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (degree, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().copied()
    }

    #[must_use]
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (presence in the support set).
    #[must_use]
    pub fn coefficient(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    /// Maximum support size over the terms; `None` for the zero element
    /// (degree minus infinity by convention).
    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// GF(2) sum.
    ///
    /// # Panics
    /// Panics on genus mismatch.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        let mut out = self.clone();
        for &m in &other.terms {
            out.toggle(m);
        }
        out
    }

    /// Product: monomials multiply by support union, distributively.
    ///
    /// # Panics
    /// Panics on genus mismatch.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        let mut out = Self::zero(self.genus);
        for &m in &self.terms {
            for &n in &other.terms {
                out.toggle(m.mul(n));
            }
        }
        out
    }

    /// Reindexes the element into a larger surface; existing handles keep
    /// their generators.
    ///
    /// # Panics
    /// Panics if `to_genus < genus` or `to_genus > 16`.
    #[must_use]
    pub fn stabilize(&self, to_genus: usize) -> Self {
        assert!(to_genus >= self.genus, "cannot stabilize down");
        assert!(to_genus <= 16, "genus must be in 1..=16");
        let g = self.genus;
        let low = (1u32 << g) - 1;
        let mut out = Self::zero(to_genus);
        for &m in &self.terms {
            let mask = (m.mask() & low) | ((m.mask() >> g) << to_genus);
            out.toggle(Monomial::from_mask(mask));
        }
        out
    }

    /// Sorted text rendering, e.g. `1 + a1*b1 + a1*a2*a3`; zero is `0`.
    #[must_use]
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms.iter().map(|m| m.render(self.genus)).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for BoolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The bar map on a mod-2 homology class, computed by the canonical
/// expansion over the support in index order: relation (a) gives the sum
/// of the singleton generators plus one unit term per conjugate pair
/// {a_i, b_i} contained in the support.
#[must_use]
pub fn bar(z: Mod2Class) -> BoolElement {
    let g = z.genus();
    let mut out = BoolElement::zero(g);
    for i in 0..2 * g {
        if z.mask() >> i & 1 == 1 {
            out.toggle(Monomial::from_mask(1 << i));
        }
    }
    let low = (1u32 << g) - 1;
    let conjugate_pairs = (z.mask() & low) & (z.mask() >> g);
    if conjugate_pairs.count_ones() % 2 == 1 {
        out.toggle(Monomial::one());
    }
    out
}

/// Action of a mod-2 symplectic matrix: each generator in each monomial is
/// replaced by the bar of its image class, and the factors multiply out.
///
/// # Panics
/// Panics if the matrix is not 2g x 2g symplectic mod 2 or the genus
/// disagrees with the element.
#[must_use]
pub fn sp_action_mod2(m: &F2Matrix, p: &BoolElement) -> BoolElement {
    let g = p.genus();
    assert_eq!(m.col_count(), 2 * g, "genus mismatch");
    assert!(is_symplectic_mod2(m), "matrix is not symplectic mod 2");
    let images: Vec<BoolElement> =
        (0..2 * g).map(|j| bar(Mod2Class::from_f2(g, &m.column(j)))).collect();
    let mut out = BoolElement::zero(g);
    for mono in p.terms() {
        let mut acc = BoolElement::one(g);
        for i in mono.indices() {
            acc = acc.mul(&images[i]);
        }
        out = out.add(&acc);
    }
    out
}

/// Action of an integer symplectic matrix, through its mod-2 reduction.
#[must_use]
pub fn sp_action(m: &SpMatrix, p: &BoolElement) -> BoolElement {
    sp_action_mod2(&m.reduce_mod2(), p)
}

/// All monomials of degree <= `max_degree` at the given genus, in the
/// canonical (degree, lexicographic) order. This is the standard basis of
/// the filtration piece.
#[must_use]
pub fn monomial_basis(genus: usize, max_degree: usize) -> Vec<Monomial> {
    let n = 2 * genus;
    assert!(max_degree <= n, "degree exceeds 2g");
    let mut out = vec![Monomial::one()];
    for d in 1..=max_degree {
        let mut combo: Vec<usize> = (0..d).collect();
        loop {
            let mask = combo.iter().fold(0u32, |acc, &i| acc | 1 << i);
            out.push(Monomial::from_mask(mask));
            // next lexicographic d-combination of 0..n
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] != i + n - d {
                    combo[i] += 1;
                    for j in i + 1..d {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{gl_embed, transvection_power, GLMatrix, HClass};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn m(genus: usize, indices: &[usize]) -> Monomial {
        let mask = indices.iter().fold(0u32, |acc, &i| {
            assert!(i < 2 * genus);
            acc | 1 << i
        });
        Monomial::from_mask(mask)
    }

    #[test]
    fn bar_of_basis_class() {
        let g = 2;
        let p = bar(HClass::a(g, 1).mod2());
        assert_eq!(p.render(), "a1");
    }

    #[test]
    fn bar_of_conjugate_pair_has_unit_term() {
        let g = 2;
        let p = bar(HClass::a(g, 1).add(&HClass::b(g, 1)).mod2());
        assert_eq!(p.render(), "1 + a1 + b1");
    }

    #[test]
    fn bar_of_zero() {
        assert!(bar(HClass::zero(3).mod2()).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let g = 2;
        let a1 = bar(HClass::a(g, 1).mod2());
        let b1 = bar(HClass::b(g, 1).mod2());
        assert_eq!(a1.mul(&a1), a1);
        assert_eq!(a1.mul(&b1).render(), "a1*b1");
        let p = a1.add(&BoolElement::one(g));
        assert_eq!(p.mul(&p), p);
    }

    #[test]
    fn degree_examples() {
        let g = 3;
        assert_eq!(BoolElement::one(g).degree(), Some(0));
        assert_eq!(BoolElement::zero(g).degree(), None);
        let p = BoolElement::monomial(g, m(g, &[0, 3])).add(&BoolElement::monomial(g, m(g, &[0])));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(BoolElement::monomial(g, m(g, &[0, 1, 2])).degree(), Some(3));
    }

    #[test]
    fn render_sorted() {
        let g = 3;
        let p = BoolElement::monomial(g, m(g, &[0, 1, 2]))
            .add(&BoolElement::one(g))
            .add(&BoolElement::monomial(g, m(g, &[0, 3])));
        assert_eq!(p.render(), "1 + a1*b1 + a1*a2*a3");
    }

    #[test]
    #[should_panic(expected = "not symplectic mod 2")]
    fn sp_action_rejects_non_symplectic_matrices() {
        let g = 2;
        let mut bad = crate::gf2::F2Matrix::identity(4);
        bad.set(0, 1, true);
        bad.set(1, 0, true); // swaps within the a-block without the dual fix
        let _ = sp_action_mod2(&bad, &BoolElement::one(g));
    }

    #[test]
    #[should_panic(expected = "genus mismatch")]
    fn multiply_rejects_genus_mismatch() {
        let _ = BoolElement::one(2).mul(&BoolElement::one(3));
    }

    #[test]
    fn sp_action_identity_fixes_everything() {
        let g = 3;
        let p = BoolElement::monomial(g, m(g, &[0, 2, 4])).add(&BoolElement::one(g));
        assert_eq!(sp_action(&crate::symplectic::SpMatrix::identity(g), &p), p);
    }

    #[test]
    fn sp_action_gl_transvection_on_a1() {
        // G = Id + E_21 sends a̅_1 to bar(a_1 + a_2) = a̅_1 + a̅_2.
        let g = 3;
        let p = bar(HClass::a(g, 1).mod2());
        let acted = sp_action(&gl_embed(&GLMatrix::elementary(g, 2, 1)), &p);
        assert_eq!(acted.render(), "a1 + a2");
    }

    #[test]
    fn sp_action_transvection_mixes_blocks() {
        // The transvection along a_1 + b_1 sends a_1 to b_1 mod 2.
        let g = 2;
        let t = transvection_power(&HClass::a(g, 1).add(&HClass::b(g, 1)), 1);
        let acted = sp_action(&t, &bar(HClass::a(g, 1).mod2()));
        assert_eq!(acted.render(), "b1");
    }

    #[test]
    fn stabilize_examples() {
        assert_eq!(BoolElement::one(2).stabilize(3), BoolElement::one(3));
        let p = BoolElement::monomial(2, m(2, &[0, 2])); // a1*b1 at g=2
        assert_eq!(p.stabilize(4), BoolElement::monomial(4, m(4, &[0, 4])));
    }

    #[test]
    fn stabilize_commutes_with_action_fixing_new_handles() {
        let g = 2;
        let big = 4;
        let p = bar(HClass::a(g, 1).mod2()).mul(&bar(HClass::b(g, 2).mod2()));
        let small = gl_embed(&GLMatrix::elementary(g, 2, 1));
        let extended = small.stabilize(big);
        assert_eq!(sp_action(&small, &p).stabilize(big), sp_action(&extended, &p.stabilize(big)));
    }

    #[test]
    fn monomial_basis_counts() {
        assert_eq!(monomial_basis(3, 1).len(), 7);
        assert_eq!(monomial_basis(4, 3).len(), 93);
        assert_eq!(monomial_basis(6, 3).len(), 299);
        let basis = monomial_basis(2, 4);
        assert_eq!(basis.len(), 16);
        // canonical order begins with the unit and the singletons
        assert_eq!(basis[0], Monomial::one());
        assert_eq!(basis[1], m(2, &[0]));
    }

    #[test]
    fn monomial_order_is_degree_then_lex() {
        let a1b1 = m(4, &[0, 4]);
        let a1a2 = m(4, &[0, 1]);
        let a2a3 = m(4, &[1, 2]);
        assert!(a1a2 < a1b1);
        assert!(a1b1 < a2a3);
        assert!(Monomial::one() < a1a2);
        assert!(a2a3 < m(4, &[0, 1, 2]));
    }

    fn random_element(rng: &mut StdRng, genus: usize, max_degree: usize) -> BoolElement {
        let basis = monomial_basis(genus, max_degree);
        let mut e = BoolElement::zero(genus);
        for mono in basis {
            if rng.gen_bool(0.3) {
                e = e.add(&BoolElement::monomial(genus, mono));
            }
        }
        e
    }

    #[test]
    fn ring_axioms_and_idempotency_random() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let g = rng.gen_range(1..=5);
            let deg = 3.min(2 * g);
            let p = random_element(&mut rng, g, deg);
            let q = random_element(&mut rng, g, deg);
            let r = random_element(&mut rng, g, deg);
            assert_eq!(p.mul(&q), q.mul(&p));
            assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            assert_eq!(p.mul(&BoolElement::one(g)), p);
            assert_eq!(p.mul(&p), p);
        }
    }

    #[test]
    fn bar_well_defined_on_random_decompositions() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let g = rng.gen_range(1..=5);
            let z = Mod2Class::new(g, rng.gen_range(0..1u32 << (2 * g)));
            let x = Mod2Class::new(g, rng.gen_range(0..1u32 << (2 * g)));
            let y = Mod2Class::new(g, z.mask() ^ x.mask());
            let mut rhs = bar(x).add(&bar(y));
            if x.omega2(&y) {
                rhs = rhs.add(&BoolElement::one(g));
            }
            assert_eq!(bar(z), rhs);
        }
    }

    #[test]
    fn action_of_product_is_composition() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..50 {
            let g = rng.gen_range(2..=4);
            let m1 = transvection_power(
                &HClass::a(g, rng.gen_range(1..=g)).add(&HClass::b(g, rng.gen_range(1..=g))),
                rng.gen_range(-2..=2),
            );
            let m2 = gl_embed(&GLMatrix::elementary(g, 1, 2));
            let p = random_element(&mut rng, g, 3);
            assert_eq!(sp_action(&m1.mul(&m2), &p), sp_action(&m1, &sp_action(&m2, &p)));
        }
    }

    #[test]
    fn gl_action_preserves_filtration_and_constant_coefficient() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..100 {
            let g = rng.gen_range(2..=4);
            let mut i = rng.gen_range(1..=g);
            let mut j = rng.gen_range(1..=g);
            if i == j {
                i = 1;
                j = 2;
            }
            let gm = gl_embed(&GLMatrix::elementary(g, i, j));
            let basis = monomial_basis(g, 3);
            let mono = basis[rng.gen_range(0..basis.len())];
            let p = BoolElement::monomial(g, mono);
            let acted = sp_action(&gm, &p);
            assert!(acted.degree() <= p.degree());
            assert_eq!(acted.coefficient(Monomial::one()), p.coefficient(Monomial::one()));
        }
    }

    proptest! {
        #[test]
        fn add_is_involutive(mask1 in 0u32..256, mask2 in 0u32..256) {
            let g = 4;
            let p = BoolElement::monomial(g, Monomial::from_mask(mask1));
            let q = BoolElement::monomial(g, Monomial::from_mask(mask2));
            let s = p.add(&q);
            prop_assert_eq!(s.add(&q), p);
        }
    }
}
