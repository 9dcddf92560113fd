//! The first homology of the bordered surface with its symplectic form,
//! integer symplectic matrices, Dehn-twist transvections, and the block
//! embedding of GL_g(Z) into Sp_2g(Z).
//!
//! Coordinates are always written in the basis order (a_1..a_g, b_1..b_g).
//! The intersection form is fixed by omega(b_i, a_i) = -omega(a_i, b_i) = 1
//! with all other basis pairings zero; its Gram matrix is
//! J = [[0, -I], [I, 0]] in block form. A Dehn twist power acts by the
//! transvection y -> y + k * omega(y, x) * x.

use crate::gf2::{F2Matrix, F2Vector};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("matrix of size {0} is not unimodular (det = {1})")]
    NotUnimodular(usize, i64),
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,
    #[error("matrix size {0} is odd; symplectic matrices have even size")]
    OddSize(usize),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// An integral homology class of the genus-g bordered surface, as a
/// coordinate vector of length 2g in the basis (a_1..a_g, b_1..b_g).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HClass {
    genus: usize,
    coords: Vec<i64>,
}

impl HClass {
    /// The zero class.
    #[must_use]
    pub fn zero(genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        Self { genus, coords: vec![0; 2 * genus] }
    }

    /// Class from an explicit coordinate vector of length 2g.
    ///
    /// # Panics
    /// Panics if the length is not even and positive.
    #[must_use]
    pub fn from_coords(coords: Vec<i64>) -> Self {
        assert!(
            !coords.is_empty() && coords.len().is_multiple_of(2),
            "coordinate length must be 2g > 0"
        );
        Self { genus: coords.len() / 2, coords }
    }

    /// The basis class a_i (1-based).
    #[must_use]
    pub fn a(genus: usize, i: usize) -> Self {
        assert!((1..=genus).contains(&i), "a_{i} out of range for genus {genus}");
        let mut c = Self::zero(genus);
        c.coords[i - 1] = 1;
        c
    }

    /// The basis class b_i (1-based).
    #[must_use]
    pub fn b(genus: usize, i: usize) -> Self {
        assert!((1..=genus).contains(&i), "b_{i} out of range for genus {genus}");
        let mut c = Self::zero(genus);
        c.coords[genus + i - 1] = 1;
        c
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        Self {
            genus: self.genus,
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| x + y).collect(),
        }
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        Self {
            genus: self.genus,
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| x - y).collect(),
        }
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        Self { genus: self.genus, coords: self.coords.iter().map(|x| -x).collect() }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// Mod-2 reduction.
    #[must_use]
    pub fn mod2(&self) -> Mod2Class {
        let mut mask = 0u32;
        for (i, &c) in self.coords.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                mask |= 1 << i;
            }
        }
        Mod2Class { genus: self.genus, mask }
    }

    /// Zero-pads the class into a larger surface: existing handles keep
    /// their coordinates, the new ones get zero.
    ///
    /// # Panics
    /// Panics if `to_genus < genus`.
    #[must_use]
    pub fn stabilize(&self, to_genus: usize) -> Self {
        assert!(to_genus >= self.genus, "cannot stabilize down");
        let g = self.genus;
        let mut coords = vec![0; 2 * to_genus];
        coords[..g].copy_from_slice(&self.coords[..g]);
        coords[to_genus..to_genus + g].copy_from_slice(&self.coords[g..]);
        Self { genus: to_genus, coords }
    }
}

/// The intersection pairing, extended bilinearly from the basis values.
///
/// # Panics
/// Panics on genus mismatch.
#[must_use]
pub fn omega(x: &HClass, y: &HClass) -> i64 {
    assert_eq!(x.genus, y.genus, "omega: genus mismatch");
    let g = x.genus;
    let mut total = 0;
    for i in 0..g {
        // omega(b_i, a_i) = 1, omega(a_i, b_i) = -1
        total += x.coords[g + i] * y.coords[i] - x.coords[i] * y.coords[g + i];
    }
    total
}

/// A mod-2 homology class, stored as a support bitmask over the 2g
/// basis classes (bit i-1 for a_i, bit g+i-1 for b_i).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mod2Class {
    genus: usize,
    mask: u32,
}

impl Mod2Class {
    #[must_use]
    pub fn new(genus: usize, mask: u32) -> Self {
        assert!((1..=16).contains(&genus), "genus must be in 1..=16");
        assert_eq!(u64::from(mask) >> (2 * genus), 0, "mask has bits beyond 2g");
        Self { genus, mask }
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    /// Mod-2 intersection pairing.
    #[must_use]
    pub fn omega2(&self, other: &Self) -> bool {
        assert_eq!(self.genus, other.genus, "omega2: genus mismatch");
        let g = self.genus;
        let low = (1u32 << g) - 1;
        let (xa, xb) = (self.mask & low, self.mask >> g);
        let (ya, yb) = (other.mask & low, other.mask >> g);
        ((xa & yb).count_ones() + (xb & ya).count_ones()) % 2 == 1
    }

    /// Reads a mod-2 class off a GF(2) column vector of length 2g.
    #[must_use]
    pub fn from_f2(genus: usize, v: &F2Vector) -> Self {
        assert_eq!(v.len(), 2 * genus, "vector length must be 2g");
        let mut mask = 0u32;
        for i in v.ones() {
            mask |= 1 << i;
        }
        Self { genus, mask }
    }
}

/// A g x g integer matrix with determinant +-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GLMatrix {
    size: usize,
    entries: Vec<i64>, // row-major
}

impl GLMatrix {
    /// Validates unimodularity.
    pub fn new(size: usize, entries: Vec<i64>) -> Result<Self, SymplecticError> {
        assert_eq!(entries.len(), size * size, "entry count must be size^2");
        let m = Self { size, entries };
        let d = m.det();
        if d == 1 || d == -1 {
            Ok(m)
        } else {
            Err(SymplecticError::NotUnimodular(size, d))
        }
    }

    #[must_use]
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        Self { size, entries }
    }

    /// The transvection Id + E_ij (1-based, i != j).
    #[must_use]
    pub fn elementary(size: usize, i: usize, j: usize) -> Self {
        assert!(i != j && (1..=size).contains(&i) && (1..=size).contains(&j));
        let mut m = Self::identity(size);
        m.entries[(i - 1) * size + (j - 1)] = 1;
        m
    }

    /// Permutation matrix sending basis vector j to basis vector `perm[j]`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of 0..size.
    #[must_use]
    pub fn permutation(perm: &[usize]) -> Self {
        let size = perm.len();
        let mut seen = vec![false; size];
        let mut m = Self { size, entries: vec![0; size * size] };
        for (j, &i) in perm.iter().enumerate() {
            assert!(i < size && !seen[i], "not a permutation");
            seen[i] = true;
            m.entries[i * size + j] = 1;
        }
        m
    }

    #[must_use]
    pub fn size(&self) -> usize {
        self.size
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size, "size mismatch");
        let n = self.size;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += x * other.get(k, j);
                }
            }
        }
        Self { size: n, entries }
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    #[must_use]
    pub fn det(&self) -> i64 {
        let n = self.size;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                let Some(swap) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i * n + j] =
                        (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
                m[i * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        i64::try_from(sign * m[(n - 1) * n + (n - 1)]).expect("determinant overflow")
    }

    /// Exact inverse via the adjugate; sizes stay desk-scale so the
    /// cofactor determinants are cheap.
    #[must_use]
    pub fn inverse(&self) -> Self {
        let n = self.size;
        let d = self.det();
        assert!(d == 1 || d == -1, "inverse requires a unimodular matrix");
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                entries[i * n + j] = sign * minor * d;
            }
        }
        Self { size: n, entries }
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        Self { size: n, entries }
    }

    /// The transpose-inverse, i.e. the matrix acting on the dual basis.
    #[must_use]
    pub fn transpose_inverse(&self) -> Self {
        self.inverse().transpose()
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> i64 {
        let n = self.size;
        let mut sub = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == drop_row {
                continue;
            }
            for j in 0..n {
                if j == drop_col {
                    continue;
                }
                sub.push(self.get(i, j));
            }
        }
        GLMatrix { size: n - 1, entries: sub }.det()
    }
}

/// A 2g x 2g integer matrix preserving the symplectic form exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpMatrix {
    genus: usize,
    entries: Vec<i64>, // row-major, dimension 2g
}

/// Whether a square integer matrix of even size preserves the form,
/// i.e. whether tM * J * M = J exactly.
pub fn is_symplectic(rows: &[Vec<i64>]) -> Result<bool, SymplecticError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(SymplecticError::NotSquare {
            rows: n,
            cols: rows.iter().map(Vec::len).max().unwrap_or(0),
        });
    }
    if !n.is_multiple_of(2) || n == 0 {
        return Err(SymplecticError::OddSize(n));
    }
    let g = n / 2;
    // (tM J M)[i][j] = sum_k omega(M e_i, M e_j) written out by columns.
    for i in 0..n {
        for j in 0..n {
            let mut v = 0i64;
            for k in 0..g {
                v += rows[g + k][i] * rows[k][j] - rows[k][i] * rows[g + k][j];
            }
            let expected = if i < g && j == g + i {
                -1
            } else if i >= g && j == i - g {
                1
            } else {
                0
            };
            if v != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl SpMatrix {
    #[must_use]
    pub fn identity(genus: usize) -> Self {
        assert!(genus >= 1, "genus must be positive");
        let n = 2 * genus;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { genus, entries }
    }

    /// Validated constructor from rows.
    pub fn try_new(rows: Vec<Vec<i64>>) -> Result<Self, SymplecticError> {
        if !is_symplectic(&rows)? {
            return Err(SymplecticError::NotSymplectic);
        }
        let genus = rows.len() / 2;
        let entries = rows.into_iter().flatten().collect();
        Ok(Self { genus, entries })
    }

    /// Assembles [[A, B], [C, D]] from g x g integer blocks and validates.
    pub fn from_blocks(
        a: &GLMatrixLike,
        b: &GLMatrixLike,
        c: &GLMatrixLike,
        d: &GLMatrixLike,
    ) -> Result<Self, SymplecticError> {
        let g = a.size;
        assert!(b.size == g && c.size == g && d.size == g, "block size mismatch");
        let mut rows = vec![vec![0i64; 2 * g]; 2 * g];
        for i in 0..g {
            for j in 0..g {
                rows[i][j] = a.get(i, j);
                rows[i][g + j] = b.get(i, j);
                rows[g + i][j] = c.get(i, j);
                rows[g + i][g + j] = d.get(i, j);
            }
        }
        Self::try_new(rows)
    }

    fn unchecked(genus: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), 4 * genus * genus);
        Self { genus, entries }
    }

    #[must_use]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim() + j]
    }

    #[must_use]
    pub fn rows(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect()
    }

    /// Matrix product.
    ///
    /// # Panics
    /// Panics on genus mismatch.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        let n = self.dim();
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += x * other.get(k, j);
                }
            }
        }
        Self::unchecked(self.genus, entries)
    }

    /// Exact inverse: for symplectic M, M^{-1} = -J tM J.
    #[must_use]
    pub fn inverse(&self) -> Self {
        let g = self.genus;
        let n = self.dim();
        let mut entries = vec![0i64; n * n];
        // (-J tM J): with J = [[0,-I],[I,0]], block formula
        // M = [[A,B],[C,D]]  =>  M^{-1} = [[tD, -tB], [-tC, tA]].
        for i in 0..g {
            for j in 0..g {
                entries[i * n + j] = self.get(g + j, g + i); // tD
                entries[i * n + (g + j)] = -self.get(j, g + i); // -tB
                entries[(g + i) * n + j] = -self.get(g + j, i); // -tC
                entries[(g + i) * n + (g + j)] = self.get(j, i); // tA
            }
        }
        Self::unchecked(g, entries)
    }

    /// Image of a homology class.
    ///
    /// # Panics
    /// Panics on genus mismatch.
    #[must_use]
    pub fn apply(&self, x: &HClass) -> HClass {
        assert_eq!(self.genus, x.genus(), "genus mismatch");
        let n = self.dim();
        let coords = (0..n).map(|i| (0..n).map(|j| self.get(i, j) * x.coords()[j]).sum()).collect();
        HClass::from_coords(coords)
    }

    /// Entrywise mod-2 reduction.
    #[must_use]
    pub fn reduce_mod2(&self) -> F2Matrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| F2Vector::from_bits((0..n).map(|j| self.get(i, j).rem_euclid(2) == 1)))
            .collect();
        F2Matrix::from_rows(n, rows)
    }

    /// Block extension to a larger genus: the new handles are fixed.
    ///
    /// # Panics
    /// Panics if `to_genus < genus`.
    #[must_use]
    pub fn stabilize(&self, to_genus: usize) -> Self {
        assert!(to_genus >= self.genus, "cannot stabilize down");
        let g = self.genus;
        let mut out = Self::identity(to_genus);
        let n = out.dim();
        for i in 0..g {
            for j in 0..g {
                out.entries[i * n + j] = self.get(i, j);
                out.entries[i * n + (to_genus + j)] = self.get(i, g + j);
                out.entries[(to_genus + i) * n + j] = self.get(g + i, j);
                out.entries[(to_genus + i) * n + (to_genus + j)] = self.get(g + i, g + j);
            }
        }
        out
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.genus)
    }
}

/// Plain g x g integer matrix view used for block assembly; a `GLMatrix`
/// derefs into this shape, and free blocks (e.g. symmetric S_g pieces)
/// are built directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GLMatrixLike {
    size: usize,
    entries: Vec<i64>,
}

impl GLMatrixLike {
    #[must_use]
    pub fn zero(size: usize) -> Self {
        Self { size, entries: vec![0; size * size] }
    }

    #[must_use]
    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.entries[i * size + i] = 1;
        }
        m
    }

    /// The single-entry matrix E_ij (1-based).
    #[must_use]
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        assert!((1..=size).contains(&i) && (1..=size).contains(&j));
        let mut m = Self::zero(size);
        m.entries[(i - 1) * size + (j - 1)] = 1;
        m
    }

    /// The symmetric generator SE_ij = E_ij + E_ji (1-based, i != j).
    #[must_use]
    pub fn symmetric_unit(size: usize, i: usize, j: usize) -> Self {
        assert!(i != j);
        let mut m = Self::unit(size, i, j);
        m.entries[(j - 1) * size + (i - 1)] = 1;
        m
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.size + j] = value;
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x + y).collect(),
        }
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x - y).collect(),
        }
    }
}

impl From<&GLMatrix> for GLMatrixLike {
    fn from(m: &GLMatrix) -> Self {
        Self { size: m.size, entries: m.entries.clone() }
    }
}

/// Matrix of the k-th transvection power along the class x:
/// y -> y + k * omega(y, x) * x. Columns are the images of basis vectors;
/// omega(a_i, x) = -x_{b_i} and omega(b_i, x) = x_{a_i}.
#[must_use]
pub fn transvection_power(x: &HClass, k: i64) -> SpMatrix {
    let g = x.genus();
    let n = 2 * g;
    let mut entries = vec![0i64; n * n];
    for c in 0..n {
        let omega_basis_x = if c < g { -x.coords()[g + c] } else { x.coords()[c - g] };
        let coeff = k * omega_basis_x;
        for r in 0..n {
            entries[r * n + c] = i64::from(r == c) + coeff * x.coords()[r];
        }
    }
    let m = SpMatrix::unchecked(g, entries);
    debug_assert!(is_symplectic(&m.rows()).unwrap());
    m
}

/// The block embedding diag(G, tG^{-1}) of GL_g(Z) into Sp_2g(Z).
#[must_use]
pub fn gl_embed(g_matrix: &GLMatrix) -> SpMatrix {
    let g = g_matrix.size();
    let dual = g_matrix.transpose_inverse();
    let n = 2 * g;
    let mut entries = vec![0i64; n * n];
    for i in 0..g {
        for j in 0..g {
            entries[i * n + j] = g_matrix.get(i, j);
            entries[(g + i) * n + (g + j)] = dual.get(i, j);
        }
    }
    let m = SpMatrix::unchecked(g, entries);
    debug_assert!(is_symplectic(&m.rows()).unwrap());
    m
}

/// Mod-2 symplectic test against J = [[0, I], [I, 0]].
#[must_use]
pub fn is_symplectic_mod2(m: &F2Matrix) -> bool {
    let n = m.col_count();
    if m.row_count() != n || !n.is_multiple_of(2) || n == 0 {
        return false;
    }
    let g = n / 2;
    let mut j = F2Matrix::zeros(n, n);
    for i in 0..g {
        j.set(i, g + i, true);
        j.set(g + i, i, true);
    }
    m.transpose().mul(&j).mul(m) == j
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_basis_pairings() {
        let g = 3;
        assert_eq!(omega(&HClass::b(g, 1), &HClass::a(g, 1)), 1);
        assert_eq!(omega(&HClass::a(g, 1), &HClass::b(g, 1)), -1);
        assert_eq!(omega(&HClass::a(g, 1), &HClass::a(g, 2)), 0);
        assert_eq!(omega(&HClass::b(g, 2), &HClass::b(g, 3)), 0);
    }

    #[test]
    fn omega_antisymmetric_on_random_classes() {
        let x = HClass::from_coords(vec![1, -2, 0, 3, 1, 0]);
        let y = HClass::from_coords(vec![0, 1, 1, -1, 2, 5]);
        assert_eq!(omega(&x, &y), -omega(&y, &x));
        assert_eq!(omega(&x, &x), 0);
    }

    #[test]
    fn transvection_zero_power_is_identity() {
        let x = HClass::from_coords(vec![1, 2, -1, 0, 3, 1]);
        assert!(transvection_power(&x, 0).is_identity());
    }

    #[test]
    fn transvection_by_b_k_matches_block_form() {
        // Psi(T_{beta_k}^{-1}) = [[Id, 0], [E_kk, Id]]
        let g = 3;
        for k in 1..=g {
            let m = transvection_power(&HClass::b(g, k), -1);
            let expected = SpMatrix::from_blocks(
                &GLMatrixLike::identity(g),
                &GLMatrixLike::zero(g),
                &GLMatrixLike::unit(g, k, k),
                &GLMatrixLike::identity(g),
            )
            .unwrap();
            assert_eq!(m, expected, "k = {k}");
        }
    }

    #[test]
    fn transvection_by_a1_sends_b1_up() {
        let g = 2;
        let m = transvection_power(&HClass::a(g, 1), 1);
        assert_eq!(m.apply(&HClass::b(g, 1)), HClass::b(g, 1).add(&HClass::a(g, 1)));
        assert_eq!(m.apply(&HClass::a(g, 1)), HClass::a(g, 1));
        assert_eq!(m.apply(&HClass::a(g, 2)), HClass::a(g, 2));
        assert_eq!(m.apply(&HClass::b(g, 2)), HClass::b(g, 2));
    }

    #[test]
    fn transvection_power_additivity() {
        let x = HClass::from_coords(vec![1, 0, -1, 2, 1, 1]);
        for (k, m) in [(2, 3), (-1, 4), (0, -5)] {
            assert_eq!(
                transvection_power(&x, k).mul(&transvection_power(&x, m)),
                transvection_power(&x, k + m)
            );
        }
    }

    #[test]
    fn gl_embed_identity() {
        assert!(gl_embed(&GLMatrix::identity(3)).is_identity());
    }

    #[test]
    fn gl_embed_elementary_dual_block() {
        // G = Id + E_21 at g = 2 has transpose-inverse Id - E_12.
        let m = gl_embed(&GLMatrix::elementary(2, 2, 1));
        assert_eq!(m.get(1, 0), 1); // a-block E_21
        assert_eq!(m.get(2, 3), -1); // b-block -E_12
        assert_eq!(m.get(2, 2), 1);
        assert_eq!(m.get(3, 3), 1);
    }

    #[test]
    fn gl_embed_permutation_acts_diagonally() {
        let p = GLMatrix::permutation(&[1, 0, 2]);
        let m = gl_embed(&p);
        for (i, j) in [(0, 1), (1, 0), (2, 2)] {
            assert_eq!(m.get(i, j), 1);
            assert_eq!(m.get(3 + i, 3 + j), 1);
        }
    }

    #[test]
    fn gl_embed_multiplicative() {
        let cases = [
            (GLMatrix::elementary(3, 2, 1), GLMatrix::elementary(3, 1, 3)),
            (GLMatrix::permutation(&[2, 0, 1]), GLMatrix::elementary(3, 3, 1)),
            (
                GLMatrix::elementary(3, 1, 2).mul(&GLMatrix::elementary(3, 2, 3)),
                GLMatrix::permutation(&[1, 0, 2]),
            ),
        ];
        for (g1, g2) in cases {
            assert_eq!(gl_embed(&g1.mul(&g2)), gl_embed(&g1).mul(&gl_embed(&g2)));
        }
    }

    #[test]
    fn non_unimodular_rejected() {
        let err = GLMatrix::new(2, vec![2, 0, 0, 1]).unwrap_err();
        assert_eq!(err, SymplecticError::NotUnimodular(2, 2));
    }

    #[test]
    fn is_symplectic_cases() {
        let id = SpMatrix::identity(2);
        assert!(is_symplectic(&id.rows()).unwrap());

        let doubled: Vec<Vec<i64>> =
            (0..4).map(|i| (0..4).map(|j| if i == j { 2 } else { 0 }).collect()).collect();
        assert!(!is_symplectic(&doubled).unwrap());

        let odd = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(is_symplectic(&odd).unwrap_err(), SymplecticError::OddSize(3));

        let t = transvection_power(&HClass::from_coords(vec![1, 2, 3, 4]), 5);
        assert!(is_symplectic(&t.rows()).unwrap());
    }

    #[test]
    fn omega_invariant_under_symplectic_action() {
        let g = 3;
        let m = transvection_power(&HClass::a(g, 1), 1)
            .mul(&gl_embed(&GLMatrix::elementary(g, 3, 1)))
            .mul(&transvection_power(&HClass::b(g, 2).add(&HClass::a(g, 3)), -2));
        let x = HClass::from_coords(vec![1, 0, 2, -1, 1, 3]);
        let y = HClass::from_coords(vec![0, 1, -1, 2, 0, 1]);
        assert_eq!(omega(&m.apply(&x), &m.apply(&y)), omega(&x, &y));
    }

    #[test]
    fn inverse_is_exact() {
        let g = 3;
        let m =
            transvection_power(&HClass::a(g, 2), 3).mul(&gl_embed(&GLMatrix::elementary(g, 1, 2)));
        assert!(m.mul(&m.inverse()).is_identity());
        assert!(m.inverse().mul(&m).is_identity());
    }

    #[test]
    fn reduce_mod2_kills_even_transvections() {
        let g = 2;
        let x = HClass::a(g, 1).add(&HClass::b(g, 1));
        let m = transvection_power(&x, 2).reduce_mod2();
        assert_eq!(m, F2Matrix::identity(4));
    }

    #[test]
    fn reduce_mod2_block_pattern() {
        let g = 2;
        let m = transvection_power(&HClass::b(g, 1), -1).reduce_mod2();
        let mut expected = F2Matrix::identity(4);
        expected.set(2, 0, true);
        assert_eq!(m, expected);
    }

    #[test]
    fn se_lift_composite_matches_displayed_matrix() {
        // The three-twist composite giving [[Id, 0], [SE_ij, Id]]; the
        // middle class is b_i - b_j (the sign is pinned by the target).
        let g = 4;
        for i in 1..=g {
            for j in i + 1..=g {
                let c = HClass::b(g, i).sub(&HClass::b(g, j));
                let m = transvection_power(&HClass::b(g, i), -1)
                    .mul(&transvection_power(&c, 1))
                    .mul(&transvection_power(&HClass::b(g, j), -1));
                let expected = SpMatrix::from_blocks(
                    &GLMatrixLike::identity(g),
                    &GLMatrixLike::zero(g),
                    &GLMatrixLike::symmetric_unit(g, i, j),
                    &GLMatrixLike::identity(g),
                )
                .unwrap();
                assert_eq!(m, expected, "SE_{i}{j}");
                // The b_i + b_j orientation differs by a sign integrally
                // but agrees mod 2.
                let c2 = HClass::b(g, i).add(&HClass::b(g, j));
                let m2 = transvection_power(&HClass::b(g, i), -1)
                    .mul(&transvection_power(&c2, 1))
                    .mul(&transvection_power(&HClass::b(g, j), -1));
                assert_eq!(m2.reduce_mod2(), m.reduce_mod2());
            }
        }
    }

    #[test]
    fn stabilize_blocks() {
        let g = 2;
        let m = transvection_power(&HClass::b(g, 1), -1).stabilize(4);
        let expected = transvection_power(&HClass::b(4, 1), -1);
        assert_eq!(m, expected);
    }

    #[test]
    fn mod2_class_and_pairing() {
        let g = 2;
        let x = HClass::from_coords(vec![1, 2, -1, 0]);
        assert_eq!(x.mod2().mask(), 0b0101);
        let a1 = HClass::a(g, 1).mod2();
        let b1 = HClass::b(g, 1).mod2();
        let a2 = HClass::a(g, 2).mod2();
        assert!(a1.omega2(&b1));
        assert!(!a1.omega2(&a2));
    }

    proptest::proptest! {
        #[test]
        fn omega_is_bilinear_and_antisymmetric(
            x in proptest::collection::vec(-4i64..=4, 6),
            y in proptest::collection::vec(-4i64..=4, 6),
            z in proptest::collection::vec(-4i64..=4, 6),
        ) {
            let (x, y, z) = (
                HClass::from_coords(x),
                HClass::from_coords(y),
                HClass::from_coords(z),
            );
            proptest::prop_assert_eq!(omega(&x, &y), -omega(&y, &x));
            proptest::prop_assert_eq!(omega(&x, &x), 0);
            proptest::prop_assert_eq!(omega(&x.add(&y), &z), omega(&x, &z) + omega(&y, &z));
        }
    }

    #[test]
    fn mod2_symplectic_check() {
        let g = 3;
        let m = transvection_power(&HClass::a(g, 1).add(&HClass::b(g, 2)), 1).reduce_mod2();
        assert!(is_symplectic_mod2(&m));
        let mut bad = F2Matrix::identity(6);
        bad.set(0, 0, false);
        assert!(!is_symplectic_mod2(&bad));
    }
}
