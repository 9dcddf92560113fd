//! Exact linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words; matrices are row-oriented.
//! Everything here is deterministic: row reduction always picks the lowest
//! available column as the next pivot, so reduced forms, pivot lists and
//! derived quantities (ranks, quotient bases) are byte-stable across runs.
//!
//! All values are immutable after construction in the public API sense:
//! the mutating helpers (`set`, `xor_assign`) exist for building values,
//! and none of the algebra operations share state.

use std::fmt;

/// A fixed-length vector over GF(2), bit-packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    words: Vec<u64>,
    len: usize,
}

impl F2Vector {
    /// The zero vector of the given length.
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    /// Vector with exactly the given bits set.
    ///
    /// # Panics
    /// Panics if any index is out of range.
    #[must_use]
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Vector built from an iterator of bits, in index order.
    #[must_use]
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let collected: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(collected.len());
        for (i, b) in collected.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Bit at index `i`.
    ///
    /// # Panics
    /// Panics if `i >= len`.
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    /// Sets bit `i` to the given value.
    ///
    /// # Panics
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        if value {
            self.words[i / 64] |= 1u64 << (i % 64);
        } else {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    /// In-place addition (XOR).
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Sum of two vectors (coordinatewise XOR).
    #[must_use]
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Index of the lowest set bit, `None` for the zero vector.
    #[must_use]
    pub fn leading_index(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Number of set bits.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// The vector with its coordinate order reversed.
    #[must_use]
    pub fn reversed(&self) -> Self {
        F2Vector::from_bits((0..self.len).rev().map(|i| self.get(i)))
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A matrix over GF(2), stored as rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
    cols: usize,
}

impl F2Matrix {
    /// Matrix from row vectors.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths.
    #[must_use]
    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Self {
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {}, expected {cols}", r.len());
        }
        Self { rows, cols }
    }

    /// Zero matrix of the given shape.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: (0..rows).map(|_| F2Vector::zeros(cols)).collect(), cols }
    }

    /// Identity matrix of size `n`.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| F2Vector::from_indices(n, &[i])).collect();
        Self { rows, cols: n }
    }

    #[must_use]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn col_count(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &F2Vector {
        &self.rows[i]
    }

    #[must_use]
    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    /// Entry at `(i, j)`.
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    /// Column `j` as a vector.
    #[must_use]
    pub fn column(&self, j: usize) -> F2Vector {
        F2Vector::from_bits(self.rows.iter().map(|r| r.get(j)))
    }

    /// Appends a row, which must have the right length.
    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.cols, "push_row: length mismatch");
        self.rows.push(row);
    }

    /// Matrix product over GF(2).
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.row_count(), "mul: dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = F2Vector::zeros(other.cols);
                for k in r.ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Self { rows, cols: other.cols }
    }

    /// Matrix–vector product.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn mul_vector(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(self.cols, v.len(), "mul_vector: dimension mismatch");
        F2Vector::from_bits(self.rows.iter().map(|r| {
            let mut parity = false;
            for i in r.ones() {
                parity ^= v.get(i);
            }
            parity
        }))
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols).map(|j| self.column(j)).collect();
        Self { rows, cols: self.row_count() }
    }

    /// GF(2) row rank.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Reduced row-echelon form together with the (strictly increasing)
    /// pivot column list. Zero rows sink to the bottom; the row span is
    /// preserved. Pivot selection is lowest-column-first, so the output is
    /// canonical for a given row span.
    #[must_use]
    pub fn row_reduce(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot_row) = (next_row..m.rows.len()).find(|&r| m.rows[r].get(col)) else {
                continue;
            };
            m.rows.swap(next_row, pivot_row);
            let pivot = m.rows[next_row].clone();
            for (r, row) in m.rows.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    /// Whether `v` lies in the row space.
    ///
    /// # Panics
    /// Panics on length mismatch.
    #[must_use]
    pub fn in_span(&self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.cols, "in_span: length mismatch");
        let (reduced, pivots) = self.row_reduce();
        let mut rest = v.clone();
        for (row, &p) in reduced.rows.iter().zip(&pivots) {
            if rest.get(p) {
                rest.xor_assign(row);
            }
        }
        rest.is_zero()
    }

    /// Whether the matrix is square and invertible over GF(2).
    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.row_count() == self.cols && self.rank() == self.cols
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}:", self.row_count(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}
