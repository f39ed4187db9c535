//! Dense linear algebra over GF(2).
//!
//! Rows are packed 64 columns per word, little-endian within a word: column
//! `c` lives in word `c / 64` at bit `c % 64`. Elimination is XOR of packed
//! rows. [`BitMatrix::rank_naive`] keeps an unpacked 0/1 path around as an
//! independent oracle for the packed one.

use std::fmt;

const WORD_BITS: usize = 64;

/// A dense `rows x cols` matrix over GF(2) with bit-packed rows.
///
/// Bits at column indices `>= cols` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// The zero matrix. Either dimension may be zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD_BITS);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from a predicate on `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries; every row must have length `cols`.
    ///
    /// # Panics
    /// Panics if a row has the wrong length.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {r} has length {} (expected {cols})", row.len());
            for (c, &v) in row.iter().enumerate() {
                if v & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    /// # Panics
    /// Panics if `(row, col)` is out of range.
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "({row}, {col}) out of range");
        let word = self.data[row * self.words_per_row + col / WORD_BITS];
        (word >> (col % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `(row, col)` is out of range.
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "({row}, {col}) out of range");
        let word = &mut self.data[row * self.words_per_row + col / WORD_BITS];
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// # Panics
    /// Panics if `(row, col)` is out of range.
    pub fn flip(&mut self, row: usize, col: usize) {
        assert!(row < self.rows && col < self.cols, "({row}, {col}) out of range");
        self.data[row * self.words_per_row + col / WORD_BITS] ^= 1u64 << (col % WORD_BITS);
    }

    /// The packed words of one row.
    pub fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Swaps two rows in place.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for i in 0..w {
            self.data.swap(a * w + i, b * w + i);
        }
    }

    /// `row[dst] += row[src]` over GF(2).
    pub fn add_row(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        if src == dst {
            self.data[dst * w..(dst + 1) * w].fill(0);
            return;
        }
        for i in 0..w {
            let v = self.data[src * w + i];
            self.data[dst * w + i] ^= v;
        }
    }

    /// Column indices of the nonzero entries of `row`, ascending.
    pub fn row_ones(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(row).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    /// Row rank over GF(2), computed on a copy by packed row elimination.
    ///
    /// Columns are scanned left to right; the pivot for a column is the
    /// first remaining row (top-down) with a one in it.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false).len()
    }

    /// `cols - rank`, the dimension of the right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Rank by Gaussian elimination on an unpacked `Vec<Vec<u8>>`.
    ///
    /// Shares no code with [`rank`](Self::rank) beyond reading entries.
    pub fn rank_naive(&self) -> usize {
        let mut a: Vec<Vec<u8>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| a[r][col] == 1) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..self.rows {
                if r != rank && a[r][col] == 1 {
                    let pivot = a[rank].clone();
                    for (x, y) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of the right kernel `{x : Mx = 0}`.
    ///
    /// Each vector is returned as the ascending list of coordinates equal to
    /// one. There is one vector per free column, and its free coordinate is
    /// the only free coordinate set.
    pub fn kernel_basis(&self) -> Vec<Vec<usize>> {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v: Vec<usize> = pivots
                    .iter()
                    .enumerate()
                    .filter(|&(r, _)| m.get(r, free))
                    .map(|(_, &p)| p)
                    .collect();
                v.push(free);
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// Row-reduces in place, returning pivot columns in row order. With
    /// `full`, also clears entries above each pivot (reduced echelon form).
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let w = self.words_per_row;
        for col in 0..self.cols {
            let rank = pivots.len();
            if rank == self.rows {
                break;
            }
            let wi = col / WORD_BITS;
            let mask = 1u64 << (col % WORD_BITS);
            let Some(p) = (rank..self.rows).find(|&r| self.data[r * w + wi] & mask != 0) else {
                continue;
            };
            self.swap_rows(rank, p);
            let start = if full { 0 } else { rank + 1 };
            for r in start..self.rows {
                if r != rank && self.data[r * w + wi] & mask != 0 {
                    // Words left of `wi` are already zero in the pivot row.
                    for i in wi..w {
                        let v = self.data[rank * w + i];
                        self.data[r * w + i] ^= v;
                    }
                }
            }
            pivots.push(col);
        }
        pivots
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
    }

    #[test]
    fn identity_has_full_rank() {
        let m = BitMatrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank_naive(), 3);
        assert_eq!(m.nullity(), 0);
    }

    #[test]
    fn all_ones_2x2_has_rank_one() {
        let m = BitMatrix::from_rows(2, &[[1u8, 1], [1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn empty_shapes() {
        let m = BitMatrix::zeros(0, 5);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullity(), 5);
        assert_eq!(m.kernel_basis().len(), 5);
        assert_eq!(BitMatrix::zeros(4, 0).rank(), 0);
        assert_eq!(BitMatrix::zeros(4, 7).rank_naive(), 0);
        assert_eq!(BitMatrix::zeros(4, 7).rank(), 0);
    }

    #[test]
    fn columns_past_64_are_packed_into_later_words() {
        let mut m = BitMatrix::zeros(2, 130);
        m.set(0, 129, true);
        m.set(1, 64, true);
        assert_eq!(m.row_words(0).len(), 3);
        assert_eq!(m.row_words(0)[2], 1 << 1);
        assert_eq!(m.row_words(1)[1], 1);
        assert_eq!(m.row_ones(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn packed_rank_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random(&mut rng, 100, 120, 0.5);
        assert_eq!(m.rank(), m.rank_naive());
        let m = random(&mut rng, 80, 80, 0.5);
        assert_eq!(m.nullity(), 80 - m.rank_naive());
        for _ in 0..200 {
            let rows = rng.gen_range(0..70);
            let cols = rng.gen_range(0..140);
            let density = rng.gen_range(0.02..0.6);
            let m = random(&mut rng, rows, cols, density);
            assert_eq!(m.rank(), m.rank_naive(), "{m:?}");
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let (r, c) = (rng.gen_range(1..50), rng.gen_range(1..90));
            let m = random(&mut rng, r, c, 0.2);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn rank_invariant_under_row_operations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let rows = rng.gen_range(2..40);
            let c = rng.gen_range(1..80);
            let mut m = random(&mut rng, rows, c, 0.3);
            let r = m.rank();
            let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
            m.swap_rows(a, b);
            assert_eq!(m.rank(), r);
            if a != b {
                m.add_row(a, b);
                assert_eq!(m.rank(), r);
            }
        }
    }

    #[test]
    fn kernel_basis_vectors_are_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let (r, c) = (rng.gen_range(0..30), rng.gen_range(0..90));
            let m = random(&mut rng, r, c, 0.25);
            let kernel = m.kernel_basis();
            assert_eq!(kernel.len(), m.nullity());
            for v in &kernel {
                for r in 0..m.rows() {
                    let dot = v.iter().filter(|&&c| m.get(r, c)).count() % 2;
                    assert_eq!(dot, 0);
                }
            }
            // Independent: stacking the kernel vectors gives full row rank.
            let k = BitMatrix::from_fn(kernel.len(), m.cols(), |r, c| kernel[r].contains(&c));
            assert_eq!(k.rank(), kernel.len());
        }
    }
}
