//! Independent reference implementations used as oracles. Nothing here calls
//! into the library's linear algebra or exterior algebra code.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Rank over GF(2) of a dense 0/1 matrix, by textbook elimination on `Vec<bool>`.
pub fn rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A Vergne algebra given by its full table of constants, completed from the
/// `e₂` row with the recurrence `c(i+1, j) = c(i, j) + c(i, j+1)`.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    /// `c[i][j]` for `2 ≤ i, j`, `i + j ≤ n`; indices are 1-based.
    pub c: Vec<Vec<bool>>,
}

impl Table {
    /// `row[j - 2] = c(2, j)` for `j = 2..=n`.
    pub fn from_row(row: &[bool]) -> Table {
        let n = row.len() + 1;
        let mut c = vec![vec![false; n + 2]; n + 2];
        for j in 2..=n {
            if 2 + j <= n {
                c[2][j] = row[j - 2];
            }
        }
        for i in 2..n {
            for j in 2..=n {
                if i + 1 + j <= n {
                    c[i + 1][j] = c[i][j] ^ c[i][j + 1];
                }
            }
        }
        Table { n, c }
    }

    /// `[e_i, e_j]` as a bit set (bit `k − 1` for `e_k`).
    pub fn bracket(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return 0;
        }
        let k = i + j;
        if k > self.n {
            return 0;
        }
        let coeff = i.min(j) == 1 || self.c[i][j];
        if coeff {
            1 << (k - 1)
        } else {
            0
        }
    }

    fn bracket_vec(&self, u: u64, v: u64) -> u64 {
        let mut out = 0;
        for i in 1..=self.n {
            if u >> (i - 1) & 1 == 0 {
                continue;
            }
            for j in 1..=self.n {
                if v >> (j - 1) & 1 == 1 {
                    out ^= self.bracket(i, j);
                }
            }
        }
        out
    }

    /// The completed table is a Lie algebra: alternating, symmetric and Jacobi
    /// on every triple of basis vectors.
    pub fn is_lie(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                if self.bracket(i, j) != self.bracket(j, i) {
                    return false;
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let a = self.bracket_vec(1 << (i - 1), self.bracket(j, k));
                    let b = self.bracket_vec(1 << (j - 1), self.bracket(k, i));
                    let c = self.bracket_vec(1 << (k - 1), self.bracket(i, j));
                    if a ^ b ^ c != 0 {
                        return false;
                    }
                }
            }
        }
        // c(i, i) must vanish for the bracket to be alternating.
        (2..=n).all(|i| 2 * i > n || !self.c[i][i])
    }

    /// `d(e^k)`: the set of `e^i ∧ e^j`, `i < j`, with `e_k` in `[e_i, e_j]`.
    pub fn d_generator(&self, k: usize) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.bracket(i, j) >> (k - 1) & 1 == 1 {
                    out.insert((1 << (i - 1)) | (1 << (j - 1)));
                }
            }
        }
        out
    }

    /// `d` on a monomial, by the Leibniz rule (signs vanish over GF(2)).
    pub fn d_monomial(&self, m: u64) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for k in 1..=self.n {
            if m >> (k - 1) & 1 == 0 {
                continue;
            }
            let rest = m & !(1 << (k - 1));
            for t in self.d_generator(k) {
                if t & rest == 0 {
                    let w = t | rest;
                    if !out.remove(&w) {
                        out.insert(w);
                    }
                }
            }
        }
        out
    }

    /// The full matrix of `d: Λᵏ → Λᵏ⁺¹`, codomain rows, domain columns.
    pub fn d_matrix(&self, k: usize) -> Vec<Vec<bool>> {
        let dom = monomials(self.n, k);
        let cod = monomials(self.n, k + 1);
        let mut rows = vec![vec![false; dom.len()]; cod.len()];
        for (j, &m) in dom.iter().enumerate() {
            for w in self.d_monomial(m) {
                let i = cod.binary_search(&w).expect("image has degree k + 1");
                rows[i][j] = true;
            }
        }
        rows
    }

    pub fn cocycle_dims(&self) -> Vec<usize> {
        (0..=self.n).map(|k| binomial(self.n, k) - rank(self.d_matrix(k))).collect()
    }

    pub fn betti(&self) -> Vec<usize> {
        let z = self.cocycle_dims();
        (0..=self.n)
            .map(|k| z[k] - if k == 0 { 0 } else { binomial(self.n, k - 1) - z[k - 1] })
            .collect()
    }
}

/// All `k`-subsets of `{1..n}` as bit sets, sorted numerically.
pub fn monomials(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// Every length-`n − 1` row `[r₂..rₙ]` with the three padding entries zero.
pub fn padded_rows(n: usize) -> Vec<Vec<bool>> {
    (0u64..1 << (n - 4))
        .map(|v| {
            let mut row = vec![false; n - 1];
            for (b, j) in (3..=n - 2).rev().enumerate() {
                row[j - 2] = v >> b & 1 == 1;
            }
            row
        })
        .collect()
}

/// Brute-force list of Lie rows of dimension `n`.
pub fn lie_rows(n: usize) -> Vec<Vec<bool>> {
    padded_rows(n).into_iter().filter(|r| Table::from_row(r).is_lie()).collect()
}

pub fn row_string(row: &[bool]) -> String {
    let parts: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
    format!("[{}]", parts.join(", "))
}
