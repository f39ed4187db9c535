//! Lie algebras of Vergne type over GF(2).
//!
//! A Vergne basis `e₁, …, eₙ` has `[e₁, e_i] = e_{i+1}` for `2 ≤ i ≤ n−1` and
//! `[e_i, e_j] = c_{i,j} e_{i+j}` for `i, j ≥ 2`, `i + j ≤ n`. Jacobi identities
//! that involve `e₁` force `c_{i,j} = c_{i+1,j} + c_{i,j+1}`, so the whole table
//! is determined by the `e₂` row `[0, c_{2,3}, …, c_{2,n−2}, 0, 0]`.
//!
//! On the dual side the differential is `d(e¹) = d(e²) = 0` and
//! `d(eᵏ) = e¹∧e^{k−1} + Σ_{i+j=k, 1<i<j} c_{i,j} eⁱ∧eʲ`, extended as a
//! derivation. This module also provides the operators `D₁`, `D₂`, `R` and the
//! involution `f`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, JacobiViolation, Result, RowError};
use crate::exterior::{Form, Monomial, MAX_AMBIENT};
use crate::operator::{Derivation, LinearOperator};

/// Smallest dimension accepted for a [`VergneAlgebra`].
pub const MIN_DIM: usize = 5;

fn check_dim(n: usize) -> Result<()> {
    if !(MIN_DIM..=MAX_AMBIENT).contains(&n) {
        return Err(Error::DimensionOutOfRange { n, min: MIN_DIM, max: MAX_AMBIENT });
    }
    Ok(())
}

/// The `e₂` row `[r₂, r₃, …, rₙ]` of the structure constants, `r_j = c_{2,j}`.
///
/// Positions 2, `n−1` and `n` are always zero, so `r₃ … r_{n−2}` are the
/// only free entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowVector {
    n: usize,
    // bit j - 1 holds r_j
    bits: u64,
}

impl RowVector {
    /// Builds a row from its `n − 1` entries for positions `2..=n`.
    pub fn new(n: usize, entries: &[bool]) -> Result<Self> {
        check_dim(n)?;
        if entries.len() != n - 1 {
            return Err(RowError::Length { expected: n - 1, found: entries.len() }.into());
        }
        let mut bits = 0u64;
        for (offset, &e) in entries.iter().enumerate() {
            let j = offset + 2;
            if e {
                if j == 2 || j >= n - 1 {
                    return Err(RowError::Padding { position: j }.into());
                }
                bits |= 1 << (j - 1);
            }
        }
        Ok(RowVector { n, bits })
    }

    /// The row whose free entries `r₃ … r_{n−2}`, read left to right as a
    /// binary number, equal `value`.
    ///
    /// # Panics
    /// Panics if `n` is out of range or `value` needs more than `n − 4` bits.
    pub fn from_free_value(n: usize, value: u64) -> Self {
        check_dim(n).expect("row dimension");
        let free = n - 4;
        assert!(free >= 64 || value >> free == 0, "value {value} needs more than {free} bits");
        let mut bits = 0u64;
        for b in 0..free {
            if value >> b & 1 == 1 {
                bits |= 1 << (n - 2 - b - 1);
            }
        }
        RowVector { n, bits }
    }

    /// Inverse of [`from_free_value`](Self::from_free_value).
    pub fn free_value(&self) -> u64 {
        (0..self.n - 4).fold(0, |acc, b| acc | u64::from(self.get(self.n - 2 - b)) << b)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `r_j` for `2 ≤ j ≤ n`; zero elsewhere.
    pub fn get(&self, j: usize) -> bool {
        (2..=self.n).contains(&j) && self.bits >> (j - 1) & 1 == 1
    }

    /// Entries for positions `2..=n`.
    pub fn entries(&self) -> Vec<bool> {
        (2..=self.n).map(|j| self.get(j)).collect()
    }

    /// Parses `[0, 0, 0, 1, 0, 0, 0]`. Brackets, commas and whitespace are
    /// optional; `0001000` is accepted too. The dimension is the entry count
    /// plus one.
    pub fn parse(input: &str) -> Result<Self> {
        let err = |reason: &str| -> Error {
            RowError::Parse { input: input.to_string(), reason: reason.to_string() }.into()
        };
        let trimmed = input.trim();
        let inner = trimmed
            .strip_prefix('[')
            .map(|s| s.strip_suffix(']').ok_or_else(|| err("unbalanced bracket")))
            .transpose()?
            .unwrap_or(trimmed);
        let tokens: Vec<&str> = if inner.contains(',') {
            inner.split(',').map(str::trim).collect()
        } else if inner.split_whitespace().count() > 1 {
            inner.split_whitespace().collect()
        } else {
            let compact = inner.trim();
            (0..compact.len()).map(|i| &compact[i..i + 1]).collect()
        };
        let entries = tokens
            .iter()
            .map(|t| match *t {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(err("entries must be 0 or 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(err("empty row"));
        }
        let n = entries.len() + 1;
        Self::new(n, &entries)
    }

    /// Like [`parse`](Self::parse) but requires dimension `n`.
    pub fn parse_with_dim(n: usize, input: &str) -> Result<Self> {
        let row = Self::parse(input).map_err(|e| match e {
            Error::DimensionOutOfRange { n: found, .. } => {
                RowError::Length { expected: n.saturating_sub(1), found: found - 1 }.into()
            }
            other => other,
        })?;
        if row.n != n {
            return Err(RowError::Length { expected: n - 1, found: row.n - 1 }.into());
        }
        Ok(row)
    }

    /// `[r₂,r₃,…]` without spaces.
    pub fn compact(&self) -> String {
        let body: Vec<&str> = self.entries().iter().map(|&b| if b { "1" } else { "0" }).collect();
        format!("[{}]", body.join(","))
    }
}

impl fmt::Display for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<&str> = self.entries().iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "[{}]", body.join(", "))
    }
}

impl fmt::Debug for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RowVector(n={}, {self})", self.n)
    }
}

impl FromStr for RowVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Rows order by dimension, then by the row read as a binary number.
impl Ord for RowVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.free_value().cmp(&other.free_value()))
    }
}

impl PartialOrd for RowVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A table of candidate structure constants `c_{i,j}` for `i, j ≥ 2`,
/// `i + j ≤ n`, not yet known to define a Lie algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTable {
    n: usize,
    // rows[i] bit j holds c_{i,j}
    rows: Vec<u64>,
}

impl StructureTable {
    pub fn zero(n: usize) -> Self {
        StructureTable { n, rows: vec![0; n + 1] }
    }

    /// Fills the table from the `e₂` row using `c_{i+1,j} = c_{i,j} + c_{i,j+1}`.
    ///
    /// The result need not be symmetric or alternating; [`check`](Self::check)
    /// reports where it fails.
    pub fn complete_from_row(row: &RowVector) -> Self {
        let n = row.dim();
        let mut t = Self::zero(n);
        for j in 2..=n - 2 {
            t.put(2, j, row.get(j));
        }
        for i in 2..n {
            for j in 2..=n.saturating_sub(i + 1) {
                let v = t.get(i, j) ^ t.get(i, j + 1);
                t.put(i + 1, j, v);
            }
        }
        t
    }

    /// A symmetric table with `c_{i,j} = c_{j,i} = 1` exactly for the given pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut t = Self::zero(n);
        for (i, j) in pairs {
            if i < 2 || j < 2 || i == j || i + j > n {
                return Err(Error::IndexOutOfRange { index: i.max(j), n });
            }
            t.put(i, j, true);
            t.put(j, i, true);
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The stored `c_{i,j}`; zero outside `i, j ≥ 2`, `i + j ≤ n`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        i >= 2 && j >= 2 && i + j <= self.n && self.rows[i] >> j & 1 == 1
    }

    fn put(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i >= 2 && j >= 2 && i + j <= self.n);
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Checks alternation, symmetry, the `e₁` Jacobi identities and all
    /// Jacobi identities among `e_i, e_j, e_k` with `2 ≤ i < j < k`.
    pub fn check(&self) -> Result<(), JacobiViolation> {
        let n = self.n;
        for i in 2..=n / 2 {
            if self.get(i, i) {
                return Err(JacobiViolation::Alternation { index: i });
            }
        }
        for i in 2..=n {
            for j in i + 1..=n.saturating_sub(i) {
                if self.get(i, j) != self.get(j, i) {
                    return Err(JacobiViolation::Symmetry { i, j });
                }
            }
        }
        for i in 2..=n {
            for j in i..n.saturating_sub(i) {
                if self.get(i, j) != self.get(i + 1, j) ^ self.get(i, j + 1) {
                    return Err(JacobiViolation::Completion { i, j });
                }
            }
        }
        for i in 2..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    if i + j + k > n {
                        break;
                    }
                    let sum = (self.get(j, k) & self.get(i, j + k))
                        ^ (self.get(i, k) & self.get(j, i + k))
                        ^ (self.get(i, j) & self.get(k, i + j));
                    if sum {
                        return Err(JacobiViolation::Triple { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn jacobi_holds(&self) -> bool {
        self.check().is_ok()
    }

    /// The Chevalley–Eilenberg differential built from the entries `c_{i,j}`
    /// with `i < j`.
    pub fn differential(&self) -> Derivation {
        let n = self.n;
        let images = (3..=n).map(|k| {
            let mut img = Form::from_monomial(n, pair(1, k - 1));
            for i in 2..=(k - 1) / 2 {
                let j = k - i;
                if i < j && self.get(i, j) {
                    img.toggle(pair(i, j));
                }
            }
            (k, img)
        });
        Derivation::new(n, images).expect("generator images lie in the ambient space")
    }
}

impl fmt::Debug for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones: Vec<String> = (2..=self.n)
            .flat_map(|i| (2..=self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j))
            .map(|(i, j)| format!("c{i},{j}"))
            .collect();
        write!(f, "StructureTable(n={}, {{{}}})", self.n, ones.join(", "))
    }
}

pub(crate) fn pair(i: usize, j: usize) -> Monomial {
    Monomial::from_bits(1 << (i - 1) | 1 << (j - 1))
}

/// A Lie algebra of Vergne type over GF(2), with verified structure constants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VergneAlgebra {
    table: StructureTable,
}

impl VergneAlgebra {
    /// `m₀(n)`: only `[e₁, e_i] = e_{i+1}`.
    pub fn m0(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(VergneAlgebra { table: StructureTable::zero(n) })
    }

    /// `m₂(n)`: additionally `[e₂, e_j] = e_{j+2}` for `3 ≤ j ≤ n−2`.
    pub fn m2(n: usize) -> Result<Self> {
        check_dim(n)?;
        let entries: Vec<bool> = (2..=n).map(|j| (3..=n - 2).contains(&j)).collect();
        Self::from_row(&RowVector::new(n, &entries)?)
    }

    /// Completes the row through the `e₁` Jacobi identities and verifies the rest.
    pub fn from_row(row: &RowVector) -> Result<Self> {
        Self::from_table(StructureTable::complete_from_row(row))
    }

    /// Accepts a table after [`StructureTable::check`] succeeds.
    pub fn from_table(table: StructureTable) -> Result<Self> {
        check_dim(table.dim())?;
        table.check()?;
        Ok(VergneAlgebra { table })
    }

    pub fn dim(&self) -> usize {
        self.table.n
    }

    /// `c_{i,j}`, symmetric, zero on the diagonal and out of range.
    pub fn c(&self, i: usize, j: usize) -> bool {
        self.table.get(i, j)
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// The row `[0, c_{2,3}, …, c_{2,n−2}, 0, 0]`.
    pub fn row(&self) -> RowVector {
        let n = self.dim();
        let entries: Vec<bool> = (2..=n).map(|j| self.c(2, j)).collect();
        RowVector::new(n, &entries).expect("a valid algebra has a valid row")
    }

    pub fn is_m0(&self) -> bool {
        self.table.rows.iter().all(|&r| r == 0)
    }

    pub fn is_m2(&self) -> bool {
        VergneAlgebra::m2(self.dim()).is_ok_and(|m2| &m2 == self)
    }

    pub fn differential(&self) -> Derivation {
        self.table.differential()
    }

    /// `R = e¹∧D₁ + d`: `R(eᵏ) = Σ_{i+j=k, 1<i<j} c_{i,j} eⁱ∧eʲ`.
    pub fn operator_r(&self) -> Derivation {
        let n = self.dim();
        let images = (5..=n).map(|k| {
            let terms = (2..=(k - 1) / 2).filter(|&i| self.c(i, k - i)).map(|i| pair(i, k - i));
            (k, Form::from_monomials(n, terms))
        });
        Derivation::new(n, images).expect("generator images lie in the ambient space")
    }

    /// Drops `eₙ`: the quotient by the centre `span(eₙ)`, of dimension `n − 1`.
    pub fn truncate(&self) -> Result<Self> {
        let n = self.dim();
        check_dim(n - 1)?;
        let mut t = StructureTable::zero(n - 1);
        for i in 2..n {
            for j in 2..n - i {
                t.put(i, j, self.c(i, j));
            }
        }
        Ok(VergneAlgebra { table: t })
    }

    /// The bracket of two vectors written as bit sets over `e₁, …, eₙ` (bit `i − 1`
    /// for `e_i`).
    pub fn bracket(&self, u: u64, v: u64) -> u64 {
        let mut out = 0u64;
        for i in Monomial::from_bits(u).indices() {
            for j in Monomial::from_bits(v).indices() {
                if let Some(k) = self.bracket_basis(i, j) {
                    out ^= 1 << (k - 1);
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` as the index of the resulting basis vector, if nonzero.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.dim();
        let (a, b) = (i.min(j), i.max(j));
        if a == b || b > n {
            return None;
        }
        if a == 1 {
            return (b >= 2 && b < n).then_some(b + 1);
        }
        self.c(a, b).then_some(a + b)
    }
}

impl fmt::Display for VergneAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row())
    }
}

impl fmt::Debug for VergneAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VergneAlgebra(n={}, {})", self.dim(), self.row())
    }
}

/// `D₁`: `e¹, e² ↦ 0`, `eⁱ ↦ e^{i−1}` for `i ≥ 3`.
pub fn operator_d1(n: usize) -> Derivation {
    Derivation::new(n, (3..=n).map(|i| (i, Form::generator(n, i - 1)))).expect("valid images")
}

/// `D₂`: `eⁱ ↦ 0` for `i ≤ 4`, `eⁱ ↦ e^{i−2}` for `i ≥ 5`.
pub fn operator_d2(n: usize) -> Derivation {
    Derivation::new(n, (5..=n).map(|i| (i, Form::generator(n, i - 2)))).expect("valid images")
}

/// Splits `h = e¹∧x + e²∧y + z` with `x` free of `e¹`, and `y`, `z` free of
/// `e¹` and `e²`. The decomposition is unique.
pub fn split_e1_e2(h: &Form) -> (Form, Form, Form) {
    let n = h.ambient();
    let (mut x, mut y, mut z) = (Form::zero(n), Form::zero(n), Form::zero(n));
    for m in h.terms() {
        if m.contains(1) {
            x.toggle(m.without(1));
        } else if m.contains(2) {
            y.toggle(m.without(2));
        } else {
            z.toggle(m);
        }
    }
    (x, y, z)
}

/// The involution `f(e¹∧x + e²∧y + z) = e¹∧x + e²∧(y + D₁(x)) + z` on `k`-forms,
/// `2 ≤ k ≤ n`.
///
/// Every term of `h` must have topological degree in `2..=n`; forms mixing
/// several such degrees are handled term by term.
pub fn involution_f(h: &Form) -> Result<Form> {
    let n = h.ambient();
    for m in h.terms() {
        let k = m.top_degree();
        if !(2..=n).contains(&k) {
            return Err(Error::TopDegreeOutOfRange { k, min: 2, max: n });
        }
    }
    let (x, _, _) = split_e1_e2(h);
    let correction = operator_d1(n).apply(&x).wedge_monomial(Monomial::generator(2));
    let mut out = h.clone();
    out.add_assign(&correction);
    Ok(out)
}
