//! The exterior algebra `Λ*(e¹, …, eⁿ)` over GF(2).
//!
//! A [`Monomial`] `e^{i₁}∧…∧e^{i_k}` is a set of generator indices packed into
//! one `u64` (index `i` is bit `i - 1`), which caps the ambient dimension at
//! 64. A [`Form`] is a finite set of monomials: every coefficient is 1, and
//! addition is symmetric difference. There are no signs in characteristic
//! two, so the wedge of two monomials is their union when disjoint and zero
//! otherwise.
//!
//! The space splits by topological degree `k` (number of factors) and by
//! degree `m` (sum of indices). [`basis_graded`] lists the monomials of
//! `Λ^k_m`; the wedge product adds both gradings.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_AMBIENT: usize = 64;

/// A basis monomial `e^{i₁}∧…∧e^{i_k}`, stored as a bit set of indices.
///
/// Ordering is lexicographic on the sorted index tuple, so `e¹∧e² < e¹∧e³ <
/// e²∧e³` and a proper prefix sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    /// The empty monomial, i.e. the scalar `1`.
    pub const ONE: Monomial = Monomial(0);

    /// The generator `e^i`.
    ///
    /// # Panics
    /// Panics unless `1 <= i <= 64`.
    pub fn generator(i: usize) -> Self {
        assert!((1..=MAX_AMBIENT).contains(&i), "generator index {i} out of range");
        Monomial(1u64 << (i - 1))
    }

    /// Builds a monomial from distinct indices in `1..=n`. Returns `Ok(None)`
    /// when an index repeats, since the wedge then vanishes.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Option<Self>> {
        let mut bits = 0u64;
        for &i in indices {
            if i == 0 || i > n || i > MAX_AMBIENT {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Ok(None);
            }
            bits |= b;
        }
        Ok(Some(Monomial(bits)))
    }

    pub const fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut w = self.0;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let i = w.trailing_zeros() as usize + 1;
            w &= w - 1;
            Some(i)
        })
    }

    /// Sum of the indices.
    pub fn degree(self) -> usize {
        self.indices().sum()
    }

    /// Number of factors.
    pub fn top_degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_AMBIENT).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    /// Largest index present, or 0 for the scalar monomial.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// `self ∧ other`, or `None` when they share a generator.
    pub fn wedge(self, other: Monomial) -> Option<Monomial> {
        (self.0 & other.0 == 0).then_some(Monomial(self.0 | other.0))
    }

    /// The monomial with generator `i` removed.
    pub fn without(self, i: usize) -> Monomial {
        Monomial(self.0 & !(1u64 << (i - 1)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.0, other.0);
        if a == b {
            return Ordering::Equal;
        }
        // Both tuples agree below the lowest differing index p. The side
        // holding p continues with p; the other continues with something
        // larger, or stops, in which case it is a prefix and sorts first.
        let p = (a ^ b).trailing_zeros();
        let a_holds = (a >> p) & 1 == 1;
        let other = if a_holds { b } else { a };
        let holder_first = p < 63 && other >> (p + 1) != 0;
        if a_holds == holder_first {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                f.write_str("^")?;
            }
            write!(f, "e{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A GF(2) linear combination of monomials in a fixed ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    terms: BTreeSet<Monomial>,
}

impl Form {
    /// # Panics
    /// Panics if `n > 64`.
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_AMBIENT, "ambient dimension {n} exceeds {MAX_AMBIENT}");
        Form { n, terms: BTreeSet::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_monomial(n, Monomial::ONE)
    }

    /// # Panics
    /// Panics if the monomial uses an index above `n`.
    pub fn from_monomial(n: usize, m: Monomial) -> Self {
        let mut f = Self::zero(n);
        assert!(m.max_index() <= n, "{m} does not live in ambient dimension {n}");
        f.terms.insert(m);
        f
    }

    /// The generator `e^i` as a form.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::from_monomial(n, Monomial::generator(i))
    }

    /// GF(2) sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut f = Self::zero(n);
        for m in monomials {
            f.toggle(m);
        }
        f
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().copied()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    /// Adds a single monomial (removing it if already present).
    ///
    /// # Panics
    /// Panics if the monomial uses an index above the ambient dimension.
    pub fn toggle(&mut self, m: Monomial) {
        debug_assert!(m.max_index() <= self.n, "{m} outside ambient {}", self.n);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// `self += other`.
    ///
    /// # Panics
    /// Panics on ambient mismatch; use [`Form::sum`] for a checked version.
    pub fn add_assign(&mut self, other: &Form) {
        assert_eq!(self.n, other.n, "ambient mismatch");
        for &m in &other.terms {
            self.toggle(m);
        }
    }

    pub fn sum(&self, other: &Form) -> Result<Form> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// The exterior product. Bilinear; monomials sharing an index vanish.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.check_ambient(other)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.n);
        for &a in &self.terms {
            for &b in &other.terms {
                if let Some(m) = a.wedge(b) {
                    out.toggle(m);
                }
            }
        }
        out
    }

    /// `m ∧ self` for a single monomial.
    pub fn wedge_monomial(&self, m: Monomial) -> Form {
        let mut out = Form::zero(self.n);
        for &t in &self.terms {
            if let Some(p) = m.wedge(t) {
                out.toggle(p);
            }
        }
        out
    }

    /// Parses the textual syntax `e1^e6 + e3^e4`: `^` is the wedge, `+` the
    /// GF(2) sum, `0` the zero form and `1` the scalar unit. Whitespace is
    /// ignored and terms may come in any order.
    pub fn parse(n: usize, input: &str) -> Result<Form> {
        if n > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(n));
        }
        let err = |reason: String| Error::ParseForm { input: input.to_string(), reason };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut form = Form::zero(n);
        for term in compact.split('+') {
            match term {
                "" => return Err(err("empty term".into())),
                "0" => continue,
                "1" => {
                    form.toggle(Monomial::ONE);
                    continue;
                }
                _ => {}
            }
            let mut indices = Vec::new();
            for factor in term.split('^') {
                let digits = factor
                    .strip_prefix('e')
                    .ok_or_else(|| err(format!("factor {factor:?} does not start with 'e'")))?;
                let i: usize = digits
                    .parse()
                    .map_err(|_| err(format!("bad generator index in {factor:?}")))?;
                indices.push(i);
            }
            if let Some(m) = Monomial::from_indices(n, &indices)? {
                form.toggle(m);
            }
        }
        Ok(form)
    }

    fn check_ambient(&self, other: &Form) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for m in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}]({self})", self.n)
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
///
/// # Panics
/// Panics if `n > 64`.
pub fn basis(n: usize, k: usize) -> Vec<Monomial> {
    assert!(n <= MAX_AMBIENT);
    let mut out = Vec::new();
    if k <= n {
        combinations(n, k, 1, 0, None, &mut out);
    }
    out
}

/// The monomials of `Λ^k_m`: `k`-subsets of `{1..n}` whose indices sum to `m`,
/// in lexicographic order. Empty unless `k(k+1)/2 <= m <= kn - k(k-1)/2`.
pub fn basis_graded(n: usize, k: usize, m: usize) -> Vec<Monomial> {
    assert!(n <= MAX_AMBIENT);
    let mut out = Vec::new();
    if k <= n && degree_range(n, k).contains(&m) {
        combinations(n, k, 1, 0, Some(m), &mut out);
    }
    out
}

/// The degrees `m` for which `Λ^k_m` is nonzero: `k(k+1)/2 ..= kn - k(k-1)/2`.
pub fn degree_range(n: usize, k: usize) -> std::ops::RangeInclusive<usize> {
    if k > n {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    k * (k + 1) / 2..=k * n - k * k.saturating_sub(1) / 2
}

fn combinations(
    n: usize,
    k: usize,
    start: usize,
    prefix: u64,
    target: Option<usize>,
    out: &mut Vec<Monomial>,
) {
    if k == 0 {
        if target.is_none_or(|t| t == 0) {
            out.push(Monomial(prefix));
        }
        return;
    }
    for i in start..=n + 1 - k {
        if let Some(t) = target {
            // Smallest and largest sums reachable with i as the next index.
            let lo = k * i + k * (k - 1) / 2;
            let hi = i + (k - 1) * n - (k - 1) * (k.saturating_sub(2)) / 2;
            if t < lo {
                break;
            }
            if t > hi {
                continue;
            }
            combinations(n, k - 1, i + 1, prefix | 1u64 << (i - 1), Some(t - i), out);
        } else {
            combinations(n, k - 1, i + 1, prefix | 1u64 << (i - 1), None, out);
        }
    }
}
