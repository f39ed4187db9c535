//! One-dimensional central extensions of Vergne-type algebras.
//!
//! For a homogeneous 2-cocycle `ω` of degree `n + 1` containing `e¹∧eⁿ`, the
//! extension `g(ω) = g ⊕ span(e_{n+1})` has brackets
//! `[e_i, e_j] + ω(e_i, e_j) e_{n+1}` and is again of Vergne type. Conversely
//! every Vergne algebra of dimension `n ≥ 6` is such an extension of its
//! truncation, with `ω` read off the constants `c_{i,j}`, `i + j = n`.
//!
//! Peeling generators down to dimension five gives a [`Decomposition`]. The
//! [`partner`] construction swaps the root `m₀(5) ↔ m₂(5)` and replays the
//! steps with `f(ω)` in place of `ω`; the two algebras have the same Betti
//! numbers.

use serde_json::{json, Value};

use crate::algebra::{involution_f, operator_d1, pair, split_e1_e2, StructureTable, VergneAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{basis_graded, Form, Monomial, MAX_AMBIENT};
use crate::operator::{matrix_of, LinearOperator};

/// A base algebra with a cocycle that extends it to a Vergne algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionStep {
    pub base: VergneAlgebra,
    pub omega: Form,
}

impl ExtensionStep {
    pub fn new(base: VergneAlgebra, omega: Form) -> Result<Self> {
        validate_omega(&base, &omega)?;
        Ok(ExtensionStep { base, omega })
    }

    pub fn extend(&self) -> Result<VergneAlgebra> {
        central_extension(&self.base, &self.omega)
    }
}

fn validate_omega(g: &VergneAlgebra, omega: &Form) -> Result<()> {
    let n = g.dim();
    if omega.ambient() != n {
        return Err(Error::AmbientMismatch { left: n, right: omega.ambient() });
    }
    for t in omega.terms() {
        if t.top_degree() != 2 {
            return Err(Error::NotHomogeneousTopDegree { found: t.top_degree() });
        }
        if t.degree() != n + 1 {
            return Err(Error::NotHomogeneousDegree { expected: n + 1, found: t.degree() });
        }
    }
    if !omega.contains(pair(1, n)) {
        return Err(Error::MissingLeadingTerm { n });
    }
    if !g.differential().apply(omega).is_zero() {
        return Err(Error::NotACocycle);
    }
    Ok(())
}

/// `g(ω)`, of dimension `n + 1`.
pub fn central_extension(g: &VergneAlgebra, omega: &Form) -> Result<VergneAlgebra> {
    validate_omega(g, omega)?;
    let n = g.dim();
    if n + 1 > MAX_AMBIENT {
        return Err(Error::DimensionOutOfRange { n: n + 1, min: 5, max: MAX_AMBIENT });
    }
    let old = (2..=n).flat_map(|i| (i + 1..=n - i).map(move |j| (i, j))).filter(|&(i, j)| g.c(i, j));
    let new = omega.terms().filter(|t| !t.contains(1)).map(|t| {
        let mut ix = t.indices();
        (ix.next().unwrap(), ix.next().unwrap())
    });
    let table = StructureTable::from_pairs(n + 1, old.chain(new).collect::<Vec<_>>())?;
    VergneAlgebra::from_table(table)
}

/// Every homogeneous 2-cocycle of degree `n + 1` whose `e¹∧eⁿ` coefficient is 1.
///
/// These form an affine space; all of its points are returned, ordered by
/// their term lists.
pub fn admissible_cocycles(g: &VergneAlgebra) -> Vec<Form> {
    let n = g.dim();
    let slice = basis_graded(n, 2, n + 1);
    let lead = pair(1, n);
    debug_assert_eq!(slice.first(), Some(&lead));
    let matrix = matrix_of(&g.differential(), &slice, &basis_graded(n, 3, n + 1))
        .expect("d preserves degree");
    let kernel: Vec<Vec<usize>> = matrix.kernel_basis();
    let as_form = |coords: &[usize]| Form::from_monomials(n, coords.iter().map(|&c| slice[c]));
    let Some(pos) = kernel.iter().position(|v| v.contains(&0)) else {
        return Vec::new();
    };
    let base = as_form(&kernel[pos]);
    let tails: Vec<Form> = kernel
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, v)| {
            let mut f = as_form(v);
            if v.contains(&0) {
                f.add_assign(&base);
            }
            f
        })
        .collect();
    let mut out: Vec<Form> = (0u64..1 << tails.len())
        .map(|mask| {
            let mut f = base.clone();
            for (i, t) in tails.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    f.add_assign(t);
                }
            }
            f
        })
        .collect();
    out.sort_by_key(|f| f.terms().collect::<Vec<Monomial>>());
    out
}

/// Writes `g` (dimension `n ≥ 6`) as `base(ω)` with `base` its truncation and
/// `ω = e¹∧e^{n−1} + Σ_{i+j=n, 1<i<j} c_{i,j} eⁱ∧eʲ`.
pub fn reduce(g: &VergneAlgebra) -> Result<(VergneAlgebra, Form)> {
    let n = g.dim();
    let base = g.truncate()?;
    let mut omega = Form::from_monomial(n - 1, pair(1, n - 1));
    for i in 2..n.div_ceil(2) {
        if g.c(i, n - i) {
            omega.toggle(pair(i, n - i));
        }
    }
    Ok((base, omega))
}

/// A dimension-five root and the cocycles that rebuild an algebra from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub root: VergneAlgebra,
    /// Steps from dimension 5 upward; `steps[0].base` is the root.
    pub steps: Vec<ExtensionStep>,
}

impl Decomposition {
    /// Applies every step in order.
    pub fn replay(&self) -> Result<VergneAlgebra> {
        let mut g = self.root.clone();
        for step in &self.steps {
            if step.base != g {
                return Err(Error::DecompositionMismatch { dim: g.dim() });
            }
            g = step.extend()?;
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.root.dim() + self.steps.len()
    }

    pub fn to_json_value(&self) -> Value {
        let root_label = if self.root.is_m0() { "m0(5)" } else { "m2(5)" };
        json!({
            "dimension": self.dim(),
            "root": self.root.row().to_string(),
            "root_label": root_label,
            "omegas": self.steps.iter().map(|s| s.omega.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Reduces repeatedly down to dimension five.
pub fn decompose(g: &VergneAlgebra) -> Decomposition {
    let mut steps = Vec::with_capacity(g.dim() - 5);
    let mut current = g.clone();
    while current.dim() > 5 {
        let (base, omega) = reduce(&current).expect("dimension above five");
        steps.push(ExtensionStep { base: base.clone(), omega });
        current = base;
    }
    steps.reverse();
    Decomposition { root: current, steps }
}

/// The algebra obtained by swapping the root `m₀(5) ↔ m₂(5)` and extending by
/// `f(ω)` at every step.
pub fn partner(g: &VergneAlgebra) -> Result<VergneAlgebra> {
    let dec = decompose(g);
    let mut current = if dec.root.is_m0() { VergneAlgebra::m2(5)? } else { VergneAlgebra::m0(5)? };
    for step in &dec.steps {
        let omega = involution_f(&step.omega)?;
        current = central_extension(&current, &omega)?;
    }
    Ok(current)
}

/// Whether `g` has an abelian ideal of codimension one.
///
/// Any such ideal contains the derived algebra `span(e₃, …, eₙ)`, whose
/// quotient is two dimensional, so over GF(2) only the three hyperplanes
/// `span(e₃, …, eₙ) + span(v)`, `v ∈ {e₁, e₂, e₁ + e₂}` need checking.
pub fn has_codim1_abelian_ideal(g: &VergneAlgebra) -> bool {
    let n = g.dim();
    let derived: Vec<u64> = (3..=n).map(|i| 1u64 << (i - 1)).collect();
    [0b01u64, 0b10, 0b11].into_iter().any(|v| {
        let mut gens = derived.clone();
        gens.push(v);
        gens.iter().enumerate().all(|(a, &x)| gens[a + 1..].iter().all(|&y| g.bracket(x, y) == 0))
    })
}

/// For a cocycle `e¹∧x + e²∧y + z`: `e²∧D₁(z) = e²∧R(x)`.
pub fn d1_r_identity_holds(g: &VergneAlgebra, cocycle: &Form) -> bool {
    let n = g.dim();
    let (x, _, z) = split_e1_e2(cocycle);
    let e2 = Monomial::generator(2);
    operator_d1(n).apply(&z).wedge_monomial(e2) == g.operator_r().apply(&x).wedge_monomial(e2)
}
