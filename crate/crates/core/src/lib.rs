//! Cohomology of filiform Lie algebras of Vergne type over GF(2).
//!
//! The crate computes Chevalley–Eilenberg cohomology with trivial
//! coefficients for `n`-dimensional Lie algebras with a basis `e₁, …, eₙ`
//! satisfying `[e₁, e_i] = e_{i+1}` and `[e_i, e_j] = c_{i,j} e_{i+j}`, entirely
//! in exact GF(2) arithmetic. On top of that it provides the involution `f`
//! that conjugates differentials of paired algebras, central extensions and
//! their inverse, the partner construction, and exhaustive enumeration of all
//! such algebras in a given dimension.
//!
//! ```
//! use filiform::{betti, VergneAlgebra};
//!
//! let m0 = VergneAlgebra::m0(8).unwrap();
//! let m2 = VergneAlgebra::m2(8).unwrap();
//! assert_eq!(betti(&m0).betti, betti(&m2).betti);
//! ```
//!
//! Module map:
//!
//! - [`gf2`]: bit-packed matrices, rank and kernels.
//! - [`exterior`], [`operator`]: forms, wedge product, derivations, matrices of operators.
//! - [`algebra`]: structure constants, rows, `d`, `D₁`, `D₂`, `R`, `f`.
//! - [`cohomology`]: cocycle dimensions, (graded) Betti numbers, commuting squares.
//! - [`extension`]: central extensions, decomposition, partners.
//! - [`classify`]: enumeration, labels, extension tree, DOT.
//! - [`verify`]: the check suites behind `filiform verify`.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod extension;
pub mod gf2;
pub mod operator;
pub mod verify;

pub use algebra::{involution_f, operator_d1, operator_d2, RowVector, StructureTable, VergneAlgebra};
pub use classify::{enumerate, extension_tree, label, to_dot, ExtensionTree};
pub use cohomology::{betti, cocycle_dim, graded_betti, verify_commuting_square, BettiTable, Cohomology};
pub use error::{Error, JacobiViolation, Result, RowError};
pub use exterior::{basis, basis_graded, Form, Monomial};
pub use extension::{
    admissible_cocycles, central_extension, decompose, has_codim1_abelian_ideal, partner, reduce,
    Decomposition, ExtensionStep,
};
pub use gf2::BitMatrix;
pub use operator::{matrix_of, Derivation, LinearOperator};

/// The guide under `book/`, compiled so its code samples run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exterior.md")]
    mod exterior {}
    #[doc = include_str!("../../../book/src/vergne.md")]
    mod vergne {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/involution.md")]
    mod involution {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
