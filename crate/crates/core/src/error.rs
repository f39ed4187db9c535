use thiserror::Error;

use crate::exterior::Monomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A reason why a structure-constant table is not a Lie algebra of Vergne type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobiViolation {
    /// The completed constant `c_{i,i}` is nonzero.
    #[error("alternation fails: c({index},{index}) = 1")]
    Alternation { index: usize },
    #[error("symmetry fails: c({i},{j}) != c({j},{i})")]
    Symmetry { i: usize, j: usize },
    /// `c_{i,j} != c_{i+1,j} + c_{i,j+1}`, i.e. a Jacobi identity involving `e_1`.
    #[error("Jacobi identity fails on (e1, e{i}, e{j})")]
    Completion { i: usize, j: usize },
    #[error("Jacobi identity fails on (e{i}, e{j}, e{k})")]
    Triple { i: usize, j: usize, k: usize },
}

/// A malformed row vector `[0, c_{2,3}, ..., c_{2,n-2}, 0, 0]`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowError {
    #[error("position {position} of the row must be 0")]
    Padding { position: usize },
    #[error("row has {found} entries, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("cannot parse row {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("ambient dimension {0} is outside 0..=64")]
    AmbientTooLarge(usize),
    #[error("generator index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot parse form {input:?}: {reason}")]
    ParseForm { input: String, reason: String },
    #[error("operator image contains {0}, which is not in the codomain basis")]
    ImageOutsideCodomain(Monomial),
    #[error("dimension {n} is outside the supported range {min}..={max}")]
    DimensionOutOfRange { n: usize, min: usize, max: usize },
    #[error("algebras have different dimensions: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("topological degree {k} outside {min}..={max}")]
    TopDegreeOutOfRange { k: usize, min: usize, max: usize },
    #[error(transparent)]
    InvalidRow(#[from] RowError),
    #[error(transparent)]
    Jacobi(#[from] JacobiViolation),
    #[error("omega is not a 2-cocycle of the base algebra")]
    NotACocycle,
    #[error("omega has a term of topological degree {found}, expected 2")]
    NotHomogeneousTopDegree { found: usize },
    #[error("omega has a term of degree {found}, expected {expected}")]
    NotHomogeneousDegree { expected: usize, found: usize },
    #[error("omega has no e1^e{n} term")]
    MissingLeadingTerm { n: usize },
    #[error("decomposition step in dimension {dim} does not extend the previous algebra")]
    DecompositionMismatch { dim: usize },
}
