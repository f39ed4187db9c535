//! Linear operators on the exterior algebra and their matrices.
//!
//! Most operators here are derivations: a map on generators extended by the
//! Leibniz rule `D(a∧b) = D(a)∧b + a∧D(b)`, which carries no signs over GF(2).
//! Small combinators ([`Compose`], [`WedgeLeft`], [`Sum`]) build the
//! composite operators used to state identities such as `d₀ = e¹∧D₁`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exterior::{Form, Monomial, MAX_AMBIENT};
use crate::gf2::BitMatrix;

/// A GF(2)-linear map on `Λ*(e¹, …, eⁿ)`, determined by its values on monomials.
pub trait LinearOperator {
    fn ambient(&self) -> usize;

    fn apply_monomial(&self, m: Monomial) -> Form;

    fn apply(&self, form: &Form) -> Form {
        assert_eq!(form.ambient(), self.ambient(), "ambient mismatch");
        let mut out = Form::zero(self.ambient());
        for m in form.terms() {
            out.add_assign(&self.apply_monomial(m));
        }
        out
    }
}

impl<T: LinearOperator + ?Sized> LinearOperator for &T {
    fn ambient(&self) -> usize {
        (**self).ambient()
    }

    fn apply_monomial(&self, m: Monomial) -> Form {
        (**self).apply_monomial(m)
    }
}

/// The derivation extending a map on generators.
///
/// Generators without an explicit image map to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    n: usize,
    // images[i - 1] is the image of e^i
    images: Vec<Form>,
}

impl Derivation {
    /// The zero derivation.
    pub fn zero(n: usize) -> Self {
        Derivation { n, images: vec![Form::zero(n); n] }
    }

    /// Builds the derivation with `e^i ↦ image` for each given pair.
    pub fn new(n: usize, images: impl IntoIterator<Item = (usize, Form)>) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge(n));
        }
        let mut d = Self::zero(n);
        for (i, image) in images {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if image.ambient() != n {
                return Err(Error::AmbientMismatch { left: n, right: image.ambient() });
            }
            d.images[i - 1] = image;
        }
        Ok(d)
    }

    /// The image of the generator `e^i`.
    pub fn image(&self, i: usize) -> &Form {
        &self.images[i - 1]
    }
}

impl LinearOperator for Derivation {
    fn ambient(&self) -> usize {
        self.n
    }

    fn apply_monomial(&self, m: Monomial) -> Form {
        let mut out = Form::zero(self.n);
        for i in m.indices() {
            let rest = m.without(i);
            for t in self.images[i - 1].terms() {
                if let Some(p) = t.wedge(rest) {
                    out.toggle(p);
                }
            }
        }
        out
    }
}

/// `outer ∘ inner`.
#[derive(Clone, Debug)]
pub struct Compose<A, B> {
    pub outer: A,
    pub inner: B,
}

impl<A: LinearOperator, B: LinearOperator> LinearOperator for Compose<A, B> {
    fn ambient(&self) -> usize {
        self.inner.ambient()
    }

    fn apply_monomial(&self, m: Monomial) -> Form {
        self.outer.apply(&self.inner.apply_monomial(m))
    }
}

/// `ω ↦ factor ∧ op(ω)`.
#[derive(Clone, Debug)]
pub struct WedgeLeft<O> {
    pub factor: Form,
    pub op: O,
}

impl<O: LinearOperator> LinearOperator for WedgeLeft<O> {
    fn ambient(&self) -> usize {
        self.op.ambient()
    }

    fn apply_monomial(&self, m: Monomial) -> Form {
        self.factor.wedge_unchecked(&self.op.apply_monomial(m))
    }
}

/// `a + b`.
#[derive(Clone, Debug)]
pub struct Sum<A, B>(pub A, pub B);

impl<A: LinearOperator, B: LinearOperator> LinearOperator for Sum<A, B> {
    fn ambient(&self) -> usize {
        self.0.ambient()
    }

    fn apply_monomial(&self, m: Monomial) -> Form {
        let mut out = self.0.apply_monomial(m);
        out.add_assign(&self.1.apply_monomial(m));
        out
    }
}

/// The matrix of `op` from `span(domain)` to `span(codomain)`.
///
/// Column `j` holds the coordinates of `op(domain[j])` in codomain order, so
/// the matrix is `codomain.len() x domain.len()`. An image term missing from
/// the codomain is reported as [`Error::ImageOutsideCodomain`].
pub fn matrix_of(
    op: &impl LinearOperator,
    domain: &[Monomial],
    codomain: &[Monomial],
) -> Result<BitMatrix> {
    let index: HashMap<Monomial, usize> = codomain.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut matrix = BitMatrix::zeros(codomain.len(), domain.len());
    for (col, &m) in domain.iter().enumerate() {
        for t in op.apply_monomial(m).terms() {
            let row = *index.get(&t).ok_or(Error::ImageOutsideCodomain(t))?;
            matrix.flip(row, col);
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::basis;

    #[test]
    fn identity_derivation_in_top_degree_one() {
        let n = 3;
        let id = Derivation::new(n, (1..=n).map(|i| (i, Form::generator(n, i)))).unwrap();
        let b = basis(n, 1);
        assert_eq!(matrix_of(&id, &b, &b).unwrap(), BitMatrix::identity(3));
        // On 2-forms each monomial picks up two copies of itself.
        let b2 = basis(n, 2);
        assert_eq!(matrix_of(&id, &b2, &b2).unwrap(), BitMatrix::zeros(3, 3));
    }

    #[test]
    fn zero_operator_gives_zero_matrix() {
        let z = Derivation::zero(5);
        let m = matrix_of(&z, &basis(5, 2), &basis(5, 3)).unwrap();
        assert_eq!(m, BitMatrix::zeros(10, 10));
    }

    #[test]
    fn derivation_kills_scalars() {
        let d = Derivation::new(4, [(1, Form::parse(4, "e2^e3").unwrap())]).unwrap();
        assert!(d.apply(&Form::one(4)).is_zero());
    }

    #[test]
    fn image_outside_codomain_is_an_error() {
        let n = 4;
        let d = Derivation::new(n, [(3, Form::generator(n, 2))]).unwrap();
        let dom = basis(n, 1);
        let err = matrix_of(&d, &dom, &dom[..1]).unwrap_err();
        assert_eq!(err, Error::ImageOutsideCodomain(Monomial::generator(2)));
    }

    #[test]
    fn rejects_bad_generator_index() {
        assert!(Derivation::new(4, [(5, Form::zero(4))]).is_err());
        assert!(Derivation::new(4, [(2, Form::zero(5))]).is_err());
    }
}
