//! Exact arithmetic substrate: base rings, polynomials, presented algebras,
//! Gröbner bases and ideal operations.

mod algebra;
mod groebner;
mod ideal;
pub mod linalg;
mod poly;
mod scalar;

pub use algebra::{AlgebraPresentation, AlgebraRef};
pub use groebner::{groebner_basis, reduce, Caps};
pub use ideal::Ideal;
pub use poly::{Monomial, MonomialOrder, Poly, PolyRing, RingRef};
pub(crate) use poly::{render_monomial, render_terms, same_ring};
pub use scalar::{BaseRing, Scalar};

/// A commutative algebra over a [`BaseRing`], used as an evaluation target.
pub trait CommAlgebra {
    type Elem: Clone;

    fn base(&self) -> BaseRing;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_scalar(&self, c: &Scalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;

    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_scalar(c), a)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(&self.base().from_int(-1), a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }
}
