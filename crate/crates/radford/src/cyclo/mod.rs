//! Exact cyclotomic scalars, generic dense linear algebra, q-numbers and
//! Hilbert polynomials.

mod field;
mod hilbert;
mod matrix;
mod qnum;
mod scalar;
mod span;

pub use field::Field;
pub use hilbert::HilbertPoly;
pub use matrix::{Matrix, Rref};
pub use qnum::{qbinom, qfact, qnum};
pub use scalar::{cyclotomic_poly, CycScalar};
pub use span::Span;

use num_rational::BigRational;

pub type CycMatrix = Matrix<CycScalar>;
pub type RatMatrix = Matrix<BigRational>;

/// Shorthand for `zeta_N^k`.
pub fn root(order: u32, k: i64) -> CycScalar {
    CycScalar::root(order, k)
}
