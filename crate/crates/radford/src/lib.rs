//! Exact algebra for the dual Radford Hopf algebras `H_{n,m}`, their
//! Drinfeld doubles, modules over the double, the transport of those
//! modules to Yetter-Drinfeld modules, and graded dimensions of the
//! resulting Nichols algebras.

pub mod classify;
pub mod cyclo;
pub mod dmod;
pub mod error;
pub mod hopf;
pub mod nichols;
pub mod report;
pub mod transport;

pub use cyclo::{CycMatrix, CycScalar, Field, HilbertPoly, Matrix, RatMatrix};
pub use error::{Error, Result};
pub use report::Report;
