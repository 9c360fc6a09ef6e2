//! Finite-dimensional Hopf algebras as structure constants: the Radford
//! algebra `R_{n,m}`, its dual `H_{n,m}`, the generalized Taft algebra
//! `T_{n,m}`, their evaluation pairing and the Drinfeld double.

mod algebra;
mod double;
mod elem;
mod radford;
mod relations;

pub use algebra::{solve_antipode, Coverage, FDHopf};
pub use double::{build_double, build_double_from, harpoon_identities, verify_double_axioms, verify_double_presentation};
pub use elem::{Acc, Elem};
pub use radford::{
    build_dual_radford, build_group_algebra, build_radford, build_taft_gen, check_params, gamma, omega, pairing, pairing_with, xi, HopfPairing,
};
pub use relations::{double_relations, Gen, Relation, WordAlgebra};
