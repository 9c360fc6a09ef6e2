//! Modules over the double: the simple modules `V_{i,j}`, the projective
//! covers `M_{i,j}`, isomorphism and simplicity tests, composition series,
//! socles, idempotents and graph export.

mod idempotent;
mod lattice;
mod module;
mod projective;
mod simple;

pub use idempotent::{full_idempotent, idempotent, left_ideal_module, verify_idempotents};
pub use lattice::{
    action_algebra_dim, closure, composition_series, hom_space, identify_simple, is_simple, iso_test,
    joint_eigenspaces, socle, socle_span, CompSeries,
};
pub use module::DModule;
pub use projective::{alpha_closed_form, build_projective, projective_dim, solve_alpha};
pub use simple::{all_simples, build_simple, c_coeff, r_of, reduce_index};
