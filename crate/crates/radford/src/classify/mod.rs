//! Finiteness of the Nichols algebras of the simple Yetter-Drinfeld
//! modules over `H_{2,m}`, and the presented cases.

mod dynkin;
mod finite;
mod presentation;
mod table;

pub use dynkin::{dynkin, dynkin_n, rank1_finite, rank1_finite_n, DiagramExponents, Dynkin2};
pub use finite::{
    certificate, classify_all, classify_pair, dual_pair, dual_symmetry_violations, expected_finite, is_finite, probe,
    reproduce, reproduce_thm22, reproduce_thm23, Certificate, ClassifyOptions, PairReport, Probe, Reproduction,
    FINITE_PROBE_DEGREE, INFINITE_PROBE_DEGREE,
};
pub use presentation::{
    braiding_from_images, presentation_for, reconcile, verify_presentation, BraidingMatch, Family, PresentationReport,
    PresentationSpec, Reconciliation, Relation,
};
pub use table::{heck_match, heck_matches, heck_rows, row_realizes, HeckMatch, HeckRow, Witness};
