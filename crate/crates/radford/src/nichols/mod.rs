//! Nichols algebras of braided vector spaces: quantum symmetrizers,
//! skew-derivations, graded dimensions and membership in the ideal.

mod braid;
mod poly;
mod symmetrizer;
mod tower;

pub use crate::transport::BraidedSpace;
pub use braid::{apply_c, inversions, matsumoto, permutations, BraidWord};
pub use poly::NcPoly;
pub use symmetrizer::{
    apply_symmetrizer, symmetrizer_block_ranks, symmetrizer_brute, symmetrizer_matrix, symmetrizer_rank,
    BRUTE_MAX_DEGREE, DEFAULT_BUDGET,
};
pub use tower::{graded_dims_derivation, skew_derivation, GradedDims, NicholsTower};

use crate::cyclo::{CycScalar, HilbertPoly};
use crate::error::{Error, Result};

/// Whether a homogeneous tensor of degree `k` lies in the kernel of `Q_k`.
/// Also projects it through the derivation tower and fails if the two
/// answers differ.
pub fn relation_member(c: &BraidedSpace, k: usize, element: &[CycScalar], budget: usize) -> Result<bool> {
    let size = c.dim.pow(k as u32);
    if element.len() != size {
        return Err(Error::ShapeMismatch(format!("a degree-{k} tensor has {size} coordinates, got {}", element.len())));
    }
    symmetrizer::check_budget(size, budget)?;
    let by_q = apply_symmetrizer(c, k, element).iter().all(|x| x.is_zero());
    let tower = NicholsTower::build(c, k, budget)?;
    let by_tower = tower.project(k, element).expect("tower reaches degree k").iter().all(|x| x.is_zero());
    if by_q != by_tower {
        return Err(Error::Verification(format!(
            "symmetrizer and derivation tower disagree on a degree-{k} element"
        )));
    }
    Ok(by_q)
}

/// [`relation_member`] for a homogeneous polynomial in the basis letters.
pub fn poly_member(c: &BraidedSpace, p: &NcPoly, budget: usize) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let (k, v) = p
        .to_tensor(c.dim)
        .ok_or_else(|| Error::InvalidArgument(format!("relation is not homogeneous: {p}")))?;
    relation_member(c, k, &v, budget)
}

/// `Π (n_i)_{t^{d_i}}`.
pub fn hilbert_expand(factors: &[(u32, u32)]) -> HilbertPoly {
    HilbertPoly::expand(factors)
}
