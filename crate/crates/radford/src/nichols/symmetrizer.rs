use rayon::prelude::*;
use std::collections::BTreeMap;

use super::braid::{apply_c, matsumoto, permutations};
use crate::cyclo::{CycMatrix, CycScalar};
use crate::error::{Error, Result};
use crate::transport::BraidedSpace;

/// Default cap on the tensor dimension any single computation may touch.
pub const DEFAULT_BUDGET: usize = 1 << 12;

/// Highest degree for which the oracle enumerates all of `S_k`.
pub const BRUTE_MAX_DEGREE: usize = 6;

pub(crate) fn check_budget(needed: usize, budget: usize) -> Result<()> {
    if needed > budget {
        return Err(Error::CapacityExceeded { needed, budget });
    }
    Ok(())
}

/// `id + c_{k-1} + c_{k-1}c_{k-2} + ⋯ + c_{k-1}⋯c_1` applied to the first
/// `k` factors of a tensor of total length `total`, in Horner form.
fn apply_theta(v: &[CycScalar], d: usize, total: usize, k: usize, cols: &[Vec<(usize, CycScalar)>]) -> Vec<CycScalar> {
    if k < 2 {
        return v.to_vec();
    }
    let mut w = v.to_vec();
    for l in 1..k {
        let cw = apply_c(&w, d, total, l, cols);
        w = v.iter().zip(&cw).map(|(a, b)| a + b).collect();
    }
    w
}

/// `Q_k v` through `Q_k = (Q_{k-1} ⊗ id) Θ_k`.
pub fn apply_symmetrizer(c: &BraidedSpace, k: usize, v: &[CycScalar]) -> Vec<CycScalar> {
    let cols = c.columns();
    apply_q(v, c.dim, k, &cols)
}

fn apply_q(v: &[CycScalar], d: usize, k: usize, cols: &[Vec<(usize, CycScalar)>]) -> Vec<CycScalar> {
    (2..=k).rev().fold(v.to_vec(), |w, j| apply_theta(&w, d, k, j, cols))
}

/// `Q_k` as a dense matrix, from the factorized form.
pub fn symmetrizer_matrix(c: &BraidedSpace, k: usize, budget: usize) -> Result<CycMatrix> {
    let size = tensor_size(c.dim, k, budget)?;
    let cols = c.columns();
    let images: Vec<Vec<CycScalar>> = (0..size).into_par_iter().map(|j| apply_q(&unit(size, j), c.dim, k, &cols)).collect();
    Ok(CycMatrix::from_cols(size, &images))
}

/// `Σ_{σ ∈ S_k} ρ(M(σ))`, summing one lifted operator per permutation.
pub fn symmetrizer_brute(c: &BraidedSpace, k: usize, budget: usize) -> Result<CycMatrix> {
    let size = tensor_size(c.dim, k, budget)?;
    if k > BRUTE_MAX_DEGREE {
        return Err(Error::CapacityExceeded { needed: k, budget: BRUTE_MAX_DEGREE });
    }
    let perms = permutations(k);
    Ok(perms
        .par_iter()
        .map(|p| matsumoto(p).operator(c))
        .reduce(|| CycMatrix::zeros(size, size), |a, b| a.add(&b)))
}

/// `rank Q_k = dim B^k(V)`. Diagonal braidings are split into
/// multidegree blocks, which `Q_k` preserves.
pub fn symmetrizer_rank(c: &BraidedSpace, k: usize, budget: usize) -> Result<usize> {
    let size = tensor_size(c.dim, k, budget)?;
    if k == 0 {
        return Ok(1);
    }
    if c.as_diagonal().is_none() {
        return Ok(symmetrizer_matrix(c, k, budget)?.rank());
    }
    Ok(block_ranks(c, k, size).values().sum())
}

/// Per-multidegree ranks of `Q_k` for a diagonal braiding.
pub fn symmetrizer_block_ranks(c: &BraidedSpace, k: usize, budget: usize) -> Result<BTreeMap<Vec<usize>, usize>> {
    let size = tensor_size(c.dim, k, budget)?;
    if c.as_diagonal().is_none() {
        return Err(Error::InvalidArgument("block ranks need a braiding of diagonal type".into()));
    }
    Ok(block_ranks(c, k, size))
}

fn block_ranks(c: &BraidedSpace, k: usize, size: usize) -> BTreeMap<Vec<usize>, usize> {
    let d = c.dim;
    let mut blocks: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for idx in 0..size {
        let mut deg = vec![0; d];
        let mut x = idx;
        for _ in 0..k {
            deg[x % d] += 1;
            x /= d;
        }
        blocks.entry(deg).or_default().push(idx);
    }
    let cols = c.columns();
    blocks
        .into_par_iter()
        .map(|(deg, words)| {
            let images: Vec<Vec<CycScalar>> = words.iter().map(|&j| apply_q(&unit(size, j), d, k, &cols)).collect();
            let m = CycMatrix::from_fn(words.len(), words.len(), |r, col| images[col][words[r]].clone());
            (deg, m.rank())
        })
        .collect()
}

fn tensor_size(d: usize, k: usize, budget: usize) -> Result<usize> {
    let size = d.checked_pow(k as u32).unwrap_or(usize::MAX);
    check_budget(size, budget)?;
    Ok(size)
}

fn unit(size: usize, j: usize) -> Vec<CycScalar> {
    let mut v = vec![CycScalar::zero(); size];
    v[j] = CycScalar::one();
    v
}
