use serde::Serialize;

use super::braid::apply_c;
use super::symmetrizer::check_budget;
use crate::cyclo::{CycMatrix, CycScalar};
use crate::error::Result;
use crate::transport::BraidedSpace;

/// `dims[k] = dim B^k(V)`; `truncated` once a degree vanished, in which
/// case that zero is the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: Vec<usize>,
    pub truncated: bool,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "dims": self.dims, "truncated": self.truncated, "total": self.total() })
    }
}

/// One degree of `B(V)` on a chosen basis.
#[derive(Clone, Debug)]
struct Level {
    dim: usize,
    /// `delta[f]`: `B^k → B^{k-1}` induced by `∂_f`.
    delta: Vec<CycMatrix>,
    /// `right[u]`: `B^{k-1} → B^k`, right multiplication by `v_u`.
    right: Vec<CycMatrix>,
}

/// `B(V)` built degree by degree. An element of `T^k` lies in the
/// Nichols ideal iff all `∂_f` send it into the ideal; since `∂_f` and
/// right multiplication descend to `B`, each degree is the image of
/// `B^{k-1} ⊗ V → (B^{k-1})^d`, `β ⊗ v_t ↦ (∂_f(β v_t))_f`.
#[derive(Clone, Debug)]
pub struct NicholsTower {
    pub braiding: BraidedSpace,
    levels: Vec<Level>,
    truncated: bool,
}

impl NicholsTower {
    /// Degrees `0..=max_deg`, stopping at the first zero.
    pub fn build(c: &BraidedSpace, max_deg: usize, budget: usize) -> Result<Self> {
        let d = c.dim;
        let mut levels = vec![Level { dim: 1, delta: vec![], right: vec![] }];
        let mut truncated = false;
        let cols = c.columns();
        for _ in 1..=max_deg {
            let prev = levels.last().expect("degree 0 present");
            check_budget(d * prev.dim, budget)?;
            let level = next_level(d, &cols, prev);
            let zero = level.dim == 0;
            levels.push(level);
            if zero {
                truncated = true;
                break;
            }
        }
        Ok(NicholsTower { braiding: c.clone(), levels, truncated })
    }

    pub fn dims(&self) -> GradedDims {
        GradedDims { dims: self.levels.iter().map(|l| l.dim).collect(), truncated: self.truncated }
    }

    /// Highest degree built.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    /// Coordinates in `B^k` of the tensor with coefficients `v`
    /// (index base `d`, first letter most significant). `None` past `top`,
    /// except that everything above a vanished degree is zero.
    pub fn project(&self, k: usize, v: &[CycScalar]) -> Option<Vec<CycScalar>> {
        let d = self.braiding.dim;
        if k > self.top() {
            return self.truncated.then(Vec::new);
        }
        let mut out = vec![CycScalar::zero(); self.levels[k].dim];
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut coords = vec![CycScalar::one()];
            let mut digits = Vec::with_capacity(k);
            let mut y = idx;
            for _ in 0..k {
                digits.push(y % d);
                y /= d;
            }
            for (deg, &u) in digits.iter().rev().enumerate() {
                coords = self.levels[deg + 1].right[u].mul_vec(&coords);
            }
            for (o, c) in out.iter_mut().zip(&coords) {
                *o = &*o + &(x * c);
            }
        }
        Some(out)
    }

    /// `∂_f` on `B^k` (a `dim B^{k-1} × dim B^k` matrix).
    pub fn derivation(&self, k: usize, f: usize) -> Option<&CycMatrix> {
        self.levels.get(k).and_then(|l| l.delta.get(f))
    }
}

fn next_level(d: usize, cols: &[Vec<(usize, CycScalar)>], prev: &Level) -> Level {
    let b = prev.dim;
    // ∂_g then right multiplication by v_u, as maps on B^{k-1}
    let through: Vec<Vec<Option<CycMatrix>>> = (0..d)
        .map(|u| {
            (0..d)
                .map(|g| match (prev.right.get(u), prev.delta.get(g)) {
                    (Some(r), Some(dl)) => Some(r.mul(dl)),
                    _ => None,
                })
                .collect()
        })
        .collect();
    // column c·d+t is β_c ⊗ v_t, row f·b+r is coordinate r of block f:
    // ∂_f(β v_t) = δ_{ft} β + Σ C[(u,f),(g,t)] (∂_g β) v_u
    let mut m = CycMatrix::zeros(d * b, d * b);
    for t in 0..d {
        for c in 0..b {
            let col = c * d + t;
            let cell = &mut m[(t * b + c, col)];
            *cell = &*cell + &CycScalar::one();
        }
        for g in 0..d {
            for (row, e) in &cols[g * d + t] {
                let (u, f) = (row / d, row % d);
                let Some(p) = &through[u][g] else { continue };
                for c in 0..b {
                    for r in 0..b {
                        let x = &p[(r, c)];
                        if !x.is_zero() {
                            let cell = &mut m[(f * b + r, c * d + t)];
                            *cell = &*cell + &(e * x);
                        }
                    }
                }
            }
        }
    }
    let rref = m.rref();
    let dim = rref.pivots.len();
    let delta = (0..d)
        .map(|f| CycMatrix::from_fn(b, dim, |r, p| m[(f * b + r, rref.pivots[p])].clone()))
        .collect();
    let right = (0..d).map(|u| CycMatrix::from_fn(dim, b, |r, c| rref.matrix[(r, c * d + u)].clone())).collect();
    Level { dim, delta, right }
}

/// `dim B^k(V)` for `k ≤ max_deg` through the derivation tower.
pub fn graded_dims_derivation(c: &BraidedSpace, max_deg: usize, budget: usize) -> Result<GradedDims> {
    Ok(NicholsTower::build(c, max_deg, budget)?.dims())
}

/// `∂_f = (id ⊗ f) Θ_k` on `T^k(V)` as a `d^{k-1} × d^k` matrix;
/// it satisfies `∂_f(x v_t) = δ_{ft} x + Σ C[(u,f),(g,t)] ∂_g(x) v_u`.
pub fn skew_derivation(c: &BraidedSpace, f: usize, k: usize) -> CycMatrix {
    let d = c.dim;
    if k == 0 {
        return CycMatrix::zeros(0, 1);
    }
    let size = d.pow(k as u32);
    let cols = c.columns();
    let images: Vec<Vec<CycScalar>> = (0..size)
        .map(|j| {
            let mut v = vec![CycScalar::zero(); size];
            v[j] = CycScalar::one();
            let mut w = v.clone();
            for l in 1..k {
                let cw = apply_c(&w, d, k, l, &cols);
                w = v.iter().zip(&cw).map(|(a, b)| a + b).collect();
            }
            (0..size / d).map(|i| w[i * d + f].clone()).collect()
        })
        .collect();
    CycMatrix::from_cols(size / d, &images)
}
