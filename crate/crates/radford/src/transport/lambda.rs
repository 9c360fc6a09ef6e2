use std::sync::Arc;

use super::functors::{beta, reduce, transport, Hosts};
use super::yd::YDModule;
use crate::cyclo::{root, CycMatrix};
use crate::error::{Error, Result};
use crate::hopf::build_group_algebra;

/// `dim L(λ_{a,b})`: `n` if `m ∤ b`, else `(-a - b/m + 1) mod n` in `[1, n]`.
pub fn lambda_dim(n: u32, m: u32, a: u32, b: u32) -> u32 {
    if b % m != 0 {
        return n;
    }
    let r = (-(a as i64) - (b / m) as i64 + 1).rem_euclid(n as i64) as u32;
    if r == 0 {
        n
    } else {
        r
    }
}

/// `L(λ_{a,b}) = ad_c B(V)(λ_{a,b})` over `T` on the basis `z_0..z_{r-1}`:
/// `g·z_k = ξ^b ω^k z_k`, `x·z_k = -ξ^b ω^k z_{k+1}` (zero at the top),
/// `ρ(z_k) = Σ_ℓ β'_{ℓ,k} x^ℓ g^{a+k-ℓ} ⊗ z_{k-ℓ}`.
#[allow(non_snake_case)]
pub fn build_L(hosts: &Hosts, a: u32, b: u32) -> Result<YDModule> {
    let (n, m, nm) = (hosts.n, hosts.m, hosts.nm());
    if a >= nm || b >= nm {
        return Err(Error::InvalidArgument(format!("need 0 ≤ a, b < {nm}")));
    }
    let r = lambda_dim(n, m, a, b) as usize;
    let mut g = CycMatrix::zeros(r, r);
    let mut x = CycMatrix::zeros(r, r);
    for k in 0..r {
        let gk = root(nm, b as i64 + (m as usize * k) as i64);
        if k + 1 < r {
            x[(k + 1, k)] = -&gk;
        }
        g[(k, k)] = gk;
    }
    let coaction = (0..r)
        .map(|k| {
            (0..=k)
                .map(|l| {
                    let mono = (l as u32 * nm) as usize + (a as usize + k - l) % nm as usize;
                    (mono, beta(n, m, a as i64, b as i64, l as u32, k as u32), k - l)
                })
                .collect()
        })
        .collect();
    let actions = hosts.t.gens.iter().map(|(name, _)| if name == "g" { g.clone() } else { x.clone() }).collect();
    let mut y = YDModule::new(hosts.t.clone(), actions, coaction)?.checked()?;
    y.basis_names = (0..r).map(|k| format!("z{k}")).collect();
    Ok(y)
}

/// Whether `v_k ↦ z_k` is an isomorphism `F(V_{i,j}) ≅ L(λ_{-i,-j})`,
/// with `F` computed through the defining formulas.
pub fn check_corresp(hosts: &Hosts, i: u32, j: u32) -> Result<bool> {
    let f = transport(hosts, i, j)?;
    let l = build_L(hosts, reduce(hosts, -(i as i64)), reduce(hosts, -(j as i64)))?;
    Ok(f.same_structure(&l))
}

/// `W = V ⊕ λ_{a,b}` over `kC_{nm}`: `g·x = ωx`, `ρ(x) = g ⊗ x`,
/// `g·y = ξ^b y`, `ρ(y) = g^a ⊗ y`.
pub fn group_pair(n: u32, m: u32, a: u32, b: u32) -> Result<YDModule> {
    let nm = n * m;
    let host = Arc::new(build_group_algebra(nm)?);
    let mut g = CycMatrix::zeros(2, 2);
    g[(0, 0)] = root(nm, m as i64);
    g[(1, 1)] = root(nm, b as i64);
    let coaction = vec![vec![(1, crate::CycScalar::one(), 0)], vec![(a as usize % nm as usize, crate::CycScalar::one(), 1)]];
    let mut y = YDModule::new(host, vec![g], coaction)?.checked()?;
    y.basis_names = vec!["x".into(), "y".into()];
    Ok(y)
}
