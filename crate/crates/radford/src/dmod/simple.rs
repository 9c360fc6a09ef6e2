use super::module::{diagonal, omega_pow, xi_pow, DModule};
use crate::cyclo::{qnum, CycMatrix, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::omega;

/// Dimension of the simple module `V_{i,j}`: `i + j/m + 1 mod n` (with
/// representative in `1..=n`) when `m | j`, else `n`.
pub fn r_of(n: u32, m: u32, i: u32, j: u32) -> u32 {
    if j % m != 0 {
        return n;
    }
    match (i + j / m + 1) % n {
        0 => n,
        r => r,
    }
}

/// Reduces a possibly negative index into `[0, nm)`.
pub fn reduce_index(n: u32, m: u32, k: i64) -> u32 {
    k.rem_euclid((n * m) as i64) as u32
}

/// Lowering coefficient of `X` on `V_{i,j}`:
/// `c_k = (k)_ω ω^{-k} (ξ^j ω^{-k+1+i} - 1)`.
pub fn c_coeff(n: u32, m: u32, i: u32, j: u32, k: u32) -> CycScalar {
    let w = omega(n, m);
    let k_ = k as i64;
    let inner = &(&xi_pow(n, m, j as i64) * &omega_pow(n, m, -k_ + 1 + i as i64)) - &CycScalar::one();
    &(&qnum(k, &w) * &omega_pow(n, m, -k_)) * &inner
}

pub(crate) fn check_indices(n: u32, m: u32, i: u32, j: u32) -> Result<()> {
    crate::hopf::check_params(n, m)?;
    if i >= n * m || j >= n * m {
        return Err(Error::Precondition(format!("indices ({i},{j}) must lie in [0, {})", n * m)));
    }
    Ok(())
}

/// The simple module `V_{i,j}` on `v_0, ..., v_{r-1}`, verified against
/// every relation of the double before it is returned.
pub fn build_simple(n: u32, m: u32, i: u32, j: u32) -> Result<DModule> {
    check_indices(n, m, i, j)?;
    let r = r_of(n, m, i, j) as usize;
    let (ii, jj) = (i as i64, j as i64);
    let act_a = diagonal((0..r).map(|k| xi_pow(n, m, ii - k as i64)).collect());
    let act_g = diagonal((0..r).map(|k| xi_pow(n, m, jj - (k as i64) * m as i64)).collect());
    let mut act_x = CycMatrix::zeros(r, r);
    for k in 0..r - 1 {
        act_x[(k + 1, k)] = CycScalar::one();
    }
    act_x[(0, r - 1)] = &act_x[(0, r - 1)] + &(&CycScalar::one() - &xi_pow(n, m, jj * n as i64));
    let mut act_cap = CycMatrix::zeros(r, r);
    for k in 1..r {
        act_cap[(k - 1, k)] = c_coeff(n, m, i, j, k as u32);
    }
    DModule {
        n,
        m,
        act_g,
        act_x,
        act_X: act_cap,
        act_A: act_a,
        label: Some((i, j)),
        basis_names: (0..r).map(|k| format!("v{k}")).collect(),
    }
    .checked()
}

/// All `(nm)^2` simple modules, ordered by `(i, j)`.
pub fn all_simples(n: u32, m: u32) -> Result<Vec<DModule>> {
    use rayon::prelude::*;
    let nm = n * m;
    (0..nm * nm).into_par_iter().map(|t| build_simple(n, m, t / nm, t % nm)).collect()
}
