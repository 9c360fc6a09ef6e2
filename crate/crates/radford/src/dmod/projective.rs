use super::module::{omega_pow, xi_pow, DModule};
use super::simple::{c_coeff, check_indices, r_of, reduce_index};
use crate::cyclo::{qfact, CycMatrix, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{double_relations, omega};

/// Positions of the four chains inside the `2n`-dimensional basis
/// `u¹_0..u¹_{n-r-1}, v¹_0..v¹_{r-1}, u²_0..u²_{n-r-1}, v²_0..v²_{r-1}`.
struct Layout {
    n: usize,
    r: usize,
}

impl Layout {
    fn u1(&self, k: usize) -> usize {
        k
    }
    fn v1(&self, l: usize) -> usize {
        self.n - self.r + l
    }
    fn u2(&self, k: usize) -> usize {
        self.n + k
    }
    fn v2(&self, l: usize) -> usize {
        2 * self.n - self.r + l
    }
}

/// The module with the given extension parameter `alpha`.
fn assemble(n: u32, m: u32, i: u32, j: u32, alpha: &CycScalar) -> DModule {
    let r = r_of(n, m, i, j) as usize;
    let lay = Layout { n: n as usize, r };
    let d = 2 * n as usize;
    let s = n as usize - r;
    let (ii, jj, rr) = (i as i64, j as i64, r as i64);
    // the u-chains carry V_{n+i-r, j-mr}; their X-coefficients are its c_k
    let iu = reduce_index(n, m, n as i64 + ii - rr);
    let ju = reduce_index(n, m, jj - m as i64 * rr);

    let mut g = CycMatrix::zeros(d, d);
    let mut a = CycMatrix::zeros(d, d);
    let mut x = CycMatrix::zeros(d, d);
    let mut cap = CycMatrix::zeros(d, d);
    let xi_j = xi_pow(n, m, jj);
    for k in 0..s {
        let kk = k as i64;
        for u in [lay.u1(k), lay.u2(k)] {
            g[(u, u)] = &xi_j * &omega_pow(n, m, -rr - kk);
        }
        a[(lay.u1(k), lay.u1(k))] = xi_pow(n, m, n as i64 + ii - rr - kk);
        let e = xi_pow(n, m, ii - rr - kk);
        a[(lay.u2(k), lay.u2(k))] = e.clone();
        a[(lay.u1(k), lay.u2(k))] = e;
        if k + 1 < s {
            x[(lay.u1(k + 1), lay.u1(k))] = CycScalar::one();
            x[(lay.u2(k + 1), lay.u2(k))] = CycScalar::one();
        }
        if k >= 1 {
            let c = c_coeff(n, m, iu, ju, k as u32);
            cap[(lay.u1(k - 1), lay.u1(k))] = c.clone();
            cap[(lay.u2(k - 1), lay.u2(k))] = c;
        }
    }
    x[(lay.v1(0), lay.u1(s - 1))] = CycScalar::one();
    for l in 0..r {
        let ll = l as i64;
        for v in [lay.v1(l), lay.v2(l)] {
            g[(v, v)] = &xi_j * &omega_pow(n, m, -ll);
            a[(v, v)] = xi_pow(n, m, ii - ll);
        }
        if l + 1 < r {
            x[(lay.v1(l + 1), lay.v1(l))] = CycScalar::one();
            x[(lay.v2(l + 1), lay.v2(l))] = CycScalar::one();
        }
        if l >= 1 {
            let c = c_coeff(n, m, i, j, l as u32);
            cap[(lay.v1(l - 1), lay.v1(l))] = c.clone();
            cap[(lay.v2(l - 1), lay.v2(l))] = c;
            cap[(lay.v1(l - 1), lay.v2(l))] = alpha * &omega_pow(n, m, -ll);
        }
    }
    x[(lay.u2(0), lay.v2(r - 1))] = CycScalar::one();
    cap[(lay.v1(r - 1), lay.u2(0))] = alpha * &omega_pow(n, m, -rr);
    cap[(lay.u1(s - 1), lay.v2(0))] = alpha.clone();

    let mut names = Vec::with_capacity(d);
    for t in 1..=2 {
        names.extend((0..s).map(|k| format!("u{t}_{k}")));
        names.extend((0..r).map(|l| format!("v{t}_{l}")));
    }
    DModule { n, m, act_g: g, act_x: x, act_X: cap, act_A: a, label: Some((i, j)), basis_names: names }
}

/// The extension parameter: every relation residual is affine in `α`
/// (the `α`-part of `X` maps the second layer to the first and squares to
/// zero), so `α` is read off from residuals at `α = 0` and `α = 1`.
pub fn solve_alpha(n: u32, m: u32, i: u32, j: u32) -> Result<CycScalar> {
    let m0 = assemble(n, m, i, j, &CycScalar::zero());
    let m1 = assemble(n, m, i, j, &CycScalar::one());
    let mut alpha: Option<CycScalar> = None;
    for rel in double_relations(n, m) {
        let r0 = rel.evaluate(&m0);
        let r1 = rel.evaluate(&m1);
        let slope = r1.sub(&r0);
        for row in 0..r0.rows() {
            for col in 0..r0.cols() {
                let (c0, c1) = (&r0[(row, col)], &slope[(row, col)]);
                if c1.is_zero() {
                    if !c0.is_zero() {
                        return Err(Error::Verification(format!("relation {} fails for every α", rel.name)));
                    }
                    continue;
                }
                let a = -&(c0 * &c1.inv()?);
                match &alpha {
                    None => alpha = Some(a),
                    Some(prev) if *prev != a => {
                        return Err(Error::Verification(format!("relation {} forces a different α", rel.name)))
                    }
                    _ => {}
                }
            }
        }
    }
    alpha.ok_or_else(|| Error::Verification("no relation constrains α".into()))
}

/// `α` from the closed form `α (ω^{-r} - 1) (1-ξ^n)/(n-1)!_ω · Π c_a · Π c'_b = 1`,
/// reading both products over the nonzero coefficients only
/// (`a = 1..r-1` on the `v`-chain, `b = 1..n-r-1` on the `u`-chain).
pub fn alpha_closed_form(n: u32, m: u32, i: u32, j: u32) -> Result<CycScalar> {
    let r = r_of(n, m, i, j);
    let w = omega(n, m);
    let iu = reduce_index(n, m, (n + i) as i64 - r as i64);
    let ju = reduce_index(n, m, j as i64 - (m * r) as i64);
    let mut p = &(&omega_pow(n, m, -(r as i64)) - &CycScalar::one())
        * &(&(&CycScalar::one() - &xi_pow(n, m, n as i64)) * &qfact(n - 1, &w).inv()?);
    for a in 1..r {
        p = &p * &c_coeff(n, m, i, j, a);
    }
    for b in 1..n - r {
        p = &p * &c_coeff(n, m, iu, ju, b);
    }
    p.inv()
}

/// The projective cover `M_{i,j}` of a simple module of dimension `r < n`.
pub fn build_projective(n: u32, m: u32, i: u32, j: u32) -> Result<DModule> {
    check_indices(n, m, i, j)?;
    let r = r_of(n, m, i, j);
    if j % m != 0 || r == n {
        return Err(Error::Precondition(format!(
            "V_{{{i},{j}}} has dimension n = {n}; it is its own projective cover"
        )));
    }
    let alpha = solve_alpha(n, m, i, j)?;
    if alpha.is_zero() {
        return Err(Error::Verification("extension parameter vanishes".into()));
    }
    let mut module = assemble(n, m, i, j, &alpha).checked()?;
    module.label = Some((i, j));
    Ok(module)
}

/// Dimension of the projective cover of `V_{i,j}`.
pub fn projective_dim(n: u32, m: u32, i: u32, j: u32) -> u32 {
    if r_of(n, m, i, j) == n {
        n
    } else {
        2 * n
    }
}
