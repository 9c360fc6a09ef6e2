use std::sync::Arc;

use super::algebra::{FDHopf, MonomialSpec};
use super::elem::{Acc, Elem};
use crate::cyclo::{qfact, root, CycMatrix, CycScalar};
use crate::error::{Error, Result};
use crate::report::Report;

pub fn check_params(n: u32, m: u32) -> Result<()> {
    if n < 2 || m < 1 {
        return Err(Error::InvalidArgument(format!("need n ≥ 2 and m ≥ 1, got n = {n}, m = {m}")));
    }
    if n * m > 512 {
        return Err(Error::InvalidArgument(format!("root order nm = {} is too large", n * m)));
    }
    Ok(())
}

/// `ξ`, the fixed primitive `nm`-th root with `ξ^m = ω`.
pub fn xi(n: u32, m: u32) -> CycScalar {
    root(n * m, 1)
}

/// `ω = ξ^m`, a primitive `n`-th root of unity inside `Q(ξ)`.
pub fn omega(n: u32, m: u32) -> CycScalar {
    root(n * m, m as i64)
}

/// `γ_{n,k} = (1 − ξ^n) / ((k)_ω! (n−k)_ω!)`.
pub fn gamma(n: u32, m: u32, k: u32) -> CycScalar {
    let w = omega(n, m);
    let num = &CycScalar::one() - &root(n * m, n as i64);
    let den = &qfact(k, &w) * &qfact(n - k, &w);
    &num * &den.inv().expect("q-factorials below n are nonzero")
}

/// Pointed algebras `x^j g^i` with `gx = ωxg`; `lifted` selects
/// `x^n = 1 − g^n` (Radford) over `x^n = 0` (generalized Taft).
fn build_pointed(n: u32, m: u32, lifted: bool) -> Result<FDHopf> {
    check_params(n, m)?;
    let nm = n * m;
    let (nu, nmu) = (n as usize, nm as usize);
    let idx = |j: usize, i: usize| j * nmu + i % nmu;
    let labels: Vec<Vec<u32>> = (0..nu).flat_map(|j| (0..nm).map(move |i| vec![j as u32, i])).collect();
    let words: Vec<Vec<usize>> = labels
        .iter()
        .map(|l| std::iter::repeat(1).take(l[0] as usize).chain(std::iter::repeat(0).take(l[1] as usize)).collect())
        .collect();
    let w = omega(n, m);
    let powers: Vec<CycScalar> = (0..n).map(|k| w.pow(k as i64).unwrap()).collect();
    let mul = move |a: usize, b: usize| -> Elem {
        let (j1, i1) = (a / nmu, a % nmu);
        let (j2, i2) = (b / nmu, b % nmu);
        // g^i x^j = ω^{ij} x^j g^i
        let c = powers[(i1 * j2) % nu].clone();
        let (s, t) = (j1 + j2, i1 + i2);
        if s < nu {
            Elem::term(idx(s, t), c)
        } else if lifted {
            // x^n = 1 − g^n is central
            let mut acc = Acc::new();
            acc.add(idx(s - nu, t), c.clone());
            acc.add(idx(s - nu, t + nu), -&c);
            acc.finish()
        } else {
            Elem::zero()
        }
    };
    let (g, x, one) = (idx(0, 1), idx(1, 0), idx(0, 0));
    let d = nu * nmu;
    let mut dx = Acc::new();
    dx.add(x * d + one, CycScalar::one());
    dx.add(g * d + x, CycScalar::one());
    let (name, tag) = if lifted { ("R", "Radford") } else { ("T", "generalized Taft") };
    let alg = MonomialSpec {
        name: format!("{name}_{{{n},{m}}} ({tag})"),
        order: nm,
        letters: vec!["x".into(), "g".into()],
        labels,
        gens: vec![("g".into(), g), ("x".into(), x)],
        words,
        mul: &mul,
        gen_comult: vec![Elem::basis(g * d + g), dx.finish()],
        gen_counit: vec![CycScalar::one(), CycScalar::zero()],
    }
    .build()?;
    Ok(alg)
}

/// The Radford algebra `R_{n,m}` on the basis `x^j g^i`, index `j·nm + i`.
pub fn build_radford(n: u32, m: u32) -> Result<FDHopf> {
    build_pointed(n, m, true)
}

/// The generalized Taft algebra `T_{n,m}`, same basis as `R_{n,m}`.
pub fn build_taft_gen(n: u32, m: u32) -> Result<FDHopf> {
    build_pointed(n, m, false)
}

/// The group algebra `kC_N` on the basis `g^i`.
pub fn build_group_algebra(order: u32) -> Result<FDHopf> {
    if order == 0 || order > 512 {
        return Err(Error::InvalidArgument(format!("group order {order} out of range")));
    }
    let nu = order as usize;
    let labels: Vec<Vec<u32>> = (0..order).map(|i| vec![i]).collect();
    let words: Vec<Vec<usize>> = (0..nu).map(|i| vec![0; i]).collect();
    let mul = move |a: usize, b: usize| Elem::basis((a + b) % nu);
    let g = 1 % nu;
    MonomialSpec {
        name: format!("kC_{order}"),
        order,
        letters: vec!["g".into()],
        labels,
        gens: vec![("g".into(), g)],
        words,
        mul: &mul,
        gen_comult: vec![Elem::basis(g * nu + g)],
        gen_counit: vec![CycScalar::one()],
    }
    .build()
}

/// The dual Radford algebra `H_{n,m}` on the basis `X^a A^b`, index
/// `a·nm + b`, with `U = A^m`.
pub fn build_dual_radford(n: u32, m: u32) -> Result<FDHopf> {
    check_params(n, m)?;
    let nm = n * m;
    let (nu, nmu, mu) = (n as usize, nm as usize, m as usize);
    let idx = |a: usize, b: usize| a * nmu + b % nmu;
    let labels: Vec<Vec<u32>> = (0..nu).flat_map(|a| (0..nm).map(move |b| vec![a as u32, b])).collect();
    let words: Vec<Vec<usize>> = labels
        .iter()
        .map(|l| std::iter::repeat(1).take(l[0] as usize).chain(std::iter::repeat(0).take(l[1] as usize)).collect())
        .collect();
    let powers: Vec<CycScalar> = (0..nm).map(|k| root(nm, k as i64)).collect();
    let mul = move |p: usize, q: usize| -> Elem {
        let (a1, b1) = (p / nmu, p % nmu);
        let (a2, b2) = (q / nmu, q % nmu);
        // A^b X^a = ξ^{ab} X^a A^b
        if a1 + a2 >= nu {
            Elem::zero()
        } else {
            Elem::term(idx(a1 + a2, b1 + b2), powers[(b1 * a2) % nmu].clone())
        }
    };
    let (a, x, u, one) = (idx(0, 1), idx(1, 0), idx(0, mu), idx(0, 0));
    let d = nu * nmu;
    let mut dx = Acc::new();
    dx.add(x * d + one, CycScalar::one());
    dx.add(u * d + x, CycScalar::one());
    let mut da = Acc::new();
    da.add(a * d + a, CycScalar::one());
    for k in 1..nu {
        // X^{n-k} U^k A ⊗ X^k A
        let left = idx(nu - k, mu * k + 1);
        let right = idx(k, 1);
        da.add(left * d + right, gamma(n, m, k as u32));
    }
    MonomialSpec {
        name: format!("H_{{{n},{m}}} (dual Radford)"),
        order: nm,
        letters: vec!["X".into(), "A".into()],
        labels,
        gens: vec![("A".into(), a), ("X".into(), x), ("U".into(), u)],
        words,
        mul: &mul,
        gen_comult: vec![da.finish(), dx.finish(), Elem::basis(u * d + u)],
        gen_counit: vec![CycScalar::one(), CycScalar::zero(), CycScalar::one()],
    }
    .build()
}

/// The evaluation pairing `⟨X^a A^b, x^c g^d⟩ = δ_{ac} ξ^{bd} (a)_ω!`.
#[derive(Clone)]
pub struct HopfPairing {
    pub h: Arc<FDHopf>,
    pub r: Arc<FDHopf>,
    /// Rows indexed by the `H` basis, columns by the `R` basis.
    pub values: CycMatrix,
}

pub fn pairing(n: u32, m: u32) -> Result<HopfPairing> {
    let h = Arc::new(build_dual_radford(n, m)?);
    let r = Arc::new(build_radford(n, m)?);
    Ok(pairing_with(h, r))
}

pub fn pairing_with(h: Arc<FDHopf>, r: Arc<FDHopf>) -> HopfPairing {
    let nm = h.order;
    let n = (h.dim() as u32) / nm;
    let w = root(nm, (nm / n) as i64);
    let facts: Vec<CycScalar> = (0..n).map(|a| qfact(a, &w)).collect();
    let values = CycMatrix::from_fn(h.dim(), r.dim(), |p, q| {
        let (a, b) = (h.labels[p][0], h.labels[p][1]);
        let (c, d) = (r.labels[q][0], r.labels[q][1]);
        if a != c {
            CycScalar::zero()
        } else {
            &root(nm, (b * d) as i64) * &facts[a as usize]
        }
    });
    HopfPairing { h, r, values }
}

impl HopfPairing {
    pub fn pair(&self, f: &Elem, a: &Elem) -> CycScalar {
        let mut acc = CycScalar::zero();
        for (p, x) in f.iter() {
            for (q, y) in a.iter() {
                let v = &self.values[(*p, *q)];
                if !v.is_zero() {
                    acc = &acc + &(&(x * y) * v);
                }
            }
        }
        acc
    }

    /// Pairing of tensors `f ⊗ f'` with `a ⊗ a'`, factor by factor.
    fn pair2(&self, f: &Elem, a: &Elem) -> CycScalar {
        let (dh, dr) = (self.h.dim(), self.r.dim());
        let mut acc = CycScalar::zero();
        for (s, x) in f.iter() {
            for (t, y) in a.iter() {
                let v = &self.values[(s / dh, t / dr)];
                let w = &self.values[(s % dh, t % dr)];
                if !v.is_zero() && !w.is_zero() {
                    acc = &acc + &(&(x * y) * &(v * w));
                }
            }
        }
        acc
    }

    /// Exact checks of the Hopf pairing identities and nondegeneracy.
    pub fn verify(&self) -> Report {
        let (h, r) = (&self.h, &self.r);
        let (dh, dr) = (h.dim(), r.dim());
        let mut rep = Report::new("Hopf pairing");
        rep.push("nondegenerate", self.values.rank() == dh && dh == dr);
        let e = Elem::basis;
        let mut prod_h = true;
        for f in 0..dh {
            for g in 0..dh {
                let fg = h.mul_basis(f, g);
                let fg_tensor = Elem::basis(f * dh + g);
                for a in 0..dr {
                    if self.pair(&fg, &e(a)) != self.pair2(&fg_tensor, r.comul_basis(a)) {
                        prod_h = false;
                    }
                }
            }
        }
        rep.push("⟨fg, a⟩ = ⟨f, a₁⟩⟨g, a₂⟩", prod_h);
        let mut prod_r = true;
        for a in 0..dr {
            for b in 0..dr {
                let ab = r.mul_basis(a, b);
                let ab_tensor = Elem::basis(a * dr + b);
                for f in 0..dh {
                    if self.pair(&e(f), &ab) != self.pair2(h.comul_basis(f), &ab_tensor) {
                        prod_r = false;
                    }
                }
            }
        }
        rep.push("⟨f, ab⟩ = ⟨f₁, a⟩⟨f₂, b⟩", prod_r);
        let units = (0..dr).all(|a| self.pair(&h.one(), &e(a)) == *r.counit_basis(a))
            && (0..dh).all(|f| self.pair(&e(f), &r.one()) == *h.counit_basis(f));
        rep.push("units pair with counits", units);
        let antipodes = (0..dh).all(|f| {
            (0..dr).all(|a| self.pair(h.antipode_basis(f), &e(a)) == self.pair(&e(f), r.antipode_basis(a)))
        });
        rep.push("⟨S f, a⟩ = ⟨f, S a⟩", antipodes);
        rep
    }

    /// `f ⇀ a = ⟨f, S(a₁)a₃⟩ a₂` in `R`.
    pub fn left_harpoon(&self, f: &Elem, a: &Elem) -> Elem {
        let r = &self.r;
        let d = r.dim();
        let mut acc = Acc::new();
        for (t, c) in r.comul2(a).iter() {
            let (p, q, s) = (t / (d * d), (t / d) % d, t % d);
            let w = r.mul(r.antipode_basis(p), &Elem::basis(s));
            let v = self.pair(f, &w);
            acc.add(q, c * &v);
        }
        acc.finish()
    }

    /// `f ↼ a = ⟨S(f₁)f₃, a⟩ f₂` in `H`.
    pub fn right_harpoon(&self, f: &Elem, a: &Elem) -> Elem {
        let h = &self.h;
        let d = h.dim();
        let mut acc = Acc::new();
        for (t, c) in h.comul2(f).iter() {
            let (p, q, s) = (t / (d * d), (t / d) % d, t % d);
            let w = h.mul(h.antipode_basis(p), &Elem::basis(s));
            let v = self.pair(&w, a);
            acc.add(q, c * &v);
        }
        acc.finish()
    }
}
