use rayon::prelude::*;
use std::sync::Arc;

use super::yd::{CoTerm, YDModule};
use crate::cyclo::{qbinom, qfact, root, CycMatrix, CycScalar};
use crate::dmod::{build_simple, r_of, reduce_index, DModule};
use crate::error::{Error, Result};
use crate::hopf::{build_taft_gen, omega, pairing, Elem, FDHopf, HopfPairing};

/// The three hosts of the transport chain with the pairing `H × R → k`
/// and the dual basis of `R` against the basis of `H`.
#[derive(Clone)]
pub struct Hosts {
    pub n: u32,
    pub m: u32,
    pub h: Arc<FDHopf>,
    pub r: Arc<FDHopf>,
    pub t: Arc<FDHopf>,
    pub pairing: HopfPairing,
    /// `dual[b] ∈ R` with `⟨e_c, dual[b]⟩ = δ_{bc}`.
    pub dual: Vec<Elem>,
}

impl Hosts {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        let p = pairing(n, m)?;
        let inv = p.values.inverse()?;
        let dual = (0..p.h.dim()).map(|b| Elem::from_dense(&inv.col(b))).collect();
        Ok(Hosts { n, m, h: p.h.clone(), r: p.r.clone(), t: Arc::new(build_taft_gen(n, m)?), pairing: p, dual })
    }

    pub fn nm(&self) -> u32 {
        self.n * self.m
    }

    /// `u_{a,b} = x^a/(nm (a)_ω!) Σ_d ξ^{-bd} g^d`.
    pub fn dual_closed_form(&self, a: u32, b: u32) -> Elem {
        let (n, m, nm) = (self.n, self.m, self.nm());
        let scale = &CycScalar::from_ratio(1, nm as i64).unwrap() * &qfact(a, &omega(n, m)).inv().unwrap();
        Elem(
            (0..nm)
                .map(|d| ((a * nm + d) as usize, &scale * &root(nm, -((b * d) as i64))))
                .collect(),
        )
    }

    /// `ε⊗ε + sign·η` with `η(x^a g^r, x^b g^s) = ω^{br}` when `a + b = n`.
    pub fn cocycle(&self, sign: i64, p: usize, q: usize) -> CycScalar {
        let (la, lb) = (&self.r.labels[p], &self.r.labels[q]);
        let mut v = if la[0] == 0 && lb[0] == 0 { CycScalar::one() } else { CycScalar::zero() };
        if la[0] + lb[0] == self.n {
            let eta = root(self.nm(), (self.m * lb[0] * la[1]) as i64);
            v = if sign >= 0 { &v + &eta } else { &v - &eta };
        }
        v
    }
}

fn monomial(nm: u32, a: u32, e: i64) -> usize {
    (a * nm) as usize + e.rem_euclid(nm as i64) as usize
}

fn xi_pow(nm: u32, k: i64) -> CycScalar {
    root(nm, k)
}

/// `F₁` by the defining formulas: same `H`-action, coaction
/// `ρ(v) = Σ_b e_b ⊗ u_b·v` over dual bases, where `R` acts through `D`.
pub fn f1(hosts: &Hosts, v: &DModule) -> Result<YDModule> {
    let (h, r) = (&hosts.h, &hosts.r);
    let actions = h
        .gens
        .iter()
        .map(|(name, _)| match name.as_str() {
            "A" => Ok(v.act_A.clone()),
            "X" => Ok(v.act_X.clone()),
            "U" => Ok(v.act_U()),
            other => Err(Error::InvalidArgument(format!("unexpected generator {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    // x^a g^d ⋈ 1 = g^d x^a inside D
    let r_rep: Vec<CycMatrix> =
        r.labels.iter().map(|l| v.act_g.pow(l[1]).mul(&v.act_x.pow(l[0]))).collect();
    let d = v.dim();
    let coaction: Vec<Vec<CoTerm>> = (0..d)
        .map(|s| {
            let mut terms = Vec::new();
            for (b, u) in hosts.dual.iter().enumerate() {
                let mut image = vec![CycScalar::zero(); d];
                for (q, c) in u.iter() {
                    for (t, y) in r_rep[*q].col(s).iter().enumerate() {
                        if !y.is_zero() {
                            image[t] = &image[t] + &(c * y);
                        }
                    }
                }
                terms.extend(image.into_iter().enumerate().map(|(t, c)| (b, c, t)));
            }
            terms
        })
        .collect();
    let mut y = YDModule::new(h.clone(), actions, coaction)?;
    y.basis_names = v.basis_names.clone();
    Ok(y)
}

/// `F₁(V_{i,j})` from the closed coaction
/// `ρ(v_ℓ) = Σ_k c_k X^k A^j U^{-(k+ℓ)} ⊗ v_{k+ℓ mod r}`.
pub fn f1_closed(hosts: &Hosts, i: u32, j: u32) -> Result<YDModule> {
    let v = build_simple(hosts.n, hosts.m, i, j)?;
    let (n, m, nm) = (hosts.n, hosts.m, hosts.nm());
    let r = v.dim();
    let w = omega(n, m);
    let wrap = &CycScalar::one() - &xi_pow(nm, (j * n) as i64);
    let coaction = (0..r)
        .map(|l| {
            (0..r)
                .map(|k| {
                    let fk = qfact(k as u32, &w).inv().unwrap();
                    let c = if k + l < r { fk } else { &wrap * &fk };
                    let mono = monomial(nm, k as u32, j as i64 - (m as i64) * (k + l) as i64);
                    (mono, c, (k + l) % r)
                })
                .collect()
        })
        .collect();
    let actions = hosts
        .h
        .gens
        .iter()
        .map(|(name, _)| match name.as_str() {
            "A" => v.act_A.clone(),
            "X" => v.act_X.clone(),
            _ => v.act_U(),
        })
        .collect();
    YDModule::new(hosts.h.clone(), actions, coaction)
}

/// `F₂` by the dual-YD formulas: `f·v = f(S(v₍₋₁₎)) v₍₀₎` and
/// `λ(v) = Σ_b S⁻¹(u_b) ⊗ e_b·v`.
pub fn f2(hosts: &Hosts, y: &YDModule) -> Result<YDModule> {
    let (h, r) = (&hosts.h, &hosts.r);
    if !Arc::ptr_eq(&y.host, h) && y.host.labels != h.labels {
        return Err(Error::Precondition("F₂ needs a YD module over H".into()));
    }
    let d = y.dim();
    let actions: Vec<CycMatrix> = r
        .gens
        .iter()
        .map(|(_, f)| {
            let mut a = CycMatrix::zeros(d, d);
            for s in 0..d {
                for (b, e, t) in &y.coaction[s] {
                    let c = hosts.pairing.pair(h.antipode_basis(*b), f);
                    if !c.is_zero() {
                        a[(*t, s)] = &a[(*t, s)] + &(e * &c);
                    }
                }
            }
            a
        })
        .collect();
    let s_inv = r.antipode_inverse()?;
    let rho = y.basis_action();
    let coaction: Vec<Vec<CoTerm>> = (0..d)
        .map(|s| {
            let mut terms = Vec::new();
            for (b, u) in hosts.dual.iter().enumerate() {
                let mut su = crate::hopf::Acc::new();
                for (q, c) in u.iter() {
                    su.add_elem(&s_inv[*q], c);
                }
                let su = su.finish();
                for (t, z) in rho[b].col(s).iter().enumerate() {
                    if z.is_zero() {
                        continue;
                    }
                    for (k, c) in su.iter() {
                        terms.push((*k, c * z, t));
                    }
                }
            }
            terms
        })
        .collect();
    let mut out = YDModule::new(r.clone(), actions, coaction)?;
    out.basis_names = y.basis_names.clone();
    Ok(out)
}

/// `β_{k,ℓ} = binom(ℓ,k)_ω Π_{s=ℓ-k}^{ℓ-1} (ω^a − ξ^{-b} ω^{-s})`, the
/// coaction coefficient on the `(a,b)` side (`a = -i`, `b = -j` for `V_{i,j}`).
pub fn beta(n: u32, m: u32, a: i64, b: i64, k: u32, l: u32) -> CycScalar {
    let nm = n * m;
    let w = omega(n, m);
    let mut c = qbinom(l, k, &w).expect("k ≤ ℓ");
    for s in (l - k)..l {
        let f = &root(nm, m as i64 * a) - &(&xi_pow(nm, -b) * &root(nm, -(m as i64) * s as i64));
        c = &c * &f;
    }
    c
}

/// The shared shape of `F₂(F₁ V_{i,j})` and the twisted module: `g` and
/// the `x`-chain, with `wrap` the coefficient of `x·v_{r-1}` on `v_0`.
fn pointed_closed(hosts: &Hosts, host: Arc<FDHopf>, a: i64, b: i64, r: usize, wrap: CycScalar) -> Result<YDModule> {
    let (n, m, nm) = (hosts.n, hosts.m, hosts.nm());
    let mut g = CycMatrix::zeros(r, r);
    let mut x = CycMatrix::zeros(r, r);
    for k in 0..r {
        let gk = &xi_pow(nm, b) * &root(nm, (m as usize * k) as i64);
        g[(k, k)] = gk.clone();
        if k + 1 < r {
            x[(k + 1, k)] = -&gk;
        }
    }
    if !wrap.is_zero() {
        x[(0, r - 1)] = wrap;
    }
    let coaction = (0..r)
        .map(|l| {
            (0..=l)
                .map(|k| (monomial(nm, k as u32, a + (l - k) as i64), beta(n, m, a, b, k as u32, l as u32), l - k))
                .collect()
        })
        .collect();
    let actions = host
        .gens
        .iter()
        .map(|(name, _)| if name == "g" { g.clone() } else { x.clone() })
        .collect();
    YDModule::new(host, actions, coaction)
}

/// `F₂(F₁ V_{i,j})` from the closed formulas over `R`.
pub fn f2_closed(hosts: &Hosts, i: u32, j: u32) -> Result<YDModule> {
    let (n, m, nm) = (hosts.n, hosts.m, hosts.nm());
    let r = r_of(n, m, i, j) as usize;
    // x·v_{r-1} = -ξ^{-j} ω^{r-1} (1 - ξ^{jn}) v_0; nonzero only when r = n
    let wrap = -&(&(&xi_pow(nm, -(j as i64)) * &root(nm, (m as usize * (r - 1)) as i64))
        * &(&CycScalar::one() - &xi_pow(nm, (j * n) as i64)));
    pointed_closed(hosts, hosts.r.clone(), -(i as i64), -(j as i64), r, wrap)
}

/// `F(V_{i,j}) = F₃F₂F₁(V_{i,j})` from the closed formulas over `T`.
pub fn f3_closed(hosts: &Hosts, i: u32, j: u32) -> Result<YDModule> {
    let r = r_of(hosts.n, hosts.m, i, j) as usize;
    pointed_closed(hosts, hosts.t.clone(), -(i as i64), -(j as i64), r, CycScalar::zero())
}

/// Re-twists the action of a YD module over `R` or `T` by the cocycle
/// `τ = ε⊗ε + sign·η`:
/// `h ⇀ v = τ(h₁, v₍₋₁₎) (h₂·v₍₀₎)₍₀₎ τ⁻¹((h₂·v₍₀₎)₍₋₁₎, h₃)`.
/// The coalgebra and the coaction are unchanged; the result lives over
/// `target`, which must share the coalgebra of the source host.
pub fn twist(hosts: &Hosts, y: &YDModule, target: Arc<FDHopf>, sign: i64) -> Result<YDModule> {
    let src = &y.host;
    if src.labels != hosts.r.labels || target.labels != hosts.r.labels {
        return Err(Error::Precondition("twisting needs hosts on the pointed basis".into()));
    }
    let hd = src.dim();
    let d = y.dim();
    let rho = y.basis_action();
    let tau = |p: usize, q: usize| hosts.cocycle(sign, p, q);
    let tau_inv = |p: usize, q: usize| hosts.cocycle(-sign, p, q);
    let actions: Vec<CycMatrix> = target
        .gens
        .par_iter()
        .map(|(_, h)| {
            let h3 = src.comul2(h);
            let mut a = CycMatrix::zeros(d, d);
            for s in 0..d {
                for (pqr, c) in h3.iter() {
                    let (p, q, r) = (pqr / (hd * hd), (pqr / hd) % hd, pqr % hd);
                    for (b, e, t) in &y.coaction[s] {
                        let left = tau(p, *b);
                        if left.is_zero() {
                            continue;
                        }
                        let coef = &(c * e) * &left;
                        let w = rho[q].col(*t);
                        for (b2, e2, t2) in y.coact_vec(&w).iter().map(|(k, z)| (k / d, z, k % d)) {
                            let right = tau_inv(b2, r);
                            if !right.is_zero() {
                                a[(t2, s)] = &a[(t2, s)] + &(&coef * &(e2 * &right));
                            }
                        }
                    }
                }
            }
            a
        })
        .collect();
    let mut out = YDModule::new(target, actions, y.coaction.clone())?;
    out.basis_names = y.basis_names.clone();
    Ok(out)
}

/// `F₃`: the twist from `R` to `T`.
pub fn f3(hosts: &Hosts, y: &YDModule) -> Result<YDModule> {
    twist(hosts, y, hosts.t.clone(), F3_SIGN)
}

/// Sign of `η` in the cocycle used by [`f3`]: `σ⁻¹ = ε⊗ε − η`.
pub const F3_SIGN: i64 = -1;

/// The full chain on `V_{i,j}` through the defining formulas, every
/// intermediate module verified.
pub fn transport(hosts: &Hosts, i: u32, j: u32) -> Result<YDModule> {
    let v = build_simple(hosts.n, hosts.m, i, j)?;
    let y1 = f1(hosts, &v)?.checked()?;
    let y2 = f2(hosts, &y1)?.checked()?;
    f3(hosts, &y2)?.checked()
}

/// Every `F(V_{i,j})`, ordered by `(i, j)`.
pub fn transport_all(hosts: &Hosts) -> Result<Vec<((u32, u32), YDModule)>> {
    let nm = hosts.nm();
    (0..nm * nm)
        .into_par_iter()
        .map(|t| {
            let (i, j) = (t / nm, t % nm);
            Ok(((i, j), transport(hosts, i, j)?))
        })
        .collect()
}

pub(crate) fn reduce(hosts: &Hosts, k: i64) -> u32 {
    reduce_index(hosts.n, hosts.m, k)
}
