use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::braided::BraidedSpace;
use crate::cyclo::{CycMatrix, CycScalar};
use crate::error::{Error, Result};
use crate::hopf::{Acc, Elem, FDHopf};
use crate::report::Report;

/// One term `c · e_b ⊗ v_t` of a coaction.
pub type CoTerm = (usize, CycScalar, usize);

/// A left Yetter-Drinfeld module over `host`: one action matrix per host
/// generator (same order as `host.gens`) and a sparse coaction.
#[derive(Clone)]
pub struct YDModule {
    pub host: Arc<FDHopf>,
    pub actions: Vec<CycMatrix>,
    /// `coaction[t]` lists the terms of `ρ(v_t) ∈ host ⊗ V`.
    pub coaction: Vec<Vec<CoTerm>>,
    pub basis_names: Vec<String>,
}

impl YDModule {
    pub fn new(host: Arc<FDHopf>, actions: Vec<CycMatrix>, coaction: Vec<Vec<CoTerm>>) -> Result<Self> {
        let d = coaction.len();
        if actions.len() != host.gens.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for {} generators",
                actions.len(),
                host.gens.len()
            )));
        }
        if actions.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::ShapeMismatch(format!("action matrices must be {d}×{d}")));
        }
        let coaction = coaction.into_iter().map(normalize).collect();
        Ok(YDModule { host, actions, coaction, basis_names: (0..d).map(|k| format!("v{k}")).collect() })
    }

    pub fn dim(&self) -> usize {
        self.coaction.len()
    }

    /// Action matrix of the named generator.
    pub fn action(&self, name: &str) -> Option<&CycMatrix> {
        self.host.gen_index(name).map(|g| &self.actions[g])
    }

    /// The action of every host basis element, along the basis words.
    pub fn basis_action(&self) -> Vec<CycMatrix> {
        let d = self.dim();
        self.host
            .words
            .par_iter()
            .map(|w| w.iter().fold(CycMatrix::identity(d), |acc, &g| acc.mul(&self.actions[g])))
            .collect()
    }

    /// `ρ(v)` for an arbitrary vector, indexed `b * dim + t`.
    pub fn coact_vec(&self, v: &[CycScalar]) -> Elem {
        let d = self.dim();
        let mut acc = Acc::new();
        for (s, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, c, t) in &self.coaction[s] {
                acc.add(b * d + t, x * c);
            }
        }
        acc.finish()
    }

    /// Module, comodule and Yetter-Drinfeld axioms, all exact.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new(format!("YD module of dim {} over {}", self.dim(), self.host.name));
        let host = &self.host;
        let hd = host.dim();
        let d = self.dim();
        let rho = self.basis_action();

        // module: ρ(e_a e_b) = ρ(e_a)ρ(e_b) on every basis pair
        let bad = (0..hd * hd).into_par_iter().find_any(|&t| {
            let (a, b) = (t / hd, t % hd);
            let mut lhs = CycMatrix::zeros(d, d);
            for (k, c) in host.mul_basis(a, b).iter() {
                lhs = lhs.add(&rho[*k].scale(c));
            }
            lhs != rho[a].mul(&rho[b])
        });
        rep.push_detail(
            "module: action is multiplicative on all basis pairs",
            bad.is_none(),
            bad.map(|t| format!("fails at ({}, {})", host.label(t / hd), host.label(t % hd))).unwrap_or_default(),
        );
        rep.push("module: unit acts as identity", rho[host.unit].is_identity());

        // comodule
        let coassoc = (0..d).into_par_iter().all(|s| {
            let mut lhs = Acc::new();
            let mut rhs = Acc::new();
            for (b, c, t) in &self.coaction[s] {
                for (pq, x) in host.comul_basis(*b).iter() {
                    lhs.add(pq * d + t, c * x);
                }
                for (b2, c2, t2) in &self.coaction[*t] {
                    rhs.add((b * hd + b2) * d + t2, c * c2);
                }
            }
            lhs.finish() == rhs.finish()
        });
        rep.push("comodule: (Δ⊗id)ρ = (id⊗ρ)ρ", coassoc);
        let counit = (0..d).all(|s| {
            let mut acc = Acc::new();
            for (b, c, t) in &self.coaction[s] {
                acc.add(*t, c * host.counit_basis(*b));
            }
            acc.finish() == Elem::basis(s)
        });
        rep.push("comodule: (ε⊗id)ρ = id", counit);

        // λ(h·v) = h₁ v₍₋₁₎ S(h₃) ⊗ h₂·v₍₀₎ on generators
        for (gi, (name, h)) in host.gens.iter().enumerate() {
            let h3 = host.comul2(h);
            let ok = (0..d).into_par_iter().all(|s| {
                let lhs = self.coact_vec(&self.actions[gi].col(s));
                let mut rhs = Acc::new();
                for (pqr, c) in h3.iter() {
                    let (p, q, r) = (pqr / (hd * hd), (pqr / hd) % hd, pqr % hd);
                    let sr = host.antipode_basis(r);
                    for (b, e, t) in &self.coaction[s] {
                        let left = host.mul(&host.mul(&Elem::basis(p), &Elem::basis(*b)), sr);
                        let image = rho[q].col(*t);
                        let ce = c * e;
                        for (k, y) in left.iter() {
                            let cey = &ce * y;
                            for (u, z) in image.iter().enumerate() {
                                if !z.is_zero() {
                                    rhs.add(k * d + u, &cey * z);
                                }
                            }
                        }
                    }
                }
                lhs == rhs.finish()
            });
            rep.push(format!("YD compatibility for {name}"), ok);
        }
        rep
    }

    /// Fails with the first broken axiom named.
    pub fn checked(self) -> Result<Self> {
        let rep = self.verify();
        match rep.failures().first() {
            None => Ok(self),
            Some(c) => Err(Error::Verification(format!("{}: {}", rep.title, c.name))),
        }
    }

    /// The braiding `c(v_s ⊗ v_t) = v_s₍₋₁₎·v_t ⊗ v_s₍₀₎`, unchecked.
    pub fn braiding_matrix(&self) -> CycMatrix {
        let d = self.dim();
        let rho = self.basis_action();
        let mut c = CycMatrix::zeros(d * d, d * d);
        for s in 0..d {
            for (b, e, s2) in &self.coaction[s] {
                for t in 0..d {
                    for u in 0..d {
                        let y = &rho[*b][(u, t)];
                        if !y.is_zero() {
                            let cell = &mut c[(u * d + s2, s * d + t)];
                            *cell = &*cell + &(e * y);
                        }
                    }
                }
            }
        }
        c
    }

    /// Same structure constants on the same basis (the identity map is an
    /// isomorphism of YD modules), over hosts with equal structure.
    pub fn same_structure(&self, other: &YDModule) -> bool {
        self.dim() == other.dim()
            && self.host.labels == other.host.labels
            && self.host.gens.iter().map(|g| &g.0).eq(other.host.gens.iter().map(|g| &g.0))
            && self.actions == other.actions
            && self.coaction == other.coaction
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |a: &CycMatrix| -> serde_json::Value {
            (0..a.rows()).map(|r| (0..a.cols()).map(|c| a[(r, c)].to_json()).collect::<Vec<_>>()).collect()
        };
        let actions: serde_json::Map<String, serde_json::Value> =
            self.host.gens.iter().zip(&self.actions).map(|((name, _), a)| (name.clone(), mat(a))).collect();
        let coaction: Vec<serde_json::Value> = self
            .coaction
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(b, c, t)| {
                        serde_json::json!({
                            "monomial": self.host.label(*b),
                            "exponents": self.host.labels[*b],
                            "coeff": c.to_json(),
                            "target": t,
                        })
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "host": self.host.name,
            "dim": self.dim(),
            "basis": self.basis_names,
            "field_order": self.host.order,
            "actions": actions,
            "coaction": coaction,
        })
    }

    /// Braiding with the braid equation and invertibility checked.
    pub fn braiding(&self) -> Result<BraidedSpace> {
        BraidedSpace::new(self.dim(), self.braiding_matrix())
    }
}

/// Sorted, merged, zero-free coaction terms.
fn normalize(terms: Vec<CoTerm>) -> Vec<CoTerm> {
    let mut map: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
    for (b, c, t) in terms {
        let e = map.entry((b, t)).or_insert_with(CycScalar::zero);
        *e = &*e + &c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).map(|((b, t), c)| (b, c, t)).collect()
}
