use rayon::prelude::*;
use std::sync::Arc;

use super::algebra::{Coverage, FDHopf, Product};
use super::elem::{Acc, Elem};
use super::radford::{build_dual_radford, build_radford, check_params, gamma, pairing_with, HopfPairing};
use super::relations::{double_relations, Gen, WordAlgebra};
use crate::cyclo::{root, CycScalar};
use crate::error::{Error, Result};
use crate::report::Report;

impl WordAlgebra for FDHopf {
    type Value = Elem;
    fn one(&self) -> Elem {
        FDHopf::one(self)
    }
    fn generator(&self, g: Gen) -> Elem {
        self.gen(g.name()).cloned().unwrap_or_else(|| panic!("{} has no generator {g}", self.name))
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        FDHopf::mul(self, a, b)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.add(b)
    }
    fn scale(&self, a: &Elem, c: &CycScalar) -> Elem {
        a.scale(c)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        a.is_zero()
    }
}

/// The Drinfeld double `D = D(H_{n,m}^cop)` on the basis
/// `x^a g^b ⋈ X^c A^d` (index `r·dim H + h`).
///
/// The product is assembled from the exchange rule
/// `(1⋈f)(a⋈1) = (f₂ ⇀ a₂) ⋈ (f₁ ↼ a₁)`, with the `R` factor carrying the
/// opposite product. The coproduct is `Δ(a⋈f) = (a₂⋈f₂) ⊗ (a₁⋈f₁)` and the
/// antipode `S(a⋈f) = (1⋈S_H⁻¹ f)(S_R a⋈1)`.
pub fn build_double(n: u32, m: u32) -> Result<FDHopf> {
    check_params(n, m)?;
    let r = Arc::new(build_radford(n, m)?);
    let h = Arc::new(build_dual_radford(n, m)?);
    build_double_from(&pairing_with(h, r))
}

pub fn build_double_from(p: &HopfPairing) -> Result<FDHopf> {
    let (r, h) = (p.r.clone(), p.h.clone());
    let (dr, dh) = (r.dim(), h.dim());
    let d = dr * dh;
    let e = Elem::basis;

    // harpoon tables on basis pairs, indexed [f * dr + a]
    let left: Vec<Elem> = (0..dh * dr).into_par_iter().map(|t| p.left_harpoon(&e(t / dr), &e(t % dr))).collect();
    let right: Vec<Elem> = (0..dh * dr).into_par_iter().map(|t| p.right_harpoon(&e(t / dr), &e(t % dr))).collect();

    let cross: Vec<Elem> = (0..dh * dr)
        .into_par_iter()
        .map(|t| {
            let (f, a) = (t / dr, t % dr);
            let mut acc = Acc::new();
            for (s, c1) in h.comul_basis(f).iter() {
                let (f1, f2) = (s / dh, s % dh);
                for (u, c2) in r.comul_basis(a).iter() {
                    let (a1, a2) = (u / dr, u % dr);
                    let l = &left[f2 * dr + a2];
                    let rr = &right[f1 * dr + a1];
                    if l.is_zero() || rr.is_zero() {
                        continue;
                    }
                    let c = c1 * c2;
                    for (i, x) in l.iter() {
                        let cx = &c * x;
                        for (j, y) in rr.iter() {
                            acc.add(i * dh + j, &cx * y);
                        }
                    }
                }
            }
            acc.finish()
        })
        .collect();

    let labels: Vec<Vec<u32>> =
        (0..d).map(|t| r.labels[t / dh].iter().chain(&h.labels[t % dh]).copied().collect()).collect();
    let embed_r = |x: &Elem| Elem(x.iter().map(|(i, c)| (i * dh + h.unit, c.clone())).collect());
    let embed_h = |x: &Elem| Elem(x.iter().map(|(i, c)| (r.unit * dh + i, c.clone())).collect());
    let gens = vec![
        ("g".to_string(), embed_r(r.gen("g").unwrap())),
        ("x".to_string(), embed_r(r.gen("x").unwrap())),
        ("X".to_string(), embed_h(h.gen("X").unwrap())),
        ("A".to_string(), embed_h(h.gen("A").unwrap())),
        ("U".to_string(), embed_h(h.gen("U").unwrap())),
    ];
    // x^a g^b ⋈ X^c A^d = g^b x^a X^c A^d in D
    let words: Vec<Vec<usize>> = labels
        .iter()
        .map(|l| {
            let mut w = vec![0; l[1] as usize];
            w.extend(std::iter::repeat(1).take(l[0] as usize));
            w.extend(std::iter::repeat(2).take(l[2] as usize));
            w.extend(std::iter::repeat(3).take(l[3] as usize));
            w
        })
        .collect();

    let comult: Vec<Elem> = (0..d)
        .into_par_iter()
        .map(|t| {
            let (a, f) = (t / dh, t % dh);
            let mut acc = Acc::new();
            for (u, c1) in r.comul_basis(a).iter() {
                let (a1, a2) = (u / dr, u % dr);
                for (s, c2) in h.comul_basis(f).iter() {
                    let (f1, f2) = (s / dh, s % dh);
                    acc.add((a2 * dh + f2) * d + (a1 * dh + f1), c1 * c2);
                }
            }
            acc.finish()
        })
        .collect();
    let counit: Vec<CycScalar> =
        (0..d).map(|t| r.counit_basis(t / dh) * h.counit_basis(t % dh)).collect();

    let nm = r.order;
    let n = (dr as u32) / nm;
    let mut alg = FDHopf {
        name: format!("D(H_{{{},{}}}^cop)", n, nm / n),
        order: nm,
        labels,
        letters: vec!["x".into(), "g".into(), "X".into(), "A".into()],
        gens,
        words,
        product: Product::Double { r: r.clone(), h: h.clone(), cross },
        unit: r.unit * dh + h.unit,
        comult,
        counit,
        antipode: Vec::new(),
    };
    let s_h_inv = h.antipode_inverse()?;
    let antipode: Vec<Elem> = (0..d)
        .into_par_iter()
        .map(|t| {
            let (a, f) = (t / dh, t % dh);
            alg.mul(&embed_h(&s_h_inv[f]), &embed_r(r.antipode_basis(a)))
        })
        .collect();
    alg.antipode = antipode;
    for (b, w) in alg.words.iter().enumerate() {
        if alg.word(w) != Elem::basis(b) {
            return Err(Error::Verification(format!("basis word of {} is wrong", alg.label(b))));
        }
    }
    Ok(alg)
}

impl FDHopf {
    /// The two tensor factors `(R, H)` when this algebra is a double.
    pub fn double_factors(&self) -> Option<(&Arc<FDHopf>, &Arc<FDHopf>)> {
        match &self.product {
            Product::Double { r, h, .. } => Some((r, h)),
            Product::Table(_) => None,
        }
    }

    /// Embedding of `R` as `a ↦ a ⋈ 1`.
    pub fn embed_left(&self, a: &Elem) -> Elem {
        let (_, h) = self.double_factors().expect("not a double");
        let dh = h.dim();
        Elem(a.iter().map(|(i, c)| (i * dh + h.unit, c.clone())).collect())
    }

    /// Embedding of `H` as `f ↦ 1 ⋈ f`.
    pub fn embed_right(&self, f: &Elem) -> Elem {
        let (r, h) = self.double_factors().expect("not a double");
        Elem(f.iter().map(|(i, c)| (r.unit * h.dim() + i, c.clone())).collect())
    }
}

/// Checks of the double: every presentation relation and derived
/// identity, the two factor embeddings, and sampled Hopf axioms.
pub fn verify_double_presentation(d: &FDHopf) -> Report {
    let mut rep = Report::new(format!("presentation of {}", d.name));
    let Some((r, h)) = d.double_factors() else {
        rep.push("algebra is a double", false);
        return rep;
    };
    let nm = d.order;
    let n = (r.dim() as u32) / nm;
    let m = nm / n;
    rep.push_detail("dimension n⁴m²", d.dim() == (n.pow(4) * m * m) as usize, d.dim().to_string());
    let rels = double_relations(n, m);
    let results: Vec<bool> = rels.par_iter().map(|rel| rel.holds_in(d)).collect();
    for (rel, ok) in rels.iter().zip(results) {
        rep.push(rel.name.clone(), ok);
    }
    let e = Elem::basis;
    let r_ok = (0..r.dim() * r.dim()).into_par_iter().all(|t| {
        let (a, b) = (t / r.dim(), t % r.dim());
        d.mul(&d.embed_left(&e(a)), &d.embed_left(&e(b))) == d.embed_left(&r.mul_basis(b, a))
    });
    rep.push("a ↦ a⋈1 is an algebra map from R^op", r_ok);
    let h_ok = (0..h.dim() * h.dim()).into_par_iter().all(|t| {
        let (f, g) = (t / h.dim(), t % h.dim());
        d.mul(&d.embed_right(&e(f)), &d.embed_right(&e(g))) == d.embed_right(&h.mul_basis(f, g))
    });
    rep.push("f ↦ 1⋈f is an algebra map from H", h_ok);
    rep
}

/// Sampled Hopf axioms for the double (full checks are cubic in n⁴m²).
pub fn verify_double_axioms(d: &FDHopf, samples: usize, seed: u64) -> Report {
    d.verify_axioms(Coverage::Sampled { count: samples, seed })
}

/// The table of harpoon values on generators used to derive the
/// exchange relations of the double.
pub fn harpoon_identities(p: &HopfPairing) -> Report {
    let (r, h) = (&p.r, &p.h);
    let nm = r.order;
    let n = (r.dim() as u32) / nm;
    let m = nm / n;
    let w = |k: i64| root(nm, m as i64 * k);
    let xi = |k: i64| root(nm, k);
    let (g, x) = (r.gen("g").unwrap().clone(), r.gen("x").unwrap().clone());
    let (uu, xx, aa) = (h.gen("U").unwrap().clone(), h.gen("X").unwrap().clone(), h.gen("A").unwrap().clone());
    let one_r = r.one();
    let one_h = h.one();
    let xn1 = h.pow(&xx, n - 1);
    let mut rep = Report::new("harpoon identities");
    let mut check = |name: &str, lhs: Elem, rhs: Elem| rep.push(name, lhs == rhs);
    check("U ⇀ g = g", p.left_harpoon(&uu, &g), g.clone());
    check("X ⇀ g = 0", p.left_harpoon(&xx, &g), Elem::zero());
    check("A ⇀ g = g", p.left_harpoon(&aa, &g), g.clone());
    check("U ↼ g = U", p.right_harpoon(&uu, &g), uu.clone());
    check("X ↼ g = ω⁻¹X", p.right_harpoon(&xx, &g), xx.scale(&w(-1)));
    check("A ↼ g = A", p.right_harpoon(&aa, &g), aa.clone());
    check("U ⇀ x = ω⁻¹x", p.left_harpoon(&uu, &x), x.scale(&w(-1)));
    check("X ⇀ x = ω⁻¹(g − 1)", p.left_harpoon(&xx, &x), g.sub(&one_r).scale(&w(-1)));
    check("A ⇀ x = ξ⁻¹x", p.left_harpoon(&aa, &x), x.scale(&xi(-1)));
    check("U ↼ x = 0", p.right_harpoon(&uu, &x), Elem::zero());
    check("X ↼ x = ω⁻¹(U − 1)", p.right_harpoon(&xx, &x), uu.sub(&one_h).scale(&w(-1)));
    let t = h.mul(&h.mul(&xn1, &uu), &aa);
    check("X^{n−1}UA ↼ g = ω X^{n−1}UA", p.right_harpoon(&t, &g), t.scale(&w(1)));
    let rhs = h.mul(&h.mul(&xn1, &uu.sub(&one_h)), &aa).scale(&(&gamma(n, m, 1) * &xi(-1)));
    check("A ↼ x = γ_{n,1} ξ⁻¹ X^{n−1}(U − 1)A", p.right_harpoon(&aa, &x), rhs);
    rep
}
