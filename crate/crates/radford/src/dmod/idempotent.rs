use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::lattice::iso_test;
use super::module::{xi_pow, DModule};
use super::simple::{build_simple, c_coeff, r_of};
use crate::cyclo::{CycMatrix, CycScalar, Span};
use crate::error::{Error, Result};
use crate::hopf::{Elem, FDHopf};
use crate::report::Report;

fn params(d: &FDHopf) -> Result<(u32, u32)> {
    let (r, _) = d.double_factors().ok_or_else(|| Error::Precondition("not a double".into()))?;
    let nm = d.order;
    let n = r.dim() as u32 / nm;
    Ok((n, nm / n))
}

/// `e_{i,j} = (1/(nm)²) Σ_{r,s} ξ^{-ir-js} A^r g^s`, the character
/// projector of the group `⟨A⟩ × ⟨g⟩` of order `(nm)²`.
pub fn idempotent(d: &FDHopf, i: u32, j: u32) -> Result<Elem> {
    let (n, m) = params(d)?;
    let nm = n * m;
    let scale = CycScalar::from_ratio(1, (nm * nm) as i64)?;
    let mut terms = Vec::new();
    for r in 0..nm {
        for s in 0..nm {
            // A^r g^s = g^s A^r is the basis monomial x^0 g^s ⋈ X^0 A^r
            let b = d.index_of(&[0, s, 0, r]).expect("basis label");
            let c = &scale * &xi_pow(n, m, -((i * r + j * s) as i64));
            terms.push((b, c));
        }
    }
    terms.sort_by_key(|(b, _)| *b);
    Ok(Elem(terms))
}

/// `e^{(n)}_{i,j} = λ_n X^{n-1} x^{n-1} e_{i,j}` with `λ_n = 1/(c_1⋯c_{n-1})`.
pub fn full_idempotent(d: &FDHopf, i: u32, j: u32) -> Result<Elem> {
    let (n, m) = params(d)?;
    let mut prod = CycScalar::one();
    for k in 1..n {
        prod = &prod * &c_coeff(n, m, i, j, k);
    }
    let lambda = prod.inv().map_err(|_| Error::Precondition("some c_k vanishes".into()))?;
    let xx = d.pow(d.gen("X").unwrap(), n - 1);
    let x = d.pow(d.gen("x").unwrap(), n - 1);
    let e = idempotent(d, i, j)?;
    Ok(d.mul(&d.mul(&xx, &x), &e).scale(&lambda))
}

/// The left ideal `D·e` as a module, on a basis of products `b·e`.
pub fn left_ideal_module(d: &FDHopf, e: &Elem) -> Result<DModule> {
    let (n, m) = params(d)?;
    let dim = d.dim();
    let products: Vec<Vec<CycScalar>> =
        (0..dim).into_par_iter().map(|b| d.mul(&Elem::basis(b), e).to_dense(dim)).collect();
    let span = Span::from_vectors(dim, products);
    let basis = span.basis().to_vec();
    let bmat = CycMatrix::from_cols(dim, &basis);
    let act = |name: &str| -> Result<CycMatrix> {
        let g = d.gen(name).unwrap();
        let cols: Vec<Vec<CycScalar>> = basis
            .iter()
            .map(|v| {
                let image = d.mul(g, &Elem::from_dense(v)).to_dense(dim);
                bmat.solve(&image).ok_or_else(|| Error::Verification("D·e is not a left ideal".into()))
            })
            .collect::<Result<_>>()?;
        Ok(CycMatrix::from_cols(basis.len(), &cols))
    };
    Ok(DModule {
        n,
        m,
        act_g: act("g")?,
        act_x: act("x")?,
        act_X: act("X")?,
        act_A: act("A")?,
        label: None,
        basis_names: (0..basis.len()).map(|k| format!("b{k}")).collect(),
    })
}

/// Completeness, orthogonality (all diagonal pairs plus `samples` random
/// off-diagonal pairs), the eigen-relations `g e = ξ^j e`, `A e = ξ^i e`,
/// and for every simple of dimension `n`: `e^{(n)}` is idempotent and
/// `D e^{(n)} ≅ V_{i,j}`.
pub fn verify_idempotents(d: &FDHopf, samples: usize, seed: u64) -> Result<Report> {
    let (n, m) = params(d)?;
    let nm = n * m;
    let mut rep = Report::new(format!("idempotents of {}", d.name));
    let es: Vec<Elem> = (0..nm * nm).map(|t| idempotent(d, t / nm, t % nm)).collect::<Result<_>>()?;
    let sum = es.iter().fold(Elem::zero(), |acc, e| acc.add(e));
    rep.push("Σ e_{i,j} = 1", sum == d.one());
    let diag_ok = es.par_iter().all(|e| d.mul(e, e) == *e);
    rep.push("e_{i,j}² = e_{i,j}", diag_ok);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    while pairs.len() < samples {
        let (a, b) = (rng.gen_range(0..es.len()), rng.gen_range(0..es.len()));
        if a != b {
            pairs.push((a, b));
        }
    }
    let orth = pairs.par_iter().all(|&(a, b)| d.mul(&es[a], &es[b]).is_zero());
    rep.push(format!("e e' = 0 on {samples} sampled distinct pairs"), orth);
    let (g, a) = (d.gen("g").unwrap(), d.gen("A").unwrap());
    let eig = (0..nm * nm).into_par_iter().all(|t| {
        let (i, j) = (t / nm, t % nm);
        let e = &es[t as usize];
        d.mul(g, e) == e.scale(&xi_pow(n, m, j as i64)) && d.mul(a, e) == e.scale(&xi_pow(n, m, i as i64))
    });
    rep.push("g e_{i,j} = ξ^j e_{i,j} and A e_{i,j} = ξ^i e_{i,j}", eig);

    let full: Vec<(u32, u32)> =
        (0..nm * nm).map(|t| (t / nm, t % nm)).filter(|&(i, j)| r_of(n, m, i, j) == n).collect();
    let results: Vec<Result<(bool, bool)>> = full
        .par_iter()
        .map(|&(i, j)| {
            let e = full_idempotent(d, i, j)?;
            let idem = d.mul(&e, &e) == e;
            let ideal = left_ideal_module(d, &e)?;
            let iso = ideal.dim() == n as usize && iso_test(&ideal, &build_simple(n, m, i, j)?).is_some();
            Ok((idem, iso))
        })
        .collect();
    let mut idem_all = true;
    let mut iso_all = true;
    for ((i, j), res) in full.iter().zip(results) {
        let (idem, iso) = res?;
        if !idem || !iso {
            rep.push_detail(format!("e^(n)_{{{i},{j}}}"), false, format!("idempotent: {idem}, D·e ≅ V: {iso}"));
        }
        idem_all &= idem;
        iso_all &= iso;
    }
    rep.push(format!("e^(n) idempotent for all {} full-size simples", full.len()), idem_all);
    rep.push("D·e^(n)_{i,j} ≅ V_{i,j} for every full-size simple", iso_all);
    Ok(rep)
}
