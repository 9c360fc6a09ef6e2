use serde::Serialize;

use super::module::{xi_pow, DModule};
use super::simple::build_simple;
use crate::cyclo::{CycMatrix, CycScalar, Span};
use crate::error::{Error, Result};

/// A composition series: `chain[k]` is a basis of the k-th submodule
/// (in coordinates of the original module) and `factors[k]` labels the
/// simple quotient `chain[k] / chain[k-1]`.
#[derive(Clone, Debug, Serialize)]
pub struct CompSeries {
    #[serde(skip)]
    pub chain: Vec<Vec<Vec<CycScalar>>>,
    pub dims: Vec<usize>,
    pub factors: Vec<(u32, u32)>,
}

impl CompSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }
}

fn stack(mats: &[CycMatrix]) -> CycMatrix {
    let cols = mats[0].cols();
    let rows: usize = mats.iter().map(|a| a.rows()).sum();
    let mut out = CycMatrix::zeros(rows, cols);
    let mut off = 0;
    for a in mats {
        for r in 0..a.rows() {
            for c in 0..cols {
                out[(off + r, c)] = a[(r, c)].clone();
            }
        }
        off += a.rows();
    }
    out
}

fn shifted(a: &CycMatrix, lambda: &CycScalar) -> CycMatrix {
    let mut b = a.clone();
    for k in 0..a.rows() {
        b[(k, k)] = &b[(k, k)] - lambda;
    }
    b
}

/// Common eigenspaces of `A` and `g`, keyed by exponents `(a, b)` with
/// eigenvalues `(ξ^a, ξ^b)`. With `in_kernel_of_x`, restricted to
/// `ker X`. Deterministic order by `(a, b)`.
pub fn joint_eigenspaces(module: &DModule, in_kernel_of_x: bool) -> Vec<((u32, u32), Vec<Vec<CycScalar>>)> {
    let (n, m) = (module.n, module.m);
    let nm = n * m;
    let mut out = Vec::new();
    for a in 0..nm {
        let sa = shifted(&module.act_A, &xi_pow(n, m, a as i64));
        let mut base = vec![sa];
        if in_kernel_of_x {
            base.push(module.act_X.clone());
        }
        if stack(&base).kernel().is_empty() {
            continue;
        }
        for b in 0..nm {
            let mut mats = base.clone();
            mats.push(shifted(&module.act_g, &xi_pow(n, m, b as i64)));
            let k = stack(&mats).kernel();
            if !k.is_empty() {
                out.push(((a, b), k));
            }
        }
    }
    out
}

/// The submodule generated by `vs`.
pub fn closure(module: &DModule, vs: &[Vec<CycScalar>]) -> Span<CycScalar> {
    let mut span = Span::new(module.dim());
    let mut queue: Vec<Vec<CycScalar>> = Vec::new();
    for v in vs {
        if span.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for a in module.generators() {
            let w = a.mul_vec(&v);
            if span.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    span
}

/// Dimension of the associative algebra generated by the action
/// matrices (Burnside: the module is absolutely simple iff this is `d²`).
pub fn action_algebra_dim(module: &DModule) -> usize {
    let d = module.dim();
    let flat = |a: &CycMatrix| -> Vec<CycScalar> { (0..d * d).map(|t| a[(t / d, t % d)].clone()).collect() };
    let mut span = Span::new(d * d);
    let mut queue = vec![CycMatrix::identity(d)];
    span.insert(flat(&queue[0]));
    while let Some(w) = queue.pop() {
        for a in module.generators() {
            let p = a.mul(&w);
            if span.insert(flat(&p)) {
                queue.push(p);
            }
        }
    }
    span.dim()
}

/// Simplicity test. When every common `(A, g)`-eigenspace is a line, each
/// eigenvector must generate the whole module (any submodule is `(A,g)`
/// stable, so it contains one of them). Otherwise the Burnside criterion
/// decides.
pub fn is_simple(module: &DModule) -> bool {
    let d = module.dim();
    if d == 0 {
        return false;
    }
    let spaces = joint_eigenspaces(module, false);
    let total: usize = spaces.iter().map(|(_, b)| b.len()).sum();
    if total == d && spaces.iter().all(|(_, b)| b.len() == 1) {
        return spaces.iter().all(|(_, b)| closure(module, b).dim() == d);
    }
    action_algebra_dim(module) == d * d
}

/// Basis of `Hom_D(M1, M2)` as `dim M2 × dim M1` matrices.
pub fn hom_space(m1: &DModule, m2: &DModule) -> Vec<CycMatrix> {
    let (d1, d2) = (m1.dim(), m2.dim());
    let unknowns = d1 * d2;
    if unknowns == 0 {
        return Vec::new();
    }
    // T a1 - a2 T = 0, with T[r][c] at index r * d1 + c
    let gens = m1.generators().into_iter().zip(m2.generators());
    let mut sys = CycMatrix::zeros(4 * unknowns, unknowns);
    for (g, (a1, a2)) in gens.enumerate() {
        for r in 0..d2 {
            for c in 0..d1 {
                let row = g * unknowns + r * d1 + c;
                for k in 0..d1 {
                    let t = &sys[(row, r * d1 + k)] + &a1[(k, c)];
                    sys[(row, r * d1 + k)] = t;
                }
                for k in 0..d2 {
                    let t = &sys[(row, k * d1 + c)] - &a2[(r, k)];
                    sys[(row, k * d1 + c)] = t;
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| CycMatrix::from_fn(d2, d1, |r, c| v[r * d1 + c].clone()))
        .collect()
}

/// An invertible intertwiner `M1 → M2`, if the modules are isomorphic.
pub fn iso_test(m1: &DModule, m2: &DModule) -> Option<CycMatrix> {
    if m1.dim() != m2.dim() || m1.n != m2.n || m1.m != m2.m {
        return None;
    }
    let homs = hom_space(m1, m2);
    if homs.is_empty() {
        return None;
    }
    let d = m1.dim();
    for t in &homs {
        if t.rank() == d {
            return Some(t.clone());
        }
    }
    // Singular combinations form a proper hypersurface; walk a fixed
    // sequence of integer combinations.
    for s in 1..=32i64 {
        let mut t = CycMatrix::zeros(d, d);
        for (k, h) in homs.iter().enumerate() {
            let c = CycScalar::from_int((s + 1).pow(k as u32 % 8) + k as i64);
            t = t.add(&h.scale(&c));
        }
        if t.rank() == d {
            return Some(t);
        }
    }
    None
}

/// Label `(i, j)` of a simple module, read off the `(A, g)`-eigenvalues
/// of its `X`-invariant line and confirmed by an explicit isomorphism.
pub fn identify_simple(module: &DModule) -> Result<(u32, u32)> {
    let spaces = joint_eigenspaces(module, true);
    let [((i, j), _)] = spaces.as_slice() else {
        return Err(Error::Verification("module has no unique X-invariant eigenline".into()));
    };
    let v = build_simple(module.n, module.m, *i, *j)?;
    match iso_test(module, &v) {
        Some(_) => Ok((*i, *j)),
        None => Err(Error::Verification(format!("module is not isomorphic to V_{{{i},{j}}}"))),
    }
}

/// Embedded simple submodules, one per `(label, hom basis element)`.
/// Only labels whose eigenvalues occur on `ker X` can contribute.
fn simple_images(module: &DModule) -> Result<Vec<((u32, u32), Vec<Vec<CycScalar>>)>> {
    let mut out = Vec::new();
    for ((i, j), _) in joint_eigenspaces(module, true) {
        let v = build_simple(module.n, module.m, i, j)?;
        for t in hom_space(&v, module) {
            let cols: Vec<Vec<CycScalar>> = (0..t.cols()).map(|c| t.col(c)).collect();
            out.push(((i, j), cols));
        }
    }
    Ok(out)
}

/// The socle (sum of all simple submodules), computed as the sum of the
/// images of all homomorphisms from simple modules.
pub fn socle_span(module: &DModule) -> Result<Span<CycScalar>> {
    let mut span = Span::new(module.dim());
    for (_, cols) in simple_images(module)? {
        for c in cols {
            span.insert(c);
        }
    }
    Ok(span)
}

pub fn socle(module: &DModule) -> Result<DModule> {
    let span = socle_span(module)?;
    module.submodule(span.basis())
}

/// Peels simple submodules off the bottom: at each step a simple
/// submodule of the current quotient is chosen (preferring the one spanned
/// by the shortest prefix of the basis) and added to the chain.
pub fn composition_series(module: &DModule) -> Result<CompSeries> {
    let d = module.dim();
    let mut sub: Span<CycScalar> = Span::new(d);
    let mut chain = Vec::new();
    let mut factors = Vec::new();
    while sub.dim() < d {
        let (q, free) = module.quotient(&sub);
        let images = simple_images(&q)?;
        // the image lying in the shortest prefix of the basis comes first
        let lead = |cols: &Vec<Vec<CycScalar>>| {
            cols.iter().filter_map(|c| c.iter().rposition(|x| !x.is_zero())).max().unwrap_or(usize::MAX)
        };
        let Some((label, cols)) = images.into_iter().min_by_key(|(l, c)| (lead(c), *l)) else {
            return Err(Error::Verification("quotient has no simple submodule".into()));
        };
        for col in cols {
            let mut lifted = vec![CycScalar::zero(); d];
            for (k, &f) in free.iter().enumerate() {
                lifted[f] = col[k].clone();
            }
            sub.insert(lifted);
        }
        chain.push(sub.basis().to_vec());
        factors.push(label);
    }
    let dims = chain.iter().map(|c| c.len()).collect();
    Ok(CompSeries { chain, dims, factors })
}
