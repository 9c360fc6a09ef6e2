use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cyclo::{root, CycMatrix, CycScalar, Span};
use crate::error::{Error, Result};
use crate::hopf::{double_relations, FDHopf, Gen, WordAlgebra};
use crate::report::Report;

/// A finite-dimensional left module over the double, stored as the
/// matrices of `g, x, X, A` on a fixed basis (columns are images).
#[allow(non_snake_case)]
#[derive(Clone, Debug)]
pub struct DModule {
    pub n: u32,
    pub m: u32,
    pub act_g: CycMatrix,
    pub act_x: CycMatrix,
    pub act_X: CycMatrix,
    pub act_A: CycMatrix,
    pub label: Option<(u32, u32)>,
    pub basis_names: Vec<String>,
}

impl DModule {
    pub fn dim(&self) -> usize {
        self.act_g.rows()
    }

    pub fn nm(&self) -> u32 {
        self.n * self.m
    }

    #[allow(non_snake_case)]
    pub fn act_U(&self) -> CycMatrix {
        self.act_A.pow(self.m)
    }

    pub fn action(&self, g: Gen) -> CycMatrix {
        match g {
            Gen::G => self.act_g.clone(),
            Gen::Xs => self.act_x.clone(),
            Gen::XBig => self.act_X.clone(),
            Gen::A => self.act_A.clone(),
            Gen::U => self.act_U(),
        }
    }

    /// The four stored generator matrices in the order `g, x, X, A`.
    pub fn generators(&self) -> [&CycMatrix; 4] {
        [&self.act_g, &self.act_x, &self.act_X, &self.act_A]
    }

    pub fn name(&self) -> String {
        match self.label {
            Some((i, j)) => format!("V_{{{i},{j}}}"),
            None => format!("module of dim {}", self.dim()),
        }
    }

    /// Every defining relation of the double (and the derived identities)
    /// as an operator identity.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new(format!("{} over D({},{})", self.name(), self.n, self.m));
        let d = self.dim();
        let square = self.generators().iter().all(|a| a.rows() == d && a.cols() == d);
        rep.push("action matrices are square of equal size", square);
        if !square {
            return rep;
        }
        let rels = double_relations(self.n, self.m);
        let ok: Vec<bool> = rels.par_iter().map(|r| r.holds_in(self)).collect();
        for (r, ok) in rels.iter().zip(ok) {
            rep.push(r.name.clone(), ok);
        }
        rep
    }

    /// Like [`verify`](Self::verify), but fails with the first broken
    /// relation named.
    pub fn checked(self) -> Result<Self> {
        let rep = self.verify();
        match rep.failures().first() {
            None => Ok(self),
            Some(c) => Err(Error::Verification(format!("{}: relation {} fails", self.name(), c.name))),
        }
    }

    /// Independent check against the structure constants of `D`: the map
    /// sending a basis element to the product of generator matrices along
    /// its word must be multiplicative on sampled basis pairs.
    pub fn verify_with_double(&self, d: &FDHopf, samples: usize, seed: u64) -> Report {
        let mut rep = Report::new(format!("{} as a representation of {}", self.name(), d.name));
        let gen_mats: Vec<CycMatrix> = d
            .gens
            .iter()
            .map(|(name, _)| match name.as_str() {
                "g" => self.act_g.clone(),
                "x" => self.act_x.clone(),
                "X" => self.act_X.clone(),
                "A" => self.act_A.clone(),
                _ => self.act_U(),
            })
            .collect();
        let dim = self.dim();
        let rho: Vec<CycMatrix> = d
            .words
            .par_iter()
            .map(|w| w.iter().fold(CycMatrix::identity(dim), |acc, &g| acc.mul(&gen_mats[g])))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(usize, usize)> =
            (0..samples).map(|_| (rng.gen_range(0..d.dim()), rng.gen_range(0..d.dim()))).collect();
        let bad: Vec<(usize, usize)> = pairs
            .par_iter()
            .filter(|&&(a, b)| {
                let mut lhs = CycMatrix::zeros(dim, dim);
                for (k, c) in d.mul_basis(a, b).iter() {
                    lhs = lhs.add(&rho[*k].scale(c));
                }
                lhs != rho[a].mul(&rho[b])
            })
            .copied()
            .collect();
        rep.push_detail(
            format!("ρ(ab) = ρ(a)ρ(b) on {samples} sampled basis pairs"),
            bad.is_empty(),
            bad.first().map(|(a, b)| format!("fails at ({}, {})", d.label(*a), d.label(*b))).unwrap_or_default(),
        );
        rep
    }

    /// Restriction to the submodule spanned by `basis` (assumed stable).
    pub fn submodule(&self, basis: &[Vec<CycScalar>]) -> Result<DModule> {
        let d = self.dim();
        let b = CycMatrix::from_cols(d, basis);
        let restrict = |a: &CycMatrix| -> Result<CycMatrix> {
            let cols: Vec<Vec<CycScalar>> = basis
                .iter()
                .map(|v| {
                    b.solve(&a.mul_vec(v))
                        .ok_or_else(|| Error::Precondition("span is not a submodule".into()))
                })
                .collect::<Result<_>>()?;
            Ok(CycMatrix::from_cols(basis.len(), &cols))
        };
        Ok(DModule {
            n: self.n,
            m: self.m,
            act_g: restrict(&self.act_g)?,
            act_x: restrict(&self.act_x)?,
            act_X: restrict(&self.act_X)?,
            act_A: restrict(&self.act_A)?,
            label: None,
            basis_names: (0..basis.len()).map(|k| format!("w{k}")).collect(),
        })
    }

    /// The quotient by a submodule, on the unit vectors of the non-pivot
    /// columns of `sub`. Returns the module and those column indices.
    pub fn quotient(&self, sub: &Span<CycScalar>) -> (DModule, Vec<usize>) {
        let free = sub.free_columns();
        let d = self.dim();
        let project = |a: &CycMatrix| {
            let cols: Vec<Vec<CycScalar>> = free
                .iter()
                .map(|&c| {
                    let image = sub.reduce(&a.col(c));
                    free.iter().map(|&f| image[f].clone()).collect()
                })
                .collect();
            CycMatrix::from_cols(free.len(), &cols)
        };
        debug_assert_eq!(sub.ambient(), d);
        let q = DModule {
            n: self.n,
            m: self.m,
            act_g: project(&self.act_g),
            act_x: project(&self.act_x),
            act_X: project(&self.act_X),
            act_A: project(&self.act_A),
            label: None,
            basis_names: free.iter().map(|&c| self.basis_names[c].clone()).collect(),
        };
        (q, free)
    }

    pub fn direct_sum(&self, other: &DModule) -> DModule {
        let (a, b) = (self.dim(), other.dim());
        let block = |x: &CycMatrix, y: &CycMatrix| {
            CycMatrix::from_fn(a + b, a + b, |r, c| match (r < a, c < a) {
                (true, true) => x[(r, c)].clone(),
                (false, false) => y[(r - a, c - a)].clone(),
                _ => CycScalar::zero(),
            })
        };
        DModule {
            n: self.n,
            m: self.m,
            act_g: block(&self.act_g, &other.act_g),
            act_x: block(&self.act_x, &other.act_x),
            act_X: block(&self.act_X, &other.act_X),
            act_A: block(&self.act_A, &other.act_A),
            label: None,
            basis_names: self
                .basis_names
                .iter()
                .map(|s| format!("{s}'"))
                .chain(other.basis_names.iter().map(|s| format!("{s}''")))
                .collect(),
        }
    }

    /// Whether `x` acts nilpotently.
    pub fn x_nilpotent(&self) -> bool {
        self.act_x.pow(self.dim() as u32).is_zero()
    }

    /// The oriented graph of the module on its basis: an edge `v_l → v_k`
    /// whenever the `x` or `X` image of `v_l` has a nonzero `v_k` entry.
    pub fn edges(&self) -> Vec<(usize, usize, &'static str)> {
        let mut out = Vec::new();
        for (mat, name) in [(&self.act_x, "x"), (&self.act_X, "X")] {
            for l in 0..self.dim() {
                for k in 0..self.dim() {
                    if !mat[(k, l)].is_zero() {
                        out.push((l, k, name));
                    }
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph \"{}\" {{\n", self.name());
        for name in &self.basis_names {
            s.push_str(&format!("  \"{name}\";\n"));
        }
        for (l, k, action) in self.edges() {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [action=\"{action}\", label=\"{action}\"];\n",
                self.basis_names[l], self.basis_names[k]
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |a: &CycMatrix| -> serde_json::Value {
            (0..a.rows()).map(|r| (0..a.cols()).map(|c| a[(r, c)].to_json()).collect::<Vec<_>>()).collect()
        };
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "dim": self.dim(),
            "label": self.label,
            "basis": self.basis_names,
            "field_order": self.nm(),
            "actions": { "g": mat(&self.act_g), "x": mat(&self.act_x), "X": mat(&self.act_X), "A": mat(&self.act_A) },
        })
    }
}

impl WordAlgebra for DModule {
    type Value = CycMatrix;
    fn one(&self) -> CycMatrix {
        CycMatrix::identity(self.dim())
    }
    fn generator(&self, g: Gen) -> CycMatrix {
        self.action(g)
    }
    fn mul(&self, a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
        a.mul(b)
    }
    fn add(&self, a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
        a.add(b)
    }
    fn scale(&self, a: &CycMatrix, c: &CycScalar) -> CycMatrix {
        a.scale(c)
    }
    fn is_zero(&self, a: &CycMatrix) -> bool {
        a.is_zero()
    }
}

/// `ξ^k` for the module's parameters.
pub(crate) fn xi_pow(n: u32, m: u32, k: i64) -> CycScalar {
    root(n * m, k)
}

/// `ω^k = ξ^{mk}`.
pub(crate) fn omega_pow(n: u32, m: u32, k: i64) -> CycScalar {
    root(n * m, m as i64 * k)
}

pub(crate) fn diagonal(entries: Vec<CycScalar>) -> CycMatrix {
    let d = entries.len();
    let mut a = CycMatrix::zeros(d, d);
    for (k, e) in entries.into_iter().enumerate() {
        a[(k, k)] = e;
    }
    a
}
