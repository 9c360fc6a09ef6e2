use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::borrow::Cow;
use std::sync::Arc;

use super::elem::{Acc, Elem};
use crate::cyclo::{CycMatrix, CycScalar, Field};
use crate::error::{Error, Result};
use crate::report::Report;

/// How products of basis elements are obtained.
#[derive(Clone)]
pub(crate) enum Product {
    /// Full structure constants, `table[a * dim + b] = e_a e_b`.
    Table(Vec<Elem>),
    /// A double `R ⋈ H`: products assembled on demand from the
    /// exchange table `cross[h * dim_r + r] = (1⋈h)(r⋈1)`.
    Double { r: Arc<FDHopf>, h: Arc<FDHopf>, cross: Vec<Elem> },
}

/// A finite-dimensional Hopf algebra given by structure constants over
/// a cyclotomic field.
#[derive(Clone)]
pub struct FDHopf {
    pub name: String,
    /// Order of the root of unity generating the scalar field.
    pub order: u32,
    /// Exponent tuple of each basis monomial.
    pub labels: Vec<Vec<u32>>,
    /// Label letters, one per exponent slot (e.g. `["x", "g"]`).
    pub letters: Vec<String>,
    /// Algebra generators by name.
    pub gens: Vec<(String, Elem)>,
    /// For each basis element, a word in `gens` whose product is that element.
    pub words: Vec<Vec<usize>>,
    pub(crate) product: Product,
    pub unit: usize,
    /// `comult[b]` lives in the tensor square, index `p * dim + q`.
    pub(crate) comult: Vec<Elem>,
    pub(crate) counit: Vec<CycScalar>,
    /// `antipode[b] = S(e_b)`.
    pub(crate) antipode: Vec<Elem>,
}

/// Which basis tuples the axiom checker visits.
#[derive(Clone, Copy, Debug)]
pub enum Coverage {
    Full,
    /// `count` random pairs and triples drawn with the given seed.
    Sampled { count: usize, seed: u64 },
}

impl FDHopf {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn gen(&self, name: &str) -> Option<&Elem> {
        self.gens.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|(n, _)| n == name)
    }

    pub fn one(&self) -> Elem {
        Elem::basis(self.unit)
    }

    /// Index of the basis monomial with the given exponents.
    pub fn index_of(&self, label: &[u32]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, b: usize) -> String {
        let parts: Vec<String> = self.labels[b]
            .iter()
            .zip(&self.letters)
            .filter(|(e, _)| **e > 0)
            .map(|(e, l)| if *e == 1 { l.clone() } else { format!("{l}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> Cow<'_, Elem> {
        match &self.product {
            Product::Table(t) => Cow::Borrowed(&t[a * self.dim() + b]),
            Product::Double { r, h, cross } => {
                let dh = h.dim();
                let (ra, ha) = (a / dh, a % dh);
                let (rb, hb) = (b / dh, b % dh);
                let mut acc = Acc::new();
                for (idx, c) in cross[ha * r.dim() + rb].iter() {
                    let (r1, h1) = (idx / dh, idx % dh);
                    // the R factor multiplies in the opposite order
                    let left = r.mul_basis(r1, ra);
                    let right = h.mul_basis(h1, hb);
                    for (i, x) in left.iter() {
                        let cx = c * x;
                        for (j, y) in right.iter() {
                            acc.add(i * dh + j, &cx * y);
                        }
                    }
                }
                Cow::Owned(acc.finish())
            }
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                acc.add_elem(&self.mul_basis(*i, *j), &xy);
            }
        }
        acc.finish()
    }

    pub fn pow(&self, a: &Elem, k: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Product of generators along a word of generator indices.
    pub fn word(&self, w: &[usize]) -> Elem {
        w.iter().fold(self.one(), |acc, &g| self.mul(&acc, &self.gens[g].1))
    }

    pub fn comul_basis(&self, b: usize) -> &Elem {
        &self.comult[b]
    }

    pub fn comul(&self, a: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (i, x) in a.iter() {
            acc.add_elem(&self.comult[*i], x);
        }
        acc.finish()
    }

    /// `(Δ ⊗ id)Δ`, indexed `(p * dim + q) * dim + r`.
    pub fn comul2(&self, a: &Elem) -> Elem {
        let d = self.dim();
        let mut acc = Acc::new();
        for (t, c) in self.comul(a).iter() {
            let (p, r) = (t / d, t % d);
            for (pq, x) in self.comult[p].iter() {
                acc.add(pq * d + r, c * x);
            }
        }
        acc.finish()
    }

    pub fn counit_basis(&self, b: usize) -> &CycScalar {
        &self.counit[b]
    }

    pub fn counit(&self, a: &Elem) -> CycScalar {
        a.iter().fold(CycScalar::zero(), |acc, (i, x)| &acc + &(x * &self.counit[*i]))
    }

    pub fn antipode_basis(&self, b: usize) -> &Elem {
        &self.antipode[b]
    }

    pub fn antipode(&self, a: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (i, x) in a.iter() {
            acc.add_elem(&self.antipode[*i], x);
        }
        acc.finish()
    }

    /// Column `b` holds the coordinates of `S(e_b)`.
    pub fn antipode_matrix(&self) -> CycMatrix {
        let d = self.dim();
        let mut m = CycMatrix::zeros(d, d);
        for b in 0..d {
            for (i, c) in self.antipode[b].iter() {
                m[(*i, b)] = c.clone();
            }
        }
        m
    }

    /// `S^{-1}` as a table of basis images, by matrix inversion.
    pub fn antipode_inverse(&self) -> Result<Vec<Elem>> {
        let inv = self.antipode_matrix().inverse()?;
        Ok((0..self.dim()).map(|b| Elem::from_dense(&inv.col(b))).collect())
    }

    /// Product in the tensor square `A ⊗ A`.
    pub fn tensor_mul(&self, a: &Elem, b: &Elem) -> Elem {
        let d = self.dim();
        let mut acc = Acc::new();
        for (s, x) in a.iter() {
            let (p, q) = (s / d, s % d);
            for (t, y) in b.iter() {
                let (u, v) = (t / d, t % d);
                let left = self.mul_basis(p, u);
                let right = self.mul_basis(q, v);
                let xy = x * y;
                for (i, l) in left.iter() {
                    let c = &xy * l;
                    for (j, r) in right.iter() {
                        acc.add(i * d + j, &c * r);
                    }
                }
            }
        }
        acc.finish()
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mul_matrix(&self, a: &Elem) -> CycMatrix {
        let d = self.dim();
        let mut m = CycMatrix::zeros(d, d);
        for b in 0..d {
            for (i, c) in self.mul(a, &Elem::basis(b)).iter() {
                m[(*i, b)] = c.clone();
            }
        }
        m
    }

    /// Checks the Hopf algebra axioms exactly on the chosen basis tuples.
    pub fn verify_axioms(&self, coverage: Coverage) -> Report {
        let d = self.dim();
        let (pairs, triples): (Vec<(usize, usize)>, Vec<(usize, usize, usize)>) = match coverage {
            Coverage::Full => (
                (0..d * d).map(|t| (t / d, t % d)).collect(),
                (0..d * d * d).map(|t| (t / (d * d), (t / d) % d, t % d)).collect(),
            ),
            Coverage::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let pairs = (0..count).map(|_| (rng.gen_range(0..d), rng.gen_range(0..d))).collect();
                let triples = (0..count)
                    .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                    .collect();
                (pairs, triples)
            }
        };
        let mut rep = Report::new(format!("Hopf axioms of {}", self.name));
        let e = Elem::basis;

        let assoc = triples.par_iter().all(|&(a, b, c)| {
            let ab = self.mul_basis(a, b).into_owned();
            let bc = self.mul_basis(b, c).into_owned();
            self.mul(&ab, &e(c)) == self.mul(&e(a), &bc)
        });
        rep.push("associativity", assoc);

        let unit = (0..d).into_par_iter().all(|a| {
            *self.mul_basis(self.unit, a) == e(a) && *self.mul_basis(a, self.unit) == e(a)
        });
        rep.push("unit", unit);

        let coassoc = (0..d).into_par_iter().all(|b| {
            let left = self.comul2(&e(b));
            let mut acc = Acc::new();
            for (t, c) in self.comult[b].iter() {
                let (p, q) = (t / d, t % d);
                for (qr, x) in self.comult[q].iter() {
                    acc.add(p * d * d + qr, c * x);
                }
            }
            left == acc.finish()
        });
        rep.push("coassociativity", coassoc);

        let counit = (0..d).into_par_iter().all(|b| {
            let mut l = Acc::new();
            let mut r = Acc::new();
            for (t, c) in self.comult[b].iter() {
                let (p, q) = (t / d, t % d);
                l.add(q, c * &self.counit[p]);
                r.add(p, c * &self.counit[q]);
            }
            l.finish() == e(b) && r.finish() == e(b)
        });
        rep.push("counit", counit);

        let unit_d = self.comult[self.unit] == e(self.unit * d + self.unit) && self.counit[self.unit].is_one();
        rep.push("Δ(1) = 1⊗1 and ε(1) = 1", unit_d);

        let comul_mult = pairs.par_iter().all(|&(a, b)| {
            let ab = self.mul_basis(a, b);
            self.comul(&ab) == self.tensor_mul(&self.comult[a], &self.comult[b])
        });
        rep.push("Δ is an algebra map", comul_mult);

        let counit_mult = pairs.par_iter().all(|&(a, b)| {
            self.counit(&self.mul_basis(a, b)) == &self.counit[a] * &self.counit[b]
        });
        rep.push("ε is an algebra map", counit_mult);

        let antipode = (0..d).into_par_iter().all(|b| {
            let target = Elem::term(self.unit, self.counit[b].clone());
            let mut l = Acc::new();
            let mut r = Acc::new();
            for (t, c) in self.comult[b].iter() {
                let (p, q) = (t / d, t % d);
                l.add_elem(&self.mul(&self.antipode[p], &e(q)), c);
                r.add_elem(&self.mul(&e(p), &self.antipode[q]), c);
            }
            l.finish() == target && r.finish() == target
        });
        rep.push("antipode", antipode);
        rep
    }

    /// JSON export with sparse triples and the scalar encoding of
    /// [`CycScalar::to_json`].
    pub fn to_json(&self) -> serde_json::Value {
        let d = self.dim();
        let triples = |rows: &mut dyn Iterator<Item = (usize, Elem)>| -> Vec<serde_json::Value> {
            rows.flat_map(|(k, el)| {
                el.0.into_iter().map(move |(i, c)| serde_json::json!([k, i, c.to_json()])).collect::<Vec<_>>()
            })
            .collect()
        };
        let mult = triples(&mut (0..d * d).map(|t| (t, self.mul_basis(t / d, t % d).into_owned())));
        let comult = triples(&mut (0..d).map(|b| (b, self.comult[b].clone())));
        let antipode = triples(&mut (0..d).map(|b| (b, self.antipode[b].clone())));
        serde_json::json!({
            "name": self.name,
            "dim": d,
            "field_order": self.order,
            "letters": self.letters,
            "basis": self.labels,
            "mult": mult,
            "comult": comult,
            "antipode": antipode,
        })
    }
}

/// Assembles a Hopf algebra from a monomial basis.
///
/// The product of basis elements comes from `mul`, Δ and ε are extended
/// multiplicatively from their values on the generators along `words`,
/// and the antipode is found by solving the antipode axiom.
pub(crate) struct MonomialSpec<'a> {
    pub name: String,
    pub order: u32,
    pub letters: Vec<String>,
    pub labels: Vec<Vec<u32>>,
    pub gens: Vec<(String, usize)>,
    pub words: Vec<Vec<usize>>,
    pub mul: &'a (dyn Fn(usize, usize) -> Elem + Sync),
    pub gen_comult: Vec<Elem>,
    pub gen_counit: Vec<CycScalar>,
}

impl MonomialSpec<'_> {
    pub fn build(self) -> Result<FDHopf> {
        let d = self.labels.len();
        let table: Vec<Elem> = (0..d * d).into_par_iter().map(|t| (self.mul)(t / d, t % d)).collect();
        let unit = self
            .labels
            .iter()
            .position(|l| l.iter().all(|&e| e == 0))
            .ok_or_else(|| Error::InvalidArgument("basis lacks the unit monomial".into()))?;
        let mut alg = FDHopf {
            name: self.name,
            order: self.order,
            labels: self.labels,
            letters: self.letters,
            gens: self.gens.iter().map(|(n, i)| (n.clone(), Elem::basis(*i))).collect(),
            words: self.words,
            product: Product::Table(table),
            unit,
            comult: Vec::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
        };
        let unit_t = Elem::basis(unit * d + unit);
        let comult: Vec<Elem> = alg
            .words
            .par_iter()
            .map(|w| w.iter().fold(unit_t.clone(), |acc, &g| alg.tensor_mul(&acc, &self.gen_comult[g])))
            .collect();
        let counit: Vec<CycScalar> = alg
            .words
            .iter()
            .map(|w| w.iter().fold(CycScalar::one(), |acc, &g| &acc * &self.gen_counit[g]))
            .collect();
        alg.comult = comult;
        alg.counit = counit;
        // sanity: the words really produce the basis
        for (b, w) in alg.words.iter().enumerate() {
            if alg.word(w) != Elem::basis(b) {
                return Err(Error::Verification(format!("word of basis element {b} is wrong")));
            }
        }
        alg.antipode = solve_antipode(&alg)?;
        Ok(alg)
    }
}

/// Solves `Σ S(b₁) b₂ = ε(b) 1` for the linear map `S`.
///
/// Unknowns are the coefficients `s[p][k]` of `S(e_p)` on `e_k`; the
/// system has a unique solution for a Hopf algebra.
pub fn solve_antipode(alg: &FDHopf) -> Result<Vec<Elem>> {
    let d = alg.dim();
    let n = d * d;
    let rows: Vec<Vec<(usize, CycScalar)>> = (0..d)
        .into_par_iter()
        .flat_map_iter(|b| {
            // equation (b, t) collects coefficient of e_t
            let mut eqs: Vec<Acc> = (0..d).map(|_| Acc::new()).collect();
            for (pq, c) in alg.comult[b].iter() {
                let (p, q) = (pq / d, pq % d);
                for k in 0..d {
                    for (t, x) in alg.mul_basis(k, q).iter() {
                        eqs[*t].add(p * d + k, c * x);
                    }
                }
            }
            eqs.into_iter().map(|a| a.finish().0).collect::<Vec<_>>()
        })
        .collect();
    let mut m = CycMatrix::zeros(rows.len(), n + 1);
    for (r, row) in rows.iter().enumerate() {
        for (u, c) in row {
            m[(r, *u)] = c.clone();
        }
        let (b, t) = (r / d, r % d);
        if t == alg.unit {
            m[(r, n)] = alg.counit[b].clone();
        }
    }
    let rr = m.rref();
    if rr.pivots.len() != n || rr.pivots.last() == Some(&n) {
        return Err(Error::Verification(format!("antipode system of {} has no unique solution", alg.name)));
    }
    let mut s: Vec<Acc> = (0..d).map(|_| Acc::new()).collect();
    for (row, &p) in rr.pivots.iter().enumerate() {
        let val = rr.matrix[(row, n)].clone();
        if !Field::is_zero(&val) {
            s[p / d].add(p % d, val);
        }
    }
    Ok(s.into_iter().map(Acc::finish).collect())
}
