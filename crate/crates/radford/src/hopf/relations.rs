use std::fmt;

use crate::cyclo::{qnum, root, CycScalar};
use super::radford::gamma;

/// Generators of the double: `g, x` from `R`, and `X, A, U` from `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    G,
    Xs,
    XBig,
    A,
    U,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::G => "g",
            Gen::Xs => "x",
            Gen::XBig => "X",
            Gen::A => "A",
            Gen::U => "U",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Anything in which words over [`Gen`] can be evaluated.
pub trait WordAlgebra {
    type Value: Clone;
    fn one(&self) -> Self::Value;
    fn generator(&self, g: Gen) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, a: &Self::Value, c: &CycScalar) -> Self::Value;
    fn is_zero(&self, a: &Self::Value) -> bool;

    fn eval_word(&self, w: &[Gen]) -> Self::Value {
        w.iter().fold(self.one(), |acc, g| self.mul(&acc, &self.generator(*g)))
    }
}

/// A named linear combination of words that should vanish.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(CycScalar, Vec<Gen>)>,
}

impl Relation {
    pub fn new(name: impl Into<String>) -> Self {
        Relation { name: name.into(), terms: Vec::new() }
    }

    pub fn term(mut self, c: CycScalar, w: Vec<Gen>) -> Self {
        self.terms.push((c, w));
        self
    }

    /// Appends `c · (left word) · P · (right word)` for every term of `P`.
    pub fn sandwich(mut self, c: &CycScalar, left: &[Gen], p: &[(CycScalar, Vec<Gen>)], right: &[Gen]) -> Self {
        for (k, w) in p {
            let word: Vec<Gen> = left.iter().chain(w).chain(right).copied().collect();
            self.terms.push((c * k, word));
        }
        self
    }

    pub fn evaluate<W: WordAlgebra>(&self, alg: &W) -> W::Value {
        let mut acc: Option<W::Value> = None;
        for (c, w) in &self.terms {
            let v = alg.scale(&alg.eval_word(w), c);
            acc = Some(match acc {
                None => v,
                Some(a) => alg.add(&a, &v),
            });
        }
        acc.unwrap_or_else(|| alg.scale(&alg.one(), &CycScalar::zero()))
    }

    pub fn holds_in<W: WordAlgebra>(&self, alg: &W) -> bool {
        alg.is_zero(&self.evaluate(alg))
    }
}

fn pw(g: Gen, k: u32) -> Vec<Gen> {
    vec![g; k as usize]
}

fn cat(parts: &[&[Gen]]) -> Vec<Gen> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// `Γ(k) = 1 − ω^k U g` as a list of terms.
fn big_gamma(n: u32, m: u32, k: i64) -> Vec<(CycScalar, Vec<Gen>)> {
    let wk = root(n * m, m as i64 * k);
    vec![(CycScalar::one(), vec![]), (-&wk, vec![Gen::U, Gen::G])]
}

/// The defining relations of the double together with the derived
/// identities for products of `x`, `X` and `Γ(k)`.
pub fn double_relations(n: u32, m: u32) -> Vec<Relation> {
    use Gen::*;
    let nm = n * m;
    let one = CycScalar::one;
    let neg = || CycScalar::from_int(-1);
    let xi = |k: i64| root(nm, k);
    let w = |k: i64| root(nm, m as i64 * k);
    let mut rels = vec![
        // R with the opposite product: gx = ωxg in R reads xg = ωgx here
        Relation::new("x^n + g^n − 1 = 0").term(one(), pw(Xs, n)).term(one(), pw(G, n)).term(neg(), vec![]),
        Relation::new("g^{nm} = 1").term(one(), pw(G, nm)).term(neg(), vec![]),
        Relation::new("xg = ω gx").term(one(), vec![Xs, G]).term(-&w(1), vec![G, Xs]),
        Relation::new("U^n = 1").term(one(), pw(U, n)).term(neg(), vec![]),
        Relation::new("X^n = 0").term(one(), pw(XBig, n)),
        Relation::new("A^m = U").term(one(), pw(A, m)).term(neg(), vec![U]),
        Relation::new("UX = ω XU").term(one(), vec![U, XBig]).term(-&w(1), vec![XBig, U]),
        Relation::new("UA = AU").term(one(), vec![U, A]).term(neg(), vec![A, U]),
        Relation::new("AX = ξ XA").term(one(), vec![A, XBig]).term(-&xi(1), vec![XBig, A]),
        Relation::new("Ag = gA").term(one(), vec![A, G]).term(neg(), vec![G, A]),
        Relation::new("gX = ω Xg").term(one(), vec![G, XBig]).term(-&w(1), vec![XBig, G]),
        Relation::new("xX = ω Xx + (1 − Ug)")
            .term(one(), vec![Xs, XBig])
            .term(-&w(1), vec![XBig, Xs])
            .term(neg(), vec![])
            .term(one(), vec![U, G]),
        Relation::new("Ug = gU").term(one(), vec![U, G]).term(neg(), vec![G, U]),
        Relation::new("xU = ω Ux").term(one(), vec![Xs, U]).term(-&w(1), vec![U, Xs]),
        Relation::new("Xx = ω⁻¹(xX + Ug − 1)")
            .term(one(), vec![XBig, Xs])
            .term(-&w(-1), vec![Xs, XBig])
            .term(-&w(-1), vec![U, G])
            .term(w(-1), vec![]),
    ];
    // xA = ξAx + γ_{n,1} X^{n−1}(1 − ω^{n−1}Ug)A
    let g1 = gamma(n, m, 1);
    let xn1 = pw(XBig, n - 1);
    rels.push(
        Relation::new("xA = ξ Ax + γ_{n,1} X^{n−1}(1 − ω^{n−1}Ug)A")
            .term(one(), vec![Xs, A])
            .term(-&xi(1), vec![A, Xs])
            .term(-&g1, cat(&[&xn1, &[A]]))
            .term(&g1 * &w(n as i64 - 1), cat(&[&xn1, &[U, G, A]])),
    );
    // X^r x^s Γ(k) = Γ(k − 2r + 2s) X^r x^s
    for r in 0..n {
        for s in 0..n {
            for k in 1..=n as i64 {
                let mono = cat(&[&pw(XBig, r), &pw(Xs, s)]);
                let rel = Relation::new(format!("X^{r} x^{s} Γ({k}) = Γ({}) X^{r} x^{s}", k - 2 * r as i64 + 2 * s as i64))
                    .sandwich(&one(), &mono, &big_gamma(n, m, k), &[])
                    .sandwich(&neg(), &[], &big_gamma(n, m, k - 2 * r as i64 + 2 * s as i64), &mono);
                rels.push(rel);
            }
        }
    }
    let wq = w(1);
    for k in 1..=n {
        let kk = k as i64;
        // x X^k = ω^k X^k x + (k)_ω X^{k−1} Γ(k−1)
        rels.push(
            Relation::new(format!("x X^{k} = ω^{k} X^{k} x + ({k})_ω X^{} Γ({})", k - 1, k - 1))
                .term(one(), cat(&[&[Xs], &pw(XBig, k)]))
                .term(-&w(kk), cat(&[&pw(XBig, k), &[Xs]]))
                .sandwich(&-&qnum(k, &wq), &pw(XBig, k - 1), &big_gamma(n, m, kk - 1), &[]),
        );
        // x^k X = ω^k X x^k + (k)_ω Γ(k−1) x^{k−1}
        rels.push(
            Relation::new(format!("x^{k} X = ω^{k} X x^{k} + ({k})_ω Γ({}) x^{}", k - 1, k - 1))
                .term(one(), cat(&[&pw(Xs, k), &[XBig]]))
                .term(-&w(kk), cat(&[&[XBig], &pw(Xs, k)]))
                .sandwich(&-&qnum(k, &wq), &[], &big_gamma(n, m, kk - 1), &pw(Xs, k - 1)),
        );
        // (X^k x^k) A = A (X^k x^k)
        let mono = cat(&[&pw(XBig, k), &pw(Xs, k)]);
        rels.push(
            Relation::new(format!("(X^{k} x^{k}) A = A (X^{k} x^{k})"))
                .term(one(), cat(&[&mono, &[A]]))
                .term(neg(), cat(&[&[A], &mono])),
        );
    }
    rels
}
