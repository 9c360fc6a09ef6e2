use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::CycScalar;

/// A noncommutative polynomial in the letters `v_0, …, v_{d-1}`; a word
/// is the sequence of letter indices, read left to right as a tensor.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct NcPoly {
    pub terms: BTreeMap<Vec<usize>, CycScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(CycScalar::one(), vec![])
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(CycScalar::one(), vec![i])
    }

    pub fn monomial(c: CycScalar, word: Vec<usize>) -> Self {
        let mut p = NcPoly::zero();
        if !c.is_zero() {
            p.terms.insert(word, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Vec<usize>, c: CycScalar) {
        let e = self.terms.entry(w).or_insert_with(CycScalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.scale(&-CycScalar::one()))
    }

    pub fn scale(&self, s: &CycScalar) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> NcPoly {
        (0..k).fold(NcPoly::one(), |acc, _| acc.mul(self))
    }

    /// `ab − s·ba`.
    pub fn bracket(a: &NcPoly, b: &NcPoly, s: &CycScalar) -> NcPoly {
        a.mul(b).sub(&b.mul(a).scale(s))
    }

    /// The degree when every term has the same length.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(|w| w.len());
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// Dense coefficient vector on `T^k(V)`, index base `d`, first letter
    /// most significant.
    pub fn to_tensor(&self, d: usize) -> Option<(usize, Vec<CycScalar>)> {
        let k = self.homogeneous_degree()?;
        let mut v = vec![CycScalar::zero(); d.pow(k as u32)];
        for (w, c) in &self.terms {
            let idx = w.iter().fold(0, |acc, &l| acc * d + l);
            v[idx] = c.clone();
        }
        Some((k, v))
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|l| format!("v{l}")).collect::<Vec<_>>().join("")
                };
                format!("({c})·{word}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
