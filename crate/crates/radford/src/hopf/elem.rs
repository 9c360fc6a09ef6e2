use std::collections::BTreeMap;

use crate::cyclo::CycScalar;

/// A sparse vector: sorted `(basis index, coefficient)` pairs, no zeros.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Elem(pub Vec<(usize, CycScalar)>);

impl Elem {
    pub fn zero() -> Self {
        Elem(Vec::new())
    }

    pub fn basis(i: usize) -> Self {
        Elem(vec![(i, CycScalar::one())])
    }

    pub fn term(i: usize, c: CycScalar) -> Self {
        if c.is_zero() {
            Elem::zero()
        } else {
            Elem(vec![(i, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, CycScalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, i: usize) -> CycScalar {
        match self.0.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.0[p].1.clone(),
            Err(_) => CycScalar::zero(),
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut acc = Acc::new();
        acc.add_elem(self, &CycScalar::one());
        acc.add_elem(other, &CycScalar::one());
        acc.finish()
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let mut acc = Acc::new();
        acc.add_elem(self, &CycScalar::one());
        acc.add_elem(other, &CycScalar::from_int(-1));
        acc.finish()
    }

    pub fn scale(&self, c: &CycScalar) -> Elem {
        if c.is_zero() {
            return Elem::zero();
        }
        Elem(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<CycScalar> {
        let mut v = vec![CycScalar::zero(); dim];
        for (i, c) in &self.0 {
            v[*i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[CycScalar]) -> Elem {
        Elem(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
    }
}

/// Accumulator for building an `Elem` out of many scaled contributions.
#[derive(Default)]
pub struct Acc(BTreeMap<usize, CycScalar>);

impl Acc {
    pub fn new() -> Self {
        Acc(BTreeMap::new())
    }

    pub fn add(&mut self, i: usize, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(x) => *x = &*x + &c,
            None => {
                self.0.insert(i, c);
            }
        }
    }

    pub fn add_elem(&mut self, e: &Elem, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_rational() && *c == CycScalar::one();
        for (i, x) in e.iter() {
            self.add(*i, if unit { x.clone() } else { x * c });
        }
    }

    pub fn finish(self) -> Elem {
        Elem(self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}
