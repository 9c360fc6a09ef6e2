use serde::Serialize;

use crate::cyclo::{CycMatrix, CycScalar};
use crate::transport::BraidedSpace;

/// A positive braid word on `strands` strands; letter `i` is `σ_i`,
/// `1 ≤ i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<usize>,
}

impl BraidWord {
    /// The permutation obtained by swapping positions `i-1, i` of the
    /// identity arrangement for each letter in order.
    pub fn permutation(&self) -> Vec<usize> {
        let mut arr: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            arr.swap(l - 1, l);
        }
        arr
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The operator `c_{l_1} c_{l_2} ⋯ c_{l_r}` on `T^strands(V)`.
    pub fn operator(&self, c: &BraidedSpace) -> CycMatrix {
        let (d, k) = (c.dim, self.strands);
        let size = d.pow(k as u32);
        let cols = c.columns();
        let images: Vec<Vec<CycScalar>> = (0..size)
            .map(|j| {
                let mut v = vec![CycScalar::zero(); size];
                v[j] = CycScalar::one();
                self.letters.iter().rev().fold(v, |v, &l| apply_c(&v, d, k, l, &cols))
            })
            .collect();
        CycMatrix::from_cols(size, &images)
    }
}

/// Digits of a word index around positions `l-1, l` (1-based letter `l`).
pub(crate) fn split(idx: usize, d: usize, k: usize, l: usize) -> (usize, usize, usize, usize) {
    let low = d.pow((k - l - 1) as u32);
    let lo = idx % low;
    let rest = idx / low;
    let b = rest % d;
    let a = (rest / d) % d;
    let hi = rest / (d * d);
    (hi, a, b, lo)
}

pub(crate) fn join(hi: usize, a: usize, b: usize, lo: usize, d: usize, k: usize, l: usize) -> usize {
    let low = d.pow((k - l - 1) as u32);
    ((hi * d + a) * d + b) * low + lo
}

/// `c_l v` on `T^k(V)`, where `c_l` braids positions `l` and `l+1`.
pub fn apply_c(v: &[CycScalar], d: usize, k: usize, l: usize, cols: &[Vec<(usize, CycScalar)>]) -> Vec<CycScalar> {
    let mut out = vec![CycScalar::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (hi, a, b, lo) = split(idx, d, k, l);
        for (r, e) in &cols[a * d + b] {
            let j = join(hi, r / d, r % d, lo, d, k, l);
            out[j] = &out[j] + &(x * e);
        }
    }
    out
}

/// Bubble-sort reduced word of `perm` (a permutation of `0..n`): the
/// swaps that sort it, reversed. Its length is the inversion count.
pub fn matsumoto(perm: &[usize]) -> BraidWord {
    let mut arr = perm.to_vec();
    let mut swaps = Vec::new();
    let n = arr.len();
    for pass in 0..n {
        for i in 0..n.saturating_sub(pass + 1) {
            if arr[i] > arr[i + 1] {
                arr.swap(i, i + 1);
                swaps.push(i + 1);
            }
        }
    }
    swaps.reverse();
    BraidWord { strands: n, letters: swaps }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

pub fn inversions(perm: &[usize]) -> usize {
    (0..perm.len()).map(|i| (i + 1..perm.len()).filter(|&j| perm[i] > perm[j]).count()).sum()
}
