use super::scalar::CycScalar;
use crate::error::{Error, Result};

/// `(k)_q = 1 + q + ... + q^(k-1)`.
pub fn qnum(k: u32, q: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::zero();
    let mut p = CycScalar::one();
    for _ in 0..k {
        acc = &acc + &p;
        p = &p * q;
    }
    acc
}

/// `(k)_q! = (1)_q (2)_q ... (k)_q`, with `(0)_q! = 1`.
pub fn qfact(k: u32, q: &CycScalar) -> CycScalar {
    (1..=k).fold(CycScalar::one(), |acc, i| &acc * &qnum(i, q))
}

/// Gaussian binomial through the q-Pascal rule, so it stays defined when
/// `q` is a root of unity and the factorial quotient would divide by zero.
pub fn qbinom(n: u32, k: u32, q: &CycScalar) -> Result<CycScalar> {
    if k > n {
        return Err(Error::InvalidArgument(format!("binomial ({n} choose {k}) with k > n")));
    }
    // row[j] = binom(i, j)_q, updated with binom(i+1, j) = binom(i, j-1) + q^j binom(i, j)
    let mut row = vec![CycScalar::one()];
    for i in 0..n {
        let mut next = vec![CycScalar::one(); i as usize + 2];
        let mut qj = q.clone();
        for j in 1..=i as usize {
            next[j] = &row[j - 1] + &(&qj * &row[j]);
            qj = &qj * q;
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}
