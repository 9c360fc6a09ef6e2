use crate::cyclo::{root, CycMatrix, CycScalar};
use crate::error::{Error, Result};

/// A braided vector space: `c` on `V ⊗ V`, index `s * dim + t` for
/// `v_s ⊗ v_t` (columns are images).
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedSpace {
    pub dim: usize,
    pub c: CycMatrix,
}

impl BraidedSpace {
    /// Checks invertibility and the braid equation.
    pub fn new(dim: usize, c: CycMatrix) -> Result<Self> {
        let b = Self::unchecked(dim, c)?;
        if b.c.rank() != dim * dim {
            return Err(Error::Verification("braiding is not invertible".into()));
        }
        if !b.braid_equation() {
            return Err(Error::Verification("braid equation fails".into()));
        }
        Ok(b)
    }

    pub fn unchecked(dim: usize, c: CycMatrix) -> Result<Self> {
        if c.rows() != dim * dim || c.cols() != dim * dim {
            return Err(Error::ShapeMismatch(format!("braiding of a {dim}-dim space must be {0}×{0}", dim * dim)));
        }
        Ok(BraidedSpace { dim, c })
    }

    /// Diagonal type: `c(v_s ⊗ v_t) = q[s][t] v_t ⊗ v_s`.
    pub fn diagonal(q: &[Vec<CycScalar>]) -> Result<Self> {
        let d = q.len();
        if q.iter().any(|row| row.len() != d) {
            return Err(Error::ShapeMismatch("braiding matrix must be square".into()));
        }
        let mut c = CycMatrix::zeros(d * d, d * d);
        for s in 0..d {
            for t in 0..d {
                c[(t * d + s, s * d + t)] = q[s][t].clone();
            }
        }
        Self::new(d, c)
    }

    /// Diagonal type with entries `ζ_order^{e[s][t]}`.
    pub fn diagonal_roots(order: u32, e: &[Vec<i64>]) -> Result<Self> {
        let q: Vec<Vec<CycScalar>> = e.iter().map(|row| row.iter().map(|&k| root(order, k)).collect()).collect();
        Self::diagonal(&q)
    }

    /// The braiding matrix `q` when `c` is of diagonal type on this basis.
    pub fn as_diagonal(&self) -> Option<Vec<Vec<CycScalar>>> {
        let d = self.dim;
        let mut q = vec![vec![CycScalar::zero(); d]; d];
        for s in 0..d {
            for t in 0..d {
                for row in 0..d * d {
                    let x = &self.c[(row, s * d + t)];
                    if row == t * d + s {
                        q[s][t] = x.clone();
                    } else if !x.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(q)
    }

    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V^{⊗3}`.
    pub fn braid_equation(&self) -> bool {
        let id = CycMatrix::identity(self.dim);
        let c1 = self.c.kron(&id);
        let c2 = id.kron(&self.c);
        c1.mul(&c2).mul(&c1) == c2.mul(&c1).mul(&c2)
    }

    pub fn inverse(&self) -> Result<BraidedSpace> {
        Ok(BraidedSpace { dim: self.dim, c: self.c.inverse()? })
    }

    /// Sparse columns of `c`: `columns()[s*d+t]` lists `(row, entry)`.
    pub fn columns(&self) -> Vec<Vec<(usize, CycScalar)>> {
        let n = self.dim * self.dim;
        (0..n)
            .map(|col| (0..n).filter(|&r| !self.c[(r, col)].is_zero()).map(|r| (r, self.c[(r, col)].clone())).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c = &self.c;
        serde_json::json!({
            "dim": self.dim,
            "c": (0..c.rows()).map(|r| (0..c.cols()).map(|k| c[(r, k)].to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}
