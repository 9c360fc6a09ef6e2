use serde::Serialize;
use std::fmt;

/// A polynomial with natural coefficients, used for graded dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPoly {
    pub coeffs: Vec<u64>,
}

impl HilbertPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        HilbertPoly { coeffs }
    }

    /// `prod (n_i)_{t^{d_i}}` where `(n)_s = 1 + s + ... + s^(n-1)`.
    pub fn expand(factors: &[(u32, u32)]) -> Self {
        let mut acc = vec![1u64];
        for &(n, d) in factors {
            let d = d as usize;
            let mut next = vec![0u64; acc.len() + (n.max(1) as usize - 1) * d];
            for (i, &a) in acc.iter().enumerate() {
                for k in 0..n as usize {
                    next[i + k * d] += a;
                }
            }
            acc = next;
        }
        HilbertPoly::new(acc)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
