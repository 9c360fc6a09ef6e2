use serde::Serialize;

use crate::cyclo::{root, CycScalar};

/// The generalized Dynkin diagram of `V_{i,j} ⊕ λ_{-i,-j}` for `n = 2`:
/// vertices `q11 = ξ^m = -1`, `q22 = ξ^{ij}`, edge `ξ^{-j-im}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dynkin2 {
    pub order: u32,
    pub q11: CycScalar,
    pub edge: CycScalar,
    pub q22: CycScalar,
    pub connected: bool,
    /// Exponents of `ξ` for the three labels, in `[0, nm)`.
    pub exponents: DiagramExponents,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramExponents {
    pub q11: i64,
    pub edge: i64,
    pub q22: i64,
}

pub fn dynkin(m: u32, i: u32, j: u32) -> Dynkin2 {
    dynkin_n(2, m, i, j)
}

/// The same diagram for any `n`, with `ξ` of order `nm` and `q11 = ξ^m`.
pub fn dynkin_n(n: u32, m: u32, i: u32, j: u32) -> Dynkin2 {
    let nm = (n * m) as i64;
    let (i, j, mm) = (i as i64, j as i64, m as i64);
    let e = DiagramExponents { q11: mm % nm, edge: (-j - i * mm).rem_euclid(nm), q22: (i * j).rem_euclid(nm) };
    Dynkin2 {
        order: nm as u32,
        q11: root(nm as u32, e.q11),
        edge: root(nm as u32, e.edge),
        q22: root(nm as u32, e.q22),
        connected: e.edge != 0,
        exponents: e,
    }
}

impl Dynkin2 {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "xi_order": self.order,
            "q11": self.exponents.q11,
            "edge": self.exponents.edge,
            "q22": self.exponents.q22,
            "connected": self.connected,
        })
    }
}

/// Finiteness read off a disconnected (edge `1`) or `-1`-edge diagram for
/// `n = 2`; `None` otherwise.
pub fn rank1_finite(m: u32, i: u32, j: u32) -> Option<bool> {
    let e = dynkin(m, i, j).exponents.edge;
    if e == m as i64 {
        // a vertex labelled 1 never occurs in an arithmetic diagram
        return Some(false);
    }
    rank1_finite_n(2, m, i, j)
}

/// The rank-one criterion for any `n`: if `ξ^{-j-im} = 1` (with `ξ` of
/// order `nm`) then `m | j` and the Nichols algebra is finite iff
/// `n ∤ i·j/m`.
pub fn rank1_finite_n(n: u32, m: u32, i: u32, j: u32) -> Option<bool> {
    let nm = (n * m) as i64;
    let (i, j, mm) = (i as i64, j as i64, m as i64);
    if (-j - i * mm).rem_euclid(nm) != 0 {
        return None;
    }
    debug_assert_eq!(j % mm, 0);
    Some((i * (j / mm)).rem_euclid(n as i64) != 0)
}

