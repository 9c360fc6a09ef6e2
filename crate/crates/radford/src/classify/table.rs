use num_integer::Integer;
use serde::Serialize;

/// Parameters `(m1, m2, a, b)` with `m = m1·m2` that realize a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m1: u32,
    pub m2: u32,
    pub a: i64,
    pub b: i64,
}

/// A row of the table of rank-two diagrams attached to `V_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeckRow {
    /// Position in the table, from 1.
    pub index: usize,
    pub k: u32,
    /// The second index; two entries when the row does not separate them.
    pub ells: &'static [u32],
}

impl HeckRow {
    pub fn label(&self) -> String {
        let ells: Vec<String> = self.ells.iter().map(|l| l.to_string()).collect();
        format!("({},{})", self.k, ells.join("|"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeckMatch {
    pub row: HeckRow,
    pub witness: Witness,
}

/// `m1` either ranges over divisors `≠ 1` or is fixed by the row.
#[derive(Clone, Copy)]
enum M1 {
    Free,
    Fixed(u32),
}

type Pred = fn(&Witness) -> bool;
type Pos = fn(&Witness) -> Option<(i64, i64)>;

struct RowDef {
    row: HeckRow,
    m1: M1,
    /// Unreduced `(i, j)` for the witness, `None` when not integral.
    pos: &'static [Pos],
    cond: Pred,
}

fn odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

fn coprime(x: i64, y: i64) -> bool {
    x.gcd(&y) == 1
}

const ROWS: &[RowDef] = &[
    RowDef {
        row: HeckRow { index: 1, k: 2, ells: &[1] },
        m1: M1::Free,
        pos: &[|w| Some((1 - w.m1 as i64 * w.a, w.m2 as i64 * (w.m1 as i64 - w.b)))],
        cond: |w| coprime(w.m1 as i64, w.b) && odd(w.a) && odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 2, k: 2, ells: &[2] },
        m1: M1::Free,
        pos: &[|w| Some((w.m1 as i64 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(w.m1 as i64, w.b) && odd(w.a) && odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 3, k: 4, ells: &[1, 2] },
        m1: M1::Free,
        pos: &[|w| {
            let t = w.m1 as i64 * w.a + 1;
            (t % 2 == 0).then(|| (t / 2, w.m2 as i64 * w.b))
        }],
        cond: |w| {
            let i = (w.m1 as i64 * w.a + 1) / 2;
            coprime(w.m1 as i64, w.b) && odd(w.a) && odd(w.m1 as i64) && (w.b - i).rem_euclid(2) == 0
        },
    },
    RowDef {
        row: HeckRow { index: 4, k: 6, ells: &[1, 2] },
        m1: M1::Fixed(3),
        pos: &[|w| Some((3 * w.a - 1, w.m2 as i64 * w.b))],
        cond: |w| coprime(3, w.b) && (w.b - w.a).rem_euclid(2) == 0,
    },
    RowDef {
        row: HeckRow { index: 5, k: 7, ells: &[2, 3] },
        m1: M1::Fixed(6),
        pos: &[|w| Some((4 + 12 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(6, w.b),
    },
    RowDef {
        row: HeckRow { index: 6, k: 7, ells: &[4, 5] },
        m1: M1::Fixed(6),
        pos: &[|w| Some((9 + 12 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(6, w.b),
    },
    RowDef {
        row: HeckRow { index: 7, k: 9, ells: &[2] },
        m1: M1::Fixed(9),
        pos: &[|w| Some((12 + 18 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(3, w.b) && !odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 8, k: 9, ells: &[3] },
        m1: M1::Fixed(9),
        pos: &[|w| Some((7 + 18 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(3, w.b) && odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 9, k: 11, ells: &[2] },
        m1: M1::Fixed(4),
        pos: &[|w| Some((2 + 8 * w.a, w.m2 as i64 * w.b))],
        cond: |w| odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 10, k: 11, ells: &[3] },
        m1: M1::Fixed(4),
        pos: &[|w| Some((7 + 8 * w.a, w.m2 as i64 * w.b))],
        cond: |w| odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 11, k: 12, ells: &[3] },
        m1: M1::Fixed(12),
        pos: &[|w| Some((8 + 24 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(12, w.b),
    },
    RowDef {
        row: HeckRow { index: 12, k: 12, ells: &[4] },
        m1: M1::Fixed(12),
        pos: &[|w| Some((17 + 24 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(12, w.b),
    },
    RowDef {
        row: HeckRow { index: 13, k: 13, ells: &[1] },
        m1: M1::Fixed(5),
        pos: &[|w| Some((2 + 10 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(5, w.b) && !odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 14, k: 13, ells: &[2] },
        m1: M1::Fixed(5),
        pos: &[|w| Some((9 + 10 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(5, w.b) && odd(w.b),
    },
    RowDef {
        row: HeckRow { index: 15, k: 14, ells: &[1, 2] },
        m1: M1::Fixed(10),
        pos: &[|w| Some((17 + 20 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(10, w.b),
    },
    RowDef {
        row: HeckRow { index: 16, k: 14, ells: &[3, 4] },
        m1: M1::Fixed(10),
        pos: &[|w| Some((4 + 20 * w.a, w.m2 as i64 * w.b))],
        cond: |w| coprime(10, w.b),
    },
    // the last two rows have two shapes; `b` plays the role of `c` in the
    // second, with the opposite parity
    RowDef {
        row: HeckRow { index: 17, k: 15, ells: &[3] },
        m1: M1::Fixed(15),
        pos: &[
            |w| (!odd(w.b)).then(|| (25 + 30 * w.a, w.m2 as i64 * w.b)),
            |w| odd(w.b).then(|| (10 + 30 * w.a, w.m2 as i64 * w.b)),
        ],
        cond: |w| coprime(15, w.b),
    },
    RowDef {
        row: HeckRow { index: 18, k: 15, ells: &[4] },
        m1: M1::Fixed(15),
        pos: &[
            |w| odd(w.b).then(|| (6 + 30 * w.a, w.m2 as i64 * w.b)),
            |w| (!odd(w.b)).then(|| (21 + 30 * w.a, w.m2 as i64 * w.b)),
        ],
        cond: |w| coprime(15, w.b),
    },
];

/// All rows, in table order.
pub fn heck_rows() -> Vec<HeckRow> {
    ROWS.iter().map(|r| r.row).collect()
}

/// Whether `(m1, m2, a, b)` satisfies the conditions of row `index`
/// and lands on `(i, j)` modulo `2m`.
pub fn row_realizes(index: usize, m: u32, w: &Witness, i: u32, j: u32) -> bool {
    let Some(def) = ROWS.iter().find(|r| r.row.index == index) else { return false };
    let nm = 2 * m as i64;
    if w.m1 * w.m2 != m || !(def.cond)(w) {
        return false;
    }
    match def.m1 {
        M1::Free if w.m1 == 1 => return false,
        M1::Fixed(f) if w.m1 != f => return false,
        _ => {}
    }
    def.pos.iter().any(|p| p(w).is_some_and(|(x, y)| x.rem_euclid(nm) == i as i64 && y.rem_euclid(nm) == j as i64))
}

/// All rows realized by `(m, i, j)`, each with its first witness.
/// Parameters `a, b` run over `[0, 4m)`, enough to cover every residue
/// the formulas can take.
pub fn heck_matches(m: u32, i: u32, j: u32) -> Vec<HeckMatch> {
    let span = 4 * m as i64;
    let mut out = Vec::new();
    for def in ROWS {
        let m1s: Vec<u32> = match def.m1 {
            M1::Free => (2..=m).filter(|d| m % d == 0).collect(),
            M1::Fixed(f) if m % f == 0 => vec![f],
            M1::Fixed(_) => vec![],
        };
        'row: for m1 in m1s {
            for a in 0..span {
                for b in 0..span {
                    let w = Witness { m1, m2: m / m1, a, b };
                    if row_realizes(def.row.index, m, &w, i, j) {
                        out.push(HeckMatch { row: def.row, witness: w });
                        break 'row;
                    }
                }
            }
        }
    }
    out
}

/// The first row matched by `(m, i, j)`, for connected diagrams.
pub fn heck_match(m: u32, i: u32, j: u32) -> Option<HeckMatch> {
    if !super::dynkin(m, i, j).connected {
        return None;
    }
    heck_matches(m, i, j).into_iter().next()
}
