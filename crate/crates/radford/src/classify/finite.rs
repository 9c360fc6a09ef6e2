use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::presentation::{presentation_for, verify_presentation, PresentationReport};
use super::table::{heck_match, heck_matches, HeckMatch};
use super::{dynkin, rank1_finite};
use crate::dmod::r_of;
use crate::error::{Error, Result};
use crate::nichols::{GradedDims, NicholsTower};
use crate::transport::{transport, Hosts};

/// Degree cap for the tower on pairs classified finite.
pub const FINITE_PROBE_DEGREE: usize = 128;
/// Degree cap for the tower on pairs classified infinite.
pub const INFINITE_PROBE_DEGREE: usize = 8;

/// Why a pair is (in)finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// Disconnected diagram: finite iff `2 ∤ i·j/m`.
    Rank1 { finite: bool },
    /// Edge `-1`: a vertex labelled `1` appears after reflection.
    EdgeMinusOne,
    Heck { row: super::HeckRow, witness: super::Witness },
    /// Connected, edge `≠ -1`, and no row matches.
    NoRow,
}

impl Certificate {
    pub fn finite(&self) -> bool {
        matches!(self, Certificate::Rank1 { finite: true } | Certificate::Heck { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            Certificate::Rank1 { finite } => format!("disconnected diagram, finite = {finite}"),
            Certificate::EdgeMinusOne => "edge -1".into(),
            Certificate::Heck { row, witness } => format!(
                "row {} with (m1,m2,a,b) = ({},{},{},{})",
                row.label(),
                witness.m1,
                witness.m2,
                witness.a,
                witness.b
            ),
            Certificate::NoRow => "no row matches".into(),
        }
    }
}

/// Classification by diagram and table alone.
pub fn certificate(m: u32, i: u32, j: u32) -> Certificate {
    let edge = dynkin(m, i, j).exponents.edge;
    if edge == m as i64 {
        return Certificate::EdgeMinusOne;
    }
    if let Some(finite) = rank1_finite(m, i, j) {
        return Certificate::Rank1 { finite };
    }
    match heck_match(m, i, j) {
        Some(HeckMatch { row, witness }) => Certificate::Heck { row, witness },
        None => Certificate::NoRow,
    }
}

/// Whether `B(F(V_{i,j}))` is finite-dimensional, from the certificate.
pub fn is_finite(m: u32, i: u32, j: u32) -> bool {
    certificate(m, i, j).finite()
}

/// How the computed graded dimensions relate to the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Probe {
    Agrees { dims: GradedDims },
    /// The tower neither truncated nor contradicted the certificate
    /// before hitting the budget or the degree cap.
    Inconclusive { reason: String, dims: Option<GradedDims> },
}

impl Probe {
    pub fn dims(&self) -> Option<&GradedDims> {
        match self {
            Probe::Agrees { dims } => Some(dims),
            Probe::Inconclusive { dims, .. } => dims.as_ref(),
        }
    }
}

fn build_within(hosts: &Hosts, i: u32, j: u32, max_deg: usize, budget: usize) -> Result<(Option<GradedDims>, String)> {
    let c = transport(hosts, i, j)?.braiding()?;
    // grow the cap so that a budget stop still leaves the lower degrees
    let mut best = None;
    let mut deg = 8.min(max_deg);
    loop {
        match NicholsTower::build(&c, deg, budget) {
            Ok(t) => {
                let g = t.dims();
                if g.truncated || deg == max_deg {
                    let why = if g.truncated { String::new() } else { format!("no truncation by degree {deg}") };
                    return Ok((Some(g), why));
                }
                best = Some(g);
                deg = (2 * deg).min(max_deg);
            }
            Err(Error::CapacityExceeded { needed, budget }) => {
                return Ok((best, format!("budget {budget} exceeded (needed {needed})")));
            }
            Err(e) => return Err(e),
        }
    }
}

/// Runs the tower on the transported braiding and compares with the
/// certificate; truncation of a pair classified infinite is an error.
pub fn probe(hosts: &Hosts, i: u32, j: u32, finite: bool, budget: usize) -> Result<Probe> {
    let cap = if finite { FINITE_PROBE_DEGREE } else { INFINITE_PROBE_DEGREE };
    let (dims, why) = build_within(hosts, i, j, cap, budget)?;
    match dims {
        Some(g) if g.truncated && !finite => Err(Error::Verification(format!(
            "V_{{{i},{j}}} classified infinite but its Nichols algebra has graded dims {:?}",
            g.dims
        ))),
        Some(g) if g.truncated == finite => Ok(Probe::Agrees { dims: g }),
        dims => Ok(Probe::Inconclusive { reason: why, dims }),
    }
}

/// One row of the classification report.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub m: u32,
    pub i: u32,
    pub j: u32,
    pub dim_module: u32,
    pub certificate: Certificate,
    pub probe: Option<Probe>,
    pub presentation: Option<PresentationReport>,
}

impl PairReport {
    pub fn finite(&self) -> bool {
        self.certificate.finite()
    }

    pub fn nichols_dims(&self) -> Option<&GradedDims> {
        self.probe.as_ref().and_then(|p| p.dims()).filter(|g| g.truncated)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "i": self.i,
            "j": self.j,
            "dim_module": self.dim_module,
            "diagram": dynkin(self.m, self.i, self.j).to_json(),
            "finite": self.finite(),
            "certificate": self.certificate,
            "certificate_text": self.certificate.describe(),
        });
        let obj = v.as_object_mut().expect("object");
        if let Some(p) = &self.probe {
            obj.insert("probe".into(), serde_json::to_value(p).expect("serializable"));
        }
        if let Some(g) = self.nichols_dims() {
            obj.insert("nichols_dims".into(), g.to_json());
        }
        if let Some(r) = &self.presentation {
            obj.insert("presentation_verified".into(), r.passed().into());
            obj.insert("presentation".into(), r.to_json(2 * self.m));
        }
        v
    }
}

/// What [`classify_pair`] computes beyond the certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub probe: bool,
    pub presentations: bool,
    pub budget: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { probe: true, presentations: true, budget: crate::nichols::DEFAULT_BUDGET }
    }
}

pub fn classify_pair(hosts: &Hosts, i: u32, j: u32, opts: ClassifyOptions) -> Result<PairReport> {
    let m = hosts.m;
    let nm = 2 * m;
    if hosts.n != 2 || i >= nm || j >= nm {
        return Err(Error::Precondition(format!("need n = 2 and 0 ≤ i, j < {nm}")));
    }
    let certificate = certificate(m, i, j);
    let probe = if opts.probe { Some(probe(hosts, i, j, certificate.finite(), opts.budget)?) } else { None };
    let presentation = match (opts.presentations && certificate.finite(), presentation_for(m, i, j)?) {
        (true, Some(spec)) => {
            let c = transport(hosts, i, j)?.braiding()?;
            Some(verify_presentation(&spec, &c, opts.budget)?)
        }
        _ => None,
    };
    Ok(PairReport { m, i, j, dim_module: r_of(2, m, i, j), certificate, probe, presentation })
}

/// All `(2m)²` pairs, in lexicographic order.
pub fn classify_all(hosts: &Hosts, opts: ClassifyOptions) -> Result<Vec<PairReport>> {
    let nm = 2 * hosts.m;
    let pairs: Vec<(u32, u32)> = (0..nm).flat_map(|i| (0..nm).map(move |j| (i, j))).collect();
    pairs.par_iter().map(|&(i, j)| classify_pair(hosts, i, j, opts)).collect()
}

/// The finite pairs and Nichols dimensions expected for `m = 2, 3`.
pub fn expected_finite(m: u32) -> Option<BTreeMap<(u32, u32), usize>> {
    let list: &[((u32, u32), usize)] = match m {
        2 => &[((1, 2), 2), ((3, 2), 2), ((3, 1), 8), ((3, 3), 8), ((2, 1), 8), ((2, 3), 8)],
        3 => &[
            ((1, 3), 2),
            ((3, 3), 2),
            ((5, 3), 2),
            ((4, 2), 6),
            ((4, 4), 6),
            ((3, 1), 6),
            ((3, 5), 6),
            ((2, 2), 36),
            ((2, 4), 36),
            ((5, 1), 36),
            ((5, 5), 36),
            ((5, 2), 18),
            ((5, 4), 18),
            ((2, 1), 18),
            ((2, 5), 18),
        ],
        _ => return None,
    };
    Some(list.iter().copied().collect())
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub m: u32,
    pub pairs: Vec<PairReport>,
    pub finite: BTreeSet<(u32, u32)>,
    pub expected: BTreeMap<(u32, u32), usize>,
    pub failures: Vec<String>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let finite: Vec<serde_json::Value> = self
            .pairs
            .iter()
            .filter(|p| p.finite())
            .map(|p| {
                serde_json::json!({
                    "i": p.i,
                    "j": p.j,
                    "dim_module": p.dim_module,
                    "certificate": p.certificate.describe(),
                    "nichols_dims": p.nichols_dims().map(|g| g.dims.clone()),
                    "nichols_total": p.nichols_dims().map(|g| g.total()),
                    "presentation": p.presentation.as_ref().map(|r| r.family.label()),
                    "presentation_verified": p.presentation.as_ref().map(|r| r.passed()),
                })
            })
            .collect();
        serde_json::json!({
            "m": self.m,
            "finite": finite,
            "finite_count": self.finite.len(),
            "pairs": (2 * self.m).pow(2),
            "failures": self.failures,
            "passed": self.passed(),
        })
    }
}

/// Classifies every pair for `m ∈ {2, 3}` and compares with the known
/// list: the finite set, the Nichols dimensions, truncation, and each
/// available presentation.
pub fn reproduce(m: u32, budget: usize) -> Result<Reproduction> {
    let expected = expected_finite(m).ok_or_else(|| Error::InvalidArgument(format!("no reference list for m = {m}")))?;
    let hosts = Hosts::new(2, m)?;
    let pairs = classify_all(&hosts, ClassifyOptions { probe: true, presentations: true, budget })?;
    let finite: BTreeSet<(u32, u32)> = pairs.iter().filter(|p| p.finite()).map(|p| (p.i, p.j)).collect();
    let mut failures = Vec::new();
    let want: BTreeSet<(u32, u32)> = expected.keys().copied().collect();
    if finite != want {
        failures.push(format!("finite set {finite:?} differs from {want:?}"));
    }
    for p in pairs.iter().filter(|p| p.finite()) {
        match (p.nichols_dims(), expected.get(&(p.i, p.j))) {
            (Some(g), Some(&d)) if g.total() != d => {
                failures.push(format!("({},{}): Nichols dimension {} instead of {d}", p.i, p.j, g.total()))
            }
            (None, _) => failures.push(format!("({},{}): graded dims did not truncate", p.i, p.j)),
            _ => {}
        }
        match &p.presentation {
            Some(r) if !r.passed() => failures.push(format!("({},{}): presentation fails: {:?}", p.i, p.j, r.failures)),
            None => failures.push(format!("({},{}): no presentation", p.i, p.j)),
            _ => {}
        }
    }
    Ok(Reproduction { m, pairs, finite, expected, failures })
}

pub fn reproduce_thm22(budget: usize) -> Result<Reproduction> {
    reproduce(2, budget)
}

pub fn reproduce_thm23(budget: usize) -> Result<Reproduction> {
    reproduce(3, budget)
}

/// `(i, j) ↦ (1 - i, m - j)` mod `2m`, an involution inverting the edge.
pub fn dual_pair(m: u32, i: u32, j: u32) -> (u32, u32) {
    let nm = 2 * m as i64;
    ((1 - i as i64).rem_euclid(nm) as u32, (m as i64 - j as i64).rem_euclid(nm) as u32)
}

/// Pairs violating the duality of the table: `(i, j)` and its dual match
/// rows with the same `k`, and a row with a single `ℓ` is sent to one with
/// a different single `ℓ`. Rows listing two values of `ℓ` are compared by
/// `k` only.
pub fn dual_symmetry_violations(m: u32) -> Vec<(u32, u32)> {
    let nm = 2 * m;
    let mut bad = Vec::new();
    for i in 0..nm {
        for j in 0..nm {
            let (di, dj) = dual_pair(m, i, j);
            let here = heck_matches(m, i, j);
            let there = heck_matches(m, di, dj);
            let ks = |v: &[HeckMatch]| v.iter().map(|h| h.row.k).collect::<BTreeSet<_>>();
            let mut ok = ks(&here) == ks(&there);
            for h in here.iter().filter(|h| h.row.ells.len() == 1) {
                ok &= there.iter().any(|t| t.row.k == h.row.k && t.row.ells.len() == 1 && t.row.ells != h.row.ells);
            }
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}
