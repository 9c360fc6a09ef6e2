use proptest::prelude::*;

use radford::classify::*;
use radford::cyclo::root;
use radford::nichols::{poly_member, DEFAULT_BUDGET};
use radford::transport::{transport, Hosts};

#[test]
fn diagrams() {
    let d = dynkin(2, 3, 1);
    assert_eq!(d.edge, root(4, 1));
    assert_eq!(d.q22, root(4, 3));
    assert!(d.connected);
    assert!(!dynkin(2, 1, 2).connected);
    for m in 2..=6 {
        for i in 0..2 * m {
            for j in 0..2 * m {
                assert_eq!(dynkin(m, i, j).q11, root(2, 1));
            }
        }
    }
}

#[test]
fn rank_one() {
    assert_eq!(rank1_finite(2, 1, 2), Some(true));
    assert_eq!(rank1_finite(2, 0, 0), Some(false));
    assert_eq!(rank1_finite(2, 2, 2), Some(false));
    assert_eq!(rank1_finite(2, 3, 1), None);
    // n = 3, m = 2: edge 1 means j + 2i ≡ 0 mod 6, finite iff 3 ∤ i·j/2
    assert_eq!(rank1_finite_n(3, 2, 2, 2), Some(true));
    assert_eq!(rank1_finite_n(3, 2, 1, 4), Some(true));
    assert_eq!(rank1_finite_n(3, 2, 3, 0), Some(false));
    assert_eq!(rank1_finite_n(3, 2, 1, 2), None);
}

#[test]
fn table_matches() {
    let h = heck_match(2, 3, 1).unwrap();
    assert_eq!((h.row.k, h.row.ells), (2, &[1u32][..]));
    assert_eq!(h.witness, Witness { m1: 2, m2: 1, a: 1, b: 1 });
    assert_eq!(heck_match(3, 2, 2).unwrap().row.k, 4);
    assert!(heck_match(2, 1, 1).is_none());
    assert!(heck_match(2, 1, 2).is_none());
}

#[test]
fn witnesses_land_on_their_pair() {
    for m in [2u32, 3, 4, 6] {
        for i in 0..2 * m {
            for j in 0..2 * m {
                let d = dynkin(m, i, j);
                for h in heck_matches(m, i, j) {
                    assert!(row_realizes(h.row.index, m, &h.witness, i, j));
                    assert!(d.connected, "({i},{j}) is disconnected but matches {}", h.row.label());
                }
                // the two criteria never overlap
                assert!(rank1_finite(m, i, j).is_none() || heck_match(m, i, j).is_none());
            }
        }
    }
}

#[test]
fn finiteness() {
    assert!(is_finite(2, 3, 3));
    assert!(matches!(certificate(2, 3, 3), Certificate::Heck { row, .. } if row.k == 2 && row.ells == [1]));
    assert!(!is_finite(3, 0, 1));
    let count = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| is_finite(2, i, j)).count();
    assert_eq!(count, 6);
}

#[test]
fn probe_agrees_on_small_m() {
    for m in [2u32, 3] {
        let hosts = Hosts::new(2, m).unwrap();
        let opts = ClassifyOptions { probe: true, presentations: false, budget: DEFAULT_BUDGET };
        for p in classify_all(&hosts, opts).unwrap() {
            assert!(matches!(p.probe, Some(Probe::Agrees { .. })), "({m},{},{}) {:?}", p.i, p.j, p.probe);
            assert_eq!(p.nichols_dims().is_some(), p.finite());
        }
    }
}

#[test]
fn presentations() {
    let s = presentation_for(2, 2, 1).unwrap().unwrap();
    assert_eq!(s.family, Family::Row22);
    assert_eq!(s.expected_dim, 8);
    // v0v1 - ξ v1v0 with ξ = ζ_4
    let rel = &s.relations[2].poly;
    assert_eq!(rel.terms[&vec![0, 1]], root(4, 0));
    assert_eq!(rel.terms[&vec![1, 0]], -root(4, 1));
    assert_eq!(s.relations[1].poly.homogeneous_degree(), Some(4));

    let s = presentation_for(3, 2, 2).unwrap().unwrap();
    assert_eq!((s.family, s.expected_dim), (Family::Row4Even, 36));
    let s = presentation_for(3, 2, 1).unwrap().unwrap();
    assert_eq!((s.family, s.expected_dim), (Family::Row6, 18));
    assert_eq!(s.expected_hilbert.coeffs, vec![1, 2, 4, 4, 4, 2, 1]);
    assert_eq!(presentation_for(6, 4, 1).unwrap().unwrap().expected_dim, 72);
    // infinite pairs and rows past the fifth have none
    assert!(presentation_for(2, 1, 1).unwrap().is_none());
    assert!(presentation_for(4, 7, 1).unwrap().is_none());
    for m in [2u32, 3, 6] {
        for i in 0..2 * m {
            for j in 0..2 * m {
                if let Some(s) = presentation_for(m, i, j).unwrap() {
                    assert_eq!(s.expected_hilbert.total(), s.expected_dim);
                    assert_eq!(s.pbw_bounds.iter().map(|(_, b)| *b as u64).product::<u64>(), s.expected_dim);
                }
            }
        }
    }
}

fn verified(m: u32, i: u32, j: u32) -> PresentationReport {
    let spec = presentation_for(m, i, j).unwrap().unwrap();
    let c = transport(&Hosts::new(2, m).unwrap(), i, j).unwrap().braiding().unwrap();
    let r = verify_presentation(&spec, &c, DEFAULT_BUDGET).unwrap();
    assert!(r.passed(), "({m},{i},{j}): {:?}", r.failures);
    r
}

#[test]
fn presentations_verify() {
    let r = verified(2, 3, 1);
    assert_eq!(r.dims.total(), 8);
    assert!(r.displayed_relations.iter().all(|(_, ok)| *ok));

    let r = verified(3, 2, 1);
    assert_eq!(r.dims.dims, vec![1, 2, 4, 4, 4, 2, 1, 0]);

    // relations without a displayed braiding must hold on the transported one
    let r = verified(2, 2, 1);
    assert_eq!(r.braiding_match, BraidingMatch::NotDisplayed);
    assert!(r.reconciliation.is_some());

    let r = verified(3, 2, 2);
    assert_eq!(r.dims.total(), 36);
    assert!(r.reconciliation.as_ref().is_some_and(|x| x.reversed));
}

#[test]
fn largest_presentation() {
    let r = verified(6, 4, 1);
    assert_eq!(r.dims.total(), 72);
    assert_eq!(r.family, Family::Row7);
    let spec = presentation_for(6, 4, 1).unwrap().unwrap();
    let shown = spec.braiding.unwrap();
    let degrees: Vec<usize> = spec.relations.iter().map(|r| r.poly.homogeneous_degree().unwrap()).collect();
    assert_eq!(degrees, vec![3, 3, 4, 4]);
    for r in &spec.relations {
        assert!(poly_member(&shown, &r.poly, DEFAULT_BUDGET).unwrap(), "{}", r.label);
    }
}

#[test]
fn a_wrong_relation_is_caught() {
    let mut spec = presentation_for(3, 2, 1).unwrap().unwrap();
    spec.relations[0].poly = spec.relations[0].poly.add(&radford::nichols::NcPoly::monomial(root(6, 1), vec![0, 1, 1]));
    let c = transport(&Hosts::new(2, 3).unwrap(), 2, 1).unwrap().braiding().unwrap();
    let r = verify_presentation(&spec, &c, DEFAULT_BUDGET).unwrap();
    assert!(!r.passed());

    let mut spec = presentation_for(3, 2, 1).unwrap().unwrap();
    spec.expected_dim = 17;
    assert!(!verify_presentation(&spec, &c, DEFAULT_BUDGET).unwrap().passed());
}

#[test]
fn reproductions() {
    let r = reproduce_thm22(DEFAULT_BUDGET).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    let want: Vec<(u32, u32)> = vec![(1, 2), (2, 1), (2, 3), (3, 1), (3, 2), (3, 3)];
    assert_eq!(r.finite.iter().copied().collect::<Vec<_>>(), want);
    let mut totals: Vec<usize> = r.pairs.iter().filter_map(|p| p.nichols_dims().map(|g| g.total())).collect();
    totals.sort();
    assert_eq!(totals, vec![2, 2, 8, 8, 8, 8]);

    let r = reproduce_thm23(DEFAULT_BUDGET).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.finite.len(), 15);
    for p in r.pairs.iter().filter(|p| p.finite()) {
        assert_eq!(p.nichols_dims().unwrap().total(), r.expected[&(p.i, p.j)]);
        assert!(p.presentation.as_ref().unwrap().passed());
    }
}

#[test]
fn duality() {
    for m in [2u32, 3, 4, 6] {
        assert!(dual_symmetry_violations(m).is_empty(), "m = {m}");
    }
    assert_eq!(dual_pair(2, 3, 1), (2, 1));
}

#[test]
fn report_json() {
    let hosts = Hosts::new(2, 2).unwrap();
    let p = classify_pair(&hosts, 3, 1, ClassifyOptions::default()).unwrap();
    let v = p.to_json();
    assert_eq!(v["finite"], true);
    assert_eq!(v["diagram"]["edge"], 1);
    assert_eq!(v["nichols_dims"]["total"], 8);
    assert_eq!(v["presentation_verified"], true);
    let q = classify_pair(&hosts, 1, 1, ClassifyOptions::default()).unwrap().to_json();
    assert_eq!(q["finite"], false);
    assert!(q.get("nichols_dims").is_none());
    assert!(classify_pair(&hosts, 4, 0, ClassifyOptions::default()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_pair_is_an_involution(m in 2u32..20, i in 0u32..40, j in 0u32..40) {
        let (i, j) = (i % (2 * m), j % (2 * m));
        let (a, b) = dual_pair(m, i, j);
        prop_assert_eq!(dual_pair(m, a, b), (i, j));
        // the edge is inverted
        let e = dynkin(m, i, j).exponents.edge;
        prop_assert_eq!((e + dynkin(m, a, b).exponents.edge) % (2 * m as i64), 0);
    }
}
