use proptest::prelude::*;
use radford::cyclo::root;
use radford::dmod::{build_simple, r_of};
use radford::hopf::Elem;
use radford::transport::*;
use radford::CycScalar;

#[test]
fn dual_basis_matches_closed_form() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for (b, u) in hs.dual.iter().enumerate() {
            let l = &hs.h.labels[b];
            assert_eq!(*u, hs.dual_closed_form(l[0], l[1]), "({n},{m}) u_{{{},{}}}", l[0], l[1]);
            for c in 0..hs.h.dim() {
                let want = if b == c { CycScalar::one() } else { CycScalar::zero() };
                assert_eq!(hs.pairing.pair(&Elem::basis(c), u), want);
            }
        }
    }
}

#[test]
fn first_step_matches_the_displayed_coaction() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for i in 0..n * m {
            for j in 0..n * m {
                let y = f1(&hs, &build_simple(n, m, i, j).unwrap()).unwrap();
                let rep = y.verify();
                assert!(rep.all_passed(), "{rep}");
                assert!(y.same_structure(&f1_closed(&hs, i, j).unwrap()), "({n},{m}) ({i},{j})");
            }
        }
    }
    // a one-dimensional simple coacts by U = A^m
    let hs = Hosts::new(2, 2).unwrap();
    let y = f1(&hs, &build_simple(2, 2, 1, 2).unwrap()).unwrap();
    let u = hs.h.index_of(&[0, 2]).unwrap();
    assert_eq!(y.coaction[0], vec![(u, CycScalar::one(), 0)]);
}

#[test]
fn second_step_matches_the_displayed_module() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        let nm = n * m;
        for i in 0..nm {
            for j in 0..nm {
                let y1 = f1(&hs, &build_simple(n, m, i, j).unwrap()).unwrap();
                let y2 = f2(&hs, &y1).unwrap();
                let rep = y2.verify();
                assert!(rep.all_passed(), "{rep}");
                assert!(y2.same_structure(&f2_closed(&hs, i, j).unwrap()), "({n},{m}) ({i},{j})");
                for l in 0..r_of(n, m, i, j) {
                    assert_eq!(beta(n, m, -(i as i64), -(j as i64), 0, l), CycScalar::one());
                }
            }
        }
    }
    // x·v_{r-1} = -ξ^{-j}ω^{-1}(1-ξ^{jn}) v_0 for V_{3,1} of (2,2)
    let hs = Hosts::new(2, 2).unwrap();
    let y2 = f2_closed(&hs, 3, 1).unwrap();
    let x = y2.action("x").unwrap();
    let want = -&(&(&root(4, -1) * &root(4, -2)) * &(&CycScalar::one() - &root(4, 2)));
    assert_eq!(x[(0, 1)], want);
}

#[test]
fn twist_kills_the_wraparound() {
    let hs = Hosts::new(2, 2).unwrap();
    let y2 = f2(&hs, &f1(&hs, &build_simple(2, 2, 3, 1).unwrap()).unwrap()).unwrap();
    assert!(!y2.action("x").unwrap()[(0, 1)].is_zero());
    let y3 = f3(&hs, &y2).unwrap();
    assert!(y3.action("x").unwrap()[(0, 1)].is_zero());
    assert_eq!(y3.action("g"), y2.action("g"));
    assert_eq!(y3.coaction, y2.coaction);
    // the opposite sign does not produce a YD module over T
    let wrong = twist(&hs, &y2, hs.t.clone(), -F3_SIGN).unwrap();
    assert!(!wrong.verify().all_passed());
}

#[test]
fn twist_is_involutive() {
    for (n, m) in [(2, 2), (2, 3)] {
        let hs = Hosts::new(n, m).unwrap();
        for (i, j) in [(3, 1), (1, 1), (0, 0), (2, 3)] {
            let y2 = f2(&hs, &f1(&hs, &build_simple(n, m, i, j).unwrap()).unwrap()).unwrap();
            let there = twist(&hs, &y2, hs.t.clone(), F3_SIGN).unwrap();
            let back = twist(&hs, &there, hs.r.clone(), -F3_SIGN).unwrap();
            assert!(back.same_structure(&y2), "({n},{m}) ({i},{j})");
        }
    }
}

#[test]
fn full_chain_matches_closed_form_and_preserves_dimension() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for ((i, j), y) in transport_all(&hs).unwrap() {
            assert_eq!(y.dim() as u32, r_of(n, m, i, j));
            assert!(y.same_structure(&f3_closed(&hs, i, j).unwrap()), "({n},{m}) ({i},{j})");
        }
    }
}

#[test]
fn lambda_modules() {
    let hs = Hosts::new(2, 2).unwrap();
    // a = -1 ≡ 3, b = -2 ≡ 2
    assert_eq!(lambda_dim(2, 2, 3, 2), 1);
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for a in 0..n * m {
            for b in 0..n * m {
                if b % m != 0 {
                    assert_eq!(lambda_dim(n, m, a, b), n);
                }
                let l = build_L(&hs, a, b).unwrap();
                assert_eq!(l.dim() as u32, lambda_dim(n, m, a, b));
                for k in 0..l.dim() as u32 {
                    assert_eq!(beta(n, m, a as i64, b as i64, 0, k), CycScalar::one());
                }
            }
        }
    }
    assert!(build_L(&hs, 4, 0).is_err());
}

#[test]
fn correspondence_with_lambda() {
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for i in 0..n * m {
            for j in 0..n * m {
                assert!(check_corresp(&hs, i, j).unwrap(), "({n},{m}) ({i},{j})");
            }
        }
    }
}

#[test]
fn braidings() {
    let hs = Hosts::new(2, 2).unwrap();
    let c = braiding_of(&transport(&hs, 1, 2).unwrap()).unwrap();
    assert_eq!(c.as_diagonal().unwrap(), vec![vec![-CycScalar::one()]]);

    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let hs = Hosts::new(n, m).unwrap();
        for (_, y) in transport_all(&hs).unwrap() {
            let b = braiding_of(&y).unwrap();
            assert!(b.braid_equation());
            assert_eq!(b.c.rank(), y.dim() * y.dim());
        }
    }

    // V ⊕ λ_{-i,-j} over the cyclic group is of diagonal type
    let (n, m) = (2u32, 3u32);
    let nm = n * m;
    for i in 0..nm {
        for j in 0..nm {
            let a = (nm - i) % nm;
            let b = (nm - j) % nm;
            let w = group_pair(n, m, a, b).unwrap();
            let q = braiding_of(&w).unwrap().as_diagonal().unwrap();
            let e = |k: i64| root(nm, k);
            let (ii, jj, mm) = (i as i64, j as i64, m as i64);
            assert_eq!(q, vec![vec![e(mm), e(-jj)], vec![e(-ii * mm), e(ii * jj)]]);
        }
    }
}

#[test]
fn braid_equation_detects_a_broken_braiding() {
    // c(v_s ⊗ v_t) = v_0 ⊗ v_0 for all s, t is not invertible
    let mut c = radford::CycMatrix::zeros(4, 4);
    for col in 0..4 {
        c[(0, col)] = CycScalar::one();
    }
    assert!(BraidedSpace::new(2, c).is_err());
    // a generic non-diagonal matrix fails the braid equation
    let mut c = radford::CycMatrix::identity(4);
    c[(1, 2)] = CycScalar::from_int(2);
    c[(3, 0)] = CycScalar::one();
    c[(0, 3)] = CycScalar::one();
    c[(0, 0)] = CycScalar::zero();
    c[(3, 3)] = CycScalar::zero();
    let b = BraidedSpace::unchecked(2, c).unwrap();
    assert!(!b.braid_equation());
}

#[test]
fn json_dump() {
    let hs = Hosts::new(2, 2).unwrap();
    let y = transport(&hs, 3, 1).unwrap();
    let j = y.to_json();
    assert_eq!(j["dim"], 2);
    assert_eq!(j["coaction"].as_array().unwrap().len(), 2);
    assert!(j["actions"]["x"].is_array());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn chain_commutes_with_closed_forms_on_2_4(i in 0u32..8, j in 0u32..8) {
        let hs = Hosts::new(2, 4).unwrap();
        let y = transport(&hs, i, j).unwrap();
        prop_assert!(y.same_structure(&f3_closed(&hs, i, j).unwrap()));
        prop_assert!(braiding_of(&y).unwrap().braid_equation());
    }
}
