use radford::cyclo::root;
use radford::dmod::*;
use radford::hopf::build_double;
use radford::CycScalar;

#[test]
fn dimension_rule() {
    assert_eq!(r_of(2, 2, 3, 1), 2);
    assert_eq!(r_of(2, 2, 1, 2), 1);
    assert_eq!(r_of(2, 2, 1, 0), 2);
    for m in 1..=4 {
        let nm = 2 * m;
        for i in 0..nm {
            for j in 0..nm {
                let one_dim = (j == 0 && i % 2 == 0) || (j == m && i % 2 == 1);
                assert_eq!(r_of(2, m, i, j) == 1, one_dim, "m={m} ({i},{j})");
            }
        }
    }
}

#[test]
fn simple_modules_verify_and_match_formulas() {
    let v = build_simple(2, 2, 1, 2).unwrap();
    assert_eq!(v.dim(), 1);
    assert_eq!(v.act_A[(0, 0)], root(4, 1));
    assert!(v.act_X.is_zero());

    let v = build_simple(2, 2, 3, 1).unwrap();
    assert_eq!(v.dim(), 2);
    // c_1 = (1)_ω ω^{-1}(ξ^1 ω^{3} - 1) with ξ = ζ_4, ω = -1
    let w = root(4, 2);
    let c1 = &w.inv().unwrap() * &(&(&root(4, 1) * &w.pow(3).unwrap()) - &CycScalar::one());
    assert_eq!(v.act_X[(0, 1)], c1);

    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        for v in all_simples(n, m).unwrap() {
            let (i, j) = v.label.unwrap();
            for k in 1..v.dim() as u32 {
                assert!(!c_coeff(n, m, i, j, k).is_zero());
            }
            // x nilpotent exactly when 1 - ξ^{jn} vanishes
            let nilpotent = root(n * m, (j * n) as i64) == CycScalar::one();
            assert_eq!(v.x_nilpotent(), nilpotent);
            assert!(v.act_X.pow(v.dim() as u32).is_zero());
        }
    }
}

#[test]
fn simples_are_representations_of_the_double() {
    // independent of the presentation: multiplicativity against the
    // structure constants of D
    let d = build_double(2, 2).unwrap();
    for v in all_simples(2, 2).unwrap() {
        let rep = v.verify_with_double(&d, 150, 11);
        assert!(rep.all_passed(), "{rep}");
    }
    let m = build_projective(2, 2, 1, 2).unwrap();
    let rep = m.verify_with_double(&d, 300, 5);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn simples_are_simple_and_pairwise_distinct() {
    for (n, m) in [(2, 2), (2, 3)] {
        let all = all_simples(n, m).unwrap();
        assert_eq!(all.len(), ((n * m) * (n * m)) as usize);
        for v in &all {
            assert!(is_simple(v));
            // the Burnside oracle agrees
            assert_eq!(action_algebra_dim(v), v.dim() * v.dim());
        }
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                assert!(iso_test(&all[a], &all[b]).is_none(), "{} ≅ {}", all[a].name(), all[b].name());
            }
        }
    }
    let v = build_simple(2, 2, 3, 1).unwrap();
    let t = iso_test(&v, &v).unwrap();
    assert_eq!(t.rank(), 2);
    assert!(!is_simple(&v.direct_sum(&v)));
    let one = build_simple(2, 2, 1, 2).unwrap();
    assert!(!is_simple(&one.direct_sum(&one)));
}

#[test]
fn projective_covers() {
    let mut total = 0u32;
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let nm = n * m;
        let mut sum = 0;
        for i in 0..nm {
            for j in 0..nm {
                let r = r_of(n, m, i, j);
                sum += projective_dim(n, m, i, j) * r;
                if r == n {
                    assert!(matches!(build_projective(n, m, i, j), Err(radford::Error::Precondition(_))));
                    continue;
                }
                total += 1;
                let p = build_projective(n, m, i, j).unwrap();
                assert_eq!(p.dim(), 2 * n as usize);
                assert!(!is_simple(&p));
                // ker X = span{u1_0, v1_0}
                let kx = p.act_X.kernel();
                assert_eq!(kx.len(), 2);
                let alpha = solve_alpha(n, m, i, j).unwrap();
                assert_eq!(alpha, alpha_closed_form(n, m, i, j).unwrap(), "({n},{m}) ({i},{j})");

                let series = composition_series(&p).unwrap();
                let w = |k: i64| reduce_index(n, m, k);
                let (ii, jj, rr) = (i as i64, j as i64, r as i64);
                let expected = vec![
                    (i, j),
                    (w(n as i64 + ii - rr), w(jj - m as i64 * rr)),
                    (w(ii - rr), w(jj - m as i64 * rr)),
                    (i, j),
                ];
                assert_eq!(series.factors, expected, "({n},{m}) M_{{{i},{j}}}");
                let soc = socle(&p).unwrap();
                assert_eq!(identify_simple(&soc).unwrap(), (i, j));
            }
        }
        assert_eq!(sum, n.pow(4) * m * m);
    }
    assert!(total > 0);
}

#[test]
fn idempotents_of_small_double() {
    let d = build_double(2, 2).unwrap();
    let rep = verify_idempotents(&d, 20, 3).unwrap();
    assert!(rep.all_passed(), "{rep}");
    let e = full_idempotent(&d, 3, 1).unwrap();
    let ideal = left_ideal_module(&d, &e).unwrap();
    assert!(iso_test(&ideal, &build_simple(2, 2, 3, 1).unwrap()).is_some());
}

#[test]
fn module_graphs() {
    let v = build_simple(2, 2, 3, 1).unwrap();
    let mut e = v.edges();
    e.sort();
    assert_eq!(e, vec![(0, 1, "x"), (1, 0, "X"), (1, 0, "x")]);
    assert!(v.to_dot().contains("action=\"X\""));
    assert!(build_simple(2, 2, 1, 2).unwrap().edges().is_empty());

    let p = build_projective(2, 2, 1, 2).unwrap();
    let mut edges: Vec<(String, String, &str)> = p
        .edges()
        .into_iter()
        .map(|(a, b, s)| (p.basis_names[a].clone(), p.basis_names[b].clone(), s))
        .collect();
    edges.sort();
    let s = |a: &str, b: &str, t: &'static str| (a.to_string(), b.to_string(), t);
    let mut want = vec![
        s("u1_0", "v1_0", "x"),
        s("v2_0", "u2_0", "x"),
        s("u2_0", "v1_0", "X"),
        s("v2_0", "u1_0", "X"),
    ];
    want.sort();
    assert_eq!(edges, want);
}
