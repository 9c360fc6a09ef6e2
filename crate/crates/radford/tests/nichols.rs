use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radford::cyclo::root;
use radford::nichols::*;
use radford::transport::{transport, Hosts};
use radford::{CycScalar, Error};

fn simple_braiding(n: u32, m: u32, i: u32, j: u32) -> BraidedSpace {
    transport(&Hosts::new(n, m).unwrap(), i, j).unwrap().braiding().unwrap()
}

fn random_diagonal(rng: &mut ChaCha8Rng) -> BraidedSpace {
    let e: Vec<Vec<i64>> = (0..2).map(|_| (0..2).map(|_| rng.gen_range(0..12)).collect()).collect();
    BraidedSpace::diagonal_roots(12, &e).unwrap()
}

fn one_dim(q: CycScalar) -> BraidedSpace {
    BraidedSpace::diagonal(&[vec![q]]).unwrap()
}

fn random_tensor(rng: &mut ChaCha8Rng, len: usize) -> Vec<CycScalar> {
    (0..len).map(|_| CycScalar::from_int(rng.gen_range(-3..4))).collect()
}

/// Some reduced word of `perm`, sorting adjacent inversions in random order.
fn random_reduced_word(perm: &[usize], rng: &mut ChaCha8Rng) -> BraidWord {
    let mut arr = perm.to_vec();
    let mut swaps = Vec::new();
    loop {
        let inv: Vec<usize> = (0..arr.len().saturating_sub(1)).filter(|&i| arr[i] > arr[i + 1]).collect();
        if inv.is_empty() {
            break;
        }
        let i = inv[rng.gen_range(0..inv.len())];
        arr.swap(i, i + 1);
        swaps.push(i + 1);
    }
    swaps.reverse();
    BraidWord { strands: perm.len(), letters: swaps }
}

#[test]
fn matsumoto_lifts() {
    assert!(matsumoto(&[0, 1, 2]).is_empty());
    assert_eq!(matsumoto(&[1, 0]).letters, vec![1]);
    assert_eq!(matsumoto(&[2, 1, 0]).len(), 3);
    for k in 1..=5 {
        let perms = permutations(k);
        assert_eq!(perms.len(), (1..=k).product::<usize>());
        for p in perms {
            let w = matsumoto(&p);
            assert_eq!(w.len(), inversions(&p));
            assert_eq!(w.permutation(), p);
            assert!(w.letters.iter().all(|&l| (1..k).contains(&l)));
        }
    }
}

#[test]
fn reduced_words_give_the_same_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = simple_braiding(2, 3, 2, 1);
    let w1 = BraidWord { strands: 3, letters: vec![1, 2, 1] };
    let w2 = BraidWord { strands: 3, letters: vec![2, 1, 2] };
    assert_eq!(w1.operator(&c), w2.operator(&c));
    for p in permutations(4).into_iter().step_by(3) {
        let a = random_reduced_word(&p, &mut rng);
        assert_eq!(a.permutation(), p);
        assert_eq!(a.operator(&c), matsumoto(&p).operator(&c), "{p:?}");
    }
}

#[test]
fn factorized_symmetrizer_equals_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut spaces: Vec<BraidedSpace> = [(2, 1), (0, 1), (1, 0), (3, 3)].iter().map(|&(i, j)| simple_braiding(2, 2, i, j)).collect();
    spaces.extend((0..3).map(|_| random_diagonal(&mut rng)));
    for c in &spaces {
        for k in 1..=4 {
            assert_eq!(
                symmetrizer_matrix(c, k, DEFAULT_BUDGET).unwrap(),
                symmetrizer_brute(c, k, DEFAULT_BUDGET).unwrap(),
                "degree {k}"
            );
        }
    }
}

#[test]
fn one_dimensional_spaces() {
    let minus = one_dim(-CycScalar::one());
    let ranks: Vec<usize> = (0..=2).map(|k| symmetrizer_rank(&minus, k, DEFAULT_BUDGET).unwrap()).collect();
    assert_eq!(ranks, vec![1, 1, 0]);
    let g = graded_dims_derivation(&minus, 6, DEFAULT_BUDGET).unwrap();
    assert_eq!(g, GradedDims { dims: vec![1, 1, 0], truncated: true });

    let plus = one_dim(CycScalar::one());
    assert!((0..=6).all(|k| symmetrizer_rank(&plus, k, DEFAULT_BUDGET).unwrap() == 1));
    let g = graded_dims_derivation(&plus, 6, DEFAULT_BUDGET).unwrap();
    assert_eq!(g.dims, vec![1; 7]);
    assert!(!g.truncated);

    // a primitive cube root: k[x]/(x³)
    let g = graded_dims_derivation(&one_dim(root(3, 1)), 6, DEFAULT_BUDGET).unwrap();
    assert_eq!(g.dims, vec![1, 1, 1, 0]);
}

#[test]
fn transported_simples_in_2_2() {
    let g = graded_dims_derivation(&simple_braiding(2, 2, 2, 1), 8, DEFAULT_BUDGET).unwrap();
    assert_eq!(g.dims, vec![1, 2, 2, 2, 1, 0]);
    assert!(g.truncated);
    let ranks: Vec<usize> = (0..=5).map(|k| symmetrizer_rank(&simple_braiding(2, 2, 2, 1), k, DEFAULT_BUDGET).unwrap()).collect();
    assert_eq!(ranks, vec![1, 2, 2, 2, 1, 0]);

    let g = graded_dims_derivation(&simple_braiding(2, 2, 1, 2), 8, DEFAULT_BUDGET).unwrap();
    assert_eq!(g, GradedDims { dims: vec![1, 1, 0], truncated: true });

    assert_eq!(graded_dims_derivation(&simple_braiding(2, 2, 3, 1), 10, DEFAULT_BUDGET).unwrap().total(), 8);
}

#[test]
fn tower_agrees_with_symmetrizer_on_2_2_simples() {
    for i in 0..4 {
        for j in 0..4 {
            let c = simple_braiding(2, 2, i, j);
            let g = graded_dims_derivation(&c, 5, DEFAULT_BUDGET).unwrap();
            for k in 0..=5 {
                let want = symmetrizer_rank(&c, k, DEFAULT_BUDGET).unwrap();
                assert_eq!(g.dims.get(k).copied().unwrap_or(0), want, "V_{{{i},{j}}} degree {k}");
            }
        }
    }
}

#[test]
fn tower_agrees_with_symmetrizer_on_random_diagonal_braidings() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let c = random_diagonal(&mut rng);
        let g = graded_dims_derivation(&c, 5, DEFAULT_BUDGET).unwrap();
        for k in 0..=5 {
            let blocks = symmetrizer_block_ranks(&c, k, DEFAULT_BUDGET).unwrap();
            let total = symmetrizer_matrix(&c, k, DEFAULT_BUDGET).unwrap().rank();
            assert_eq!(blocks.values().sum::<usize>(), total);
            assert_eq!(g.dims.get(k).copied().unwrap_or(0), total, "{:?} degree {k}", c.as_diagonal());
        }
    }
}

#[test]
fn skew_derivations() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = random_diagonal(&mut rng);
    let q = c.as_diagonal().unwrap();
    for f in 0..2 {
        assert!(skew_derivation(&c, f, 0).is_zero());
        let d1 = skew_derivation(&c, f, 1);
        for t in 0..2 {
            let want = if f == t { CycScalar::one() } else { CycScalar::zero() };
            assert_eq!(d1[(0, t)], want);
        }
        let d2 = skew_derivation(&c, f, 2);
        for j in 0..2 {
            // ∂_f(v_j v_j) = δ_{fj}(1 + q_jj) v_j
            let want = if f == j { &CycScalar::one() + &q[j][j] } else { CycScalar::zero() };
            assert_eq!(d2[(j, j * 2 + j)], want);
            assert!(d2[(1 - j, j * 2 + j)].is_zero());
        }
    }
}

/// `∂_f(x v_t) = δ_{ft} x + Σ C[(u,f),(g,t)] ∂_g(x) v_u` with `x` of degree `k-1`.
fn leibniz_holds(c: &BraidedSpace, k: usize, x: &[CycScalar]) -> bool {
    let d = c.dim;
    let lower: Vec<_> = (0..d).map(|g| skew_derivation(c, g, k - 1)).collect();
    let upper: Vec<_> = (0..d).map(|f| skew_derivation(c, f, k)).collect();
    (0..d).all(|f| {
        (0..d).all(|t| {
            let mut xv = vec![CycScalar::zero(); x.len() * d];
            for (i, a) in x.iter().enumerate() {
                xv[i * d + t] = a.clone();
            }
            let lhs = upper[f].mul_vec(&xv);
            let mut rhs: Vec<CycScalar> = if f == t { x.to_vec() } else { vec![CycScalar::zero(); x.len()] };
            for g in 0..d {
                let dg = lower[g].mul_vec(x);
                for u in 0..d {
                    let e = &c.c[(u * d + f, g * d + t)];
                    if e.is_zero() {
                        continue;
                    }
                    for (i, y) in dg.iter().enumerate() {
                        rhs[i * d + u] = &rhs[i * d + u] + &(e * y);
                    }
                }
            }
            lhs == rhs
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn leibniz_rule(seed in any::<u64>(), i in 0u32..4, j in 0u32..4, k in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = simple_braiding(2, 2, i, j);
        let x = random_tensor(&mut rng, c.dim.pow(k as u32 - 1));
        prop_assert!(leibniz_holds(&c, k, &x));
    }
}

#[test]
fn membership() {
    let vv = NcPoly::var(0).pow(2);
    assert!(poly_member(&one_dim(-CycScalar::one()), &vv, DEFAULT_BUDGET).unwrap());
    assert!(!poly_member(&one_dim(CycScalar::one()), &vv, DEFAULT_BUDGET).unwrap());

    // kernel vectors of Q_3 are members, generic tensors are not
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = simple_braiding(2, 3, 2, 2);
    let q = symmetrizer_matrix(&c, 3, DEFAULT_BUDGET).unwrap();
    let ker = q.kernel();
    assert_eq!(ker.len(), 8 - 5);
    for v in &ker {
        assert!(relation_member(&c, 3, v, DEFAULT_BUDGET).unwrap());
    }
    assert!(!relation_member(&c, 3, &random_tensor(&mut rng, 8), DEFAULT_BUDGET).unwrap());
    assert!(matches!(relation_member(&c, 3, &[CycScalar::one()], DEFAULT_BUDGET), Err(Error::ShapeMismatch(_))));
    let mixed = NcPoly::var(0).add(&NcPoly::var(1).pow(2));
    assert!(poly_member(&c, &mixed, DEFAULT_BUDGET).is_err());
}

#[test]
fn tower_projection_is_right_multiplicative() {
    let c = simple_braiding(2, 3, 2, 1);
    let tower = NicholsTower::build(&c, 8, DEFAULT_BUDGET).unwrap();
    assert_eq!(tower.dims().dims, vec![1, 2, 4, 4, 4, 2, 1, 0]);
    // past the top degree everything vanishes
    assert_eq!(tower.project(9, &[]), Some(vec![]));
    // ∂_f descends: ∂_f(top) sits in degree 5
    let top = tower.derivation(6, 0).unwrap();
    assert_eq!((top.rows(), top.cols()), (2, 1));
}

#[test]
fn capacity_is_reported() {
    let c = simple_braiding(2, 2, 0, 2);
    assert!(matches!(symmetrizer_rank(&c, 13, DEFAULT_BUDGET), Err(Error::CapacityExceeded { .. })));
    assert!(matches!(symmetrizer_brute(&c, 7, DEFAULT_BUDGET), Err(Error::CapacityExceeded { .. })));
    assert!(matches!(graded_dims_derivation(&c, 20, 64), Err(Error::CapacityExceeded { needed: 128, budget: 64 })));
}

#[test]
fn hilbert_series() {
    assert_eq!(hilbert_expand(&[(3, 1), (3, 1), (2, 2)]).coeffs, vec![1, 2, 4, 4, 4, 2, 1]);
    assert_eq!(hilbert_expand(&[(3, 1), (3, 1), (2, 2)]).total(), 18);
    assert_eq!(hilbert_expand(&[(4, 1), (3, 1), (3, 2), (2, 3)]).total(), 72);
    assert_eq!(hilbert_expand(&[(2, 1)]).coeffs, vec![1, 1]);
}

#[test]
fn graded_dims_json() {
    let g = graded_dims_derivation(&simple_braiding(2, 2, 1, 2), 4, DEFAULT_BUDGET).unwrap();
    assert_eq!(g.to_json(), serde_json::json!({"dims": [1, 1, 0], "truncated": true, "total": 2}));
}
