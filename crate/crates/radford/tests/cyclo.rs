use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use radford::cyclo::{cyclotomic_poly, qbinom, qfact, qnum, root};
use radford::{CycMatrix, CycScalar, Field, HilbertPoly, RatMatrix};

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-8 && (a.1 - b.1).abs() < 1e-8
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn scalar(order: u32, coeffs: &[i64]) -> CycScalar {
    coeffs
        .iter()
        .enumerate()
        .fold(CycScalar::zero(), |acc, (k, &c)| &acc + &(&root(order, k as i64) * &CycScalar::from_int(c)))
}

#[test]
fn cyclotomic_polynomials_match_known_values() {
    assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
    assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    // Phi_105 is the first with a coefficient outside {-1, 0, 1}
    assert!(cyclotomic_poly(105).contains(&-2));
}

#[test]
fn root_powers_cycle() {
    for n in [1u32, 2, 3, 4, 6, 8, 12, 15] {
        let z = root(n, 1);
        assert_eq!(z.pow(n as i64).unwrap(), CycScalar::one());
        let sum = (0..n).fold(CycScalar::zero(), |acc, k| &acc + &root(n, k as i64));
        if n > 1 {
            assert!(sum.is_zero(), "sum of {n}-th roots");
        }
    }
}

#[test]
fn mixed_orders_embed_into_the_lcm() {
    // zeta_4 * zeta_6 = zeta_12^5
    assert_eq!(&root(4, 1) * &root(6, 1), root(12, 5));
    assert_eq!(root(2, 1), CycScalar::from_int(-1));
    assert_eq!(root(12, 3), root(4, 1));
    assert_ne!(root(12, 1), root(4, 1));
}

#[test]
fn display_uses_root_monomials() {
    let x = &root(8, 5) * &CycScalar::from_ratio(3, 2).unwrap();
    assert_eq!(x.fmt_with("ξ", 8), "ξ^5 · 3/2");
    assert_eq!(CycScalar::from_ratio(-1, 3).unwrap().to_string(), "-1/3");
}

#[test]
fn qbinomial_pascal_values() {
    let q = root(6, 1);
    // q-binomial is symmetric and (n choose 1) = (n)_q
    for n in 0..7u32 {
        for k in 0..=n {
            assert_eq!(qbinom(n, k, &q).unwrap(), qbinom(n, n - k, &q).unwrap());
        }
        if n > 0 {
            assert_eq!(qbinom(n, 1, &q).unwrap(), qnum(n, &q));
        }
    }
    // at q = zeta_6 the binomial (6 choose k) vanishes for 0 < k < 6
    for k in 1..6 {
        assert!(qbinom(6, k, &q).unwrap().is_zero());
    }
    assert!(qbinom(2, 3, &q).is_err());
    assert!(qfact(6, &q).is_zero());
    assert!(!qfact(5, &q).is_zero());
}

#[test]
fn hilbert_expansion() {
    let h = HilbertPoly::expand(&[(3, 1), (2, 1)]);
    assert_eq!(h.coeffs, vec![1, 2, 2, 1]);
    let h = HilbertPoly::expand(&[(4, 1), (3, 1), (3, 2), (2, 3)]);
    assert_eq!(h.total(), 72);
    assert_eq!(h.degree(), 12);
    assert_eq!(HilbertPoly::expand(&[]).coeffs, vec![1]);
}

#[test]
fn rational_matrix_kernel_and_inverse() {
    let r = |n: i64| BigRational::from_integer(BigInt::from(n));
    let m = RatMatrix::from_rows(vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(1), r(0), r(1)]])
        .unwrap();
    assert_eq!(m.rank(), 2);
    let k = m.kernel();
    assert_eq!(k.len(), 1);
    assert!(m.mul_vec(&k[0]).iter().all(|x| Field::is_zero(x)));
    assert!(m.inverse().is_err());
    let inv_test = RatMatrix::from_rows(vec![vec![r(2), r(1)], vec![r(7), r(4)]]).unwrap();
    assert!(inv_test.mul(&inv_test.inverse().unwrap()).is_identity());
}

#[test]
fn charpoly_of_companion_matrix() {
    // companion of t^2 - zeta t + 1
    let z = root(5, 1);
    let m = CycMatrix::from_rows(vec![
        vec![CycScalar::zero(), CycScalar::from_int(-1)],
        vec![CycScalar::one(), z.clone()],
    ])
    .unwrap();
    let p = m.charpoly();
    assert_eq!(p, vec![CycScalar::one(), -&z, CycScalar::one()]);
}

proptest! {
    #[test]
    fn arithmetic_matches_complex_evaluation(
        order in prop::sample::select(vec![3u32, 4, 5, 8, 9, 12, 20]),
        a in prop::collection::vec(-5i64..5, 1..6),
        b in prop::collection::vec(-5i64..5, 1..6),
    ) {
        let x = scalar(order, &a);
        let y = scalar(order, &b);
        let (cx, cy) = (x.to_complex(), y.to_complex());
        prop_assert!(close((&x + &y).to_complex(), (cx.0 + cy.0, cx.1 + cy.1)));
        prop_assert!(close((&x * &y).to_complex(), cmul(cx, cy)));
        if !y.is_zero() {
            let q = &x * &y.inv().unwrap();
            prop_assert!(close(cmul(q.to_complex(), cy), cx));
            prop_assert_eq!(&q * &y, x.clone());
        }
    }

    #[test]
    fn field_axioms_hold(
        a in prop::collection::vec(-4i64..4, 1..5),
        b in prop::collection::vec(-4i64..4, 1..5),
        c in prop::collection::vec(-4i64..4, 1..5),
        k in 0i64..24,
    ) {
        let (x, y, z) = (scalar(12, &a), scalar(12, &b), scalar(12, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, CycScalar::zero());
        // embedding into a larger field preserves values
        let w = &x * &root(8, k);
        prop_assert_eq!(&w * &root(8, -k), x);
    }

    #[test]
    fn solve_returns_a_solution(
        entries in prop::collection::vec(-3i64..4, 9),
        rhs in prop::collection::vec(-3i64..4, 3),
    ) {
        let z = root(3, 1);
        let m = CycMatrix::from_fn(3, 3, |r, c| &CycScalar::from_int(entries[3 * r + c]) * &z.pow((r + c) as i64).unwrap());
        let b: Vec<CycScalar> = rhs.iter().map(|&v| CycScalar::from_int(v)).collect();
        if let Some(x) = m.solve(&b) {
            prop_assert_eq!(m.mul_vec(&x), b);
        }
        prop_assert_eq!(m.rank() + m.kernel().len(), 3);
    }
}
