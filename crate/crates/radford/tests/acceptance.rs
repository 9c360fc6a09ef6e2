//! End-to-end checklist. Prints one PASS or FAIL line per criterion and exits
//! non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radford::classify::*;
use radford::dmod::*;
use radford::hopf::*;
use radford::nichols::*;
use radford::transport::{braiding_of, check_corresp, transport, Hosts};
use radford::HilbertPoly;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hopf_axioms() -> Check {
    let start = Instant::now();
    for (n, m) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let algs = [build_radford(n, m), build_dual_radford(n, m), build_taft_gen(n, m)];
        for alg in algs {
            let alg = alg.map_err(|e| e.to_string())?;
            let rep = alg.verify_axioms(Coverage::Full);
            ensure(rep.all_passed(), || format!("{rep}"))?;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("took {secs:.1} s"))
}

fn double_presentation() -> Check {
    for ((n, m), dim) in [((2, 2), 64), ((2, 3), 144), ((3, 2), 324), ((2, 4), 256)] {
        let d = build_double(n, m).map_err(|e| e.to_string())?;
        ensure(d.dim() == dim, || format!("D({n},{m}) has dim {}", d.dim()))?;
        let rep = verify_double_presentation(&d);
        ensure(rep.all_passed(), || format!("{rep}"))?;
        let rep = harpoon_identities(&pairing(n, m).map_err(|e| e.to_string())?);
        ensure(rep.all_passed(), || format!("{rep}"))?;
    }
    Ok(())
}

fn simples() -> Check {
    for (n, m) in [(2u32, 2u32), (2, 3), (3, 2)] {
        let nm = n * m;
        let mut mods = Vec::new();
        for i in 0..nm {
            for j in 0..nm {
                let v = build_simple(n, m, i, j).map_err(|e| e.to_string())?;
                ensure(v.dim() as u32 == r_of(n, m, i, j), || format!("dim V_{{{i},{j}}}"))?;
                ensure(identify_simple(&v).ok() == Some((i, j)), || format!("V_{{{i},{j}}} misidentified"))?;
                if n == 2 {
                    let one = (j == 0 && i % 2 == 0) || (j == m && i % 2 == 1);
                    ensure((v.dim() == 1) == one, || format!("({n},{m}) V_{{{i},{j}}} one-dimensional"))?;
                }
                mods.push(v);
            }
        }
        for a in 0..mods.len() {
            for b in a + 1..mods.len() {
                ensure(iso_test(&mods[a], &mods[b]).is_none(), || format!("({n},{m}) simples {a} and {b} are isomorphic"))?;
            }
        }
    }
    Ok(())
}

fn projectives() -> Check {
    for (n, m) in [(2u32, 2u32), (2, 3)] {
        let nm = n * m;
        let mut sum = 0;
        for i in 0..nm {
            for j in 0..nm {
                let r = r_of(n, m, i, j);
                sum += projective_dim(n, m, i, j) * r;
                if r == n {
                    continue;
                }
                let p = build_projective(n, m, i, j).map_err(|e| e.to_string())?;
                ensure(p.verify().all_passed(), || format!("M_{{{i},{j}}} fails its relations"))?;
                let series = composition_series(&p).map_err(|e| e.to_string())?;
                ensure(series.factors.len() == 4 && series.factors[0] == (i, j) && series.factors[3] == (i, j), || {
                    format!("M_{{{i},{j}}} factors {:?}", series.factors)
                })?;
                let soc = socle(&p).map_err(|e| e.to_string())?;
                ensure(identify_simple(&soc).ok() == Some((i, j)), || format!("socle of M_{{{i},{j}}}"))?;
            }
        }
        ensure(sum == n.pow(4) * m * m, || format!("({n},{m}) Σ dim P · dim V = {sum}"))?;
    }
    Ok(())
}

fn idempotents() -> Check {
    let (n, m) = (2, 2);
    let d = build_double(n, m).map_err(|e| e.to_string())?;
    let rep = verify_idempotents(&d, 20, 3).map_err(|e| e.to_string())?;
    ensure(rep.all_passed(), || format!("{rep}"))?;
    for i in 0..n * m {
        for j in 0..n * m {
            if r_of(n, m, i, j) != n {
                continue;
            }
            let e = full_idempotent(&d, i, j).map_err(|e| e.to_string())?;
            ensure(d.mul(&e, &e) == e, || format!("E_{{{i},{j}}} is not idempotent"))?;
            let ideal = left_ideal_module(&d, &e).map_err(|e| e.to_string())?;
            let v = build_simple(n, m, i, j).map_err(|e| e.to_string())?;
            ensure(iso_test(&ideal, &v).is_some(), || format!("D E_{{{i},{j}}} is not V_{{{i},{j}}}"))?;
        }
    }
    Ok(())
}

fn transported() -> Check {
    for (n, m) in [(2, 2), (2, 3)] {
        let hs = Hosts::new(n, m).map_err(|e| e.to_string())?;
        for i in 0..n * m {
            for j in 0..n * m {
                let y = transport(&hs, i, j).map_err(|e| e.to_string())?;
                let rep = y.verify();
                ensure(rep.all_passed(), || format!("{rep}"))?;
                ensure(check_corresp(&hs, i, j).unwrap_or(false), || format!("({n},{m}) ({i},{j}) correspondence"))?;
                let c = braiding_of(&y).map_err(|e| e.to_string())?;
                ensure(c.braid_equation(), || format!("({n},{m}) ({i},{j}) braid equation"))?;
            }
        }
    }
    Ok(())
}

fn tower_vs_symmetrizer() -> Check {
    let hs = Hosts::new(2, 2).map_err(|e| e.to_string())?;
    let mut spaces = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            spaces.push(transport(&hs, i, j).and_then(|y| y.braiding()).map_err(|e| e.to_string())?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let e: Vec<Vec<i64>> = (0..2).map(|_| (0..2).map(|_| rng.gen_range(0..12)).collect()).collect();
        spaces.push(BraidedSpace::diagonal_roots(12, &e).map_err(|e| e.to_string())?);
    }
    for c in &spaces {
        let g = graded_dims_derivation(c, 5, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for k in 0..=5 {
            let tower = g.dims.get(k).copied().unwrap_or(0);
            let rank = symmetrizer_rank(c, k, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(tower == rank, || format!("degree {k}: tower {tower}, symmetrizer {rank}"))?;
            if k <= 4 {
                let brute = symmetrizer_brute(c, k, DEFAULT_BUDGET).map_err(|e| e.to_string())?.rank();
                ensure(tower == brute, || format!("degree {k}: tower {tower}, enumeration {brute}"))?;
            }
        }
    }
    Ok(())
}

fn reproduction(r: radford::Result<Reproduction>) -> Check {
    let r = r.map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{:?}", r.failures))
}

fn dims_321() -> Check {
    let c = transport(&Hosts::new(2, 3).map_err(|e| e.to_string())?, 2, 1)
        .and_then(|y| y.braiding())
        .map_err(|e| e.to_string())?;
    let g = graded_dims_derivation(&c, 10, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let nonzero: Vec<usize> = g.dims.iter().copied().filter(|&d| d > 0).collect();
    ensure(g.truncated && nonzero == [1, 2, 4, 4, 4, 2, 1] && g.total() == 18, || format!("{g:?}"))
}

fn largest() -> Check {
    let spec = presentation_for(6, 4, 1).map_err(|e| e.to_string())?.ok_or("no presentation for (6,4,1)")?;
    let want = HilbertPoly::expand(&[(4, 1), (3, 1), (3, 2), (2, 3)]);
    ensure(spec.expected_hilbert == want && want.total() == 72, || format!("{:?}", spec.expected_hilbert))?;
    let c = transport(&Hosts::new(2, 6).map_err(|e| e.to_string())?, 4, 1)
        .and_then(|y| y.braiding())
        .map_err(|e| e.to_string())?;
    let rep = verify_presentation(&spec, &c, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(rep.passed(), || format!("{:?}", rep.failures))?;
    ensure(rep.dims.total() == 72, || format!("total {}", rep.dims.total()))?;
    let degrees: Vec<usize> = spec.relations.iter().filter_map(|r| r.poly.homogeneous_degree()).collect();
    ensure(degrees == [3, 3, 4, 4], || format!("relation degrees {degrees:?}"))?;
    let shown = spec.braiding.as_ref().ok_or("no displayed braiding")?;
    for r in &spec.relations {
        ensure(poly_member(shown, &r.poly, DEFAULT_BUDGET).map_err(|e| e.to_string())?, || r.label.clone())?;
    }
    Ok(())
}

fn probe_and_duality() -> Check {
    for m in [2u32, 3] {
        let hosts = Hosts::new(2, m).map_err(|e| e.to_string())?;
        let opts = ClassifyOptions { probe: true, presentations: false, budget: DEFAULT_BUDGET };
        for p in classify_all(&hosts, opts).map_err(|e| e.to_string())? {
            ensure(matches!(p.probe, Some(Probe::Agrees { .. })), || format!("({m},{},{}) {:?}", p.i, p.j, p.probe))?;
        }
    }
    for m in [2u32, 3, 4, 6] {
        let bad = dual_symmetry_violations(m);
        ensure(bad.is_empty(), || format!("m = {m}: {bad:?}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("Hopf axioms of the Radford, dual Radford and Taft-type algebras", hopf_axioms),
        ("presentation and pairing identities of the double", double_presentation),
        ("simple modules: dimensions, identification, non-isomorphism", simples),
        ("projective covers: relations, composition factors, socle, dimension count", projectives),
        ("central idempotents and left ideals of the double", idempotents),
        ("transported Yetter-Drinfeld modules and their braidings", transported),
        ("Nichols tower against the symmetrizer", tower_vs_symmetrizer),
        ("finite Nichols algebras for m = 2", || reproduction(reproduce_thm22(DEFAULT_BUDGET))),
        ("finite Nichols algebras for m = 3", || reproduction(reproduce_thm23(DEFAULT_BUDGET))),
        ("graded dimensions of the (3; 2, 1) Nichols algebra", dims_321),
        ("the 72-dimensional Nichols algebra at (6; 4, 1)", largest),
        ("probe agreement and duality symmetry", probe_and_duality),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.1} s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
