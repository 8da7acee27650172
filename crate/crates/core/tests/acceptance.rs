//! Acceptance criteria, one PASS/FAIL line each. Every value is exact.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use arrcov::arrangement::{intersection_lattice, poincare_polynomial, Arrangement};
use arrcov::cli::catalog::{self, catalog};
use arrcov::covers::{CoverEngine, Resolution};
use arrcov::cyclofield::IntPoly;
use arrcov::exactlin::{cohomology_mod_n, cohomology_mod_p, cohomology_q, smith_normal_form, IntMatrix};
use arrcov::osalgebra::{aomoto_matrices, nbc_basis, weights};
use arrcov::Error;
use num_bigint::BigInt;
use proptest::prop_assert_eq;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::{brute_force_lattice, brute_force_poincare, determinant_divisor_factors, small_arrangement, small_int_matrix};

/// Wall-clock budget for a single criterion.
const BUDGET: Duration = Duration::from_secs(60);

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($ctx:tt)+) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: got {:?}, expected {:?}", format!($($ctx)+), l, r));
        }
    }};
}

macro_rules! ensure {
    ($cond:expr, $($ctx:tt)+) => {
        if !$cond {
            return Err(format!($($ctx)+));
        }
    };
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

/// `t^k - 1` written out by hand.
fn t_pow_minus_one(k: usize) -> IntPoly {
    let mut c = vec![0; k + 1];
    c[0] = -1;
    c[k] = 1;
    poly(&c)
}

fn ones(n: usize) -> Vec<BigInt> {
    weights(&vec![1; n])
}

fn betti(engine: &CoverEngine, m: u64) -> std::result::Result<Vec<u64>, String> {
    engine.cover_betti(m, &Resolution::new()).map(|r| r.betti).map_err(|e| format!("m = {m}: {e}"))
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_arrcov")).args(args).output().expect("run arrcov");
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn selberg() -> Check {
    let arr = catalog::selberg();
    ensure_eq!(poincare_polynomial(&arr), poly(&[1, 5, 6]), "P(A,t)");
    let engine = CoverEngine::new(&arr);
    ensure_eq!(engine.beta(), 2, "beta");
    let local = engine.local_betti(3).map_err(|e| e.to_string())?;
    ensure_eq!(local.values(), Some(vec![0, 1, 3]), "local Betti at k = 3");
    let q1 = &local.intervals[1];
    ensure!(q1.witness_shift.is_some(), "no witness shift for b_1 at k = 3");
    ensure_eq!(betti(&engine, 6)?, vec![1, 7, 18], "cover m = 6");
    for m in [1u64, 2, 4, 5, 7, 8] {
        ensure_eq!(betti(&engine, m)?, vec![1, 5, 4 + 2 * m], "cover m = {m}");
    }
    let z = engine.zeta_coefficients(1, &Resolution::new()).map_err(|e| e.to_string())?;
    ensure_eq!(z.finite_terms, vec![(1, 5), (3, 2)], "zeta q = 1 finite terms");
    ensure_eq!(z.tail_beta, 0, "zeta q = 1 tail");
    let (code, stdout) = cli(&["zeta", "--catalog", "selberg", "--q", "1"]);
    ensure_eq!(code, Some(0), "zeta exit code");
    ensure_eq!(stdout.trim(), r#"{"finite_terms":[[1,5],[3,2]],"tail_beta":0}"#, "zeta JSON");
    Ok(())
}

fn maclane() -> Check {
    let arr = catalog::maclane_decone();
    ensure_eq!(poincare_polynomial(&arr), poly(&[1, 7, 13]), "P(A,t)");
    let engine = CoverEngine::new(&arr);
    ensure_eq!(engine.beta(), 7, "beta");
    let cx = aomoto_matrices(&arr, &ones(arr.len())).map_err(|e| e.to_string())?;
    for n in 2..=8u64 {
        let dims = cohomology_mod_n(&cx, n).map_err(|e| e.to_string())?.dims;
        for (q, d) in dims.iter().enumerate() {
            ensure!(q == 2 || *d == 0, "H^{q} mod {n} has rank {d}");
        }
    }
    ensure_eq!(betti(&engine, 8)?, vec![1, 7, 62], "cover m = 8");
    let p = engine.periodicity(&Resolution::new()).map_err(|e| e.to_string())?;
    ensure!(!p.classes.is_empty(), "no periodicity classes");
    for c in &p.classes {
        ensure_eq!(c.polynomials[1], poly(&[7]), "p_1 for {:?}", c.divisors);
        ensure_eq!(c.polynomials[2], poly(&[6, 7]), "p_2 for {:?}", c.divisors);
    }
    Ok(())
}

fn hessian() -> Check {
    let arr = catalog::hessian_decone();
    ensure_eq!(poincare_polynomial(&arr), poly(&[1, 11, 28]), "P(A,t)");
    let engine = CoverEngine::new(&arr);
    ensure_eq!(engine.beta(), 18, "beta");
    let cx = aomoto_matrices(&arr, &ones(arr.len())).map_err(|e| e.to_string())?;
    for n in [2u64, 4] {
        let dims = cohomology_mod_n(&cx, n).map_err(|e| e.to_string())?.dims;
        ensure_eq!(dims, vec![0, 2, 20], "H mod {n}");
    }
    for k in [2u64, 4] {
        let bounds = engine.local_bounds(k).map_err(|e| e.to_string())?;
        ensure_eq!(bounds[1].lower, 2, "shift-search lower bound at k = {k}, q = 1");
    }
    ensure_eq!(betti(&engine, 12)?, vec![1, 17, 232], "cover m = 12");
    let t1 = poly(&[-1, 1]);
    let delta1 = t1.pow(9).mul(&t_pow_minus_one(4).pow(2));
    let delta2 = t1.pow(8).mul(&t_pow_minus_one(4).pow(2)).mul(&t_pow_minus_one(12).pow(18));
    let expected_exps: [BTreeMap<u64, u64>; 2] = [
        [(1, 11), (2, 2), (4, 2)].into_iter().collect(),
        [(1, 28), (2, 20), (3, 18), (4, 20), (6, 18), (12, 18)].into_iter().collect(),
    ];
    for (q, (expanded, exps)) in [(1usize, (&delta1, &expected_exps[0])), (2, (&delta2, &expected_exps[1]))] {
        let c = engine.monodromy_charpoly(12, q, &Resolution::new()).map_err(|e| e.to_string())?;
        ensure_eq!(&c.exponents, exps, "Φ-exponents of Δ_{q}");
        ensure_eq!(&c.expanded, expanded, "expanded Δ_{q}");
    }
    Ok(())
}

fn ceva() -> Check {
    let arr = catalog::ceva3();
    let cx = aomoto_matrices(&arr, &ones(arr.len())).map_err(|e| e.to_string())?;
    let dims = cohomology_mod_n(&cx, 3).map_err(|e| e.to_string())?.dims;
    ensure_eq!(dims[1], 2, "H^1 mod 3");
    let engine = CoverEngine::new(&arr);
    let local = engine.local_betti(3).map_err(|e| e.to_string())?;
    let q1 = &local.intervals[1];
    ensure!(!q1.resolved, "q = 1 at k = 3 resolved to {}", q1.lower);
    ensure_eq!(q1.upper, 2, "upper bound at q = 1");
    ensure!(q1.lower <= 1, "lower bound {} at q = 1", q1.lower);
    match engine.cover_betti(3, &Resolution::new()) {
        Err(Error::Unresolved { k: 3, intervals }) => {
            ensure!(intervals.iter().any(|&(q, lo, hi)| q == 1 && lo <= 1 && hi == 2), "intervals {intervals:?}");
        }
        other => return Err(format!("cover m = 3: {other:?}")),
    }
    let (code, _) = cli(&["cover-betti", "--catalog", "ceva3", "--m", "3"]);
    ensure_eq!(code, Some(2), "cover-betti exit code");
    Ok(())
}

fn profile(arr: &Arrangement, w: &[i64]) -> (Vec<usize>, Vec<usize>) {
    let cx = aomoto_matrices(arr, &weights(w)).unwrap();
    (cohomology_q(&cx).dims, cohomology_mod_p(&cx, 5).unwrap().dims)
}

fn catalog_structure(key: &str, arr: &Arrangement) -> Check {
    let p = poincare_polynomial(arr);
    let counts: Vec<BigInt> = nbc_basis(arr).iter().map(|b| BigInt::from(b.len())).collect();
    ensure_eq!(counts.as_slice(), p.coeffs(), "{key}: NBC counts");
    let n = arr.len();
    let w: Vec<i64> = (0..n as i64).map(|i| i % 3 - 1).collect();
    for seed in [vec![1; n], w.clone()] {
        let cx = aomoto_matrices(arr, &weights(&seed)).map_err(|e| e.to_string())?;
        for pair in cx.diff.windows(2) {
            ensure!(pair[1].to_dense().mul(&pair[0].to_dense()).is_zero(), "{key}: D^(q+1) D^q != 0");
        }
    }
    let t = poly(&[0, 1]);
    for h in 0..n {
        let del = poincare_polynomial(&arr.deletion(h).map_err(|e| e.to_string())?);
        let res = poincare_polynomial(&arr.restriction(h).map_err(|e| e.to_string())?);
        ensure_eq!(p, del.add(&t.mul(&res)), "{key}: deletion-restriction at {h}");
    }
    ensure_eq!(poincare_polynomial(&arr.cone()), poly(&[1, 1]).mul(&p), "{key}: cone");
    let order: Vec<usize> = (0..n).rev().collect();
    let permuted = arr.permuted(&order).map_err(|e| e.to_string())?;
    let pw: Vec<i64> = order.iter().map(|&i| w[i]).collect();
    ensure_eq!(profile(arr, &vec![1; n]), profile(&permuted, &vec![1; n]), "{key}: permutation, unit weights");
    ensure_eq!(profile(arr, &w), profile(&permuted, &pw), "{key}: permutation, mixed weights");
    Ok(())
}

fn catalog_covers(key: &str, arr: &Arrangement) -> Check {
    let engine = CoverEngine::new(arr);
    let chi = engine.euler_characteristic();
    let mut table: Vec<(u64, Vec<u64>)> = Vec::new();
    for m in 1..=12u64 {
        let r = match engine.cover_betti(m, &Resolution::new()) {
            Ok(r) => r,
            Err(Error::Unresolved { .. }) => continue,
            Err(e) => return Err(format!("{key} m = {m}: {e}")),
        };
        let euler: i64 = r.betti.iter().enumerate().map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        ensure_eq!(euler, m as i64 * chi, "{key}: Euler identity at m = {m}");
        for (q, &b) in r.betti.iter().enumerate() {
            let c = engine.monodromy_charpoly(m, q, &Resolution::new()).map_err(|e| e.to_string())?;
            ensure_eq!(c.expanded.degree(), Some(b as usize), "{key}: deg Δ_{q} at m = {m}");
        }
        table.push((m, r.betti));
    }
    for (k, bk) in &table {
        for (m, bm) in &table {
            if m % k == 0 {
                ensure!(bk.iter().zip(bm).all(|(a, b)| a <= b), "{key}: b(X_{k}) > b(X_{m})");
            }
        }
    }
    Ok(())
}

fn properties() -> Check {
    for entry in catalog() {
        catalog_structure(entry.key, &entry.arrangement)?;
        catalog_covers(entry.key, &entry.arrangement)?;
    }
    let engine = CoverEngine::new(&catalog::selberg());
    let p = engine.periodicity(&Resolution::new()).map_err(|e| e.to_string())?;
    for m in 1..=30u64 {
        let b: Vec<BigInt> = betti(&engine, m)?.into_iter().map(BigInt::from).collect();
        ensure_eq!(p.evaluate(m), b, "Selberg periodicity at m = {m}");
    }
    Ok(())
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn oracles() -> Check {
    runner(200)
        .run(&small_arrangement(6), |arr| {
            let lat = intersection_lattice(&arr);
            let ours: BTreeMap<Vec<usize>, (usize, i64)> =
                lat.flats().iter().map(|f| (f.support.clone(), (f.codim, f.mobius))).collect();
            prop_assert_eq!(ours, brute_force_lattice(&arr));
            prop_assert_eq!(lat.poincare_polynomial(), brute_force_poincare(&arr));
            Ok(())
        })
        .map_err(|e| format!("lattice oracle: {e}"))?;
    runner(300)
        .run(&small_int_matrix(5), |m| {
            let snf = smith_normal_form(&IntMatrix::from_rows(&m).unwrap());
            prop_assert_eq!(snf.invariant_factors, determinant_divisor_factors(&m));
            Ok(())
        })
        .map_err(|e| format!("SNF oracle: {e}"))?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 selberg", selberg),
        ("2 maclane decone", maclane),
        ("3 hessian decone", hessian),
        ("4 ceva3 unresolved gap", ceva),
        ("5 property suites on the catalog", properties),
        ("6 oracle equivalence", oracles),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed < BUDGET {
                Ok(())
            } else {
                Err(format!("took {elapsed:.1?}, budget {BUDGET:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("PASS {name} ({elapsed:.1?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({elapsed:.1?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
