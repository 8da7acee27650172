//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use arrcov::arrangement::{Arrangement, Hyperplane};
use arrcov::cyclofield::{field_matrix_rank, CycNum, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Flats found by brute force: for every subset S with nonempty
/// intersection, the closure of S (all g whose row lies in the span of the
/// augmented rows of S) and its codimension. μ follows Whitney's formula
/// `μ(Y) = Σ_{S : ∩S = Y} (-1)^{|S|}`.
pub fn brute_force_lattice(arr: &Arrangement) -> BTreeMap<Vec<usize>, (usize, i64)> {
    let n = arr.len();
    assert!(n <= 12, "brute force is exponential");
    let rows: Vec<Vec<CycNum>> = arr.hyperplanes().iter().map(Hyperplane::row).collect();
    let linear: Vec<Vec<CycNum>> = arr.hyperplanes().iter().map(|h| h.coeffs.clone()).collect();
    let mut out: BTreeMap<Vec<usize>, (usize, i64)> = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let aug: Vec<Vec<CycNum>> = s.iter().map(|&i| rows[i].clone()).collect();
        let lin: Vec<Vec<CycNum>> = s.iter().map(|&i| linear[i].clone()).collect();
        let r_aug = if s.is_empty() { 0 } else { field_matrix_rank(&aug).unwrap() };
        let r_lin = if s.is_empty() { 0 } else { field_matrix_rank(&lin).unwrap() };
        if r_aug != r_lin {
            continue;
        }
        let support: Vec<usize> = (0..n)
            .filter(|&g| {
                let mut m = aug.clone();
                m.push(rows[g].clone());
                field_matrix_rank(&m).unwrap() == r_aug
            })
            .collect();
        let sign = if s.len().is_multiple_of(2) { 1 } else { -1 };
        let e = out.entry(support).or_insert((r_lin, 0));
        e.1 += sign;
    }
    out
}

pub fn brute_force_poincare(arr: &Arrangement) -> IntPoly {
    let lat = brute_force_lattice(arr);
    let rank = lat.values().map(|(c, _)| *c).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); rank + 1];
    for (c, mu) in lat.values() {
        let sign = if c % 2 == 0 { 1 } else { -1 };
        coeffs[*c] += BigInt::from(sign * mu);
    }
    IntPoly::new(coeffs)
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// Invariant factors from determinant divisors: `d_k = gcd of k×k minors`,
/// `s_k = d_k / d_{k-1}` while `d_k ≠ 0`.
pub fn determinant_divisor_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| big[r][c].clone()).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Determinant over Q(ζ_d) by cofactor expansion.
pub fn cyc_det(m: &[Vec<CycNum>], d: u64) -> CycNum {
    match m.len() {
        0 => CycNum::one(d),
        n => {
            let mut acc = CycNum::zero(d);
            for j in 0..n {
                let minor: Vec<Vec<CycNum>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * &cyc_det(&minor, d);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Rank as the largest size of a nonvanishing minor.
pub fn rank_by_minors(m: &[Vec<CycNum>], d: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .rev()
        .find(|&k| {
            subsets(rows, k).iter().any(|rs| {
                subsets(cols, k).iter().any(|cs| {
                    let minor: Vec<Vec<CycNum>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                    !cyc_det(&minor, d).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

/// Small elements of Q(ζ_3): `a + bζ` with `a, b ∈ [-2, 2]`.
pub fn small_z3() -> impl Strategy<Value = CycNum> {
    (-2i64..=2, -2i64..=2).prop_map(|(a, b)| &CycNum::from_int(3, a) + &(&CycNum::from_int(3, b) * &CycNum::zeta(3)))
}

/// Random arrangements of `1..=max_n` hyperplanes in C^ℓ, ℓ ∈ {2, 3}, with
/// small integer (d = 1) or Q(ζ_3) (d = 3) coefficients. Invalid draws
/// (zero or proportional forms) are rejected.
pub fn small_arrangement(max_n: usize) -> impl Strategy<Value = Arrangement> {
    let over_q = (2usize..=3, 1..=max_n).prop_flat_map(|(ell, n)| {
        prop::collection::vec((-2i64..=2, prop::collection::vec(-2i64..=2, ell)), n).prop_map(move |hs| {
            Arrangement::build_relaxed(ell, 1, hs.iter().map(|(c, v)| Hyperplane::from_ints(*c, v)).collect())
        })
    });
    let over_z3 = (2usize..=3, 1..=max_n).prop_flat_map(|(ell, n)| {
        prop::collection::vec((small_z3(), prop::collection::vec(small_z3(), ell)), n).prop_map(move |hs| {
            Arrangement::build_relaxed(ell, 3, hs.into_iter().map(|(c, v)| Hyperplane::new(c, v)).collect())
        })
    });
    prop_oneof![3 => over_q, 1 => over_z3].prop_filter_map("valid arrangement", |r| r.ok())
}

/// Essential arrangements only.
pub fn small_essential_arrangement(max_n: usize) -> impl Strategy<Value = Arrangement> {
    small_arrangement(max_n).prop_filter("essential", |a| a.linear_rank().unwrap() == a.ambient_dim())
}

pub fn small_int_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}
