use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{divisors, lcm_range, CoverEngine, Resolution};
use crate::cyclofield::{cyclotomic_polynomial, euler_phi, IntPoly};
use crate::error::{Error, Result};

/// Betti numbers of `X_m(A)` with the monodromy eigenspace dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub m: u64,
    pub betti: Vec<u64>,
    /// `charpoly_exponents[q][k] = d^(m)_{k,q}` over divisors `k` of `m`,
    /// nonzero entries only.
    pub charpoly_exponents: Vec<BTreeMap<u64, u64>>,
    /// False if an assertion closed an unresolved interval.
    pub exact: bool,
}

/// `Δ^(m)_q(t) = Π_{k|m} Φ_k(t)^{d_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charpoly {
    pub m: u64,
    pub q: usize,
    pub exponents: BTreeMap<u64, u64>,
    pub expanded: IntPoly,
    /// The same polynomial as `Π (t^k - 1)^{e_k}`, when it factors that way.
    pub power_form: Option<Vec<(u64, u64)>>,
    pub exact: bool,
}

impl Charpoly {
    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|(&k, &e)| euler_phi(k).expect("k > 0") * e).sum()
    }
}

/// Greedy rewrite of a Φ-exponent map as `Π (t^k - 1)^{e_k}`, largest `k`
/// first, ascending in the result.
pub fn power_form(exponents: &BTreeMap<u64, u64>) -> Option<Vec<(u64, u64)>> {
    let mut rest = exponents.clone();
    rest.retain(|_, e| *e > 0);
    let mut out = Vec::new();
    while let Some((&k, &c)) = rest.iter().next_back() {
        for d in divisors(k) {
            let e = rest.get_mut(&d)?;
            if *e < c {
                return None;
            }
            *e -= c;
            if *e == 0 {
                rest.remove(&d);
            }
        }
        out.push((k, c));
    }
    out.reverse();
    Some(out)
}

/// Residues sharing one divisor pattern `{k ≤ n : k | i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityClass {
    pub divisors: Vec<u64>,
    /// Smallest residue in the class, `lcm(divisors)`.
    pub representative: u64,
    /// Number of residues in `1..=N` in the class.
    pub residue_count: u64,
    /// `p_{q}` for `q = 0..=ℓ`, constant except in the top degree.
    pub polynomials: Vec<IntPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub period: u64,
    pub n: usize,
    pub classes: Vec<PeriodicityClass>,
    pub exact: bool,
}

impl PeriodicityReport {
    /// `{k ≤ n : k | i}`.
    pub fn pattern(&self, i: u64) -> Vec<u64> {
        (1..=self.n as u64).filter(|k| i.is_multiple_of(*k)).collect()
    }

    /// The polynomials `p_{q,i}` of the class of `i mod N`.
    pub fn polynomials(&self, i: u64) -> &[IntPoly] {
        let pat = self.pattern(i);
        &self.classes.iter().find(|c| c.divisors == pat).expect("every pattern has a class").polynomials
    }

    /// `p_{q, m mod N}(m)` for every degree.
    pub fn evaluate(&self, m: u64) -> Vec<BigInt> {
        let x = BigInt::from(m);
        self.polynomials(m).iter().map(|p| p.eval(&x)).collect()
    }
}

/// `ζ_{A,q}(s) = ζ(s)·Σ_k c_k k^{-s} + β·[q = ℓ]·ζ(s-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReport {
    pub q: usize,
    pub finite_terms: Vec<(u64, u64)>,
    pub tail_beta: u64,
    pub exact: bool,
}

impl CoverEngine {
    fn ell(&self) -> usize {
        self.ctx.ell
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q > self.ell() {
            return Err(Error::AssertionDegree { q, dim: self.ell() });
        }
        Ok(())
    }

    pub fn cover_betti(&self, m: u64, res: &Resolution) -> Result<CoverReport> {
        if m == 0 {
            return Err(Error::ZeroArgument);
        }
        let ks = divisors(m);
        let (locals, used) = self.resolved(&ks, res)?;
        let ell = self.ell();
        let mut betti = vec![0u64; ell + 1];
        let mut charpoly_exponents = vec![BTreeMap::new(); ell + 1];
        for (&k, b) in ks.iter().zip(&locals) {
            let phi = euler_phi(k)?;
            for q in 0..=ell {
                betti[q] += phi * b[q];
                if b[q] > 0 {
                    charpoly_exponents[q].insert(k, b[q]);
                }
            }
        }
        Ok(CoverReport { m, betti, charpoly_exponents, exact: !used })
    }

    pub fn monodromy_charpoly(&self, m: u64, q: usize, res: &Resolution) -> Result<Charpoly> {
        self.check_degree(q)?;
        let report = self.cover_betti(m, res)?;
        let exponents = report.charpoly_exponents[q].clone();
        let mut expanded = IntPoly::one();
        for (&k, &e) in &exponents {
            expanded = expanded.mul(&cyclotomic_polynomial(k)?.pow(e));
        }
        let power_form = power_form(&exponents);
        Ok(Charpoly { m, q, exponents, expanded, power_form, exact: report.exact })
    }

    pub fn periodicity(&self, res: &Resolution) -> Result<PeriodicityReport> {
        let n = self.arr.len();
        let ell = self.ell();
        let period = lcm_range(n as u64)?;
        let ks: Vec<u64> = (1..=n as u64).collect();
        let (locals, used) = self.resolved(&ks, res)?;
        let phis: Vec<u64> = ks.iter().map(|&k| euler_phi(k)).collect::<Result<_>>()?;

        // The pattern of i depends only on g = gcd(i, N); there are φ(N/g)
        // residues with that gcd.
        let mut classes: BTreeMap<Vec<u64>, (u64, u64)> = BTreeMap::new();
        for g in divisors(period) {
            let pat: Vec<u64> = ks.iter().copied().filter(|k| g % k == 0).collect();
            let rep = pat.iter().fold(1u64, |a, &k| a.lcm(&k));
            let entry = classes.entry(pat).or_insert((rep, 0));
            entry.1 += euler_phi(period / g)?;
        }

        let mut out: Vec<PeriodicityClass> = classes
            .into_iter()
            .map(|(pat, (representative, residue_count))| {
                let mut consts = vec![0i64; ell + 1];
                for (i, &k) in ks.iter().enumerate() {
                    if pat.contains(&k) {
                        for q in 1..ell {
                            consts[q] += (phis[i] * locals[i][q]) as i64;
                        }
                    }
                }
                let mut polys: Vec<IntPoly> = Vec::with_capacity(ell + 1);
                polys.push(IntPoly::one());
                for &c in &consts[1..ell] {
                    polys.push(IntPoly::from_i64(&[c]));
                }
                if ell > 0 {
                    let alt: i64 = (1..ell).map(|q| if q % 2 == 0 { consts[q] } else { -consts[q] }).sum();
                    let sign = if (ell + 1).is_multiple_of(2) { 1 } else { -1 };
                    polys.push(IntPoly::from_i64(&[sign * (1 + alt), self.ctx.beta as i64]));
                }
                PeriodicityClass { divisors: pat, representative, residue_count, polynomials: polys }
            })
            .collect();
        out.sort_by_key(|c| c.representative);
        Ok(PeriodicityReport { period, n, classes: out, exact: !used })
    }

    pub fn zeta_coefficients(&self, q: usize, res: &Resolution) -> Result<ZetaReport> {
        self.check_degree(q)?;
        let n = self.arr.len() as u64;
        let ks: Vec<u64> = (1..=n).collect();
        let (locals, used) = self.resolved(&ks, res)?;
        let mut finite_terms = Vec::new();
        for (&k, b) in ks.iter().zip(&locals) {
            let c = euler_phi(k)? * b[q];
            if c > 0 {
                finite_terms.push((k, c));
            }
        }
        let tail_beta = if q == self.ell() { self.ctx.beta } else { 0 };
        Ok(ZetaReport { q, finite_terms, tail_beta, exact: !used })
    }
}
