//! Cyclic covers `X_m(A)`: nonresonance tests, bounds on the local-system
//! Betti numbers `b_q(L^k_1)`, and the invariants assembled from them.
//!
//! `b_q(X_m) = Σ_{k|m} φ(k)·b_q(L^k_1)`, where `L^k_1` is the rank-one local
//! system with weights `λ_H = 1/k`. Each `b_q(L^k_1)` is bracketed by
//!
//! ```text
//! max_m dim_Q H^q(A•, a_{𝟙+k·m}∧)  ≤  b_q(L^k_1)  ≤  rank H^q(A•_k, a_𝟙∧)
//! ```
//!
//! and closed by nonresonance, `b_0 = 0` for `k > 1`, and the Euler
//! characteristic.

mod reports;

use std::collections::{BTreeMap, HashSet};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arrangement::{dense_edges, intersection_lattice, Arrangement, IntersectionLattice};
use crate::cyclofield::{gcd_u64, Rational};
use crate::error::{Error, Result};
use crate::exactlin::{cohomology_mod_n, cohomology_q};
use crate::osalgebra::{MultiplicationTable, OsAlgebra};

pub use reports::{Charpoly, CoverReport, PeriodicityClass, PeriodicityReport, ZetaReport};

/// Weights `λ_H = k_H / N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub k_vector: Vec<BigInt>,
    pub modulus: u64,
}

impl WeightSystem {
    /// `k_vector = 𝟙`, modulus `k`: the weights of `L^k_1`.
    pub fn uniform(n: usize, modulus: u64) -> Self {
        WeightSystem { k_vector: vec![BigInt::from(1); n], modulus }
    }

    pub fn lambda(&self) -> Vec<Rational> {
        let m = BigInt::from(self.modulus);
        self.k_vector.iter().map(|k| Rational::new(k.clone(), m.clone())).collect()
    }

    /// Weight of the hyperplane at infinity, `-Σ λ_H`.
    pub fn infinity_weight(&self) -> Rational {
        -self.lambda().into_iter().fold(Rational::zero(), |a, b| a + b)
    }
}

fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// STV test on a closure lattice whose index `n` is `H_∞`.
fn stv_on(closure: &IntersectionLattice, w: &WeightSystem) -> bool {
    let mut lambda = w.lambda();
    lambda.push(w.infinity_weight());
    closure.flats().iter().filter(|f| f.dense == Some(true)).all(|f| {
        let sum = f.support.iter().fold(Rational::zero(), |acc, &h| acc + &lambda[h]);
        !is_nonneg_integer(&sum)
    })
}

fn fast_on(closure: &IntersectionLattice, n: usize, m: u64) -> bool {
    m > n as u64
        || closure
            .flats()
            .iter()
            .filter(|f| f.dense == Some(true))
            .all(|f| gcd_u64(f.multiplicity() as u64, m) == 1)
}

/// True iff `λ_Y ∉ Z_{≥0}` for every dense edge `Y` of the projective
/// closure, with `H_∞` weighted by `-Σ λ_H`.
pub fn stv_nonresonant(arr: &Arrangement, w: &WeightSystem) -> Result<bool> {
    if w.k_vector.len() != arr.len() {
        return Err(Error::WeightLength { found: w.k_vector.len(), expected: arr.len() });
    }
    if w.modulus == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(stv_on(&dense_edges(arr), w))
}

/// Sufficient condition for `𝟙/m` to be nonresonant: `m > |A|`, or `m` is
/// coprime to the multiplicity of every dense edge.
pub fn fast_nonresonant(arr: &Arrangement, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(fast_on(&dense_edges(arr), arr.len(), m))
}

/// Candidate shift vectors for the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSearchConfig {
    /// Search all of `{-1,0}^n` when `n` is at most this.
    pub exhaustive_limit: usize,
    /// Above the limit, only vectors with at most this many `-1` entries.
    pub max_nonzero_when_large: usize,
    /// Always tried first, in order.
    pub extra_shifts: Vec<Vec<i64>>,
}

impl Default for ShiftSearchConfig {
    fn default() -> Self {
        ShiftSearchConfig { exhaustive_limit: 16, max_nonzero_when_large: 2, extra_shifts: Vec::new() }
    }
}

impl ShiftSearchConfig {
    /// User shifts, then `{-1,0}`-vectors by number of `-1` entries and
    /// lexicographically by position.
    pub fn candidates(&self, n: usize) -> Result<Vec<Vec<i64>>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for s in &self.extra_shifts {
            if s.len() != n {
                return Err(Error::WeightLength { found: s.len(), expected: n });
            }
            if seen.insert(s.clone()) {
                out.push(s.clone());
            }
        }
        let max_r = if n <= self.exhaustive_limit { n } else { self.max_nonzero_when_large.min(n) };
        for r in 0..=max_r {
            let mut idx: Vec<usize> = (0..r).collect();
            loop {
                let mut v = vec![0i64; n];
                for &i in &idx {
                    v[i] = -1;
                }
                if seen.insert(v.clone()) {
                    out.push(v);
                }
                // Next r-combination of 0..n in lexicographic order.
                let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else { break };
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        Ok(out)
    }
}

/// Bounds on `b_q(L^k_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiInterval {
    pub q: usize,
    pub lower: u64,
    pub upper: u64,
    pub resolved: bool,
    /// Shift `m` whose weights `𝟙 + k·m` attain `lower`.
    pub witness_shift: Option<Vec<i64>>,
}

impl BettiInterval {
    fn exact(q: usize, v: u64) -> Self {
        BettiInterval { q, lower: v, upper: v, resolved: true, witness_shift: None }
    }

    fn new(q: usize, lower: u64, upper: u64, witness_shift: Option<Vec<i64>>) -> Self {
        BettiInterval { q, lower, upper, resolved: lower == upper, witness_shift }
    }
}

/// How a [`LocalBetti`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalMethod {
    /// `k = 1`: the Betti numbers of the complement.
    Trivial,
    /// Concentrated in the top degree with dimension β.
    Nonresonant,
    /// Shift-search lower bound and mod-k upper bound.
    Bounds,
}

impl LocalMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LocalMethod::Trivial => "trivial",
            LocalMethod::Nonresonant => "nonresonant",
            LocalMethod::Bounds => "bounds",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalBetti {
    pub k: u64,
    pub method: LocalMethod,
    pub intervals: Vec<BettiInterval>,
}

impl LocalBetti {
    pub fn is_resolved(&self) -> bool {
        self.intervals.iter().all(|i| i.resolved)
    }

    pub fn values(&self) -> Option<Vec<u64>> {
        self.is_resolved().then(|| self.intervals.iter().map(|i| i.lower).collect())
    }

    fn unresolved_error(&self) -> Error {
        Error::Unresolved {
            k: self.k,
            intervals: self
                .intervals
                .iter()
                .filter(|i| !i.resolved)
                .map(|i| (i.q, i.lower, i.upper))
                .collect(),
        }
    }
}

/// User-asserted values `b_q(L^k_1) = v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Resolution {
    values: BTreeMap<(u64, usize), u64>,
}

impl Resolution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assert(&mut self, k: u64, q: usize, value: u64) -> &mut Self {
        self.values.insert((k, q), value);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn for_k(&self, k: u64) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.values.range((k, 0)..=(k, usize::MAX)).map(|(&(_, q), &v)| (q, v))
    }
}

/// Close a single unresolved degree from `Σ(-1)^q b_q = χ`.
fn propagate_euler(k: u64, intervals: &mut [BettiInterval], chi: i64) -> Result<()> {
    let open: Vec<usize> = (0..intervals.len()).filter(|&q| !intervals[q].resolved).collect();
    let known: i64 = intervals
        .iter()
        .filter(|i| i.resolved)
        .map(|i| if i.q % 2 == 0 { i.lower as i64 } else { -(i.lower as i64) })
        .sum();
    match open.as_slice() {
        [] if known != chi => Err(Error::EulerMismatch { k, expected: chi, found: known }),
        [q] => {
            let q = *q;
            let v = if q % 2 == 0 { chi - known } else { known - chi };
            let iv = &mut intervals[q];
            if v < iv.lower as i64 || v > iv.upper as i64 {
                return Err(Error::BoundsCrossed { k, q, lower: iv.lower, upper: iv.upper });
            }
            iv.lower = v as u64;
            iv.upper = v as u64;
            iv.resolved = true;
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Immutable per-arrangement data shared by all weight systems.
#[derive(Debug)]
struct Context {
    n: usize,
    ell: usize,
    closure: IntersectionLattice,
    table: MultiplicationTable,
    betti: Vec<u64>,
    beta: u64,
    chi: i64,
}

impl Context {
    fn new(arr: &Arrangement) -> Self {
        let lattice = intersection_lattice(arr);
        let p = lattice.poincare_polynomial();
        let ell = arr.ambient_dim();
        let betti: Vec<u64> = (0..=ell)
            .map(|q| p.coeffs().get(q).map_or(0, |c| c.to_u64().expect("Betti numbers are nonnegative")))
            .collect();
        let chi: i64 = betti.iter().enumerate().map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        let table = OsAlgebra::from_lattice(lattice).multiplication_table();
        Context { n: arr.len(), ell, closure: dense_edges(arr), table, betti, beta: chi.unsigned_abs(), chi }
    }

    fn top_only(&self, value: u64) -> Vec<BettiInterval> {
        (0..=self.ell).map(|q| BettiInterval::exact(q, if q == self.ell { value } else { 0 })).collect()
    }

    fn is_nonresonant(&self, k: u64) -> bool {
        fast_on(&self.closure, self.n, k) || stv_on(&self.closure, &WeightSystem::uniform(self.n, k))
    }

    /// Upper bounds from the reduction mod k.
    fn upper(&self, k: u64) -> Result<Vec<u64>> {
        let cx = self.table.complex(&vec![BigInt::from(1); self.n])?;
        let mut dims: Vec<u64> = cohomology_mod_n(&cx, k)?.dims.into_iter().map(|d| d as u64).collect();
        dims.resize(self.ell + 1, 0);
        Ok(dims)
    }

    /// Per-degree maxima of `dim_Q H^q` over shifted weights, with the first
    /// shift attaining each. With `upper`, the search stops once at most one
    /// positive degree is below its upper bound.
    fn lower(
        &self,
        k: u64,
        search: &ShiftSearchConfig,
        upper: Option<&[u64]>,
    ) -> Result<Vec<(u64, Option<Vec<i64>>)>> {
        const CHUNK: usize = 128;
        let candidates = search.candidates(self.n)?;
        let kb = BigInt::from(k);
        let mut best: Vec<(u64, Option<Vec<i64>>)> = vec![(0, None); self.ell + 1];
        for chunk in candidates.chunks(CHUNK) {
            let dims: Vec<Vec<usize>> = chunk
                .par_iter()
                .map(|shift| {
                    let w: Vec<BigInt> = shift.iter().map(|&s| BigInt::from(1) + &kb * s).collect();
                    self.table.complex(&w).map(|cx| cohomology_q(&cx).dims)
                })
                .collect::<Result<_>>()?;
            for (shift, d) in chunk.iter().zip(&dims) {
                for (q, &v) in d.iter().enumerate().take(self.ell + 1) {
                    if v as u64 > best[q].0 {
                        best[q] = (v as u64, Some(shift.clone()));
                    }
                }
            }
            if let Some(up) = upper {
                if (1..=self.ell).filter(|&q| best[q].0 < up[q]).count() <= 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Raw bracket for `b_q(L^k_1)`: full shift search and mod-k upper bound,
    /// before any closing rule is applied.
    fn bounds(&self, k: u64, search: &ShiftSearchConfig) -> Result<Vec<BettiInterval>> {
        if k < 2 {
            return Err(Error::ModulusTooSmall(k));
        }
        let upper = self.upper(k)?;
        let lower = self.lower(k, search, None)?;
        Ok(lower
            .into_iter()
            .zip(upper)
            .enumerate()
            .map(|(q, ((lo, w), hi))| BettiInterval::new(q, lo, hi, w))
            .collect())
    }

    fn local(&self, k: u64, search: &ShiftSearchConfig) -> Result<LocalBetti> {
        if k == 0 {
            return Err(Error::ZeroArgument);
        }
        if k == 1 {
            let intervals = self.betti.iter().enumerate().map(|(q, &b)| BettiInterval::exact(q, b)).collect();
            return Ok(LocalBetti { k, method: LocalMethod::Trivial, intervals });
        }
        if self.is_nonresonant(k) {
            return Ok(LocalBetti { k, method: LocalMethod::Nonresonant, intervals: self.top_only(self.beta) });
        }
        let upper = self.upper(k)?;
        // The search can only matter when at least two positive degrees have
        // a nonzero upper bound; otherwise the Euler constraint decides.
        let open = (1..=self.ell).filter(|&q| upper[q] > 0).count();
        let lower = if open >= 2 {
            self.lower(k, search, Some(&upper))?
        } else {
            vec![(0, None); self.ell + 1]
        };
        let mut intervals = Vec::with_capacity(self.ell + 1);
        for (q, ((lo, w), hi)) in lower.into_iter().zip(upper).enumerate() {
            if lo > hi {
                return Err(Error::BoundsCrossed { k, q, lower: lo, upper: hi });
            }
            intervals.push(if q == 0 { BettiInterval::exact(0, 0) } else { BettiInterval::new(q, lo, hi, w) });
        }
        propagate_euler(k, &mut intervals, self.chi)?;
        Ok(LocalBetti { k, method: LocalMethod::Bounds, intervals })
    }
}

/// Apply assertions for `k`; returns whether any unresolved interval was
/// closed by one.
fn apply_assertions(local: &mut LocalBetti, res: &Resolution, ell: usize, chi: i64) -> Result<bool> {
    let k = local.k;
    let mut used = false;
    for (q, v) in res.for_k(k) {
        if q > ell {
            return Err(Error::AssertionDegree { q, dim: ell });
        }
        let iv = &mut local.intervals[q];
        if v < iv.lower || v > iv.upper {
            return Err(Error::AssertionOutOfBounds { k, q, value: v, lower: iv.lower, upper: iv.upper });
        }
        if !iv.resolved {
            iv.lower = v;
            iv.upper = v;
            iv.resolved = true;
            used = true;
        }
    }
    if used {
        propagate_euler(k, &mut local.intervals, chi)?;
    }
    Ok(used)
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Memoizing front end for all cover computations on one arrangement.
#[derive(Debug)]
pub struct CoverEngine {
    arr: Arrangement,
    ctx: Context,
    search: ShiftSearchConfig,
    cache: Mutex<BTreeMap<u64, LocalBetti>>,
}

impl CoverEngine {
    pub fn new(arr: &Arrangement) -> Self {
        Self::with_search(arr, ShiftSearchConfig::default())
    }

    pub fn with_search(arr: &Arrangement, search: ShiftSearchConfig) -> Self {
        CoverEngine { arr: arr.clone(), ctx: Context::new(arr), search, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    /// Betti numbers of the complement, degrees `0..=ℓ`.
    pub fn betti(&self) -> &[u64] {
        &self.ctx.betti
    }

    pub fn beta(&self) -> u64 {
        self.ctx.beta
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ctx.chi
    }

    /// Lattice of the projective closure with density flags.
    pub fn closure(&self) -> &IntersectionLattice {
        &self.ctx.closure
    }

    pub fn is_nonresonant(&self, k: u64) -> bool {
        self.ctx.is_nonresonant(k)
    }

    pub fn local_betti(&self, k: u64) -> Result<LocalBetti> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&k) {
            return Ok(hit.clone());
        }
        let v = self.ctx.local(k, &self.search)?;
        self.cache.lock().expect("cache lock").insert(k, v.clone());
        Ok(v)
    }

    /// The unclosed bracket from the shift search and the mod-k reduction,
    /// computed even when `k` is nonresonant.
    pub fn local_bounds(&self, k: u64) -> Result<Vec<BettiInterval>> {
        self.ctx.bounds(k, &self.search)
    }

    /// Local Betti numbers for every `k` in `ks`, computed in parallel.
    fn locals(&self, ks: &[u64]) -> Result<Vec<LocalBetti>> {
        let missing: Vec<u64> = {
            let cache = self.cache.lock().expect("cache lock");
            ks.iter().copied().filter(|k| !cache.contains_key(k)).collect()
        };
        let computed: Vec<LocalBetti> =
            missing.par_iter().map(|&k| self.ctx.local(k, &self.search)).collect::<Result<_>>()?;
        let mut cache = self.cache.lock().expect("cache lock");
        for v in computed {
            cache.insert(v.k, v);
        }
        Ok(ks.iter().map(|k| cache[k].clone()).collect())
    }

    /// Exact `b_q(L^k_1)` for each `k` in `ks` (after assertions), and whether
    /// any assertion was needed.
    fn resolved(&self, ks: &[u64], res: &Resolution) -> Result<(Vec<Vec<u64>>, bool)> {
        let mut used = false;
        let mut out = Vec::with_capacity(ks.len());
        for mut local in self.locals(ks)? {
            used |= apply_assertions(&mut local, res, self.ctx.ell, self.ctx.chi)?;
            match local.values() {
                Some(v) => out.push(v),
                None => return Err(local.unresolved_error()),
            }
        }
        Ok((out, used))
    }

    /// Local Betti intervals for `k` with assertions applied.
    pub fn local_betti_resolved(&self, k: u64, res: &Resolution) -> Result<(LocalBetti, bool)> {
        let mut local = self.local_betti(k)?;
        let used = apply_assertions(&mut local, res, self.ctx.ell, self.ctx.chi)?;
        Ok((local, used))
    }
}

/// Bounds on `b_q(L^k_1)` for `q = 0..=ℓ`.
pub fn local_betti(arr: &Arrangement, k: u64, search: &ShiftSearchConfig) -> Result<Vec<BettiInterval>> {
    Ok(CoverEngine::with_search(arr, search.clone()).local_betti(k)?.intervals)
}

/// `b_q(X_m(A))` and the eigenspace dimensions of the monodromy.
pub fn cover_betti(arr: &Arrangement, m: u64, res: &Resolution) -> Result<CoverReport> {
    CoverEngine::new(arr).cover_betti(m, res)
}

pub fn monodromy_charpoly(arr: &Arrangement, m: u64, q: usize, res: &Resolution) -> Result<Charpoly> {
    CoverEngine::new(arr).monodromy_charpoly(m, q, res)
}

pub fn periodicity(arr: &Arrangement, res: &Resolution) -> Result<PeriodicityReport> {
    CoverEngine::new(arr).periodicity(res)
}

pub fn zeta_coefficients(arr: &Arrangement, q: usize, res: &Resolution) -> Result<ZetaReport> {
    CoverEngine::new(arr).zeta_coefficients(q, res)
}

fn lcm_range(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |acc, k| {
        let g = acc.gcd(&k);
        (acc / g).checked_mul(k).ok_or_else(|| Error::Overflow(format!("period lcm(1..{n})")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    pub(crate) fn selberg() -> Arrangement {
        Arrangement::build(
            2,
            1,
            vec![
                Hyperplane::from_ints(0, &[1, 0]),
                Hyperplane::from_ints(0, &[0, 1]),
                Hyperplane::from_ints(0, &[1, -1]),
                Hyperplane::from_ints(-1, &[1, 0]),
                Hyperplane::from_ints(-1, &[0, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn weights() {
        let w = WeightSystem::uniform(5, 3);
        assert_eq!(w.lambda()[0], Rational::new(1.into(), 3.into()));
        assert_eq!(w.infinity_weight(), Rational::new((-5).into(), 3.into()));
    }

    #[test]
    fn selberg_resonance() {
        let a = selberg();
        assert!(stv_nonresonant(&a, &WeightSystem::uniform(5, 2)).unwrap());
        assert!(!stv_nonresonant(&a, &WeightSystem::uniform(5, 3)).unwrap());
        let zero = WeightSystem { k_vector: vec![BigInt::zero(); 5], modulus: 7 };
        assert!(!stv_nonresonant(&a, &zero).unwrap());
        assert!(fast_nonresonant(&a, 6).unwrap());
        assert!(fast_nonresonant(&a, 2).unwrap());
        assert!(!fast_nonresonant(&a, 3).unwrap());
        assert_eq!(fast_nonresonant(&a, 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn candidate_order() {
        let cfg = ShiftSearchConfig { extra_shifts: vec![vec![0, -1, 0]], ..Default::default() };
        let c = cfg.candidates(3).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(c[0], vec![0, -1, 0]);
        assert_eq!(c[1], vec![0, 0, 0]);
        assert_eq!(c[2], vec![-1, 0, 0]);
        assert_eq!(c[4], vec![-1, -1, 0]);
        let large = ShiftSearchConfig { exhaustive_limit: 2, ..Default::default() };
        assert_eq!(large.candidates(5).unwrap().len(), 1 + 5 + 10);
        assert!(cfg.candidates(4).is_err());
    }

    #[test]
    fn selberg_k3() {
        let iv = local_betti(&selberg(), 3, &ShiftSearchConfig::default()).unwrap();
        assert_eq!(iv[0], BettiInterval::exact(0, 0));
        assert_eq!((iv[1].lower, iv[1].upper), (1, 1));
        assert_eq!(iv[1].witness_shift, Some(vec![0, 0, -1, 0, 0]));
        assert_eq!((iv[2].lower, iv[2].upper, iv[2].resolved), (3, 3, true));
    }

    #[test]
    fn nonresonant_shortcut() {
        let e = CoverEngine::new(&selberg());
        let l = e.local_betti(2).unwrap();
        assert_eq!(l.method, LocalMethod::Nonresonant);
        assert_eq!(l.values(), Some(vec![0, 0, 2]));
        let raw = e.local_bounds(2).unwrap();
        for (iv, v) in raw.iter().zip([0, 0, 2]) {
            assert!(iv.lower <= v && v <= iv.upper);
        }
    }

    #[test]
    fn euler_closing() {
        let mut iv = vec![
            BettiInterval::exact(0, 0),
            BettiInterval::new(1, 0, 2, None),
            BettiInterval::exact(2, 3),
        ];
        propagate_euler(3, &mut iv, 2).unwrap();
        assert_eq!((iv[1].lower, iv[1].upper), (1, 1));
        let mut bad = vec![BettiInterval::exact(0, 0), BettiInterval::new(1, 2, 4, None), BettiInterval::exact(2, 3)];
        assert!(matches!(propagate_euler(3, &mut bad, 2), Err(Error::BoundsCrossed { .. })));
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert_eq!(lcm_range(5).unwrap(), 60);
        assert_eq!(lcm_range(7).unwrap(), 420);
    }
}
