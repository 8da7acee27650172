//! The Orlik-Solomon algebra over Z in the no-broken-circuit basis, and the
//! integer matrices of left multiplication by `a_k = Σ k_H a_H`.
//!
//! Affine conventions: `e_S = 0` whenever the hyperplanes of `S` have empty
//! intersection, and `∂e_C = 0` for every circuit `C` (a minimal dependent set
//! with nonempty intersection). Broken circuits are taken with respect to the
//! input order of the hyperplanes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::{intersection_lattice, Arrangement, IntersectionLattice};
use crate::error::{Error, Result};
use crate::exactlin::SparseIntMatrix;

/// A basis monomial `e_S`, with `S` strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NbcMonomial(pub Vec<usize>);

impl NbcMonomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// Sparse integer combination of NBC monomials; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntCombination(BTreeMap<NbcMonomial, BigInt>);

impl IntCombination {
    pub fn zero() -> Self {
        IntCombination(BTreeMap::new())
    }

    pub fn monomial(m: NbcMonomial) -> Self {
        let mut map = BTreeMap::new();
        map.insert(m, BigInt::from(1));
        IntCombination(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NbcMonomial, &BigInt)> {
        self.0.iter()
    }

    pub fn coefficient(&self, m: &NbcMonomial) -> BigInt {
        self.0.get(m).cloned().unwrap_or_default()
    }

    /// `self += factor · other`
    pub fn add_scaled(&mut self, other: &IntCombination, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.0 {
            let entry = self.0.entry(m.clone()).or_default();
            *entry += c * factor;
            if entry.is_zero() {
                self.0.remove(m);
            }
        }
    }
}

/// Sign of the permutation sorting `h` into the increasing tuple `s`, and the
/// merged tuple; `None` if `h ∈ s`.
fn insert_sorted(h: usize, s: &[usize]) -> Option<(i32, Vec<usize>)> {
    let pos = match s.binary_search(&h) {
        Ok(_) => return None,
        Err(p) => p,
    };
    let mut t = Vec::with_capacity(s.len() + 1);
    t.extend_from_slice(&s[..pos]);
    t.push(h);
    t.extend_from_slice(&s[pos..]);
    Some((if pos % 2 == 0 { 1 } else { -1 }, t))
}

/// Sign that sorts the concatenation of two disjoint increasing tuples.
fn merge_sign(a: &[usize], b: &[usize]) -> i32 {
    let inversions: usize = a.iter().map(|x| b.iter().filter(|y| *y < x).count()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The Orlik-Solomon algebra of an arrangement, with its NBC basis and a
/// straightening memo.
#[derive(Debug, Clone)]
pub struct OsAlgebra {
    lattice: IntersectionLattice,
    bases: Vec<Vec<NbcMonomial>>,
    positions: Vec<HashMap<NbcMonomial, usize>>,
    memo: HashMap<Vec<usize>, IntCombination>,
}

impl OsAlgebra {
    pub fn new(arr: &Arrangement) -> Self {
        Self::from_lattice(intersection_lattice(arr))
    }

    pub fn from_lattice(lattice: IntersectionLattice) -> Self {
        let bases = nbc_from_lattice(&lattice);
        let positions = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        OsAlgebra { lattice, bases, positions, memo: HashMap::new() }
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    pub fn bases(&self) -> &[Vec<NbcMonomial>] {
        &self.bases
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.lattice.num_hyperplanes()
    }

    /// Some broken circuit inside the independent tuple `s`, returned with the
    /// hyperplane completing it to a circuit. `None` iff `s` is NBC.
    fn find_broken_circuit(&self, s: &[usize]) -> Option<(usize, Vec<usize>)> {
        let lat = &self.lattice;
        // Rightmost suffix whose closure contains a hyperplane smaller than its
        // first element.
        for i in (0..s.len()).rev() {
            let suffix = &s[i..];
            let y = lat.flat_of(suffix).expect("independent tuples meet");
            let h = lat.flats()[y].support[0];
            if h < s[i] {
                // Shrink to a minimal B ⊆ suffix with h ⊇ ∩B; then B ∪ {h} is a
                // circuit with minimum h.
                let mut b = suffix.to_vec();
                let mut k = 0;
                while k < b.len() {
                    let mut trial = b.clone();
                    trial.remove(k);
                    let y = lat.flat_of(&trial).expect("subsets of independent sets meet");
                    if lat.contains(y, h) {
                        b = trial;
                    } else {
                        k += 1;
                    }
                }
                return Some((h, b));
            }
        }
        None
    }

    /// Express `e_s` in the NBC basis.
    pub fn straighten(&mut self, s: &[usize]) -> Result<IntCombination> {
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingTuple(s.to_vec()));
        }
        if let Some(&bad) = s.iter().find(|&&h| h >= self.num_hyperplanes()) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.num_hyperplanes() });
        }
        Ok(self.straighten_inner(s))
    }

    fn straighten_inner(&mut self, s: &[usize]) -> IntCombination {
        if let Some(hit) = self.memo.get(s) {
            return hit.clone();
        }
        let result = self.straighten_uncached(s);
        self.memo.insert(s.to_vec(), result.clone());
        result
    }

    fn straighten_uncached(&mut self, s: &[usize]) -> IntCombination {
        // Empty intersection: e_S is a generator of the ideal. Dependent with
        // nonempty intersection: S ⊇ circuit C and e_S = ±e_{S∖C}·e_c·∂e_C.
        if !self.lattice.is_independent(s) {
            return IntCombination::zero();
        }
        let Some((h, broken)) = self.find_broken_circuit(s) else {
            return IntCombination::monomial(NbcMonomial(s.to_vec()));
        };
        // C = (h, b_1, …, b_p) with h smallest, ∂e_C = e_B + Σ_{j≥1} (-1)^j e_{C∖b_j},
        // so e_B = -Σ_j (-1)^j e_{C∖b_j}, where C∖b_j = B with b_j replaced by h.
        let rest: Vec<usize> = s.iter().copied().filter(|x| broken.binary_search(x).is_err()).collect();
        let sign_bs = merge_sign(&broken, &rest);
        let mut out = IntCombination::zero();
        for j in 0..broken.len() {
            let sign_boundary = if (j + 1) % 2 == 0 { 1 } else { -1 };
            // term = -sign_boundary · e_{(h, B∖b_j)} ∧ e_rest
            let mut head = Vec::with_capacity(broken.len());
            head.push(h);
            head.extend(broken.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x));
            let sign_merge = merge_sign(&head, &rest);
            let mut merged: Vec<usize> = head.iter().chain(&rest).copied().collect();
            merged.sort_unstable();
            let coeff = -sign_boundary * sign_merge * sign_bs;
            let sub = self.straighten_inner(&merged);
            out.add_scaled(&sub, &BigInt::from(coeff));
        }
        out
    }

    /// Matrix of left multiplication by `a_H` from degree q to q+1.
    pub fn multiplication_matrix(&mut self, h: usize, q: usize) -> SparseIntMatrix {
        let cols = self.bases.get(q).map_or(0, Vec::len);
        let rows = self.bases.get(q + 1).map_or(0, Vec::len);
        let mut entries: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for c in 0..cols {
            let s = self.bases[q][c].0.clone();
            let Some((sign, t)) = insert_sorted(h, &s) else { continue };
            let comb = self.straighten_inner(&t);
            for (m, v) in comb.terms() {
                let r = self.positions[q + 1][m];
                *entries.entry((r, c)).or_default() += v * sign;
            }
        }
        SparseIntMatrix {
            rows,
            cols,
            entries: entries.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect(),
        }
    }

    /// Left-multiplication matrices of every generator in every degree.
    pub fn multiplication_table(&mut self) -> MultiplicationTable {
        let n = self.num_hyperplanes();
        let mats = (0..self.bases.len())
            .map(|q| (0..n).map(|h| self.multiplication_matrix(h, q)).collect())
            .collect();
        MultiplicationTable { bases: self.bases.clone(), mats }
    }

    /// The Aomoto complex for integer weights `k`.
    pub fn aomoto_complex(&mut self, k: &[BigInt]) -> Result<AomotoComplex> {
        self.multiplication_table().complex(k)
    }
}

/// Per-generator multiplication matrices; `mats[q][h]` maps degree q to q+1.
#[derive(Debug, Clone)]
pub struct MultiplicationTable {
    bases: Vec<Vec<NbcMonomial>>,
    mats: Vec<Vec<SparseIntMatrix>>,
}

impl MultiplicationTable {
    pub fn num_hyperplanes(&self) -> usize {
        self.mats.first().map_or(0, Vec::len)
    }

    /// `D^q = Σ_H k_H · (a_H ∧)`.
    pub fn complex(&self, k: &[BigInt]) -> Result<AomotoComplex> {
        let n = self.num_hyperplanes();
        if k.len() != n {
            return Err(Error::WeightLength { found: k.len(), expected: n });
        }
        let diff = self
            .mats
            .iter()
            .map(|per_h| {
                let (rows, cols) = (per_h[0].rows, per_h[0].cols);
                let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
                for (m, kh) in per_h.iter().zip(k) {
                    if kh.is_zero() {
                        continue;
                    }
                    for (r, c, v) in &m.entries {
                        *acc.entry((*r, *c)).or_default() += v * kh;
                    }
                }
                let entries =
                    acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect();
                SparseIntMatrix { rows, cols, entries }
            })
            .collect();
        Ok(AomotoComplex { bases: self.bases.clone(), diff })
    }
}

/// NBC monomials per degree `0..=rank`: `S = (s_1 < … < s_p)` is NBC iff each
/// suffix is independent and `s_i` is the smallest hyperplane containing
/// `∩{s_i, …, s_p}`.
fn nbc_from_lattice(lat: &IntersectionLattice) -> Vec<Vec<NbcMonomial>> {
    let n = lat.num_hyperplanes();
    let mut bases: Vec<Vec<NbcMonomial>> = vec![Vec::new(); lat.rank() + 1];
    // Grow suffixes leftwards: (flat id, reversed tuple).
    let mut frontier: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((y, rev)) = frontier.pop() {
        let mut tuple = rev.clone();
        tuple.reverse();
        bases[tuple.len()].push(NbcMonomial(tuple));
        let upper = rev.last().copied().unwrap_or(n);
        for s in 0..upper {
            let Some(z) = lat.meet(y, s) else { continue };
            let fz = &lat.flats()[z];
            if fz.codim == rev.len() + 1 && fz.support[0] == s {
                let mut next = rev.clone();
                next.push(s);
                frontier.push((z, next));
            }
        }
    }
    for b in &mut bases {
        b.sort();
    }
    bases
}

/// NBC basis of the Orlik-Solomon algebra, per degree.
pub fn nbc_basis(arr: &Arrangement) -> Vec<Vec<NbcMonomial>> {
    nbc_from_lattice(&intersection_lattice(arr))
}

/// Class of `e_s` in the NBC basis of the Orlik-Solomon algebra of `arr`.
pub fn straighten(arr: &Arrangement, s: &[usize]) -> Result<IntCombination> {
    OsAlgebra::new(arr).straighten(s)
}

/// The complex `(A•_Z, a_k∧)` in the NBC basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AomotoComplex {
    pub bases: Vec<Vec<NbcMonomial>>,
    /// `diff[q]` maps degree q to degree q+1 (rows indexed by `bases[q+1]`).
    pub diff: Vec<SparseIntMatrix>,
}

/// Build the Aomoto complex of `arr` for integer weights `k`.
pub fn aomoto_matrices(arr: &Arrangement, k: &[BigInt]) -> Result<AomotoComplex> {
    OsAlgebra::new(arr).aomoto_complex(k)
}

pub fn weights(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    fn selberg() -> Arrangement {
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

    fn mono(s: &[usize]) -> NbcMonomial {
        NbcMonomial(s.to_vec())
    }

    #[test]
    fn selberg_nbc_counts() {
        let counts: Vec<usize> = nbc_basis(&selberg()).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 5, 6]);
    }

    #[test]
    fn single_hyperplane_counts() {
        let a = Arrangement::build(1, 1, vec![Hyperplane::from_ints(0, &[1])]).unwrap();
        let counts: Vec<usize> = nbc_basis(&a).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1]);
    }

    #[test]
    fn straighten_examples() {
        let a = selberg();
        let mut os = OsAlgebra::new(&a);
        for q in 0..3 {
            for m in os.bases()[q].clone() {
                assert_eq!(os.straighten(&m.0).unwrap(), IntCombination::monomial(m.clone()));
            }
        }
        // ∂e_{012} = e_12 - e_02 + e_01 = 0, so e_12 = e_02 - e_01.
        let c = os.straighten(&[1, 2]).unwrap();
        let mut expected = IntCombination::zero();
        expected.add_scaled(&IntCombination::monomial(mono(&[0, 2])), &BigInt::from(1));
        expected.add_scaled(&IntCombination::monomial(mono(&[0, 1])), &BigInt::from(-1));
        assert_eq!(c, expected);
        // x and x - 1 are parallel.
        assert!(os.straighten(&[0, 3]).unwrap().is_zero());
        assert!(matches!(os.straighten(&[2, 1]), Err(Error::NonIncreasingTuple(_))));
    }

    #[test]
    fn selberg_unit_weights() {
        let a = selberg();
        let cx = aomoto_matrices(&a, &weights(&[1; 5])).unwrap();
        let d0 = cx.diff[0].to_dense();
        assert_eq!(d0.nrows(), 5);
        for r in 0..5 {
            assert_eq!(d0[(r, 0)], BigInt::from(1));
        }
        let d1 = cx.diff[1].to_dense();
        assert!(d1.mul(&d0).is_zero());
        let zero = aomoto_matrices(&a, &weights(&[0; 5])).unwrap();
        assert!(zero.diff.iter().all(|d| d.entries.is_empty()));
        assert!(aomoto_matrices(&a, &weights(&[1; 4])).is_err());
    }
}
