//! Exact integer linear algebra: Smith normal form, ranks over Q and Z/p,
//! and cohomology of cochain complexes of free modules over Q and Z/N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::osalgebra::AomotoComplex;

/// Sparse integer matrix in triplet form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `(row, col, value)` with nonzero values, sorted by `(row, col)`.
    pub entries: Vec<(usize, usize, BigInt)>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in &self.entries {
            m[(*r, *c)] += v;
        }
        m
    }
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedMatrix { row: i, found: r.len(), expected: cols });
            }
            data.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

/// Invariant factors `d_1 | d_2 | …` of an integer matrix (nonzero ones only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// Column operations applied during reduction, as `Q` and `Q^{-1}`.
struct ColumnTransforms {
    q: Vec<Vec<BigInt>>,
    q_inv: Vec<Vec<BigInt>>,
}

impl ColumnTransforms {
    fn new(n: usize) -> Self {
        let id = IntMatrix::identity(n).to_rows();
        ColumnTransforms { q: id.clone(), q_inv: id }
    }

    fn swap(&mut self, i: usize, j: usize) {
        for row in &mut self.q {
            row.swap(i, j);
        }
        self.q_inv.swap(i, j);
    }

    /// col_j -= f * col_i
    fn axpy(&mut self, j: usize, i: usize, f: &BigInt) {
        for row in &mut self.q {
            let t = &row[i] * f;
            row[j] -= t;
        }
        // Inverse: row_i += f * row_j
        let rj = self.q_inv[j].clone();
        for (x, y) in self.q_inv[i].iter_mut().zip(rj) {
            *x += f * y;
        }
    }
}

/// Diagonalise `a` in place by unimodular row and column operations, always
/// pivoting on the smallest nonzero absolute entry (ties in row-major order).
/// Returns the nonzero diagonal, which forms a divisibility chain.
fn snf_reduce(a: &mut [Vec<BigInt>], cols: usize, mut track: Option<&mut ColumnTransforms>) -> Vec<BigInt> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return diag };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                if let Some(tr) = track.as_deref_mut() {
                    tr.swap(t, pj);
                }
            }
            if a[t][t].is_negative() {
                for x in a[t].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = a[i][t].div_floor(&pivot);
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[t]).skip(t) {
                    *x -= &f * y;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = a[t][j].div_floor(&pivot);
                for row in a.iter_mut() {
                    let v = &row[t] * &f;
                    row[j] -= v;
                }
                if let Some(tr) = track.as_deref_mut() {
                    tr.axpy(j, t, &f);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].clone());
    }
    diag
}

/// Smith normal form invariant factors.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut rows = m.to_rows();
    let invariant_factors = snf_reduce(&mut rows, m.cols, None);
    let rank = invariant_factors.len();
    SnfResult { invariant_factors, rank }
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank_q(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Rank over the prime field Z/p by Gaussian elimination.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|x| x.mod_floor(&pb).to_u64().expect("reduced")).collect())
        .collect();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c] as u128;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let sub = f * *y as u128 % p as u128;
                *x = ((*x as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r += 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Coefficient ring of a cohomology computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    Rationals,
    IntegersMod(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyProfile {
    pub ring: Ring,
    /// `dims[q]` for q = 0..=ℓ: dimension over Q, or minimal number of
    /// generators of the Z/N-module H^q.
    pub dims: Vec<usize>,
}

/// Cohomology over Q of `C^0 → C^1 → …` with `diffs[q]: C^q → C^{q+1}`.
pub fn complex_cohomology_q(sizes: &[usize], diffs: &[IntMatrix]) -> Vec<usize> {
    let ranks: Vec<usize> = diffs.iter().map(rank_q).collect();
    dims_from_ranks(sizes, &ranks)
}

fn dims_from_ranks(sizes: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..sizes.len())
        .map(|q| {
            let out = ranks.get(q).copied().unwrap_or(0);
            let inc = if q == 0 { 0 } else { ranks.get(q - 1).copied().unwrap_or(0) };
            sizes[q] - out - inc
        })
        .collect()
}

/// Dimension over Z/p of the cohomology, by Gaussian elimination mod p.
pub fn complex_cohomology_mod_p(sizes: &[usize], diffs: &[IntMatrix], p: u64) -> Vec<usize> {
    let ranks: Vec<usize> = diffs.iter().map(|d| rank_mod_p(d, p)).collect();
    dims_from_ranks(sizes, &ranks)
}

/// Minimal number of generators of each Z/N-module `H^q` of the reduction
/// mod N, via Smith normal form over Z.
///
/// With `P·D^q·Q = S`, the lifted kernel `K = {x : D^q x ≡ 0 mod N}` has basis
/// `Q·diag(N / gcd(N, s_i))`, and `H^q = K / (im D^{q-1} + N·Z^b)`.
pub fn complex_cohomology_mod_n(sizes: &[usize], diffs: &[IntMatrix], n: u64) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let nb = BigInt::from(n);
    let mut dims = Vec::with_capacity(sizes.len());
    for (q, &b) in sizes.iter().enumerate() {
        if b == 0 {
            dims.push(0);
            continue;
        }
        // Lifted kernel basis scales.
        let mut tr = ColumnTransforms::new(b);
        let mut scales = vec![BigInt::one(); b];
        if let Some(d) = diffs.get(q) {
            let mut a = d.to_rows();
            let diag = snf_reduce(&mut a, b, Some(&mut tr));
            for (s, sc) in diag.iter().zip(scales.iter_mut()) {
                *sc = &nb / s.gcd(&nb);
            }
        }
        // Generators of im D^{q-1} + N·Z^b, as columns.
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        if q > 0 {
            if let Some(d) = diffs.get(q - 1) {
                for c in 0..d.ncols() {
                    gens.push((0..b).map(|r| d[(r, c)].clone()).collect());
                }
            }
        }
        for i in 0..b {
            let mut e = vec![BigInt::zero(); b];
            e[i] = nb.clone();
            gens.push(e);
        }
        // Coordinates in the kernel basis: diag(1/scale)·Q^{-1}·g.
        let mut coords = vec![vec![BigInt::zero(); gens.len()]; b];
        for (j, g) in gens.iter().enumerate() {
            for i in 0..b {
                let v: BigInt = tr.q_inv[i].iter().zip(g).map(|(x, y)| x * y).sum();
                let (quot, rem) = v.div_rem(&scales[i]);
                debug_assert!(rem.is_zero(), "image must lie in the lifted kernel");
                coords[i][j] = quot;
            }
        }
        let cols = gens.len();
        let diag = snf_reduce(&mut coords, cols, None);
        dims.push(diag.iter().filter(|d| !d.is_one()).count());
    }
    Ok(dims)
}

impl AomotoComplex {
    fn dense_diffs(&self) -> Vec<IntMatrix> {
        self.diff.iter().map(SparseIntMatrix::to_dense).collect()
    }

    fn sizes(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }
}

/// `dim_Q H^q(A•, a_k∧)`; by chain equivalence this is also the dimension
/// for the rescaled weights `k/N`.
pub fn cohomology_q(c: &AomotoComplex) -> CohomologyProfile {
    CohomologyProfile { ring: Ring::Rationals, dims: complex_cohomology_q(&c.sizes(), &c.dense_diffs()) }
}

/// Minimal generator counts of `H^q(A•_N, ā_k∧)` via Smith normal form.
pub fn cohomology_mod_n(c: &AomotoComplex, n: u64) -> Result<CohomologyProfile> {
    let dims = complex_cohomology_mod_n(&c.sizes(), &c.dense_diffs(), n)?;
    Ok(CohomologyProfile { ring: Ring::IntegersMod(n), dims })
}

/// `dim_{Z/p} H^q` by Gaussian elimination; `p` must be prime.
pub fn cohomology_mod_p(c: &AomotoComplex, p: u64) -> Result<CohomologyProfile> {
    if !is_prime(p) {
        return Err(Error::ModulusTooSmall(p));
    }
    let dims = complex_cohomology_mod_p(&c.sizes(), &c.dense_diffs(), p);
    Ok(CohomologyProfile { ring: Ring::IntegersMod(p), dims })
}
