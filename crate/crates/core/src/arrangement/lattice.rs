use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::Arrangement;
use crate::cyclofield::{rref, CycNum, IntPoly, Rref};

/// A nonempty intersection of hyperplanes, identified by its closed support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    /// Indices of all hyperplanes containing the flat, sorted.
    pub support: Vec<usize>,
    pub codim: usize,
    pub mobius: i64,
    /// Density flag; only set on lattices returned by [`dense_edges`].
    pub dense: Option<bool>,
}

impl Flat {
    pub fn multiplicity(&self) -> usize {
        self.support.len()
    }
}

/// The intersection semilattice L(A), flats sorted by codimension and then
/// by support.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    flats: Vec<Flat>,
    rank: usize,
    n: usize,
    masks: Vec<Vec<u64>>,
    meet: Vec<Vec<Option<usize>>>,
}

fn mask_of(support: &[usize], n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n.div_ceil(64).max(1)];
    for &i in support {
        m[i / 64] |= 1 << (i % 64);
    }
    m
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

struct Pending {
    rref: Rref,
    support: Vec<usize>,
    codim: usize,
}

/// Build L(A) level by level: each flat of codimension c+1 is the closure of
/// a flat of codimension c met with one hyperplane.
pub fn intersection_lattice(arr: &Arrangement) -> IntersectionLattice {
    let n = arr.len();
    let ell = arr.ambient_dim();
    let rows: Vec<Vec<CycNum>> = arr.hyperplanes().iter().map(|h| h.row()).collect();

    let mut pending = vec![Pending {
        rref: Rref { rows: Vec::new(), pivots: Vec::new() },
        support: Vec::new(),
        codim: 0,
    }];
    let mut index: HashMap<Vec<Vec<CycNum>>, usize> = HashMap::new();
    index.insert(Vec::new(), 0);
    let mut meet: Vec<Vec<Option<usize>>> = Vec::new();

    let mut id = 0;
    while id < pending.len() {
        let mut row_meets = vec![None; n];
        for h in 0..n {
            if pending[id].support.binary_search(&h).is_ok() {
                row_meets[h] = Some(id);
                continue;
            }
            let mut system = pending[id].rref.rows.clone();
            system.push(rows[h].clone());
            let reduced = rref(system).expect("rows share one order");
            // A pivot in the constant column means the system is inconsistent.
            if reduced.pivots.last() == Some(&ell) {
                continue;
            }
            let target = match index.get(&reduced.rows) {
                Some(&t) => t,
                None => {
                    let support = (0..n).filter(|&g| reduced.contains(&rows[g])).collect();
                    let codim = reduced.rank();
                    let t = pending.len();
                    index.insert(reduced.rows.clone(), t);
                    pending.push(Pending { rref: reduced, support, codim });
                    t
                }
            };
            row_meets[h] = Some(target);
        }
        meet.push(row_meets);
        id += 1;
    }

    // Canonical order: by codimension, then support.
    let mut order: Vec<usize> = (0..pending.len()).collect();
    order.sort_by(|&a, &b| {
        (pending[a].codim, &pending[a].support).cmp(&(pending[b].codim, &pending[b].support))
    });
    let mut new_id = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }
    let meet = order
        .iter()
        .map(|&old| meet[old].iter().map(|m| m.map(|t| new_id[t])).collect())
        .collect();
    let mut flats: Vec<Flat> = order
        .iter()
        .map(|&old| Flat {
            support: pending[old].support.clone(),
            codim: pending[old].codim,
            mobius: 0,
            dense: None,
        })
        .collect();
    let masks: Vec<Vec<u64>> = flats.iter().map(|f| mask_of(&f.support, n)).collect();

    // μ(V) = 1, μ(Y) = -Σ_{Z < Y} μ(Z).
    for y in 0..flats.len() {
        if flats[y].codim == 0 {
            flats[y].mobius = 1;
            continue;
        }
        let mut sum = 0i64;
        for z in 0..y {
            if flats[z].codim < flats[y].codim && is_subset(&masks[z], &masks[y]) {
                sum += flats[z].mobius;
            }
        }
        flats[y].mobius = -sum;
    }
    let rank = flats.iter().map(|f| f.codim).max().unwrap_or(0);
    IntersectionLattice { flats, rank, n, masks, meet }
}

impl IntersectionLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of hyperplanes of the underlying arrangement.
    pub fn num_hyperplanes(&self) -> usize {
        self.n
    }

    pub fn flats_of_codim(&self, c: usize) -> impl Iterator<Item = (usize, &Flat)> {
        self.flats.iter().enumerate().filter(move |(_, f)| f.codim == c)
    }

    /// Index of the flat `Y ∩ H_h`, or `None` if the intersection is empty.
    pub fn meet(&self, flat: usize, h: usize) -> Option<usize> {
        self.meet[flat][h]
    }

    /// Index of the flat `∩_{h ∈ set} H_h`, or `None` if empty.
    pub fn flat_of(&self, set: &[usize]) -> Option<usize> {
        set.iter().try_fold(0usize, |y, &h| self.meet(y, h))
    }

    /// Whether the hyperplanes in `set` meet and are independent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.flat_of(set).is_some_and(|y| self.flats[y].codim == set.len())
    }

    /// `Z ≤ Y` in L(A), i.e. `Y ⊆ Z` as subspaces.
    pub fn is_below(&self, z: usize, y: usize) -> bool {
        is_subset(&self.masks[z], &self.masks[y])
    }

    pub fn contains(&self, flat: usize, h: usize) -> bool {
        self.masks[flat][h / 64] >> (h % 64) & 1 == 1
    }

    /// P(A,t) = Σ μ(Y)(-t)^{codim Y}.
    pub fn poincare_polynomial(&self) -> IntPoly {
        self.poincare_below(None)
    }

    /// Poincaré polynomial of the localisation A_Y, read off the interval
    /// below `y`.
    pub fn local_poincare(&self, y: usize) -> IntPoly {
        self.poincare_below(Some(y))
    }

    fn poincare_below(&self, top: Option<usize>) -> IntPoly {
        let mut coeffs = vec![BigInt::from(0); self.rank + 1];
        for (z, f) in self.flats.iter().enumerate() {
            if top.is_some_and(|y| !self.is_below(z, y)) {
                continue;
            }
            let sign = if f.codim % 2 == 0 { 1 } else { -1 };
            coeffs[f.codim] += BigInt::from(sign * f.mobius);
        }
        IntPoly::new(coeffs)
    }
}

/// Poincaré polynomial of the complement of `arr`.
pub fn poincare_polynomial(arr: &Arrangement) -> IntPoly {
    intersection_lattice(arr).poincare_polynomial()
}

/// β(A) = |P(A,-1)|, the absolute Euler characteristic of the complement.
pub fn beta(arr: &Arrangement) -> u64 {
    beta_of(&poincare_polynomial(arr))
}

/// `|P(-1)|` for a Poincaré polynomial `p`.
pub fn beta_of(p: &IntPoly) -> u64 {
    p.eval(&BigInt::from(-1)).abs().to_u64().expect("beta fits in u64")
}

/// `P(A,t) / (1+t)`: the Poincaré polynomial of any decone of a central
/// arrangement with Poincaré polynomial `p`.
pub fn decone_poincare(p: &IntPoly) -> IntPoly {
    let (q, r) = p.divrem_monic(&IntPoly::from_i64(&[1, 1]));
    debug_assert!(r.is_zero(), "central Poincaré polynomial is divisible by 1+t");
    q
}

pub(crate) fn decone_beta(p: &IntPoly) -> u64 {
    beta_of(&decone_poincare(p))
}

/// Lattice of the projective closure A_∞, realised as the lattice of the cone
/// (hyperplane index `n` is H_∞), with density flags on every edge.
///
/// Edges are the flats of codimension 1..=ℓ; the centre of the cone is not a
/// projective edge and keeps `dense = None`.
pub fn dense_edges(arr: &Arrangement) -> IntersectionLattice {
    let ell = arr.ambient_dim();
    let mut lat = intersection_lattice(&arr.cone());
    for y in 0..lat.flats.len() {
        let codim = lat.flats[y].codim;
        if (1..=ell).contains(&codim) {
            let dense = decone_beta(&lat.local_poincare(y)) > 0;
            lat.flats[y].dense = Some(dense);
        }
    }
    lat
}
