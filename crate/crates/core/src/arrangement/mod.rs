//! Affine and central hyperplane arrangements over Q(ζ_d).

mod lattice;

use std::fmt;

use crate::cyclofield::{field_matrix_rank, CycNum};
use crate::error::{Error, Result};

pub use lattice::{beta, beta_of, decone_poincare, dense_edges, intersection_lattice, poincare_polynomial, Flat, IntersectionLattice};

/// The affine hyperplane `constant + Σ coeffs[i]·x_{i+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub constant: CycNum,
    pub coeffs: Vec<CycNum>,
}

impl Hyperplane {
    pub fn new(constant: CycNum, coeffs: Vec<CycNum>) -> Self {
        Hyperplane { constant, coeffs }
    }

    /// Convenience constructor for integer forms in Q.
    pub fn from_ints(constant: i64, coeffs: &[i64]) -> Self {
        Hyperplane {
            constant: CycNum::from_int(1, constant),
            coeffs: coeffs.iter().map(|&c| CycNum::from_int(1, c)).collect(),
        }
    }

    /// Row `[c_1, …, c_ℓ, c_0]` of the defining affine system.
    pub fn row(&self) -> Vec<CycNum> {
        let mut r = self.coeffs.clone();
        r.push(self.constant.clone());
        r
    }

    pub fn is_linear_part_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = format!("x{}", i + 1);
            let term = if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{var}")
            } else {
                format!("({c}){var}")
            };
            terms.push(term);
        }
        if !self.constant.is_zero() {
            terms.push(format!("({})", self.constant));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// An ordered arrangement of affine hyperplanes in ℓ-dimensional space.
///
/// Hyperplane order is significant: it fixes the broken-circuit order of the
/// Orlik-Solomon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    cyc_order: u64,
    hyperplanes: Vec<Hyperplane>,
    is_central: bool,
}

impl Arrangement {
    /// Validate and build an essential arrangement.
    pub fn build(ambient_dim: usize, cyc_order: u64, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let arr = Self::build_relaxed(ambient_dim, cyc_order, hyperplanes)?;
        let rank = arr.linear_rank()?;
        if rank != ambient_dim {
            return Err(Error::NotEssential { rank, dim: ambient_dim });
        }
        Ok(arr)
    }

    /// Like [`Arrangement::build`] but without the essentiality check. Used for
    /// deletions, which need not stay essential.
    pub fn build_relaxed(
        ambient_dim: usize,
        cyc_order: u64,
        hyperplanes: Vec<Hyperplane>,
    ) -> Result<Self> {
        if cyc_order == 0 {
            return Err(Error::ZeroArgument);
        }
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.coeffs.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    index: i,
                    found: h.coeffs.len(),
                    expected: ambient_dim,
                });
            }
            if let Some(bad) = h.coeffs.iter().chain([&h.constant]).find(|c| c.order() != cyc_order) {
                return Err(Error::MismatchedOrders(cyc_order, bad.order()));
            }
            if h.is_linear_part_zero() {
                return Err(Error::ZeroLinearPart(i));
            }
        }
        for i in 0..hyperplanes.len() {
            for j in i + 1..hyperplanes.len() {
                let pair = [hyperplanes[i].row(), hyperplanes[j].row()];
                if field_matrix_rank(&pair)? < 2 {
                    return Err(Error::DuplicateHyperplane(i, j));
                }
            }
        }
        let is_central = hyperplanes.iter().all(|h| h.constant.is_zero());
        Ok(Arrangement { ambient_dim, cyc_order, hyperplanes, is_central })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cyc_order(&self) -> u64 {
        self.cyc_order
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn is_central(&self) -> bool {
        self.is_central
    }

    /// Rank of the linear parts.
    pub fn linear_rank(&self) -> Result<usize> {
        let rows: Vec<Vec<CycNum>> = self.hyperplanes.iter().map(|h| h.coeffs.clone()).collect();
        field_matrix_rank(&rows)
    }

    /// The cone: homogenise with a new first coordinate `x0` and append the
    /// hyperplane at infinity `x0 = 0` as the last hyperplane.
    pub fn cone(&self) -> Arrangement {
        let d = self.cyc_order;
        let mut hyperplanes: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut coeffs = Vec::with_capacity(self.ambient_dim + 1);
                coeffs.push(h.constant.clone());
                coeffs.extend(h.coeffs.iter().cloned());
                Hyperplane { constant: CycNum::zero(d), coeffs }
            })
            .collect();
        let mut infinity = vec![CycNum::zero(d); self.ambient_dim + 1];
        infinity[0] = CycNum::one(d);
        hyperplanes.push(Hyperplane { constant: CycNum::zero(d), coeffs: infinity });
        Arrangement { ambient_dim: self.ambient_dim + 1, cyc_order: d, hyperplanes, is_central: true }
    }

    /// Decone a central arrangement with respect to hyperplane `at`.
    ///
    /// The chosen form α becomes the new coordinate `y0`; the remaining
    /// coordinates are all original ones except the first position where α is
    /// nonzero. Setting `y0 = 1` gives the affine arrangement.
    pub fn decone(&self, at: usize) -> Result<Arrangement> {
        if !self.is_central {
            return Err(Error::NotCentral);
        }
        if at >= self.len() {
            return Err(Error::IndexOutOfRange { index: at, n: self.len() });
        }
        let alpha = &self.hyperplanes[at].coeffs;
        let p = alpha.iter().position(|c| !c.is_zero()).expect("validated nonzero linear part");
        let alpha_p_inv = alpha[p].inverse()?;
        let hyperplanes = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != at)
            .map(|(_, h)| {
                let ratio = &h.coeffs[p] * &alpha_p_inv;
                let coeffs = (0..self.ambient_dim)
                    .filter(|&j| j != p)
                    .map(|j| &h.coeffs[j] - &(&ratio * &alpha[j]))
                    .collect();
                Hyperplane { constant: ratio, coeffs }
            })
            .collect();
        Arrangement::build(self.ambient_dim - 1, self.cyc_order, hyperplanes)
    }

    /// Reorder hyperplanes: the new i-th hyperplane is the old `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Arrangement> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len() {
            return Err(Error::WeightLength { found: order.len(), expected: self.len() });
        }
        for &i in order {
            if i >= self.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::IndexOutOfRange { index: i, n: self.len() });
            }
        }
        let hyperplanes = order.iter().map(|&i| self.hyperplanes[i].clone()).collect();
        Ok(Arrangement { hyperplanes, ..self.clone() })
    }

    /// The arrangement with hyperplane `h` removed (not necessarily essential).
    pub fn deletion(&self, h: usize) -> Result<Arrangement> {
        if h >= self.len() {
            return Err(Error::IndexOutOfRange { index: h, n: self.len() });
        }
        let hyperplanes =
            self.hyperplanes.iter().enumerate().filter(|&(i, _)| i != h).map(|(_, x)| x.clone()).collect();
        Arrangement::build_relaxed(self.ambient_dim, self.cyc_order, hyperplanes)
    }

    /// The arrangement induced on hyperplane `h`, in coordinates obtained by
    /// eliminating the first variable with a nonzero coefficient in `h`.
    /// Coincident restrictions are merged and parallel ones dropped.
    pub fn restriction(&self, h: usize) -> Result<Arrangement> {
        if h >= self.len() {
            return Err(Error::IndexOutOfRange { index: h, n: self.len() });
        }
        let target = &self.hyperplanes[h];
        let p = target.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero linear part");
        let inv = target.coeffs[p].inverse()?;
        let mut out: Vec<Hyperplane> = Vec::new();
        for (i, g) in self.hyperplanes.iter().enumerate() {
            if i == h {
                continue;
            }
            // x_p = -(c0 + Σ_{j≠p} c_j x_j) / c_p on the target hyperplane.
            let ratio = &g.coeffs[p] * &inv;
            let constant = &g.constant - &(&ratio * &target.constant);
            let coeffs: Vec<CycNum> = (0..self.ambient_dim)
                .filter(|&j| j != p)
                .map(|j| &g.coeffs[j] - &(&ratio * &target.coeffs[j]))
                .collect();
            let cand = Hyperplane { constant, coeffs };
            if cand.is_linear_part_zero() {
                continue;
            }
            let dup = out
                .iter()
                .any(|o| field_matrix_rank(&[o.row(), cand.row()]).is_ok_and(|r| r < 2));
            if !dup {
                out.push(cand);
            }
        }
        Arrangement::build_relaxed(self.ambient_dim - 1, self.cyc_order, out)
    }
}
