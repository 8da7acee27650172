use super::CycNum;
use crate::error::{Error, Result};

/// Reduced row-echelon form over Q(ζ_d).
///
/// Pivots are normalised to one and cleared above and below, so two matrices
/// with the same row space have identical `rows`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rref {
    pub rows: Vec<Vec<CycNum>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the pivots; the result is zero iff `row` lies in
    /// the row space.
    pub fn reduce(&self, row: &[CycNum]) -> Vec<CycNum> {
        let mut out = row.to_vec();
        for (prow, &pc) in self.rows.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let c = out[pc].clone();
            for (o, p) in out.iter_mut().zip(prow).skip(pc) {
                if !p.is_zero() {
                    *o = &*o - &(&c * p);
                }
            }
        }
        out
    }

    pub fn contains(&self, row: &[CycNum]) -> bool {
        self.reduce(row).iter().all(CycNum::is_zero)
    }
}

fn check_shape(rows: &[Vec<CycNum>]) -> Result<()> {
    let Some(first) = rows.first() else { return Ok(()) };
    let width = first.len();
    let order = first.first().map(CycNum::order);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::RaggedMatrix { row: i, found: r.len(), expected: width });
        }
        if let Some(d) = order {
            if let Some(bad) = r.iter().find(|x| x.order() != d) {
                return Err(Error::MismatchedOrders(d, bad.order()));
            }
        }
    }
    Ok(())
}

/// Gauss-Jordan elimination with pivot-by-first-nonzero.
pub fn rref(mut rows: Vec<Vec<CycNum>>) -> Result<Rref> {
    check_shape(&rows)?;
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..width {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(top, p);
        let inv = rows[top][col].inverse()?;
        for x in rows[top].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &(&c * p);
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Ok(Rref { rows, pivots })
}

/// Rank over Q(ζ_d) of a matrix given as rows.
pub fn field_matrix_rank(rows: &[Vec<CycNum>]) -> Result<usize> {
    Ok(rref(rows.to_vec())?.rank())
}
