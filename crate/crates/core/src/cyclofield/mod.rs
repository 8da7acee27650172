//! Exact arithmetic in Q and in cyclotomic fields Q(ζ_d).

mod cycnum;
mod matrix;
mod poly;

pub use cycnum::{cyc_arithmetic, cyc_reduce, CycNum, FieldOp};
pub use matrix::{field_matrix_rank, rref, Rref};
pub use poly::{cyclotomic_polynomial, euler_phi, IntPoly};

pub(crate) use poly::gcd_u64;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;
