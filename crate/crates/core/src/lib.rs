//! Exact invariants of complex hyperplane arrangements and of the cyclic
//! covers `X_m(A) = {(x, z) : f(x) = z^m}` of their complements.
//!
//! The pipeline runs bottom-up:
//!
//! * [`cyclofield`]: rationals, cyclotomic fields, cyclotomic polynomials.
//! * [`arrangement`]: arrangements, cone/decone, intersection lattice,
//!   Poincaré polynomial, dense edges of the projective closure.
//! * [`osalgebra`]: Orlik-Solomon algebra in the no-broken-circuit basis and
//!   the integer matrices of the Aomoto differential.
//! * [`exactlin`]: Smith normal form and cohomology dimensions over Q and Z/N.
//! * [`covers`]: bounds on local-system Betti numbers, cover Betti numbers,
//!   monodromy characteristic polynomials, periodicity and zeta data.
//! * [`cli`]: file format, built-in catalog and command dispatch.

pub mod arrangement;
pub mod cli;
pub mod covers;
pub mod cyclofield;
pub mod error;
pub mod exactlin;
pub mod osalgebra;

pub use error::{Error, Result};
