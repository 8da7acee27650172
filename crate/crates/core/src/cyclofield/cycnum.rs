use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::{cyclotomic_polynomial, euler_phi, qpoly_inverse_mod};
use super::Rational;
use crate::error::{Error, Result};

/// An element of the cyclotomic field Q(ζ_d), stored in the power basis
/// `1, ζ, …, ζ^{φ(d)-1}`.
///
/// The representation is canonical, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u64,
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn phi_of(order: u64) -> usize {
    euler_phi(order).expect("cyclotomic order is positive") as usize
}

/// Reduce `Σ raw_i ζ_d^i` modulo `Φ_d` into canonical form.
pub fn cyc_reduce(raw: &[Rational], d: u64) -> Result<CycNum> {
    if d == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(CycNum::reduce_unchecked(raw.to_vec(), d))
}

/// Exact field operation on two elements of the same cyclotomic field.
pub fn cyc_arithmetic(a: &CycNum, b: &CycNum, op: FieldOp) -> Result<CycNum> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
    }
}

impl CycNum {
    fn reduce_unchecked(mut raw: Vec<Rational>, d: u64) -> CycNum {
        let phi = cyclotomic_polynomial(d).expect("positive order");
        let deg = phi.coeffs().len() - 1;
        if raw.len() > deg {
            for i in (deg..raw.len()).rev() {
                let c = std::mem::take(&mut raw[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, pj) in phi.coeffs()[..deg].iter().enumerate() {
                    if !pj.is_zero() {
                        raw[i - deg + j] -= &c * Rational::from_integer(pj.clone());
                    }
                }
            }
        }
        raw.resize(deg, Rational::zero());
        CycNum { order: d, coeffs: raw }
    }

    pub fn zero(d: u64) -> CycNum {
        CycNum { order: d, coeffs: vec![Rational::zero(); phi_of(d)] }
    }

    pub fn one(d: u64) -> CycNum {
        Self::from_rational(d, Rational::one())
    }

    pub fn from_rational(d: u64, r: Rational) -> CycNum {
        let mut n = Self::zero(d);
        n.coeffs[0] = r;
        n
    }

    pub fn from_int(d: u64, v: i64) -> CycNum {
        Self::from_rational(d, Rational::from_integer(v.into()))
    }

    /// The primitive root ζ_d = exp(2πi/d), symbolically.
    pub fn zeta(d: u64) -> CycNum {
        let mut raw = vec![Rational::zero(); 2];
        raw[1] = Rational::one();
        Self::reduce_unchecked(raw, d)
    }

    /// ζ_d^e for any integer exponent.
    pub fn zeta_pow(d: u64, e: i64) -> CycNum {
        let e = e.rem_euclid(d as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::reduce_unchecked(raw, d)
    }

    /// Build from an already canonical coefficient vector of length φ(d).
    pub fn from_coeffs(d: u64, coeffs: Vec<Rational>) -> Result<CycNum> {
        if d == 0 {
            return Err(Error::ZeroArgument);
        }
        let phi = phi_of(d);
        if coeffs.len() != phi {
            return Err(Error::DimensionMismatch { index: 0, found: coeffs.len(), expected: phi });
        }
        Ok(CycNum { order: d, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check_order(&self, other: &CycNum) -> Result<()> {
        if self.order != other.order {
            Err(Error::MismatchedOrders(self.order, other.order))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycNum { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycNum { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(CycNum { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] });
        }
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(Self::reduce_unchecked(raw, self.order))
    }

    pub fn inverse(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(CycNum { order: self.order, coeffs: vec![self.coeffs[0].recip()] });
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)?
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // Φ_d is irreducible, so every nonzero residue is a unit.
        let inv = qpoly_inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::reduce_unchecked(inv, self.order))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        self.checked_mul(&other.inverse()?)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("operands share a cyclotomic order")
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}*z^{i}")?,
            }
        }
        Ok(())
    }
}
