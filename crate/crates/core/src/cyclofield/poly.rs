use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// `t^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[k] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i - dd + j] -= &c * d;
            }
            quot[i - dd] = c;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Euler's totient function.
pub fn euler_phi(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

/// The k-th cyclotomic polynomial, obtained by exact division of `t^k - 1` by
/// the product of `Φ_d` over the proper divisors `d` of `k`.
pub fn cyclotomic_polynomial(k: u64) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let divisors: Vec<u64> = (1..=k).filter(|d| k.is_multiple_of(*d)).collect();
    let mut phis: Vec<(u64, IntPoly)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut poly = IntPoly::x_pow_minus_one(d as usize);
        for (e, phi_e) in &phis {
            if d % e == 0 {
                let (q, r) = poly.divrem_monic(phi_e);
                debug_assert!(r.is_zero());
                poly = q;
            }
        }
        phis.push((d, poly));
    }
    Ok(phis.pop().expect("k is its own divisor").1)
}

// Dense polynomials over Q, used for inverses in Q(ζ_d).

pub(crate) fn qpoly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(&mut out);
    out
}

pub(crate) fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qpoly_trim(&mut out);
    out
}

/// Division with remainder over Q; `b` must be nonzero and trimmed.
pub(crate) fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<Rational> = a.to_vec();
    qpoly_trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / lead;
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    qpoly_trim(&mut quot);
    qpoly_trim(&mut rem);
    (quot, rem)
}

/// Inverse of `a` modulo `m` over Q, assuming gcd(a, m) = 1.
pub(crate) fn qpoly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    // Extended Euclid tracking only the coefficient of `a`.
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    qpoly_trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let s = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let scale = Rational::one() / &r0[0];
    Some(s0.into_iter().map(|c| c * &scale).collect())
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(k: u64) -> u64 {
        (1..=k).filter(|&j| gcd_u64(j, k) == 1).count() as u64
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), brute_phi(12));
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(8).unwrap(), 4);
        for k in 1..200 {
            assert_eq!(euler_phi(k).unwrap(), brute_phi(k), "k={k}");
        }
        assert_eq!(euler_phi(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            IntPoly::from_i64(&[1, 0, -1, 0, 1])
        );
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn cyclotomic_products_give_x_pow_minus_one() {
        for k in 1..=64u64 {
            let phi_k = cyclotomic_polynomial(k).unwrap();
            assert!(phi_k.is_monic());
            assert_eq!(phi_k.degree(), Some(euler_phi(k).unwrap() as usize));
            let prod = (1..=k)
                .filter(|d| k % d == 0)
                .fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic_polynomial(d).unwrap()));
            assert_eq!(prod, IntPoly::x_pow_minus_one(k as usize), "k={k}");
        }
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(IntPoly::from_i64(&[1, 0, -1, 0, 1]).to_string(), "t^4 - t^2 + 1");
        assert_eq!(IntPoly::from_i64(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let p = IntPoly::from_i64(&[-1, 1]);
        let mut acc = IntPoly::one();
        for e in 0..7 {
            assert_eq!(p.pow(e), acc);
            acc = acc.mul(&p);
        }
    }
}
