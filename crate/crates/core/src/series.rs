//! Truncated formal power series arithmetic.
//!
//! A [`Series`] stores the coefficients `c0..cN` of a power series truncated
//! at an explicit order `N`. All arithmetic is exact in the scalar type; a
//! binary operation on series of different orders truncates to the minimum
//! order, never extends (the result's order records what was computed).
//!
//! The representation is dense: every series this engine manipulates has
//! essentially full coefficient support, so a `Vec` beats a sparse map.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Coeff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// `inverse` needs a nonzero constant term.
    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,
    /// `exp` needs a zero constant term.
    #[error("exp requires a series with zero constant term")]
    NonzeroConstantTerm,
    /// `log` needs constant term exactly 1.
    #[error("log requires a series with constant term 1")]
    NonUnitConstantTerm,
}

/// Failure to read the canonical textual form `"c0 c1 ... cN"`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesParseError {
    #[error("empty series literal: expected whitespace-separated coefficients")]
    Empty,
    /// `position` is the 1-based index of the offending token.
    #[error("bad coefficient at token {position}: {token:?}")]
    BadToken { position: usize, token: String },
}

/// Formal power series truncated at `order`; coefficient `d` is the `t^d` term.
///
/// Invariant: `coeffs.len() == order + 1` (a series always has at least the
/// constant term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    /// Builds a series from its coefficient vector; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| T::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Series::from_fn(order, |d| if d == 0 { c.clone() } else { T::zero() })
    }

    /// The single term `c * t^degree`.
    pub fn monomial(c: T, degree: usize, order: usize) -> Self {
        assert!(degree <= order, "monomial degree beyond truncation order");
        Series::from_fn(order, |d| if d == degree { c.clone() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^d`; panics past the truncation order.
    pub fn coeff(&self, d: usize) -> &T {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Copy truncated to a smaller (or equal) order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncation cannot extend a series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| T::ref_mul(a, c)).collect(),
        }
    }

    /// The operator `t d/dt`: multiplies the `t^d` coefficient by `d`.
    pub fn t_ddt(&self) -> Self {
        let ints = int_table::<T>(self.order());
        Series::from_fn(self.order(), |d| T::ref_mul(&self.coeffs[d], &ints[d]))
    }

    /// First index (up to the common order) where the two series differ.
    pub fn first_mismatch<'a>(&'a self, other: &'a Self) -> Option<(usize, &'a T, &'a T)> {
        (0..=self.common_order(other))
            .find(|&d| self.coeffs[d] != other.coeffs[d])
            .map(|d| (d, &self.coeffs[d], &other.coeffs[d]))
    }

    /// Multiplicative inverse; the constant term may be any nonzero scalar.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order();
        let inv_a0 = T::one() / a0.clone();
        let mut out = Vec::with_capacity(order + 1);
        out.push(inv_a0.clone());
        for n in 1..=order {
            // a0*b_n = -sum_{k=1}^{n} a_k b_{n-k}
            let mut acc = T::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + T::ref_mul(&self.coeffs[k], &out[n - k]);
                }
            }
            out.push(-T::ref_mul(&acc, &inv_a0));
        }
        Ok(Series { coeffs: out })
    }

    /// Series logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let order = self.order();
        let ints = int_table::<T>(order);
        let mut out = Vec::with_capacity(order + 1);
        out.push(T::zero());
        // weighted[k] holds k*l_k once l_k is known
        let mut weighted = Vec::with_capacity(order + 1);
        weighted.push(T::zero());
        for n in 1..=order {
            // n*l_n = n*a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
            let mut acc = T::ref_mul(&self.coeffs[n], &ints[n]);
            for k in 1..n {
                if !self.coeffs[n - k].is_zero() {
                    acc = acc - T::ref_mul(&weighted[k], &self.coeffs[n - k]);
                }
            }
            out.push(T::ref_div(&acc, &ints[n]));
            weighted.push(acc);
        }
        Ok(Series { coeffs: out })
    }

    /// Series exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order();
        let ints = int_table::<T>(order);
        // weighted[k] = k*a_k
        let weighted: Vec<T> = (0..=order)
            .map(|k| T::ref_mul(&self.coeffs[k], &ints[k]))
            .collect();
        let mut out = Vec::with_capacity(order + 1);
        out.push(T::one());
        for n in 1..=order {
            // n*b_n = sum_{k=1}^{n} k a_k b_{n-k}
            let mut acc = T::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc = acc + T::ref_mul(&weighted[k], &out[n - k]);
                }
            }
            out.push(T::ref_div(&acc, &ints[n]));
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        let order = self.order();
        if e == 0 {
            return Ok(Series::one(order));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = Series::one(order);
        let mut power = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &power;
            }
            exp >>= 1;
            if exp > 0 {
                power = &power * &power;
            }
        }
        Ok(result)
    }

    /// The infinite product `prod_{d>=1} (1 - t^d)^e` truncated at `order`.
    ///
    /// Production route: `log prod (1-t^d)^e = -e * sum_{m>=1} (sigma(m)/m) t^m`
    /// followed by `exp`. [`Series::eta_power_direct`] computes the same object
    /// by literal finite-product multiplication as an independent cross-check.
    pub fn eta_power(e: i64, order: usize) -> Self {
        let log_term = Series::from_fn(order, |m| {
            if m == 0 {
                T::zero()
            } else {
                T::from_ratio(divisor_sum(m as u64) as i64, m as i64) * T::from_int(-e)
            }
        });
        log_term
            .exp()
            .expect("constant term is zero by construction")
    }

    /// Cross-check route for [`Series::eta_power`]: multiplies the factors
    /// `(1 - t^d)^e` for `d = 1..=order` directly. Slower; algorithmically
    /// independent of the log/exp route.
    pub fn eta_power_direct(e: i64, order: usize) -> Self {
        let mut acc = Series::one(order);
        for d in 1..=order {
            let factor = &Series::one(order) - &Series::monomial(T::one(), d, order);
            let powered = factor.pow_int(e).expect("1 - t^d has unit constant term");
            acc = &acc * &powered;
        }
        acc
    }
}

impl<T: Coeff> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: Self) -> Series<T> {
        let order = self.common_order(rhs);
        Series::from_fn(order, |d| T::ref_add(&self.coeffs[d], &rhs.coeffs[d]))
    }
}

impl<T: Coeff> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: Self) -> Series<T> {
        let order = self.common_order(rhs);
        Series::from_fn(order, |d| T::ref_sub(&self.coeffs[d], &rhs.coeffs[d]))
    }
}

impl<T: Coeff> Mul for &Series<T> {
    type Output = Series<T>;

    /// Cauchy product truncated at the common order.
    fn mul(self, rhs: Self) -> Series<T> {
        let order = self.common_order(rhs);
        let mut out = Vec::with_capacity(order + 1);
        for d in 0..=order {
            let mut acc = T::zero();
            for i in 0..=d {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[d - i]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + T::ref_mul(a, b);
                }
            }
            out.push(acc);
        }
        Series { coeffs: out }
    }
}

impl<T: Coeff> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        Series::from_fn(self.order(), |d| -self.coeffs[d].clone())
    }
}

impl<T: fmt::Display> fmt::Display for Series<T> {
    /// Canonical textual form: coefficients separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Small-integer scalars `0..=order`, materialized once per kernel call.
fn int_table<T: Coeff>(order: usize) -> Vec<T> {
    (0..=order as i64).map(T::from_int).collect()
}

impl<T: Coeff + FromStr> Series<T> {
    /// Parses the canonical textual form `"c0 c1 ... cN"`.
    pub fn parse_text(s: &str) -> Result<Self, SeriesParseError> {
        let mut coeffs = Vec::new();
        for (i, token) in s.split_whitespace().enumerate() {
            let c = token.parse::<T>().map_err(|_| SeriesParseError::BadToken {
                position: i + 1,
                token: token.to_string(),
            })?;
            coeffs.push(c);
        }
        if coeffs.is_empty() {
            return Err(SeriesParseError::Empty);
        }
        Ok(Series { coeffs })
    }
}

/// Sum of divisors of `m` by trial division up to `sqrt(m)`.
fn divisor_sum(m: u64) -> u64 {
    debug_assert!(m >= 1);
    let mut s = 0;
    let mut k = 1;
    while k * k <= m {
        if m.is_multiple_of(k) {
            s += k;
            let q = m / k;
            if q != k {
                s += q;
            }
        }
        k += 1;
    }
    s
}
