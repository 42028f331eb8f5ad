//! Coefficient scalar abstraction for the series engine.
//!
//! The engine only asks for exact field arithmetic plus conversion from small
//! integers, so the bound is assembled from `num-traits`. Everything shipped
//! here instantiates it at [`crate::Rat`] (arbitrary-precision rationals);
//! the crate root exposes the concrete aliases.

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

/// Scalar a [`crate::series::Series`] can hold coefficients in.
///
/// Division must be exact (field semantics) for `inverse`, `log`, `exp` and
/// `from_ratio` to be meaningful. The `ref_*` hooks let heap-backed scalars
/// avoid cloning both operands in the convolution kernels; the defaults are
/// correct for any scalar.
pub trait Coeff: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar cannot represent this integer")
    }

    /// Exact quotient `p/q` of two small integers.
    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_int(p) / Self::from_int(q)
    }

    fn ref_add(a: &Self, b: &Self) -> Self {
        a.clone() + b.clone()
    }

    fn ref_sub(a: &Self, b: &Self) -> Self {
        a.clone() - b.clone()
    }

    fn ref_mul(a: &Self, b: &Self) -> Self {
        a.clone() * b.clone()
    }

    fn ref_div(a: &Self, b: &Self) -> Self {
        a.clone() / b.clone()
    }
}

impl Coeff for crate::Rat {
    fn ref_add(a: &Self, b: &Self) -> Self {
        a + b
    }

    fn ref_sub(a: &Self, b: &Self) -> Self {
        a - b
    }

    fn ref_mul(a: &Self, b: &Self) -> Self {
        a * b
    }

    fn ref_div(a: &Self, b: &Self) -> Self {
        a / b
    }
}

impl Coeff for f32 {}
impl Coeff for f64 {}
