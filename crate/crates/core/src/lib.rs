//! Exact-arithmetic engine for the family Gromov-Witten generating functions
//! of elliptic surfaces `E(n)` in section classes `s + d f`.
//!
//! The series substrate ([`series::Series`]) is generic over any field-like
//! scalar implementing [`scalar::Coeff`]; everything the engine actually
//! computes runs over arbitrary-precision rationals, so every identity check
//! is exact coefficient-wise equality. No floating point is involved
//! anywhere.
//!
//! Layout:
//! - [`scalar`], [`series`]: truncated formal power series arithmetic
//! - [`arith`]: divisor sums, colored-partition counting, Eisenstein series
//! - [`gw`]: the generating functions `F_g`, `G`, `H` and every identity
//!   relating them, each computed by independent routes
//! - [`tables`]: relative-invariant value tables and the two-factor
//!   symplectic-sum convolution that re-derives the `gw` results from them
//! - [`qm`]: the quasimodular ring `Q[E2, E4, E6]` and exact recognition of
//!   series inside it

// Convolution kernels and the exact eliminations read better with symmetric
// explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod gw;
pub mod qm;
pub mod scalar;
pub mod series;
pub mod tables;

/// Arbitrary-precision exact rational; the scalar every artifact value lives in.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer backing [`Rat`].
pub type Int = num_bigint::BigInt;
/// Truncated formal power series with exact rational coefficients.
pub type QSeries = series::Series<Rat>;

pub use arith::{colored_partitions, eisenstein, sigma_k, ArithError, Eisenstein, SigmaConvention};
pub use gw::{
    dimension, f0_ode, f0_product, fg_closed, fg_recursive, g_series, h_sum, h_sum_convolution,
    h_trr, trr_boundary_decomposition, verify_all, GwError, GwTable, IdentityReport,
    IdentityStatus, SurfaceParams,
};
pub use qm::{monomial_basis, ramanujan_check, recognize, QmError, QmPoly, Recognition};
pub use series::{Series, SeriesError, SeriesParseError};
pub use tables::{
    convolve_sum_formula, gamma_pair_sum_series, gamma_point_cross_check, genus_step_spec,
    h_split_spec, neck_correction, point_split_spec, relative_e0, relative_en,
    relative_value_table, Constraint, Contact, RelInvariantKey, SumFormulaSpec, Surface,
    TableError,
};
