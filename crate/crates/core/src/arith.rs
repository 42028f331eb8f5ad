//! Number-theoretic scalars and reference q-expansions: divisor-power sums,
//! a brute-force colored-partition counter, and the Eisenstein series
//! `E2, E4, E6`.
//!
//! The partition counter never touches series arithmetic; it exists as an
//! independent oracle for the coefficients of `prod (1 - t^m)^{-colors}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::Series;
use crate::{Int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("sigma_{k}(0) is undefined under the {conv:?} convention")]
    UndefinedAtZero { k: u32, conv: SigmaConvention },
}

/// Whether `sigma` is defined at 0.
///
/// `Strict` is the plain divisor sum, defined for `d >= 1`. `Extended`
/// additionally sets `sigma(0) = -1/24`, the bookkeeping value that makes the
/// degree-0 term of genus-0 symplectic-sum convolutions produce `-F0/12`.
/// The extension applies to `k = 1` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaConvention {
    Strict,
    Extended,
}

/// Divisor-power sum `sigma_k(d) = sum_{m | d} m^k`, exact.
///
/// Divisors are enumerated by trial division up to `sqrt(d)`; the inputs here
/// are desk-scale, so no sieve.
pub fn sigma_k(k: u32, d: u64, conv: SigmaConvention) -> Result<Rat, ArithError> {
    if d == 0 {
        return match conv {
            SigmaConvention::Extended if k == 1 => Ok(Rat::new(BigInt::from(-1), BigInt::from(24))),
            _ => Err(ArithError::UndefinedAtZero { k, conv }),
        };
    }
    let mut total = Int::zero();
    let mut m = 1u64;
    while m * m <= d {
        if d.is_multiple_of(m) {
            total += Int::from(m).pow(k);
            let q = d / m;
            if q != m {
                total += Int::from(q).pow(k);
            }
        }
        m += 1;
    }
    Ok(Rat::from_integer(total))
}

/// Number of partitions of `d` whose parts each carry one of `colors` labels.
///
/// Direct recursive enumeration: pick the multiplicity of the largest
/// remaining part size, count its colorings as a multiset coefficient, and
/// recurse. Intended for desk-scale `d`; this is the oracle the eta-product
/// coefficients are checked against, so it deliberately avoids generating
/// functions.
pub fn colored_partitions(d: u64, colors: u64) -> Int {
    fn count(remaining: u64, max_part: u64, colors: u64) -> Int {
        if remaining == 0 {
            return Int::one();
        }
        if max_part == 0 {
            return Int::zero();
        }
        let mut total = Int::zero();
        for mult in 0..=(remaining / max_part) {
            total += multiset_coefficient(colors, mult)
                * count(remaining - mult * max_part, max_part - 1, colors);
        }
        total
    }
    count(d, d, colors)
}

/// Multisets of size `m` drawn from `c` colors: `C(c + m - 1, m)`.
fn multiset_coefficient(c: u64, m: u64) -> Int {
    if m == 0 {
        return Int::one();
    }
    if c == 0 {
        return Int::zero();
    }
    let mut v = Int::one();
    for i in 0..m {
        // exact at every step: v holds C(c-1+i, i) * (c-1+i+1) before division
        v = v * Int::from(c - 1 + i + 1) / Int::from(i + 1);
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eisenstein {
    E2,
    E4,
    E6,
}

/// Classical q-expansion of the requested Eisenstein series, truncated.
///
/// `E2 = 1 - 24 sum sigma_1(d) t^d`, `E4 = 1 + 240 sum sigma_3(d) t^d`,
/// `E6 = 1 - 504 sum sigma_5(d) t^d`.
pub fn eisenstein(which: Eisenstein, order: usize) -> Series<Rat> {
    let (k, scale) = match which {
        Eisenstein::E2 => (1, -24),
        Eisenstein::E4 => (3, 240),
        Eisenstein::E6 => (5, -504),
    };
    Series::from_fn(order, |d| {
        if d == 0 {
            Rat::one()
        } else {
            sigma_k(k, d as u64, SigmaConvention::Strict).expect("d >= 1")
                * Rat::from_integer(Int::from(scale))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Coeff;
    use crate::QSeries;

    fn int(v: i64) -> Rat {
        Rat::from_int(v)
    }

    #[test]
    fn sigma_basics() {
        assert_eq!(sigma_k(1, 1, SigmaConvention::Strict).unwrap(), int(1));
        // 1 + 2 + 3 + 6
        assert_eq!(sigma_k(1, 6, SigmaConvention::Strict).unwrap(), int(12));
        assert_eq!(
            sigma_k(1, 0, SigmaConvention::Extended).unwrap(),
            Rat::from_ratio(-1, 24)
        );
    }

    #[test]
    fn sigma_zero_is_rejected_where_undefined() {
        assert!(matches!(
            sigma_k(1, 0, SigmaConvention::Strict),
            Err(ArithError::UndefinedAtZero { .. })
        ));
        // the extension is a sigma_1 convention only
        assert!(sigma_k(3, 0, SigmaConvention::Extended).is_err());
    }

    #[test]
    fn sigma_is_multiplicative_on_coprime_arguments() {
        let gcd = |mut a: u64, mut b: u64| {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let s = |d| sigma_k(1, d, SigmaConvention::Strict).unwrap();
        for a in 1..=20u64 {
            for b in 1..=20u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(s(a * b), s(a) * s(b), "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn sigma_powers_spot_values() {
        // sigma_3(2) = 1 + 8, sigma_5(2) = 1 + 32
        assert_eq!(sigma_k(3, 2, SigmaConvention::Strict).unwrap(), int(9));
        assert_eq!(sigma_k(5, 2, SigmaConvention::Strict).unwrap(), int(33));
    }

    #[test]
    fn colored_partition_examples() {
        assert_eq!(colored_partitions(0, 12), Int::from(1));
        // C(13,2) = 78 pairs of colored 1s, plus 12 colored 2s
        assert_eq!(colored_partitions(2, 12), Int::from(90));
        // C(26,3) + 24*24 + 24
        assert_eq!(colored_partitions(3, 24), Int::from(3200));
        assert_eq!(colored_partitions(3, 0), Int::from(0));
    }

    #[test]
    fn colored_partitions_match_eta_product_coefficients() {
        for &colors in &[12i64, 24] {
            let eta = QSeries::eta_power(-colors, 10);
            for d in 0..=10u64 {
                assert_eq!(
                    Rat::from_integer(colored_partitions(d, colors as u64)),
                    eta.coeff(d as usize).clone(),
                    "d={d} colors={colors}"
                );
            }
        }
    }

    #[test]
    fn eisenstein_leading_terms() {
        assert_eq!(eisenstein(Eisenstein::E2, 1).coeffs(), &[int(1), int(-24)]);
        assert_eq!(eisenstein(Eisenstein::E4, 1).coeffs(), &[int(1), int(240)]);
        // sigma_5(2) = 33 gives -504 * 33 = -16632
        assert_eq!(
            eisenstein(Eisenstein::E6, 2).coeffs(),
            &[int(1), int(-504), int(-16632)]
        );
    }
}
