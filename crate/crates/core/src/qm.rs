//! The weight-graded polynomial ring on `E2, E4, E6` and exact recognition of
//! q-series inside it.
//!
//! `recognize` solves a rational linear system matching a series against the
//! monomial expansions of one weight. The solve uses coefficients up to
//! `basis size + 8` and then re-checks any solution against the full
//! available order; a match on the solve window alone is never accepted.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{eisenstein, Eisenstein};
use crate::gw::{compare_series, IdentityReport};
use crate::scalar::Coeff;
use crate::series::Series;
use crate::{QSeries, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QmError {
    #[error("weight {0} is odd; the ring is concentrated in even weights")]
    OddWeight(u32),
    /// Recognition needs the series truncated no lower than `basis + 8`.
    #[error(
        "series order {available} is too small: recognition at this weight needs order >= {needed}"
    )]
    InsufficientOrder { needed: usize, available: usize },
    #[error("monomial E2^{} E4^{} E6^{} has weight {}, not {weight}",
        monomial.0, monomial.1, monomial.2, 2 * monomial.0 + 4 * monomial.1 + 6 * monomial.2)]
    InhomogeneousMonomial {
        monomial: (u32, u32, u32),
        weight: u32,
    },
}

/// Homogeneous polynomial in `E2, E4, E6`; the key `(a, b, c)` is the
/// monomial `E2^a E4^b E6^c` of weight `2a + 4b + 6c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QmPoly {
    weight: u32,
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl QmPoly {
    /// Builds a polynomial, rejecting monomials off the stated weight and
    /// dropping zero coefficients (the representation is canonical).
    pub fn new(
        weight: u32,
        terms: impl IntoIterator<Item = ((u32, u32, u32), Rat)>,
    ) -> Result<Self, QmError> {
        if !weight.is_multiple_of(2) {
            return Err(QmError::OddWeight(weight));
        }
        let mut map: BTreeMap<(u32, u32, u32), Rat> = BTreeMap::new();
        for (monomial, coeff) in terms {
            let (a, b, c) = monomial;
            if 2 * a + 4 * b + 6 * c != weight {
                return Err(QmError::InhomogeneousMonomial { monomial, weight });
            }
            *map.entry(monomial).or_insert_with(Rat::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(QmPoly { weight, terms: map })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: (u32, u32, u32)) -> Rat {
        self.terms.get(&monomial).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.terms.iter()
    }

    /// q-expansion of the polynomial, truncated at `order`.
    pub fn expand(&self, order: usize) -> QSeries {
        let e2 = eisenstein(Eisenstein::E2, order);
        let e4 = eisenstein(Eisenstein::E4, order);
        let e6 = eisenstein(Eisenstein::E6, order);
        let mut acc = Series::zero(order);
        for (&(a, b, c), coeff) in &self.terms {
            let m = &(&monomial_power(&e2, a) * &monomial_power(&e4, b)) * &monomial_power(&e6, c);
            acc = &acc + &m.scale(coeff);
        }
        acc
    }
}

fn monomial_power(base: &QSeries, e: u32) -> QSeries {
    base.pow_int(e as i64).expect("nonnegative power")
}

impl fmt::Display for QmPoly {
    /// Canonical form: summands `c * E2^a E4^b E6^c` in basis order, exact
    /// rationals, parenthesized when negative or fractional.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let basis = monomial_basis(self.weight).expect("stored weight is even");
        let mut first = true;
        for monomial in basis {
            let Some(coeff) = self.terms.get(&monomial) else {
                continue;
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if coeff.is_integer() && !coeff.is_negative() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "({coeff})")?;
            }
            let (a, b, c) = monomial;
            let mut factors = String::new();
            for (label, e) in [("E2", a), ("E4", b), ("E6", c)] {
                if e > 0 {
                    if !factors.is_empty() {
                        factors.push(' ');
                    }
                    factors.push_str(&format!("{label}^{e}"));
                }
            }
            if !factors.is_empty() {
                write!(f, " * {factors}")?;
            }
        }
        Ok(())
    }
}

/// All monomials `(a, b, c)` with `2a + 4b + 6c = weight`, in the canonical
/// deterministic order (descending `a`, then descending `b`).
pub fn monomial_basis(weight: u32) -> Result<Vec<(u32, u32, u32)>, QmError> {
    if !weight.is_multiple_of(2) {
        return Err(QmError::OddWeight(weight));
    }
    let mut out = Vec::new();
    for a in (0..=weight / 2).rev() {
        let rem = weight - 2 * a;
        for b in (0..=rem / 4).rev() {
            let rem2 = rem - 4 * b;
            if rem2.is_multiple_of(6) {
                out.push((a, b, rem2 / 6));
            }
        }
    }
    Ok(out)
}

/// Result of matching a series against one weight of the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Solved(QmPoly),
    /// The linear system is inconsistent: no polynomial of this weight has
    /// this expansion.
    NoSolution,
    /// The system is underdetermined at the order provided.
    Ambiguous,
}

/// Matches `s` against the weight-`weight` monomials of `Q[E2, E4, E6]` by an
/// exact rational linear solve.
pub fn recognize(s: &QSeries, weight: u32) -> Result<Recognition, QmError> {
    let basis = monomial_basis(weight)?;
    let window = basis.len() + 8;
    let available = s.order();
    if available < window {
        return Err(QmError::InsufficientOrder {
            needed: window,
            available,
        });
    }
    let e2 = eisenstein(Eisenstein::E2, available);
    let e4 = eisenstein(Eisenstein::E4, available);
    let e6 = eisenstein(Eisenstein::E6, available);
    let columns: Vec<QSeries> = basis
        .iter()
        .map(|&(a, b, c)| {
            &(&monomial_power(&e2, a) * &monomial_power(&e4, b)) * &monomial_power(&e6, c)
        })
        .collect();

    let rows: Vec<Vec<Rat>> = (0..=window)
        .map(|d| columns.iter().map(|col| col.coeff(d).clone()).collect())
        .collect();
    let rhs: Vec<Rat> = (0..=window).map(|d| s.coeff(d).clone()).collect();

    match solve_exact(rows, rhs) {
        Outcome::Inconsistent => Ok(Recognition::NoSolution),
        Outcome::Underdetermined => Ok(Recognition::Ambiguous),
        Outcome::Unique(x) => {
            let mut combo = Series::zero(available);
            for (coeff, col) in x.iter().zip(&columns) {
                combo = &combo + &col.scale(coeff);
            }
            if combo == *s {
                Ok(Recognition::Solved(QmPoly::new(
                    weight,
                    basis.into_iter().zip(x),
                )?))
            } else {
                // solved on the window but wrong beyond it
                Ok(Recognition::NoSolution)
            }
        }
    }
}

enum Outcome {
    Unique(Vec<Rat>),
    Inconsistent,
    Underdetermined,
}

/// Gauss-Jordan elimination over the rationals, exact.
fn solve_exact(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Outcome {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(pivot_row) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        b.swap(rank, pivot_row);
        let inv = a[rank][col].clone().recip();
        for c in col..k {
            a[rank][c] = a[rank][c].clone() * inv.clone();
        }
        b[rank] = b[rank].clone() * inv;
        for r in 0..m {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..k {
                    a[r][c] = a[r][c].clone() - factor.clone() * a[rank][c].clone();
                }
                b[r] = b[r].clone() - factor * b[rank].clone();
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if b[rank..].iter().any(|v| !v.is_zero()) {
        return Outcome::Inconsistent;
    }
    if rank < k {
        return Outcome::Underdetermined;
    }
    let mut x = vec![Rat::zero(); k];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = b[i].clone();
    }
    Outcome::Unique(x)
}

/// The classical derivative closure of the generators, as exact series
/// identities truncated at `order`:
///
/// - `t dE2/dt = (E2^2 - E4)/12`
/// - `t dE4/dt = (E2 E4 - E6)/3`
/// - `t dE6/dt = (E2 E6 - E4^2)/2`
pub fn ramanujan_check(order: usize) -> Vec<IdentityReport> {
    ramanujan_check_with(
        &eisenstein(Eisenstein::E2, order),
        &eisenstein(Eisenstein::E4, order),
        &eisenstein(Eisenstein::E6, order),
    )
}

/// [`ramanujan_check`] against caller-provided candidate expansions; lets a
/// corrupted generator be fed in to demonstrate the checks have teeth.
pub fn ramanujan_check_with(e2: &QSeries, e4: &QSeries, e6: &QSeries) -> Vec<IdentityReport> {
    let checks = [
        (
            "t dE2/dt = (E2^2 - E4)/12",
            e2.t_ddt(),
            (&(e2 * e2) - e4).scale(&Rat::from_ratio(1, 12)),
        ),
        (
            "t dE4/dt = (E2 E4 - E6)/3",
            e4.t_ddt(),
            (&(e2 * e4) - e6).scale(&Rat::from_ratio(1, 3)),
        ),
        (
            "t dE6/dt = (E2 E6 - E4^2)/2",
            e6.t_ddt(),
            (&(e2 * e6) - &(e4 * e4)).scale(&Rat::from_ratio(1, 2)),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, lhs, rhs)| compare_series(name, None, &lhs, &rhs))
        .collect()
}
