//! Value tables of relative invariants for `E(0)` and `E(n)`, and the generic
//! two-factor fiber-sum convolution that rebuilds the generating-function
//! identities from raw table data.
//!
//! The rows are data, not formulas scattered through code: each is one
//! tabulated value family keyed by (surface, genus, constraint, contact
//! condition along the fixed fiber `V`). Degree-0 entries use the
//! `sigma(0) = -1/24` convention, which is exactly what makes the genus-0
//! convolutions produce the `-F0/12` summand.
//!
//! One stored reading is deliberate: the genus-0 gamma-pair row takes two
//! *distinct* 1-cocycles `(gamma_1, gamma_2)`. A key asking for the repeated
//! pair `(gamma_1, gamma_1)` is rejected rather than defaulted, since the two
//! readings disagree and only the distinct-pair one participates in the
//! cross-checks here. Likewise the degree-0 case of
//! [`gamma_point_cross_check`] is excluded: with the stored rows it would
//! read `0 = 1`, and no sigma-convention choice repairs it.

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{sigma_k, SigmaConvention};
use crate::gw::{fg_closed, SurfaceParams};
use crate::scalar::Coeff;
use crate::series::Series;
use crate::{QSeries, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error(
        "no tabulated value for this key; keys outside the tables are rejected, never defaulted"
    )]
    UnknownTableRow,
    #[error(
        "the gamma-pair rows are stored for distinct cocycles (gamma_1, gamma_2); use Gamma12"
    )]
    AmbiguousGammaRow,
    #[error("degree {degree} exceeds the truncation order {order}")]
    DegreeBeyondOrder { degree: u64, order: usize },
    #[error("key surface does not match the lookup target")]
    SurfaceMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    /// `E(0) = T^2 x S^2`; its relative invariants are pure table data.
    E0,
    /// `E(n)` with `n >= 1`; its tabulated rows reduce to the family series.
    En(u32),
}

/// Insertion constraint of a tabulated relative invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Descendent constraint `tau(f*)`.
    TauFstar,
    /// One point.
    Pt,
    /// `pt^m` point constraints.
    PtPower(u32),
    /// Repeated 1-cocycle pair `(gamma_1, gamma_1)` -- rejected, see module docs.
    Gamma11,
    /// Distinct 1-cocycle pair `(gamma_1, gamma_2)`.
    Gamma12,
    None,
}

/// Contact condition along the fixed fiber(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    /// `C(pt)`: contact point constrained to a point of `V`.
    CPt,
    /// `C(f)`: unconstrained contact with `V`.
    CF,
    /// `(C(pt), C(pt))` along two distinct fibers `V` and `U`.
    CPtPt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelInvariantKey {
    pub surface: Surface,
    pub genus: u32,
    pub degree: u64,
    pub constraint: Constraint,
    pub contact: Contact,
}

fn sigma_ext(d: u64) -> Rat {
    sigma_k(1, d, SigmaConvention::Extended).expect("extended convention is total")
}

fn delta0(d: u64) -> Rat {
    if d == 0 {
        Rat::from_int(1)
    } else {
        Rat::zero()
    }
}

/// Tabulated relative invariants of `E(0)` in the class `s + d f`.
///
/// Rows, in the stored `sigma(0) = -1/24` convention:
///
/// | genus | constraint           | contact        | value        |
/// |-------|----------------------|----------------|--------------|
/// | 0     | `tau(f*)`            | `C(f)`         | `0`          |
/// | 1     | `tau(f*)`            | `C(pt)`        | `2 sigma(d)` |
/// | 0     | `pt`                 | `C(f)`         | `[d=0]`      |
/// | 0     | none                 | `C(pt)`        | `[d=0]`      |
/// | 1     | `pt`                 | `C(pt)`        | `d sigma(d)` |
/// | 1     | none                 | `C(pt),C(pt)`  | `0`          |
/// | 0     | `gamma_1, gamma_2`   | `C(f)`         | `[d=0]`      |
/// | 1     | `gamma_1, gamma_2`   | `C(pt)`        | `0`          |
pub fn relative_e0(key: &RelInvariantKey) -> Result<Rat, TableError> {
    if key.surface != Surface::E0 {
        return Err(TableError::SurfaceMismatch);
    }
    if key.constraint == Constraint::Gamma11 {
        return Err(TableError::AmbiguousGammaRow);
    }
    let d = key.degree;
    match (key.genus, key.constraint, key.contact) {
        (0, Constraint::TauFstar, Contact::CF) => Ok(Rat::zero()),
        (1, Constraint::TauFstar, Contact::CPt) => Ok(Rat::from_int(2) * sigma_ext(d)),
        (0, Constraint::Pt, Contact::CF) => Ok(delta0(d)),
        (0, Constraint::None, Contact::CPt) => Ok(delta0(d)),
        (1, Constraint::Pt, Contact::CPt) => Ok(Rat::from_int(d as i64) * sigma_ext(d)),
        (1, Constraint::None, Contact::CPtPt) => Ok(Rat::zero()),
        (0, Constraint::Gamma12, Contact::CF) => Ok(delta0(d)),
        (1, Constraint::Gamma12, Contact::CPt) => Ok(Rat::zero()),
        _ => Err(TableError::UnknownTableRow),
    }
}

/// Tabulated relative invariants of `E(n)`, `n >= 1`, relative to a smooth
/// fiber:
///
/// - `GW^V_{s+df,g}(pt^{g-1}; C(pt)) = 0`
/// - `GW^V_{s+df,g}(pt^g; C(f))` equals the absolute family invariant, i.e.
///   the `t^d` coefficient of the genus-`g` generating function.
pub fn relative_en(
    p: &SurfaceParams,
    key: &RelInvariantKey,
    order: usize,
) -> Result<Rat, TableError> {
    match key.surface {
        Surface::En(m) if m == p.n() => {}
        _ => return Err(TableError::SurfaceMismatch),
    }
    if key.degree > order as u64 {
        return Err(TableError::DegreeBeyondOrder {
            degree: key.degree,
            order,
        });
    }
    match (key.constraint, key.contact) {
        (Constraint::PtPower(m), Contact::CPt) if key.genus >= 1 && m == key.genus - 1 => {
            Ok(Rat::zero())
        }
        (Constraint::PtPower(m), Contact::CF) if m == key.genus => {
            Ok(fg_closed(p, key.genus, order)
                .coeff(key.degree as usize)
                .clone())
        }
        _ => Err(TableError::UnknownTableRow),
    }
}

// Whole-degree-range row families. These are the same data `relative_e0` /
// `relative_en` serve pointwise, materialized once so the convolutions do not
// recompute a generating function per coefficient.

fn e0_family(genus: u32, constraint: Constraint, contact: Contact, order: usize) -> Vec<Rat> {
    (0..=order as u64)
        .map(|d| {
            relative_e0(&RelInvariantKey {
                surface: Surface::E0,
                genus,
                degree: d,
                constraint,
                contact,
            })
            .expect("tabulated row")
        })
        .collect()
}

fn en_point_contact_family(order: usize) -> Vec<Rat> {
    vec![Rat::zero(); order + 1]
}

fn en_fiber_contact_family(p: &SurfaceParams, genus: u32, order: usize) -> Vec<Rat> {
    fg_closed(p, genus, order).into_coeffs()
}

/// The two factor pairs of a fiber-sum convolution: coefficient `d` of the
/// result is `sum_{d1+d2=d} first_left[d1] first_right[d2] +
/// sum_{d1+d2=d} second_left[d1] second_right[d2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumFormulaSpec {
    pub first_left: Vec<Rat>,
    pub first_right: Vec<Rat>,
    pub second_left: Vec<Rat>,
    pub second_right: Vec<Rat>,
}

/// Evaluates the two-term convolution of a [`SumFormulaSpec`].
///
/// The neck contribution that would enter as a third term carries the
/// two-fiber factor `Phi^{V,U}_{df,1}(C(pt), C(pt))`; that table row is zero,
/// and it is asserted here degree by degree rather than silently dropped.
pub fn convolve_sum_formula(spec: &SumFormulaSpec, order: usize) -> QSeries {
    for family in [
        &spec.first_left,
        &spec.first_right,
        &spec.second_left,
        &spec.second_right,
    ] {
        assert!(
            family.len() > order,
            "table family shorter than the requested order"
        );
    }
    for d3 in 0..=order as u64 {
        let neck_factor = relative_e0(&RelInvariantKey {
            surface: Surface::E0,
            genus: 1,
            degree: d3,
            constraint: Constraint::None,
            contact: Contact::CPtPt,
        })
        .expect("tabulated row");
        assert!(neck_factor.is_zero(), "nonzero neck factor at d3={d3}");
    }
    Series::from_fn(order, |d| {
        let mut acc = Rat::zero();
        for d1 in 0..=d {
            let d2 = d - d1;
            if !spec.first_left[d1].is_zero() && !spec.first_right[d2].is_zero() {
                acc += &spec.first_left[d1] * &spec.first_right[d2];
            }
            if !spec.second_left[d1].is_zero() && !spec.second_right[d2].is_zero() {
                acc += &spec.second_left[d1] * &spec.second_right[d2];
            }
        }
        acc
    })
}

/// Fiber-sum spec whose convolution rebuilds the genus-1 descendent series
/// `H`: the descendent constraint sits on the `E(0)` side.
///
/// First pair: `GW^V_{s+d1f,1}(C(pt))` (zero row) times
/// `Phi^V_{s+d2f,0}(tau(f*); C(f))` (zero row). Second pair:
/// `GW^V_{s+d1f,0}(C(f))` (the genus-0 series) times
/// `Phi^V_{s+d2f,1}(tau(f*); C(pt)) = 2 sigma(d2)`.
pub fn h_split_spec(p: &SurfaceParams, order: usize) -> SumFormulaSpec {
    SumFormulaSpec {
        first_left: en_point_contact_family(order),
        first_right: e0_family(0, Constraint::TauFstar, Contact::CF, order),
        second_left: en_fiber_contact_family(p, 0, order),
        second_right: e0_family(1, Constraint::TauFstar, Contact::CPt, order),
    }
}

/// Fiber-sum spec whose convolution performs one genus step
/// `F_{g-1} -> F_g`: `g - 1` points on the `E(n)` side, one on `E(0)`.
///
/// First pair: `GW^V_{s+d1f,g}(pt^{g-1}; C(pt))` (zero row) times
/// `Phi^V_{s+d2f,0}(pt; C(f)) = [d2=0]`. Second pair:
/// `GW^V_{s+d1f,g-1}(pt^{g-1}; C(f))` (the genus-`g-1` series) times
/// `Phi^V_{s+d2f,1}(pt; C(pt)) = d2 sigma(d2)`.
pub fn genus_step_spec(p: &SurfaceParams, g: u32, order: usize) -> SumFormulaSpec {
    assert!(g >= 1, "the genus step needs g >= 1");
    SumFormulaSpec {
        first_left: en_point_contact_family(order),
        first_right: e0_family(0, Constraint::Pt, Contact::CF, order),
        second_left: en_fiber_contact_family(p, g - 1, order),
        second_right: e0_family(1, Constraint::Pt, Contact::CPt, order),
    }
}

/// Fiber-sum spec with all `g` points on the `E(n)` side; the `E(0)` factor
/// is the delta row `Phi^V_{s+d2f,0}(C(pt)) = [d2=0]`, so the convolution
/// returns the genus-`g` series unchanged.
pub fn point_split_spec(p: &SurfaceParams, g: u32, order: usize) -> SumFormulaSpec {
    SumFormulaSpec {
        first_left: en_fiber_contact_family(p, g, order),
        first_right: e0_family(0, Constraint::None, Contact::CPt, order),
        second_left: vec![Rat::zero(); order + 1],
        second_right: vec![Rat::zero(); order + 1],
    }
}

/// The would-be neck contribution, summed over all decompositions
/// `d1 + d2 + d3 = d`: genus-0 fiber-contact values on the `E(n)` side, the
/// two-fiber row at `d3`, and the descendent fiber-contact row on the `E(0)`
/// side. Every term carries the zero two-fiber factor, so the series must
/// vanish identically.
///
/// The triple sum associates as two successive convolutions; the
/// decomposition-by-decomposition evaluation lives in the acceptance suite
/// at desk order.
pub fn neck_correction(p: &SurfaceParams, order: usize) -> QSeries {
    let left = en_fiber_contact_family(p, 0, order);
    let middle = e0_family(1, Constraint::None, Contact::CPtPt, order);
    let right = e0_family(0, Constraint::TauFstar, Contact::CF, order);
    let pair = Series::from_fn(order, |d| {
        let mut acc = Rat::zero();
        for d3 in 0..=d {
            if !middle[d3].is_zero() && !right[d - d3].is_zero() {
                acc += &middle[d3] * &right[d - d3];
            }
        }
        acc
    });
    Series::from_fn(order, |d| {
        let mut acc = Rat::zero();
        for d1 in 0..=d {
            if !left[d1].is_zero() && !pair.coeff(d - d1).is_zero() {
                acc += &left[d1] * pair.coeff(d - d1);
            }
        }
        acc
    })
}

/// Cross-checks the absolute genus-1 invariant of `E(0)` with constraints
/// `(pt, gamma_1, gamma_2)` against its fiber-sum assembly from table rows.
///
/// Returns `(cited absolute value, table assembly)`; the two must agree for
/// `d >= 1`, which is what forces the genus-0 gamma-pair row to vanish in
/// positive degrees. The degree-0 case is excluded (see module docs).
pub fn gamma_point_cross_check(d: u64) -> (Rat, Rat) {
    assert!(d >= 1, "degree 0 is excluded from this cross-check");
    // Independently cited value of Phi_{s+df,1}(pt, gamma_1, gamma_2).
    let absolute =
        Rat::from_int(d as i64) * sigma_k(1, d, SigmaConvention::Strict).expect("d >= 1");
    let gamma_row = relative_e0(&RelInvariantKey {
        surface: Surface::E0,
        genus: 0,
        degree: d,
        constraint: Constraint::Gamma12,
        contact: Contact::CF,
    })
    .expect("tabulated row");
    let point_row = relative_e0(&RelInvariantKey {
        surface: Surface::E0,
        genus: 1,
        degree: d,
        constraint: Constraint::Pt,
        contact: Contact::CPt,
    })
    .expect("tabulated row");
    (absolute, gamma_row + point_row)
}

/// Fiber-sum assembly of `GW^H_{s+df,g}(pt^{g-1}, gamma_1, gamma_2)` from the
/// gamma-pair rows. `E(n)` is simply connected, so the assembled series must
/// be identically zero.
pub fn gamma_pair_sum_series(p: &SurfaceParams, g: u32, order: usize) -> QSeries {
    assert!(g >= 1, "needs a genus to split off");
    let spec = SumFormulaSpec {
        first_left: en_point_contact_family(order),
        first_right: e0_family(0, Constraint::Gamma12, Contact::CF, order),
        second_left: en_fiber_contact_family(p, g - 1, order),
        second_right: e0_family(1, Constraint::Gamma12, Contact::CPt, order),
    };
    convolve_sum_formula(&spec, order)
}

/// The full value table as a JSON document (row id, formula text, sample
/// values `d = 0..8`), for documentation tooling. Values are exact rational
/// strings.
pub fn relative_value_table(p: &SurfaceParams) -> Value {
    const SAMPLE: usize = 8;
    let e0_rows: [(&str, &str, u32, Constraint, Contact); 8] = [
        (
            "e0.g0.tau.cf",
            "Phi^V_{s+df,0}(tau(f*); C(f)) = 0",
            0,
            Constraint::TauFstar,
            Contact::CF,
        ),
        (
            "e0.g1.tau.cpt",
            "Phi^V_{s+df,1}(tau(f*); C(pt)) = 2 sigma(d)",
            1,
            Constraint::TauFstar,
            Contact::CPt,
        ),
        (
            "e0.g0.pt.cf",
            "Phi^V_{s+df,0}(pt; C(f)) = [d=0]",
            0,
            Constraint::Pt,
            Contact::CF,
        ),
        (
            "e0.g0.none.cpt",
            "Phi^V_{s+df,0}(C(pt)) = [d=0]",
            0,
            Constraint::None,
            Contact::CPt,
        ),
        (
            "e0.g1.pt.cpt",
            "Phi^V_{s+df,1}(pt; C(pt)) = d sigma(d)",
            1,
            Constraint::Pt,
            Contact::CPt,
        ),
        (
            "e0.g1.none.cpt-cpt",
            "Phi^{V,U}_{s+df,1}(C(pt), C(pt)) = 0",
            1,
            Constraint::None,
            Contact::CPtPt,
        ),
        (
            "e0.g0.gamma-pair.cf",
            "Phi^V_{s+df,0}(gamma_1, gamma_2; C(f)) = [d=0]",
            0,
            Constraint::Gamma12,
            Contact::CF,
        ),
        (
            "e0.g1.gamma-pair.cpt",
            "Phi^V_{s+df,1}(gamma_1, gamma_2; C(pt)) = 0",
            1,
            Constraint::Gamma12,
            Contact::CPt,
        ),
    ];
    let mut rows: Vec<Value> = e0_rows
        .iter()
        .map(|(id, formula, genus, constraint, contact)| {
            let values: Vec<String> = e0_family(*genus, *constraint, *contact, SAMPLE)
                .iter()
                .map(|v| v.to_string())
                .collect();
            json!({ "id": id, "formula": formula, "values": values })
        })
        .collect();
    for g in 1..=2u32 {
        let values: Vec<String> = en_point_contact_family(SAMPLE)
            .iter()
            .map(|v| v.to_string())
            .collect();
        rows.push(json!({
            "id": format!("en.g{g}.pt-power.cpt"),
            "formula": format!("GW^V_{{s+df,{g}}}(pt^{}; C(pt)) = 0", g - 1),
            "values": values,
        }));
    }
    for g in 0..=2u32 {
        let values: Vec<String> = en_fiber_contact_family(p, g, SAMPLE)
            .iter()
            .map(|v| v.to_string())
            .collect();
        rows.push(json!({
            "id": format!("en.g{g}.pt-power.cf"),
            "formula": format!("GW^V_{{s+df,{g}}}(pt^{g}; C(f)) = GW^H_{{s+df,{g}}}(pt^{g})"),
            "values": values,
        }));
    }
    json!({
        "schema_version": "1",
        "surface_n": p.n(),
        "sample_degrees": (0..=SAMPLE).collect::<Vec<_>>(),
        "rows": rows,
    })
}
