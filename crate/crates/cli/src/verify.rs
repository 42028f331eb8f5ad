//! The aggregate verification suite behind `gwq verify`: every series
//! identity, the table re-derivations, and the quasimodular layer, with
//! self-test mutation hooks that corrupt one input to prove the suite
//! catches it.

use clap::ValueEnum;
use serde_json::json;

use gwq_core::arith::{eisenstein, Eisenstein};
use gwq_core::gw::compare_series;
use gwq_core::qm::{ramanujan_check, ramanujan_check_with};
use gwq_core::{
    convolve_sum_formula, f0_ode, f0_product, fg_recursive, g_series, gamma_pair_sum_series,
    gamma_point_cross_check, genus_step_spec, h_split_spec, h_sum, neck_correction,
    point_split_spec, IdentityReport, IdentityStatus, QSeries, Rat, Series, SurfaceParams,
};

/// Deliberate corruptions for self-testing the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mutation {
    /// Bump one coefficient of the genus-0 product route.
    F0,
    /// Bump one divisor-sum value in G.
    Sigma,
    /// Bump one E4 coefficient.
    E4,
}

fn rat_one() -> Rat {
    Rat::new(1.into(), 1.into())
}

fn bump(series: &QSeries, d: usize) -> QSeries {
    let mut coeffs = series.clone().into_coeffs();
    coeffs[d] += rat_one();
    QSeries::from_coeffs(coeffs)
}

fn mutated_report(mutation: Mutation, order: usize) -> IdentityReport {
    match mutation {
        Mutation::F0 => {
            let p = SurfaceParams::new(1).expect("n >= 1");
            let corrupted = bump(&f0_product(&p, order), 3.min(order));
            compare_series(
                "F0: infinite product = ODE recursion",
                Some(1),
                &corrupted,
                &f0_ode(&p, order),
            )
        }
        Mutation::Sigma => {
            let corrupted = bump(&g_series(order), 2.min(order));
            compare_series("G = (1 - E2)/24", None, &corrupted, &e2_route(order))
        }
        Mutation::E4 => {
            let e2 = eisenstein(Eisenstein::E2, order);
            let e4 = bump(&eisenstein(Eisenstein::E4, order), 1.min(order));
            let e6 = eisenstein(Eisenstein::E6, order);
            ramanujan_check_with(&e2, &e4, &e6)
                .into_iter()
                .next()
                .expect("three identities")
        }
    }
}

fn e2_route(order: usize) -> QSeries {
    let one = Series::one(order);
    (&one - &eisenstein(Eisenstein::E2, order)).scale(&Rat::new(1.into(), 24.into()))
}

/// Every identity the engine knows how to check, for all `n <= n_max` and
/// genus up to `g_max`, at one truncation order.
pub fn run_verify(
    n_max: u32,
    g_max: u32,
    order: usize,
    mutate: Option<Mutation>,
) -> Vec<IdentityReport> {
    let mut reports = Vec::new();

    // surface-independent layer
    reports.push(compare_series(
        "G = (1 - E2)/24",
        None,
        &g_series(order),
        &e2_route(order),
    ));
    reports.extend(ramanujan_check(order));
    let gamma_lhs = Series::from_fn(order, |d| {
        if d == 0 {
            Rat::new(0.into(), 1.into())
        } else {
            gamma_point_cross_check(d as u64).0
        }
    });
    let gamma_rhs = Series::from_fn(order, |d| {
        if d == 0 {
            Rat::new(0.into(), 1.into())
        } else {
            gamma_point_cross_check(d as u64).1
        }
    });
    reports.push(compare_series(
        "absolute gamma-pair point values = table assembly (d >= 1)",
        None,
        &gamma_lhs,
        &gamma_rhs,
    ));

    for n in 1..=n_max {
        let p = SurfaceParams::new(n).expect("n >= 1");
        reports.extend(gwq_core::verify_all(&p, g_max, order));

        reports.push(compare_series(
            "fiber-sum convolution (descendent split) = H",
            Some(n),
            &convolve_sum_formula(&h_split_spec(&p, order), order),
            &h_sum(&p, order),
        ));
        for g in 1..=g_max {
            reports.push(compare_series(
                &format!("fiber-sum convolution (genus step) = F{g}"),
                Some(n),
                &convolve_sum_formula(&genus_step_spec(&p, g, order), order),
                &fg_recursive(&p, g, order),
            ));
        }
        reports.push(compare_series(
            "fiber-sum point split leaves F_g fixed",
            Some(n),
            &convolve_sum_formula(&point_split_spec(&p, g_max, order), order),
            &fg_recursive(&p, g_max, order),
        ));
        reports.push(compare_series(
            "neck correction vanishes",
            Some(n),
            &neck_correction(&p, order),
            &Series::zero(order),
        ));
        for g in 1..=g_max {
            reports.push(compare_series(
                &format!("gamma-pair fiber-sum assembly vanishes (g={g})"),
                Some(n),
                &gamma_pair_sum_series(&p, g, order),
                &Series::zero(order),
            ));
        }
    }

    if let Some(mutation) = mutate {
        reports.push(mutated_report(mutation, order));
    }
    reports
}

pub fn text_report(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&report.to_string());
        out.push('\n');
    }
    let verified = reports.iter().filter(|r| r.is_verified()).count();
    out.push_str(&format!(
        "{verified}/{} identities verified\n",
        reports.len()
    ));
    if let Some(first_bad) = reports.iter().find(|r| !r.is_verified()) {
        out.push_str(&format!("first failure: {first_bad}\n"));
    }
    out
}

pub fn json_report(reports: &[IdentityReport], order: usize) -> String {
    let entries: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| match &r.status {
            IdentityStatus::Verified => json!({
                "identity": r.identity,
                "n": r.n,
                "order": r.order,
                "status": "verified",
            }),
            IdentityStatus::FailedAt { d, lhs, rhs } => json!({
                "identity": r.identity,
                "n": r.n,
                "order": r.order,
                "status": "failed",
                "d": d,
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
            }),
        })
        .collect();
    let doc = json!({
        "schema_version": "1",
        "order": order,
        "all_verified": reports.iter().all(|r| r.is_verified()),
        "reports": entries,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
