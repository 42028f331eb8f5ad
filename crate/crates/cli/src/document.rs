//! The table document: schema, emission, and the dual-route build.
//!
//! Values are exact rational strings ("p/q", or "p" when the denominator is
//! 1) in both JSON and CSV; nothing is ever rendered through floating point.

use std::path::Path;

use serde::{Deserialize, Serialize};

use gwq_core::gw::CrossCheckFailure;
use gwq_core::{fg_closed, fg_recursive, GwError, GwTable, QSeries, Rat, SurfaceParams};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: String,
    pub surface_n: u32,
    pub genus_range: Vec<u32>,
    pub order: usize,
    /// Route names used to produce and cross-check the values.
    pub provenance: Vec<String>,
    /// Sorted by genus ascending, then degree ascending.
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub g: u32,
    pub d: usize,
    pub value: String,
}

impl TableDocument {
    /// Computes every value by the closed form and refuses to emit anything
    /// the genus recursion does not reproduce. `corrupt` is the self-test
    /// hook that perturbs one closed-form coefficient so the refusal path is
    /// exercisable.
    pub fn build(
        p: &SurfaceParams,
        g_max: u32,
        order: usize,
        corrupt: bool,
    ) -> Result<Self, GwError> {
        let mut table = GwTable::new(order);
        for g in 0..=g_max {
            let mut closed = fg_closed(p, g, order);
            if corrupt {
                let mut coeffs = closed.into_coeffs();
                let d = 3.min(order);
                coeffs[d] += Rat::new(1.into(), 1.into());
                closed = QSeries::from_coeffs(coeffs);
            }
            let recursive = fg_recursive(p, g, order);
            if let Some((d, lhs, rhs)) = closed.first_mismatch(&recursive) {
                return Err(GwError::CrossCheck(Box::new(CrossCheckFailure {
                    identity: "closed form vs genus recursion".into(),
                    n: p.n(),
                    g,
                    d,
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                })));
            }
            for d in 0..=order {
                table.insert(p.n(), g, d, closed.coeff(d).clone());
            }
        }
        let rows = table
            .rows()
            .map(|(&(_, g, d), value)| TableRow {
                g,
                d,
                value: value.to_string(),
            })
            .collect();
        Ok(TableDocument {
            schema_version: "1".into(),
            surface_n: p.n(),
            genus_range: (0..=g_max).collect(),
            order,
            provenance: vec![
                "closed form: (tG')^g * eta-type product".into(),
                "cross-check: genus recursion over the ODE route".into(),
            ],
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    #[cfg(test)]
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("g,d,value\n");
        for row in &self.rows {
            out.push_str(&format!("{},{},{}\n", row.g, row.d, row.value));
        }
        out
    }
}

pub fn write_output(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => {
            std::fs::write(p, content).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
