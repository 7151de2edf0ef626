//! Generation of correlation Bell inequalities and their local-realistic
//! bounds.
//!
//! Setting indices are 0-based everywhere (`k_n` in `0..M_n`). Coefficient
//! maps are sparse; zero coefficients are dropped.

mod bruteforce;
mod msetting;
mod multisetting;
mod tightness;
mod wwzb;

pub use bruteforce::lr_bound_bruteforce;
pub use msetting::{blr_bound, msetting_inequality};
pub use multisetting::{identify_settings, multisetting_generate};
pub use tightness::{tightness_check, Tightness};
pub use wwzb::{
    enumerate_sign_functions, sign_function_inequality, wwzb_lhs, CorrelationTable, SignFunction,
};

use crate::{Error, Result};
use std::collections::BTreeMap;

/// A correlation Bell inequality `|sum_k c_k E_k| <= lr_bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct BellInequality {
    parties: usize,
    settings_per_party: Vec<usize>,
    coefficients: BTreeMap<Vec<usize>, f64>,
    lr_bound: f64,
    label: String,
}

impl BellInequality {
    pub fn new(
        settings_per_party: Vec<usize>,
        coefficients: BTreeMap<Vec<usize>, f64>,
        lr_bound: f64,
        label: impl Into<String>,
    ) -> Result<Self> {
        let parties = settings_per_party.len();
        if parties == 0 {
            return Err(Error::InvalidParam("no parties".into()));
        }
        if lr_bound <= 0.0 {
            return Err(Error::InvalidParam(format!("lr_bound {lr_bound} must be positive")));
        }
        for key in coefficients.keys() {
            if key.len() != parties {
                return Err(Error::InvalidParam(format!(
                    "coefficient key arity {} != {parties}",
                    key.len()
                )));
            }
            for (j, &k) in key.iter().enumerate() {
                if k >= settings_per_party[j] {
                    return Err(Error::InvalidParam(format!(
                        "setting {k} out of range for party {j}"
                    )));
                }
            }
        }
        Ok(Self { parties, settings_per_party, coefficients, lr_bound, label: label.into() })
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn settings_per_party(&self) -> &[usize] {
        &self.settings_per_party
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, f64> {
        &self.coefficients
    }

    pub fn lr_bound(&self) -> f64 {
        self.lr_bound
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Value of the Bell expression on a correlation table.
    pub fn evaluate(&self, table: &CorrelationTable) -> Result<f64> {
        let mut acc = 0.0;
        for (k, c) in &self.coefficients {
            acc += c * table.get(k)?;
        }
        Ok(acc)
    }

    /// JSON shape: {parties, settings, coefficients: [[k-tuple, value]...],
    /// lr_bound, label}.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coefficients
            .iter()
            .map(|(k, v)| serde_json::json!([k, v]))
            .collect();
        serde_json::json!({
            "parties": self.parties,
            "settings": self.settings_per_party,
            "coefficients": coeffs,
            "lr_bound": self.lr_bound,
            "label": self.label,
        })
    }
}
