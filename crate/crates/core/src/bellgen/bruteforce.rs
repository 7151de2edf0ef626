use super::BellInequality;
use crate::{tolerances, Error, Result};

/// Exact local-realistic bound by enumeration of all deterministic
/// strategies (the oracle for every closed-form bound). Each party assigns
/// +-1 to each of its settings; the bound is the maximum |value| over all
/// `2^(sum M_j)` assignments.
pub fn lr_bound_bruteforce(ineq: &BellInequality) -> Result<f64> {
    let total_settings: usize = ineq.settings_per_party().iter().sum();
    if total_settings > tolerances::MAX_BRUTE_SETTINGS {
        return Err(Error::GuardExceeded {
            what: format!("2^{total_settings} deterministic strategies"),
            limit: tolerances::MAX_BRUTE_SETTINGS,
        });
    }
    // bit position of (party, setting)
    let mut offset = vec![0usize; ineq.parties()];
    let mut acc = 0;
    for (j, &m) in ineq.settings_per_party().iter().enumerate() {
        offset[j] = acc;
        acc += m;
    }
    // per-term bit selector: parity of (mask & selector) flips the sign
    let terms: Vec<(u32, f64)> = ineq
        .coefficients()
        .iter()
        .map(|(key, &c)| {
            let mut sel = 0u32;
            for (j, &k) in key.iter().enumerate() {
                sel |= 1 << (offset[j] + k);
            }
            (sel, c)
        })
        .collect();

    let mut best = 0.0f64;
    for mask in 0..(1u32 << total_settings) {
        let mut value = 0.0;
        for &(sel, c) in &terms {
            if (mask & sel).count_ones() % 2 == 0 {
                value += c;
            } else {
                value -= c;
            }
        }
        best = best.max(value.abs());
    }
    Ok(best)
}
