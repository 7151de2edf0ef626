use super::frames::{complex_contraction, tangent_pair};
use crate::bellgen::blr_bound;
use crate::optimize::{maximize, OptimizerConfig};
use crate::qstate::CorrelationTensor;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Result of the M-setting violation condition.
#[derive(Debug, Clone)]
pub struct MsOutcome {
    /// `(M/2)^N max_frames sum_{I_xi} (-1)^xi T` — the Bell operator average.
    pub lhs: f64,
    /// Local realistic bound `B_LR(N, M)`.
    pub bound: f64,
    /// `lhs / bound`.
    pub violation_factor: f64,
    /// Spherical angles (theta, phi) of each party's plane normal.
    pub params: Vec<f64>,
    pub converged: bool,
}

/// Violation condition for the arbitrary-M cosine inequality: maximizes the
/// alternating xy-plane correlation sum over the orientation of each party's
/// equatorial plane.
///
/// The alternating sum equals `|T o (a_1 + i b_1) x ... x (a_N + i b_N)|`
/// with (a_n, b_n) a right-handed basis of party n's plane, so only the
/// plane normals matter.
pub fn ms_violation(
    t: &CorrelationTensor,
    settings: usize,
    cfg: &OptimizerConfig,
) -> Result<MsOutcome> {
    let n = t.parties();
    if n < 2 || settings < 2 {
        return Err(Error::InvalidParam("need N >= 2 parties and M >= 2 settings".into()));
    }
    let block = t.full_block();
    let objective = |params: &[f64]| {
        let pairs: Vec<([f64; 3], [f64; 3])> =
            params.chunks(2).map(|p| tangent_pair(p[0], p[1])).collect();
        let (re, im) = complex_contraction(&block, n, &pairs);
        (re * re + im * im).sqrt()
    };
    let ranges: Vec<(f64, f64)> = (0..2 * n)
        .map(|i| if i % 2 == 0 { (0.0, PI) } else { (0.0, 2.0 * PI) })
        .collect();
    // theta = 0: normals along z, planes equatorial
    let m = maximize(objective, &vec![0.0; 2 * n], &ranges, cfg);

    let scale = (settings as f64 / 2.0).powi(n as i32);
    let bound = blr_bound(n, settings);
    let lhs = scale * m.value;
    Ok(MsOutcome {
        lhs,
        bound,
        violation_factor: lhs / bound,
        params: m.params,
        converged: m.converged,
    })
}

/// GHZ-state violation factor `V(N, M)` in closed form.
pub fn ghz_violation_factor(parties: usize, settings: usize) -> f64 {
    let (n, m) = (parties as i32, settings as f64);
    let s = (PI / (2.0 * m)).sin();
    (m * s).powi(n) / (2.0 * (PI / (2.0 * m)).cos())
}

/// Violation factor of the phase-tuned Bell operator on the Dur bound
/// entangled state, `M^N / (2 (N+1) B_LR(N, M))`.
pub fn dur_violation_factor(parties: usize, settings: usize) -> f64 {
    let mn = (settings as f64).powi(parties as i32);
    mn / (2.0 * (parties as f64 + 1.0) * blr_bound(parties, settings))
}
