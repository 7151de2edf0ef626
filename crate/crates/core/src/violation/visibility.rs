use super::{cn_condition, horodecki_value, ms_violation, wwzb_sufficient};
use crate::optimize::OptimizerConfig;
use crate::qstate::{correlation_tensor, make_state, NamedStateSpec};
use crate::Result;

/// Which violation condition a critical visibility refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Condition {
    Horodecki,
    Wwzb,
    Cn,
    Msetting(usize),
}

fn condition_value(spec: &NamedStateSpec, condition: Condition, cfg: &OptimizerConfig) -> Result<f64> {
    let rho = make_state(spec)?;
    let t = correlation_tensor(&rho, spec.parties())?;
    match condition {
        Condition::Horodecki => horodecki_value(&t),
        Condition::Wwzb => Ok(wwzb_sufficient(&t, cfg)?.value),
        Condition::Cn => Ok(cn_condition(&t, cfg)?.value),
        Condition::Msetting(m) => Ok(ms_violation(&t, m, cfg)?.violation_factor),
    }
}

/// Critical white-noise visibility `V*` above which the chosen condition
/// signals a violation.
///
/// White noise scales every full correlation by `V`, so the quadratic
/// conditions give `V* = 1/sqrt(value)` and the (linear) M-setting condition
/// gives `V* = 1/violation_factor`.
pub fn critical_visibility(
    spec: &NamedStateSpec,
    condition: Condition,
    cfg: &OptimizerConfig,
) -> Result<f64> {
    let v = condition_value(spec, condition, cfg)?;
    Ok(match condition {
        Condition::Msetting(_) => 1.0 / v,
        _ => 1.0 / v.sqrt(),
    })
}

/// Bisection fallback: searches the smallest `V` for which the condition on
/// `(1-V) I/2^N + V rho` exceeds 1 (or the bound, for the M-setting family).
/// Used to cross-check the scaling shortcut and for non-homogeneous mixtures.
pub fn critical_visibility_bisect(
    spec: &NamedStateSpec,
    condition: Condition,
    cfg: &OptimizerConfig,
    tol: f64,
) -> Result<f64> {
    let violated = |v: f64| -> Result<bool> {
        let noisy = NamedStateSpec::Noisy { inner: Box::new(spec.clone()), visibility: v };
        Ok(condition_value(&noisy, condition, cfg)? > 1.0)
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if !violated(hi)? {
        return Ok(f64::INFINITY);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if violated(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
