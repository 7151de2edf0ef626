//! Violation conditions maximized over local coordinate frames.
//!
//! Every condition here takes the full-correlation block of a state's
//! correlation tensor and maximizes a frame-dependent expression:
//!
//! * [`horodecki_value`] — two-qubit criterion, closed form (sum of the two
//!   largest eigenvalues of T'T).
//! * [`wwzb_sufficient`] — sufficient condition for a two-setting local
//!   realistic model: max over one frame per party of the squared
//!   correlations along two axes per party.
//! * [`cn_condition`] — recursive condition for the doubling multisetting
//!   family, with independent primed frames per branch.
//! * [`ms_violation`] — the M-setting cosine inequality condition, maximized
//!   over the orientation of each party's equatorial plane.

mod conditions;
mod frames;
mod horodecki;
mod msviol;
mod visibility;

pub use conditions::{cn_condition, cn_tree_param_len, wwzb_sufficient};
pub use frames::LocalFrame;
pub use horodecki::{horodecki_matrix_value, horodecki_value};
pub use msviol::{dur_violation_factor, ghz_violation_factor, ms_violation, MsOutcome};
pub use visibility::{critical_visibility, critical_visibility_bisect, Condition};

pub use crate::optimize::OptimizerConfig;

/// A per-party set of local frames (one rotation each).
#[derive(Debug, Clone)]
pub struct FrameSet {
    pub frames: Vec<LocalFrame>,
}

/// Outcome of a frame-maximized condition.
#[derive(Debug, Clone)]
pub struct ConditionOutcome {
    /// Maximized condition value.
    pub value: f64,
    /// Optimizer parameters (documented per condition) achieving the value.
    pub params: Vec<f64>,
    /// False when the optimizer hit its sweep limit.
    pub converged: bool,
}
