//! Central tolerance constants.
//!
//! Three regimes cover every comparison in the crate: exact linear algebra,
//! iterative frame optimization, and Monte Carlo sampling.

/// Algebraic identities (traces, unitarity, eigen-residuals).
pub const ALGEBRAIC: f64 = 1e-10;

/// Values produced by the derivative-free frame optimizers.
pub const OPTIMIZATION: f64 = 1e-6;

/// Number of binomial standard errors allowed in Monte Carlo checks.
pub const MC_SIGMA: f64 = 3.0;

/// Slack used when comparing brute-force bounds to closed forms.
pub const BOUND_SLACK: f64 = 1e-9;

/// Maximum number of qubits for dense state construction (4^N tensor guard).
pub const MAX_QUBITS: usize = 10;

/// Maximum total number of settings for brute-force strategy enumeration.
pub const MAX_BRUTE_SETTINGS: usize = 20;

/// Maximum correlation-space dimension for vertex enumeration.
pub const MAX_VERTEX_DIM: usize = 64;

/// Maximum number of weight terms M^N evaluated exactly.
pub const MAX_WEIGHT_TERMS: usize = 1_000_000;
