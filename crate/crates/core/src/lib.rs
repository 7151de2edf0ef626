//! Numerical toolkit for multipartite Bell inequalities and their applications.
//!
//! The crate covers the full pipeline from state algebra to derived
//! quantities:
//!
//! * [`qstate`] — complex linear algebra: state vectors, density matrices,
//!   correlation tensors and a factory of named multi-qubit states.
//! * [`bellgen`] — generation of correlation Bell inequalities (two-setting
//!   complete family, recursive multisetting family, arbitrary-M cosine
//!   inequality), brute-force local-realistic bounds and tightness checks.
//! * [`violation`] — violation conditions (Horodecki criterion, two-setting
//!   sufficient condition, recursive multisetting conditions, M-setting
//!   condition) optimized over local coordinate frames.
//! * [`leggett`] — an explicit nonlocal hidden-variable model with Malus-law
//!   subensembles, its incompatibility inequalities and Monte Carlo sampler.
//! * [`freedom`] — measures of reduced experimenter freedom and the
//!   leaking-lab BBM-CHSH security analysis.
//! * [`qudit`] — generalized Pauli operators, their closed-form eigensystem,
//!   mutually unbiased bases, composite-qudit measurement plans, tomography.
//! * [`ccp`] — communication-complexity calculators for qubit and qudit
//!   protocols, including CGLMP optimization.
//! * [`protocols`] — dense coding, teleportation and the GHZ paradox as
//!   state-algebra correctness checks.

pub mod bellgen;
pub mod ccp;
pub mod freedom;
pub mod leggett;
pub mod optimize;
pub mod protocols;
pub mod qstate;
pub mod qudit;
pub mod tolerances;
pub mod violation;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar used throughout the crate.
pub type C64 = nalgebra::Complex<f64>;

/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;

/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
