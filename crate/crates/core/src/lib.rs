//! Simulation and analysis of quantum games.
//!
//! Players encode their classical choices in qubits (or qudits), act on them
//! with unitary strategies, and are paid according to a classical payoff table
//! evaluated on the measured outcome. The crate provides:
//!
//! - [`qstate`]: dense state vectors over small tensor-product registers and a
//!   two-branch bit-flip noise ensemble.
//! - [`operators`]: the SU(2) strategy chart, Hadamard, the bit flip `iσx`, and
//!   the tunable N-qubit entangler `exp(i γ/2 σx⊗…⊗σx)`.
//! - [`protocol`]: the entangle/move/disentangle pipeline, the variant without
//!   a disentangler that starts from a chosen state, and payoff expectation for
//!   pure and mixed profiles.
//! - [`games`]: the prisoners' dilemma, the minority game, penny flip and
//!   classical matrix analysis (dominance, pure Nash, Pareto, saddle points,
//!   evolutionary stability).
//! - [`equilibrium`]: best responses over SU(2), Nash verification, the
//!   counter-strategy construction, mixed equilibrium families, entanglement
//!   sweeps and the critical entanglement level.
//! - [`experiment`]: named reproducible experiments with CSV/JSON output and
//!   the JSON game-file format used by the `qgame` binary.
//!
//! Basis ordering is big-endian: player 1 is the most significant site, so
//! `|01⟩` means player 1 chose 0 and player 2 chose 1.

pub mod equilibrium;
pub mod error;
pub mod experiment;
pub mod games;
pub mod operators;
pub mod protocol;
pub mod qstate;

mod optimize;

pub use error::{Error, Result};
pub use operators::{EntanglementParam, Su2Params, Unitary};
pub use protocol::{GameSpec, Strategy, StrategyProfile, Variant};
pub use qstate::{StateVector, WeightedEnsemble};

/// Complex amplitude type used throughout.
pub type ComplexAmp = num_complex::Complex64;

/// Normalization tolerance for states and probability vectors.
pub const EPS_PROB: f64 = 1e-9;
/// Entrywise tolerance on `U†U - I`.
pub const EPS_UNITARY: f64 = 1e-9;
/// Convergence tolerance of the local optimizer.
pub const EPS_OPT: f64 = 1e-6;
/// Slack allowed on unilateral gains when declaring a Nash equilibrium.
pub const NE_TOL: f64 = 1e-3;
