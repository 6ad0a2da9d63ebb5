//! Dense statevector simulation: validity checks for synthesized mixers and
//! a MAXCUT QAOA driver over empty-or-one-hot blocks.

pub mod dense;
pub mod maxcut;
pub mod optimize;
pub mod state;
pub mod validate;

pub use maxcut::{maxcut_phase, MaxcutInstance};
pub use optimize::{DepthResult, NelderMead, Qaoa, QaoaSettings};
pub use state::{evolve, evolve_via_circuit, StateVector, MAX_SIM_QUBITS};
pub use validate::{check_preserves, check_transitions, corrupt_plan};
