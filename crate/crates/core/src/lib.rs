//! Constraint-preserving mixer synthesis from an explicit set of feasible basis states.
//!
//! The pipeline groups feasible pairs by the X-type string that connects them,
//! builds stabilizer projectors for X-type orbits inside each group, restricts
//! those projectors to the feasible span to cut CX cost, and selects a cheapest
//! set of mixer terms whose transition graph connects every feasible state.

pub mod bits;
pub mod circuit;
pub mod compose;
pub mod dyadic;
pub mod error;
pub mod format;
pub mod linalg;
pub mod pauli;
pub mod restrict;
pub mod simqaoa;
pub mod stabilizer;
pub mod stats;
pub mod subspace;
pub mod trotter;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use pauli::{cost, PauliString, PauliSum};
pub use restrict::{best_restriction, Method, RestrictedProjector};
pub use stabilizer::{expand_projector, minimal_generators, GeneratorSet};
pub use subspace::{build_family, FeasibleSet, LogicalXFamily};
pub use trotter::{chain_mixer, select_optimal, synthesize, MixerCandidate, MixerPlan, Selection, SynthOptions};
