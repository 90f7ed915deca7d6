//! Numerical toolkit for purification and ground-state cooling of a quantum
//! system through joint unitary dynamics with its environment.
//!
//! The library builds virtual-subsystem decompositions of an environment
//! state, constructs the generalized swap unitary that exchanges the system
//! with the virtual copy inside the environment, computes the achievable
//! purification thresholds, analyzes engineered N-qubit reservoirs through
//! typical-subspace combinatorics, and ships a brute-force optimizer that
//! verifies the thresholds are optimal on small instances.

pub mod error;
pub mod linalg;
pub mod optim;
pub mod oracle;
pub mod reservoir;
pub mod states;
pub mod subsystems;
pub mod swap;

pub use error::{Error, Result};
pub use linalg::{eigh, kron, partial_trace, trace_distance, ComplexMatrix, Keep, Spectrum};
pub use states::{purity, random_density, validate, von_neumann_entropy, DensityOperator, PureState};
pub use subsystems::{
    build_from_spectrum, is_purely_initialized, nearest_initialized, split_dimensions,
    DimensionSplit, InitializedForm, VirtualDecomposition,
};
pub use swap::{
    build_generalized_swap, cool, purify, purify_toward, thresholds, CoolingReport,
    PurificationReport, Thresholds,
};
