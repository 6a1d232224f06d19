//! Continuous-time dissipative symmetrization of quantum networks.
//!
//! The crate builds quasi-local Lindblad generators out of subsystem
//! permutation unitaries, integrates the resulting master equation with
//! physical-invariant monitoring, certifies convergence through two Lyapunov
//! functions (a Hilbert-Schmidt distance on states and a KL divergence on a
//! lifted weight vector over the permutation group), and implements two
//! protocols on top: pure-state preparation with a stubborn subsystem, and
//! network-size estimation from symmetrized local readout.

pub mod error;
pub mod matrix;
pub mod network;
pub mod perm;
pub mod random;
pub mod schedule;
pub mod state;
pub mod tol;

pub use error::{Error, Result};
pub use matrix::{C64, ComplexMatrix, hs_inner, kron};
pub use network::NetworkLayout;
pub use perm::{
    GroupClosure, LocalPermutation, Permutation, PermutationUnitary, generates_full_group,
    local_permutations, permutation_unitary, symmetrize,
};
pub use schedule::WeightSchedule;
pub use state::{DensityMatrix, validate_state};
pub use tol::Tolerances;
