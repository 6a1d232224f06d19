//! Centralized numerical tolerances.
//!
//! Every threshold used for state validation and trajectory monitoring lives
//! here, so experiments can override them in one place instead of scattering
//! magic numbers through the call sites.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Max |A - A†| entry allowed when validating a state.
    pub hermiticity: f64,
    /// Allowed |Tr(rho) - 1| when validating a state.
    pub trace: f64,
    /// Most negative eigenvalue allowed when validating a state.
    pub negativity: f64,
    /// Trace deviation at which the integrator aborts.
    pub trace_abort: f64,
    /// Negative-eigenvalue magnitude at which the integrator aborts.
    pub negativity_abort: f64,
    /// Frobenius distance to the symmetrized target below which (for two
    /// consecutive snapshots) a trajectory is declared converged.
    pub convergence: f64,
    /// Allowed |sum(p) - 1| drift for lifted weight vectors.
    pub weight_norm_drift: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermiticity: 1e-10,
            trace: 1e-10,
            negativity: 1e-9,
            trace_abort: 1e-7,
            negativity_abort: 1e-6,
            convergence: 1e-6,
            weight_norm_drift: 1e-9,
        }
    }
}
