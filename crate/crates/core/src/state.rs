//! Density matrices and state validation.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ONE, ZERO, kron};
use crate::network::NetworkLayout;
use crate::tol::Tolerances;

/// A validated state: Hermitian, unit trace, positive semidefinite to
/// tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Wraps a matrix that is already known to satisfy the state invariants
    /// (integrator snapshots, convex combinations of validated states).
    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    /// Computational basis state with the given digits.
    pub fn basis_state(layout: &NetworkLayout, digits: &[usize]) -> Result<Self> {
        let idx = layout.index_of_digits(digits)?;
        let mut m = ComplexMatrix::zeros(layout.dim());
        m.set(idx, idx, ONE);
        Ok(Self { matrix: m })
    }

    /// Maximally mixed state I / n^m.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0)),
        }
    }

    /// Pure state |ψ⟩⟨ψ| from a normalized vector.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnitNorm {
                magnitude: (norm - 1.0).abs(),
            });
        }
        Ok(Self {
            matrix: ComplexMatrix::outer(psi, psi),
        })
    }

    /// Product pure state |ψ⟩⟨ψ|^⊗m from a local state vector.
    pub fn pure_product(layout: &NetworkLayout, local_psi: &[C64]) -> Result<Self> {
        if local_psi.len() != layout.n() {
            return Err(Error::DimensionMismatch {
                left: local_psi.len(),
                right: layout.n(),
                context: "pure_product",
            });
        }
        let psi = product_vector(&vec![local_psi.to_vec(); layout.m()]);
        Self::pure(&psi)
    }

    /// Product pure state with a different local vector per subsystem.
    pub fn product_of(layout: &NetworkLayout, locals: &[Vec<C64>]) -> Result<Self> {
        if locals.len() != layout.m() {
            return Err(Error::DimensionMismatch {
                left: locals.len(),
                right: layout.m(),
                context: "product_of",
            });
        }
        for v in locals {
            if v.len() != layout.n() {
                return Err(Error::DimensionMismatch {
                    left: v.len(),
                    right: layout.n(),
                    context: "product_of",
                });
            }
        }
        Self::pure(&product_vector(locals))
    }
}

/// Tensor product of local state vectors, leading factor most significant.
pub fn product_vector(locals: &[Vec<C64>]) -> Vec<C64> {
    let mut out = vec![ONE];
    for local in locals {
        let mut next = Vec::with_capacity(out.len() * local.len());
        for a in &out {
            for b in local {
                next.push(a * b);
            }
        }
        out = next;
    }
    out
}

/// Checks the state invariants and returns a validated [`DensityMatrix`].
///
/// The error names the first violated invariant together with the measured
/// magnitude of the violation.
pub fn validate_state(matrix: &ComplexMatrix, tol: &Tolerances) -> Result<DensityMatrix> {
    let herm = matrix.hermiticity_deviation();
    if herm > tol.hermiticity {
        return Err(Error::HermiticityViolation { magnitude: herm });
    }
    let trace_dev = (matrix.trace() - ONE).norm();
    if trace_dev > tol.trace {
        return Err(Error::TraceViolation {
            magnitude: trace_dev,
        });
    }
    let min_eig = matrix.min_eigenvalue();
    if min_eig < -tol.negativity {
        return Err(Error::NegativityViolation {
            magnitude: -min_eig,
        });
    }
    Ok(DensityMatrix {
        matrix: matrix.clone(),
    })
}

/// Fidelity ⟨ψ|ρ|ψ⟩ of a state with a pure target vector.
pub fn pure_state_fidelity(rho: &ComplexMatrix, psi: &[C64]) -> Result<f64> {
    if psi.len() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: psi.len(),
            right: rho.dim(),
            context: "pure_state_fidelity",
        });
    }
    let mut acc = ZERO;
    for (r, pr) in psi.iter().enumerate() {
        for (c, pc) in psi.iter().enumerate() {
            acc += pr.conj() * rho.at(r, c) * pc;
        }
    }
    Ok(acc.re)
}

/// Local identity matrices tensored together; convenience for tests.
pub fn identity_on(layout: &NetworkLayout) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    let local = ComplexMatrix::identity(layout.n());
    for _ in 0..layout.m() {
        out = kron(&out, &local);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn maximally_mixed_is_valid() {
        let rho = DensityMatrix::maximally_mixed(8);
        assert!(validate_state(rho.matrix(), &tol()).is_ok());
    }

    #[test]
    fn basis_state_is_valid() {
        let layout = NetworkLayout::path(2, 2).unwrap();
        let rho = DensityMatrix::basis_state(&layout, &[0, 0]).unwrap();
        assert!(validate_state(rho.matrix(), &tol()).is_ok());
        assert_eq!(rho.matrix().at(0, 0), ONE);
    }

    #[test]
    fn negativity_is_reported_with_magnitude() {
        let m = ComplexMatrix::diagonal(&[1.5, -0.5, 0.0, 0.0]);
        match validate_state(&m, &tol()) {
            Err(Error::NegativityViolation { magnitude }) => {
                assert!((magnitude - 0.5).abs() < 1e-12);
            }
            other => panic!("expected negativity violation, got {other:?}"),
        }
    }

    #[test]
    fn trace_violation_detected() {
        let m = ComplexMatrix::identity(2);
        assert!(matches!(
            validate_state(&m, &tol()),
            Err(Error::TraceViolation { .. })
        ));
    }

    #[test]
    fn product_vector_ordering() {
        // |0⟩ ⊗ |1⟩ = e_1 in a 4-dim space
        let v = product_vector(&[
            vec![ONE, ZERO],
            vec![ZERO, ONE],
        ]);
        assert_eq!(v[1], ONE);
        assert_eq!(v.iter().filter(|c| **c != ZERO).count(), 1);
    }

    #[test]
    fn fidelity_of_pure_with_itself() {
        let layout = NetworkLayout::path(2, 2).unwrap();
        let psi = product_vector(&[vec![ONE, ZERO], vec![ONE, ZERO]]);
        let rho = DensityMatrix::pure(&psi).unwrap();
        let f = pure_state_fidelity(rho.matrix(), &psi).unwrap();
        assert!((f - 1.0).abs() < 1e-14);
        let _ = layout;
    }
}
