//! Dense complex matrices on the tensor-product network space.
//!
//! Entries are stored row-major over the computational product basis, with
//! subsystem 1 as the most significant base-n digit of the basis index. This
//! makes [`kron`] a plain nested loop and local embeddings pure kron chains.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Square dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
                context: "from_entries",
            });
        }
        Ok(Self { dim, entries })
    }

    /// Real-valued diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = C64::new(v, 0.0);
        }
        m
    }

    /// Outer product |u⟩⟨v|.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        let dim = u.len();
        assert_eq!(dim, v.len(), "outer product needs equal lengths");
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.entries[i * dim + j] = u[i] * v[j].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.dim + col] = value;
    }

    fn check_dim(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
                context,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// In-place self += factor * other. Dimension checked by the caller.
    pub fn axpy(&mut self, factor: C64, other: &Self) {
        debug_assert_eq!(self.dim, other.dim);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += factor * b;
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "matmul")?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.entries[k * d..(k + 1) * d];
                let dst = &mut out.entries[i * d..(i + 1) * d];
                for (o, b) in dst.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn dagger(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.entries[i * d + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Max |A[i,j] - conj(A[j,i])| over all entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let d = self.dim;
        let mut max = 0.0f64;
        for i in 0..d {
            for j in i..d {
                let dev = (self.entries[i * d + j] - self.entries[j * d + i].conj()).norm();
                max = max.max(dev);
            }
        }
        max
    }

    /// (A + A†)/2.
    pub fn hermitian_part(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.entries[i * d + j] =
                    (self.entries[i * d + j] + self.entries[j * d + i].conj()) * 0.5;
            }
        }
        out
    }

    /// Ascending real eigenvalues of the Hermitian part.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let eig = SymmetricEigen::new(self.hermitian_part().to_nalgebra());
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        self.hermitian_eigenvalues()
            .first()
            .copied()
            .unwrap_or(0.0)
    }

    /// Spectral norm, via the largest eigenvalue of A†A.
    pub fn spectral_norm(&self) -> f64 {
        let gram = self.dagger().matmul(self).expect("same dim");
        gram.hermitian_eigenvalues()
            .last()
            .copied()
            .unwrap_or(0.0)
            .max(0.0)
            .sqrt()
    }

    pub fn to_nalgebra(&self) -> DMatrix<C64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.entries[i * self.dim + j])
    }

    pub fn from_nalgebra(m: &DMatrix<C64>) -> Self {
        let dim = m.nrows();
        assert_eq!(dim, m.ncols(), "square matrix expected");
        let mut out = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                out.entries[i * dim + j] = m[(i, j)];
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix(dim = {})", self.dim)?;
        if self.dim <= 8 {
            for i in 0..self.dim {
                let row: Vec<String> = (0..self.dim)
                    .map(|j| {
                        let e = self.at(i, j);
                        format!("{:.4}{:+.4}i", e.re, e.im)
                    })
                    .collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Kronecker product; `a` acts on the leading (most significant) factor.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim, b.dim);
    let dim = da * db;
    let mut out = ComplexMatrix::zeros(dim);
    for ia in 0..da {
        for ja in 0..da {
            let f = a.entries[ia * da + ja];
            if f == ZERO {
                continue;
            }
            for ib in 0..db {
                for jb in 0..db {
                    out.entries[(ia * db + ib) * dim + (ja * db + jb)] =
                        f * b.entries[ib * db + jb];
                }
            }
        }
    }
    out
}

/// Hilbert-Schmidt inner product Tr(A†B).
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
            context: "hs_inner",
        });
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Commutator AB - BA.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.matmul(b)?.sub(&b.matmul(a)?)
}

// Serialized form: {"dim": d, "entries": [[re, im], ...]} row-major.
impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            dim: usize,
            entries: Vec<[f64; 2]>,
            #[serde(skip)]
            _phantom: &'a (),
        }
        let entries = self.entries.iter().map(|c| [c.re, c.im]).collect();
        Repr {
            dim: self.dim,
            entries,
            _phantom: &(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            dim: usize,
            entries: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.entries.len() != repr.dim * repr.dim {
            return Err(D::Error::custom(format!(
                "matrix of dim {} needs {} entries, got {}",
                repr.dim,
                repr.dim * repr.dim,
                repr.entries.len()
            )));
        }
        let entries = repr
            .entries
            .iter()
            .map(|&[re, im]| C64::new(re, im))
            .collect();
        Ok(Self {
            dim: repr.dim,
            entries,
        })
    }
}

/// 2x2 Pauli matrices, used throughout the tests.
pub mod pauli {
    use super::{C64, ComplexMatrix};

    pub fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_entries(
            2,
            vec![
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    pub fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_entries(
            2,
            vec![
                C64::new(0.0, 0.0),
                C64::new(0.0, -1.0),
                C64::new(0.0, 1.0),
                C64::new(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    pub fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diagonal(&[1.0, -1.0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis_vec(dim: usize, i: usize) -> Vec<C64> {
        let mut v = vec![ZERO; dim];
        v[i] = ONE;
        v
    }

    #[test]
    fn kron_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_projector_placement() {
        // |0⟩⟨0| ⊗ |1⟩⟨1| = diag(0,1,0,0) on basis {00,01,10,11}
        let p0 = ComplexMatrix::outer(&basis_vec(2, 0), &basis_vec(2, 0));
        let p1 = ComplexMatrix::outer(&basis_vec(2, 1), &basis_vec(2, 1));
        let expect = ComplexMatrix::diagonal(&[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(kron(&p0, &p1), expect);
    }

    #[test]
    fn kron_bit_flip_on_both_factors() {
        // (σx ⊗ σx)|00⟩ = |11⟩
        let xx = kron(&pauli::sigma_x(), &pauli::sigma_x());
        for row in 0..4 {
            let expect = if row == 3 { ONE } else { ZERO };
            assert_eq!(xx.at(row, 0), expect);
        }
    }

    #[test]
    fn hs_inner_pauli() {
        let sx = pauli::sigma_x();
        let sz = pauli::sigma_z();
        assert_eq!(hs_inner(&sx, &sx).unwrap(), C64::new(2.0, 0.0));
        assert_eq!(hs_inner(&sx, &sz).unwrap(), ZERO);
    }

    #[test]
    fn hs_inner_derived_anchor() {
        // A = |01⟩⟨01| - |10⟩⟨10| on two qubits: ⟨A, A⟩ = 2
        let a = ComplexMatrix::diagonal(&[0.0, 1.0, -1.0, 0.0]);
        let v = hs_inner(&a, &a).unwrap();
        assert!((v - C64::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn hs_inner_dim_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        assert!(hs_inner(&a, &b).is_err());
    }

    #[test]
    fn dagger_and_trace() {
        let sy = pauli::sigma_y();
        assert_eq!(sy.dagger(), sy);
        assert_eq!(sy.trace(), ZERO);
        assert!(sy.hermiticity_deviation() < 1e-16);
    }

    #[test]
    fn min_eigenvalue_of_diagonal() {
        let m = ComplexMatrix::diagonal(&[1.5, -0.5, 0.0, 0.0]);
        assert!((m.min_eigenvalue() + 0.5).abs() < 1e-12);
    }

    #[test]
    fn spectral_norm_of_pauli_is_one() {
        assert!((pauli::sigma_x().spectral_norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn serde_round_trip() {
        let m = kron(&pauli::sigma_y(), &pauli::sigma_z());
        let json = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn serde_rejects_bad_entry_count() {
        let r: std::result::Result<ComplexMatrix, _> =
            serde_json::from_str(r#"{"dim": 2, "entries": [[1.0, 0.0]]}"#);
        assert!(r.is_err());
    }
}
