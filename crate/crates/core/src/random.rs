//! Seeded random matrices and states.
//!
//! All randomness in the crate flows through [`rand_chacha::ChaCha8Rng`] so
//! that identical seeds reproduce identical results across runs and thread
//! counts.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::ComplexMatrix;
use crate::state::DensityMatrix;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for a sub-task (e.g. one Monte Carlo trial).
pub fn rng_for_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian via Box-Muller.
pub fn complex_gaussian<R: Rng>(rng: &mut R) -> C64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    C64::new(r * u2.cos(), r * u2.sin())
}

pub fn random_matrix<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let entries = (0..dim * dim).map(|_| complex_gaussian(rng)).collect();
    ComplexMatrix::from_entries(dim, entries).expect("entry count matches")
}

pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    random_matrix(dim, rng).hermitian_part()
}

/// Hilbert-Schmidt-ensemble random density matrix: G G† / Tr(G G†).
pub fn random_density<R: Rng>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = random_matrix(dim, rng);
    let gram = g.matmul(&g.dagger()).expect("same dim");
    let trace = gram.trace().re;
    let rho = gram.scale(C64::new(1.0 / trace, 0.0));
    DensityMatrix::from_matrix_unchecked(rho)
}

/// Haar-like random unitary via Gram-Schmidt on a Gaussian matrix.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let g = random_matrix(dim, rng);
        if let Some(u) = gram_schmidt_columns(&g) {
            return u;
        }
    }
}

/// Random normalized state vector.
pub fn random_state_vector<R: Rng>(dim: usize, rng: &mut R) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.iter().map(|c| c / norm).collect();
        }
    }
}

fn gram_schmidt_columns(m: &ComplexMatrix) -> Option<ComplexMatrix> {
    let d = m.dim();
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut v: Vec<C64> = (0..d).map(|i| m.at(i, j)).collect();
        for prev in &cols {
            let overlap: C64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
            for (x, p) in v.iter_mut().zip(prev) {
                *x -= overlap * p;
            }
        }
        let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 {
            return None;
        }
        for x in v.iter_mut() {
            *x /= norm;
        }
        cols.push(v);
    }
    let mut out = ComplexMatrix::zeros(d);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            out.set(i, j, x);
        }
    }
    Some(out)
}
