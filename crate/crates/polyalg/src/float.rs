//! Floating-point rank and inertia decisions for `--mode float`.
//!
//! Matrices are still assembled exactly; only the final rank or signature
//! is decided numerically, with a threshold of `tolerance · max(1, ‖A‖)`.

use nalgebra::{DMatrix, SymmetricEigen};
use polyalg_core::linalg::{Inertia, Matrix};
use polyalg_core::RadicalScalar;

pub fn to_dmatrix(m: &Matrix<RadicalScalar>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_f64())
}

fn threshold(scale: f64, tolerance: f64) -> f64 {
    tolerance * scale.max(1.0)
}

/// Numerical rank from singular values.
pub fn rank(m: &DMatrix<f64>, tolerance: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().singular_values();
    let cut = threshold(sv.max(), tolerance);
    sv.iter().filter(|s| **s > cut).count()
}

/// Numerical inertia from eigenvalues of the symmetrized matrix.
pub fn inertia(m: &DMatrix<f64>, tolerance: f64) -> Inertia {
    if m.is_empty() {
        return Inertia::default();
    }
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym).eigenvalues;
    let cut = threshold(eig.amax(), tolerance);
    let pos = eig.iter().filter(|x| **x > cut).count();
    let neg = eig.iter().filter(|x| **x < -cut).count();
    Inertia::new(pos, eig.len() - pos - neg, neg)
}

/// Orthonormal basis of `{x : f·x = 0}` as columns.
pub fn hyperplane_basis(f: &[f64]) -> DMatrix<f64> {
    let d = f.len();
    let v = DMatrix::from_column_slice(d, 1, f);
    let norm2 = v.norm_squared();
    let proj = DMatrix::identity(d, d) - if norm2 > 0.0 { &v * v.transpose() / norm2 } else { DMatrix::zeros(d, d) };
    let eig = SymmetricEigen::new(proj);
    let keep: Vec<usize> = (0..d).filter(|&i| eig.eigenvalues[i] > 0.5).collect();
    DMatrix::from_fn(d, keep.len(), |r, c| eig.eigenvectors[(r, keep[c])])
}
