//! Exact computations in the intersection-product polytope algebra.
//!
//! The crate is `no_std` with `alloc`. Everything is exact: rationals are
//! arbitrary precision and irrational structure constants live in
//! [`scalar::RadicalScalar`], a ring of sums of rational multiples of square
//! roots of squarefree integers.
//!
//! Module map:
//!
//! * [`scalar`]: rationals and the radical ring, exact sign determination.
//! * [`linalg`]: rational matrices, canonical subspaces, Gram determinants,
//!   principal-angle sines, projections, rank and inertia.
//! * [`arrangement`]: line arrangements and the lattice of subspaces spanned
//!   by their lines.
//! * [`sym_algebra`]: the symmetric subalgebra spanned by subspace classes
//!   `x_L`, the graded Möbius algebra, Lefschetz maps and Hodge–Riemann forms.
//! * [`geometry`]: exact hulls, volumes, facet data, Minkowski sums,
//!   zonotopes, projection bodies, mixed volumes and planar reconstruction.
//! * [`measure`]: signed facet-normal measures (degree-one classes).
//! * [`degree_one`]: Euler–Verdier involution, restriction to subspaces,
//!   top-degree pairings and the degree-one Hodge–Riemann machinery.
//! * [`oracles`]: brute-force evaluators used to pin down normalizations.
//! * [`calibration`]: the measured constants relating the pipelines.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod calibration;
pub mod degree_one;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod measure;
pub mod oracles;
pub mod scalar;
pub mod sym_algebra;

pub use error::{Error, Result};
pub use scalar::{RadicalScalar, Rational};
