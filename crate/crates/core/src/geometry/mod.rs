//! Exact polytope geometry over ℚ.
//!
//! Facet data is stored as a primitive integer normal plus a rational weight
//! `w = vol_{n−1}(F)/|ξ|`, so that all stored geometry is rational and the
//! irrational facet volume `w·|ξ|` is only formed on demand.
//!
//! Mixed volumes follow one convention everywhere:
//! `vol(Σ λᵢKᵢ) = Σ_α multinomial(n; α) · V(K[α]) · λ^α`, so that
//! `V(K, …, K) = vol(K)`.

pub mod hull;
pub mod mixed;
pub mod polygon;
pub mod polytope;
pub mod zonotope;

pub use mixed::{mixed_area, mixed_area_support, mixed_volume_polarization, multinomial, volume_polynomial_coefficient};
pub use polygon::{angle_cmp, polygon_from_measure};
pub use polytope::{FacetData, Polytope};
pub use zonotope::{projection_body, zonotope_mixed_volume, Zonotope};
