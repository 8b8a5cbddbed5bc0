//! Exact linear algebra over `F_ℓ`.

pub mod charpoly;
pub mod matrix;
pub mod subspace;

pub use charpoly::{apply_poly, apply_poly_vec, charpoly};
pub use matrix::{FlMatrix, Solution};
pub use subspace::{enumerate_span, omega_perp, Subspace};
