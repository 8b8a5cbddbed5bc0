//! Exact finite Heisenberg-group representations, Weil-type operators and
//! their traces, quadratic Gauss-sum path integrals, and Frobenius data
//! extracted from elliptic curves over finite fields.
//!
//! Every quantity is computed exactly: scalars of the representation live in
//! the cyclotomic field `Q(ζ_ℓ)` ([`algebra::CycScalar`]) and all linear
//! algebra happens over the prime field `F_ℓ`.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: prime fields, polynomials and factorisation, extension
//!   fields, cyclotomic scalars and Gauss sums.
//! * [`linalg`]: dense matrices and subspaces over `F_ℓ`.
//! * [`symplectic`]: symplectic spaces, oriented Lagrangians, generators of
//!   symplectomorphisms and the invariant symplectic decomposition.
//! * [`heisenberg`]: the Heisenberg group, the Lagrangian models of its
//!   irreducible representation, canonical intertwiners and `ρ(g)`.
//! * [`trace`]: closed-form trace formulas and quadratic Gauss sums, each
//!   paired with a brute-force counterpart.
//! * [`curve`]: elliptic-curve point counting, torsion, Weil pairing and the
//!   Frobenius matrix on `E[ℓ]`.
//! * [`verify`]: the trace / path-integral identity checks, sweeps and
//!   reports used by the command-line driver.

pub mod algebra;
pub mod curve;
pub mod error;
pub mod heisenberg;
pub mod linalg;
pub mod symplectic;
pub mod trace;
pub mod verify;

pub use error::{Error, Result};

/// Default bound on the number of elements any brute-force enumeration may
/// visit (field elements, curve x-coordinates, quadratic-form vectors).
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

/// Default bound on the dimension `ℓⁿ` of an explicitly built representation.
pub const DEFAULT_DIM_CAP: usize = 4096;
