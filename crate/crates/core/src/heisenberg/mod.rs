//! The Heisenberg group of a symplectic space, its Schrödinger models
//! `C_{M°}`, canonical intertwiners and the Weil operators `ρ(g)`.

pub mod cycmatrix;
pub mod group;
pub mod ops;
pub mod rep;

pub use cycmatrix::CycMatrix;
pub use group::{heis_mul, HeisenbergElement};
pub use ops::{
    averaging_operator, brute_trace, brute_trace_standard, character, intertwiner,
    multiplicativity_scalar, normalization_constant, omega_wedge, pi_operator, weil_operator,
};
pub use rep::RepSpace;
