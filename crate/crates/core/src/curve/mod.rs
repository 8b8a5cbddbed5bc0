//! Elliptic curves over `F_q`: point counts, `ℓ`-torsion, the Weil pairing
//! and the Frobenius symplectomorphism of `E[ℓ]`.

pub mod ec;
pub mod frobenius;
pub mod spec;

pub use ec::{CurvePoint, EllipticCurve};
pub use frobenius::{
    curve_frobenius, curve_to_symplectic, find_torsion_field, frobenius_matrix, torsion_basis,
    torsion_coordinates, CurveFrobeniusData,
};
pub use spec::{count_points, trace_powers, CurveSpec};
