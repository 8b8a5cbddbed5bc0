//! Exact arithmetic foundations: `F_ℓ`, polynomials over `F_ℓ` with
//! factorisation, extension fields `F_{q^k}` and the cyclotomic field
//! `Q(ζ_ℓ)`.

pub mod cyclotomic;
pub mod ext_field;
pub mod factor;
pub mod poly;
pub mod prime_field;

pub use cyclotomic::{gauss_sum, CycScalar};
pub use ext_field::{build_extension, dlog_mu_ell, ExtElem, ExtField};
pub use factor::{factor, factor_with_seed, is_irreducible};
pub use poly::FlPoly;
pub use prime_field::{is_prime, legendre_symbol, Fl, PrimeField};
