use thiserror::Error;

/// Errors raised by the exact-arithmetic, representation and curve layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("operands live over different moduli ({0} vs {1})")]
    ModulusMismatch(u64, u64),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("Gauss sum requires a nonzero multiplier")]
    DegenerateGaussSum,

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("no irreducible polynomial of degree {0} found")]
    NoIrreducible(usize),

    #[error("element is not a power of the given root of unity")]
    NotInSubgroup,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("matrix is not a symplectomorphism")]
    NotSymplectic,

    #[error("polynomial is not palindromic")]
    NotPalindromic,

    #[error("subspace is not Lagrangian: {0}")]
    NotLagrangian(String),

    #[error("matrix is not semisimple")]
    NotSemisimple,

    #[error("inconsistent semisimple profile: {0}")]
    InvalidProfile(String),

    #[error("{what}: gave up after {attempts} attempts (seed {seed})")]
    RetryExhausted {
        what: &'static str,
        attempts: usize,
        seed: u64,
    },

    #[error("Lagrangian is not invariant under the given map")]
    NotInvariant,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("curve is singular (4a^3 + 27b^2 = 0)")]
    SingularCurve,

    #[error("invalid curve parameters: {0}")]
    InvalidCurve(String),

    #[error("full ℓ-torsion not reached: stopped at k = {stopped_at}, field size {size} exceeds the cap of {cap}")]
    TorsionFieldTooLarge { stopped_at: u32, size: u128, cap: u128 },

    #[error("point is not {0}-torsion")]
    NotTorsion(u64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
