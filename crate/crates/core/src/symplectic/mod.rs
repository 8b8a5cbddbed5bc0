//! Symplectic spaces over `F_ℓ`, oriented Lagrangians, generators of
//! symplectomorphisms and invariant decompositions.

pub mod generate;
pub mod lagrangian;
pub mod space;
pub mod structure;

pub use generate::{
    companion_symplectic, random_profile, random_semisimple_symplectic, random_separable_palindromic,
    random_symplectic, SemisimpleProfile,
};
pub use lagrangian::{lagrangian_pair_data, LagrangianPair, OrientedLagrangian};
pub use space::SymplecticSpace;
pub use structure::{
    decomposition_violations, eigen_dims, invariant_decomposition, is_semisimple, restrict, BlockKind,
    InvariantBlock,
    DEFAULT_DECOMPOSITION_SEED,
};
