//! Representation axioms and intertwiner properties on seeded models.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{CycScalar, Fl, PrimeField};
use crate::error::{Error, Result};
use crate::heisenberg::{
    character, heis_mul, intertwiner, pi_operator, weil_operator, CycMatrix, HeisenbergElement, RepSpace,
};
use crate::symplectic::{random_symplectic, SymplecticSpace};
use crate::DEFAULT_ENUMERATION_CAP;

use super::theorem::seeded_model;

pub const HOMOMORPHISM_PAIRS: usize = 200;
pub const INTERTWINER_PAIRS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepCheckReport {
    pub ell: u64,
    pub n: usize,
    pub seed: u64,
    pub dim: usize,
    pub homomorphism_pairs: usize,
    pub homomorphism: bool,
    pub central_character: bool,
    /// `Σ_h |χ(h)|²`, when `ℓ^{2n+1}` is within the enumeration cap.
    pub character_norm_sum: Option<CycScalar>,
    pub irreducible: Option<bool>,
    pub intertwiner_pairs: usize,
    pub intertwiner_equivariant: bool,
    pub intertwiner_inverse: bool,
    pub intertwiner_cocycle: bool,
    pub weil_covariant: bool,
    pub passed: bool,
}

fn random_h(space: &SymplecticSpace, rng: &mut ChaCha8Rng) -> HeisenbergElement {
    let field = space.field();
    let mut draw = || field.elem_u(rng.gen_range(0..field.modulus()));
    let lambda = draw();
    let v: Vec<Fl> = (0..space.dim()).map(|_| draw()).collect();
    HeisenbergElement::new(lambda, v)
}

fn generators(space: &SymplecticSpace) -> Vec<HeisenbergElement> {
    let mut g = vec![HeisenbergElement::central(space, space.field().one())];
    g.extend((0..space.dim()).map(|i| HeisenbergElement::vector(space, space.unit(i))));
    g
}

fn model(space: &SymplecticSpace, rng: &mut ChaCha8Rng, dim_cap: usize) -> Result<RepSpace> {
    let size = (space.field().modulus() as u128).pow(space.n() as u32);
    seeded_model(space, rng.gen(), dim_cap)?.ok_or(Error::CapExceeded {
        size,
        cap: dim_cap as u128,
    })
}

/// `T π_L(h) = π_M(h) T` on the generators of `H(V)`.
fn equivariant(t: &CycMatrix, m: &RepSpace, l: &RepSpace, gens: &[HeisenbergElement]) -> Result<bool> {
    for h in gens {
        let lhs = t.checked_mul(&pi_operator(l, h))?;
        let rhs = pi_operator(m, h).checked_mul(t)?;
        if !lhs.exact_eq(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks on seeded models of the irreducible representation of `H(F_ℓ^{2n})`:
/// `π` is a homomorphism with central character `ψ`, the character has norm
/// `|H|`, the intertwiners commute with `π`, invert each other and compose
/// around triangles, and `ρ(g)` is covariant.
pub fn check_representation(ell: u64, n: usize, seed: u64, dim_cap: usize) -> Result<RepCheckReport> {
    let field = PrimeField::new(ell)?;
    let space = SymplecticSpace::standard(field, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = model(&space, &mut rng, dim_cap)?;

    let mut homomorphism = true;
    for _ in 0..HOMOMORPHISM_PAIRS {
        let h1 = random_h(&space, &mut rng);
        let h2 = random_h(&space, &mut rng);
        let lhs = pi_operator(&rep, &heis_mul(&space, &h1, &h2));
        let rhs = pi_operator(&rep, &h1).checked_mul(&pi_operator(&rep, &h2))?;
        homomorphism &= lhs.exact_eq(&rhs);
    }

    let identity = CycMatrix::identity(field, rep.dim());
    let central_character = field.elements().all(|z| {
        pi_operator(&rep, &HeisenbergElement::central(&space, z)).exact_eq(&identity.scaled(&CycScalar::psi(z)))
    });

    let group_order = (ell as u128).checked_pow(2 * n as u32 + 1).unwrap_or(u128::MAX);
    let character_norm_sum = if group_order <= DEFAULT_ENUMERATION_CAP {
        let mut total = CycScalar::zero(field);
        for h in HeisenbergElement::enumerate(&space) {
            let chi = character(&rep, &h);
            total = &total + &(&chi * &chi.conj());
        }
        Some(total)
    } else {
        None
    };
    let irreducible = character_norm_sum
        .as_ref()
        .map(|s| s.as_integer().map(|v| v as u128) == Some(group_order));

    let gens = generators(&space);
    let mut intertwiner_equivariant = true;
    let mut intertwiner_inverse = true;
    let mut intertwiner_cocycle = true;
    let mut weil_covariant = true;
    for _ in 0..INTERTWINER_PAIRS {
        let a = model(&space, &mut rng, dim_cap)?;
        let b = model(&space, &mut rng, dim_cap)?;
        let t_ab = intertwiner(&a, &b)?;
        let t_ba = intertwiner(&b, &a)?;
        intertwiner_equivariant &= equivariant(&t_ab, &a, &b, &gens)?;
        intertwiner_inverse &= t_ab.checked_mul(&t_ba)?.is_identity();
        let loop_ = t_ab
            .checked_mul(&intertwiner(&b, &rep)?)?
            .checked_mul(&intertwiner(&rep, &a)?)?;
        intertwiner_cocycle &= loop_.is_identity();

        let g = random_symplectic(&space, rng.gen());
        let rho = weil_operator(&rep, &g)?;
        for h in &gens {
            let lhs = rho.checked_mul(&pi_operator(&rep, h))?;
            let rhs = pi_operator(&rep, &h.act(&g)).checked_mul(&rho)?;
            weil_covariant &= lhs.exact_eq(&rhs);
        }
    }

    let dim_ok = rep.dim() as u128 == (ell as u128).pow(n as u32);
    let passed = dim_ok
        && homomorphism
        && central_character
        && irreducible.unwrap_or(true)
        && intertwiner_equivariant
        && intertwiner_inverse
        && intertwiner_cocycle
        && weil_covariant;
    Ok(RepCheckReport {
        ell,
        n,
        seed,
        dim: rep.dim(),
        homomorphism_pairs: HOMOMORPHISM_PAIRS,
        homomorphism,
        central_character,
        character_norm_sum,
        irreducible,
        intertwiner_pairs: INTERTWINER_PAIRS,
        intertwiner_equivariant,
        intertwiner_inverse,
        intertwiner_cocycle,
        weil_covariant,
        passed,
    })
}
