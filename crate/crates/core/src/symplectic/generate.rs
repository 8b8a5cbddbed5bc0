//! Seeded generators of symplectomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Fl, FlPoly, PrimeField};
use crate::error::{Error, Result};
use crate::linalg::FlMatrix;

use super::space::SymplecticSpace;

/// Product of `12n` random transvections `x ↦ x + λ ω(x, u) u`.
pub fn random_symplectic(space: &SymplecticSpace, seed: u64) -> FlMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(space, &mut rng)
}

pub(crate) fn random_symplectic_with(space: &SymplecticSpace, rng: &mut ChaCha8Rng) -> FlMatrix {
    let field = space.field();
    let d = space.dim();
    let p = field.modulus();
    let mut acc = FlMatrix::identity(field, d);
    for _ in 0..12 * space.n() {
        let u: Vec<Fl> = (0..d).map(|_| field.elem_u(rng.gen_range(0..p))).collect();
        let lambda = field.elem_u(rng.gen_range(0..p));
        // ω(x, u) = xᵀ(Ωu)
        let ou = space.gram().mul_vec(&u);
        let mut t = FlMatrix::identity(field, d);
        for i in 0..d {
            for j in 0..d {
                t[(i, j)] += lambda * u[i] * ou[j];
            }
        }
        acc = &t * &acc;
    }
    acc
}

/// Symplectic companion matrix of a palindromic monic
/// `f = t^{2n} + a_1 t^{2n−1} + … + a_n t^n + … + a_1 t + 1`, acting by
/// `v_i ↦ v_{i+1}`, `v_n ↦ w_1`, `w_i ↦ −a_i w_1 + w_{i+1}`,
/// `w_n ↦ −(v_1 + a_1 v_2 + … + a_{n−1} v_n + a_n w_1)`.
pub fn companion_symplectic(f: &FlPoly) -> Result<FlMatrix> {
    let field = f.field();
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 || deg % 2 != 0 || !f.is_monic() || !f.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    let n = deg / 2;
    let a = |i: usize| f.coeff(deg - i);
    let mut s = FlMatrix::zeros(field, deg, deg);
    let one = field.one();
    // column j is the image of basis vector j
    for i in 0..n - 1 {
        s[(i + 1, i)] = one;
    }
    s[(n, n - 1)] = one;
    for i in 0..n - 1 {
        s[(n, n + i)] = -a(i + 1);
        s[(n + i + 1, n + i)] = one;
    }
    let last = 2 * n - 1;
    s[(0, last)] = -one;
    for i in 1..n {
        s[(i, last)] = -a(i);
    }
    s[(n, last)] = -a(n);
    Ok(s)
}

/// Shape of a semisimple symplectomorphism: half-dimensions of the `±1`
/// eigenspaces plus palindromic squarefree blocks without roots `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleProfile {
    pub plus: usize,
    pub minus: usize,
    pub blocks: Vec<FlPoly>,
}

impl SemisimpleProfile {
    pub fn half_dim(&self) -> usize {
        self.plus + self.minus + self.blocks.iter().map(|b| b.deg() / 2).sum::<usize>()
    }

    pub fn validate(&self, field: PrimeField) -> Result<()> {
        for b in &self.blocks {
            if b.field() != field {
                return Err(Error::ModulusMismatch(b.field().modulus(), field.modulus()));
            }
            if b.deg() < 2 || !b.is_monic() || !b.is_palindromic() {
                return Err(Error::InvalidProfile(format!("block {b} is not palindromic monic of even degree")));
            }
            if !b.is_squarefree() {
                return Err(Error::InvalidProfile(format!("block {b} is not squarefree")));
            }
            if b.eval(field.one()).is_zero() || b.eval(-field.one()).is_zero() {
                return Err(Error::InvalidProfile(format!("block {b} has a root ±1")));
            }
        }
        Ok(())
    }
}

/// Random palindromic monic `f` of degree `2k`, squarefree and without
/// roots `±1`, or `None` after a bounded number of draws.
pub fn random_separable_palindromic(field: PrimeField, k: usize, rng: &mut ChaCha8Rng) -> Option<FlPoly> {
    let one = field.one();
    for _ in 0..200 {
        let mut c = vec![field.zero(); 2 * k + 1];
        c[0] = one;
        c[2 * k] = one;
        for i in 1..=k {
            let x = field.elem_u(rng.gen_range(0..field.modulus()));
            c[i] = x;
            c[2 * k - i] = x;
        }
        let f = FlPoly::new(field, c);
        if f.is_squarefree() && !f.eval(one).is_zero() && !f.eval(-one).is_zero() {
            return Some(f);
        }
    }
    None
}

/// Random profile of half-dimension `n`, mixing `±1` eigenspaces and
/// separable blocks of half-dimension at most 2.
pub fn random_profile(field: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> SemisimpleProfile {
    let mut profile = SemisimpleProfile {
        plus: 0,
        minus: 0,
        blocks: Vec::new(),
    };
    let mut left = n;
    while left > 0 {
        match rng.gen_range(0..4) {
            0 => {
                profile.plus += 1;
                left -= 1;
            }
            1 => {
                profile.minus += 1;
                left -= 1;
            }
            _ => {
                let k = rng.gen_range(1..=left.min(2));
                if let Some(f) = random_separable_palindromic(field, k, rng) {
                    profile.blocks.push(f);
                    left -= k;
                }
            }
        }
    }
    profile
}

/// Block-diagonal assembly of the profile, conjugated by a random
/// symplectomorphism.
pub fn random_semisimple_symplectic(
    space: &SymplecticSpace,
    profile: &SemisimpleProfile,
    seed: u64,
) -> Result<FlMatrix> {
    let field = space.field();
    profile.validate(field)?;
    if profile.half_dim() != space.n() {
        return Err(Error::InvalidProfile(format!(
            "profile has half-dimension {}, space has {}",
            profile.half_dim(),
            space.n()
        )));
    }
    let n = space.n();
    let mut blocks: Vec<FlMatrix> = Vec::new();
    blocks.extend((0..profile.plus).map(|_| FlMatrix::identity(field, 2)));
    blocks.extend((0..profile.minus).map(|_| FlMatrix::scalar(field, 2, -field.one())));
    for f in &profile.blocks {
        blocks.push(companion_symplectic(f)?);
    }
    let mut s = FlMatrix::zeros(field, 2 * n, 2 * n);
    let mut off = 0;
    for b in &blocks {
        let k = b.rows() / 2;
        let slot = |i: usize| if i < k { off + i } else { n + off + i - k };
        for i in 0..2 * k {
            for j in 0..2 * k {
                s[(slot(i), slot(j))] = b[(i, j)];
            }
        }
        off += k;
    }
    let r = random_symplectic(space, seed);
    let rinv = r.inverse().expect("symplectic matrices are invertible");
    Ok(&(&r * &s) * &rinv)
}
