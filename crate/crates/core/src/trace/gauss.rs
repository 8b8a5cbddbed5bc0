//! Quadratic Gauss sums `Σ_{x ∈ F_ℓ^m} ζ^{xᵀQx}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{gauss_sum, CycScalar, Fl, PrimeField};
use crate::error::{Error, Result};
use crate::linalg::{FlMatrix, Subspace};

/// A nondegenerate symmetric form on `F_ℓ^m`; `m = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    q: FlMatrix,
    det: Fl,
}

impl QuadraticForm {
    pub fn new(q: FlMatrix) -> Result<Self> {
        if !q.is_square() {
            return Err(Error::NotSquare {
                rows: q.rows(),
                cols: q.cols(),
            });
        }
        if !q.is_symmetric() {
            return Err(Error::Precondition("quadratic form matrix is not symmetric".into()));
        }
        let det = q.det()?;
        if det.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(Self { q, det })
    }

    pub fn empty(field: PrimeField) -> Self {
        Self::new(FlMatrix::zeros(field, 0, 0)).expect("empty form")
    }

    /// Uniform nondegenerate symmetric form, by rejection sampling.
    pub fn random(field: PrimeField, size: usize, rng: &mut ChaCha8Rng) -> Self {
        loop {
            let mut q = FlMatrix::zeros(field, size, size);
            for i in 0..size {
                for j in i..size {
                    let x = field.elem_u(rng.gen_range(0..field.modulus()));
                    q[(i, j)] = x;
                    q[(j, i)] = x;
                }
            }
            if let Ok(f) = Self::new(q) {
                return f;
            }
        }
    }

    pub fn random_seeded(field: PrimeField, size: usize, seed: u64) -> Self {
        Self::random(field, size, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn matrix(&self) -> &FlMatrix {
        &self.q
    }

    pub fn det(&self) -> Fl {
        self.det
    }

    pub fn size(&self) -> usize {
        self.q.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.q.field()
    }

    pub fn eval(&self, x: &[Fl]) -> Fl {
        self.q.bilinear(x, x)
    }

    /// `PᵀQP`.
    pub fn congruent(&self, p: &FlMatrix) -> Result<Self> {
        Self::new(&(&p.transpose() * &self.q) * p)
    }
}

/// Direct summation over all `ℓ^m` vectors.
pub fn quad_gauss_brute(q: &QuadraticForm, cap: u128) -> Result<CycScalar> {
    let field = q.field();
    let m = q.size();
    let size = (field.modulus() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut counts = vec![0i64; field.modulus() as usize];
    for x in Subspace::full(field, m).enumerate() {
        counts[q.eval(&x).value() as usize] += 1;
    }
    Ok(CycScalar::from_exponent_counts(field, &counts))
}

/// `(det Q | ℓ) · G(1, ℓ)^m`.
pub fn quad_gauss_closed(q: &QuadraticForm) -> CycScalar {
    let field = q.field();
    let g = gauss_sum(field.one()).expect("nonzero");
    g.pow(q.size() as u64).scale_int(q.det().legendre() as i64)
}
