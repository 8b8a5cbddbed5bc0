//! Symplectic vector spaces `(F_ℓ^{2n}, ω)`.

use crate::algebra::{Fl, PrimeField};
use crate::error::{Error, Result};
use crate::linalg::{FlMatrix, Subspace};

/// `F_ℓ^{2n}` with `ω(x, y) = xᵀΩy`. In the standard space the basis is
/// `v_1..v_n, w_1..w_n` with `ω(v_i, w_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    gram: FlMatrix,
}

impl SymplecticSpace {
    pub fn standard(field: PrimeField, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("symplectic space needs n ≥ 1".into()));
        }
        let mut gram = FlMatrix::zeros(field, 2 * n, 2 * n);
        for i in 0..n {
            gram[(i, n + i)] = field.one();
            gram[(n + i, i)] = -field.one();
        }
        Ok(Self { n, gram })
    }

    /// Arbitrary Gram matrix; must be antisymmetric and nondegenerate.
    pub fn with_gram(gram: FlMatrix) -> Result<Self> {
        if !gram.is_antisymmetric() || !gram.rows().is_multiple_of(2) || gram.rows() == 0 {
            return Err(Error::DimensionMismatch(
                "Gram matrix must be antisymmetric of positive even size".into(),
            ));
        }
        if gram.det()?.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(Self {
            n: gram.rows() / 2,
            gram,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.gram.field()
    }

    /// Half-dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn gram(&self) -> &FlMatrix {
        &self.gram
    }

    pub fn omega(&self, x: &[Fl], y: &[Fl]) -> Fl {
        self.gram.bilinear(x, y)
    }

    /// Gram matrix `[ω(a_i, b_j)]`.
    pub fn pairing_matrix(&self, a: &[Vec<Fl>], b: &[Vec<Fl>]) -> FlMatrix {
        let mut m = FlMatrix::zeros(self.field(), a.len(), b.len());
        for (i, x) in a.iter().enumerate() {
            let gx: Vec<Fl> = self.gram.transpose().mul_vec(x);
            for (j, y) in b.iter().enumerate() {
                m[(i, j)] = gx.iter().zip(y).fold(self.field().zero(), |acc, (&p, &q)| acc + p * q);
            }
        }
        m
    }

    pub fn unit(&self, i: usize) -> Vec<Fl> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[i] = self.field().one();
        v
    }

    pub fn zero_vec(&self) -> Vec<Fl> {
        vec![self.field().zero(); self.dim()]
    }

    /// `span{v_1..v_n}`.
    pub fn standard_lagrangian(&self) -> Subspace {
        Subspace::from_vectors(self.field(), self.dim(), (0..self.n).map(|i| self.unit(i)).collect())
    }

    /// `span{w_1..w_n}`.
    pub fn standard_complement(&self) -> Subspace {
        Subspace::from_vectors(
            self.field(),
            self.dim(),
            (0..self.n).map(|i| self.unit(self.n + i)).collect(),
        )
    }

    /// `SᵀΩS = Ω`.
    pub fn is_symplectomorphism(&self, s: &FlMatrix) -> Result<bool> {
        if s.rows() != self.dim() || s.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {0}x{0} matrix, got {1}x{2}",
                self.dim(),
                s.rows(),
                s.cols()
            )));
        }
        Ok(&(&s.transpose() * &self.gram) * s == self.gram)
    }

    pub fn ensure_symplectomorphism(&self, s: &FlMatrix) -> Result<()> {
        if self.is_symplectomorphism(s)? {
            Ok(())
        } else {
            Err(Error::NotSymplectic)
        }
    }

    /// Whether ω restricted to the span of `vectors` is nondegenerate.
    pub fn is_nondegenerate_on(&self, vectors: &[Vec<Fl>]) -> bool {
        let g = self.pairing_matrix(vectors, vectors);
        g.rows() == 0 || !g.det().map(|d| d.is_zero()).unwrap_or(true)
    }

    pub fn is_isotropic(&self, u: &Subspace) -> bool {
        let b = u.basis_vectors();
        self.pairing_matrix(&b, &b).is_zero()
    }

    pub fn is_lagrangian(&self, u: &Subspace) -> bool {
        u.ambient() == self.dim() && u.dim() == self.n && self.is_isotropic(u)
    }

    pub fn perp(&self, u: &Subspace) -> Result<Subspace> {
        crate::linalg::omega_perp(u, &self.gram)
    }
}
