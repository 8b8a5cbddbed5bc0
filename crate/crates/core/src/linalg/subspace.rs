//! Subspaces of `F_ℓ^d` in canonical reduced-echelon form.

use std::fmt;

use crate::algebra::{Fl, PrimeField};
use crate::error::{Error, Result};

use super::matrix::FlMatrix;

/// A subspace of `F_ℓ^ambient`. The basis rows are kept in reduced row
/// echelon form, so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: FlMatrix,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(field: PrimeField, ambient: usize, vectors: Vec<Vec<Fl>>) -> Self {
        let m = FlMatrix::from_fl_rows(field, vectors, ambient).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient, "vector length differs from ambient dimension");
        Self::from_rows_matrix(&m)
    }

    /// Row space of a matrix.
    pub fn from_rows_matrix(m: &FlMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.submatrix(0..pivots.len(), 0..m.cols());
        Self {
            ambient: m.cols(),
            basis,
        }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FlMatrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FlMatrix::identity(field, ambient),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis as the rows of a matrix.
    pub fn basis(&self) -> &FlMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Fl>> {
        self.basis.row_vecs()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Fl]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Fl]) -> Option<Vec<Fl>> {
        assert_eq!(v.len(), self.ambient);
        if self.dim() == 0 {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        self.basis.transpose().solve(v).ok().map(|s| s.particular)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_rows_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection via Zassenhaus: row-reduce `[U U; W 0]`; rows with a
    /// zero left half span `U ∩ W` in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let d = self.ambient;
        let field = self.field();
        let top = self.basis.hstack(&self.basis)?;
        let bottom = other.basis.hstack(&FlMatrix::zeros(field, other.dim(), d))?;
        let (r, pivots) = top.vstack(&bottom)?.rref();
        let rows = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= d)
            .map(|(i, _)| r.row(i)[d..].to_vec())
            .collect();
        Ok(Self::from_vectors(field, d, rows))
    }

    /// Vectors of `container` (in its basis order) that extend a basis of
    /// `self` to one of `container`; `self` must lie in `container`.
    pub fn complement_within(&self, container: &Subspace) -> Result<Vec<Vec<Fl>>> {
        self.check_ambient(container)?;
        if !self.is_subspace_of(container) {
            return Err(Error::Precondition("subspace is not contained in container".into()));
        }
        let mut span = self.clone();
        let mut out = Vec::new();
        for v in container.basis_vectors() {
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_vectors(self.field(), self.ambient, vec![v.clone()]))?;
                out.push(v);
            }
        }
        Ok(out)
    }

    /// All `ℓ^dim` vectors, in lexicographic order of their coordinates.
    pub fn enumerate(&self) -> Vec<Vec<Fl>> {
        enumerate_span(self.field(), self.ambient, &self.basis_vectors())
    }

    /// Image under a square matrix acting on column vectors.
    pub fn image(&self, g: &FlMatrix) -> Subspace {
        let rows = self.basis_vectors().iter().map(|v| g.mul_vec(v)).collect();
        Self::from_vectors(self.field(), self.ambient, rows)
    }
}

/// Every linear combination `Σ c_i b_i`, with the coefficient of the last
/// vector varying fastest.
pub fn enumerate_span(field: PrimeField, ambient: usize, basis: &[Vec<Fl>]) -> Vec<Vec<Fl>> {
    let p = field.modulus() as usize;
    let count = p.pow(basis.len() as u32);
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut v = vec![field.zero(); ambient];
        let mut rest = idx;
        for b in basis.iter().rev() {
            let c = field.elem_u((rest % p) as u64);
            rest /= p;
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        out.push(v);
    }
    out
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient, self.basis.to_u64_rows())
    }
}

/// `U^⊥ = {v : ω(u, v) = 0 ∀u ∈ U}` for `ω(x, y) = xᵀΩy`.
pub fn omega_perp(u: &Subspace, gram: &FlMatrix) -> Result<Subspace> {
    if !gram.is_antisymmetric() || gram.rows() != u.ambient() {
        return Err(Error::DimensionMismatch(
            "Gram matrix must be antisymmetric of the ambient size".into(),
        ));
    }
    if gram.det()?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    if u.dim() == 0 {
        return Ok(Subspace::full(u.field(), u.ambient()));
    }
    let rows = u.basis().checked_mul(gram)?;
    Ok(rows.kernel())
}
