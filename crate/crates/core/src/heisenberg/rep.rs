//! The model `C_{M°}` of the Heisenberg representation: functions on
//! `H(V)` with `f(z, m + x) = ψ(z − ½ω(m, x)) f(0, x)` for `m ∈ M`,
//! `x ∈ M′`, stored in the basis `{i_x}` of indicator functions.

use std::collections::HashMap;

use crate::algebra::Fl;
use crate::error::{Error, Result};
use crate::linalg::{enumerate_span, FlMatrix, Subspace};
use crate::symplectic::{OrientedLagrangian, SymplecticSpace};

#[derive(Clone, Debug)]
pub struct RepSpace {
    space: SymplecticSpace,
    lagrangian: OrientedLagrangian,
    complement: Vec<Vec<Fl>>,
    points: Vec<Vec<Fl>>,
    index: HashMap<Vec<Fl>, usize>,
    // columns of the inverse of [b_1..b_n | x_1..x_n]
    split: FlMatrix,
}

impl RepSpace {
    /// `M°` with complement `span(complement)`; the basis is indexed by
    /// the `ℓ^n` points of the complement.
    pub fn new(
        space: &SymplecticSpace,
        lagrangian: OrientedLagrangian,
        complement: Vec<Vec<Fl>>,
        cap: u128,
    ) -> Result<Self> {
        let n = space.n();
        let size = (space.field().modulus() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        if complement.len() != n || complement.iter().any(|c| c.len() != space.dim()) {
            return Err(Error::DimensionMismatch(format!("complement needs {n} vectors")));
        }
        let mut cols = lagrangian.basis().to_vec();
        cols.extend(complement.iter().cloned());
        let frame = FlMatrix::from_columns(space.field(), &cols, space.dim())?;
        let split = frame
            .inverse()
            .ok_or_else(|| Error::Precondition("complement is not transverse to the Lagrangian".into()))?;
        let points = enumerate_span(space.field(), space.dim(), &complement);
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(Self {
            space: space.clone(),
            lagrangian,
            complement,
            points,
            index,
            split,
        })
    }

    /// `M°` with its ω-dual Lagrangian complement.
    pub fn with_dual_complement(space: &SymplecticSpace, lagrangian: OrientedLagrangian, cap: u128) -> Result<Self> {
        let complement = lagrangian.dual_complement(space);
        Self::new(space, lagrangian, complement, cap)
    }

    /// `M = span{v}`, `M′ = span{w}`.
    pub fn standard(space: &SymplecticSpace, cap: u128) -> Result<Self> {
        Self::with_dual_complement(space, OrientedLagrangian::standard(space), cap)
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn lagrangian(&self) -> &OrientedLagrangian {
        &self.lagrangian
    }

    pub fn complement(&self) -> &[Vec<Fl>] {
        &self.complement
    }

    pub fn complement_subspace(&self) -> Subspace {
        Subspace::from_vectors(self.space.field(), self.space.dim(), self.complement.clone())
    }

    pub fn dim(&self) -> usize {
        self.points.len()
    }

    /// Basis points `x ∈ M′` in index order.
    pub fn points(&self) -> &[Vec<Fl>] {
        &self.points
    }

    pub fn index_of(&self, x: &[Fl]) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `u = m + x` with `m ∈ M`, `x ∈ M′`.
    pub fn decompose(&self, u: &[Fl]) -> (Vec<Fl>, Vec<Fl>) {
        let n = self.space.n();
        let c = self.split.mul_vec(u);
        let field = self.space.field();
        let comb = |vs: &[Vec<Fl>], cs: &[Fl]| {
            let mut out = vec![field.zero(); u.len()];
            for (v, &a) in vs.iter().zip(cs) {
                for (o, &x) in out.iter_mut().zip(v) {
                    *o += a * x;
                }
            }
            out
        };
        (comb(self.lagrangian.basis(), &c[..n]), comb(&self.complement, &c[n..]))
    }

    /// The model for `gM°` with complement `gM′`; its point `j` is `g`
    /// applied to point `j` of `self`.
    pub fn transform(&self, g: &FlMatrix) -> Result<Self> {
        let complement = self.complement.iter().map(|c| g.mul_vec(c)).collect();
        Self::new(&self.space, self.lagrangian.transform(g), complement, u128::MAX)
    }
}
