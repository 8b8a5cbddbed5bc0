//! Closed-form traces of semisimple symplectomorphisms.

use serde::{Deserialize, Serialize};

use crate::algebra::{CycScalar, FlPoly};
use crate::algebra::factor::distinct_irreducible_factors;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, FlMatrix};
use crate::symplectic::{eigen_dims, is_semisimple};

/// `sign · ℓ^{fixed_halfdim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTrace {
    pub sign: i32,
    pub fixed_halfdim: usize,
    pub value: CycScalar,
}

/// The serialized shape of a [`ClosedTrace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedTraceSummary {
    pub sign: i32,
    pub ell_power: usize,
}

impl ClosedTrace {
    pub fn summary(&self) -> ClosedTraceSummary {
        ClosedTraceSummary {
            sign: self.sign,
            ell_power: self.fixed_halfdim,
        }
    }
}

/// Ingredients of the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormData {
    pub charpoly: FlPoly,
    /// `dim ker(g + 1)`.
    pub n_minus1: usize,
    /// `m = dim ker(g − 1)`.
    pub fixed_dim: usize,
    /// `χ_g` with all `t ± 1` factors removed.
    pub fbar: FlPoly,
}

pub fn closed_form_data(g: &FlMatrix) -> Result<ClosedFormData> {
    let chi = charpoly(g)?;
    let (fixed_dim, n_minus1) = eigen_dims(g);
    let (_, _, fbar) = chi.strip_unit_factors();
    Ok(ClosedFormData {
        charpoly: chi,
        n_minus1,
        fixed_dim,
        fbar,
    })
}

fn closed_from(field: crate::algebra::PrimeField, n_minus1: usize, fixed_dim: usize, fbar: &FlPoly) -> Result<ClosedTrace> {
    if !n_minus1.is_multiple_of(2) || !fixed_dim.is_multiple_of(2) || !fbar.deg().is_multiple_of(2) {
        return Err(Error::Internal("odd eigenspace or f̄ degree for a symplectomorphism".into()));
    }
    let parity = (n_minus1 / 2 + fbar.deg() / 2) % 2;
    let s = if parity == 1 { -fbar.eval(field.one()) } else { fbar.eval(field.one()) };
    let sign = s.legendre();
    if sign == 0 {
        return Err(Error::Internal("f̄(1) vanished".into()));
    }
    let half = fixed_dim / 2;
    let value = CycScalar::from_integer(field, sign as i64 * (field.modulus() as i64).pow(half as u32));
    Ok(ClosedTrace {
        sign,
        fixed_halfdim: half,
        value,
    })
}

/// `tr ρ(g) = ((−1)^{n₋₁/2} (−1)^{deg f̄/2} f̄(1) | ℓ) · ℓ^{m/2}` with `f̄`
/// taken from the characteristic polynomial.
pub fn trace_closed_form(g: &FlMatrix) -> Result<ClosedTrace> {
    if !is_semisimple(g)? {
        return Err(Error::NotSemisimple);
    }
    let data = closed_form_data(g)?;
    closed_from(g.field(), data.n_minus1, data.fixed_dim, &data.fbar)
}

/// The same formula with `f̄` taken from the minimal polynomial instead.
/// Differs from [`trace_closed_form`] when a squarefree factor repeats.
pub fn trace_closed_form_minpoly(g: &FlMatrix) -> Result<ClosedTrace> {
    if !is_semisimple(g)? {
        return Err(Error::NotSemisimple);
    }
    let data = closed_form_data(g)?;
    let minpoly = distinct_irreducible_factors(&data.charpoly)?
        .iter()
        .fold(FlPoly::one(g.field()), |acc, h| &acc * h);
    let (_, _, fbar) = minpoly.strip_unit_factors();
    closed_from(g.field(), data.n_minus1, data.fixed_dim, &fbar)
}

/// `((−1)^n f(1) | ℓ)` for palindromic squarefree `f` of degree `2n`
/// without roots `±1`.
pub fn trace_separable(f: &FlPoly) -> Result<i32> {
    let field = f.field();
    let one = field.one();
    if f.is_zero() || f.deg() == 0 || !f.deg().is_multiple_of(2) || !f.is_monic() || !f.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    if !f.is_squarefree() {
        return Err(Error::Precondition("polynomial is not squarefree".into()));
    }
    if f.eval(one).is_zero() || f.eval(-one).is_zero() {
        return Err(Error::Precondition("polynomial has a root ±1".into()));
    }
    let n = f.deg() / 2;
    let v = if n % 2 == 1 { -f.eval(one) } else { f.eval(one) };
    Ok(v.legendre())
}
