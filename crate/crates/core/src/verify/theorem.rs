//! The dimension identity and the four-way trace / path-integral identity.

use crate::algebra::{CycScalar, PrimeField};
use crate::error::{Error, Result};
use crate::heisenberg::{brute_trace, RepSpace};
use crate::linalg::FlMatrix;
use crate::symplectic::{random_symplectic, OrientedLagrangian, SymplecticSpace};
use crate::trace::{closed_form_data, quad_gauss_brute, quad_gauss_closed, trace_closed_form, QuadraticForm};
use crate::DEFAULT_ENUMERATION_CAP;

/// `n₋₁ + m + deg f̄ = 2n`.
pub fn check_dimension_identity(g: &FlMatrix) -> Result<bool> {
    let data = closed_form_data(g)?;
    Ok(data.n_minus1 + data.fixed_dim + data.fbar.deg() == g.rows())
}

/// Both sides of the identity, each computed twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremCheck {
    /// `tr ρ(g)` from the explicit model, if one was supplied.
    pub trace_brute: Option<CycScalar>,
    pub trace_closed: CycScalar,
    /// `((−1)ⁿ f̄(1) det Q | ℓ)`.
    pub sign: i32,
    /// `sign · Σ_γ ζ^{Q(γ)}` by enumeration, when `ℓ^m` is within the cap.
    pub path_integral_brute: Option<CycScalar>,
    pub path_integral_closed: CycScalar,
    /// All computed values agree.
    pub equal: bool,
}

/// Checks `tr ρ(g) = ((−1)ⁿ f̄(1) det Q | ℓ) Σ_{γ ∈ V^g} ζ^{Q(γ)}` for a
/// semisimple `g` and a nondegenerate symmetric `Q` on `V^g`, given in
/// coordinates of any basis of `V^g`.
pub fn check_main_theorem(
    space: &SymplecticSpace,
    g: &FlMatrix,
    q: &QuadraticForm,
    model: Option<&RepSpace>,
) -> Result<MainTheoremCheck> {
    space.ensure_symplectomorphism(g)?;
    let field = space.field();
    let closed = trace_closed_form(g)?;
    let data = closed_form_data(g)?;
    if q.field() != field {
        return Err(Error::ModulusMismatch(q.field().modulus(), field.modulus()));
    }
    if q.size() != data.fixed_dim {
        return Err(Error::Precondition(format!(
            "Q has size {}, but dim V^g = {}",
            q.size(),
            data.fixed_dim
        )));
    }
    let mut s = data.fbar.eval(field.one()) * q.det();
    if space.n() % 2 == 1 {
        s = -s;
    }
    let sign = s.legendre();
    let signed = |x: CycScalar| x.scale_int(sign as i64);
    let path_integral_closed = signed(quad_gauss_closed(q));
    let path_integral_brute = match quad_gauss_brute(q, DEFAULT_ENUMERATION_CAP) {
        Ok(v) => Some(signed(v)),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let trace_brute = model.map(|rep| brute_trace(rep, g)).transpose()?;
    let reference = &closed.value;
    let equal = *reference == path_integral_closed
        && trace_brute.as_ref().is_none_or(|v| v == reference)
        && path_integral_brute.as_ref().is_none_or(|v| v == reference);
    Ok(MainTheoremCheck {
        trace_brute,
        trace_closed: closed.value,
        sign,
        path_integral_brute,
        path_integral_closed,
        equal,
    })
}

/// The model on `R·L_std` for a seeded random symplectomorphism `R`, with a
/// seeded orientation, or `None` when `ℓⁿ > dim_cap`.
pub fn seeded_model(space: &SymplecticSpace, seed: u64, dim_cap: usize) -> Result<Option<RepSpace>> {
    let field: PrimeField = space.field();
    let size = (field.modulus() as u128).checked_pow(space.n() as u32).unwrap_or(u128::MAX);
    if size > dim_cap as u128 {
        return Ok(None);
    }
    let r = random_symplectic(space, seed);
    let u = field.elem_u(1 + seed % (field.modulus() - 1));
    let lag: OrientedLagrangian = OrientedLagrangian::standard(space).transform(&r).rescaled(u);
    RepSpace::with_dual_complement(space, lag, dim_cap as u128).map(Some)
}
