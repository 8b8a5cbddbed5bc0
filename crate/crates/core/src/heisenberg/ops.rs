//! Operators on the models `C_{M°}`: the Heisenberg action, the canonical
//! intertwiners and the Weil operators.

use crate::algebra::{gauss_sum, CycScalar, Fl};
use crate::error::{Error, Result};
use crate::linalg::FlMatrix;
use crate::symplectic::{lagrangian_pair_data, OrientedLagrangian, SymplecticSpace};

use super::cycmatrix::CycMatrix;
use super::group::HeisenbergElement;
use super::rep::RepSpace;

/// `π_M(h)`, right translation by `h`.
pub fn pi_operator(rep: &RepSpace, h: &HeisenbergElement) -> CycMatrix {
    let space = rep.space();
    let half = space.field().half();
    let n = rep.dim();
    let mut out = CycMatrix::zeros(space.field(), n, n);
    for (i, x) in rep.points().iter().enumerate() {
        let u: Vec<Fl> = x.iter().zip(&h.v).map(|(&p, &q)| p + q).collect();
        let (m, xp) = rep.decompose(&u);
        let e = h.lambda + half * space.omega(x, &h.v) - half * space.omega(&m, &xp);
        out.add_zeta(i, rep.index_of(&xp).expect("point of M′"), e, 1);
    }
    out
}

/// `tr π_M(h)`.
pub fn character(rep: &RepSpace, h: &HeisenbergElement) -> CycScalar {
    let space = rep.space();
    let half = space.field().half();
    let ell = space.field().modulus() as usize;
    let mut counts = vec![0i64; ell];
    for x in rep.points() {
        let u: Vec<Fl> = x.iter().zip(&h.v).map(|(&p, &q)| p + q).collect();
        let (m, xp) = rep.decompose(&u);
        if &xp == x {
            let e = h.lambda + half * space.omega(x, &h.v) - half * space.omega(&m, &xp);
            counts[e.value() as usize] += 1;
        }
    }
    CycScalar::from_exponent_counts(space.field(), &counts)
}

/// The pairing of top forms `(ω^k/k!)(c^L_1 ∧ … ∧ c^L_k ∧ c^M_1 ∧ … ∧ c^M_k)`,
/// i.e. the Pfaffian of the Gram matrix of the concatenated vectors.
pub fn omega_wedge(space: &SymplecticSpace, c_l: &[Vec<Fl>], c_m: &[Vec<Fl>]) -> Result<Fl> {
    let k = c_l.len();
    let d = space.pairing_matrix(c_l, c_m).det()?;
    Ok(if (k * k.saturating_sub(1) / 2) % 2 == 1 { -d } else { d })
}

/// `A_{M°,L°} = (G(½)/ℓ)^{n_I} · ((−1)^{C(n_I,2)} (ι_L/ι_M) ω_∧ | ℓ)`, where
/// `ι_L/ι_M = α_L/α_M` compares both orientations against frames sharing
/// one basis of `I = M ∩ L`.
pub fn normalization_constant(
    space: &SymplecticSpace,
    m: &OrientedLagrangian,
    l: &OrientedLagrangian,
) -> Result<CycScalar> {
    let field = space.field();
    let pair = lagrangian_pair_data(space, m, l)?;
    let b_i = pair.intersection.basis_vectors();
    let frame_m: Vec<Vec<Fl>> = b_i.iter().chain(&pair.complement_m).cloned().collect();
    let frame_l: Vec<Vec<Fl>> = b_i.iter().chain(&pair.complement_l).cloned().collect();
    let alpha_m = m.orientation_relative_to(&frame_m)?;
    let alpha_l = l.orientation_relative_to(&frame_l)?;
    let n_i = pair.n_i;
    let wedge = omega_wedge(space, &pair.complement_l, &pair.complement_m)?;
    if wedge.is_zero() {
        return Err(Error::Internal("degenerate pairing between M/I and L/I".into()));
    }
    let sign = if (n_i * n_i.saturating_sub(1) / 2) % 2 == 1 { -field.one() } else { field.one() };
    let symbol = (sign * alpha_l / alpha_m * wedge).legendre();
    let g = gauss_sum(field.half())?;
    let ell = num_rational::BigRational::from_integer((field.modulus() as i64).into());
    let base = g.scale(&num_traits::Inv::inv(ell));
    Ok(base.pow(n_i as u64).scale_int(symbol as i64))
}

/// The averaging map `F_{M°,L°}: C_{L°} → C_{M°}`,
/// `F[f](0, x) = Σ_{m ∈ M/I} f(½ω(m, x), m + x)`.
pub fn averaging_operator(m_rep: &RepSpace, l_rep: &RepSpace) -> Result<CycMatrix> {
    let space = m_rep.space();
    let pair = lagrangian_pair_data(space, m_rep.lagrangian(), l_rep.lagrangian())?;
    let reps = pair.coset_reps();
    let half = space.field().half();
    let mut out = CycMatrix::zeros(space.field(), m_rep.dim(), l_rep.dim());
    for (i, x) in m_rep.points().iter().enumerate() {
        for mv in &reps {
            let u: Vec<Fl> = mv.iter().zip(x).map(|(&a, &b)| a + b).collect();
            let (lv, y) = l_rep.decompose(&u);
            let e = half * space.omega(mv, x) - half * space.omega(&lv, &y);
            out.add_zeta(i, l_rep.index_of(&y).expect("point of L′"), e, 1);
        }
    }
    Ok(out)
}

/// `T_{M°,L°} = A_{M°,L°} · F_{M°,L°}: C_{L°} → C_{M°}`.
pub fn intertwiner(m_rep: &RepSpace, l_rep: &RepSpace) -> Result<CycMatrix> {
    let a = normalization_constant(m_rep.space(), m_rep.lagrangian(), l_rep.lagrangian())?;
    Ok(averaging_operator(m_rep, l_rep)?.with_scale(a))
}

/// `ρ(g) = T_{M°,gM°} ∘ g_*` in the basis of `C_{M°}`.
pub fn weil_operator(rep: &RepSpace, g: &FlMatrix) -> Result<CycMatrix> {
    rep.space().ensure_symplectomorphism(g)?;
    intertwiner(rep, &rep.transform(g)?)
}

/// `tr ρ(g)`, computed from the diagonal only.
pub fn brute_trace(rep: &RepSpace, g: &FlMatrix) -> Result<CycScalar> {
    let space = rep.space();
    space.ensure_symplectomorphism(g)?;
    let image = rep.transform(g)?;
    let pair = lagrangian_pair_data(space, rep.lagrangian(), image.lagrangian())?;
    let reps = pair.coset_reps();
    let half = space.field().half();
    let ell = space.field().modulus() as usize;
    let mut counts = vec![0i64; ell];
    for (i, x) in rep.points().iter().enumerate() {
        for mv in &reps {
            let u: Vec<Fl> = mv.iter().zip(x).map(|(&a, &b)| a + b).collect();
            let (lv, y) = image.decompose(&u);
            if image.index_of(&y) == Some(i) {
                let e = half * space.omega(mv, x) - half * space.omega(&lv, &y);
                counts[e.value() as usize] += 1;
            }
        }
    }
    let a = normalization_constant(space, rep.lagrangian(), image.lagrangian())?;
    Ok(&a * &CycScalar::from_exponent_counts(space.field(), &counts))
}

/// `tr ρ(g)` in the standard model, refusing models larger than `cap`.
pub fn brute_trace_standard(space: &SymplecticSpace, g: &FlMatrix, cap: u128) -> Result<CycScalar> {
    brute_trace(&RepSpace::standard(space, cap)?, g)
}

/// The scalar `c` with `ρ(g₁)ρ(g₂) = c·ρ(g₁g₂)`, or `None` if the two sides
/// are not proportional.
pub fn multiplicativity_scalar(rep: &RepSpace, g1: &FlMatrix, g2: &FlMatrix) -> Result<Option<CycScalar>> {
    let lhs = weil_operator(rep, g1)?.checked_mul(&weil_operator(rep, g2)?)?;
    let rhs = weil_operator(rep, &(g1 * g2))?;
    Ok(lhs.scalar_ratio(&rhs))
}
