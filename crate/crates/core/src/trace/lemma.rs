//! Traces of `ρ(g)` via the set `𝒮 = {x ∈ M′ : x − gx ∈ M + gM}` and via a
//! `g`-invariant Lagrangian.

use crate::algebra::{CycScalar, Fl};
use crate::error::{Error, Result};
use crate::heisenberg::{normalization_constant, RepSpace};
use crate::linalg::{enumerate_span, FlMatrix, Subspace};
use crate::symplectic::{eigen_dims, is_semisimple, restrict, OrientedLagrangian, SymplecticSpace};

fn add(a: &[Fl], b: &[Fl]) -> Vec<Fl> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn combine(field: crate::algebra::PrimeField, d: usize, vs: &[Vec<Fl>], cs: &[Fl]) -> Vec<Fl> {
    let mut out = vec![field.zero(); d];
    for (v, &c) in vs.iter().zip(cs) {
        for (o, &x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// `𝒮` as a subspace of `V` (contained in `M′`).
pub fn s_set(rep: &RepSpace, g: &FlMatrix) -> Result<Subspace> {
    let space = rep.space();
    let field = space.field();
    let d = space.dim();
    let m = rep.lagrangian().span();
    let sum = m.sum(&m.image(g))?;
    let perp = space.perp(&sum)?;
    let i_minus_g = &FlMatrix::identity(field, d) - g;
    let moved: Vec<Vec<Fl>> = rep.complement().iter().map(|x| i_minus_g.mul_vec(x)).collect();
    let conditions = space.pairing_matrix(&perp.basis_vectors(), &moved);
    let coeffs = if conditions.rows() == 0 {
        Subspace::full(field, rep.complement().len())
    } else {
        conditions.kernel()
    };
    let vectors = coeffs
        .basis_vectors()
        .iter()
        .map(|c| combine(field, d, rep.complement(), c))
        .collect();
    Ok(Subspace::from_vectors(field, d, vectors))
}

/// `tr ρ(g) = A_{M°,gM°} Σ_{x ∈ 𝒮} ψ(½ω(m_x + n_x, x))` where
/// `gx − x = m_x + g n_x` with `m_x, n_x ∈ M`. Valid for every
/// symplectomorphism `g`.
pub fn trace_via_s_set(rep: &RepSpace, g: &FlMatrix) -> Result<CycScalar> {
    let space = rep.space();
    space.ensure_symplectomorphism(g)?;
    let field = space.field();
    let d = space.dim();
    let basis_m = rep.lagrangian().basis();
    let basis_gm: Vec<Vec<Fl>> = basis_m.iter().map(|b| g.mul_vec(b)).collect();
    let mut cols = basis_m.to_vec();
    cols.extend(basis_gm.iter().cloned());
    let system = FlMatrix::from_columns(field, &cols, d)?;
    let n = basis_m.len();

    let s = s_set(rep, g)?;
    let mut s_basis = Vec::new();
    let mut mn_basis = Vec::new();
    for x in s.basis_vectors() {
        let gx = g.mul_vec(&x);
        let rhs: Vec<Fl> = gx.iter().zip(&x).map(|(&a, &b)| a - b).collect();
        let sol = system
            .solve(&rhs)
            .map_err(|_| Error::Internal("gx − x is not in M + gM for x ∈ 𝒮".into()))?;
        let mx = combine(field, d, basis_m, &sol.particular[..n]);
        let nx = combine(field, d, basis_m, &sol.particular[n..]);
        s_basis.push(x);
        mn_basis.push(add(&mx, &nx));
    }
    let half = field.half();
    let ell = field.modulus() as usize;
    let mut counts = vec![0i64; ell];
    let xs = enumerate_span(field, d, &s_basis);
    let mns = enumerate_span(field, d, &mn_basis);
    for (x, mn) in xs.iter().zip(&mns) {
        counts[(half * space.omega(mn, x)).value() as usize] += 1;
    }
    let image = rep.lagrangian().transform(g);
    let a = normalization_constant(space, rep.lagrangian(), &image)?;
    Ok(&a * &CycScalar::from_exponent_counts(field, &counts))
}

/// `tr ρ(g) = (det(g|M) | ℓ) · ℓ^{m/2}` for semisimple `g` with `gM = M`,
/// where `m = dim V^g`.
pub fn trace_invariant_lagrangian(space: &SymplecticSpace, g: &FlMatrix, m: &OrientedLagrangian) -> Result<CycScalar> {
    space.ensure_symplectomorphism(g)?;
    if m.span().image(g) != *m.span() {
        return Err(Error::NotInvariant);
    }
    if !is_semisimple(g)? {
        return Err(Error::NotSemisimple);
    }
    let det = restrict(g, m.basis())?.det()?;
    let (fixed, _) = eigen_dims(g);
    let power = (space.field().modulus() as i64).pow((fixed / 2) as u32);
    Ok(CycScalar::from_integer(space.field(), det.legendre() as i64 * power))
}
