//! The Frobenius action on `E[ℓ]` as a symplectic matrix.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{dlog_mu_ell, ExtElem, Fl};
use crate::error::{Error, Result};
use crate::linalg::{charpoly, FlMatrix};
use crate::algebra::FlPoly;
use crate::symplectic::SymplecticSpace;

use super::ec::{CurvePoint, EllipticCurve};
use super::spec::{count_points, trace_powers, CurveSpec};

const BASIS_ATTEMPTS: usize = 200;

fn with_seed(e: Error, seed: u64) -> Error {
    match e {
        Error::RetryExhausted { what, attempts, .. } => Error::RetryExhausted { what, attempts, seed },
        e => e,
    }
}

/// Points `P, Q` of order `ℓ` with `e(P, Q)` of order `ℓ`, found by the
/// cofactor method. `order` is `#E(F_{q^k})`.
pub fn torsion_basis(
    curve: &EllipticCurve,
    ell: u64,
    order: u128,
    rng: &mut ChaCha8Rng,
    seed: u64,
) -> Result<(CurvePoint, CurvePoint)> {
    let l = ell as u128;
    let mut cof = order;
    while cof.is_multiple_of(l) {
        cof /= l;
    }
    let mut first: Option<CurvePoint> = None;
    for _ in 0..BASIS_ATTEMPTS {
        let mut t = curve.mul(&curve.random_point(rng), cof);
        if t == CurvePoint::Infinity {
            continue;
        }
        loop {
            let next = curve.mul(&t, l);
            if next == CurvePoint::Infinity {
                break;
            }
            t = next;
        }
        match &first {
            None => first = Some(t),
            Some(p) => {
                let e = curve.weil_pairing(p, &t, ell, rng).map_err(|e| with_seed(e, seed))?;
                if e != curve.field().one() {
                    return Ok((p.clone(), t));
                }
            }
        }
    }
    Err(Error::RetryExhausted {
        what: "torsion basis search",
        attempts: BASIS_ATTEMPTS,
        seed,
    })
}

/// Smallest `k ≤ ℓ² − 1` with `E[ℓ] ⊆ E(F_{q^k})`, together with the curve
/// over `F_{q^k}` and a basis of `E[ℓ]`.
pub fn find_torsion_field(
    spec: &CurveSpec,
    cap: u128,
) -> Result<(u32, EllipticCurve, (CurvePoint, CurvePoint))> {
    let (_, a) = count_points(spec, cap)?;
    let q = spec.q()? as u64;
    let l = spec.ell as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for k in 1..(spec.ell * spec.ell) as u32 {
        let qk = (q as u128).checked_pow(k).unwrap_or(u128::MAX);
        let order = qk as i128 + 1 - trace_powers(a, q, k);
        if order % (l * l) as i128 != 0 || (qk - 1) % l != 0 {
            continue;
        }
        if qk > cap {
            return Err(Error::TorsionFieldTooLarge {
                stopped_at: k,
                size: qk,
                cap,
            });
        }
        let curve = spec.over_extension(k, cap)?;
        match torsion_basis(&curve, spec.ell, order as u128, &mut rng, spec.seed) {
            Ok(basis) => return Ok((k, curve, basis)),
            Err(Error::RetryExhausted { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal("no torsion field found below ℓ² − 1".into()))
}

#[derive(Clone, Debug)]
pub struct CurveFrobeniusData {
    pub spec: CurveSpec,
    pub point_count: u64,
    pub trace_a: i64,
    pub torsion_field_degree: u32,
    /// Columns are the coordinates of `Fr(P)`, `Fr(Q)` in the basis `P, Q`.
    pub frobenius_matrix: FlMatrix,
    /// `[ω(b_i, b_j)]` with `ω` defined by `e(X, Y) = e(P, Q)^{ω(X, Y)}`.
    pub omega_gram: FlMatrix,
    pub fixed_count: u64,
    pub basis: (CurvePoint, CurvePoint),
    /// `e(P, Q)`, the primitive root identifying `μ_ℓ` with `F_ℓ`.
    pub zeta0: ExtElem,
}

/// Frobenius on `E[ℓ]` in a basis from [`find_torsion_field`], with
/// `ω(P, Q) = 1`.
pub fn frobenius_matrix(
    spec: &CurveSpec,
    curve: &EllipticCurve,
    basis: &(CurvePoint, CurvePoint),
) -> Result<(FlMatrix, FlMatrix, ExtElem)> {
    let ell = spec.ell_field();
    let (p, q) = basis;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut pair = |x: &CurvePoint, y: &CurvePoint| curve.weil_pairing(x, y, spec.ell, &mut rng).map_err(|e| with_seed(e, spec.seed));
    let zeta0 = pair(p, q)?;
    let field = curve.field();

    let mut lattice: HashMap<CurvePoint, (u64, u64)> = HashMap::new();
    let mut ap = CurvePoint::Infinity;
    for alpha in 0..spec.ell {
        let mut pt = ap.clone();
        for beta in 0..spec.ell {
            lattice.insert(pt.clone(), (alpha, beta));
            pt = curve.add(&pt, q);
        }
        ap = curve.add(&ap, p);
    }
    let coords = |x: &CurvePoint| {
        lattice
            .get(x)
            .copied()
            .ok_or_else(|| Error::Internal("Frobenius image is outside the span of the basis".into()))
    };
    let fp = curve.frobenius(p);
    let fq = curve.frobenius(q);
    let (a1, b1) = coords(&fp)?;
    let (a2, b2) = coords(&fq)?;
    let m = FlMatrix::from_fl_rows(
        ell,
        vec![vec![ell.elem_u(a1), ell.elem_u(a2)], vec![ell.elem_u(b1), ell.elem_u(b2)]],
        2,
    )?;

    let pts = [p, q];
    let mut gram = FlMatrix::zeros(ell, 2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let v = pair(pts[i], pts[j])?;
            gram[(i, j)] = dlog_mu_ell(field, &zeta0, &v, ell)?;
        }
    }
    let e_frob = pair(&fp, &fq)?;
    if e_frob != zeta0 {
        return Err(Error::Internal("Weil pairing is not Frobenius-equivariant".into()));
    }
    Ok((m, gram, zeta0))
}

/// Counts points, finds the torsion field and a basis, and extracts the
/// Frobenius matrix, checking `det ≡ 1`, `χ ≡ t² − at + q (mod ℓ)` and
/// preservation of `ω`.
pub fn curve_frobenius(spec: &CurveSpec, cap: u128) -> Result<CurveFrobeniusData> {
    spec.validate()?;
    let (point_count, trace_a) = count_points(spec, cap)?;
    let (k, curve, basis) = find_torsion_field(spec, cap)?;
    let (m, gram, zeta0) = frobenius_matrix(spec, &curve, &basis)?;
    let ell = spec.ell_field();
    let space = SymplecticSpace::standard(ell, 1)?;
    if gram != *space.gram() {
        return Err(Error::Internal("normalised pairing is not the standard form".into()));
    }
    if !space.is_symplectomorphism(&m)? || !m.det()?.is_one() {
        return Err(Error::Internal("Frobenius does not preserve the Weil pairing".into()));
    }
    let q = ell.elem_u((spec.q()? % spec.ell as u128) as u64);
    let expected = FlPoly::new(ell, vec![q, -ell.elem(trace_a), ell.one()]);
    if charpoly(&m)? != expected {
        return Err(Error::Internal("Frobenius charpoly disagrees with the point count".into()));
    }
    let fixed_dim = (&m - &FlMatrix::identity(ell, 2)).kernel().dim();
    Ok(CurveFrobeniusData {
        spec: spec.clone(),
        point_count,
        trace_a,
        torsion_field_degree: k,
        frobenius_matrix: m,
        omega_gram: gram,
        fixed_count: spec.ell.pow(fixed_dim as u32),
        basis,
        zeta0,
    })
}

/// The standard 2-dimensional symplectic space and the Frobenius matrix.
pub fn curve_to_symplectic(data: &CurveFrobeniusData) -> Result<(SymplecticSpace, FlMatrix)> {
    let space = SymplecticSpace::standard(data.frobenius_matrix.field(), 1)?;
    space.ensure_symplectomorphism(&data.frobenius_matrix)?;
    Ok((space, data.frobenius_matrix.clone()))
}

/// Coordinates in `F_ℓ²` of an `ℓ`-torsion point in the given basis.
pub fn torsion_coordinates(
    curve: &EllipticCurve,
    basis: &(CurvePoint, CurvePoint),
    ell: u64,
    x: &CurvePoint,
) -> Option<(Fl, Fl)> {
    let k = crate::algebra::PrimeField::new(ell).ok()?;
    let mut ap = CurvePoint::Infinity;
    for alpha in 0..ell {
        let mut pt = ap.clone();
        for beta in 0..ell {
            if pt == *x {
                return Some((k.elem_u(alpha), k.elem_u(beta)));
            }
            pt = curve.add(&pt, &basis.1);
        }
        ap = curve.add(&ap, &basis.0);
    }
    None
}
