//! Semisimplicity, eigenspace dimensions and the decomposition of a
//! semisimple symplectomorphism into invariant symplectic blocks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::distinct_irreducible_factors;
use crate::algebra::{Fl, FlPoly};
use crate::error::{Error, Result};
use crate::linalg::{apply_poly, charpoly, FlMatrix, Subspace};

use super::space::SymplecticSpace;

pub const DEFAULT_DECOMPOSITION_SEED: u64 = 0xdec0_0001;
const SPLIT_ATTEMPTS: usize = 100;

/// The radical of `χ_S` kills `S`.
pub fn is_semisimple(s: &FlMatrix) -> Result<bool> {
    let chi = charpoly(s)?;
    let rad = distinct_irreducible_factors(&chi)?
        .iter()
        .fold(FlPoly::one(s.field()), |acc, h| &acc * h);
    Ok(apply_poly(&rad, s).is_zero())
}

/// `(dim ker(S − I), dim ker(S + I))`.
pub fn eigen_dims(s: &FlMatrix) -> (usize, usize) {
    let field = s.field();
    let n = s.rows();
    let fixed = (s - &FlMatrix::identity(field, n)).kernel().dim();
    let minus = (s + &FlMatrix::identity(field, n)).kernel().dim();
    (fixed, minus)
}

/// Matrix of `S` on the span of `basis` (columns are coordinates of the
/// images), or [`Error::NotInvariant`].
pub fn restrict(s: &FlMatrix, basis: &[Vec<Fl>]) -> Result<FlMatrix> {
    let field = s.field();
    let k = basis.len();
    if k == 0 {
        return Ok(FlMatrix::zeros(field, 0, 0));
    }
    let bt = FlMatrix::from_columns(field, basis, s.rows())?;
    let mut r = FlMatrix::zeros(field, k, k);
    for (j, b) in basis.iter().enumerate() {
        let sol = bt.solve(&s.mul_vec(b)).map_err(|e| match e {
            Error::Inconsistent => Error::NotInvariant,
            e => e,
        })?;
        for i in 0..k {
            r[(i, j)] = sol.particular[i];
        }
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    PlusOne,
    MinusOne,
    Squarefree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBlock {
    pub subspace: Subspace,
    pub charpoly: FlPoly,
    pub kind: BlockKind,
}

/// Splits `V` into pairwise ω-orthogonal `S`-invariant symplectic blocks:
/// the full `±1` eigenspaces, then squarefree blocks found by random
/// cyclic vectors.
pub fn invariant_decomposition(
    space: &SymplecticSpace,
    s: &FlMatrix,
    seed: u64,
) -> Result<Vec<InvariantBlock>> {
    space.ensure_symplectomorphism(s)?;
    if !is_semisimple(s)? {
        return Err(Error::NotSemisimple);
    }
    let field = space.field();
    let one = field.one();
    let d = space.dim();
    let chi = charpoly(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = Vec::new();

    for (kind, root) in [(BlockKind::PlusOne, one), (BlockKind::MinusOne, -one)] {
        let lin = FlPoly::linear(root);
        let ker = apply_poly(&lin, s).kernel();
        if ker.dim() > 0 {
            blocks.push(InvariantBlock {
                charpoly: lin.pow(ker.dim() as u64),
                subspace: ker,
                kind,
            });
        }
    }

    let mut seen: Vec<FlPoly> = Vec::new();
    for h in distinct_irreducible_factors(&chi)? {
        if h.deg() == 1 && (h.eval(one).is_zero() || h.eval(-one).is_zero()) {
            continue;
        }
        if seen.contains(&h) {
            continue;
        }
        let hstar = h.reciprocal()?;
        seen.push(h.clone());
        seen.push(hstar.clone());
        let f = if hstar == h { h.clone() } else { &h * &hstar };
        let mut w = apply_poly(&f, s).kernel();
        while w.dim() > 0 {
            let z = split_off(space, s, &w, f.deg(), &mut rng, seed)?;
            let zspace = Subspace::from_vectors(field, d, z);
            w = w.intersection(&space.perp(&zspace)?)?;
            blocks.push(InvariantBlock {
                subspace: zspace,
                charpoly: f.clone(),
                kind: BlockKind::Squarefree,
            });
        }
    }
    Ok(blocks)
}

/// Every block invariant that fails for `blocks` as a decomposition of `s`;
/// empty when the decomposition is valid.
pub fn decomposition_violations(
    space: &SymplecticSpace,
    s: &FlMatrix,
    blocks: &[InvariantBlock],
) -> Result<Vec<String>> {
    let field = space.field();
    let one = field.one();
    let mut out = Vec::new();
    let total: usize = blocks.iter().map(|b| b.subspace.dim()).sum();
    if total != space.dim() {
        out.push(format!("block dimensions sum to {total}, expected {}", space.dim()));
    }
    let mut prod = FlPoly::one(field);
    for (i, b) in blocks.iter().enumerate() {
        let bv = b.subspace.basis_vectors();
        if !space.is_nondegenerate_on(&bv) {
            out.push(format!("block {i} is not symplectic"));
        }
        match restrict(s, &bv) {
            Ok(r) => {
                if charpoly(&r)? != b.charpoly {
                    out.push(format!("block {i} charpoly does not match the restriction"));
                }
            }
            Err(Error::NotInvariant) => out.push(format!("block {i} is not invariant")),
            Err(e) => return Err(e),
        }
        match b.kind {
            BlockKind::Squarefree => {
                if !b.charpoly.is_squarefree() || b.charpoly.eval(one).is_zero() || b.charpoly.eval(-one).is_zero() {
                    out.push(format!("block {i} charpoly is not squarefree without roots ±1"));
                }
            }
            BlockKind::PlusOne | BlockKind::MinusOne => {
                let root = if b.kind == BlockKind::PlusOne { one } else { -one };
                let eigen = apply_poly(&FlPoly::linear(root), s).kernel();
                if eigen != b.subspace {
                    out.push(format!("block {i} is not the full {root:?} eigenspace"));
                }
            }
        }
        prod = &prod * &b.charpoly;
        for (j, c) in blocks.iter().enumerate().skip(i + 1) {
            if !space.pairing_matrix(&bv, &c.subspace.basis_vectors()).is_zero() {
                out.push(format!("blocks {i} and {j} are not ω-orthogonal"));
            }
        }
    }
    if prod != charpoly(s)? {
        out.push("block charpolys do not multiply to the charpoly".into());
    }
    Ok(out)
}

/// A cyclic subspace of `w` of dimension `target` on which ω is
/// nondegenerate.
fn split_off(
    space: &SymplecticSpace,
    s: &FlMatrix,
    w: &Subspace,
    target: usize,
    rng: &mut ChaCha8Rng,
    seed: u64,
) -> Result<Vec<Vec<Fl>>> {
    let field = space.field();
    let basis = w.basis_vectors();
    for _ in 0..SPLIT_ATTEMPTS {
        let mut v = space.zero_vec();
        for b in &basis {
            let c = field.elem_u(rng.gen_range(0..field.modulus()));
            for (x, &y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        let mut z = Vec::new();
        let mut span = Subspace::zero(field, space.dim());
        while !span.contains(&v) {
            z.push(v.clone());
            span = Subspace::from_vectors(field, space.dim(), z.clone());
            v = s.mul_vec(&v);
        }
        if z.len() == target && space.is_nondegenerate_on(&z) {
            return Ok(z);
        }
    }
    Err(Error::RetryExhausted {
        what: "cyclic splitting",
        attempts: SPLIT_ATTEMPTS,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::symplectic::{companion_symplectic, random_semisimple_symplectic, SemisimpleProfile};

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn check_blocks(space: &SymplecticSpace, s: &FlMatrix, blocks: &[InvariantBlock]) {
        assert_eq!(decomposition_violations(space, s, blocks).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn semisimplicity_examples() {
        let k = fld(5);
        assert!(is_semisimple(&FlMatrix::identity(k, 2)).unwrap());
        assert!(!is_semisimple(&FlMatrix::from_rows(k, &[vec![1, 1], vec![0, 1]]).unwrap()).unwrap());
        assert!(is_semisimple(&companion_symplectic(&FlPoly::from_i64(k, &[1, 0, 1])).unwrap()).unwrap());
    }

    #[test]
    fn eigen_dim_examples() {
        let k = fld(5);
        assert_eq!(eigen_dims(&FlMatrix::identity(k, 4)), (4, 0));
        assert_eq!(eigen_dims(&FlMatrix::scalar(k, 2, -k.one())), (0, 2));
        assert_eq!(eigen_dims(&companion_symplectic(&FlPoly::from_i64(k, &[1, 0, 1])).unwrap()), (0, 0));
    }

    #[test]
    fn identity_is_one_block() {
        let k = fld(3);
        let sp = SymplecticSpace::standard(k, 2).unwrap();
        let b = invariant_decomposition(&sp, &FlMatrix::identity(k, 4), 0).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].kind, BlockKind::PlusOne);
    }

    #[test]
    fn minus_identity_plus_rotation() {
        let k = fld(3);
        let sp = SymplecticSpace::standard(k, 2).unwrap();
        let prof = SemisimpleProfile { plus: 0, minus: 1, blocks: vec![FlPoly::from_i64(k, &[1, 0, 1])] };
        let s = random_semisimple_symplectic(&sp, &prof, 5).unwrap();
        let b = invariant_decomposition(&sp, &s, 1).unwrap();
        check_blocks(&sp, &s, &b);
        let polys: Vec<FlPoly> = b.iter().map(|x| x.charpoly.clone()).collect();
        assert_eq!(polys, vec![FlPoly::from_i64(k, &[1, 2, 1]), FlPoly::from_i64(k, &[1, 0, 1])]);
    }

    #[test]
    fn repeated_squarefree_factor_splits_in_two() {
        let k = fld(7);
        let sp = SymplecticSpace::standard(k, 2).unwrap();
        let f = FlPoly::from_i64(k, &[1, 1, 1]);
        let prof = SemisimpleProfile { plus: 0, minus: 0, blocks: vec![f.clone(), f.clone()] };
        for seed in 0..10 {
            let s = random_semisimple_symplectic(&sp, &prof, seed).unwrap();
            let b = invariant_decomposition(&sp, &s, seed).unwrap();
            check_blocks(&sp, &s, &b);
            assert_eq!(b.len(), 2);
            assert!(b.iter().all(|x| x.charpoly == f));
        }
    }

    #[test]
    fn non_semisimple_rejected() {
        let k = fld(5);
        let sp = SymplecticSpace::standard(k, 1).unwrap();
        let j = FlMatrix::from_rows(k, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(invariant_decomposition(&sp, &j, 0), Err(Error::NotSemisimple));
    }
}
