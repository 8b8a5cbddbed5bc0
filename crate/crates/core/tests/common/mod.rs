#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weiltrace::algebra::{Fl, PrimeField};
use weiltrace::heisenberg::RepSpace;
use weiltrace::linalg::{FlMatrix, Subspace};
use weiltrace::symplectic::{random_symplectic, OrientedLagrangian, SymplecticSpace};

pub const CAP: u128 = 1 << 16;

pub fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn space(p: u64, n: usize) -> SymplecticSpace {
    SymplecticSpace::standard(field(p), n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(k: PrimeField, d: usize, rng: &mut ChaCha8Rng) -> Vec<Fl> {
    (0..d).map(|_| k.elem_u(rng.gen_range(0..k.modulus()))).collect()
}

pub fn random_unit(k: PrimeField, rng: &mut ChaCha8Rng) -> Fl {
    k.elem_u(rng.gen_range(1..k.modulus()))
}

/// Random oriented Lagrangian: image of the standard one with a random
/// basis change and orientation.
pub fn random_lagrangian(sp: &SymplecticSpace, rng: &mut ChaCha8Rng) -> OrientedLagrangian {
    let h = random_symplectic(sp, rng.gen());
    let base = OrientedLagrangian::standard(sp).transform(&h);
    base.rescaled(random_unit(sp.field(), rng))
}

/// Random complement to `m`, not necessarily Lagrangian.
pub fn random_complement(sp: &SymplecticSpace, m: &OrientedLagrangian, rng: &mut ChaCha8Rng) -> Vec<Vec<Fl>> {
    loop {
        let c: Vec<Vec<Fl>> = (0..sp.n()).map(|_| random_vec(sp.field(), sp.dim(), rng)).collect();
        let all = m.span().sum(&Subspace::from_vectors(sp.field(), sp.dim(), c.clone())).unwrap();
        if all.dim() == sp.dim() {
            return c;
        }
    }
}

pub fn random_rep(sp: &SymplecticSpace, rng: &mut ChaCha8Rng) -> RepSpace {
    let m = random_lagrangian(sp, rng);
    if rng.gen_bool(0.5) {
        RepSpace::with_dual_complement(sp, m, CAP).unwrap()
    } else {
        let c = random_complement(sp, &m, rng);
        RepSpace::new(sp, m, c, CAP).unwrap()
    }
}

pub fn from_rows(k: PrimeField, rows: &[Vec<i64>]) -> FlMatrix {
    FlMatrix::from_rows(k, rows).unwrap()
}
