//! Oriented Lagrangians and pairs of Lagrangians.

use crate::algebra::Fl;
use crate::error::{Error, Result};
use crate::linalg::{enumerate_span, FlMatrix, Subspace};

use super::space::SymplecticSpace;

/// A Lagrangian `M` with a nonzero top form `o_M = orientation · (b_1 ∧ … ∧ b_n)`
/// where `b_i` are the stored basis rows.
#[derive(Clone, Debug)]
pub struct OrientedLagrangian {
    basis: Vec<Vec<Fl>>,
    orientation: Fl,
    span: Subspace,
}

impl PartialEq for OrientedLagrangian {
    /// Equality of the oriented subspaces, not of the stored data.
    fn eq(&self, other: &Self) -> bool {
        self.normal_form() == other.normal_form()
    }
}

impl Eq for OrientedLagrangian {}

impl OrientedLagrangian {
    pub fn new(space: &SymplecticSpace, basis: Vec<Vec<Fl>>, orientation: Fl) -> Result<Self> {
        if orientation.is_zero() {
            return Err(Error::NotLagrangian("orientation must be nonzero".into()));
        }
        if basis.len() != space.n() || basis.iter().any(|b| b.len() != space.dim()) {
            return Err(Error::NotLagrangian(format!(
                "need {} vectors of length {}",
                space.n(),
                space.dim()
            )));
        }
        let span = Subspace::from_vectors(space.field(), space.dim(), basis.clone());
        if span.dim() != space.n() {
            return Err(Error::NotLagrangian("basis vectors are dependent".into()));
        }
        if !space.is_isotropic(&span) {
            return Err(Error::NotLagrangian("ω does not vanish on the span".into()));
        }
        Ok(Self {
            basis,
            orientation,
            span,
        })
    }

    /// `span{v_1..v_n}` oriented by `v_1 ∧ … ∧ v_n`.
    pub fn standard(space: &SymplecticSpace) -> Self {
        let basis = (0..space.n()).map(|i| space.unit(i)).collect();
        Self::new(space, basis, space.field().one()).expect("standard Lagrangian")
    }

    pub fn basis(&self) -> &[Vec<Fl>] {
        &self.basis
    }

    pub fn orientation(&self) -> Fl {
        self.orientation
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Same oriented Lagrangian with orientation multiplied by `u`.
    pub fn rescaled(&self, u: Fl) -> Self {
        assert!(!u.is_zero());
        Self {
            basis: self.basis.clone(),
            orientation: self.orientation * u,
            span: self.span.clone(),
        }
    }

    /// `α` with `o_M = α · (c_1 ∧ … ∧ c_n)` for another basis `c` of `M`.
    pub fn orientation_relative_to(&self, other_basis: &[Vec<Fl>]) -> Result<Fl> {
        let field = self.span.field();
        let n = self.dim();
        let c = FlMatrix::from_fl_rows(field, other_basis.to_vec(), self.span.ambient())?;
        // rows b_i = Σ_j P_ij c_j, so b_1∧…∧b_n = det P · c_1∧…∧c_n
        let ct = c.transpose();
        let mut p = FlMatrix::zeros(field, n, n);
        for (i, b) in self.basis.iter().enumerate() {
            let coords = ct.solve(b).map_err(|_| {
                Error::NotLagrangian("basis does not span the Lagrangian".into())
            })?;
            for j in 0..n {
                p[(i, j)] = coords.particular[j];
            }
        }
        let d = p.det()?;
        if d.is_zero() || c.rank() != n {
            return Err(Error::NotLagrangian("basis does not span the Lagrangian".into()));
        }
        Ok(self.orientation * d)
    }

    /// Canonical echelon basis plus the orientation relative to it.
    pub fn normal_form(&self) -> (Subspace, Fl) {
        let alpha = self
            .orientation_relative_to(&self.span.basis_vectors())
            .expect("canonical basis spans");
        (self.span.clone(), alpha)
    }

    /// `gM` with `o_{gM} = g(o_M)`.
    pub fn transform(&self, g: &FlMatrix) -> Self {
        let basis: Vec<Vec<Fl>> = self.basis.iter().map(|b| g.mul_vec(b)).collect();
        let span = Subspace::from_vectors(self.span.field(), self.span.ambient(), basis.clone());
        Self {
            basis,
            orientation: self.orientation,
            span,
        }
    }

    /// A Lagrangian complement `x'_1..x'_n` with `ω(b_i, x'_j) = δ_ij`.
    pub fn dual_complement(&self, space: &SymplecticSpace) -> Vec<Vec<Fl>> {
        let field = space.field();
        let n = self.dim();
        let rows = FlMatrix::from_fl_rows(field, self.basis.clone(), space.dim()).unwrap();
        let a = &rows * space.gram();
        let xs: Vec<Vec<Fl>> = (0..n)
            .map(|j| {
                let mut e = vec![field.zero(); n];
                e[j] = field.one();
                a.solve(&e).expect("ω pairs M nondegenerately with V/M").particular
            })
            .collect();
        let half = field.half();
        xs.iter()
            .map(|xj| {
                let mut out = xj.clone();
                for (xk, mk) in xs.iter().zip(&self.basis) {
                    let c = half * space.omega(xj, xk);
                    for (o, &m) in out.iter_mut().zip(mk) {
                        *o -= c * m;
                    }
                }
                out
            })
            .collect()
    }
}

/// `I = M ∩ L`, `n_I` and coset representatives of `I` in `M`.
#[derive(Clone, Debug)]
pub struct LagrangianPair {
    pub intersection: Subspace,
    pub n_i: usize,
    /// Vectors of `M` completing a basis of `I` to one of `M`.
    pub complement_m: Vec<Vec<Fl>>,
    /// Vectors of `L` completing a basis of `I` to one of `L`.
    pub complement_l: Vec<Vec<Fl>>,
}

impl LagrangianPair {
    /// One representative for each coset of `I` in `M`.
    pub fn coset_reps(&self) -> Vec<Vec<Fl>> {
        let i = &self.intersection;
        enumerate_span(i.field(), i.ambient(), &self.complement_m)
    }
}

pub fn lagrangian_pair_data(
    space: &SymplecticSpace,
    m: &OrientedLagrangian,
    l: &OrientedLagrangian,
) -> Result<LagrangianPair> {
    for x in [m, l] {
        if !space.is_lagrangian(x.span()) {
            return Err(Error::NotLagrangian("input is not Lagrangian in this space".into()));
        }
    }
    let intersection = m.span().intersection(l.span())?;
    let n_i = space.n() - intersection.dim();
    let iperp = space.perp(&intersection)?;
    debug_assert_eq!((iperp.dim() - intersection.dim()) / 2, n_i);
    if (iperp.dim() - intersection.dim()) != 2 * n_i {
        return Err(Error::Internal("dim(I^⊥/I) disagrees with 2 n_I".into()));
    }
    let complement_m = intersection.complement_within(m.span())?;
    let complement_l = intersection.complement_within(l.span())?;
    Ok(LagrangianPair {
        intersection,
        n_i,
        complement_m,
        complement_l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn space(p: u64, n: usize) -> SymplecticSpace {
        SymplecticSpace::standard(PrimeField::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn validation() {
        let s = space(5, 2);
        let k = s.field();
        assert!(OrientedLagrangian::new(&s, vec![s.unit(0), s.unit(2)], k.one()).is_err());
        assert!(OrientedLagrangian::new(&s, vec![s.unit(0), s.unit(0)], k.one()).is_err());
        assert!(OrientedLagrangian::new(&s, vec![s.unit(0), s.unit(1)], k.zero()).is_err());
        assert!(OrientedLagrangian::new(&s, vec![s.unit(0), s.unit(3)], k.one()).is_ok());
    }

    #[test]
    fn rescaling_basis_is_same_oriented_lagrangian() {
        let s = space(7, 2);
        let k = s.field();
        let m = OrientedLagrangian::standard(&s);
        let scaled: Vec<Vec<Fl>> = vec![s.unit(0).iter().map(|&x| x * k.elem(3)).collect(), s.unit(1)];
        let m2 = OrientedLagrangian::new(&s, scaled, k.elem(3).inv().unwrap()).unwrap();
        assert_eq!(m, m2);
        assert_ne!(m, m.rescaled(k.elem(2)));
    }

    #[test]
    fn pair_data_examples() {
        let s = space(5, 2);
        let k = s.field();
        let m = OrientedLagrangian::standard(&s);
        let p = lagrangian_pair_data(&s, &m, &m).unwrap();
        assert_eq!((p.intersection.dim(), p.n_i, p.coset_reps().len()), (2, 0, 1));

        let s1 = space(5, 1);
        let m1 = OrientedLagrangian::standard(&s1);
        let l1 = OrientedLagrangian::new(&s1, vec![s1.unit(1)], k.one()).unwrap();
        let p = lagrangian_pair_data(&s1, &m1, &l1).unwrap();
        assert_eq!((p.intersection.dim(), p.n_i, p.coset_reps().len()), (0, 1, 5));

        let l = OrientedLagrangian::new(&s, vec![s.unit(0), s.unit(3)], k.one()).unwrap();
        let p = lagrangian_pair_data(&s, &m, &l).unwrap();
        assert_eq!((p.intersection.dim(), p.n_i), (1, 1));
        let reps = p.coset_reps();
        assert_eq!(reps.len(), 5);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                let d: Vec<Fl> = a.iter().zip(b).map(|(&x, &y)| x - y).collect();
                assert!(!p.intersection.contains(&d));
            }
        }
    }

    #[test]
    fn dual_complement_is_lagrangian_and_dual() {
        for seed in 0..20 {
            let s = space(7, 2);
            let g = crate::symplectic::random_symplectic(&s, seed);
            let m = OrientedLagrangian::standard(&s).transform(&g);
            let x = m.dual_complement(&s);
            let comp = Subspace::from_vectors(s.field(), 4, x.clone());
            assert!(s.is_lagrangian(&comp));
            assert!(s.pairing_matrix(m.basis(), &x).is_identity());
        }
    }

    #[test]
    fn standard_dual_complement_is_w_span() {
        let s = space(3, 2);
        let m = OrientedLagrangian::standard(&s);
        assert_eq!(m.dual_complement(&s), vec![s.unit(2), s.unit(3)]);
    }
}
