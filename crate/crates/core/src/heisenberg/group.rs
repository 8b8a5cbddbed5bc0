//! The Heisenberg group `H(V) = F_ℓ × V`.

use crate::algebra::Fl;
use crate::linalg::FlMatrix;
use crate::symplectic::SymplecticSpace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisenbergElement {
    pub lambda: Fl,
    pub v: Vec<Fl>,
}

impl HeisenbergElement {
    pub fn new(lambda: Fl, v: Vec<Fl>) -> Self {
        Self { lambda, v }
    }

    pub fn identity(space: &SymplecticSpace) -> Self {
        Self::new(space.field().zero(), space.zero_vec())
    }

    pub fn central(space: &SymplecticSpace, z: Fl) -> Self {
        Self::new(z, space.zero_vec())
    }

    pub fn vector(space: &SymplecticSpace, v: Vec<Fl>) -> Self {
        Self::new(space.field().zero(), v)
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.lambda, self.v.iter().map(|&x| -x).collect())
    }

    /// `g·(λ, v) = (λ, gv)`.
    pub fn act(&self, g: &FlMatrix) -> Self {
        Self::new(self.lambda, g.mul_vec(&self.v))
    }

    pub fn is_central(&self) -> bool {
        self.v.iter().all(|x| x.is_zero())
    }

    /// Every element of `H(V)`, `ℓ^{2n+1}` of them.
    pub fn enumerate(space: &SymplecticSpace) -> Vec<Self> {
        let field = space.field();
        let all = crate::linalg::Subspace::full(field, space.dim()).enumerate();
        field
            .elements()
            .flat_map(|z| all.iter().map(move |v| Self::new(z, v.clone())))
            .collect()
    }
}

/// `(λ, a)∘(μ, b) = (λ + μ + ½ω(a, b), a + b)`.
pub fn heis_mul(space: &SymplecticSpace, h1: &HeisenbergElement, h2: &HeisenbergElement) -> HeisenbergElement {
    let half = space.field().half();
    let lambda = h1.lambda + h2.lambda + half * space.omega(&h1.v, &h2.v);
    let v = h1.v.iter().zip(&h2.v).map(|(&a, &b)| a + b).collect();
    HeisenbergElement::new(lambda, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn product_examples() {
        let k = PrimeField::new(3).unwrap();
        let s = SymplecticSpace::standard(k, 1).unwrap();
        let v1 = s.unit(0);
        let w1 = s.unit(1);
        let p = heis_mul(&s, &HeisenbergElement::vector(&s, v1.clone()), &HeisenbergElement::vector(&s, w1.clone()));
        assert_eq!(p, HeisenbergElement::new(k.elem(2), vec![k.one(), k.one()]));

        let a = HeisenbergElement::vector(&s, v1.clone());
        assert_eq!(heis_mul(&s, &a, &a.inverse()), HeisenbergElement::identity(&s));

        let z = HeisenbergElement::central(&s, k.elem(1));
        let b = HeisenbergElement::new(k.elem(2), w1);
        assert_eq!(heis_mul(&s, &z, &b), HeisenbergElement::new(k.elem(0), b.v.clone()));
    }

    #[test]
    fn group_axioms_exhaustive() {
        let k = PrimeField::new(3).unwrap();
        let s = SymplecticSpace::standard(k, 1).unwrap();
        let all = HeisenbergElement::enumerate(&s);
        assert_eq!(all.len(), 27);
        let e = HeisenbergElement::identity(&s);
        for a in &all {
            assert_eq!(heis_mul(&s, a, &e), *a);
            assert_eq!(heis_mul(&s, &e, a), *a);
            assert_eq!(heis_mul(&s, a, &a.inverse()), e);
            for b in &all {
                let ab = heis_mul(&s, a, b);
                let commutes = ab == heis_mul(&s, b, a);
                // exactly the central elements commute with everything
                if a.is_central() {
                    assert!(commutes);
                }
                for c in &all {
                    assert_eq!(heis_mul(&s, &ab, c), heis_mul(&s, a, &heis_mul(&s, b, c)));
                }
            }
            if !a.is_central() {
                assert!(all.iter().any(|b| heis_mul(&s, a, b) != heis_mul(&s, b, a)));
            }
        }
    }
}
