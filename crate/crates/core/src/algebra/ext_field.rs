//! Finite fields `F_{q^k}` with `q = p^e`, realised as `F_p[x]/(m(x))` for
//! the lexicographically smallest monic irreducible `m` of degree `e·k`.

use rand::Rng;

use super::factor::is_irreducible;
use super::poly::FlPoly;
use super::prime_field::{Fl, PrimeField};
use crate::error::{Error, Result};

/// Element of an [`ExtField`]: coefficients of `1, x, ..., x^{d-1}` mod `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExtElem {
    coeffs: Vec<u64>,
}

impl ExtElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Context for `F_{q^k}`.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: PrimeField,
    e: u32,
    k: u32,
    degree: usize,
    modulus: FlPoly,
    // x^d = Σ reduction[i] x^i
    reduction: Vec<u64>,
    size: u64,
    non_residue: ExtElem,
}

fn ipow(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

/// Builds `F_{q^k}` for `q = p^e`, provided the field has at most `cap`
/// elements.
pub fn build_extension(p: u64, e: u32, k: u32, cap: u128) -> Result<ExtField> {
    if p <= 3 {
        return Err(Error::Precondition(format!(
            "extension fields need a prime p > 3, got {p}"
        )));
    }
    let base = PrimeField::new(p)?;
    if e == 0 || k == 0 {
        return Err(Error::Precondition("e and k must be at least 1".into()));
    }
    let degree = (e * k) as usize;
    let size = ipow(p, e * k).unwrap_or(u128::MAX);
    if size > cap || size > u64::MAX as u128 {
        return Err(Error::CapExceeded { size, cap });
    }
    let modulus = smallest_irreducible(base, degree)?;
    let reduction = (0..degree)
        .map(|i| (-modulus.coeff(i)).value())
        .collect();
    let mut field = ExtField {
        base,
        e,
        k,
        degree,
        modulus,
        reduction,
        size: size as u64,
        non_residue: ExtElem {
            coeffs: vec![0; degree],
        },
    };
    let nr = field
        .elements()
        .skip(1)
        .find(|x| !field.is_square(x))
        .ok_or_else(|| Error::Internal("no quadratic non-residue".into()))?;
    field.non_residue = nr;
    Ok(field)
}

fn smallest_irreducible(base: PrimeField, degree: usize) -> Result<FlPoly> {
    let p = base.modulus();
    let count = ipow(p, degree as u32).unwrap_or(u128::MAX);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = idx;
        for _ in 0..degree {
            coeffs.push(base.elem_u((rest % p as u128) as u64));
            rest /= p as u128;
        }
        coeffs.push(base.one());
        let f = FlPoly::new(base, coeffs);
        if is_irreducible(&f) {
            return Ok(f);
        }
    }
    Err(Error::NoIrreducible(degree))
}

impl ExtField {
    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    /// `q = p^e`, the size of the field the curve is defined over.
    pub fn q(&self) -> u64 {
        self.base.modulus().pow(self.e)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &FlPoly {
        &self.modulus
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> ExtElem {
        self.from_int(1)
    }

    /// Embeds an integer through `F_p`.
    pub fn from_int(&self, n: i64) -> ExtElem {
        let mut out = self.zero();
        out.coeffs[0] = self.base.elem(n).value();
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> ExtElem {
        let mut out = self.zero();
        for (i, &c) in coeffs.iter().enumerate().take(self.degree) {
            out.coeffs[i] = c % self.characteristic();
        }
        out
    }

    /// Element number `idx` in the enumeration order (base-`p` digits).
    pub fn element(&self, mut idx: u64) -> ExtElem {
        let p = self.characteristic();
        let mut out = self.zero();
        for c in out.coeffs.iter_mut() {
            *c = idx % p;
            idx /= p;
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElem> + '_ {
        (0..self.size).map(move |i| self.element(i))
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> ExtElem {
        self.element(rng.gen_range(0..self.size))
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.characteristic();
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.characteristic();
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + p - y) % p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.characteristic();
        let d = self.degree;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (d..2 * d - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &r) in self.reduction.iter().enumerate() {
                let idx = top - d + i;
                prod[idx] = (prod[idx] + c * r) % p;
            }
        }
        prod.truncate(d);
        ExtElem { coeffs: prod }
    }

    pub fn scale(&self, a: &ExtElem, c: Fl) -> ExtElem {
        let p = self.characteristic();
        ExtElem {
            coeffs: a.coeffs.iter().map(|x| x * c.value() % p).collect(),
        }
    }

    pub fn square(&self, a: &ExtElem) -> ExtElem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &ExtElem, mut e: u64) -> ExtElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.size - 2))
        }
    }

    /// The `q`-power Frobenius `x ↦ x^q`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow(a, self.q())
    }

    /// Membership of `F_q` inside `F_{q^k}`.
    pub fn in_base_field(&self, a: &ExtElem) -> bool {
        self.frobenius(a) == *a
    }

    pub fn is_square(&self, a: &ExtElem) -> bool {
        a.is_zero() || self.pow(a, (self.size - 1) / 2) == self.one()
    }

    /// A square root when one exists (Tonelli–Shanks).
    pub fn sqrt(&self, a: &ExtElem) -> Option<ExtElem> {
        if a.is_zero() {
            return Some(self.zero());
        }
        if !self.is_square(a) {
            return None;
        }
        let one = self.one();
        let mut s = 0u32;
        let mut t = self.size - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let mut m = s;
        let mut c = self.pow(&self.non_residue, t);
        let mut r = self.pow(a, t.div_ceil(2));
        let mut u = self.pow(a, t);
        while u != one {
            let mut i = 0;
            let mut probe = u.clone();
            while probe != one {
                probe = self.square(&probe);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            r = self.mul(&r, &b);
            u = self.mul(&u, &c);
        }
        Some(r)
    }
}

/// Discrete log in `μ_ℓ`: the `d ∈ [0, ℓ)` with `zeta0^d = x`.
pub fn dlog_mu_ell(field: &ExtField, zeta0: &ExtElem, x: &ExtElem, ell: PrimeField) -> Result<Fl> {
    let one = field.one();
    if *zeta0 == one || field.pow(zeta0, ell.modulus()) != one {
        return Err(Error::Precondition(
            "zeta0 must have multiplicative order ℓ".into(),
        ));
    }
    let mut acc = one;
    for d in 0..ell.modulus() {
        if acc == *x {
            return Ok(ell.elem_u(d));
        }
        acc = field.mul(&acc, zeta0);
    }
    Err(Error::NotInSubgroup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;

    #[test]
    fn prime_field_case_has_trivial_frobenius() {
        let f = build_extension(7, 1, 1, CAP).unwrap();
        assert_eq!(f.size(), 7);
        for x in f.elements() {
            assert_eq!(f.frobenius(&x), x);
        }
    }

    #[test]
    fn f_7_4_frobenius_order() {
        let f = build_extension(7, 1, 4, CAP).unwrap();
        assert_eq!(f.size(), 2401);
        assert!(is_irreducible(f.modulus()));
        for idx in (0..2401).step_by(37) {
            let x = f.element(idx);
            let mut y = x.clone();
            for _ in 0..4 {
                y = f.frobenius(&y);
            }
            assert_eq!(y, x);
        }
        // Frobenius fixes exactly F_7.
        assert_eq!(f.elements().filter(|x| f.in_base_field(x)).count(), 7);
    }

    #[test]
    fn f25_has_thirteen_squares() {
        let f = build_extension(5, 1, 2, CAP).unwrap();
        assert_eq!(f.elements().filter(|x| f.is_square(x)).count(), 13);
        let mut squares: Vec<_> = f.elements().map(|x| f.square(&x)).collect();
        squares.sort();
        squares.dedup();
        assert_eq!(squares.len(), 13);
    }

    #[test]
    fn sqrt_and_inverse() {
        let f = build_extension(13, 1, 2, CAP).unwrap();
        for x in f.elements() {
            if let Some(r) = f.sqrt(&x) {
                assert_eq!(f.square(&r), x);
            } else {
                assert!(!f.is_square(&x));
            }
            if let Some(i) = f.inv(&x) {
                assert_eq!(f.mul(&i, &x), f.one());
            }
        }
    }

    #[test]
    fn cap_and_small_primes_rejected() {
        assert!(matches!(
            build_extension(7, 1, 8, CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert!(build_extension(3, 1, 1, CAP).is_err());
    }

    #[test]
    fn modulus_is_reproducible() {
        let a = build_extension(5, 2, 1, CAP).unwrap();
        let b = build_extension(5, 1, 2, CAP).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        // t^2 + 2 is the first irreducible quadratic over F_5 in this order
        assert_eq!(a.modulus().coeff_values(), vec![2, 0, 1]);
    }

    #[test]
    fn dlog_scan() {
        // μ_5 ⊂ F_11^×: 3 has order 5 mod 11
        let f = build_extension(11, 1, 1, CAP).unwrap();
        let ell = PrimeField::new(5).unwrap();
        let z = f.from_int(3);
        assert_eq!(dlog_mu_ell(&f, &z, &f.one(), ell).unwrap().value(), 0);
        assert_eq!(dlog_mu_ell(&f, &z, &z, ell).unwrap().value(), 1);
        let z2 = f.mul(&z, &z);
        assert_eq!(dlog_mu_ell(&f, &z, &z2, ell).unwrap().value(), 2);
        assert_eq!(
            dlog_mu_ell(&f, &z, &f.from_int(2), ell),
            Err(Error::NotInSubgroup)
        );
    }
}
