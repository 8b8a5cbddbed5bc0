//! Exact arithmetic in the cyclotomic field `Q(ζ_ℓ)`.
//!
//! Elements are stored in the power basis `1, ζ, ..., ζ^{ℓ-2}` with rational
//! coefficients, i.e. modulo `Φ_ℓ(t) = 1 + t + ... + t^{ℓ-1}`. Products are
//! formed in `Q[t]/(t^ℓ - 1)` first and then reduced with
//! `ζ^{ℓ-1} = -(1 + ζ + ... + ζ^{ℓ-2})`, so every value has exactly one
//! representation and equality is coefficient-wise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::prime_field::{Fl, PrimeField};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    field: PrimeField,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(field: PrimeField) -> Self {
        let n = field.modulus() as usize - 1;
        Self {
            field,
            coeffs: vec![BigRational::zero(); n],
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: PrimeField, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: PrimeField, q: BigRational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = q;
        out
    }

    /// `ζ^k` for any integer `k` (taken mod `ℓ`).
    pub fn zeta_pow(field: PrimeField, k: i64) -> Self {
        let ell = field.modulus() as i64;
        let mut counts = vec![0i64; ell as usize];
        counts[k.rem_euclid(ell) as usize] = 1;
        Self::from_exponent_counts(field, &counts)
    }

    /// `ψ(z) = ζ^z` for `z ∈ F_ℓ`.
    pub fn psi(z: Fl) -> Self {
        Self::zeta_pow(z.field(), z.value() as i64)
    }

    /// `Σ_e counts[e]·ζ^e` for a length-`ℓ` vector of integer multiplicities.
    pub fn from_exponent_counts(field: PrimeField, counts: &[i64]) -> Self {
        let ell = field.modulus() as usize;
        assert_eq!(counts.len(), ell, "exponent vector must have length ℓ");
        let top = counts[ell - 1];
        let coeffs = counts[..ell - 1]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c - top)))
            .collect();
        Self { field, coeffs }
    }

    fn from_full(field: PrimeField, mut full: Vec<BigRational>) -> Self {
        let top = full.pop().expect("length ℓ vector");
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        Self {
            field,
            coeffs: full,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ell(&self) -> u64 {
        self.field.modulus()
    }

    /// Coefficients of `1, ζ, ..., ζ^{ℓ-2}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Builds from reduced power-basis coefficients (length `ℓ-1`).
    pub fn from_coeffs(field: PrimeField, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != field.modulus() as usize - 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cyclotomic coefficients, got {}",
                field.modulus() - 1,
                coeffs.len()
            )));
        }
        Ok(Self { field, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the value lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if !q.is_integer() {
            return None;
        }
        i64::try_from(q.to_integer()).ok()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.ell(), other.ell()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            field: self.field,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            field: self.field,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let ell = self.ell() as usize;
        let mut full = vec![BigRational::zero(); ell];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[(i + j) % ell] += a * b;
            }
        }
        Ok(Self::from_full(self.field, full))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Multiplication by `ζ^k`.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let ell = self.ell() as usize;
        let shift = k.rem_euclid(ell as i64) as usize;
        let mut full = vec![BigRational::zero(); ell];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(i + shift) % ell] = c.clone();
        }
        Self::from_full(self.field, full)
    }

    /// The Galois automorphism `σ_k: ζ ↦ ζ^k` (`k` prime to `ℓ`).
    pub fn galois(&self, k: u64) -> Self {
        let ell = self.ell() as usize;
        debug_assert!(!(k as usize).is_multiple_of(ell));
        let mut full = vec![BigRational::zero(); ell];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(i * k as usize) % ell] += c;
        }
        Self::from_full(self.field, full)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.ell() - 1)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Field norm `∏_σ σ(x)` to `Q`.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for k in 2..self.ell() {
            acc = &acc * &self.galois(k);
        }
        acc.as_rational().expect("norm lies in Q")
    }

    /// `x^{-1} = (∏_{σ ≠ 1} σ(x)) / N(x)`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut cofactor = Self::one(self.field);
        for k in 2..self.ell() {
            cofactor = &cofactor * &self.galois(k);
        }
        let n = (&cofactor * self).as_rational()?;
        Some(cofactor.scale(&n.recip()))
    }

    /// Coefficients rendered as `"num/den"` strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

/// `G(α, ℓ) = Σ_{z ∈ F_ℓ} ζ^{α z²}`.
pub fn gauss_sum(alpha: Fl) -> Result<CycScalar> {
    if alpha.is_zero() {
        return Err(Error::DegenerateGaussSum);
    }
    let field = alpha.field();
    let mut counts = vec![0i64; field.modulus() as usize];
    for z in field.elements() {
        counts[(alpha * z * z).value() as usize] += 1;
    }
    Ok(CycScalar::from_exponent_counts(field, &counts))
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coef}ζ")?,
                _ => write!(f, "{coef}ζ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[ℓ={}]({})", self.ell(), self)
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.checked_add(rhs).expect("cyclotomic operands over different ℓ")
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.checked_sub(rhs).expect("cyclotomic operands over different ℓ")
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.checked_mul(rhs).expect("cyclotomic operands over different ℓ")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycScalarRepr {
    ell: u64,
    coeffs: Vec<String>,
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycScalarRepr {
            ell: self.ell(),
            coeffs: self.coeff_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycScalarRepr::deserialize(d)?;
        let field = PrimeField::new(repr.ell).map_err(D::Error::custom)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycScalar::from_coeffs(field, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fld(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn int(field: PrimeField, n: i64) -> CycScalar {
        CycScalar::from_integer(field, n)
    }

    #[test]
    fn zeta_has_order_ell() {
        for p in [3u64, 5, 7, 11] {
            let k = fld(p);
            let z = CycScalar::zeta_pow(k, 1);
            assert_eq!(z.pow(p), CycScalar::one(k));
            assert_ne!(z.pow(1), CycScalar::one(k));
        }
    }

    #[test]
    fn cyclotomic_relation() {
        for p in [3u64, 5, 7, 11] {
            let k = fld(p);
            let sum = (0..p as i64)
                .map(|j| CycScalar::zeta_pow(k, j))
                .fold(CycScalar::zero(k), |a, b| &a + &b);
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn one_plus_two_zeta_squared_is_minus_three() {
        let k = fld(3);
        let x = &int(k, 1) + &CycScalar::zeta_pow(k, 1).scale_int(2);
        assert_eq!(&x * &x, int(k, -3));
    }

    #[test]
    fn gauss_sum_small_cases() {
        let k = fld(3);
        // 1 + 2ζ
        let g1 = gauss_sum(k.elem(1)).unwrap();
        assert_eq!(g1, &int(k, 1) + &CycScalar::zeta_pow(k, 1).scale_int(2));
        let g2 = gauss_sum(k.elem(2)).unwrap();
        assert_eq!(g2, -&g1);
        assert_eq!(gauss_sum(k.zero()), Err(Error::DegenerateGaussSum));
    }

    #[test]
    fn gauss_sum_square_law() {
        for p in [3u64, 5, 7, 11, 13] {
            let k = fld(p);
            let g = gauss_sum(k.one()).unwrap();
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(&g * &g, int(k, sign * p as i64), "ℓ = {p}");
        }
    }

    #[test]
    fn gauss_sum_twisted_by_legendre() {
        for p in [3u64, 5, 7, 11] {
            let k = fld(p);
            let g1 = gauss_sum(k.one()).unwrap();
            for a in k.elements().skip(1) {
                assert_eq!(gauss_sum(a).unwrap(), g1.scale_int(a.legendre() as i64));
            }
        }
    }

    #[test]
    fn conjugation_is_involutive_automorphism() {
        let k = fld(7);
        let a = &int(k, 2) + &CycScalar::zeta_pow(k, 3).scale_int(-5);
        let b = &CycScalar::zeta_pow(k, 1) + &CycScalar::zeta_pow(k, 6).scale_int(4);
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn inverse_round_trip() {
        let k = fld(5);
        let a = &int(k, 3) + &CycScalar::zeta_pow(k, 2).scale_int(-1);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CycScalar::one(k));
        assert!(CycScalar::zero(k).inverse().is_none());
    }

    #[test]
    fn mixed_ell_rejected() {
        let a = CycScalar::one(fld(3));
        let b = CycScalar::one(fld(5));
        assert_eq!(a.checked_add(&b), Err(Error::ModulusMismatch(3, 5)));
        assert_eq!(a.checked_mul(&b), Err(Error::ModulusMismatch(3, 5)));
    }

    #[test]
    fn serde_round_trip() {
        let k = fld(5);
        let a = gauss_sum(k.one()).unwrap().scale(&BigRational::new(1.into(), 5.into()));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"ell":5,"coeffs":["-1/5","0/1","-2/5","-2/5"]}"#);
        let back: CycScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
