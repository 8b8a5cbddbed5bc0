//! Dense univariate polynomials over `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::prime_field::{Fl, PrimeField};
use crate::error::{Error, Result};

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` over `F_p`, stored low-to-high
/// with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlPoly {
    field: PrimeField,
    coeffs: Vec<Fl>,
}

impl FlPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<Fl>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    /// Builds from signed integer coefficients, lowest degree first.
    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Fl) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: PrimeField) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `t - c`.
    pub fn linear(c: Fl) -> Self {
        Self::new(c.field(), vec![-c, c.field().one()])
    }

    pub fn monomial(c: Fl, degree: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(c.field(), coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Fl] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Fl {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<Fl> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: Fl) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn eval(&self, x: Fl) -> Fl {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * self.field.elem_u(i as u64))
            .collect();
        Self::new(self.field, coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &FlPoly) -> (FlPoly, FlPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(self.field), Self::zero(self.field));
        };
        if nd < dd {
            return (Self::zero(self.field), self.clone());
        }
        let inv_lc = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd] * inv_lc;
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        rem.truncate(dd);
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &FlPoly) -> FlPoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn exact_div(&self, divisor: &FlPoly) -> FlPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &FlPoly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(a: &FlPoly, b: &FlPoly) -> FlPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut e: u64) -> FlPoly {
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

    pub fn mul_mod(&self, other: &FlPoly, modulus: &FlPoly) -> FlPoly {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, e: u64, modulus: &FlPoly) -> FlPoly {
        self.pow_mod_big(&BigUint::from(e), modulus)
    }

    pub fn pow_mod_big(&self, e: &BigUint, modulus: &FlPoly) -> FlPoly {
        let base = self.rem(modulus);
        let mut acc = Self::one(self.field).rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus);
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// `a_i = a_{d-i}` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Monic normalisation of `t^{deg h} h(1/t)`, whose roots are the
    /// inverses of the roots of `h`.
    pub fn reciprocal(&self) -> Result<FlPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let rev: Vec<Fl> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::new(self.field, rev).monic())
    }

    /// `gcd(f, f') = 1`. Constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        Self::gcd(self, &self.derivative()).is_one()
    }

    /// Splits `f = (t+1)^a (t-1)^b f̄` with `f̄(±1) ≠ 0`.
    pub fn strip_unit_factors(&self) -> (usize, usize, FlPoly) {
        let one = self.field.one();
        let plus = Self::linear(-one);
        let minus = Self::linear(one);
        let mut rest = self.clone();
        let mut a = 0;
        let mut b = 0;
        if rest.is_zero() {
            return (0, 0, rest);
        }
        while rest.deg() > 0 && rest.eval(-one).is_zero() {
            rest = rest.exact_div(&plus);
            a += 1;
        }
        while rest.deg() > 0 && rest.eval(one).is_zero() {
            rest = rest.exact_div(&minus);
            b += 1;
        }
        (a, b, rest)
    }

    /// Coefficient values `0..p`, lowest degree first.
    pub fn coeff_values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }
}

impl fmt::Display for FlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "t")?,
                (1, v) => write!(f, "{v}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, v) => write!(f, "{v}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlPoly[F_{}]({})", self.field.modulus(), self)
    }
}

impl Add for &FlPoly {
    type Output = FlPoly;
    fn add(self, rhs: &FlPoly) -> FlPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FlPoly::new(
            self.field,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &FlPoly {
    type Output = FlPoly;
    fn sub(self, rhs: &FlPoly) -> FlPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FlPoly::new(
            self.field,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl Mul for &FlPoly {
    type Output = FlPoly;
    fn mul(self, rhs: &FlPoly) -> FlPoly {
        if self.is_zero() || rhs.is_zero() {
            return FlPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FlPoly::new(self.field, out)
    }
}

impl Neg for &FlPoly {
    type Output = FlPoly;
    fn neg(self) -> FlPoly {
        FlPoly::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FlPoly {
            type Output = FlPoly;
            fn $m(self, rhs: FlPoly) -> FlPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
