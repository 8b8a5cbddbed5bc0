//! Curve parameters and point counting.

use serde::{Deserialize, Serialize};

use crate::algebra::{build_extension, is_prime, ExtElem, ExtField, PrimeField};
use crate::error::{Error, Result};

/// `y² = x³ + ax + b` over `F_q`, `q = p^e`, studied at the odd prime `ℓ`.
/// `a` and `b` are integers reduced into the prime field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub p: u64,
    pub e: u32,
    pub a: i64,
    pub b: i64,
    pub ell: u64,
    #[serde(default)]
    pub seed: u64,
}

impl CurveSpec {
    pub fn new(p: u64, e: u32, a: i64, b: i64, ell: u64, seed: u64) -> Result<Self> {
        let s = Self { p, e, a, b, ell, seed };
        s.validate()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Self = serde_json::from_str(text).map_err(|e| Error::InvalidCurve(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p <= 3 || !is_prime(self.p) || self.p >= 1 << 32 {
            return Err(Error::InvalidCurve(format!("p = {} must be a prime > 3", self.p)));
        }
        if self.e == 0 {
            return Err(Error::InvalidCurve("e must be at least 1".into()));
        }
        if self.ell < 3 || !is_prime(self.ell) {
            return Err(Error::InvalidCurve(format!("ℓ = {} must be an odd prime", self.ell)));
        }
        if self.ell == self.p {
            return Err(Error::InvalidCurve("ℓ must differ from p".into()));
        }
        let q = self.q()?;
        if q % self.ell as u128 != 1 {
            return Err(Error::InvalidCurve(format!("q = {q} is not 1 mod ℓ = {}", self.ell)));
        }
        let k = self.prime_field();
        let (a, b) = (k.elem(self.a), k.elem(self.b));
        if (k.elem(4) * a * a * a + k.elem(27) * b * b).is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(())
    }

    pub fn q(&self) -> Result<u128> {
        (self.p as u128)
            .checked_pow(self.e)
            .ok_or_else(|| Error::InvalidCurve("q overflows".into()))
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated prime")
    }

    pub fn ell_field(&self) -> PrimeField {
        PrimeField::new(self.ell).expect("validated prime")
    }

    /// The curve over `F_{q^k}`.
    pub fn over_extension(&self, k: u32, cap: u128) -> Result<super::EllipticCurve> {
        let field = build_extension(self.p, self.e, k, cap)?;
        Ok(super::EllipticCurve::new(field, self.a, self.b))
    }
}

fn rhs(field: &ExtField, a: &ExtElem, b: &ExtElem, x: &ExtElem) -> ExtElem {
    let x3 = field.mul(&field.square(x), x);
    field.add(&field.add(&x3, &field.mul(a, x)), b)
}

/// `#E(F_q)` by enumeration and the Frobenius trace `a = q + 1 − #E(F_q)`.
pub fn count_points(spec: &CurveSpec, cap: u128) -> Result<(u64, i64)> {
    spec.validate()?;
    let field = build_extension(spec.p, spec.e, 1, cap)?;
    let a = field.from_int(spec.a);
    let b = field.from_int(spec.b);
    let mut n: u64 = 1;
    for x in field.elements() {
        let r = rhs(&field, &a, &b, &x);
        if r.is_zero() {
            n += 1;
        } else if field.is_square(&r) {
            n += 2;
        }
    }
    let q = field.q();
    let trace = q as i64 + 1 - n as i64;
    if (trace as i128) * (trace as i128) > 4 * q as i128 {
        return Err(Error::Internal(format!("Hasse bound violated: a = {trace}, q = {q}")));
    }
    Ok((n, trace))
}

/// `a_k = α^k + β^k` for the Frobenius eigenvalues, so that
/// `#E(F_{q^k}) = q^k + 1 − a_k`.
pub fn trace_powers(a: i64, q: u64, k: u32) -> i128 {
    let (mut prev, mut cur) = (2i128, a as i128);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = a as i128 * cur - q as i128 * prev;
        prev = cur;
        cur = next;
    }
    cur
}
