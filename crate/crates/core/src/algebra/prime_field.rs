//! Prime fields `F_p` for odd primes `p`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Deterministic trial-division primality test, fine for the moduli used here
/// (well below `2^32`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field `F_p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    /// `p` must be an odd prime below `2^32`; `p = 2` is rejected because
    /// `½` does not exist there.
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self { modulus: p })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(&self, x: i64) -> Fl {
        let p = self.modulus as i64;
        Fl {
            value: x.rem_euclid(p) as u64,
            modulus: self.modulus,
        }
    }

    pub fn elem_u(&self, x: u64) -> Fl {
        Fl {
            value: x % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn zero(&self) -> Fl {
        self.elem_u(0)
    }

    pub fn one(&self) -> Fl {
        self.elem_u(1)
    }

    /// `½ = (p+1)/2`.
    pub fn half(&self) -> Fl {
        self.elem_u(self.modulus.div_ceil(2))
    }

    /// All elements `0, 1, ..., p-1` in order.
    pub fn elements(&self) -> impl Iterator<Item = Fl> + '_ {
        (0..self.modulus).map(move |v| self.elem_u(v))
    }

    /// Legendre symbol of an integer modulo `p`.
    pub fn legendre(&self, x: i64) -> i32 {
        self.elem(x).legendre()
    }
}

/// An element of `F_p`; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fl {
    value: u64,
    modulus: u64,
}

impl Fl {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn field(self) -> PrimeField {
        PrimeField {
            modulus: self.modulus,
        }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn centered(self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(self, mut e: u64) -> Fl {
        let mut base = self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fl> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    /// `0` for zero, `+1` for nonzero squares, `-1` otherwise (Euler's criterion).
    pub fn legendre(self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.pow((self.modulus - 1) / 2).is_one() {
            1
        } else {
            -1
        }
    }

    #[inline]
    fn check(self, other: Fl) {
        debug_assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }
}

impl fmt::Debug for Fl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fl {
    type Output = Fl;
    #[inline]
    fn add(self, rhs: Fl) -> Fl {
        self.check(rhs);
        let s = self.value + rhs.value;
        Fl {
            value: if s >= self.modulus { s - self.modulus } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for Fl {
    type Output = Fl;
    #[inline]
    fn sub(self, rhs: Fl) -> Fl {
        self.check(rhs);
        Fl {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + self.modulus - rhs.value
            },
            modulus: self.modulus,
        }
    }
}

impl Mul for Fl {
    type Output = Fl;
    #[inline]
    fn mul(self, rhs: Fl) -> Fl {
        self.check(rhs);
        Fl {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Div for Fl {
    type Output = Fl;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fl) -> Fl {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for Fl {
    type Output = Fl;
    #[inline]
    fn neg(self) -> Fl {
        Fl {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl AddAssign for Fl {
    fn add_assign(&mut self, rhs: Fl) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fl {
    fn sub_assign(&mut self, rhs: Fl) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fl {
    fn mul_assign(&mut self, rhs: Fl) {
        *self = *self * rhs;
    }
}

/// Legendre symbol of `a` in `F_ℓ`.
pub fn legendre_symbol(a: Fl) -> i32 {
    a.legendre()
}
