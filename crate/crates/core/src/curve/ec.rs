//! Elliptic curve arithmetic over `F_{q^k}` and the Weil pairing.

use rand::Rng;

use crate::algebra::{ExtElem, ExtField};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(ExtElem, ExtElem),
}

/// Short Weierstrass curve `y² = x³ + ax + b` over an [`ExtField`].
#[derive(Clone, Debug)]
pub struct EllipticCurve {
    field: ExtField,
    a: ExtElem,
    b: ExtElem,
}

const PAIRING_ATTEMPTS: usize = 100;

impl EllipticCurve {
    pub fn new(field: ExtField, a: i64, b: i64) -> Self {
        let a = field.from_int(a);
        let b = field.from_int(b);
        Self { field, a, b }
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    fn rhs(&self, x: &ExtElem) -> ExtElem {
        let f = &self.field;
        let x3 = f.mul(&f.square(x), x);
        f.add(&f.add(&x3, &f.mul(&self.a, x)), &self.b)
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => self.field.square(y) == self.rhs(x),
        }
    }

    /// Affine point from small integer coordinates.
    pub fn point(&self, x: i64, y: i64) -> Result<CurvePoint> {
        let p = CurvePoint::Affine(self.field.from_int(x), self.field.from_int(y));
        if self.is_on_curve(&p) {
            Ok(p)
        } else {
            Err(Error::InvalidCurve(format!("({x}, {y}) is not on the curve")))
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), self.field.neg(y)),
        }
    }

    /// Slope of the line through `p` and `q` (tangent if equal), or `None`
    /// when that line is vertical.
    fn slope(&self, p: (&ExtElem, &ExtElem), q: (&ExtElem, &ExtElem)) -> Option<ExtElem> {
        let f = &self.field;
        if p.0 != q.0 {
            let num = f.sub(q.1, p.1);
            let den = f.sub(q.0, p.0);
            return Some(f.mul(&num, &f.inv(&den)?));
        }
        if p.1 != q.1 || p.1.is_zero() {
            return None;
        }
        let num = f.add(&f.scale(&f.square(p.0), f.base().elem(3)), &self.a);
        let den = f.scale(p.1, f.base().elem(2));
        Some(f.mul(&num, &f.inv(&den)?))
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) = (p, q) else {
            return if *p == CurvePoint::Infinity { q.clone() } else { p.clone() };
        };
        let f = &self.field;
        match self.slope((x1, y1), (x2, y2)) {
            None => CurvePoint::Infinity,
            Some(l) => {
                let x3 = f.sub(&f.sub(&f.square(&l), x1), x2);
                let y3 = f.sub(&f.mul(&l, &f.sub(x1, &x3)), y1);
                CurvePoint::Affine(x3, y3)
            }
        }
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &self.neg(q))
    }

    pub fn mul(&self, p: &CurvePoint, mut n: u128) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        let mut base = p.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn random_point<R: Rng>(&self, rng: &mut R) -> CurvePoint {
        let f = &self.field;
        loop {
            let x = f.random(rng);
            let r = self.rhs(&x);
            if let Some(y) = f.sqrt(&r) {
                let y = if rng.gen_bool(0.5) { f.neg(&y) } else { y };
                return CurvePoint::Affine(x, y);
            }
        }
    }

    /// `(x^q, y^q)`.
    pub fn frobenius(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(self.field.frobenius(x), self.field.frobenius(y)),
        }
    }

    /// Every point of `E(F_{q^k})`, infinity first.
    pub fn points(&self) -> Vec<CurvePoint> {
        let f = &self.field;
        let mut out = vec![CurvePoint::Infinity];
        for x in f.elements() {
            let r = self.rhs(&x);
            if r.is_zero() {
                out.push(CurvePoint::Affine(x, r));
            } else if let Some(y) = f.sqrt(&r) {
                out.push(CurvePoint::Affine(x.clone(), f.neg(&y)));
                out.push(CurvePoint::Affine(x, y));
            }
        }
        out
    }

    /// `f_{ℓ,P}(X)` with divisor `ℓ(P) − ℓ(O)`, built as
    /// `f_{i+1} = f_i · l_{iP,P} / v_{(i+1)P}`. `None` if `X` meets a zero or
    /// pole along the way.
    fn miller(&self, p: &CurvePoint, ell: u64, x: &CurvePoint) -> Option<ExtElem> {
        let f = &self.field;
        let (CurvePoint::Affine(px, py), CurvePoint::Affine(xx, xy)) = (p, x) else {
            return None;
        };
        let mut acc = f.one();
        let mut ip = p.clone();
        for _ in 1..ell {
            let CurvePoint::Affine(ix, iy) = &ip else {
                return None;
            };
            let next = self.add(&ip, p);
            let line = match self.slope((ix, iy), (px, py)) {
                Some(l) => f.sub(&f.sub(xy, iy), &f.mul(&l, &f.sub(xx, ix))),
                None => f.sub(xx, ix),
            };
            let vertical = match &next {
                CurvePoint::Infinity => f.one(),
                CurvePoint::Affine(nx, _) => f.sub(xx, nx),
            };
            if line.is_zero() || vertical.is_zero() {
                return None;
            }
            acc = f.mul(&acc, &f.mul(&line, &f.inv(&vertical)?));
            ip = next;
        }
        Some(acc)
    }

    /// `e_ℓ(P, Q) = f_P(Q+S) f_Q(−S) / (f_P(S) f_Q(P−S))` for a random
    /// auxiliary point `S`, retried until every evaluation is defined.
    pub fn weil_pairing<R: Rng>(&self, p: &CurvePoint, q: &CurvePoint, ell: u64, rng: &mut R) -> Result<ExtElem> {
        for pt in [p, q] {
            if self.mul(pt, ell as u128) != CurvePoint::Infinity {
                return Err(Error::NotTorsion(ell));
            }
        }
        let f = &self.field;
        if *p == CurvePoint::Infinity || *q == CurvePoint::Infinity {
            return Ok(f.one());
        }
        for _ in 0..PAIRING_ATTEMPTS {
            let s = self.random_point(rng);
            let vals = (
                self.miller(p, ell, &self.add(q, &s)),
                self.miller(p, ell, &s),
                self.miller(q, ell, &self.sub(p, &s)),
                self.miller(q, ell, &self.neg(&s)),
            );
            if let (Some(a), Some(b), Some(c), Some(d)) = vals {
                let num = f.mul(&a, &d);
                let den = f.mul(&b, &c);
                if let Some(inv) = f.inv(&den) {
                    return Ok(f.mul(&num, &inv));
                }
            }
        }
        Err(Error::RetryExhausted {
            what: "Weil pairing evaluation",
            attempts: PAIRING_ATTEMPTS,
            seed: 0,
        })
    }
}
