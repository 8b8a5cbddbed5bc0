//! Matrices over `Q(ζ_ℓ)` of the form `c · N` with `c` a cyclotomic scalar
//! and `N` a matrix over `Z[ζ_ℓ]`.
//!
//! Entries of `N` are length-`ℓ` vectors of exponent multiplicities,
//! `Σ_e n_e ζ^e`. They are reduced so that `n_{ℓ−1} = 0`, which makes the
//! representation unique.

use std::fmt;

use crate::algebra::{CycScalar, Fl, PrimeField};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct CycMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    scale: CycScalar,
    counts: Vec<i64>,
}

impl CycMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        let ell = field.modulus() as usize;
        Self {
            field,
            rows,
            cols,
            scale: CycScalar::one(field),
            counts: vec![0; rows * cols * ell],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.add_zeta(i, i, field.zero(), 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ell(&self) -> usize {
        self.field.modulus() as usize
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The common scalar factor `c`.
    pub fn scale(&self) -> &CycScalar {
        &self.scale
    }

    pub fn with_scale(mut self, c: CycScalar) -> Self {
        self.scale = c;
        self
    }

    pub fn scaled(&self, c: &CycScalar) -> Self {
        let mut out = self.clone();
        out.scale = &self.scale * c;
        out
    }

    fn slot(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        let ell = self.ell();
        let s = (i * self.cols + j) * ell;
        s..s + ell
    }

    /// Adds `mult · ζ^e` to the integral entry `(i, j)`.
    pub fn add_zeta(&mut self, i: usize, j: usize, e: Fl, mult: i64) {
        let ell = self.ell();
        let base = (i * self.cols + j) * ell;
        let e = e.value() as usize;
        if e == ell - 1 {
            for k in 0..ell - 1 {
                self.counts[base + k] -= mult;
            }
        } else {
            self.counts[base + e] += mult;
        }
    }

    /// Integral entry `(i, j)` as reduced exponent multiplicities.
    pub fn integral_entry(&self, i: usize, j: usize) -> &[i64] {
        &self.counts[self.slot(i, j)]
    }

    fn entry_is_zero(&self, i: usize, j: usize) -> bool {
        self.integral_entry(i, j).iter().all(|&c| c == 0)
    }

    /// Entry `(i, j)` of `c · N`.
    pub fn entry(&self, i: usize, j: usize) -> CycScalar {
        &self.scale * &CycScalar::from_exponent_counts(self.field, self.integral_entry(i, j))
    }

    pub fn checked_mul(&self, rhs: &CycMatrix) -> Result<CycMatrix> {
        if self.field != rhs.field {
            return Err(Error::ModulusMismatch(self.field.modulus(), rhs.field.modulus()));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let ell = self.ell();
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        out.scale = &self.scale * &rhs.scale;
        let mut acc = vec![0i64; ell];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entry_is_zero(i, k) {
                    continue;
                }
                let a = self.integral_entry(i, k).to_vec();
                for j in 0..rhs.cols {
                    if rhs.entry_is_zero(k, j) {
                        continue;
                    }
                    let b = rhs.integral_entry(k, j);
                    acc.iter_mut().for_each(|x| *x = 0);
                    for (e1, &x) in a.iter().enumerate() {
                        if x == 0 {
                            continue;
                        }
                        for (e2, &y) in b.iter().enumerate() {
                            if y != 0 {
                                acc[(e1 + e2) % ell] += x * y;
                            }
                        }
                    }
                    let top = acc[ell - 1];
                    let slot = out.slot(i, j);
                    for (o, &x) in out.counts[slot].iter_mut().zip(&acc) {
                        *o += x - top;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycScalar {
        let ell = self.ell();
        let mut sum = vec![0i64; ell];
        for i in 0..self.rows.min(self.cols) {
            for (s, &c) in sum.iter_mut().zip(self.integral_entry(i, i)) {
                *s += c;
            }
        }
        &self.scale * &CycScalar::from_exponent_counts(self.field, &sum)
    }

    /// Exact equality of the represented matrices.
    pub fn exact_eq(&self, other: &CycMatrix) -> bool {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        if self.scale == other.scale {
            return self.scale.is_zero() || self.counts == other.counts;
        }
        (0..self.rows).all(|i| (0..self.cols).all(|j| self.entry(i, j) == other.entry(i, j)))
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        if self.rows == 0 {
            return true;
        }
        let d = self.integral_entry(0, 0).to_vec();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i == j {
                    if self.integral_entry(i, j) != d.as_slice() {
                        return false;
                    }
                } else if !self.entry_is_zero(i, j) {
                    return false;
                }
            }
        }
        self.entry(0, 0) == CycScalar::one(self.field)
    }

    /// One nonzero entry per column and per row, each `c·ζ^e`.
    #[allow(clippy::needless_range_loop)]
    pub fn is_monomial(&self) -> bool {
        let ell = self.ell();
        let is_root = |v: &[i64]| {
            let nz: Vec<usize> = (0..ell).filter(|&k| v[k] != 0).collect();
            (nz.len() == 1 && v[nz[0]] == 1) || (nz.len() == ell - 1 && nz.iter().all(|&k| v[k] == -1))
        };
        let mut row_hits = vec![0usize; self.rows];
        for j in 0..self.cols {
            let mut hits = 0;
            for i in 0..self.rows {
                if !self.entry_is_zero(i, j) {
                    if !is_root(self.integral_entry(i, j)) {
                        return false;
                    }
                    hits += 1;
                    row_hits[i] += 1;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        row_hits.iter().all(|&h| h == 1)
    }

    /// `c` with `self = c · other`, if one exists.
    pub fn scalar_ratio(&self, other: &CycMatrix) -> Option<CycScalar> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        let (i, j) = (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| !other.entry_is_zero(i, j))?;
        let c = &self.entry(i, j) * &other.entry(i, j).inverse()?;
        self.exact_eq(&other.scaled(&c)).then_some(c)
    }

    /// Dense entries `c · N_{ij}`.
    pub fn entries(&self) -> Vec<Vec<CycScalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} scale {}", self.rows, self.cols, self.scale)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| CycScalar::from_exponent_counts(self.field, self.integral_entry(i, j)).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
