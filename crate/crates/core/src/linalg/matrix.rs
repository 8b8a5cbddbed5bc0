//! Dense matrices over `F_ℓ`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::algebra::{Fl, PrimeField};
use crate::error::{Error, Result};

use super::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Fl>, // row-major
}

/// One solution of `Ax = b` together with the null space of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Fl>,
    pub kernel: Subspace,
}

impl FlMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn scalar(field: PrimeField, n: usize, c: Fl) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    /// Builds from signed integer rows; all rows must have equal length.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let fl_rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.elem(x)).collect())
            .collect();
        Self::from_fl_rows(field, fl_rows, rows.first().map_or(0, Vec::len))
    }

    /// Builds from rows of field elements. `cols` is only consulted when
    /// there are no rows.
    pub fn from_fl_rows(field: PrimeField, rows: Vec<Vec<Fl>>, cols: usize) -> Result<Self> {
        let cols = rows.first().map_or(cols, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        let nrows = rows.len();
        Ok(Self {
            field,
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, cols: &[Vec<Fl>], nrows: usize) -> Result<Self> {
        Ok(Self::from_fl_rows(field, cols.to_vec(), nrows)?.transpose())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Fl] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fl> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fl>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `0..ℓ` integers, row-major.
    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.value()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field, self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)])
            })
    }

    pub fn scale(&self, c: Fl) -> Self {
        Self {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &FlMatrix) -> Result<FlMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Fl]) -> Vec<Fl> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// `xᵀ · self · y`.
    pub fn bilinear(&self, x: &[Fl], y: &[Fl]) -> Fl {
        let my = self.mul_vec(y);
        x.iter()
            .zip(&my)
            .fold(self.field.zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn pow(&self, mut e: u64) -> FlMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FlMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] *= inv;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m[(r, j)];
                    m[(i, j)] -= f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<Fl> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)];
            det *= piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                let f = m[(i, c)] * inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m[(c, j)];
                    m[(i, j)] -= f * v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<FlMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field, n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    /// Null space `{x : Ax = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)];
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Solves `Ax = b`; an inconsistent system is reported as
    /// [`Error::Inconsistent`], bad shapes as [`Error::DimensionMismatch`].
    pub fn solve(&self, b: &[Fl]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let bcol = FlMatrix::from_columns(self.field, &[b.to_vec()], self.rows)?;
        let aug = self.hstack(&bcol)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)];
        }
        Ok(Solution {
            particular: x,
            kernel: self.kernel(),
        })
    }

    pub fn hstack(&self, other: &FlMatrix) -> Result<FlMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &FlMatrix) -> Result<FlMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> FlMatrix {
        let mut out = Self::zeros(self.field, rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out[(oi, oj)] = self[(i, j)];
            }
        }
        out
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diag(field: PrimeField, blocks: &[FlMatrix]) -> FlMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(off + i, off + j)] = b[(i, j)];
                }
            }
            off += b.rows;
        }
        out
    }
}

impl Index<(usize, usize)> for FlMatrix {
    type Output = Fl;
    fn index(&self, (i, j): (usize, usize)) -> &Fl {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for FlMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fl {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for FlMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlMatrix[F_{}]{:?}", self.field.modulus(), self.to_u64_rows())
    }
}

impl Mul for &FlMatrix {
    type Output = FlMatrix;
    fn mul(self, rhs: &FlMatrix) -> FlMatrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Mul for FlMatrix {
    type Output = FlMatrix;
    fn mul(self, rhs: FlMatrix) -> FlMatrix {
        &self * &rhs
    }
}

impl Add for &FlMatrix {
    type Output = FlMatrix;
    fn add(self, rhs: &FlMatrix) -> FlMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        FlMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &FlMatrix {
    type Output = FlMatrix;
    fn sub(self, rhs: &FlMatrix) -> FlMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        FlMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl Neg for &FlMatrix {
    type Output = FlMatrix;
    fn neg(self) -> FlMatrix {
        self.scale(-self.field.one())
    }
}
