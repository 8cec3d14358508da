use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RepError;

/// Dense square complex matrix, row-major on the wire.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl ComplexMatrix {
    /// # Panics
    ///
    /// Panics if `inner` is not square.
    pub fn from_inner(inner: DMatrix<Complex64>) -> Self {
        assert!(inner.is_square(), "ComplexMatrix must be square");
        ComplexMatrix(inner)
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn as_inner(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix(DMatrix::from_element(dim, dim, ZERO))
    }

    pub fn identity(dim: usize) -> Self {
        ComplexMatrix(DMatrix::identity(dim, dim))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        ComplexMatrix(DMatrix::from_fn(n, n, |i, j| if i == j { diag[i] } else { ZERO }))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        ComplexMatrix(DMatrix::from_fn(dim, dim, f))
    }

    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self, RepError> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(RepError::BadShape {
                dim,
                entries: entries.len(),
            });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(RepError::NonFinite);
        }
        Ok(ComplexMatrix(DMatrix::from_row_slice(dim, dim, &entries)))
    }

    /// Real-entried convenience constructor, row-major.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        ComplexMatrix(DMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j], 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn row_major(&self) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.0[(i, j)])
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix(self.0.adjoint())
    }

    pub fn transpose(&self) -> Self {
        ComplexMatrix(self.0.transpose())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix(&self.0 * c)
    }

    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        ComplexMatrix(self.0.kronecker(&other.0))
    }

    /// `⊗` over a list, left factor most significant.
    pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Self {
        factors
            .into_iter()
            .fold(ComplexMatrix::identity(1), |acc, f| acc.kron(f))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexMatrix::identity(self.dim());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.0[(i, j)].norm() <= tol))
    }

    /// Inverse via LU; rejects matrices whose smallest pivot is negligible
    /// relative to the largest.
    pub fn inverse(&self) -> Result<Self, RepError> {
        let lu = self.0.clone().lu();
        let pivots: Vec<f64> = lu.u().diagonal().iter().map(|z| z.norm()).collect();
        let max = pivots.iter().cloned().fold(0.0, f64::max);
        let min = pivots.iter().cloned().fold(f64::INFINITY, f64::min);
        if max == 0.0 || min <= 1e-12 * max {
            return Err(RepError::Singular);
        }
        lu.try_inverse().map(ComplexMatrix).ok_or(RepError::Singular)
    }

    /// `M⁻¹ A M`.
    pub fn conjugate_by(&self, m: &ComplexMatrix) -> Result<Self, RepError> {
        if m.dim() != self.dim() {
            return Err(RepError::DimensionMismatch {
                expected: self.dim(),
                got: m.dim(),
            });
        }
        Ok(&(&m.inverse()? * self) * m)
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        self.0.column(j).iter().cloned().collect()
    }

    pub fn from_columns(columns: &[Vec<Complex64>]) -> Self {
        let n = columns.len();
        ComplexMatrix(DMatrix::from_fn(n, n, |i, j| columns[j][i]))
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.0[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(self.0 * rhs.0)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<Complex64>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim(),
            entries: self.row_major(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        ComplexMatrix::from_row_major(raw.dim, raw.entries).map_err(serde::de::Error::custom)
    }
}
