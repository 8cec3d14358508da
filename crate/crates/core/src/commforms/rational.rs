use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FormError;
use crate::cyclotomic::parse_rational;

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        RationalMatrix { n, entries }
    }

    pub fn from_diagonal(diag: &[BigRational]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                BigRational::zero()
            }
        })
    }

    /// # Panics
    ///
    /// Panics if the rows are not all of length `rows.len()`.
    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        Self::from_fn(n, |i, j| int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, FormError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(FormError::BadShape { n, row_len: bad.len() });
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            self.get(i, i).is_one() && (i + 1..self.n).all(|j| self.get(i, j).is_zero())
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FormError> {
        if self.n != other.n {
            return Err(FormError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).fold(BigRational::zero(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * other.get(k, j)
                }
            })
        }))
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> BigRational {
        let n = self.n;
        let mut a = self.rows();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det *= &pivot;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &pivot;
                for k in c..n {
                    let sub = &f * &a[c][k];
                    a[r][k] -= sub;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self, FormError> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(FormError::Singular)?;
            a.swap(p, c);
            inv.swap(p, c);
            let pivot = a[c][c].clone();
            for k in 0..n {
                a[c][k] /= &pivot;
                inv[c][k] /= &pivot;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for k in 0..n {
                    let (sa, si) = (&f * &a[c][k], &f * &inv[c][k]);
                    a[r][k] -= sa;
                    inv[r][k] -= si;
                }
            }
        }
        Self::from_rows(inv)
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    /// # Panics
    ///
    /// Panics on a dimension mismatch; use [`RationalMatrix::try_mul`] to get an error.
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One row per line, entries right-aligned.
impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for row in cells.chunks(self.n.max(1)) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            entries: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.n {
            return Err(D::Error::custom(FormError::BadShape {
                n: raw.n,
                row_len: raw.entries.len(),
            }));
        }
        let rows = raw
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Self::from_rows(rows).map_err(D::Error::custom)
    }
}
