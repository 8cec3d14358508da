//! Commutator forms and their linear transport.
//!
//! A commutator form `h` records pairwise phase exponents, `c_j c_k = e^{i h_{jk}} c_k c_j`.
//! A change of generators `c'_k = Σ_j G_{kj} c_j` acts by `h' = G h Gᵀ`.
//! [`matrix_l`] and [`matrix_lprime`] carry the canonical form `h_c` to the
//! all-ones form `h⁺₋`; the integer row patterns are validated solely through
//! that identity.

mod rational;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

pub use rational::RationalMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("dimension {0} must be even and at least 2")]
    OddDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parameter {0} is zero")]
    ZeroParameter(usize),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("row of length {row_len} in a {n}x{n} matrix")]
    BadShape { n: usize, row_len: usize },
}

/// An exactly antisymmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CommutatorForm(RationalMatrix);

impl CommutatorForm {
    pub fn new(m: RationalMatrix) -> Result<Self, FormError> {
        if m.is_antisymmetric() {
            Ok(CommutatorForm(m))
        } else {
            Err(FormError::NotAntisymmetric)
        }
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CommutatorForm(self.0.scale(c))
    }
}

impl<'de> Deserialize<'de> for CommutatorForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CommutatorForm::new(RationalMatrix::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A change-of-generators matrix `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TransformMatrix(RationalMatrix);

impl TransformMatrix {
    pub fn new(m: RationalMatrix) -> Self {
        TransformMatrix(m)
    }

    pub fn identity(n: usize) -> Self {
        TransformMatrix(RationalMatrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn compose(&self, other: &TransformMatrix) -> Result<Self, FormError> {
        Ok(TransformMatrix(self.0.try_mul(&other.0)?))
    }

    pub fn inverse(&self) -> Result<Self, FormError> {
        Ok(TransformMatrix(self.0.inverse()?))
    }

    pub fn determinant(&self) -> BigRational {
        self.0.determinant()
    }
}

fn check_even(n: usize) -> Result<(), FormError> {
    if n >= 2 && n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(FormError::OddDimension(n))
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `h_c`: diagonal blocks `[[0, 1], [-1, 0]]`.
pub fn canonical_form(n: usize) -> Result<CommutatorForm, FormError> {
    check_even(n)?;
    Ok(CommutatorForm(RationalMatrix::from_fn(n, |i, j| {
        if i / 2 != j / 2 || i == j {
            int(0)
        } else if i < j {
            int(1)
        } else {
            int(-1)
        }
    })))
}

/// `h⁺₋`: `+1` above the diagonal, `-1` below.
pub fn clifford_form(n: usize) -> CommutatorForm {
    CommutatorForm(RationalMatrix::from_fn(n, |i, j| int((j as i64 - i as i64).signum())))
}

/// `h' = G h Gᵀ`.
pub fn transform_form(g: &TransformMatrix, h: &CommutatorForm) -> Result<CommutatorForm, FormError> {
    let gh = g.0.try_mul(&h.0)?;
    Ok(CommutatorForm(gh.try_mul(&g.0.transpose())?))
}

/// Builds an `n×n` matrix whose pair block `k` (rows `2k`, `2k+1`, 0-based) is
/// `prefix(j)` summed over earlier pairs `j < k`, plus `own(r)` in its own columns.
fn pair_pattern(
    n: usize,
    prefix: [i64; 2],
    own: [[i64; 2]; 2],
) -> Result<TransformMatrix, FormError> {
    check_even(n)?;
    Ok(TransformMatrix(RationalMatrix::from_fn(n, |i, j| {
        let (k, r) = (i / 2, i % 2);
        let (pj, c) = (j / 2, j % 2);
        match pj.cmp(&k) {
            std::cmp::Ordering::Less => int(prefix[c]),
            std::cmp::Ordering::Equal => int(own[r][c]),
            std::cmp::Ordering::Greater => int(0),
        }
    })))
}

/// `L` with `L h_c Lᵀ = h⁺₋`, from the `τ = (U, ν̄UV, V)` generators:
/// rows `Σ_{j<k} f_j + e_k` and `Σ_{j<k} f_j + e_k + f_k`, where `e_k`, `f_k`
/// are the two columns of pair `k`.
pub fn matrix_l(n: usize) -> Result<TransformMatrix, FormError> {
    pair_pattern(n, [0, 1], [[1, 0], [1, 1]])
}

/// `L'` with `L' h_c L'ᵀ = h⁺₋`, from the `(U, V, νU†V)` generators:
/// rows `Σ_{j<k} (f_j - e_j) + e_k` and `Σ_{j<k} (f_j - e_j) + f_k`.
pub fn matrix_lprime(n: usize) -> Result<TransformMatrix, FormError> {
    pair_pattern(n, [-1, 1], [[1, 0], [0, 1]])
}

/// `S h_c Sᵀ = h_c`. Odd dimensions are never symplectic.
pub fn is_symplectic(s: &TransformMatrix) -> bool {
    let Ok(hc) = canonical_form(s.n()) else {
        return false;
    };
    transform_form(s, &hc).is_ok_and(|h| h == hc)
}

/// `diag(a_1, 1/a_1, a_2, 1/a_2, …)`.
pub fn diagonal_symplectic(params: &[BigRational]) -> Result<TransformMatrix, FormError> {
    if params.is_empty() {
        return Err(FormError::OddDimension(0));
    }
    if let Some(i) = params.iter().position(|a| a.is_zero()) {
        return Err(FormError::ZeroParameter(i + 1));
    }
    let diag: Vec<BigRational> = params
        .iter()
        .flat_map(|a| [a.clone(), a.recip()])
        .collect();
    Ok(TransformMatrix(RationalMatrix::from_diagonal(&diag)))
}

/// The symplectic transvection `x ↦ x + c·ω(v, x)·v`, i.e. `I + c v vᵀ h_c`.
/// Together with diagonal maps these generate enough of the group for testing.
pub fn symplectic_transvection(v: &[BigRational], c: &BigRational) -> Result<TransformMatrix, FormError> {
    let n = v.len();
    let hc = canonical_form(n)?;
    let vt_h: Vec<BigRational> = (0..n)
        .map(|j| (0..n).fold(BigRational::zero(), |acc, i| acc + &v[i] * hc.0.get(i, j)))
        .collect();
    Ok(TransformMatrix(RationalMatrix::from_fn(n, |i, j| {
        let delta = if i == j { BigRational::one() } else { BigRational::zero() };
        delta + c * &v[i] * &vt_h[j]
    })))
}

/// The shear `[[1, c], [0, 1]]` on pair `k` (1-based), identity elsewhere.
pub fn symplectic_shear(n: usize, k: usize, c: &BigRational) -> Result<TransformMatrix, FormError> {
    check_even(n)?;
    if k == 0 || k > n / 2 {
        return Err(FormError::DimensionMismatch { expected: n / 2, got: k });
    }
    let mut m = RationalMatrix::identity(n);
    m.set(2 * k - 2, 2 * k - 1, c.clone());
    Ok(TransformMatrix(m))
}

/// `N_S = L S L⁻¹`, which preserves `h⁺₋` whenever `S` preserves `h_c`.
pub fn conjugate_to_n(s: &TransformMatrix) -> Result<TransformMatrix, FormError> {
    if !is_symplectic(s) {
        return Err(FormError::NotSymplectic);
    }
    let l = matrix_l(s.n())?;
    l.compose(s)?.compose(&l.inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn small_forms() {
        let hc = canonical_form(2).unwrap();
        assert_eq!(hc.matrix(), &RationalMatrix::from_integers(&[&[0, 1], &[-1, 0]]));
        assert_eq!(clifford_form(2), hc);
        assert_eq!(
            clifford_form(3).matrix(),
            &RationalMatrix::from_integers(&[&[0, 1, 1], &[-1, 0, 1], &[-1, -1, 0]])
        );
        let h4 = canonical_form(4).unwrap();
        assert_eq!(
            h4.matrix(),
            &RationalMatrix::from_integers(&[
                &[0, 1, 0, 0],
                &[-1, 0, 0, 0],
                &[0, 0, 0, 1],
                &[0, 0, -1, 0]
            ])
        );
        assert!(canonical_form(3).is_err());
        assert!(canonical_form(0).is_err());
    }

    #[test]
    fn printed_six_by_six() {
        let l = RationalMatrix::from_integers(&[
            &[1, 0, 0, 0, 0, 0],
            &[1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0],
            &[0, 1, 1, 1, 0, 0],
            &[0, 1, 0, 1, 1, 0],
            &[0, 1, 0, 1, 1, 1],
        ]);
        let lp = RationalMatrix::from_integers(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[-1, 1, 1, 0, 0, 0],
            &[-1, 1, 0, 1, 0, 0],
            &[-1, 1, -1, 1, 1, 0],
            &[-1, 1, -1, 1, 0, 1],
        ]);
        assert_eq!(matrix_l(6).unwrap().matrix(), &l);
        assert_eq!(matrix_lprime(6).unwrap().matrix(), &lp);
    }

    #[test]
    fn transport_identity() {
        for n in (2..=12).step_by(2) {
            let hc = canonical_form(n).unwrap();
            let hpm = clifford_form(n);
            for g in [matrix_l(n).unwrap(), matrix_lprime(n).unwrap()] {
                assert_eq!(transform_form(&g, &hc).unwrap(), hpm, "n={n}");
                assert!(g.matrix().is_lower_unitriangular());
                assert!(g.determinant().is_one());
            }
        }
    }

    #[test]
    fn flipping_a_sign_in_lprime_breaks_transport() {
        let hc = canonical_form(6).unwrap();
        let hpm = clifford_form(6);
        let lp = matrix_lprime(6).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                if *lp.matrix().get(i, j) == int(-1) {
                    let mut m = lp.matrix().clone();
                    m.set(i, j, int(1));
                    let h = transform_form(&TransformMatrix::new(m), &hc).unwrap();
                    assert_ne!(h, hpm, "flip at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn scaling_and_identity() {
        let h = clifford_form(4);
        assert_eq!(transform_form(&TransformMatrix::identity(4), &h).unwrap(), h);
        let two = TransformMatrix::new(RationalMatrix::identity(4).scale(&int(2)));
        assert_eq!(transform_form(&two, &h).unwrap(), h.scale(&int(4)));
        assert!(matches!(
            transform_form(&two, &clifford_form(3)),
            Err(FormError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn symplectic_predicates() {
        assert!(is_symplectic(&TransformMatrix::identity(4)));
        let two = TransformMatrix::new(RationalMatrix::identity(4).scale(&int(2)));
        assert!(!is_symplectic(&two));
        assert!(!is_symplectic(&TransformMatrix::identity(3)));
        let d = diagonal_symplectic(&[r(2, 1)]).unwrap();
        assert_eq!(d.matrix(), &RationalMatrix::from_diagonal(&[int(2), r(1, 2)]));
        assert!(is_symplectic(&diagonal_symplectic(&[r(3, 1), r(1, 5)]).unwrap()));
        assert_eq!(diagonal_symplectic(&[int(1), int(1)]).unwrap(), TransformMatrix::identity(4));
        assert_eq!(diagonal_symplectic(&[int(1), int(0)]), Err(FormError::ZeroParameter(2)));
        assert!(is_symplectic(&symplectic_shear(4, 2, &r(-3, 2)).unwrap()));
        let v = [int(1), r(2, 3), int(-1), int(4)];
        assert!(is_symplectic(&symplectic_transvection(&v, &r(5, 7)).unwrap()));
    }

    #[test]
    fn n_conjugation() {
        assert_eq!(conjugate_to_n(&TransformMatrix::identity(2)).unwrap(), TransformMatrix::identity(2));
        let d = diagonal_symplectic(&[int(2)]).unwrap();
        let n = conjugate_to_n(&d).unwrap();
        let hpm = clifford_form(2);
        assert_eq!(transform_form(&n, &hpm).unwrap(), hpm);
        assert_eq!(conjugate_to_n(&TransformMatrix::new(RationalMatrix::identity(2).scale(&int(2)))), Err(FormError::NotSymplectic));
    }
}
