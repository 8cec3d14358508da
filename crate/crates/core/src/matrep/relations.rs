use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ComplexMatrix, GeneratorSet, RepError};

/// Absolute Frobenius-norm tolerance used by [`verify_relations`].
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Outcome of checking `t_j t_k = ζ t_k t_j` (`j < k`) and `t_k^l = 1`.
/// Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub tolerance: f64,
    pub max_commutation_deviation: f64,
    pub max_power_deviation: f64,
    pub failing_pairs: Vec<(usize, usize)>,
    pub failing_powers: Vec<usize>,
    pub passed: bool,
}

impl RelationReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_commutation_deviation.max(self.max_power_deviation)
    }
}

pub fn verify_relations(gens: &GeneratorSet) -> RelationReport {
    verify_relations_with(gens, DEFAULT_TOLERANCE)
}

pub fn verify_relations_with(gens: &GeneratorSet, tolerance: f64) -> RelationReport {
    let ts = gens.matrices();
    let zeta = gens.zeta();
    let ident = ComplexMatrix::identity(gens.dim());
    let mut report = RelationReport {
        tolerance,
        max_commutation_deviation: 0.0,
        max_power_deviation: 0.0,
        failing_pairs: Vec::new(),
        failing_powers: Vec::new(),
        passed: true,
    };
    for (j, tj) in ts.iter().enumerate() {
        for (k, tk) in ts.iter().enumerate().skip(j + 1) {
            let d = (tj * tk).distance(&(tk * tj).scale(zeta));
            report.max_commutation_deviation = report.max_commutation_deviation.max(d);
            if !(d <= tolerance) {
                report.failing_pairs.push((j + 1, k + 1));
            }
        }
        let d = tj.pow(gens.l() as u64).distance(&ident);
        report.max_power_deviation = report.max_power_deviation.max(d);
        if !(d <= tolerance) {
            report.failing_powers.push(j + 1);
        }
    }
    report.passed = report.failing_pairs.is_empty() && report.failing_powers.is_empty();
    report
}

/// `base · dim · max(1, max_entry)`, for comparisons whose rounding error
/// grows with matrix size and magnitude.
pub fn scaled_tolerance(base: f64, dim: usize, max_entry: f64) -> f64 {
    base * dim as f64 * max_entry.max(1.0)
}

/// Dimension of the complex linear span of `mats`, by SVD rank with relative
/// threshold `1e-9 · σ_max`.
pub fn span_dimension(mats: &[ComplexMatrix]) -> Result<usize, RepError> {
    let first = mats.first().ok_or(RepError::EmptySet)?;
    if let Some(bad) = mats.iter().find(|m| m.dim() != first.dim()) {
        return Err(RepError::DimensionMismatch { expected: first.dim(), got: bad.dim() });
    }
    let d2 = first.dim() * first.dim();
    let cols: Vec<Vec<Complex64>> = mats.iter().map(|m| m.row_major()).collect();
    // Use the smaller orientation; rank is the same.
    let a = if cols.len() <= d2 {
        DMatrix::from_fn(d2, cols.len(), |i, j| cols[j][i])
    } else {
        DMatrix::from_fn(cols.len(), d2, |i, j| cols[i][j])
    };
    let sv = a.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > 1e-9 * max).count())
}

#[cfg(test)]
mod tests {
    use super::super::{monomial_images, t_generators, weyl_pair, TripleVariant};
    use super::*;

    #[test]
    fn reports_failures() {
        let (u, v) = weyl_pair(3).unwrap();
        let ok = GeneratorSet::custom(3, vec![u.clone(), v.clone()]).unwrap();
        assert!(verify_relations(&ok).passed);
        let swapped = GeneratorSet::custom(3, vec![v, u.clone()]).unwrap();
        let r = verify_relations(&swapped);
        assert!(!r.passed);
        assert_eq!(r.failing_pairs, vec![(1, 2)]);
        assert!(r.failing_powers.is_empty());
        let big = GeneratorSet::custom(3, vec![u.scale(Complex64::new(2.0, 0.0))]).unwrap();
        assert_eq!(verify_relations(&big).failing_powers, vec![1]);
    }

    #[test]
    fn nan_fails() {
        let (u, _) = weyl_pair(2).unwrap();
        let r = verify_relations_with(&GeneratorSet::custom(2, vec![u]).unwrap(), f64::NAN);
        assert!(!r.passed);
    }

    #[test]
    fn full_span() {
        for l in 2..=5 {
            let g = t_generators(2, l, TripleVariant::Taw).unwrap();
            assert_eq!(span_dimension(&monomial_images(&g)).unwrap(), l * l);
        }
        let g = t_generators(3, 2, TripleVariant::Tau).unwrap();
        // Odd count: 8 monomials in 4x4 matrices; the span is half the algebra.
        assert_eq!(span_dimension(&monomial_images(&g)).unwrap(), 8);
        assert_eq!(span_dimension(&[]), Err(RepError::EmptySet));
        assert_eq!(span_dimension(&[ComplexMatrix::identity(3)]).unwrap(), 1);
    }
}
