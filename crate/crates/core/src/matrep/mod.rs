//! Numerical matrix representations of `T(n, l)`.

mod generators;
mod matrix;
mod pairs;
mod relations;
mod standardize;

pub use generators::{
    clifford_generators, clifford_generators_odd, conjugate_generators, extract_tau_site, monomial_images, t_generators,
    t_generators_embedded, tau_site, GeneratorSet, Labeling, OddEmbedding,
};
pub use matrix::ComplexMatrix;
pub use pairs::{
    alpha, clock, conjugated_triple, degenerate_pair, fourier, nu, pauli, reducible_pair, shift,
    tau_triple, weyl_pair, zeta, zeta_pow, ReduciblePair, TripleVariant,
};
pub use relations::{
    scaled_tolerance, span_dimension, verify_relations, verify_relations_with, RelationReport,
    DEFAULT_TOLERANCE,
};
pub use standardize::{standardize_weyl_pair, Standardized};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("{what} index {index} out of range")]
    BadIndex { what: &'static str, index: usize },
    #[error("order l = {0} is too small (need l >= 2)")]
    OrderTooSmall(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("{entries} entries cannot form a {dim}x{dim} matrix")]
    BadShape { dim: usize, entries: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("{m} is not a proper divisor of {l}")]
    NotProperDivisor { l: usize, m: usize },
    #[error("generator set is empty")]
    EmptySet,
    #[error("expected {expected:?} generators, got {got:?}")]
    WrongLabeling { expected: Labeling, got: Labeling },
    #[error("relation violated: deviation {deviation:e} exceeds tolerance {tolerance:e}")]
    RelationViolated { deviation: f64, tolerance: f64 },
    /// The pair is reducible: an eigenspace of `V'` has dimension above one.
    #[error("degenerate spectrum: eigenspace of multiplicity {multiplicity} (reducible pair)")]
    DegenerateSpectrum { multiplicity: usize },
    #[error("l-th powers are not scalar")]
    NotNormalized,
}
