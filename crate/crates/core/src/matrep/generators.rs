//! Tensor-product generators of `T(n, l)` and of the complex Clifford algebras.
//!
//! Generator `2k-1` (resp. `2k`) places `τ₁` (resp. `τ₂`) on site `k`, a string
//! of `τ₃` on the sites before it and identities after, so that every pair
//! of generators fails to commute on exactly one site. An odd count `2n+1`
//! adds `τ₃^{⊗(n+1)}` on `n+1` sites.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::pairs::{alpha, nu, pauli, tau_triple, zeta, TripleVariant};
use super::{ComplexMatrix, RepError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Labeling {
    PauliClifford,
    Tau,
    Taw,
    Custom,
}

/// A list of equal-dimension matrices meant to represent `t_1, …, t_n` with
/// `t_j t_k = ζ t_k t_j` for `j < k` and `t_k^l = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGeneratorSet")]
pub struct GeneratorSet {
    l: usize,
    zeta: Complex64,
    labeling: Labeling,
    matrices: Vec<ComplexMatrix>,
}

#[derive(Deserialize)]
struct RawGeneratorSet {
    l: usize,
    zeta: Complex64,
    labeling: Labeling,
    matrices: Vec<ComplexMatrix>,
}

impl TryFrom<RawGeneratorSet> for GeneratorSet {
    type Error = RepError;
    fn try_from(raw: RawGeneratorSet) -> Result<Self, RepError> {
        GeneratorSet::new(raw.l, raw.zeta, raw.labeling, raw.matrices)
    }
}

impl GeneratorSet {
    pub fn new(
        l: usize,
        zeta: Complex64,
        labeling: Labeling,
        matrices: Vec<ComplexMatrix>,
    ) -> Result<Self, RepError> {
        if l < 2 {
            return Err(RepError::OrderTooSmall(l));
        }
        let first = matrices.first().ok_or(RepError::EmptySet)?.dim();
        if let Some(bad) = matrices.iter().find(|m| m.dim() != first) {
            return Err(RepError::DimensionMismatch {
                expected: first,
                got: bad.dim(),
            });
        }
        Ok(GeneratorSet {
            l,
            zeta,
            labeling,
            matrices,
        })
    }

    /// A custom set with the standard `ζ = e^{2πi/l}`.
    pub fn custom(l: usize, matrices: Vec<ComplexMatrix>) -> Result<Self, RepError> {
        Self::new(l, zeta(l), Labeling::Custom, matrices)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn matrices(&self) -> &[ComplexMatrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    /// 1-based access, matching `t_1 … t_n`.
    pub fn generator(&self, k: usize) -> Result<&ComplexMatrix, RepError> {
        k.checked_sub(1)
            .and_then(|i| self.matrices.get(i))
            .ok_or(RepError::BadIndex { what: "generator", index: k })
    }

    pub fn into_matrices(self) -> Vec<ComplexMatrix> {
        self.matrices
    }
}

fn site_string(
    prefix: &ComplexMatrix,
    op: &ComplexMatrix,
    k: usize,
    sites: usize,
) -> ComplexMatrix {
    let ident = ComplexMatrix::identity(op.dim());
    let factors: Vec<&ComplexMatrix> = (1..=sites)
        .map(|s| match s.cmp(&k) {
            std::cmp::Ordering::Less => prefix,
            std::cmp::Ordering::Equal => op,
            std::cmp::Ordering::Greater => &ident,
        })
        .collect();
    ComplexMatrix::kron_all(factors)
}

/// Jordan–Wigner style layout shared by the Clifford and `T(n, l)` builders.
fn jordan_wigner(
    count: usize,
    [t1, t2, t3]: &[ComplexMatrix; 3],
    prefix: &ComplexMatrix,
    phase: impl Fn(usize) -> Complex64,
) -> Vec<ComplexMatrix> {
    let sites = count.div_ceil(2);
    let mut out = Vec::with_capacity(count);
    for k in 1..=count / 2 {
        let a = phase(k);
        out.push(site_string(prefix, t1, k, sites).scale(a));
        out.push(site_string(prefix, t2, k, sites).scale(a));
    }
    if count % 2 == 1 {
        out.push(ComplexMatrix::kron_all(std::iter::repeat_n(t3, sites)));
    }
    out
}

/// How an odd generator count `2n+1` is realised.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OddEmbedding {
    /// Last generator `τ₃^{⊗(n+1)}`, diagonal.
    #[default]
    Diagonal,
    /// The first `2n+1` generators of the `2n+2` set; the last one carries
    /// `τ₁` on site `n+1`.
    Truncated,
}

fn clifford_set(count: usize) -> Result<GeneratorSet, RepError> {
    if count == 0 {
        return Err(RepError::EmptySet);
    }
    let sigma = [pauli(1)?, pauli(2)?, pauli(3)?];
    let mats = jordan_wigner(count, &sigma, &sigma[2], |_| Complex64::new(1.0, 0.0));
    GeneratorSet::new(2, Complex64::new(-1.0, 0.0), Labeling::PauliClifford, mats)
}

/// The `2n` Clifford generators `e_1 … e_{2n}` as `2^n`-dimensional Pauli
/// strings, with `{e_j, e_k} = 2δ_{jk}`.
pub fn clifford_generators(n: usize) -> Result<GeneratorSet, RepError> {
    clifford_set(2 * n)
}

/// `e_1 … e_{2n+1}`: the even set on `n+1` sites plus `e_{2n+1} = σ₃^{⊗(n+1)}`.
pub fn clifford_generators_odd(n: usize) -> Result<GeneratorSet, RepError> {
    clifford_set(2 * n + 1)
}

/// Generators `t_1 … t_count` of `T(count, l)` as `l^{⌈count/2⌉}`-dimensional
/// matrices.
///
/// The `Tau` variant uses the triple `(U, ν̄UV, V)` with a `τ₃ = V` prefix
/// string. The `Taw` variant uses `α_k (U†V)^{⊗(k-1)} ⊗ {U, V} ⊗ 1…` with
/// `α_k = ζ^{-(k-1)(l-1)/2}`; its odd extra generator is `(νU†V)^{⊗(n+1)}`.
pub fn t_generators(
    count: usize,
    l: usize,
    variant: TripleVariant,
) -> Result<GeneratorSet, RepError> {
    t_generators_embedded(count, l, variant, OddEmbedding::Diagonal)
}

pub fn t_generators_embedded(
    count: usize,
    l: usize,
    variant: TripleVariant,
    odd: OddEmbedding,
) -> Result<GeneratorSet, RepError> {
    if count == 0 {
        return Err(RepError::EmptySet);
    }
    if odd == OddEmbedding::Truncated && count % 2 == 1 {
        let full = t_generators(count + 1, l, variant)?;
        let GeneratorSet { l, zeta, labeling, mut matrices } = full;
        matrices.truncate(count);
        return GeneratorSet::new(l, zeta, labeling, matrices);
    }
    let triple = tau_triple(l, variant)?;
    let (mats, labeling) = match variant {
        TripleVariant::Tau => (
            jordan_wigner(count, &triple, &triple[2], |_| Complex64::new(1.0, 0.0)),
            Labeling::Tau,
        ),
        TripleVariant::Taw => {
            let prefix = &triple[0].adjoint() * &triple[1];
            (
                jordan_wigner(count, &triple, &prefix, |k| alpha(k, l)),
                Labeling::Taw,
            )
        }
    };
    GeneratorSet::new(l, zeta(l), labeling, mats)
}

/// `t'_j = M⁻¹ t_j M`.
pub fn conjugate_generators(
    gens: &GeneratorSet,
    m: &ComplexMatrix,
) -> Result<GeneratorSet, RepError> {
    if m.dim() != gens.dim() {
        return Err(RepError::DimensionMismatch {
            expected: gens.dim(),
            got: m.dim(),
        });
    }
    let m_inv = m.inverse()?;
    let mats = gens
        .matrices
        .iter()
        .map(|t| &(&m_inv * t) * m)
        .collect();
    GeneratorSet::new(gens.l, gens.zeta, gens.labeling, mats)
}

/// `τ_{i;k} = 1^{⊗(k-1)} ⊗ τ_i ⊗ 1^{⊗(sites-k)}` for the `Tau` triple.
pub fn tau_site(l: usize, sites: usize, i: usize, k: usize) -> Result<ComplexMatrix, RepError> {
    if !(1..=3).contains(&i) {
        return Err(RepError::BadIndex { what: "tau", index: i });
    }
    if k == 0 || k > sites {
        return Err(RepError::BadIndex { what: "site", index: k });
    }
    let triple = tau_triple(l, TripleVariant::Tau)?;
    let ident = ComplexMatrix::identity(l);
    Ok(site_string(&ident, &triple[i - 1], k, sites))
}

/// Recovers the single-site operator `τ_{i;k}` from products of the
/// generators (a `Tau`-variant set):
///
/// * `τ†_{3;j} = ν̄ t_{2j}^{l-1} t_{2j-1}`
/// * `τ_{1;k} = t_{2k-1} τ†_{3;1} ⋯ τ†_{3;k-1}`
/// * `τ_{2;k} = t_{2k} τ†_{3;1} ⋯ τ†_{3;k-1}`
///
/// and `τ_{3;k}` as the adjoint of the first line.
pub fn extract_tau_site(gens: &GeneratorSet, i: usize, k: usize) -> Result<ComplexMatrix, RepError> {
    if gens.labeling != Labeling::Tau && gens.labeling != Labeling::PauliClifford {
        return Err(RepError::WrongLabeling {
            expected: Labeling::Tau,
            got: gens.labeling,
        });
    }
    if !(1..=3).contains(&i) {
        return Err(RepError::BadIndex { what: "tau", index: i });
    }
    let pairs = gens.len() / 2;
    if k == 0 || k > pairs {
        return Err(RepError::BadIndex { what: "site", index: k });
    }
    let l = gens.l as u64;
    let nu_bar = nu(gens.l).conj();
    let tau3_dag = |j: usize| -> ComplexMatrix {
        let odd = &gens.matrices[2 * j - 2];
        let even = &gens.matrices[2 * j - 1];
        (&even.pow(l - 1) * odd).scale(nu_bar)
    };
    let string = (1..k).fold(ComplexMatrix::identity(gens.dim()), |acc, j| &acc * &tau3_dag(j));
    Ok(match i {
        1 => &gens.matrices[2 * k - 2] * &string,
        2 => &gens.matrices[2 * k - 1] * &string,
        _ => tau3_dag(k).adjoint(),
    })
}

/// All normal-ordered monomials `t_1^{a_1} ⋯ t_n^{a_n}` with `0 ≤ a_i < l`,
/// in lexicographic exponent order (last exponent fastest).
pub fn monomial_images(gens: &GeneratorSet) -> Vec<ComplexMatrix> {
    let l = gens.l;
    let powers: Vec<Vec<ComplexMatrix>> = gens
        .matrices
        .iter()
        .map(|t| {
            let mut acc = vec![ComplexMatrix::identity(t.dim())];
            for p in 1..l {
                let next = &acc[p - 1] * t;
                acc.push(next);
            }
            acc
        })
        .collect();
    let mut out = vec![ComplexMatrix::identity(gens.dim())];
    for pw in &powers {
        out = out
            .iter()
            .flat_map(|m| pw.iter().map(move |p| m * p))
            .collect();
    }
    out
}
