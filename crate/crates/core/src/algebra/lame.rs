use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraElement, AlgebraError, AlgebraSignature, Mode};
use crate::commforms::{
    canonical_form, clifford_form, diagonal_symplectic, matrix_lprime, transform_form,
    CommutatorForm, TransformMatrix,
};
use crate::cyclotomic::CyclotomicNumber;

#[derive(Clone, Debug)]
pub struct LameReport {
    pub holds: bool,
    /// `(Σ a_k t_k)^l` minus the expected right-hand side.
    pub residual: AlgebraElement,
}

/// Checks `(Σ a_k t_k)^l = Σ a_k^l` (strict) or `(Σ a_k t_k)^l = Σ a_k^l t_k^l`
/// (weak) by exact expansion.
pub fn lame_check(
    sig: &AlgebraSignature,
    coeffs: &[CyclotomicNumber],
) -> Result<LameReport, AlgebraError> {
    let l = sig.l();
    let x = AlgebraElement::linear(sig, coeffs)?;
    let lhs = x.power(l as u64);
    let mut rhs = AlgebraElement::zero(sig);
    for (k, a) in coeffs.iter().enumerate() {
        let al = sig.coefficient(a)?.pow(l as u64);
        let term = match sig.mode() {
            Mode::Strict => AlgebraElement::identity(sig).scale(&al)?,
            Mode::Weak => AlgebraElement::generator(sig, k + 1)?.power(l as u64).scale(&al)?,
        };
        rhs = rhs.add(&term)?;
    }
    let residual = lhs.sub(&rhs)?;
    Ok(LameReport {
        holds: residual.is_zero(),
        residual,
    })
}

/// Weak generators built from pairs `U_k(a_k)`, `V_k(λ/a_k)` as in the
/// `(U, V, νU†V)` layout, with `λ = 2π·m'/l`.
#[derive(Clone, Debug)]
pub struct WeakGenerators {
    pub signature: AlgebraSignature,
    pub generators: Vec<AlgebraElement>,
    /// `G = L'·diag(a_1, r/a_1, …)`, `r = m'/l`.
    pub transform: TransformMatrix,
    /// `G h_c Gᵀ`: entry `(j, k)` is the phase of `t_j t_k = e^{2πi h_{jk}} t_k t_j`.
    pub phase_table: CommutatorForm,
}

/// Assembles `n = 2·steps.len()` weak generators whose pairwise phases come
/// from transporting `r·h_c` (`r = m'/l`) through `L'` and the diagonal
/// symplectic map of the step parameters. The phase table is independent of
/// the steps and equals `r·h⁺₋`, so the generators satisfy
/// `t_j t_k = ζ_l^{m'} t_k t_j` for `j < k`.
pub fn weak_from_group_phases(
    n: usize,
    l: usize,
    steps: &[BigRational],
    m_prime: i64,
) -> Result<WeakGenerators, AlgebraError> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(crate::commforms::FormError::OddDimension(n).into());
    }
    if steps.len() != n / 2 {
        return Err(AlgebraError::WrongLength {
            expected: n / 2,
            got: steps.len(),
        });
    }
    if let Some(i) = steps.iter().position(|a| a.is_zero()) {
        return Err(AlgebraError::ZeroStep(i + 1));
    }
    let sig = AlgebraSignature::weak(n, l)?.with_zeta_power(m_prime)?;
    let r = BigRational::new(BigInt::from(m_prime), BigInt::from(l));
    // diag(a_k, r/a_k) = diag(1, r) · diag(a_k, 1/a_k) per pair.
    let d = diagonal_symplectic(steps)?;
    let split = TransformMatrix::new(crate::commforms::RationalMatrix::from_fn(n, |i, j| {
        if i != j {
            BigRational::zero()
        } else if i % 2 == 1 {
            r.clone()
        } else {
            BigRational::from_integer(1.into())
        }
    }));
    let g = matrix_lprime(n)?.compose(&split.compose(&d)?)?;
    let phase_table = transform_form(&g, &canonical_form(n)?)?;
    let generators = (1..=n)
        .map(|k| AlgebraElement::generator(&sig, k))
        .collect::<Result<_, _>>()?;
    Ok(WeakGenerators {
        signature: sig,
        generators,
        transform: g,
        phase_table,
    })
}

impl WeakGenerators {
    /// Phase table of the equal-step construction, `r·h⁺₋`.
    pub fn expected_table(&self) -> CommutatorForm {
        let sig = &self.signature;
        let m = sig.field().order();
        let r = BigRational::new(BigInt::from(sig.zeta_exponent()), BigInt::from(m));
        clifford_form(sig.n()).scale(&r)
    }
}

/// Entrywise equality modulo integers (phases `e^{2πi h}`).
pub fn phases_equal_mod_one(a: &CommutatorForm, b: &CommutatorForm) -> bool {
    let n = a.n();
    n == b.n()
        && (0..n).all(|i| {
            (0..n).all(|j| (a.matrix().get(i, j) - b.matrix().get(i, j)).is_integer())
        })
}
