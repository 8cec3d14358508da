//! λ-deformed binomial coefficients.
//!
//! `r_{kl}(λ)` is the coefficient of `x^k` in `Π_{j=0}^{l-1} (x - λ^j)`, and
//! `[l k]_λ = [l]_λ! / ([k]_λ! [l-k]_λ!)` is the Gaussian binomial. The two
//! are related by
//!
//! ```text
//! r_{kl}(λ) = (-1)^{l-k} λ^{(l-k)(l-k-1)/2} [l k]_λ
//! ```
//!
//! so at a primitive `l`-th root both vanish for `0 < k < l`. When the
//! quotient formula's denominator vanishes the product route is used instead.
//!
//! ```
//! use weyl_clifford::cyclotomic::root_of_unity;
//! use weyl_clifford::qbinom::q_binomial;
//!
//! let zeta5 = root_of_unity(5, 1);
//! assert!(q_binomial(5, 2, &zeta5).unwrap().is_zero());
//! ```

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, AlgebraError, AlgebraSignature};
use crate::cyclotomic::{CyclotomicError, CyclotomicField, CyclotomicNumber, IntPolynomial};
use crate::random::{cyclotomic, seeded};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QbinomError {
    #[error("index k = {k} out of range 0..={l}")]
    OutOfRange { k: usize, l: usize },
    #[error("root order must be positive")]
    ZeroOrder,
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Commutative rings the expansions run over: formal `λ` (integer polynomials)
/// and `λ` a cyclotomic number.
trait Ring: Clone + PartialEq
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl Ring for IntPolynomial {
    fn zero_like(&self) -> Self {
        IntPolynomial::zero()
    }
    fn one_like(&self) -> Self {
        IntPolynomial::one()
    }
}

impl Ring for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
}

/// Coefficients of `Π_{j<l} (x - λ^j)`, ascending in `x`, by repeated
/// convolution with `(x - λ^j)`.
fn root_product<R: Ring>(l: usize, lambda: &R) -> Vec<R>
where
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    let mut poly = vec![lambda.one_like()];
    let mut root = lambda.one_like();
    for _ in 0..l {
        let mut next = vec![lambda.zero_like(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * &root);
        }
        poly = next;
        root = &root * lambda;
    }
    poly
}

fn q_int_generic<R: Ring>(k: usize, lambda: &R) -> R
where
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    let mut acc = lambda.zero_like();
    let mut p = lambda.one_like();
    for _ in 0..k {
        acc = &acc + &p;
        p = &p * lambda;
    }
    acc
}

fn q_factorial_generic<R: Ring>(k: usize, lambda: &R) -> R
where
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    (1..=k).fold(lambda.one_like(), |acc, j| &acc * &q_int_generic(j, lambda))
}

fn check_range(k: usize, l: usize) -> Result<(), QbinomError> {
    if k > l {
        Err(QbinomError::OutOfRange { k, l })
    } else {
        Ok(())
    }
}

fn sign<R: Ring>(x: R, odd: bool) -> R
where
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    if odd {
        -&x
    } else {
        x
    }
}

/// `r_{kl}(λ)` as an integer polynomial in a formal `λ`.
pub fn r_poly_formal(k: usize, l: usize) -> Result<IntPolynomial, QbinomError> {
    check_range(k, l)?;
    let lambda = IntPolynomial::monomial(BigInt::one(), 1);
    Ok(root_product(l, &lambda).swap_remove(k))
}

/// `r_{kl}(λ)` at a given value.
pub fn r_poly(k: usize, l: usize, lambda: &CyclotomicNumber) -> Result<CyclotomicNumber, QbinomError> {
    check_range(k, l)?;
    Ok(root_product(l, lambda).swap_remove(k))
}

/// `[k]_λ = 1 + λ + … + λ^{k-1}`.
pub fn q_int(k: usize, lambda: &CyclotomicNumber) -> CyclotomicNumber {
    q_int_generic(k, lambda)
}

pub fn q_int_formal(k: usize) -> IntPolynomial {
    q_int_generic(k, &IntPolynomial::monomial(BigInt::one(), 1))
}

/// `[k]_λ! = [1]_λ [2]_λ ⋯ [k]_λ`.
pub fn q_factorial(k: usize, lambda: &CyclotomicNumber) -> CyclotomicNumber {
    q_factorial_generic(k, lambda)
}

pub fn q_factorial_formal(k: usize) -> IntPolynomial {
    q_factorial_generic(k, &IntPolynomial::monomial(BigInt::one(), 1))
}

/// `[l k]_λ` as a polynomial in formal `λ`, by exact polynomial division.
pub fn q_binomial_formal(l: usize, k: usize) -> Result<IntPolynomial, QbinomError> {
    check_range(k, l)?;
    let den = &q_factorial_formal(k) * &q_factorial_formal(l - k);
    Ok(q_factorial_formal(l)
        .div_exact(&den)
        .expect("q-factorial quotient is a polynomial"))
}

/// `[l k]_λ` at a value. Uses the quotient formula when `[k]_λ! [l-k]_λ! ≠ 0`
/// and [`q_binomial_via_r`] otherwise.
pub fn q_binomial(l: usize, k: usize, lambda: &CyclotomicNumber) -> Result<CyclotomicNumber, QbinomError> {
    check_range(k, l)?;
    let den = &q_factorial(k, lambda) * &q_factorial(l - k, lambda);
    if den.is_zero() {
        return q_binomial_via_r(l, k, lambda);
    }
    Ok(q_factorial(l, lambda).try_div(&den)?)
}

/// `(-1)^{l-k} λ^{-(l-k)(l-k-1)/2} r_{kl}(λ)`; needs `λ ≠ 0`.
pub fn q_binomial_via_r(
    l: usize,
    k: usize,
    lambda: &CyclotomicNumber,
) -> Result<CyclotomicNumber, QbinomError> {
    let j = (l - k) as i64;
    let twist = lambda.powi(-(j * (j - 1) / 2))?;
    Ok(sign(&r_poly(k, l, lambda)? * &twist, j % 2 == 1))
}

/// `Σ_k [l k]_λ a^k b^{l-k} R^{l-k} L^k` in the algebra of `sig`
/// (generators `L = t_1`, `R = t_2`, `LR = λRL`), or with `L^k R^{l-k}` when
/// `right_first` is false.
fn binomial_rhs(
    sig: &AlgebraSignature,
    l: usize,
    lambda: &CyclotomicNumber,
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    right_first: bool,
) -> Result<AlgebraElement, QbinomError> {
    let left = AlgebraElement::generator(sig, 1)?;
    let right = AlgebraElement::generator(sig, 2)?;
    let mut acc = AlgebraElement::zero(sig);
    for k in 0..=l {
        let coeff = &(&q_binomial(l, k, lambda)? * &a.pow(k as u64)) * &b.pow((l - k) as u64);
        let (lp, rp) = (left.power(k as u64), right.power((l - k) as u64));
        let word = if right_first { rp.multiply(&lp)? } else { lp.multiply(&rp)? };
        acc = acc.add(&word.scale(&coeff)?)?;
    }
    Ok(acc)
}

/// Rank-2 weak algebra with `LR = λRL`, `λ = ζ_q`.
fn deformed_plane(l: usize, q: usize) -> Result<(AlgebraSignature, CyclotomicNumber), QbinomError> {
    if q == 0 {
        return Err(QbinomError::ZeroOrder);
    }
    let sig = AlgebraSignature::weak(2, l.max(2))?.with_phase(q, 1)?;
    let lambda = sig.zeta();
    Ok((sig, lambda))
}

/// Result of expanding `(aL + bR)^l` against the deformed binomial sum.
#[derive(Clone, Debug)]
pub struct BinomialTheoremReport {
    pub l: usize,
    pub lambda_order: usize,
    pub trials: usize,
    pub passed: usize,
    /// Residual of the first failing trial, if any.
    pub first_failure: Option<AlgebraElement>,
}

impl BinomialTheoremReport {
    pub fn holds(&self) -> bool {
        self.passed == self.trials
    }
}

/// Checks `(aL + bR)^l = Σ_k [l k]_λ a^k b^{l-k} R^{l-k} L^k` with
/// `LR = λRL`, `λ = ζ_q`, for `trials` seeded random exact `a, b`.
pub fn deformed_binomial_theorem_check(
    l: usize,
    lambda_order: usize,
    trials: usize,
    seed: u64,
) -> Result<BinomialTheoremReport, QbinomError> {
    let (sig, lambda) = deformed_plane(l, lambda_order)?;
    let mut rng = seeded(seed);
    let mut report = BinomialTheoremReport {
        l,
        lambda_order,
        trials,
        passed: 0,
        first_failure: None,
    };
    for _ in 0..trials {
        let a = cyclotomic(&mut rng, sig.field());
        let b = cyclotomic(&mut rng, sig.field());
        let x = AlgebraElement::linear(&sig, &[a.clone(), b.clone()])?;
        let residual = x.power(l as u64).sub(&binomial_rhs(&sig, l, &lambda, &a, &b, true)?)?;
        if residual.is_zero() {
            report.passed += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some(residual);
        }
    }
    Ok(report)
}

/// Checks `Π_{k=0}^{l-1} (a + λ^k b) = a^l + (-1)^{l-1} b^l` for commuting
/// formal `a, b` and `λ = ζ_q`, by expanding the bivariate product. Holds
/// exactly when `λ` is a primitive `l`-th root of unity.
pub fn commuting_factorization_check(l: usize, lambda_order: usize) -> Result<bool, QbinomError> {
    if lambda_order == 0 {
        return Err(QbinomError::ZeroOrder);
    }
    let field = CyclotomicField::new(lambda_order);
    let lambda = field.root_of_unity(1);
    // poly[i] is the coefficient of a^{deg-i} b^i.
    let mut poly = vec![field.one()];
    let mut root = field.one();
    for _ in 0..l {
        let mut next = vec![field.zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] = &next[i] + c;
            next[i + 1] = &next[i + 1] + &(c * &root);
        }
        poly = next;
        root = &root * &lambda;
    }
    let expected_last = if l % 2 == 1 { field.one() } else { -field.one() };
    Ok(poly.iter().enumerate().all(|(i, c)| {
        if i == 0 {
            c.is_one()
        } else if i == l {
            *c == expected_last
        } else {
            c.is_zero()
        }
    }))
}

/// `C(l, k)` as a big integer, for comparisons at `λ = 1`.
pub fn binomial(l: usize, k: usize) -> BigInt {
    if k > l {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(l - i) / BigInt::from(i + 1))
}
