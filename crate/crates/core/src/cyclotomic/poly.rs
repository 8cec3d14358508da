//! Dense integer polynomials and the cyclotomic polynomials built from them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
///
/// The coefficient vector is kept trimmed: the leading coefficient is nonzero
/// unless the polynomial is zero, in which case the vector is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = -BigInt::one();
        coeffs[m] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact division over the integers. Returns `None` when `divisor` does
    /// not divide `self` in `Z[x]`, or when `divisor` is zero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let Some(sd) = self.degree() else {
            return Some(IntPolynomial::zero());
        };
        if sd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(quot))
    }

    /// Applies `x -> x^k`.
    pub fn compose_power(&self, k: usize) -> IntPolynomial {
        if k == 0 {
            return IntPolynomial::constant(self.coeffs.iter().sum());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] += c;
        }
        IntPolynomial::new(out)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Euler's totient.
pub fn euler_totient(m: usize) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// The `m`-th cyclotomic polynomial, obtained by dividing `x^m - 1` by `Φ_d`
/// for every proper divisor `d` of `m`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic_polynomial(m: usize) -> IntPolynomial {
    assert!(m > 0, "cyclotomic polynomial of order 0");
    let divs = divisors(m);
    let mut table: Vec<(usize, IntPolynomial)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut p = IntPolynomial::x_pow_minus_one(d);
        for (e, phi_e) in &table {
            if d % e == 0 {
                p = p
                    .div_exact(phi_e)
                    .expect("cyclotomic factor divides x^d - 1");
            }
        }
        table.push((d, p));
    }
    table.pop().map(|(_, p)| p).expect("m has at least one divisor")
}
