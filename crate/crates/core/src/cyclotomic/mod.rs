//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(φ(m)-1)` and always
//! reduced modulo the cyclotomic polynomial `Φ_m`, which makes the coefficient
//! vector a canonical form: two numbers are equal iff their vectors are.
//!
//! ```
//! use weyl_clifford::cyclotomic::CyclotomicField;
//!
//! let q3 = CyclotomicField::new(3);
//! let z = q3.root_of_unity(1);
//! // 1 + ζ + ζ² = 0
//! assert_eq!(&(&q3.one() + &z) + &q3.root_of_unity(2), q3.zero());
//! ```

mod poly;

pub use poly::{cyclotomic_polynomial, euler_totient, IntPolynomial};

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: usize },
    #[error("order mismatch: Q(zeta_{left}) vs Q(zeta_{right}); lift explicitly")]
    OrderMismatch { left: usize, right: usize },
    #[error("cannot lift Q(zeta_{from}) into Q(zeta_{to})")]
    InvalidLift { from: usize, to: usize },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("expected {expected} power-basis coefficients, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("malformed rational {0:?}")]
    ParseRational(String),
}

#[derive(Debug)]
struct FieldData {
    order: usize,
    degree: usize,
    /// Φ_m, monic.
    modulus: Vec<BigInt>,
}

/// Handle to `Q(ζ_m)`. Cheap to clone; carries `Φ_m` so that elements can
/// reduce themselves.
#[derive(Clone, Debug)]
pub struct CyclotomicField(Arc<FieldData>);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}
impl Eq for CyclotomicField {}

impl CyclotomicField {
    /// # Panics
    ///
    /// Panics if `order == 0`; use [`CyclotomicField::try_new`] to get an error.
    pub fn new(order: usize) -> Self {
        Self::try_new(order).expect("cyclotomic order must be positive")
    }

    pub fn try_new(order: usize) -> Result<Self, CyclotomicError> {
        if order == 0 {
            return Err(CyclotomicError::ZeroOrder);
        }
        let phi = cyclotomic_polynomial(order);
        Ok(CyclotomicField(Arc::new(FieldData {
            order,
            degree: phi.degree().unwrap_or(0),
            modulus: phi.coeffs().to_vec(),
        })))
    }

    /// Field order used for `T(n, l)`: `l` when `l` is odd, `2l` when even, so
    /// that `ν = ζ^((l+1)/2)` is representable.
    pub fn for_weyl_order(l: usize) -> Self {
        Self::new(if l.is_multiple_of(2) { 2 * l } else { l })
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    /// Degree of the extension, `φ(m)`.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn modulus(&self) -> IntPolynomial {
        IntPolynomial::new(self.0.modulus.clone())
    }

    pub fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CyclotomicNumber {
        self.from_rational(BigRational::one())
    }

    pub fn from_integer(&self, n: i64) -> CyclotomicNumber {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, q: BigRational) -> CyclotomicNumber {
        let mut x = self.zero();
        x.coeffs[0] = q;
        x
    }

    /// `ζ_m^k` in canonical form; `k` may be negative.
    pub fn root_of_unity(&self, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order() as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        self.reduce(raw)
    }

    /// Builds an element from power-basis coefficients, reducing if longer
    /// than `φ(m)`.
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> CyclotomicNumber {
        self.reduce(coeffs)
    }

    /// Builds an element from exactly `φ(m)` canonical coefficients.
    pub fn from_canonical(
        &self,
        coeffs: Vec<BigRational>,
    ) -> Result<CyclotomicNumber, CyclotomicError> {
        if coeffs.len() != self.degree() {
            return Err(CyclotomicError::BadLength {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        Ok(CyclotomicNumber {
            field: self.clone(),
            coeffs,
        })
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> CyclotomicNumber {
        let d = self.degree();
        let modulus = &self.0.modulus;
        // Φ_m is monic, so long division stays inside Q.
        for top in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[top]);
            if c.is_zero() {
                continue;
            }
            let shift = top - d;
            for (i, p) in modulus[..d].iter().enumerate() {
                if !p.is_zero() {
                    raw[shift + i] -= &c * BigRational::from_integer(p.clone());
                }
            }
        }
        raw.resize(d, BigRational::zero());
        CyclotomicNumber {
            field: self.clone(),
            coeffs: raw,
        }
    }
}

/// Exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: CyclotomicField,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for CyclotomicNumber {}

impl std::hash::Hash for CyclotomicNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

/// `ζ_m^k` as a standalone function; builds the field on the fly.
pub fn root_of_unity(m: usize, k: i64) -> CyclotomicNumber {
    CyclotomicField::new(m).root_of_unity(k)
}

impl CyclotomicNumber {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.first()
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), CyclotomicError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(CyclotomicError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(other)?;
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(other)?;
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(other)?;
        let d = self.coeffs.len();
        if d == 0 {
            return Ok(self.clone());
        }
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(self.field.reduce(raw))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_m`.
    pub fn inverse(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero {
                order: self.order(),
            });
        }
        let modulus: Vec<BigRational> = self
            .field
            .0
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (modulus, qpoly::trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qpoly::div_rem(&r0, &r1);
            let s2 = qpoly::sub(&s0, &qpoly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_m is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let inv_c = r0[0].recip();
        Ok(self
            .field
            .reduce(s0.into_iter().map(|c| c * &inv_c).collect()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Self, CyclotomicError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Complex conjugate, i.e. the automorphism `ζ -> ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        let m = self.order() as i64;
        let mut acc = self.field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &self.field.root_of_unity(-(i as i64) % m).scale(c);
            }
        }
        acc
    }

    /// Embeds into `Q(ζ_{new_order})` using `ζ_m = ζ_{new_order}^{new_order/m}`.
    pub fn lift(&self, new_order: usize) -> Result<Self, CyclotomicError> {
        if new_order == 0 || !new_order.is_multiple_of(self.order()) {
            return Err(CyclotomicError::InvalidLift {
                from: self.order(),
                to: new_order,
            });
        }
        let target = CyclotomicField::new(new_order);
        let step = (new_order / self.order()) as i64;
        let mut acc = target.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &target.root_of_unity(step * i as i64).scale(c);
            }
        }
        Ok(acc)
    }

    /// Evaluates the power basis at `e^{2πi/m}`.
    pub fn to_complex(&self) -> Complex64 {
        let m = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| unit_point(i, m) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

/// `e^{2πik/m}`, exact at quarter turns: the angle is split into a multiple
/// of `π/2` and a remainder in `[0, π/2)`.
fn unit_point(k: usize, m: usize) -> Complex64 {
    let k = k % m;
    let quarter = 4 * k / m;
    let rest = 4 * k - quarter * m;
    let base = if rest == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, PI * rest as f64 / (2.0 * m as f64))
    };
    match quarter {
        0 => base,
        1 => Complex64::new(-base.im, base.re),
        2 => -base,
        _ => Complex64::new(base.im, -base.re),
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [Q(zeta_{})]", self, self.order())
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.order();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("zeta_{m}"),
                _ => format!("zeta_{m}^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{root}")?,
                (_, false) => write!(f, "{mag}*{root}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// Panics on mismatched orders; use the `try_` variant to get an error.
        impl $tr for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational, CyclotomicError> {
    let bad = || CyclotomicError::ParseRational(s.to_string());
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = CyclotomicJson::deserialize(d)?;
        let field = CyclotomicField::try_new(raw.order).map_err(D::Error::custom)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        field.from_canonical(coeffs).map_err(D::Error::custom)
    }
}

/// Minimal dense rational-polynomial helpers for the inverse computation.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    pub fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    /// `b` must be trimmed and nonzero.
    pub fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = trim(a.to_vec());
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead = b.last().expect("nonzero divisor");
        let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = rem.last().unwrap() / lead;
            for (i, y) in b.iter().enumerate() {
                rem[shift + i] -= &c * y;
            }
            quot[shift] = c;
            rem = trim(rem);
        }
        (trim(quot), rem)
    }
}
