//! Exact normal-form arithmetic in `T(n, l)` and its weak variant.
//!
//! Elements are sparse sums of normal-ordered monomials `t_1^{a_1} ⋯ t_n^{a_n}`
//! with cyclotomic coefficients. Reordering uses `t_k t_j = ζ^{-1} t_j t_k`
//! for `j < k`, which gives
//!
//! ```text
//! t^a · t^b = ζ^{φ(a,b)} t^{a+b},   φ(a, b) = -Σ_{j<k} a_k b_j
//! ```
//!
//! In strict mode exponents are reduced mod `l` (`t_k^l = 1`); in weak mode
//! they are unbounded non-negative integers and `t_k^l` is central.

mod element;
mod lame;
mod serial;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::commforms::FormError;
use crate::cyclotomic::{CyclotomicError, CyclotomicField, CyclotomicNumber};

pub use element::{AlgebraElement, Monomial};
pub use lame::{lame_check, phases_equal_mod_one, weak_from_group_phases, LameReport, WeakGenerators};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("algebras differ: {0} vs {1}")]
    SignatureMismatch(String, String),
    #[error("generator index {index} out of range 1..={n}")]
    BadIndex { index: usize, n: usize },
    #[error("need at least one generator")]
    NoGenerators,
    #[error("order l = {0} is too small (need l >= 2)")]
    OrderTooSmall(usize),
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("exponent {exponent} out of range for strict order {l}")]
    ExponentOutOfRange { exponent: u32, l: usize },
    #[error("zeta^l must be 1 in strict mode")]
    PhaseNotLthRoot,
    #[error("representation matrices have mismatched dimensions")]
    RepresentationMismatch,
    #[error("step parameter {0} is zero")]
    ZeroStep(usize),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Weak,
}

/// `(n, l, mode)` plus the coefficient field `Q(ζ_m)` and the commutation
/// phase `ζ = ζ_m^e`. By default `m` is `l` or `2l` (see
/// [`CyclotomicField::for_weyl_order`]) and `ζ = e^{2πi/l}`.
#[derive(Clone)]
pub struct AlgebraSignature {
    n: usize,
    l: usize,
    mode: Mode,
    field: CyclotomicField,
    zeta_exp: usize,
    /// `ζ^0, ζ^1, …` up to the multiplicative order of `ζ`.
    phases: Arc<Vec<CyclotomicNumber>>,
}

impl PartialEq for AlgebraSignature {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.l, self.mode, self.field.order(), self.zeta_exp)
            == (other.n, other.l, other.mode, other.field.order(), other.zeta_exp)
    }
}
impl Eq for AlgebraSignature {}

impl std::fmt::Debug for AlgebraSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "T({}, {}) {:?}, zeta = zeta_{}^{}",
            self.n,
            self.l,
            self.mode,
            self.field.order(),
            self.zeta_exp
        )
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl AlgebraSignature {
    pub fn strict(n: usize, l: usize) -> Result<Self, AlgebraError> {
        Self::build(n, l, Mode::Strict)
    }

    pub fn weak(n: usize, l: usize) -> Result<Self, AlgebraError> {
        Self::build(n, l, Mode::Weak)
    }

    pub fn new(n: usize, l: usize, mode: Mode) -> Result<Self, AlgebraError> {
        Self::build(n, l, mode)
    }

    fn build(n: usize, l: usize, mode: Mode) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::NoGenerators);
        }
        if l < 2 {
            return Err(AlgebraError::OrderTooSmall(l));
        }
        let field = CyclotomicField::for_weyl_order(l);
        let zeta_exp = field.order() / l;
        Self::with_parts(n, l, mode, field, zeta_exp)
    }

    fn with_parts(
        n: usize,
        l: usize,
        mode: Mode,
        field: CyclotomicField,
        zeta_exp: usize,
    ) -> Result<Self, AlgebraError> {
        let m = field.order();
        let zeta_exp = zeta_exp % m;
        if mode == Mode::Strict && !(zeta_exp * l).is_multiple_of(m) {
            return Err(AlgebraError::PhaseNotLthRoot);
        }
        let ord = m / gcd(zeta_exp, m);
        let phases = (0..ord)
            .map(|i| field.root_of_unity((i * zeta_exp) as i64))
            .collect();
        Ok(AlgebraSignature {
            n,
            l,
            mode,
            field,
            zeta_exp,
            phases: Arc::new(phases),
        })
    }

    /// Replaces `ζ` by `ζ_l^j`.
    pub fn with_zeta_power(&self, j: i64) -> Result<Self, AlgebraError> {
        let m = self.field.order();
        let e = (j.rem_euclid(self.l as i64) as usize) * (m / self.l);
        Self::with_parts(self.n, self.l, self.mode, self.field.clone(), e)
    }

    /// Replaces `ζ` by an arbitrary root of unity `ζ_q^k`, enlarging the
    /// coefficient field to order `lcm(m, q)`. Strict mode still requires
    /// `ζ^l = 1`.
    pub fn with_phase(&self, q: usize, k: i64) -> Result<Self, AlgebraError> {
        if q == 0 {
            return Err(CyclotomicError::ZeroOrder.into());
        }
        let m = self.field.order();
        let big = m / gcd(m, q) * q;
        let field = if big == m { self.field.clone() } else { CyclotomicField::new(big) };
        let e = k.rem_euclid(q as i64) as usize * (big / q);
        Self::with_parts(self.n, self.l, self.mode, field, e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// `e` with `ζ = ζ_m^e`, `m` the field order.
    pub fn zeta_exponent(&self) -> usize {
        self.zeta_exp
    }

    pub fn zeta(&self) -> CyclotomicNumber {
        self.phases[1 % self.phases.len()].clone()
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> &CyclotomicNumber {
        &self.phases[k.rem_euclid(self.phases.len() as i64) as usize]
    }

    /// Whether `ζ` is the default `e^{2πi/l}`.
    pub fn has_default_zeta(&self) -> bool {
        self.field == CyclotomicField::for_weyl_order(self.l)
            && self.zeta_exp == self.field.order() / self.l
    }

    /// Brings a scalar into the coefficient field, lifting from a subfield
    /// `Q(ζ_d)` with `d | m` when needed.
    pub fn coefficient(&self, c: &CyclotomicNumber) -> Result<CyclotomicNumber, AlgebraError> {
        if c.order() == self.field.order() {
            Ok(c.clone())
        } else {
            Ok(c.lift(self.field.order())?)
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::SignatureMismatch(
                format!("{self:?}"),
                format!("{other:?}"),
            ))
        }
    }
}
