use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::{AlgebraError, AlgebraSignature, Mode};
use crate::cyclotomic::CyclotomicNumber;
use crate::matrep::ComplexMatrix;

/// Exponent vector of a normal-ordered monomial. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn identity(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }
}

/// Sparse sum of normal-ordered monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    sig: AlgebraSignature,
    terms: BTreeMap<Monomial, CyclotomicNumber>,
}

impl AlgebraElement {
    pub fn zero(sig: &AlgebraSignature) -> Self {
        AlgebraElement {
            sig: sig.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(sig: &AlgebraSignature) -> Self {
        let mut x = Self::zero(sig);
        x.terms.insert(Monomial::identity(sig.n()), sig.field().one());
        x
    }

    /// `t_k`, 1-based.
    pub fn generator(sig: &AlgebraSignature, k: usize) -> Result<Self, AlgebraError> {
        if k == 0 || k > sig.n() {
            return Err(AlgebraError::BadIndex { index: k, n: sig.n() });
        }
        let mut exps = vec![0; sig.n()];
        exps[k - 1] = 1;
        Self::monomial(sig, exps, sig.field().one())
    }

    /// `c · t_1^{a_1} ⋯ t_n^{a_n}`. Strict mode rejects exponents `≥ l`.
    pub fn monomial(
        sig: &AlgebraSignature,
        exps: Vec<u32>,
        coeff: CyclotomicNumber,
    ) -> Result<Self, AlgebraError> {
        if exps.len() != sig.n() {
            return Err(AlgebraError::WrongLength {
                expected: sig.n(),
                got: exps.len(),
            });
        }
        if sig.mode() == Mode::Strict {
            if let Some(&e) = exps.iter().find(|&&e| e as usize >= sig.l()) {
                return Err(AlgebraError::ExponentOutOfRange { exponent: e, l: sig.l() });
            }
        }
        let coeff = sig.coefficient(&coeff)?;
        let mut x = Self::zero(sig);
        if !coeff.is_zero() {
            x.terms.insert(Monomial(exps), coeff);
        }
        Ok(x)
    }

    /// `Σ_k c_k t_k`.
    pub fn linear(sig: &AlgebraSignature, coeffs: &[CyclotomicNumber]) -> Result<Self, AlgebraError> {
        if coeffs.len() != sig.n() {
            return Err(AlgebraError::WrongLength {
                expected: sig.n(),
                got: coeffs.len(),
            });
        }
        let mut x = Self::zero(sig);
        for (k, c) in coeffs.iter().enumerate() {
            let t = Self::generator(sig, k + 1)?.scale(c)?;
            x = x.add(&t)?;
        }
        Ok(x)
    }

    pub fn signature(&self) -> &AlgebraSignature {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CyclotomicNumber)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Option<&CyclotomicNumber> {
        self.terms.get(&Monomial(exps.to_vec()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.sig.check_same(&other.sig)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Result<Self, AlgebraError> {
        let c = self.sig.coefficient(c)?;
        let mut out = Self::zero(&self.sig);
        if c.is_zero() {
            return Ok(out);
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * &c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, m: Monomial, c: CyclotomicNumber) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Product of normal-ordered monomials: exponents add, and the phase is
    /// `ζ^{-Σ_{j<k} a_k b_j}`.
    fn monomial_product(&self, a: &Monomial, b: &Monomial) -> (Monomial, i64) {
        let n = a.0.len();
        let mut phase = 0i64;
        let mut suffix = 0i64;
        for j in (0..n).rev() {
            phase -= suffix * b.0[j] as i64;
            suffix += a.0[j] as i64;
        }
        let l = self.sig.l() as u32;
        let exps = a
            .0
            .iter()
            .zip(&b.0)
            .map(|(x, y)| match self.sig.mode() {
                Mode::Strict => (x + y) % l,
                Mode::Weak => x + y,
            })
            .collect();
        (Monomial(exps), phase)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.sig.check_same(&other.sig)?;
        let mut out = Self::zero(&self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (m, phase) = self.monomial_product(a, b);
                let c = &(ca * cb) * self.sig.zeta_pow(phase);
                out.accumulate(m, c);
            }
        }
        Ok(out)
    }

    pub fn power(&self, p: u64) -> Self {
        let mut acc = Self::identity(&self.sig);
        for _ in 0..p {
            acc = acc.multiply(self).expect("same signature");
        }
        acc
    }

    /// Commutes with every generator.
    pub fn is_central(&self) -> bool {
        (1..=self.sig.n()).all(|k| {
            let t = Self::generator(&self.sig, k).expect("index in range");
            self.multiply(&t).expect("same signature") == t.multiply(self).expect("same signature")
        })
    }

    /// Evaluates the element on representation matrices `rep[k-1] ↦ t_k`.
    pub fn to_matrix(&self, rep: &[ComplexMatrix]) -> Result<ComplexMatrix, AlgebraError> {
        if rep.len() != self.sig.n() {
            return Err(AlgebraError::WrongLength {
                expected: self.sig.n(),
                got: rep.len(),
            });
        }
        let d = rep[0].dim();
        if rep.iter().any(|m| m.dim() != d) {
            return Err(AlgebraError::RepresentationMismatch);
        }
        let mut powers: Vec<Vec<ComplexMatrix>> = vec![vec![ComplexMatrix::identity(d)]; rep.len()];
        let mut acc = ComplexMatrix::zeros(d);
        for (m, c) in &self.terms {
            let mut prod = ComplexMatrix::identity(d);
            for (k, &a) in m.0.iter().enumerate() {
                let cache = &mut powers[k];
                while cache.len() <= a as usize {
                    let next = cache.last().expect("nonempty") * &rep[k];
                    cache.push(next);
                }
                if a > 0 {
                    prod = &prod * &cache[a as usize];
                }
            }
            acc = &acc + &prod.scale(c.to_complex());
        }
        Ok(acc)
    }

    pub(super) fn from_parts(
        sig: &AlgebraSignature,
        terms: BTreeMap<Monomial, CyclotomicNumber>,
    ) -> Self {
        AlgebraElement {
            sig: sig.clone(),
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Complex coefficient of each term, in term order.
    pub fn complex_terms(&self) -> Vec<(Monomial, Complex64)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.to_complex()))
            .collect()
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.sig)
    }
}

/// `(c)*t1^a*t2^b + …`; the identity monomial prints as its coefficient.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| match a {
                    1 => format!("t{}", k + 1),
                    _ => format!("t{}^{}", k + 1, a),
                })
                .collect();
            match (word.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{}", word.join("*"))?,
                (false, false) => write!(f, "({c})*{}", word.join("*"))?,
            }
        }
        Ok(())
    }
}
