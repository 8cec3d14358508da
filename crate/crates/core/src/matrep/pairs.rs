//! Single-site constructions: Pauli matrices, the clock-and-shift pair, its
//! degenerate and reducible cousins, τ-triples and the discrete Fourier
//! transform.

use num_complex::Complex64;

use super::{ComplexMatrix, RepError};
use crate::cyclotomic::CyclotomicField;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn check_order(l: usize) -> Result<(), RepError> {
    if l < 2 {
        Err(RepError::OrderTooSmall(l))
    } else {
        Ok(())
    }
}

/// `ζ = e^{2πi/l}`.
pub fn zeta(l: usize) -> Complex64 {
    CyclotomicField::new(l).root_of_unity(1).to_complex()
}

/// `ζ^k`, exact in `Q(ζ_l)` before conversion.
pub fn zeta_pow(l: usize, k: i64) -> Complex64 {
    CyclotomicField::new(l).root_of_unity(k).to_complex()
}

/// `ν = ζ^{(l+1)/2} = e^{πi(l+1)/l}`, computed as `ζ_{2l}^{l+1}`.
pub fn nu(l: usize) -> Complex64 {
    CyclotomicField::new(2 * l)
        .root_of_unity(l as i64 + 1)
        .to_complex()
}

/// `α_k = ζ^{-(k-1)(l-1)/2}`, computed as `ζ_{2l}^{-(k-1)(l-1)}`.
pub fn alpha(k: usize, l: usize) -> Complex64 {
    let e = (k as i64 - 1) * (l as i64 - 1);
    CyclotomicField::new(2 * l).root_of_unity(-e).to_complex()
}

/// σ₁, σ₂, σ₃.
pub fn pauli(i: usize) -> Result<ComplexMatrix, RepError> {
    let rows = match i {
        1 => [c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)],
        2 => [c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)],
        3 => [c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)],
        _ => return Err(RepError::BadIndex { what: "pauli", index: i }),
    };
    ComplexMatrix::from_row_major(2, rows.to_vec())
}

/// The shift matrix `U`: ones on the superdiagonal and in the bottom-left corner.
pub fn shift(l: usize) -> ComplexMatrix {
    degenerate_shift(l, c(1.0, 0.0))
}

/// The clock matrix `V = diag(1, ζ, …, ζ^{l-1})`.
pub fn clock(l: usize) -> ComplexMatrix {
    let diag: Vec<_> = (0..l as i64).map(|k| zeta_pow(l, k)).collect();
    ComplexMatrix::from_diagonal(&diag)
}

fn degenerate_shift(l: usize, a: Complex64) -> ComplexMatrix {
    ComplexMatrix::from_fn(l, |i, j| {
        if j == i + 1 {
            c(1.0, 0.0)
        } else if i == l - 1 && j == 0 {
            a
        } else {
            c(0.0, 0.0)
        }
    })
}

/// The Weyl pair `(U, V)` with `UV = ζVU`.
pub fn weyl_pair(l: usize) -> Result<(ComplexMatrix, ComplexMatrix), RepError> {
    check_order(l)?;
    Ok((shift(l), clock(l)))
}

/// `(S^{(a)}, V^λ)`: the shift with corner entry `a` and `diag(1, λ, …, λ^{l-1})`.
/// For `a = 0` the relation `S V^λ = λ V^λ S` holds for every `λ`.
pub fn degenerate_pair(
    l: usize,
    a: Complex64,
    lambda: Complex64,
) -> Result<(ComplexMatrix, ComplexMatrix), RepError> {
    check_order(l)?;
    let diag: Vec<_> = (0..l as i32).map(|k| lambda.powi(k)).collect();
    Ok((degenerate_shift(l, a), ComplexMatrix::from_diagonal(&diag)))
}

/// Discrete Fourier transform, `F_{kj} = ζ^{-(j-1)(k-1)}/√l` (1-based).
pub fn fourier(l: usize) -> Result<ComplexMatrix, RepError> {
    check_order(l)?;
    let field = CyclotomicField::new(l);
    let norm = (l as f64).sqrt().recip();
    Ok(ComplexMatrix::from_fn(l, |k, j| {
        field.root_of_unity(-((j * k) as i64)).to_complex() * norm
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleVariant {
    /// `(U, ν̄UV, V)`: τ₃ diagonal, reduces to the Pauli matrices at `l = 2`.
    Tau,
    /// `(U, V, νU†V)`.
    Taw,
}

/// Ordered triple satisfying `τ₁τ₂ = ζτ₂τ₁`, `τ₂τ₃ = ζτ₃τ₂`, `τ₁τ₃ = ζτ₃τ₁`
/// and `τᵢ^l = 1`.
pub fn tau_triple(l: usize, variant: TripleVariant) -> Result<[ComplexMatrix; 3], RepError> {
    let (u, v) = weyl_pair(l)?;
    let nu = nu(l);
    Ok(match variant {
        TripleVariant::Tau => {
            let t2 = (&u * &v).scale(nu.conj());
            [u, t2, v]
        }
        TripleVariant::Taw => {
            let t3 = (&u.adjoint() * &v).scale(nu);
            [u, v, t3]
        }
    })
}

/// `(M⁻¹UM, M⁻¹VM, νM⁻¹U†VM)` for an invertible `M`.
pub fn conjugated_triple(l: usize, m: &ComplexMatrix) -> Result<[ComplexMatrix; 3], RepError> {
    let [u, v, w] = tau_triple(l, TripleVariant::Taw)?;
    if m.dim() != l {
        return Err(RepError::DimensionMismatch { expected: l, got: m.dim() });
    }
    let m_inv = m.inverse()?;
    let conj = |a: &ComplexMatrix| &(&m_inv * a) * m;
    Ok([conj(&u), conj(&v), conj(&w)])
}

/// The reducible pair `(U^m, V)` in dimension `l`, obeying the Weyl relation
/// with `ζ' = ζ^m`.
#[derive(Clone, Debug)]
pub struct ReduciblePair {
    pub l: usize,
    pub m: usize,
    pub u: ComplexMatrix,
    pub v: ComplexMatrix,
}

pub fn reducible_pair(l: usize, m: usize) -> Result<ReduciblePair, RepError> {
    check_order(l)?;
    if m <= 1 || m >= l || !l.is_multiple_of(m) {
        return Err(RepError::NotProperDivisor { l, m });
    }
    Ok(ReduciblePair {
        l,
        m,
        u: shift(l).pow(m as u64),
        v: clock(l),
    })
}

impl ReduciblePair {
    /// Size of each irreducible block, `k = l/m`.
    pub fn block_size(&self) -> usize {
        self.l / self.m
    }

    pub fn zeta_prime(&self) -> Complex64 {
        zeta_pow(self.l, self.m as i64)
    }

    /// Permutation `P` with `Pᵀ U^m P = ⊕ U_k` and `Pᵀ V P = ⊕ ζ^{j} V_k`:
    /// new index `r·k + j` corresponds to old index `r + j·m`.
    pub fn permutation(&self) -> ComplexMatrix {
        let k = self.block_size();
        ComplexMatrix::from_fn(self.l, |old, new| {
            let (r, j) = (new / k, new % k);
            if old == r + j * self.m {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
    }

    /// The expected block-diagonal form `(⊕_j U_k, ⊕_j ζ^{j} V_k)`, `j = 0..m`.
    pub fn block_form(&self) -> (ComplexMatrix, ComplexMatrix) {
        let k = self.block_size();
        let (uk, vk) = (shift(k), clock(k));
        let mut u = ComplexMatrix::zeros(self.l);
        let mut v = ComplexMatrix::zeros(self.l);
        for r in 0..self.m {
            let phase = zeta_pow(self.l, r as i64);
            u = &u + &embed_block(&uk, r, self.m);
            v = &v + &embed_block(&vk.scale(phase), r, self.m);
        }
        (u, v)
    }
}

fn embed_block(block: &ComplexMatrix, r: usize, count: usize) -> ComplexMatrix {
    let k = block.dim();
    ComplexMatrix::from_fn(k * count, |i, j| {
        if i / k == r && j / k == r {
            block.get(i % k, j % k)
        } else {
            c(0.0, 0.0)
        }
    })
}
