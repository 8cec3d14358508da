//! Seeded samplers for test vectors.
//!
//! Every random stream in the crate is derived from a `u64` seed through
//! [`ChaCha8Rng`], so a seed fully determines coefficient streams. Exact
//! rationals are drawn as `p/q` with `p` uniform in `[-9, 9]` and `q` uniform
//! in `[1, 9]`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{AlgebraElement, AlgebraSignature};
use crate::commforms::{diagonal_symplectic, symplectic_shear, symplectic_transvection, TransformMatrix};
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::matrep::ComplexMatrix;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let p: i64 = rng.random_range(-9..=9);
    let q: i64 = rng.random_range(1..=9);
    BigRational::new(p.into(), q.into())
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    loop {
        let r = rational(rng);
        if r != BigRational::from_integer(0.into()) {
            return r;
        }
    }
}

/// A field element with every power-basis coordinate drawn by [`rational`].
pub fn cyclotomic<R: Rng + ?Sized>(rng: &mut R, field: &CyclotomicField) -> CyclotomicNumber {
    field.from_coeffs((0..field.degree()).map(|_| rational(rng)).collect())
}

/// A rational element of the field (embedded in `Q(ζ_m)`).
pub fn rational_in<R: Rng + ?Sized>(rng: &mut R, field: &CyclotomicField) -> CyclotomicNumber {
    field.from_rational(rational(rng))
}

/// Uniform in the square `[-1, 1] x [-1, 1]`.
pub fn complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let data = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    ComplexMatrix::from_inner(data)
}

/// Haar-ish unitary: `Q` from the QR factorisation of a complex Gaussian
/// matrix, with the phases of `R`'s diagonal folded back in.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, dim).into_inner();
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    ComplexMatrix::from_inner(q)
}

/// A strict- or weak-mode element with at most `max_terms` terms, exponents
/// in `0..l` and coefficients drawn by [`cyclotomic`].
pub fn element<R: Rng + ?Sized>(rng: &mut R, sig: &AlgebraSignature, max_terms: usize) -> AlgebraElement {
    let terms = rng.random_range(1..=max_terms.max(1));
    let mut x = AlgebraElement::zero(sig);
    for _ in 0..terms {
        let exps = (0..sig.n()).map(|_| rng.random_range(0..sig.l() as u32)).collect();
        let c = cyclotomic(rng, sig.field());
        let m = AlgebraElement::monomial(sig, exps, c).expect("exponents below l");
        x = x.add(&m).expect("same signature");
    }
    x
}

/// A product of `factors` random symplectic maps of size `n`: diagonal maps,
/// pair shears and transvections along small integer vectors.
pub fn symplectic<R: Rng + ?Sized>(rng: &mut R, n: usize, factors: usize) -> TransformMatrix {
    let mut s = TransformMatrix::identity(n);
    for _ in 0..factors {
        let g = match rng.random_range(0..3) {
            0 => diagonal_symplectic(&(0..n / 2).map(|_| nonzero_rational(rng)).collect::<Vec<_>>()),
            1 => symplectic_shear(n, rng.random_range(1..=n / 2), &rational(rng)),
            _ => {
                let v: Vec<BigRational> = (0..n)
                    .map(|_| BigRational::from_integer(rng.random_range(-2i64..=2).into()))
                    .collect();
                symplectic_transvection(&v, &rational(rng))
            }
        }
        .expect("even size with nonzero parameters");
        s = s.compose(&g).expect("same size");
    }
    s
}
