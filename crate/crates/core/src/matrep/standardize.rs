use num_complex::Complex64;

use super::pairs::{clock, shift, zeta};
use super::relations::scaled_tolerance;
use super::{ComplexMatrix, RepError};

/// A change of basis bringing a Weyl pair to standard form: `M⁻¹U'M = U` and
/// `M⁻¹V'M = μV`.
#[derive(Clone, Debug)]
pub struct Standardized {
    pub m: ComplexMatrix,
    /// The scalar with `V'^l = μ^l`.
    pub mu: Complex64,
}

/// Finds `M` with `M⁻¹U'M = U`, `M⁻¹V'M = μV` for an irreducible pair with
/// `U'V' = ζV'U'` and `U'^l = 1`.
///
/// The first column of `M` spans the `μ`-eigenspace of `V'`, normalised with
/// its first non-negligible entry real and positive; the remaining columns are
/// `m_j = U'^{l-j} m_0`. The result is unique up to that one overall phase.
pub fn standardize_weyl_pair(
    u: &ComplexMatrix,
    v: &ComplexMatrix,
    l: usize,
) -> Result<Standardized, RepError> {
    if l < 2 {
        return Err(RepError::OrderTooSmall(l));
    }
    let d = u.dim();
    if v.dim() != d {
        return Err(RepError::DimensionMismatch { expected: d, got: v.dim() });
    }
    let z = zeta(l);
    let scale = u.max_abs_entry().max(v.max_abs_entry());
    let rel_tol = scaled_tolerance(1e-8, d, scale * scale);
    let deviation = (u * v).distance(&(v * u).scale(z));
    if !(deviation <= rel_tol) {
        return Err(RepError::RelationViolated { deviation, tolerance: rel_tol });
    }
    u.inverse()?;
    v.inverse()?;
    if d != l {
        return Err(RepError::DegenerateSpectrum { multiplicity: d.div_ceil(l) });
    }
    let ident = ComplexMatrix::identity(d);
    let pow_tol = scaled_tolerance(1e-8, d, 1.0);
    if u.pow(l as u64).distance(&ident) > pow_tol {
        return Err(RepError::NotNormalized);
    }
    let vl = v.pow(l as u64);
    let c = vl.trace() / d as f64;
    if vl.distance(&ident.scale(c)) > scaled_tolerance(1e-8, d, c.norm()) {
        return Err(RepError::NotNormalized);
    }
    // The l-th root of c closest to the positive real axis.
    let base = c.powf(1.0 / l as f64);
    let mu = (0..l as i32)
        .map(|k| base * z.powi(k))
        .min_by(|a, b| a.arg().abs().total_cmp(&b.arg().abs()))
        .expect("l >= 2");

    // Projector onto ker(V' - μ): (1/l) Σ_k (V'/μ)^k.
    let w = v.scale(mu.inv());
    let mut term = ident.clone();
    let mut proj = ComplexMatrix::zeros(d);
    for _ in 0..l {
        proj = &proj + &term;
        term = &term * &w;
    }
    let proj = proj.scale(Complex64::new(1.0 / l as f64, 0.0));
    let rank = proj.trace().re.round();
    if rank != 1.0 {
        return Err(RepError::DegenerateSpectrum {
            multiplicity: rank.max(0.0) as usize,
        });
    }
    let col = (0..d)
        .map(|j| proj.column(j))
        .max_by(|a, b| norm(a).total_cmp(&norm(b)))
        .expect("d >= 2");
    let n = norm(&col);
    let lead = col
        .iter()
        .find(|x| x.norm() > 1e-6 * n)
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = lead.conj() / (lead.norm() * n);
    let e0: Vec<Complex64> = col.iter().map(|x| x * phase).collect();

    let mut columns = vec![Vec::new(); l];
    columns[0] = e0.clone();
    let mut cur = e0;
    // m_{l-1} = U' m_0, m_{l-2} = U'^2 m_0, …
    for j in (1..l).rev() {
        cur = u.apply(&cur);
        columns[j] = cur.clone();
    }
    let m = ComplexMatrix::from_columns(&columns);
    let m_inv = m.inverse()?;
    let check_u = (&(&m_inv * u) * &m).distance(&shift(l));
    let check_v = (&(&m_inv * v) * &m).distance(&clock(l).scale(mu));
    let tol = scaled_tolerance(1e-7, d, scale);
    let worst = check_u.max(check_v);
    if !(worst <= tol) {
        return Err(RepError::RelationViolated { deviation: worst, tolerance: tol });
    }
    Ok(Standardized { m, mu })
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
