//! Weyl–Clifford algebras `T(n, l)`.
//!
//! `T(n, l)` is generated by `t_1, …, t_n` with `t_j t_k = ζ t_k t_j` for
//! `j < k` and `t_k^l = 1`, where `ζ = e^{2πi/l}`. At `l = 2` it is the
//! Clifford algebra. The crate provides:
//!
//! - [`cyclotomic`]: exact arithmetic in `Q(ζ_m)`;
//! - [`algebra`]: normal-form products and the identity `(Σ a_k t_k)^l = Σ a_k^l`;
//! - [`qbinom`]: Gaussian binomials and the deformed binomial theorem;
//! - [`matrep`]: matrix generators, relation checks and the Weyl pair standardizer;
//! - [`commforms`]: commutator forms and the transforms between them;
//! - [`cli`]: the `weylclifford` command line.
//!
//! ```
//! use weyl_clifford::algebra::{lame_check, AlgebraSignature};
//!
//! let sig = AlgebraSignature::strict(3, 4).unwrap();
//! let field = sig.field();
//! let coeffs = vec![field.one(), field.root_of_unity(1), field.from_integer(2)];
//! assert!(lame_check(&sig, &coeffs).unwrap().holds);
//! ```

pub mod algebra;
pub mod cli;
pub mod commforms;
pub mod cyclotomic;
pub mod matrep;
pub mod qbinom;
pub mod random;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/qbinom.md")]
    mod qbinom {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
