//! Exponential-type atomic orbitals and their momentum-space Fourier
//! transforms.
//!
//! Six families in position space (Slater-type, bound-state hydrogen,
//! Coulomb Sturmians, Lambda functions, B functions, Guseinov functions),
//! their closed-form transforms under the forward kernel
//! (2 pi)^{-3/2} integral e^{-i p.r} f(r) d^3r, an adaptive quadrature oracle
//! that anchors every closed form, and a harness quantifying how the
//! alternating-sign Slater-type expansion route loses digits as n grows while
//! the reduced-Bessel route does not.

mod dd;
pub mod harness;
pub mod hyp;
pub mod momentum;
pub mod oracle;
pub mod orbitals;
pub mod specfun;

pub use specfun::{QuantumNumbers, Vector3};

/// Complex scalar carried by every momentum-space amplitude.
pub type Complex = num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid model, parameter constraint violation, or a representation
    /// evaluated outside its convergence domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The adaptive quadrature ran out of refinement rounds.
    #[error("quadrature non-convergence: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
