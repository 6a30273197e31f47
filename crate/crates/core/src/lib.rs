//! Verification toolkit for the quaplectic group `U(3,1) ⋉ H(3,1)` of Born
//! reciprocity and its scalar (relativistic oscillator) representation.
//!
//! The crate is organised bottom-up:
//!
//! - [`units`]: reciprocal-relativity scales derived from `b`, `c`, `ħ`.
//! - [`algebra`]: exact structure constants of the quaplectic algebra and of
//!   the canonical algebra `sp(8,ℝ) ⋉ h(4)`, Jacobi scans, hermitian
//!   conjugation, the Lorentz tensor form and `b → ∞` contractions.
//! - [`fock`]: the truncated four-mode Fock representation, built from an
//!   exact normal-ordered polynomial layer and sparse matrices.
//! - [`gaussian`]: the 8×8 phase-space layer (symplectic form, Williamson
//!   normal form, analytic Gaussian covariances).
//! - [`states`]: squeezed and coherent states, covariance matrices and the
//!   Schrödinger–Robertson determinant bound.
//! - [`invariants`]: group sweeps of `det Σ`, the reciprocity map, tensor
//!   singlets and the Born–Green spectrum.
//! - [`suites`]: the aggregated `verify-all` run used by the CLI.
//!
//! Every runnable capability has a matching program under `examples/`.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod invariants;
pub mod io;
pub mod states;
pub mod suites;
pub mod units;

pub use error::{Error, Result};

/// Lorentz metric `diag(+1, -1, -1, -1)`.
pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Lorentz metric entry as a signed integer.
#[inline]
pub fn eta(mu: usize) -> i64 {
    if mu == 0 {
        1
    } else {
        -1
    }
}
