//! Exact computations with C-Fuchsian subgroups of Picard modular groups
//! PSU_h(O_K), for the Hermitian form h(z) = −z₀z̄₂ − z₂z̄₀ + |z₁|² of
//! signature (1, 2) over an imaginary quadratic field K.
//!
//! - [`exactnum`]: ℚ, K, O_K, ideals and multiquadratic towers.
//! - [`hermitian`]: the form h, projective points, chains and Heisenberg translations.
//! - [`group`]: SU_h(K) elements, generator sets, orbits and fixed points.
//! - [`fuchsian`]: discriminants and the explicit standardizing conjugators.
//! - [`quaternion`]: quaternion algebras, Hilbert symbols and the commensurability classifier.

pub mod error;
pub mod exactnum;
pub mod fuchsian;
pub mod group;
pub mod hermitian;
pub mod matrix;
pub mod parse;
pub mod quaternion;

pub use error::{Error, Result};
