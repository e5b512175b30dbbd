//! Numerical laboratory for a-points of the Riemann zeta-function on the
//! critical line.
//!
//! The crate is organized bottom-up:
//!
//! * [`special_fn`]: θ, Hardy's Z, ζ in and around the critical strip,
//!   Lambert W, J₀ and prime tables.
//! * [`gram`]: shifted Gram points θ(g) ≡ −φ (mod π) and their spacing.
//! * [`zeros_apoints`]: critical-line zeros, η_t, and a-point location and
//!   counting by the argument principle.
//! * [`approx`]: the approximate formula for log|ζ(½+it)| with all of its
//!   error terms, and Hough's inequality.
//! * [`stats`]: value distribution at shifted Gram points, characteristic
//!   functions, moments, exponential sums and zero-spacing statistics.
//!
//! Batch work runs on rayon when the `parallel` feature is enabled (the
//! default) and sequentially otherwise; see [`par`].

pub mod approx;
mod error;
pub mod gram;
pub mod par;
pub mod quad;
pub mod special_fn;
pub mod stats;
pub mod zeros_apoints;

pub use error::{LabError, Result};
pub use num_complex::Complex64;
