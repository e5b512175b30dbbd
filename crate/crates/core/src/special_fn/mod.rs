//! Foundational special functions: θ, Z, ζ, Lambert W, J₀ and a prime table.
//!
//! Everything here is a pure function of its inputs; [`PrimeTable`] is
//! immutable once built and can be shared across threads.

mod bessel;
pub mod dd;
mod lambert;
mod primes;
mod tables;
mod theta;
mod zeta;

pub use bessel::{bessel_j0, j0_series, SERIES_LIMIT as J0_SERIES_LIMIT};
pub use lambert::lambert_w0;
pub use primes::{primes_up_to, PrimeTable, MAX_PRIME_LIMIT};
pub use theta::{ln_gamma, riemann_siegel_theta, theta_dd, theta_derivative};
pub use zeta::{
    euler_maclaurin_terms, hardy_z, hardy_z_riemann_siegel, zeta, zeta_and_derivative,
    zeta_critical, zeta_with_order, ComplexValue, MAX_RELIABLE_HEIGHT, RIEMANN_SIEGEL_FROM,
};
