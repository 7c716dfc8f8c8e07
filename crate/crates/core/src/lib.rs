//! Spectral-statistics laboratory for random-matrix ensembles interpolating
//! between Poisson, GOE and GUE statistics.
//!
//! The crate covers the full pipeline used in microwave-billiard style
//! analyses:
//!
//! - [`ensembles`]: sampling of GOE/GUE matrices, the Rosenzweig-Porter
//!   (Poisson to GUE) ensemble and the GOE-to-GUE crossover ensemble, with
//!   deterministic per-realization random streams.
//! - [`billiards`]: closed-form circle-billiard spectra (Bessel zeros) and
//!   periodic-orbit lengths, used as an independent oracle.
//! - [`unfolding`]: Weyl-formula and polynomial unfolding to mean spacing one.
//! - [`observables`]: spacing distributions, spacing ratios, number variance,
//!   two-point cluster function, spectral form factor, power spectrum and
//!   length spectra, plus Poisson/GOE/GUE reference curves.
//! - [`analytics`]: exact transition curves for the Rosenzweig-Porter model
//!   (form factor, two-point cluster function, number variance, spacing
//!   surmise) and the special functions they require.
//! - [`scattering`]: Heidelberg-approach S-matrix model with antenna and
//!   absorptive channels, and its fluctuation statistics.
//! - [`inference`]: extraction of the transition parameters (lambda, xi,
//!   tau_abs) from spectra and S-matrix data.
//!
//! All numerical kernels are generic over the floating-point type through
//! [`Scalar`]; the concrete aliases below fix `f64`, which is what the stated
//! accuracy targets assume.

pub mod analytics;
pub mod billiards;
pub mod ensembles;
pub mod error;
pub mod inference;
pub mod observables;
pub mod quad;
pub mod rng;
pub mod scalar;
pub mod scattering;
pub mod special;
pub mod stats;
pub mod unfolding;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar type of the concrete API.
pub type Real = f64;

/// Complex value over the default scalar.
pub type Complex = num_complex::Complex<Real>;

pub type EnsembleSpec = ensembles::EnsembleSpec<Real>;
pub type HermitianMatrix = ensembles::HermitianMatrix<Real>;
