//! Computation in higher-order weighted Dirichlet spaces on the unit disk.
//!
//! Functions are finite Taylor expansions ([`TaylorPoly`]). The crate provides
//!
//! * the seminorms `D_{μ,m}` for the uniform measure and for finite sums of
//!   point masses, through the local Douglas decomposition `f = α + (z−λ) g`
//!   ([`douglas`]);
//! * the partial-sum counterexample family and weighted summation experiments
//!   ([`summation`], [`weights`]);
//! * interpolation-corrected partial sums for point-mass measures, built both
//!   from a Vandermonde solve and from a two-point recursion ([`dirac`]);
//! * an area-quadrature oracle for the defining integral ([`oracle`]);
//! * the `dirsum` command-line front end ([`cli`]).

pub mod cli;
pub mod coefficients;
pub mod dirac;
pub mod douglas;
pub mod error;
pub mod oracle;
pub mod summation;
pub mod weights;

pub use coefficients::{
    binom, boundary_value, evaluate, partial_sum, read_coefficients, sigma_norm, write_coefficients, Measure, TaylorPoly, UnitPoint,
};
pub use dirac::{converge_dirac, recursion_build, single_point_correction, tail_sum, vandermonde_correct};
pub use douglas::{difference_quotient, local_norm, mu_norm_sq, multi_decompose};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use oracle::{quadrature_norm, QuadratureGrid};
pub use summation::{converge_weighted, counterexample_fn, counterexample_report, lemma47_check, ConvergenceRecord};
pub use weights::{fejer_ramp, modified_taylor, validate, Variant, WeightArray};
