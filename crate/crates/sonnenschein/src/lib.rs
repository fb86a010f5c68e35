//! Exact construction of Sonnenschein summability matrices and their column
//! sums.
//!
//! A Sonnenschein matrix is the infinite matrix (f_{n,k}) whose row n lists
//! the power-series coefficients of f(z)^n, for an analytic f with f(1) = 1.
//! Its column sums are the coefficients of the geometric inverse
//! 1/(1 - f(z)) whenever |f(0)| < 1, which turns column summation into
//! coefficient extraction.
//!
//! The crate builds these matrices exactly — over arbitrary-precision
//! rationals, complex rationals, or pi-graded rationals — and checks closed
//! forms against the series engine:
//!
//! * the Karamata matrix K[alpha, beta] of
//!   f(z) = (alpha + (1-alpha-beta) z)/(1 - beta z), with column sums
//!   1/(1-alpha) and (1-beta)/(1-alpha) ([`KaramataParams`]);
//! * the matrix of h(z) = sin^2(pi z / 2), whose column sums are the
//!   sec^2(pi z / 2) coefficients with a Bernoulli-number closed form
//!   ([`sin2_series`], [`sec2_column_sums`]);
//! * Bernoulli numbers by an explicit double sum and, independently, by the
//!   standard recurrence ([`bernoulli`], [`bernoulli_recurrence`]).
//!
//! Floating point appears only in the explicitly numeric layer
//! ([`verify_column_sums`], [`TruncatedSeries::eval_numeric`],
//! [`SummabilityMatrix::transform_sequence`]); everything else is exact.
//!
//! Each major capability has a runnable demo under `examples/`, and the
//! `sonnenschein` binary exposes the same operations as subcommands
//! (`matrix`, `colsums`, `bernoulli`, `verify`).

pub mod cli;
pub mod coeff;
pub mod error;
pub mod exact;
pub mod karamata;
pub mod matrix;
pub mod output;
pub mod series;
pub mod sin2;
pub mod verify;

pub use coeff::Coefficient;
pub use error::Error;
pub use exact::{
    bernoulli, bernoulli_recurrence, bernoulli_sequence, binomial, ComplexRational,
    PiGradedValue, Rational,
};
pub use karamata::KaramataParams;
pub use matrix::{
    build_matrix, column_sums_via_series, is_contractive_at_zero, SummabilityMatrix,
};
pub use output::{OutputDocument, TaggedValue};
pub use series::TruncatedSeries;
pub use sin2::{sec2_column_sums, sec2_column_sums_interleaved, sin2_entry, sin2_series};
pub use verify::{verify_column_sums, ColumnCheck, VerificationReport};
