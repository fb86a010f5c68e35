//! Exact scalar arithmetic: arbitrary-precision rationals, complex rationals,
//! pi-graded rationals, binomial coefficients, and Bernoulli numbers.
//!
//! Every value is immutable and every operation is a pure function with no
//! rounding; doubles only appear at the explicit `to_f64` boundaries.

mod bernoulli;
mod binomial;
mod complex;
mod pi_graded;
mod rational;

pub use bernoulli::{bernoulli, bernoulli_recurrence, bernoulli_sequence};
pub use binomial::binomial;
pub use complex::ComplexRational;
pub use pi_graded::PiGradedValue;
pub use rational::Rational;

pub(crate) use binomial::{factorial, int_binomial};
