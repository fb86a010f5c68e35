//! The coefficient contract shared by all series arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::exact::{ComplexRational, PiGradedValue, Rational};

/// Abstract coefficient for truncated power series: a commutative ring with
/// partial inversion and a numeric view.
///
/// Exact instantiations: [`Rational`], [`ComplexRational`], [`PiGradedValue`].
/// [`Complex64`] instantiates the same contract approximately for the numeric
/// verification layer; exactness claims never rest on it.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, or None when the value has no inverse
    /// (zero everywhere; additionally positive grades for pi-graded values).
    fn try_invert(&self) -> Option<Self>;

    /// Approximate value as a complex double, for numeric checks only.
    fn to_complex_f64(&self) -> Complex64;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn try_invert(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn to_complex_f64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl Coefficient for ComplexRational {
    fn zero() -> Self {
        ComplexRational::zero()
    }

    fn one() -> Self {
        ComplexRational::one()
    }

    fn is_zero(&self) -> bool {
        ComplexRational::is_zero(self)
    }

    fn try_invert(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn to_complex_f64(&self) -> Complex64 {
        ComplexRational::to_complex_f64(self)
    }
}

impl Coefficient for PiGradedValue {
    fn zero() -> Self {
        PiGradedValue::zero()
    }

    fn one() -> Self {
        PiGradedValue::one()
    }

    fn is_zero(&self) -> bool {
        PiGradedValue::is_zero(self)
    }

    fn try_invert(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn to_complex_f64(&self) -> Complex64 {
        PiGradedValue::to_complex_f64(self)
    }
}

impl Coefficient for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn try_invert(&self) -> Option<Self> {
        if Coefficient::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }

    fn to_complex_f64(&self) -> Complex64 {
        *self
    }
}
