use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;

use super::rational::Rational;
use crate::error::Error;

/// Exact rational multiple of a power of pi: the value `q * pi^grade`.
///
/// Multiplication adds grades. Addition is defined only between values of
/// equal grade (or with zero); adding mismatched nonzero grades panics,
/// because in every computation here the coefficient of z^m carries exactly
/// pi^m, so a mismatch is a logic bug that must surface loudly.
///
/// Zero is canonicalized to grade 0 and is neutral for addition at any grade.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiGradedValue {
    q: Rational,
    grade: u32,
}

impl PiGradedValue {
    pub fn new(q: Rational, grade: u32) -> Self {
        if q.is_zero() {
            PiGradedValue {
                q,
                grade: 0,
            }
        } else {
            PiGradedValue { q, grade }
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, 0)
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), 0)
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), 0)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.q
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// Inverse exists only for nonzero values of grade 0 (grades stay nonnegative).
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() || self.grade != 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.q.inverse()?, 0))
    }

    /// Numeric value q * pi^grade with pi as the nearest double.
    pub fn to_f64(&self) -> f64 {
        self.q.to_f64() * std::f64::consts::PI.powi(self.grade as i32)
    }

    pub fn to_complex_f64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl fmt::Display for PiGradedValue {
    /// Text form: "q" for grade 0, "q*pi" for grade 1, "q*pi^m" above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.grade {
            0 => write!(f, "{}", self.q),
            1 => write!(f, "{}*pi", self.q),
            m => write!(f, "{}*pi^{}", self.q, m),
        }
    }
}

impl fmt::Debug for PiGradedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PiGradedValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s.split_once("*pi") {
            None => Ok(Self::from_rational(s.parse()?)),
            Some((q, rest)) => {
                let grade = match rest {
                    "" => 1,
                    _ => rest
                        .strip_prefix('^')
                        .and_then(|g| g.parse::<u32>().ok())
                        .ok_or_else(|| Error::parse("pi-graded value", s))?,
                };
                Ok(Self::new(q.parse()?, grade))
            }
        }
    }
}

impl Add<&PiGradedValue> for &PiGradedValue {
    type Output = PiGradedValue;

    fn add(self, rhs: &PiGradedValue) -> PiGradedValue {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.grade, rhs.grade,
            "pi-grade mismatch: cannot add grade {} and grade {}",
            self.grade, rhs.grade
        );
        PiGradedValue::new(&self.q + &rhs.q, self.grade)
    }
}

impl Sub<&PiGradedValue> for &PiGradedValue {
    type Output = PiGradedValue;
    fn sub(self, rhs: &PiGradedValue) -> PiGradedValue {
        self + &-rhs
    }
}

impl Mul<&PiGradedValue> for &PiGradedValue {
    type Output = PiGradedValue;
    fn mul(self, rhs: &PiGradedValue) -> PiGradedValue {
        PiGradedValue::new(&self.q * &rhs.q, self.grade + rhs.grade)
    }
}

impl Neg for &PiGradedValue {
    type Output = PiGradedValue;
    fn neg(self) -> PiGradedValue {
        PiGradedValue::new(-&self.q, self.grade)
    }
}

macro_rules! pi_owned_op {
    ($trait:ident, $method:ident) => {
        impl $trait for PiGradedValue {
            type Output = PiGradedValue;
            fn $method(self, rhs: PiGradedValue) -> PiGradedValue {
                (&self).$method(&rhs)
            }
        }
    };
}

pi_owned_op!(Add, add);
pi_owned_op!(Sub, sub);
pi_owned_op!(Mul, mul);

impl Neg for PiGradedValue {
    type Output = PiGradedValue;
    fn neg(self) -> PiGradedValue {
        -&self
    }
}
