use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;

use super::rational::Rational;
use crate::error::Error;

/// Exact complex number with rational real and imaginary parts.
/// Arithmetic is field arithmetic in Q(i): no rounding ever.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_real(Rational::from_integer(n))
    }

    /// Convenience constructor from numerator/denominator pairs.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Result<Self, Error> {
        Ok(ComplexRational {
            re: Rational::new(re_num, re_den)?,
            im: Rational::new(im_num, im_den)?,
        })
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        ComplexRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|^2 = re^2 + im^2, exact.
    pub fn norm_sqr(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv_n = n.inverse()?;
        Ok(ComplexRational {
            re: &self.re * &inv_n,
            im: &(-&self.im) * &inv_n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, s: &Rational) -> Self {
        ComplexRational {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn to_complex_f64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Exact test for |z| < 1 (compares |z|^2 against 1 in Q).
    pub fn modulus_less_than_one(&self) -> bool {
        self.norm_sqr() < Rational::one()
    }
}

impl fmt::Display for ComplexRational {
    /// Text form "re+imi" with both parts in rational form, e.g. "1/2+0i", "1/4-1/4i".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ComplexRational {
    type Err = Error;

    /// Accepts "re" (imaginary part zero) or "re+imi" / "re-imi",
    /// each part in rational form: "3", "1/2+1/4i", "-1/2-3/4i".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let body = match s.strip_suffix('i') {
            None => return Ok(Self::from_real(s.parse()?)),
            Some(body) => body,
        };
        // The separating sign is the unique '+' or '-' past index 0; rational
        // parts carry no interior signs.
        let seps: Vec<usize> = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .collect();
        match seps.as_slice() {
            [p] => Ok(ComplexRational {
                re: body[..*p].parse()?,
                im: body[*p..].parse()?,
            }),
            _ => Err(Error::parse("complex rational", s)),
        }
    }
}

impl Add<&ComplexRational> for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&ComplexRational> for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&ComplexRational> for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! complex_owned_op {
    ($trait:ident, $method:ident) => {
        impl $trait for ComplexRational {
            type Output = ComplexRational;
            fn $method(self, rhs: ComplexRational) -> ComplexRational {
                (&self).$method(&rhs)
            }
        }
    };
}

complex_owned_op!(Add, add);
complex_owned_op!(Sub, sub);
complex_owned_op!(Mul, mul);

impl Div for ComplexRational {
    type Output = ComplexRational;

    /// Panics on a zero divisor; use [`ComplexRational::checked_div`] for an error.
    fn div(self, rhs: ComplexRational) -> ComplexRational {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        -&self
    }
}
