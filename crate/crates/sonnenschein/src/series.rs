//! Truncated formal power series over an abstract exact coefficient type.
//!
//! A series holds coefficients c_0..c_K of z^0..z^K; K is the truncation
//! order, explicit per series, and binary operations require matching orders
//! (silent coercion hides bugs in coefficient extraction). All arithmetic is
//! exact in the coefficient type up to degree K; higher degrees are
//! discarded, never rounded.

use num_complex::Complex64;

use crate::coeff::Coefficient;
use crate::error::Error;

/// Coefficients c_0..c_K of a formal power series, truncated at order K.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Coefficient> TruncatedSeries<F> {
    /// Build a series from low-order coefficients, zero-padding up to `order`.
    /// Rejects lists longer than order + 1.
    pub fn from_coeffs(values: Vec<F>, order: usize) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if values.len() > order + 1 {
            return Err(Error::TooManyCoefficients {
                given: values.len(),
                order,
                max: order + 1,
            });
        }
        let mut coeffs = values;
        coeffs.resize(order + 1, F::zero());
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn constant(value: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = value;
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    /// The monomial `value * z^power`. A power beyond the truncation order
    /// is congruent to zero and yields the zero series.
    pub fn monomial(value: F, power: usize, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        if power <= order {
            coeffs[power] = value;
        }
        TruncatedSeries { coeffs }
    }

    /// The identity series z.
    pub fn z(order: usize) -> Self {
        Self::monomial(F::one(), 1, order)
    }

    /// Truncation order K (inclusive highest retained degree).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> &F {
        &self.coeffs[degree]
    }

    pub fn constant_term(&self) -> &F {
        &self.coeffs[0]
    }

    fn require_same_order(&self, rhs: &Self) -> Result<(), Error> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.require_same_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.require_same_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Cauchy product truncated at the shared order:
    /// c_j = sum_{i=0}^{j} a_i b_{j-i}.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.require_same_order(rhs)?;
        let k = self.order();
        let mut out = vec![F::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(k + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Exact truncated n-th power; n = 0 gives the constant series 1.
    /// The coefficient of z^k in f^n is the summability-matrix entry f_{n,k}.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("orders match by construction");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders match by construction");
            }
        }
        result
    }

    /// The geometric inverse g = 1/(1 - f), satisfying (1 - f) * g = 1
    /// exactly up to the truncation order, by the linear recurrence
    ///
    ///   g_0 = 1/(1 - f_0),   g_j = (sum_{i=1}^{j} f_i g_{j-i}) / (1 - f_0).
    ///
    /// Fails when 1 - f_0 has no inverse (in particular f_0 = 1).
    pub fn geom_inverse(&self) -> Result<Self, Error> {
        let head = F::one() - self.coeffs[0].clone();
        let inv_head = head.try_invert().ok_or(Error::NonInvertible)?;
        let k = self.order();
        let mut g: Vec<F> = Vec::with_capacity(k + 1);
        g.push(inv_head.clone());
        for j in 1..=k {
            let mut acc = F::zero();
            for i in 1..=j {
                if self.coeffs[i].is_zero() || g[j - i].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[i].clone() * g[j - i].clone();
            }
            g.push(acc * inv_head.clone());
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Drop to a lower truncation order. Panics if `order` exceeds the
    /// current one (an extension would have to invent coefficients).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Horner evaluation of the truncated polynomial in double precision.
    /// Approximate by nature; exactness lives in the coefficient layer.
    pub fn eval_numeric(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex_f64();
        }
        acc
    }

    pub fn map<G: Coefficient>(&self, f: impl Fn(&F) -> G) -> TruncatedSeries<G> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The same series with coefficients converted to complex doubles.
    pub fn to_numeric(&self) -> TruncatedSeries<Complex64> {
        self.map(Coefficient::to_complex_f64)
    }
}
