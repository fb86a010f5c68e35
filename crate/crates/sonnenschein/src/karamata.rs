//! The Karamata matrix K[alpha, beta]: the Sonnenschein matrix of
//!
//!   f(z) = (alpha + (1 - alpha - beta) z) / (1 - beta z)
//!
//! with complex rational parameters. beta = 0 gives the Euler means.
//! Since 1 - f(z) = (1 - alpha)(1 - z)/(1 - beta z), the column sums have the
//! closed form 1/(1 - alpha) for column 0 and (1 - beta)/(1 - alpha) for all
//! later columns; this module provides both that closed form and the exact
//! entry formula, each independently checkable against the series engine.

use crate::error::Error;
use crate::exact::{binomial, ComplexRational};
use crate::series::TruncatedSeries;

/// Parameters of a Karamata matrix. beta = 1 is rejected at construction
/// (it leaves f undefined at z = 1); alpha = 1 is rejected only where the
/// column-sum formulas need it.
#[derive(Clone, Debug, PartialEq)]
pub struct KaramataParams {
    alpha: ComplexRational,
    beta: ComplexRational,
}

impl KaramataParams {
    pub fn new(alpha: ComplexRational, beta: ComplexRational) -> Result<Self, Error> {
        if beta == ComplexRational::one() {
            return Err(Error::BetaOne);
        }
        Ok(KaramataParams { alpha, beta })
    }

    pub fn alpha(&self) -> &ComplexRational {
        &self.alpha
    }

    pub fn beta(&self) -> &ComplexRational {
        &self.beta
    }

    /// Both parameters inside the open unit disk, checked exactly.
    /// Gates convergence claims only; formal computation works regardless.
    pub fn in_analytic_regime(&self) -> bool {
        self.alpha.modulus_less_than_one() && self.beta.modulus_less_than_one()
    }

    /// Exact expansion of f: the coefficient of z^0 is alpha, and of z^k for
    /// k >= 1 is (1 - alpha - beta) beta^(k-1) + alpha beta^k, obtained by
    /// multiplying the numerator against the geometric series of 1/(1 - beta z).
    pub fn series(&self, order: usize) -> TruncatedSeries<ComplexRational> {
        let linear = &(&ComplexRational::one() - &self.alpha) - &self.beta;
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(self.alpha.clone());
        let mut beta_pow = ComplexRational::one(); // beta^(k-1)
        for _ in 1..=order {
            let c = &(&linear * &beta_pow) + &(&self.alpha * &(&self.beta * &beta_pow));
            coeffs.push(c);
            beta_pow = &beta_pow * &self.beta;
        }
        TruncatedSeries::from_coeffs(coeffs, order).expect("list length is order + 1")
    }

    /// Closed-form matrix entry
    ///
    ///   f_{n,k} = sum_{v=0}^{k} C(n,v) (1-alpha-beta)^v alpha^(n-v)
    ///             C(n+k-v-1, k-v) beta^(k-v)
    ///
    /// using the binomial totalized over signed arguments: at n = 0, v = k the
    /// second factor is C(-1, 0) = 1, which makes row 0 the identity row.
    /// Must agree exactly with the coefficient of z^k in f^n.
    pub fn entry(&self, n: u64, k: u64) -> ComplexRational {
        let linear = &(&ComplexRational::one() - &self.alpha) - &self.beta;
        let mut sum = ComplexRational::zero();
        for v in 0..=k {
            let choose_v = binomial(n as i64, v as i64);
            if choose_v.is_zero() {
                continue; // v > n, and alpha^(n-v) would be ill-formed anyway
            }
            let choose_tail = binomial((n + k - v) as i64 - 1, (k - v) as i64);
            if choose_tail.is_zero() {
                continue;
            }
            let term = linear
                .pow(v as u32)
                .scale(&choose_v)
                .scale(&choose_tail);
            let term = &term * &self.alpha.pow((n - v) as u32);
            let term = &term * &self.beta.pow((k - v) as u32);
            sum = &sum + &term;
        }
        sum
    }

    /// Column sums in closed form: [1/(1-alpha), (1-beta)/(1-alpha), ...].
    /// These are the coefficients of 1/(1 - f); they equal the column-sum
    /// limits when |alpha| < 1 (numeric convergence is verified separately).
    pub fn column_sums(&self, num_cols: usize) -> Result<Vec<ComplexRational>, Error> {
        let one_minus_alpha = &ComplexRational::one() - &self.alpha;
        if one_minus_alpha.is_zero() {
            return Err(Error::AlphaPole);
        }
        let first = one_minus_alpha.inverse()?;
        let rest = &(&ComplexRational::one() - &self.beta) * &first;
        let mut sums = Vec::with_capacity(num_cols);
        if num_cols > 0 {
            sums.push(first);
            sums.resize(num_cols, rest);
        }
        Ok(sums)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{build_matrix, column_sums_via_series};
    use num_complex::Complex64;

    fn cr(rn: i64, rd: i64) -> ComplexRational {
        ComplexRational::from_parts(rn, rd, 0, 1).unwrap()
    }

    fn params(alpha: ComplexRational, beta: ComplexRational) -> KaramataParams {
        KaramataParams::new(alpha, beta).unwrap()
    }

    #[test]
    fn alpha_beta_zero_gives_the_shift_series() {
        let p = params(ComplexRational::zero(), ComplexRational::zero());
        assert_eq!(p.series(4), TruncatedSeries::z(4));
        for n in 0..5u64 {
            for k in 0..5u64 {
                let expect = if n == k { 1 } else { 0 };
                assert_eq!(p.entry(n, k), ComplexRational::from_integer(expect));
            }
        }
    }

    #[test]
    fn series_coefficient_example() {
        // alpha = 1/2, beta = 1/3: coefficient of z^1 is 1/6 + 1/6 = 1/3
        let p = params(cr(1, 2), cr(1, 3));
        let f = p.series(4);
        assert_eq!(f.coeff(0), &cr(1, 2));
        assert_eq!(f.coeff(1), &cr(1, 3));
        assert_eq!(f.coeff(2), &cr(1, 9));
    }

    #[test]
    fn f_of_one_is_one_numerically() {
        for (a, b) in [
            (cr(1, 2), cr(1, 3)),
            (cr(-1, 3), cr(1, 5)),
            (
                ComplexRational::from_parts(1, 4, 1, 4).unwrap(),
                cr(1, 3),
            ),
        ] {
            let p = params(a, b);
            let v = p.series(200).eval_numeric(Complex64::new(1.0, 0.0));
            assert!(
                (v - Complex64::new(1.0, 0.0)).norm() < 1e-9,
                "f(1) = {v} for {p:?}"
            );
        }
    }

    #[test]
    fn entry_row_zero_is_identity() {
        // exercises binomial(-1, 0) = 1 at n = 0, v = k
        let p = params(cr(1, 2), cr(1, 3));
        assert_eq!(p.entry(0, 0), ComplexRational::one());
        for k in 1..8 {
            assert_eq!(p.entry(0, k), ComplexRational::zero());
        }
    }

    #[test]
    fn entry_example_matches_series_oracle() {
        let p = params(cr(1, 2), cr(1, 3));
        assert_eq!(p.entry(1, 1), cr(1, 3));
        let m = build_matrix(&p.series(6), 7, "karamata");
        for n in 0..7u64 {
            for k in 0..7u64 {
                assert_eq!(
                    p.entry(n, k),
                    *m.entry(n as usize, k as usize),
                    "entry({n},{k})"
                );
            }
        }
    }

    #[test]
    fn column_sums_closed_form() {
        let p = params(ComplexRational::zero(), ComplexRational::zero());
        assert_eq!(
            p.column_sums(3).unwrap(),
            vec![ComplexRational::one(); 3]
        );

        let p = params(cr(1, 2), cr(1, 3));
        let sums = p.column_sums(4).unwrap();
        assert_eq!(sums[0], cr(2, 1));
        for k in 1..4 {
            assert_eq!(sums[k], cr(4, 3));
        }
    }

    #[test]
    fn column_sums_match_series_route() {
        let p = params(cr(1, 2), cr(1, 3));
        let via_series = column_sums_via_series(&p.series(16)).unwrap();
        assert_eq!(p.column_sums(17).unwrap(), via_series);
    }

    #[test]
    fn alpha_one_is_a_pole() {
        let p = params(cr(1, 1), ComplexRational::zero());
        assert_eq!(p.column_sums(4), Err(Error::AlphaPole));
    }

    #[test]
    fn beta_one_is_rejected() {
        assert_eq!(
            KaramataParams::new(cr(1, 2), cr(1, 1)),
            Err(Error::BetaOne)
        );
    }

    #[test]
    fn analytic_regime_flag() {
        assert!(params(cr(1, 2), cr(1, 3)).in_analytic_regime());
        assert!(!params(cr(3, 2), cr(0, 1)).in_analytic_regime());
        // |3/5 + 4/5 i| = 1 exactly: not inside the disk
        let edge = ComplexRational::from_parts(3, 5, 4, 5).unwrap();
        assert!(!params(edge, cr(0, 1)).in_analytic_regime());
    }
}
