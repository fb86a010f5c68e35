//! The Sonnenschein matrix of h(z) = sin^2(pi z / 2), in exact pi-graded
//! rationals: the coefficient of z^m always carries exactly pi^m.
//!
//! Since h(0) = 0 the matrix is lower triangular in the z-power and every
//! column sum is a finite sum. The geometric inverse is
//! 1/(1 - h(z)) = sec^2(pi z / 2), whose even coefficients have a closed form
//! in Bernoulli numbers; odd coefficients vanish.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{bernoulli, factorial, int_binomial, PiGradedValue, Rational};
use crate::series::TruncatedSeries;

/// Exact expansion of sin^2(pi z / 2) = (1 - cos(pi z)) / 2: the coefficient
/// of z^(2m) for m >= 1 is (-1)^(m+1) / (2 (2m)!) * pi^(2m); the constant
/// term and all odd coefficients are zero.
pub fn sin2_series(order: usize) -> TruncatedSeries<PiGradedValue> {
    let mut coeffs = vec![PiGradedValue::zero(); order + 1];
    for m in 1..=(order / 2) {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let q = Rational::from_big(BigInt::from(sign), 2 * factorial(2 * m as u64))
            .expect("factorial is positive");
        coeffs[2 * m] = PiGradedValue::new(q, 2 * m as u32);
    }
    TruncatedSeries::from_coeffs(coeffs, order).expect("list length is order + 1")
}

/// Closed-form matrix entry: the coefficient of z^power in [sin^2(pi z/2)]^n.
///
/// From the power-reduction identity
///
///   sin^(2n) t = C(2n,n)/4^n
///              + ((-1)^n / 2^(2n-1)) sum_{r=0}^{n-1} (-1)^r C(2n,r) cos(2(n-r)t)
///
/// with t = pi z / 2, the coefficient of z^(2k) for n, k >= 1 is
///
///   pi^(2k) sum_{r=0}^{n-1} (-1)^(n+r+k) (n-r)^(2k) C(2n,r) / (2^(2n-1) (2k)!).
///
/// Row n = 0 is the identity row; odd powers and (for n >= 1) the constant
/// term are zero. Must agree exactly with the series oracle sin2_series^n.
pub fn sin2_entry(n: u64, power: u64) -> PiGradedValue {
    if n == 0 {
        return if power == 0 {
            PiGradedValue::one()
        } else {
            PiGradedValue::zero()
        };
    }
    if power == 0 || power % 2 == 1 {
        return PiGradedValue::zero();
    }
    let k = power / 2;
    let mut numerator = BigInt::zero();
    for r in 0..n {
        let term = BigInt::from(n - r).pow(2 * k as u32) * int_binomial(2 * n, r);
        if (n + r + k) % 2 == 0 {
            numerator += term;
        } else {
            numerator -= term;
        }
    }
    let denominator = (BigInt::one() << (2 * n - 1)) * factorial(2 * k);
    let q = Rational::from_big(numerator, denominator).expect("denominator is positive");
    PiGradedValue::new(q, power as u32)
}

/// Even-column sums of the sin^2 matrix: the coefficient of z^(2n) in
/// sec^2(pi z / 2), in closed form
///
///   (-1)^n (8n+4) (2^(2n+2) - 1) B_(2n+2) / (2n+2)! * pi^(2n)
///
/// for n = 0, 1, ... (entry n has grade 2n). Odd-column sums are zero.
pub fn sec2_column_sums(count: usize) -> Vec<PiGradedValue> {
    (0..count as u64)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let scale = BigInt::from(sign * (8 * n as i64 + 4))
                * ((BigInt::one() << (2 * n + 2)) - BigInt::one());
            let q = Rational::from_big(scale, factorial(2 * n + 2))
                .expect("factorial is positive");
            let q = &q * &bernoulli(2 * n as u32 + 2);
            PiGradedValue::new(q, 2 * n as u32)
        })
        .collect()
}

/// Column sums over all z-powers 0..=max_power, zeros interleaved at the odd
/// powers.
pub fn sec2_column_sums_interleaved(num_cols: usize) -> Vec<PiGradedValue> {
    let even = sec2_column_sums(num_cols.div_ceil(2));
    (0..num_cols)
        .map(|p| {
            if p % 2 == 0 {
                even[p / 2].clone()
            } else {
                PiGradedValue::zero()
            }
        })
        .collect()
}
