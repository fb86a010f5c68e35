use num_bigint::BigInt;
use num_traits::Zero;

use super::binomial::int_binomial;
use super::rational::Rational;

/// Bernoulli number B_n by the explicit double sum
///
///   B_n = sum_{k=0}^{n} 1/(k+1) * sum_{r=0}^{k} (-1)^r C(k,r) r^n
///
/// with the convention 0^0 = 1 inside the inner sum. This formula produces
/// the B_1 = -1/2 convention, which is fixed globally for this crate.
///
/// Cost is O(n^2) big-integer operations; fine at desk scale. The recurrence
/// [`bernoulli_recurrence`] is the fast independent cross-check.
pub fn bernoulli(n: u32) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = BigInt::zero();
        for r in 0..=k {
            // r^n with 0^0 = 1 (BigInt::pow already returns 1 for exponent 0)
            let power = BigInt::from(r).pow(n);
            let term = int_binomial(k as u64, r as u64) * power;
            if r % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        let contribution =
            Rational::from_big(inner, BigInt::from(k + 1)).expect("k + 1 is positive");
        total = &total + &contribution;
    }
    total
}

/// Bernoulli number B_n by the recurrence
///
///   B_0 = 1,   B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
///
/// equivalent to sum_{j=0}^{m} C(m+1, j) B_j = 0. Same convention as
/// [`bernoulli`] (B_1 = -1/2); the two must agree exactly for every n.
pub fn bernoulli_recurrence(n: u32) -> Rational {
    bernoulli_sequence(n)
        .pop()
        .expect("sequence is never empty")
}

/// B_0..B_n computed in one pass of the recurrence.
pub fn bernoulli_sequence(n: u32) -> Vec<Rational> {
    let mut values = Vec::with_capacity(n as usize + 1);
    values.push(Rational::one());
    for m in 1..=n as u64 {
        let mut sum = Rational::zero();
        for (j, b) in values.iter().enumerate() {
            let c = Rational::from_big_integer(int_binomial(m + 1, j as u64));
            sum = &sum + &(&c * b);
        }
        let factor = Rational::from_big(BigInt::from(-1), BigInt::from(m + 1))
            .expect("m + 1 is positive");
        values.push(&factor * &sum);
    }
    values
}
