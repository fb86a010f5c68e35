use num_bigint::BigInt;
use num_traits::One;

use super::rational::Rational;

/// Generalized binomial coefficient C(m, j), total over all signed integers.
///
/// Defined by the falling factorial: C(m, j) = m(m-1)...(m-j+1) / j! for
/// j > 0, C(m, 0) = 1 (empty product, so C(-1, 0) = 1), and C(m, j) = 0 for
/// j < 0. For 0 <= m < j this yields 0; for negative m it is generally
/// nonzero, e.g. C(-2, 3) = -4.
pub fn binomial(m: i64, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    if j == 0 {
        return Rational::one();
    }
    let mut falling = BigInt::one();
    for t in 0..j {
        falling *= BigInt::from(m - t);
    }
    // The quotient is always an integer; Rational reduces it exactly.
    Rational::from_big(falling, factorial(j as u64)).expect("factorial is positive")
}

/// n! as a big integer.
pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= BigInt::from(t);
    }
    acc
}

/// C(n, r) for nonnegative integer arguments, as a big integer.
pub(crate) fn int_binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::from(0);
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for t in 0..r {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn ordinary_values() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(6, 3), rat(20));
        assert_eq!(binomial(0, 0), rat(1));
    }

    #[test]
    fn empty_product_convention() {
        assert_eq!(binomial(-1, 0), rat(1));
        assert_eq!(binomial(0, 0), rat(1));
        assert_eq!(binomial(7, 0), rat(1));
    }

    #[test]
    fn vanishing_and_negative_cases() {
        assert_eq!(binomial(3, 5), rat(0));
        assert_eq!(binomial(4, -1), rat(0));
        assert_eq!(binomial(-1, 1), rat(-1));
        assert_eq!(binomial(-1, 2), rat(1));
        assert_eq!(binomial(-2, 3), rat(-4));
    }

    #[test]
    fn pascals_rule_on_a_signed_grid() {
        for m in -5i64..=20 {
            for j in 1i64..=20 {
                let lhs = binomial(m, j);
                let rhs = &binomial(m - 1, j - 1) + &binomial(m - 1, j);
                assert_eq!(lhs, rhs, "Pascal's rule failed at m={m}, j={j}");
            }
        }
    }

    #[test]
    fn integer_binomial_matches_generalized() {
        for n in 0u64..=12 {
            for r in 0u64..=12 {
                assert_eq!(
                    Rational::from_big_integer(int_binomial(n, r)),
                    binomial(n as i64, r as i64)
                );
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
