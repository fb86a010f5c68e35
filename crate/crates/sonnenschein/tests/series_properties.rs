//! Property tests for the exact scalar types and the series algebra.

use proptest::prelude::*;

use sonnenschein::{ComplexRational, PiGradedValue, Rational, TruncatedSeries};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn complex_rational() -> impl Strategy<Value = ComplexRational> {
    (rational(), rational()).prop_map(|(re, im)| ComplexRational::new(re, im))
}

fn pi_graded(grade: u32) -> impl Strategy<Value = PiGradedValue> {
    rational().prop_map(move |q| PiGradedValue::new(q, grade))
}

const ORDER: usize = 10;

fn series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    proptest::collection::vec(rational(), 1..=ORDER + 1)
        .prop_map(|coeffs| TruncatedSeries::from_coeffs(coeffs, ORDER).unwrap())
}

proptest! {
    #[test]
    fn complex_field_associativity_and_distributivity(
        a in complex_rational(),
        b in complex_rational(),
        c in complex_rational(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn complex_multiplicative_inverse_round_trip(a in complex_rational()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inverse().unwrap(), ComplexRational::one());
    }

    #[test]
    fn pi_graded_multiplication_is_grade_additive_and_commutative(
        a in pi_graded(2),
        b in pi_graded(3),
    ) {
        let ab = &a * &b;
        prop_assert_eq!(ab.clone(), &b * &a);
        if !ab.is_zero() {
            prop_assert_eq!(ab.grade(), 5);
        }
    }

    #[test]
    fn series_mul_commutes_and_associates(f in series(), g in series(), h in series()) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn series_pow_is_additive(f in series(), a in 0u64..=6, b in 0u64..=6) {
        prop_assert_eq!(f.pow(a + b), f.pow(a).mul(&f.pow(b)).unwrap());
    }

    #[test]
    fn geom_inverse_multiplies_back_to_one(f in series()) {
        prop_assume!(f.constant_term() != &Rational::one());
        let g = f.geom_inverse().unwrap();
        let one_minus_f = TruncatedSeries::one(ORDER).sub(&f).unwrap();
        prop_assert_eq!(one_minus_f.mul(&g).unwrap(), TruncatedSeries::one(ORDER));
    }

    #[test]
    fn truncation_commutes_with_every_operation(
        f in series(),
        g in series(),
        lower in 0usize..ORDER,
    ) {
        prop_assert_eq!(
            f.mul(&g).unwrap().truncate(lower),
            f.truncate(lower).mul(&g.truncate(lower)).unwrap()
        );
        prop_assert_eq!(
            f.add(&g).unwrap().truncate(lower),
            f.truncate(lower).add(&g.truncate(lower)).unwrap()
        );
        prop_assert_eq!(f.pow(4).truncate(lower), f.truncate(lower).pow(4));
        if f.constant_term() != &Rational::one() {
            prop_assert_eq!(
                f.geom_inverse().unwrap().truncate(lower),
                f.truncate(lower).geom_inverse().unwrap()
            );
        }
    }

    #[test]
    fn text_forms_round_trip(a in complex_rational(), q in rational(), grade in 0u32..8) {
        prop_assert_eq!(a.to_string().parse::<ComplexRational>().unwrap(), a);
        let v = PiGradedValue::new(q.clone(), grade);
        prop_assert_eq!(v.to_string().parse::<PiGradedValue>().unwrap(), v);
        prop_assert_eq!(q.to_string().parse::<Rational>().unwrap(), q);
    }
}
