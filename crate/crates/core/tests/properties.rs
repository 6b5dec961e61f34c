//! Property tests: algebraic laws of the exact types, the piecewise
//! meanings of the helper functions, and the empty-product convention.

use proptest::prelude::*;

use romanfact::exact::{rat_normalize, ExactInt, ExactRational};
use romanfact::ff::{self, Epsilon};
use romanfact::products::{pi_product, ProductSpec};

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn rat(n: i64, d: i64) -> ExactRational {
    rat_normalize(int(n), int(d)).unwrap()
}

prop_compose! {
    /// Rationals with bounded numerator and nonzero denominator.
    fn arb_rational()(n in -1_000_000i64..=1_000_000, d in 1i64..=10_000) -> ExactRational {
        rat(n, d)
    }
}

prop_compose! {
    fn arb_epsilon()(k in 1i64..=999) -> Epsilon {
        Epsilon::new(rat(k, 1000)).unwrap()
    }
}

proptest! {
    #[test]
    fn normalization_is_idempotent(n in any::<i64>(), d in any::<i64>()) {
        prop_assume!(d != 0);
        let once = rat_normalize(int(n), int(d)).unwrap();
        let twice = rat_normalize(once.numer().clone(), once.denom().clone()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.is_canonical());
    }

    #[test]
    fn addition_and_multiplication_commute(a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_undoes_multiplication(a in arb_rational(), b in arb_rational()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.try_div(&b).unwrap(), a);
    }

    #[test]
    fn arithmetic_outputs_stay_canonical(a in arb_rational(), b in arb_rational()) {
        prop_assert!((&a + &b).is_canonical());
        prop_assert!((&a - &b).is_canonical());
        prop_assert!((&a * &b).is_canonical());
        prop_assert!((-&a).is_canonical());
        prop_assert!(a.abs().is_canonical());
        if !b.is_zero() {
            prop_assert!(a.try_div(&b).unwrap().is_canonical());
        }
    }

    #[test]
    fn display_parse_round_trip(a in arb_rational()) {
        let parsed: ExactRational = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn floor_and_ceil_bracket_the_value(x in arb_rational()) {
        let f = ExactRational::from(ff::floor(&x));
        let c = ExactRational::from(ff::ceil(&x));
        prop_assert!(f <= x && x <= c);
        prop_assert!(&c - &f <= ExactRational::one());
    }

    /// cap_theta is the exact indicator of zero over the rationals, not
    /// merely over integers.
    #[test]
    fn cap_theta_is_the_zero_indicator(x in arb_rational(), eps in arb_epsilon()) {
        let value = ff::cap_theta(&x, &eps);
        if x.is_zero() {
            prop_assert_eq!(value, ExactRational::one());
        } else {
            prop_assert_eq!(value, ExactRational::zero());
        }
    }

    /// q reproduces the mathematical sign function.
    #[test]
    fn q_is_the_sign_function(x in arb_rational(), eps in arb_epsilon()) {
        let expected = if x.is_zero() {
            ExactRational::zero()
        } else if x.is_negative() {
            rat(-1, 1)
        } else {
            ExactRational::one()
        };
        prop_assert_eq!(ff::q(&x, &eps), expected);
        prop_assert_eq!(ff::q_prime(&x, &eps), if x.is_zero() {
            ExactRational::zero()
        } else {
            ExactRational::one()
        });
    }

    #[test]
    fn xi_plus_xi_prime_is_one(x in arb_rational(), eps in arb_epsilon()) {
        prop_assert_eq!(
            &ff::xi(&x, &eps) + &ff::xi_prime(&x, &eps),
            ExactRational::one()
        );
    }

    /// Everything except delta is invariant in the epsilon choice.
    #[test]
    fn helpers_are_epsilon_invariant(x in arb_rational(), e1 in arb_epsilon(), e2 in arb_epsilon()) {
        for name in ff::FfName::ALL {
            if name == ff::FfName::Delta {
                continue;
            }
            prop_assert_eq!(name.eval(&x, &e1), name.eval(&x, &e2), "{}", name);
        }
    }

    /// psi shifts only zero, and never vanishes.
    #[test]
    fn psi_remaps_only_zero(x in arb_rational(), eps in arb_epsilon()) {
        let value = ff::psi(&x, &eps);
        prop_assert!(!value.is_zero());
        if x.is_zero() {
            prop_assert_eq!(value, ExactRational::one());
        } else {
            prop_assert_eq!(value, x);
        }
    }

    /// Any product whose upper limit is below its lower limit is 1, no
    /// matter what the factor mapping does.
    #[test]
    fn empty_product_is_always_one(
        lower in -1000i64..=1000,
        gap in 1i64..=50,
        weird in any::<i64>(),
    ) {
        let spec = ProductSpec::new(int(lower), int(lower - gap), move |_| {
            if weird % 2 == 0 {
                None
            } else {
                Some(rat(weird, 7))
            }
        });
        prop_assert_eq!(pi_product(&spec).unwrap(), ExactRational::one());
    }
}
