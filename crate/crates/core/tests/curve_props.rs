mod common;

use common::synthetic_curve;
use nazeta::exact::{int, qpow, to_f64};
use nazeta::Curve;
use num_traits::Signed;
use proptest::prelude::*;

const QS: &[u64] = &[2, 3, 4, 5, 7, 8, 9];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_symmetry(c in synthetic_curve(QS, 4)) {
        let g = c.genus();
        for i in 0..=g {
            prop_assert_eq!(c.p().coeff(2 * g - i), qpow(c.q(), (g - i) as i64) * c.p().coeff(i));
        }
    }

    #[test]
    fn point_count_round_trip(c in synthetic_curve(QS, 4)) {
        let g = c.genus();
        let counts: Vec<i64> = c
            .point_counts(g)
            .iter()
            .map(|n| i64::try_from(n.to_integer()).unwrap())
            .collect();
        // trace vectors need not come from a curve; only nonnegative counts are ingestible
        prop_assume!(counts.iter().all(|&n| n >= 0));
        let back = Curve::from_point_counts("R", c.q(), g, &counts).unwrap();
        prop_assert_eq!(back.p(), c.p());
        prop_assert_eq!(back.point_counts(2 * g + 2), c.point_counts(2 * g + 2));
    }

    #[test]
    fn special_values_positive(c in synthetic_curve(QS, 4)) {
        let sv = c.special_values(4);
        prop_assert_eq!(sv.nu(1), c.class_number() / int(c.q() as i64 - 1));
        prop_assert!(sv.nu(1).is_positive());
        for k in 2..=4 {
            prop_assert!(sv.zeta(k).is_positive());
        }
        prop_assert!(to_f64(&sv.nu(4)) > 0.0);
    }

    #[test]
    fn artin_zeta_functional_equation(c in synthetic_curve(QS, 4)) {
        let z = c.artin_zeta();
        prop_assert_eq!(z.invert_substitute(&c.q_rat()), z);
    }
}
