mod common;

use common::synthetic_curve;
use nazeta::bundle;
use nazeta::rhcheck::{rh_verdict, DEFAULT_TOLERANCE};
use proptest::prelude::*;

const QS: &[u64] = &[2, 3, 4, 5, 7];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ranks_two_and_three_on_the_line(c in synthetic_curve(QS, 3), n in 2usize..=3) {
        let b = bundle(&c, n).unwrap();
        let v = rh_verdict(&b, DEFAULT_TOLERANCE, 128).unwrap();
        prop_assert!(v.holds, "max deviation {}", v.max_rel_deviation);
        prop_assert!(v.conjugation_closed);
        prop_assert_eq!(v.fe_pairing, Some(true));
        prop_assert_eq!(v.product_exact, Some(true));
        prop_assert_eq!(v.roots.len(), 2 * c.genus());
    }

    #[test]
    fn precision_increase_keeps_verdict(c in synthetic_curve(QS, 3), n in 1usize..=3) {
        let b = bundle(&c, n).unwrap();
        let lo = rh_verdict(&b, DEFAULT_TOLERANCE, 128).unwrap();
        let hi = rh_verdict(&b, DEFAULT_TOLERANCE, 256).unwrap();
        prop_assert!(!lo.holds || hi.holds);
        prop_assert!(hi.max_rel_deviation <= lo.max_rel_deviation.max(1e-30));
    }
}
