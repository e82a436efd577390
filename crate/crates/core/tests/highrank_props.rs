mod common;

use common::synthetic_curve;
use nazeta::exact::int;
use nazeta::highrank::{check_structure, reconstruct_theorem12};
use nazeta::invariants::{beta_total, beta_zagier, counting_miracle_check};
use nazeta::ranklow::sl2_constant;
use nazeta::{bundle, sl_n_zeta};
use proptest::prelude::*;

const QS: &[u64] = &[2, 3, 4, 5];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theorem12_round_trip_and_structure(c in synthetic_curve(QS, 3), n in 1usize..=4) {
        let b = bundle(&c, n).unwrap();
        let z = sl_n_zeta(&c, n);
        prop_assert_eq!(&reconstruct_theorem12(&b.alpha, &b.beta0, n, c.genus(), c.q()), &z);
        prop_assert_eq!(&z.invert_substitute(&b.big_q), &z);
        prop_assert!(check_structure(&z, n, c.q(), c.genus()).is_ok());
        let res = z.residue_simple(&int(1)).unwrap();
        prop_assert_eq!(&res, &(b.numerator.eval(&int(1)) / (&b.big_q - int(1))));
        prop_assert_eq!(res, b.beta0);
    }

    #[test]
    fn rank2_two_term_formula(c in synthetic_curve(QS, 3)) {
        let k = sl2_constant(&c).unwrap();
        prop_assert_eq!(k, nazeta::exact::qpow(c.q(), c.genus() as i64 - 1) * c.special_values(1).nu(1));
    }

    #[test]
    fn zagier_matches_residue(c in synthetic_curve(QS, 3), n in 1usize..=4) {
        let z = beta_zagier(&c, n, 0).unwrap();
        prop_assert_eq!(&z, &bundle(&c, n).unwrap().beta0);
        prop_assert!(beta_total(&c, n) >= z);
    }

    #[test]
    fn zagier_exponents_integral(c in synthetic_curve(QS, 2), n in 1usize..=4, d in -8i64..=8) {
        prop_assert!(beta_zagier(&c, n, d).is_ok());
    }

    #[test]
    fn counting_miracle(c in synthetic_curve(QS, 3), n in 2usize..=4) {
        prop_assert!(counting_miracle_check(&c, n).unwrap());
    }
}
