mod common;

use std::cmp::Ordering;

use common::synthetic_curve;
use nazeta::invariants::beta_zagier;
use nazeta::ranklow::yoshida::{sublemma_fq, yoshida_compare};
use nazeta::ranklow::{fg_ratio_functions, rank3_parts};
use nazeta::sl_n_zeta;
use num_complex::Complex64;
use proptest::prelude::*;

const QS: &[u64] = &[2, 3, 4, 5];

/// Admissible pairs: `√q e^{±iθ}`, or real `α, q/α` with `1 ≤ α ≤ √q`.
fn admissible() -> impl Strategy<Value = (Complex64, Complex64, f64)> {
    let complex = (1.1f64..9.0, 0.0f64..std::f64::consts::PI).prop_map(|(q, t)| {
        let a = Complex64::from_polar(q.sqrt(), t);
        (a, a.conj(), q)
    });
    let real = (1.1f64..9.0, 0.0f64..=1.0).prop_map(|(q, u)| {
        let a = q.powf(u / 2.0);
        (Complex64::new(a, 0.0), Complex64::new(q / a, 0.0), q)
    });
    prop_oneof![complex, real]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn yoshida_direction(
        (a, b, q) in admissible(),
        kappa in 0.0f64..2.0,
        r in prop_oneof![0.0f64..0.999, 1.001f64..3.0],
        phi in 0.0f64..6.3,
    ) {
        let w = Complex64::from_polar(r, phi);
        let want = if r < 1.0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(yoshida_compare(a, b, q, kappa, w).unwrap(), want);
    }

    #[test]
    fn sublemma_nonnegative(q in 1.01f64..50.0, x in 0.0f64..10.0) {
        let v = sublemma_fq(q, x);
        prop_assert!(v >= 0.0);
        if x > 0.0 {
            prop_assert!(v > 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rank3_parts_identities(c in synthetic_curve(QS, 3)) {
        let p = rank3_parts(&c).unwrap();
        let q3 = nazeta::exact::qpow(c.q(), 3);
        prop_assert_eq!(p.z_le2.invert_substitute(&q3), p.z_ge2.clone());
        let sum = &(&p.z1 + &p.z2) + &p.z3;
        prop_assert_eq!(sum.scale(&p.constant), sl_n_zeta(&c, 3));
    }

    /// `f(1/T)·Ẑ(q^{n−a}T)·g(1/T)` summed over `a` reassembles the rank-n zeta.
    #[test]
    fn fg_reassemble(c in synthetic_curve(QS, 2), n in 2usize..=4) {
        let one = nazeta::exact::int(1);
        let mut total = nazeta::RatFunc::zero();
        for a in 1..=n {
            let (f, g) = fg_ratio_functions(&c, n, a);
            let z = c.artin_zeta().scale_substitute(&nazeta::exact::qpow(c.q(), (n - a) as i64));
            total = &total + &(&(&f.invert_substitute(&one) * &z) * &g.invert_substitute(&one));
        }
        let norm = nazeta::highrank::normalization(&c, n);
        prop_assert_eq!(total.scale(&norm), sl_n_zeta(&c, n));
        prop_assert!(beta_zagier(&c, n, 0).is_ok());
    }
}
