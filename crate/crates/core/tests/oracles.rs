//! Values checked against computations that share no code with the
//! library's assembly: brute-force point counts, effective-divisor counts
//! from the zeta exponential, and hand-expanded composition sums.

mod common;

use common::{count_y2_plus_y_eq_xe, e0, Gf2k};
use nazeta::exact::{int, rat, Rational};
use nazeta::invariants::{alpha_large, beta_zagier};
use nazeta::{bundle, Curve};

#[test]
fn field_arithmetic() {
    let f = Gf2k::new(2);
    // ω² = ω + 1 in GF(4) = F₂[ω]/(ω² + ω + 1)
    assert_eq!(f.mul(0b10, 0b10), 0b11);
    for k in 1..=4 {
        let f = Gf2k::new(k);
        for a in 1..f.size() {
            assert_eq!(f.pow(a, f.size() - 1), 1, "k = {k}, a = {a}");
        }
    }
}

#[test]
fn brute_force_counts() {
    let c5: Vec<i64> = (1..=4).map(|k| count_y2_plus_y_eq_xe(5, k)).collect();
    assert_eq!(&c5[..2], &[3, 5]);
    let e0: Vec<i64> = (1..=4).map(|k| count_y2_plus_y_eq_xe(3, k)).collect();
    assert_eq!(e0[0], 3);

    // two counts determine the genus-2 curve; the next two are predictions
    let c = Curve::from_point_counts("C5", 2, 2, &c5[..2]).unwrap();
    let predicted: Vec<Rational> = c.point_counts(4);
    let observed: Vec<Rational> = c5.iter().map(|&n| int(n)).collect();
    assert_eq!(predicted, observed);

    let e = Curve::from_point_counts("E0", 2, 1, &e0[..1]).unwrap();
    assert_eq!(
        e.point_counts(4),
        e0.iter().map(|&n| int(n)).collect::<Vec<_>>()
    );
}

/// Effective divisors of degree `d`, from `Z(t) = exp(Σ N_k t^k/k)`:
/// `d·A_d = Σ_{k=1}^{d} N_k A_{d−k}`.
fn effective_divisors(counts: &[i64]) -> Vec<Rational> {
    let mut a = vec![int(1)];
    for d in 1..=counts.len() {
        let s: Rational = (1..=d).map(|k| int(counts[k - 1]) * &a[d - k]).sum();
        a.push(s / int(d as i64));
    }
    a
}

#[test]
fn rank_one_alpha_counts_effective_divisors() {
    for (e, g) in [(3u32, 1usize), (5, 2)] {
        let counts: Vec<i64> = (1..=4).map(|k| count_y2_plus_y_eq_xe(e, k)).collect();
        let c = Curve::from_point_counts("X", 2, g, &counts[..g]).unwrap();
        let a = effective_divisors(&counts);
        let b = bundle(&c, 1).unwrap();
        for (d, want) in a.iter().enumerate().take(g) {
            assert_eq!(&b.alpha[d], want, "e = {e}, d = {d}");
        }
        let h = c.class_number();
        for (d, ad) in a.iter().enumerate().take(5).skip(2 * g - 1) {
            // Riemann–Roch: every class of degree d > 2g − 2 has q^{d+1−g} − 1 nonzero sections
            let rr = &h * (nazeta::exact::qpow(2, (d + 1 - g) as i64) - int(1)) / int(2 - 1);
            assert_eq!(ad, &rr, "e = {e}, d = {d}");
            assert_eq!(
                alpha_large(&c, 1, d as i64).unwrap(),
                rr,
                "e = {e}, d = {d}"
            );
        }
        assert_eq!(b.beta0, h / int(2 - 1));
    }
}

/// `ζ̂(k) = Ẑ(2^{−k})` for `P = 1 + 2t²` by direct substitution.
fn e0_zeta(k: i64) -> Rational {
    let t = rat(1, 1 << k);
    (int(1) + int(2) * &t * &t) / ((int(1) - &t) * (int(1) - int(2) * &t))
}

#[test]
fn zagier_by_hand_e0() {
    let nu1 = int(3);
    let nu2 = &nu1 * e0_zeta(2);
    let nu3 = &nu2 * e0_zeta(3);
    assert_eq!(nu2, int(9));
    // rank 2: (2) and (1,1)
    let b2 = &nu2 + &nu1 * &nu1 / int(1 - 4);
    assert_eq!(b2, int(6));
    assert_eq!(beta_zagier(&e0(), 2, 0).unwrap(), b2);
    // rank 3: (3), (1,2), (2,1), (1,1,1)
    let b3 = &nu3 + int(2) * &nu1 * &nu2 / int(1 - 8) + &nu1 * &nu1 * &nu1 / int(9);
    assert_eq!(b3, rat(66, 7));
    assert_eq!(beta_zagier(&e0(), 3, 0).unwrap(), b3);
    // degree 1 in rank 2: exponent 2·{1/2} = 1 on the (1,1) term
    let b21 = &nu2 + int(2) * &nu1 * &nu1 / int(1 - 4);
    assert_eq!(beta_zagier(&e0(), 2, 1).unwrap(), b21);
}

/// For genus one the rank-n zeta is `α(0) + β(0)(Q−1)T/((1−T)(1−QT))`.
#[test]
fn genus_one_closed_form() {
    let c = e0();
    for n in 1..=5usize {
        let big_q = nazeta::exact::qpow(2, n as i64);
        let beta = beta_zagier(&c, n, 0).unwrap();
        let alpha = if n == 1 {
            int(1)
        } else {
            beta_zagier(&c, n - 1, 0).unwrap()
        };
        let b = bundle(&c, n).unwrap();
        assert_eq!(b.alpha[0], alpha, "n = {n}");
        for t in [rat(1, 3), rat(-2, 5), rat(7, 2)] {
            let direct =
                &alpha + &beta * (&big_q - int(1)) * &t / ((int(1) - &t) * (int(1) - &big_q * &t));
            assert_eq!(b.zhat.evaluate(&t).unwrap(), direct, "n = {n}, T = {t}");
        }
    }
}
