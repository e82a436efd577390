//! Inequalities on the normalized invariants, evaluated with exact
//! rational intervals around every square root.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::interval::{Interval, Verdict};
use crate::curve::Curve;
use crate::error::Result;
use crate::exact::{choose2, int, pow, qpow, to_f64, to_ratio_string, Rational};
use crate::highrank::{bundle, ZetaBundle};

/// Square-root enclosure widths tried in turn before settling on
/// `Indeterminate`.
const SQRT_BITS: [u32; 5] = [64, 128, 256, 512, 1024];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub label: String,
    pub lower: f64,
    pub value: String,
    pub value_approx: f64,
    pub upper: f64,
    pub verdict: Verdict,
    pub sqrt_bits: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub curve: String,
    pub rank: usize,
    pub kind: String,
    pub checks: Vec<InequalityCheck>,
    pub verdict: Verdict,
}

impl BoundReport {
    fn new(c: &Curve, n: usize, kind: &str, checks: Vec<InequalityCheck>) -> Self {
        let verdict = checks.iter().fold(Verdict::Pass, |v, ch| v.and(ch.verdict));
        BoundReport {
            curve: c.name().to_string(),
            rank: n,
            kind: kind.to_string(),
            checks,
            verdict,
        }
    }
}

/// `lower(bits) ≤ value ≤ upper(bits)`, refining the square-root
/// enclosures until the verdict is decided.
fn between(
    label: String,
    value: &Rational,
    bounds: impl Fn(u32) -> (Interval, Interval),
) -> InequalityCheck {
    let v = Interval::point(value.clone());
    let mut last = None;
    for bits in SQRT_BITS {
        let (lo, hi) = bounds(bits);
        let verdict = lo.le(&v).and(v.le(&hi));
        last = Some((lo, hi, verdict, bits));
        if verdict != Verdict::Indeterminate {
            break;
        }
    }
    let (lo, hi, verdict, bits) = last.expect("at least one refinement");
    InequalityCheck {
        label,
        lower: lo.midpoint_f64(),
        value: to_ratio_string(value),
        value_approx: to_f64(value),
        upper: hi.midpoint_f64(),
        verdict,
        sqrt_bits: bits,
    }
}

fn binom(n: usize, k: usize) -> Rational {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(r)
}

/// `Q^{j/2}` with `s` an enclosure of `√Q`.
fn half_power(big_q: &Rational, s: &Interval, j: usize) -> Interval {
    let base = Interval::point(pow(big_q, (j / 2) as i64));
    if j.is_multiple_of(2) {
        base
    } else {
        base.mul(s)
    }
}

/// Center `Q^m + … + 1` and radius
/// `Σ_{k=3}^{m+1} Q^{k−3} Σ_{i=1}^{k} C(2g,i−1) Q^{(i−1)/2} + 2g Q^{m−1} √Q`.
fn rough_window(big_q: &Rational, g: usize, m: usize, bits: u32) -> (Interval, Interval) {
    let s = Interval::sqrt(big_q, bits);
    let center: Rational = (0..=m).map(|j| pow(big_q, j as i64)).sum();
    let mut radius = s.scale(&(int(2 * g as i64) * pow(big_q, m as i64 - 1)));
    for k in 3..=m + 1 {
        let mut inner = Interval::point(int(0));
        for i in 1..=k {
            inner = inner.add(&half_power(big_q, &s, i - 1).scale(&binom(2 * g, i - 1)));
        }
        radius = radius.add(&inner.scale(&pow(big_q, k as i64 - 3)));
    }
    let c = Interval::point(center);
    (c.sub(&radius), c.add(&radius))
}

/// Rough bounds on `α'(mn)` (`1 ≤ m ≤ g−1`) and on `(Q−1)β'(0)`; these are
/// consequences of the Riemann hypothesis in rank n.
pub fn check_rough_bounds(c: &Curve, n: usize) -> Result<BoundReport> {
    let b = bundle(c, n)?;
    Ok(rough_bounds_for(c, &b))
}

pub fn rough_bounds_for(c: &Curve, b: &ZetaBundle) -> BoundReport {
    let g = b.g;
    let big_q = &b.big_q;
    let mut checks = Vec::new();
    for m in 1..g {
        let v = b.alpha_prime(m);
        checks.push(between(format!("alpha'({}n)", m), &v, |bits| {
            rough_window(big_q, g, m, bits)
        }));
    }
    let v = (big_q - int(1)) * b.beta_prime();
    checks.push(between("(Q-1)beta'(0)".into(), &v, |bits| {
        rough_window(big_q, g, g, bits)
    }));
    BoundReport::new(c, b.n, "rough_bounds", checks)
}

/// `∏_k (√q^k − 1)^{2g−1}/(√q^k + 1) ≤ q^{−C(n,2)(g−1)} β_n(0) ≤ ∏_k (1 + √q^k)^{2g−1}/(√q^k − 1)`.
pub fn check_beta_bounds(c: &Curve, n: usize) -> Result<BoundReport> {
    let b = bundle(c, n)?;
    Ok(beta_bounds_for(c, &b))
}

pub fn beta_bounds_for(c: &Curve, b: &ZetaBundle) -> BoundReport {
    let g = c.genus();
    let e = (2 * g - 1) as u32;
    let q = c.q();
    let v = qpow(q, -choose2(b.n) * (g as i64 - 1)) * &b.beta0;
    let one = Interval::point(int(1));
    let check = between("q^(-C(n,2)(g-1)) beta_n(0)".into(), &v, |bits| {
        let mut lo = one.clone();
        let mut hi = one.clone();
        for k in 1..=b.n {
            let r = Interval::sqrt(&qpow(q, k as i64), bits);
            let rm = r.sub(&one);
            let rp = r.add(&one);
            lo = lo.mul(&rm.powi(e).div(&rp).expect("positive"));
            hi = hi.mul(&rp.powi(e).div(&rm).expect("positive"));
        }
        (lo, hi)
    });
    BoundReport::new(c, b.n, "beta_bounds", vec![check])
}

/// `(√Q − 1)^{2g−1}/(√Q + 1) ≤ β'(0) ≤ (√Q + 1)^{2g−1}/(√Q − 1)`.
pub fn check_cor33(c: &Curve, n: usize) -> Result<BoundReport> {
    let b = bundle(c, n)?;
    Ok(beta_prime_bounds_for(c, &b))
}

pub fn beta_prime_bounds_for(c: &Curve, b: &ZetaBundle) -> BoundReport {
    let e = (2 * b.g - 1) as u32;
    let one = Interval::point(int(1));
    let check = between("beta'(0)".into(), &b.beta_prime(), |bits| {
        let s = Interval::sqrt(&b.big_q, bits);
        let sm = s.sub(&one);
        let sp = s.add(&one);
        (
            sm.powi(e).div(&sp).expect("positive"),
            sp.powi(e).div(&sm).expect("positive"),
        )
    });
    BoundReport::new(c, b.n, "beta_prime_bounds", vec![check])
}
