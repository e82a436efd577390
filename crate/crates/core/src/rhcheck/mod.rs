//! Certified root finding for zeta numerators, Riemann-hypothesis verdicts,
//! and the inequality checks on α/β invariants.

pub mod bigfloat;
pub mod bounds;
pub mod interval;
pub mod roots;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{pow, to_ratio_string, Poly, Rational};
use crate::highrank::ZetaBundle;
use bigfloat::{bf_from_rational, bf_to_f64, bf_to_string, RM};

pub use bounds::{
    beta_bounds_for, beta_prime_bounds_for, check_beta_bounds, check_cor33, check_rough_bounds,
    rough_bounds_for, BoundReport, InequalityCheck,
};
pub use interval::{Interval, Verdict};
pub use roots::{find_roots, find_roots_adaptive, reciprocal_roots, RootSet};

pub const DEFAULT_PRECISION: usize = 128;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A complex number as a pair of decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecimalComplex {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhVerdict {
    /// Reciprocal roots `ω`.
    pub roots: Vec<DecimalComplex>,
    pub moduli: Vec<f64>,
    pub deviations: Vec<f64>,
    /// Target modulus, and its exact square.
    pub target: f64,
    pub target_squared: String,
    pub max_rel_deviation: f64,
    pub holds: bool,
    /// `Re(s) = log|ω| / (n log q)` per root.
    pub s_lines: Vec<f64>,
    pub precision_bits: usize,
    pub tolerance: f64,
    /// Roots of the polynomial at `T = 0`; these have no finite `ω`.
    pub roots_at_origin: usize,
    pub conjugation_closed: bool,
    /// Whether the roots pair up as `{ω, Q/ω}`; only set for rank-n zetas.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fe_pairing: Option<bool>,
    /// `lead/const = Q^g`, checked on exact coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_exact: Option<bool>,
}

impl RhVerdict {
    pub fn root_pairs_f64(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .map(|r| {
                Complex64::new(
                    r.re.parse().unwrap_or(f64::NAN),
                    r.im.parse().unwrap_or(f64::NAN),
                )
            })
            .collect()
    }
}

fn greedy_match(pts: &[Complex64], partner: impl Fn(Complex64) -> Complex64, tol: f64) -> bool {
    let mut used = vec![false; pts.len()];
    for i in 0..pts.len() {
        if used[i] {
            continue;
        }
        let want = partner(pts[i]);
        let scale = want.norm().max(1.0);
        let hit = (0..pts.len())
            .filter(|&j| !used[j] && j != i)
            .chain(std::iter::once(i).filter(|&j| !used[j]))
            .find(|&j| (pts[j] - want).norm() <= tol * scale);
        match hit {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => return false,
        }
    }
    true
}

/// Verdict on whether every reciprocal root of `p` has modulus
/// `√target_squared` within relative `tolerance`.
pub fn circle_verdict(
    p: &Poly,
    target_squared: &Rational,
    n: usize,
    q: u64,
    tolerance: f64,
    precision_bits: usize,
) -> Result<RhVerdict> {
    let (set, at_origin) = reciprocal_roots(p, precision_bits, roots::DEFAULT_MAX_ITER)?;
    let bits = set.precision_bits;
    let target = bf_from_rational(target_squared, bits).sqrt(bits, RM);
    let mut entries: Vec<(f64, f64, DecimalComplex, f64, f64)> = set
        .roots
        .iter()
        .map(|z| {
            let m = z.abs(bits);
            let dev = m.sub(&target, bits, RM).abs().div(&target, bits, RM);
            let (re, im) = z.to_f64_pair();
            (
                re,
                im,
                DecimalComplex {
                    re: bf_to_string(&z.re),
                    im: bf_to_string(&z.im),
                },
                bf_to_f64(&m),
                bf_to_f64(&dev),
            )
        })
        .collect();
    entries.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
    });
    let lnq = (q as f64).ln();
    let moduli: Vec<f64> = entries.iter().map(|e| e.3).collect();
    let deviations: Vec<f64> = entries.iter().map(|e| e.4).collect();
    let s_lines = moduli.iter().map(|m| m.ln() / (n as f64 * lnq)).collect();
    let max_rel_deviation = deviations.iter().cloned().fold(0.0, f64::max);
    let pts: Vec<Complex64> = entries.iter().map(|e| Complex64::new(e.0, e.1)).collect();
    let conjugation_closed = greedy_match(&pts, |z| z.conj(), tolerance.max(1e-12));
    Ok(RhVerdict {
        roots: entries.into_iter().map(|e| e.2).collect(),
        moduli,
        deviations,
        target: bf_to_f64(&target),
        target_squared: to_ratio_string(target_squared),
        max_rel_deviation,
        holds: at_origin == 0 && max_rel_deviation <= tolerance,
        s_lines,
        precision_bits: bits,
        tolerance,
        roots_at_origin: at_origin,
        conjugation_closed,
        fe_pairing: None,
        product_exact: None,
    })
}

/// Riemann-hypothesis verdict for a rank-n zeta: all reciprocal roots of
/// its numerator on `|ω| = Q^{1/2}`.
pub fn rh_verdict(b: &ZetaBundle, tolerance: f64, precision_bits: usize) -> Result<RhVerdict> {
    let mut v = circle_verdict(&b.numerator, &b.big_q, b.n, b.q, tolerance, precision_bits)?;
    let big_q = crate::exact::to_f64(&b.big_q);
    let pts = v.root_pairs_f64();
    v.fe_pairing = Some(greedy_match(&pts, |z| big_q / z, tolerance.max(1e-12)));
    let lead = b.numerator.coeff(2 * b.g);
    let c0 = b.numerator.coeff(0);
    v.product_exact = Some(lead / c0 == pow(&b.big_q, b.g as i64));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Curve;
    use crate::highrank::bundle;

    #[test]
    fn e0_ranks_hold() {
        let c = Curve::from_point_counts("E0", 2, 1, &[3]).unwrap();
        for (n, target) in [(1, 2f64.sqrt()), (2, 2.0), (3, 8f64.sqrt())] {
            let v = rh_verdict(
                &bundle(&c, n).unwrap(),
                DEFAULT_TOLERANCE,
                DEFAULT_PRECISION,
            )
            .unwrap();
            assert!(v.holds, "rank {n}");
            assert!(v.max_rel_deviation < 1e-30);
            for m in &v.moduli {
                assert!((m - target).abs() < 1e-12);
            }
            for s in &v.s_lines {
                assert!((s - 0.5).abs() < 1e-12);
            }
            assert_eq!(v.fe_pairing, Some(true));
            assert_eq!(v.product_exact, Some(true));
            assert!(v.conjugation_closed);
        }
    }

    #[test]
    fn off_circle_fails() {
        // roots T = 1/2 and T = 1/3 have reciprocals 2 and 3
        let p = Poly::from_ints(&[6, -5, 1]).reversed(2);
        let v = circle_verdict(&p, &crate::exact::int(4), 1, 2, 1e-9, 128).unwrap();
        assert!(!v.holds);
        assert!((v.max_rel_deviation - 0.5).abs() < 1e-12);
    }

    #[test]
    fn root_at_origin_is_not_on_circle() {
        let p = Poly::from_ints(&[0, 1, 0, 4]);
        let v = circle_verdict(&p, &crate::exact::int(4), 1, 2, 1e-9, 128).unwrap();
        assert_eq!(v.roots_at_origin, 1);
        assert!(!v.holds);
    }
}
