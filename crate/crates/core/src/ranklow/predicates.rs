//! Sampled checks of the two ratio inequalities for the completed zeta
//! `ζ̂(x) = Ẑ(q^{−x})`, evaluated at complex points in multiprecision.

use astro_float::{BigFloat, Consts};
use num_complex::Complex64;
use serde::Serialize;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::rhcheck::bigfloat::{bf_from_rational, bf_to_f64, horner, BigComplex, RM};

/// Samples with `|Re(nσ) − threshold| < BAND` are not sign-checked.
pub const BAND: f64 = 1e-6;
/// Sampled `Re(nσ)` ranges over `threshold ± [BAND, BAND + SPAN]`.
pub const SPAN: f64 = 4.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Below,
    Above,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SideStats {
    pub samples: usize,
    pub satisfied: usize,
    /// `|ratio| = 1` to working precision; counted against a strict
    /// inequality.
    pub ties: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ViolationSample {
    pub sigma_re: f64,
    pub sigma_im: f64,
    pub side: Side,
    pub ratio_modulus: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredicateReport {
    pub curve: String,
    pub kind: String,
    pub n: usize,
    pub a: usize,
    /// Threshold for `Re(nσ)` separating the two sides.
    pub threshold: f64,
    pub below: SideStats,
    pub above: SideStats,
    /// Samples on the threshold checked for `|ratio| = 1` instead.
    pub boundary_checks: usize,
    pub boundary_max_deviation: f64,
    pub skipped_threshold: usize,
    pub skipped_poles: usize,
    /// Up to five offending samples, in sampling order.
    pub examples: Vec<ViolationSample>,
    pub holds: bool,
}

/// Radical-inverse (van der Corput) value of `i` in `base`.
pub fn halton(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

fn mix(name: &str, seed: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325 ^ seed;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Deterministic low-discrepancy samples of `σ` on one side of
/// `Re(nσ) = threshold`, covering one period `2π/log q` of `Im(nσ)`.
pub fn sample_sigmas(
    curve: &str,
    seed: u64,
    n: usize,
    q: u64,
    threshold: f64,
    side: Side,
    count: usize,
) -> Vec<Complex64> {
    let start = 1 + mix(curve, seed) % 100_003;
    let sign = match side {
        Side::Below => -1.0,
        Side::Above => 1.0,
    };
    let period = 2.0 * std::f64::consts::PI / (q as f64).ln();
    (0..count as u64)
        .map(|i| {
            let u = halton(start + i, 2);
            let v = halton(start + i, 3);
            let re = threshold + sign * (BAND * 2.0 + u * SPAN);
            let im = v * period;
            Complex64::new(re / n as f64, im / n as f64)
        })
        .collect()
}

/// `ζ̂(x) = Ẑ(q^{−x})` at complex `x`, in multiprecision.
struct ZetaEval {
    num: Vec<BigFloat>,
    den: Vec<BigFloat>,
    den_norm: BigFloat,
    lnq: BigFloat,
    q: BigFloat,
    p: usize,
    cc: Consts,
}

impl ZetaEval {
    fn new(c: &Curve, p: usize) -> Result<Self> {
        let mut cc = Consts::new()
            .map_err(|e| Error::DomainViolation(format!("multiprecision constants: {e:?}")))?;
        let z = c.artin_zeta();
        let conv = |v: &[crate::exact::Rational]| {
            v.iter().map(|r| bf_from_rational(r, p)).collect::<Vec<_>>()
        };
        let num = conv(z.num().coeffs());
        let den = conv(z.den().coeffs());
        let den_norm = den
            .iter()
            .fold(BigFloat::from_u64(0, p), |a, d| a.add(&d.abs(), p, RM));
        let q = BigFloat::from_u64(c.q(), p);
        let lnq = q.ln(p, RM, &mut cc);
        Ok(ZetaEval {
            num,
            den,
            den_norm,
            lnq,
            q,
            p,
            cc,
        })
    }

    /// `q^{−x}`
    fn t_of(&mut self, x: Complex64) -> BigComplex {
        let p = self.p;
        let re = BigFloat::from_f64(-x.re, p).mul(&self.lnq, p, RM);
        let im = BigFloat::from_f64(-x.im, p).mul(&self.lnq, p, RM);
        let m = re.exp(p, RM, &mut self.cc);
        BigComplex::new(
            m.mul(&im.cos(p, RM, &mut self.cc), p, RM),
            m.mul(&im.sin(p, RM, &mut self.cc), p, RM),
        )
    }

    fn near_zero(&self, v: &BigComplex, t: &BigComplex, deg: usize) -> bool {
        let p = self.p;
        let one = BigFloat::from_u64(1, p);
        let tm = t.abs(p);
        let big = if tm.cmp(&one).unwrap_or(0) > 0 {
            tm
        } else {
            one
        };
        let scale = self.den_norm.mul(&big.powi(deg, p, RM), p, RM);
        let thr = BigFloat::from_f64(2f64.powi(-((p / 4) as i32)), p).mul(&scale, p, RM);
        v.abs(p).cmp(&thr).unwrap_or(-1) <= 0
    }

    /// `None` at (or numerically at) a pole.
    fn zeta(&mut self, x: Complex64) -> Option<BigComplex> {
        let t = self.t_of(x);
        let d = horner(&self.den, &t, self.p);
        if self.near_zero(&d, &t, self.den.len().saturating_sub(1)) {
            return None;
        }
        Some(horner(&self.num, &t, self.p).div(&d, self.p))
    }
}

enum Outcome {
    Ratio(BigFloat),
    Pole,
}

#[allow(clippy::too_many_arguments)]
fn run_predicate(
    c: &Curve,
    kind: &str,
    n: usize,
    a: usize,
    threshold: f64,
    sigmas: &[Complex64],
    precision_bits: usize,
    boundary_is_check: bool,
    mut ratio: impl FnMut(&mut ZetaEval, Complex64) -> Outcome,
) -> Result<PredicateReport> {
    let p = precision_bits;
    let mut ev = ZetaEval::new(c, p)?;
    let one = BigFloat::from_u64(1, p);
    let eps = BigFloat::from_f64(2f64.powi(-((p / 4) as i32)), p);
    let mut report = PredicateReport {
        curve: c.name().to_string(),
        kind: kind.to_string(),
        n,
        a,
        threshold,
        below: SideStats::default(),
        above: SideStats::default(),
        boundary_checks: 0,
        boundary_max_deviation: 0.0,
        skipped_threshold: 0,
        skipped_poles: 0,
        examples: Vec::new(),
        holds: true,
    };
    for &sigma in sigmas {
        let offset = n as f64 * sigma.re - threshold;
        let r = match ratio(&mut ev, sigma) {
            Outcome::Pole => {
                log::debug!("{kind}: sample sigma = {sigma} hits a pole; skipped");
                report.skipped_poles += 1;
                continue;
            }
            Outcome::Ratio(r) => r,
        };
        let d = r.sub(&one, p, RM);
        if offset.abs() < BAND {
            if boundary_is_check {
                report.boundary_checks += 1;
                report.boundary_max_deviation =
                    report.boundary_max_deviation.max(bf_to_f64(&d.abs()));
            } else {
                log::info!("{kind}: sample sigma = {sigma} on the threshold; skipped");
                report.skipped_threshold += 1;
            }
            continue;
        }
        let side = if offset < 0.0 {
            Side::Below
        } else {
            Side::Above
        };
        let stats = match side {
            Side::Below => &mut report.below,
            Side::Above => &mut report.above,
        };
        stats.samples += 1;
        let tie = d.abs().cmp(&eps).unwrap_or(0) <= 0;
        let want_positive = side == Side::Below;
        let positive = d.is_positive();
        if tie {
            stats.ties += 1;
        } else if positive == want_positive {
            stats.satisfied += 1;
            continue;
        } else {
            stats.violations += 1;
        }
        if report.examples.len() < 5 {
            report.examples.push(ViolationSample {
                sigma_re: sigma.re,
                sigma_im: sigma.im,
                side,
                ratio_modulus: bf_to_f64(&r),
            });
        }
    }
    let bad = |s: &SideStats| s.violations + s.ties;
    report.holds = bad(&report.below) + bad(&report.above) == 0;
    Ok(report)
}

/// `|ζ̂(ns−n+a) / ζ̂(1−ns+n−b)|` with `a + b = n + 1` and `s = 1/2 + σ`:
/// expected `> 1` for `Re σ < 0` and `< 1` for `Re σ > 0`.
pub fn ratio_predicate_44(
    c: &Curve,
    n: usize,
    a: usize,
    sigmas: &[Complex64],
    precision_bits: usize,
) -> Result<PredicateReport> {
    if a < 1 || a > n {
        return Err(Error::DomainViolation(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    let b = n + 1 - a;
    let (nf, af, bf) = (n as f64, a as f64, b as f64);
    run_predicate(
        c,
        "conjugate_ratio",
        n,
        a,
        0.0,
        sigmas,
        precision_bits,
        true,
        |ev, sigma| {
            let ns = Complex64::new(nf * (0.5 + sigma.re), nf * sigma.im);
            let x1 = ns - nf + af;
            let x2 = Complex64::new(1.0 + nf - bf, 0.0) - ns;
            match (ev.zeta(x1), ev.zeta(x2)) {
                (Some(u), Some(v)) if !v.is_zero() => Outcome::Ratio(u.div(&v, ev.p).abs(ev.p)),
                _ => Outcome::Pole,
            }
        },
    )
}

/// `|ζ̂(x)/ζ̂(x+1)| / |(q − q^{−x})/(1 − q^{1−x})|` with `x = nσ − n/2 + a`:
/// expected `> 1` when `|q^{nσ}| < q^{n/2−a}` and `< 1` when above.
pub fn ratio_predicate_47(
    c: &Curve,
    n: usize,
    a: usize,
    sigmas: &[Complex64],
    precision_bits: usize,
) -> Result<PredicateReport> {
    if a < 1 || a > n {
        return Err(Error::DomainViolation(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    let (nf, af) = (n as f64, a as f64);
    let threshold = nf / 2.0 - af;
    run_predicate(
        c,
        "shifted_ratio",
        n,
        a,
        threshold,
        sigmas,
        precision_bits,
        false,
        |ev, sigma| {
            let x = Complex64::new(nf * sigma.re - nf / 2.0 + af, nf * sigma.im);
            let p = ev.p;
            let (Some(u), Some(v)) = (ev.zeta(x), ev.zeta(x + 1.0)) else {
                return Outcome::Pole;
            };
            if v.is_zero() {
                return Outcome::Pole;
            }
            let t = ev.t_of(x);
            let qc = BigComplex::real(ev.q.clone(), p);
            let one = BigComplex::from_f64(1.0, 0.0, p);
            let top = qc.sub(&t, p);
            let bottom = one.sub(&qc.mul(&t, p), p);
            if bottom.is_zero() || top.is_zero() {
                return Outcome::Pole;
            }
            let middle = top.div(&bottom, p).abs(p);
            Outcome::Ratio(u.div(&v, p).abs(p).div(&middle, p, RM))
        },
    )
}
