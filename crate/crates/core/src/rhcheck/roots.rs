//! All complex roots of a rational polynomial: exact square-free
//! decomposition followed by Aberth–Ehrlich iteration on each factor.

use super::bigfloat::{bf_from_rational, bf_to_f64, horner, BigComplex, RM};
use crate::error::{Error, Result};
use crate::exact::{to_f64, Poly};
use astro_float::BigFloat;

pub const DEFAULT_MAX_ITER: usize = 500;
pub const MAX_PRECISION: usize = 1024;

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Roots with multiplicity, zero roots first.
    pub roots: Vec<BigComplex>,
    pub precision_bits: usize,
    pub iterations: usize,
    /// Largest `|a(z)| / (‖a‖₁ max(1,|z|)^deg a)` over the certified roots.
    pub max_residual: f64,
}

/// Square-free factors `[(a_1, 1), (a_2, 2), …]` with `p = c·∏ a_i^i`
/// (Yun's algorithm over ℚ). Constant factors are dropped.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).expect("gcd divides p");
    let c = dp.exact_div(&a0).expect("gcd divides p'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.exact_div(&a).expect("gcd divides b");
        let nc = d.exact_div(&a).expect("gcd divides d");
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        d = &nc - &nb.derivative();
        b = nb;
        i += 1;
    }
    out
}

fn certify_threshold(p: usize) -> BigFloat {
    BigFloat::from_f64(2f64.powi(-((p / 2) as i32)), p)
}

/// Aberth–Ehrlich on a square-free polynomial with nonzero constant term.
fn aberth(a: &Poly, p: usize, max_iter: usize) -> Result<(Vec<BigComplex>, usize, f64)> {
    let d = a.degree().expect("nonzero");
    if d == 1 {
        let r = -a.coeff(0) / a.coeff(1);
        return Ok((vec![BigComplex::real(bf_from_rational(&r, p), p)], 0, 0.0));
    }
    let coeffs: Vec<BigFloat> = a.coeffs().iter().map(|c| bf_from_rational(c, p)).collect();
    let dcoeffs: Vec<BigFloat> = a
        .derivative()
        .coeffs()
        .iter()
        .map(|c| bf_from_rational(c, p))
        .collect();
    let norm1 = coeffs
        .iter()
        .fold(BigFloat::from_u64(0, p), |acc, c| acc.add(&c.abs(), p, RM));
    let one = BigFloat::from_u64(1, p);
    let ratio = to_f64(&(a.coeff(0) / a.coeff(d))).abs();
    let radius = ratio.powf(1.0 / d as f64);
    let mut z: Vec<BigComplex> = (0..d)
        .map(|k| {
            let r = radius * (1.0 + 0.01 * (k % 3) as f64);
            let th = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            BigComplex::from_f64(r * th.cos(), r * th.sin(), p)
        })
        .collect();
    let thr = certify_threshold(p);
    let corr_tol = 2f64.powi(-((p / 2) as i32));
    let unit = BigComplex::from_f64(1.0, 0.0, p);
    let mut last_residual = f64::INFINITY;
    for it in 1..=max_iter {
        let mut max_corr: f64 = 0.0;
        for i in 0..d {
            let pv = horner(&coeffs, &z[i], p);
            if pv.is_zero() {
                continue;
            }
            let dv = horner(&dcoeffs, &z[i], p);
            if dv.is_zero() {
                // nudge off a critical point
                z[i] = z[i].add(&BigComplex::from_f64(1e-3 * radius, 1e-3 * radius, p), p);
                max_corr = f64::INFINITY;
                continue;
            }
            let newton = pv.div(&dv, p);
            let mut s = BigComplex::zero(p);
            for j in 0..d {
                if j != i {
                    let diff = z[i].sub(&z[j], p);
                    if !diff.is_zero() {
                        s = s.add(&diff.recip(p), p);
                    }
                }
            }
            let denom = unit.sub(&newton.mul(&s, p), p);
            let w = if denom.is_zero() {
                newton
            } else {
                newton.div(&denom, p)
            };
            z[i] = z[i].sub(&w, p);
            let zabs = bf_to_f64(&z[i].abs(p)).max(f64::MIN_POSITIVE);
            max_corr = max_corr.max(bf_to_f64(&w.abs(p)) / zabs);
        }
        if max_corr <= corr_tol {
            let mut ok = true;
            let mut worst: f64 = 0.0;
            for zi in &z {
                let zabs = zi.abs(p);
                let big = if zabs.cmp(&one).unwrap_or(0) > 0 {
                    zabs
                } else {
                    one.clone()
                };
                let scale = norm1.mul(&big.powi(d, p, RM), p, RM);
                let res = horner(&coeffs, zi, p).abs(p).div(&scale, p, RM);
                worst = worst.max(bf_to_f64(&res));
                if res.cmp(&thr).unwrap_or(1) > 0 {
                    ok = false;
                }
            }
            last_residual = worst;
            if ok {
                return Ok((z, it, worst));
            }
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        precision_bits: p,
        max_residual: last_residual,
    })
}

/// All roots of `p` (degree ≥ 1) at `precision_bits`, each certified by the
/// residual bound `|a(z)| ≤ 2^{−bits/2}·‖a‖₁·max(1,|z|)^deg` on its
/// square-free factor `a`.
pub fn find_roots(p: &Poly, precision_bits: usize, max_iter: usize) -> Result<RootSet> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::DomainViolation(
            "root finding needs a polynomial of degree at least 1".into(),
        ));
    }
    let k = p.low_degree();
    let stripped = Poly::new(p.coeffs()[k..].to_vec());
    let mut roots: Vec<BigComplex> = (0..k).map(|_| BigComplex::zero(precision_bits)).collect();
    let mut iterations = 0;
    let mut max_residual: f64 = 0.0;
    for (factor, mult) in squarefree_decomposition(&stripped) {
        let (rs, it, res) = aberth(&factor, precision_bits, max_iter)?;
        iterations = iterations.max(it);
        max_residual = max_residual.max(res);
        for r in rs {
            for _ in 0..mult {
                roots.push(r.clone());
            }
        }
    }
    debug_assert_eq!(roots.len(), deg);
    Ok(RootSet {
        roots,
        precision_bits,
        iterations,
        max_residual,
    })
}

/// [`find_roots`] starting at `start_bits`, doubling on non-convergence up
/// to [`MAX_PRECISION`].
pub fn find_roots_adaptive(p: &Poly, start_bits: usize, max_iter: usize) -> Result<RootSet> {
    let mut bits = start_bits.max(64);
    loop {
        match find_roots(p, bits, max_iter) {
            Err(Error::NonConvergence { .. }) if bits < MAX_PRECISION => {
                log::info!("root finder did not converge at {bits} bits; doubling");
                bits *= 2;
            }
            other => return other,
        }
    }
}

/// Reciprocal roots `ω = 1/T` of `p`, found directly as the roots of the
/// reversed polynomial. Returns the roots together with the number of roots
/// of `p` at `T = 0` (which have no finite reciprocal).
pub fn reciprocal_roots(p: &Poly, start_bits: usize, max_iter: usize) -> Result<(RootSet, usize)> {
    let k = p.low_degree();
    let d = p.degree().unwrap_or(0);
    let rev = p.reversed(d);
    if rev.degree().unwrap_or(0) == 0 {
        return Ok((
            RootSet {
                roots: Vec::new(),
                precision_bits: start_bits,
                iterations: 0,
                max_residual: 0.0,
            },
            k,
        ));
    }
    let set = find_roots_adaptive(&rev, start_bits, max_iter)?;
    Ok((set, k))
}
