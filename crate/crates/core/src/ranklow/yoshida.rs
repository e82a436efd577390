use std::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative width of the band in which the two products count as equal.
pub const TIE_BAND: f64 = 1e-12;

/// Sign of `|w − αq^κ||w − βq^κ| − |1 − αq^κ w||1 − βq^κ w|`.
///
/// Requires `αβ = q` (relative `1e-12`), `α + β` real and `|α + β| ≤ q + 1`.
pub fn yoshida_compare(
    alpha: Complex64,
    beta: Complex64,
    q: f64,
    kappa: f64,
    w: Complex64,
) -> Result<Ordering> {
    // negated so NaN is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    let bad = !(q > 1.0) || !(kappa >= 0.0);
    if bad {
        return Err(Error::DomainViolation(format!(
            "need q > 1 and kappa >= 0, got q = {q}, kappa = {kappa}"
        )));
    }
    let prod = alpha * beta;
    if (prod - q).norm() > 1e-12 * q {
        return Err(Error::DomainViolation(format!(
            "alpha*beta = {prod} differs from q = {q}"
        )));
    }
    let tr = alpha + beta;
    if tr.im.abs() > 1e-12 * q || tr.re.abs() > q + 1.0 + 1e-12 * q {
        return Err(Error::DomainViolation(format!(
            "alpha + beta = {tr} is not a real number of size <= q + 1"
        )));
    }
    let s = q.powf(kappa);
    let (a, b) = (alpha * s, beta * s);
    let one = Complex64::new(1.0, 0.0);
    let lhs = (w - a).norm() * (w - b).norm();
    let rhs = (one - a * w).norm() * (one - b * w).norm();
    let scale = lhs.max(rhs).max(1.0);
    Ok(if (lhs - rhs).abs() <= TIE_BAND * scale {
        Ordering::Equal
    } else if lhs > rhs {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// `f_q(x) = q^{2x+1} + 1 − q^x(q+1) = (q^x − 1)(q^{x+1} − 1)`, evaluated in
/// the factored form so that small `x` keeps full relative accuracy.
pub fn sublemma_fq(q: f64, x: f64) -> f64 {
    let l = q.ln();
    (x * l).exp_m1() * ((x + 1.0) * l).exp_m1()
}
