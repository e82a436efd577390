//! Curves over finite fields given by their Weil data, the completed Artin
//! zeta function, and its special values.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, qpow, to_ratio_string, Poly, RatFunc, Rational};
use crate::rhcheck;

/// Relative tolerance of the numerical Weil check.
pub const WEIL_TOLERANCE: f64 = 1e-9;

/// A smooth projective curve `X/F_q`, known through `P(t) = ∏(1 − ω_i t)`.
///
/// Constructed only through validating constructors, so every value
/// satisfies `P(0) = 1`, `deg P = 2g` and the coefficient symmetry
/// `c_{2g−i} = q^{g−i} c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    name: String,
    q: u64,
    g: usize,
    p: Poly,
}

/// `ζ̂(k)` and `ν̂_k = ζ̂(1)⋯ζ̂(k)` for `1 ≤ k ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValues {
    zeta_at: Vec<Rational>,
    nu_hat: Vec<Rational>,
}

impl SpecialValues {
    /// `ζ̂(k)`, with `ζ̂(1)` the residue at `t = 1`. Panics if `k` is 0 or
    /// beyond the computed range.
    pub fn zeta(&self, k: usize) -> &Rational {
        assert!(k >= 1, "zeta index starts at 1");
        &self.zeta_at[k - 1]
    }

    /// `ν̂_k`; `ν̂_0 = 1`.
    pub fn nu(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::one()
        } else {
            self.nu_hat[k - 1].clone()
        }
    }

    pub fn n_max(&self) -> usize {
        self.zeta_at.len()
    }
}

fn check_field(q: u64, g: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidCurve(format!("q = {q} must be at least 2")));
    }
    if g == 0 {
        return Err(Error::InvalidCurve("genus 0 is not supported".into()));
    }
    if !is_prime_power(q) {
        log::warn!("q = {q} is not a prime power; proceeding formally");
    }
    Ok(())
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

/// Power sums `s_1..s_k` of the reciprocal roots of `P`, by Newton's
/// identities `s_k = −k c_k − Σ_{i<k} c_{k−i} s_i`.
fn power_sums(p: &Poly, k: usize) -> Vec<Rational> {
    let mut s: Vec<Rational> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut acc = -(int(j as i64) * p.coeff(j));
        for i in 1..j {
            acc -= p.coeff(j - i) * &s[i - 1];
        }
        s.push(acc);
    }
    s
}

impl Curve {
    /// Rebuilds `P(t)` from `N_1..N_g` via `S_i = qⁱ + 1 − N_i`, Newton's
    /// identities, and the functional-equation reflection.
    pub fn from_point_counts(name: &str, q: u64, g: usize, counts: &[i64]) -> Result<Curve> {
        check_field(q, g)?;
        if counts.len() != g {
            return Err(Error::InvalidCurve(format!(
                "expected {g} point counts, got {}",
                counts.len()
            )));
        }
        if let Some(n) = counts.iter().find(|&&n| n < 0) {
            return Err(Error::InvalidCurve(format!("negative point count {n}")));
        }
        let s: Vec<Rational> = counts
            .iter()
            .enumerate()
            .map(|(i, &n)| qpow(q, i as i64 + 1) + int(1) - int(n))
            .collect();
        let mut c = vec![Rational::zero(); 2 * g + 1];
        c[0] = Rational::one();
        for k in 1..=g {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &c[k - i] * &s[i - 1];
            }
            c[k] = -acc / int(k as i64);
        }
        for i in 0..g {
            c[2 * g - i] = qpow(q, (g - i) as i64) * &c[i];
        }
        let curve = Curve {
            name: name.to_string(),
            q,
            g,
            p: Poly::new(c),
        };
        curve.check_weil()?;
        Ok(curve)
    }

    /// `P(t) = ∏(1 − a_i t + q t²)`; Weil-valid by construction.
    pub fn synthetic(name: &str, q: u64, g: usize, traces: &[i64]) -> Result<Curve> {
        check_field(q, g)?;
        if traces.len() != g {
            return Err(Error::InvalidCurve(format!(
                "expected {g} traces, got {}",
                traces.len()
            )));
        }
        let mut p = Poly::one();
        for (i, &a) in traces.iter().enumerate() {
            if (a as i128) * (a as i128) > 4 * q as i128 {
                return Err(Error::TraceOutOfRange {
                    index: i,
                    trace: a,
                    q,
                });
            }
            p = &p
                * &Poly::new(vec![
                    int(1),
                    int(-a),
                    Rational::from_integer(BigInt::from(q)),
                ]);
        }
        Ok(Curve {
            name: name.to_string(),
            q,
            g,
            p,
        })
    }

    /// Accepts explicit coefficients `c_0..c_{2g}` of `P(t)`.
    pub fn from_p_coefficients(
        name: &str,
        q: u64,
        g: usize,
        coeffs: Vec<Rational>,
    ) -> Result<Curve> {
        check_field(q, g)?;
        if coeffs.len() != 2 * g + 1 {
            return Err(Error::InvalidCurve(format!(
                "expected {} coefficients, got {}",
                2 * g + 1,
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(Error::InvalidCurve(format!(
                "constant term must be 1, got {}",
                to_ratio_string(&coeffs[0])
            )));
        }
        let p = Poly::new(coeffs);
        if p.degree() != Some(2 * g) {
            return Err(Error::InvalidCurve("leading coefficient vanishes".into()));
        }
        for i in 0..=2 * g {
            let lhs = p.coeff(2 * g - i);
            let rhs = qpow(q, g as i64 - i as i64) * p.coeff(i);
            if lhs != rhs {
                return Err(Error::InvalidCurve(format!(
                    "functional equation fails at index {i}: {} != {}",
                    to_ratio_string(&lhs),
                    to_ratio_string(&rhs)
                )));
            }
        }
        let curve = Curve {
            name: name.to_string(),
            q,
            g,
            p,
        };
        curve.check_weil()?;
        Ok(curve)
    }

    fn check_weil(&self) -> Result<()> {
        let v = rhcheck::circle_verdict(
            &self.p,
            &Rational::from_integer(BigInt::from(self.q)),
            1,
            self.q,
            WEIL_TOLERANCE,
            rhcheck::DEFAULT_PRECISION,
        )?;
        if v.holds {
            Ok(())
        } else {
            Err(Error::WeilViolation(format!(
                "{}: reciprocal root moduli {:?} differ from sqrt({}) (max relative deviation {:e})",
                self.name, v.moduli, self.q, v.max_rel_deviation
            )))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_rat(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.q))
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    /// The Weil numerator `P(t)`.
    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn rename(mut self, name: &str) -> Curve {
        self.name = name.to_string();
        self
    }

    /// `N_k = q^k + 1 − Σ ω_i^k` for `k = 1..=count`.
    pub fn point_counts(&self, count: usize) -> Vec<Rational> {
        power_sums(&self.p, count)
            .into_iter()
            .enumerate()
            .map(|(i, s)| qpow(self.q, i as i64 + 1) + int(1) - s)
            .collect()
    }

    /// `#Pic⁰ = P(1)`.
    pub fn class_number(&self) -> Rational {
        self.p.eval(&int(1))
    }

    /// `Ẑ(t) = P(t) / (t^{g−1}(1−t)(1−qt))`.
    pub fn artin_zeta(&self) -> RatFunc {
        let den = &Poly::monomial(Rational::one(), self.g - 1)
            * &(&Poly::from_ints(&[1, -1]) * &Poly::linear(int(1), -self.q_rat()));
        RatFunc::normalize(self.p.clone(), den).expect("nonzero denominator")
    }

    pub fn special_values(&self, n_max: usize) -> SpecialValues {
        assert!(n_max >= 1, "n_max must be at least 1");
        let z = self.artin_zeta();
        let mut zeta_at = Vec::with_capacity(n_max);
        zeta_at.push(z.residue_simple(&int(1)).expect("simple pole at t = 1"));
        for k in 2..=n_max {
            zeta_at.push(
                z.evaluate(&qpow(self.q, -(k as i64)))
                    .expect("regular at q^-k for k >= 2"),
            );
        }
        let mut nu_hat = Vec::with_capacity(n_max);
        let mut acc = Rational::one();
        for v in &zeta_at {
            acc *= v;
            nu_hat.push(acc.clone());
        }
        debug_assert!(nu_hat.iter().all(|v| v.is_positive()));
        SpecialValues { zeta_at, nu_hat }
    }
}
