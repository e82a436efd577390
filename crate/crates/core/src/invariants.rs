//! β-invariants by closed formulas independent of the rank-n zeta assembly,
//! and the identities linking them to the extracted bundle data.

use num_traits::{One, Zero};

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::{choose2, int, qpow, to_ratio_string, Rational};
use crate::highrank::{bundle, compositions, normalization};

/// Total mass `q^{C(n,2)(g−1)} · ν̂_n`.
pub fn beta_total(c: &Curve, n: usize) -> Rational {
    assert!(n >= 1, "rank must be at least 1");
    normalization(c, n) * c.special_values(n).nu(n)
}

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// β-invariant of semistable bundles of rank `n` and degree `d`, by the
/// finite composition-sum formula.
pub fn beta_zagier(c: &Curve, n: usize, d: i64) -> Result<Rational> {
    assert!(n >= 1, "rank must be at least 1");
    let q = c.q();
    let sv = c.special_values(n);
    let mut sum = Rational::zero();
    for comp in compositions(n) {
        let parts = comp.parts();
        let mut exponent = Rational::zero();
        for (i, s) in comp.inner_partial_sums().into_iter().enumerate() {
            let f = frac(&(int(s as i64 * d) / int(n as i64)));
            exponent += int((parts[i] + parts[i + 1]) as i64) * f;
        }
        if !exponent.is_integer() {
            return Err(Error::NonIntegralExponent {
                composition: parts.to_vec(),
                exponent: to_ratio_string(&exponent),
                n,
                d,
            });
        }
        let e: i64 = exponent
            .to_integer()
            .try_into()
            .expect("exponent fits in i64");
        let mut term = qpow(q, e);
        for pair in parts.windows(2) {
            term /= int(1) - qpow(q, (pair[0] + pair[1]) as i64);
        }
        for &p in parts {
            term *= sv.nu(p);
        }
        sum += term;
    }
    Ok(normalization(c, n) * sum)
}

/// `α_n(0) = q^{(n−1)(g−1)} β_{n−1}(0)`, each side computed independently.
pub fn counting_miracle_check(c: &Curve, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::DomainViolation(format!(
            "counting miracle needs n >= 2, got {n}"
        )));
    }
    let lhs = bundle(c, n)?.alpha[0].clone();
    let rhs = qpow(c.q(), (n as i64 - 1) * (c.genus() as i64 - 1)) * beta_zagier(c, n - 1, 0)?;
    Ok(lhs == rhs)
}

/// Both sides of the normalized miracle identity
/// `q^{−C(n,2)(g−1)}α_n(0) = q^{−C(n−1,2)(g−1)}β_{n−1}(0)`.
pub fn counting_miracle_sides(c: &Curve, n: usize) -> Result<(Rational, Rational)> {
    if n < 2 {
        return Err(Error::DomainViolation(format!(
            "counting miracle needs n >= 2, got {n}"
        )));
    }
    let gm1 = c.genus() as i64 - 1;
    let lhs = qpow(c.q(), -choose2(n) * gm1) * &bundle(c, n)?.alpha[0];
    let rhs = qpow(c.q(), -choose2(n - 1) * gm1) * beta_zagier(c, n - 1, 0)?;
    Ok((lhs, rhs))
}

/// `α_n(mn)`: zero for `m < 0`, the vanishing-theorem value past
/// `mn > 2n(g−1)` (strict), otherwise read from the rank-n zeta.
pub fn alpha_large(c: &Curve, n: usize, m: i64) -> Result<Rational> {
    if m < 0 {
        return Ok(Rational::zero());
    }
    let g = c.genus() as i64;
    let n_i = n as i64;
    if m * n_i > 2 * n_i * (g - 1) {
        let beta = beta_zagier(c, n, 0)?;
        return Ok(beta * (qpow(c.q(), m * n_i - n_i * (g - 1)) - Rational::one()));
    }
    Ok(bundle(c, n)?.alpha_series(m as usize))
}

/// `β(mn) = β(0)` for `m ∈ {−2,−1,1,2}`, and `β(0)` equals the residue
/// extracted from the rank-n zeta.
pub fn beta_relation_check(c: &Curve, n: usize) -> Result<bool> {
    let b0 = beta_zagier(c, n, 0)?;
    for m in [-2i64, -1, 1, 2] {
        if beta_zagier(c, n, m * n as i64)? != b0 {
            return Ok(false);
        }
    }
    Ok(bundle(c, n)?.beta0 == b0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn e0() -> Curve {
        Curve::from_point_counts("E0", 2, 1, &[3]).unwrap()
    }

    #[test]
    fn beta_total_e0() {
        assert_eq!(beta_total(&e0(), 1), int(3));
        assert_eq!(beta_total(&e0(), 2), int(9));
        assert_eq!(beta_total(&e0(), 3), rat(99, 7));
    }

    #[test]
    fn beta_zagier_e0() {
        assert_eq!(beta_zagier(&e0(), 2, 0).unwrap(), int(6));
        assert_eq!(beta_zagier(&e0(), 3, 0).unwrap(), rat(66, 7));
        for d in -4..4 {
            assert_eq!(
                beta_zagier(&e0(), 3, d).unwrap(),
                beta_zagier(&e0(), 3, d + 3).unwrap()
            );
        }
    }

    #[test]
    fn miracle_e0() {
        for n in 2..=4 {
            assert!(counting_miracle_check(&e0(), n).unwrap(), "n = {n}");
        }
        assert_eq!(bundle(&e0(), 4).unwrap().alpha[0], rat(66, 7));
    }

    #[test]
    fn alpha_large_routes() {
        assert_eq!(alpha_large(&e0(), 2, -1).unwrap(), int(0));
        assert_eq!(alpha_large(&e0(), 2, 1).unwrap(), int(18));
        let c = Curve::synthetic("s", 2, 2, &[1, 0]).unwrap();
        let b = bundle(&c, 2).unwrap();
        assert_eq!(alpha_large(&c, 2, 2).unwrap(), b.alpha_series(2));
    }

    #[test]
    fn beta_relations() {
        assert!(beta_relation_check(&e0(), 2).unwrap());
        assert!(beta_relation_check(&e0(), 3).unwrap());
        let c = Curve::synthetic("s", 3, 2, &[1, -2]).unwrap();
        assert!(beta_relation_check(&c, 2).unwrap());
    }
}
