//! Rank-2 and rank-3 apparatus: the two-term rank-2 formula, the split of
//! the rank-3 zeta into its three summands, the ratio functions behind the
//! rank-3 argument, and the inequality predicates used along the way.

pub mod predicates;
pub mod yoshida;

use serde::Serialize;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::{int, qpow, rat, to_ratio_string, Poly, RatFunc, Rational};
use crate::highrank::{chain_weight, compositions, sl_n_zeta};
use crate::rhcheck::{circle_verdict, rh_verdict, RhVerdict};

pub use predicates::{ratio_predicate_44, ratio_predicate_47, PredicateReport, Side};
pub use yoshida::{sublemma_fq, yoshida_compare};

/// `1/(1 − c·T)`
fn geometric(c: Rational) -> RatFunc {
    RatFunc::normalize(Poly::one(), Poly::linear(int(1), -c)).expect("nonzero")
}

/// `1/(1 − c/T) = T/(T − c)`
fn inverse_geometric(c: Rational) -> RatFunc {
    RatFunc::normalize(Poly::from_ints(&[0, 1]), Poly::linear(-c, int(1))).expect("nonzero")
}

/// The rank-2 formula in `T = q^{−2s}`:
/// `Ẑ(T)/(1 − q²T) − Ẑ(qT)·T/(1 − T)`.
pub fn sl2_zeta_formula(c: &Curve) -> RatFunc {
    let z = c.artin_zeta();
    let q = c.q_rat();
    let first = &z * &geometric(&q * &q);
    let t_over =
        RatFunc::normalize(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1])).expect("nonzero");
    let second = &z.scale_substitute(&q) * &t_over;
    &first - &second
}

/// `sl_n_zeta(c, 2) / sl2_zeta_formula(c)`, required to be the constant
/// `q^{g−1}ν̂₁`.
pub fn sl2_constant(c: &Curve) -> Result<Rational> {
    let ratio = sl_n_zeta(c, 2).checked_div(&sl2_zeta_formula(c))?;
    let expected = qpow(c.q(), c.genus() as i64 - 1) * c.special_values(1).nu(1);
    match ratio.as_constant() {
        Some(k) if k == expected => Ok(k),
        _ => Err(Error::StructureViolation(format!(
            "{}: rank-2 ratio {} is not the constant {}",
            c.name(),
            ratio,
            to_ratio_string(&expected)
        ))),
    }
}

/// The three summands of the rank-3 zeta in `T = q^{−3s}`, without the
/// constant `q^{3(g−1)}`, and the two halves `z_le2 = z1 + z2/2`,
/// `z_ge2 = z2/2 + z3` exchanged by the functional equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank3Parts {
    pub q: u64,
    pub z1: RatFunc,
    pub z2: RatFunc,
    pub z3: RatFunc,
    pub z_ge2: RatFunc,
    pub z_le2: RatFunc,
    pub constant: Rational,
}

pub fn rank3_parts(c: &Curve) -> Result<Rank3Parts> {
    let q = c.q_rat();
    let sv = c.special_values(2);
    let (nu1, nu2) = (sv.nu(1), sv.nu(2));
    let nu1sq = &nu1 * &nu1;
    let one_m_q2 = int(1) - &q * &q;
    let q3 = &q * &q * &q;
    let z = c.artin_zeta();
    let k = |x: Rational| RatFunc::constant(x);

    let z1 = &(&(&k(&nu1sq / &one_m_q2) * &inverse_geometric(q.recip()))
        + &(&k(nu2.clone()) * &inverse_geometric(int(1))))
        * &z.scale_substitute(&(&q * &q));
    let z2 = &(&k(nu1sq.clone()) * &(&inverse_geometric(int(1)) * &geometric(q3.clone())))
        * &z.scale_substitute(&q);
    let z3 = &(&(&k(nu2) * &geometric(q3.clone()))
        + &(&k(&nu1sq / &one_m_q2) * &geometric(&q * &q)))
        * &z;
    let half = k(rat(1, 2));
    let z_ge2 = &(&half * &z2) + &z3;
    let z_le2 = &z1 + &(&half * &z2);
    let constant = qpow(c.q(), 3 * (c.genus() as i64 - 1));

    let total = &(&z1 + &z2) + &z3;
    if total != &z_le2 + &z_ge2 {
        return Err(Error::StructureViolation(
            "rank-3 halves do not add up".into(),
        ));
    }
    if total.scale(&constant) != sl_n_zeta(c, 3) {
        return Err(Error::StructureViolation(format!(
            "{}: rank-3 summands do not reproduce the rank-3 zeta",
            c.name()
        )));
    }
    if z_le2.invert_substitute(&q3) != z_ge2 {
        return Err(Error::StructureViolation(format!(
            "{}: z_le2(1/(QT)) differs from z_ge2",
            c.name()
        )));
    }
    Ok(Rank3Parts {
        q: c.q(),
        z1,
        z2,
        z3,
        z_ge2,
        z_le2,
        constant,
    })
}

/// Whether every zero of `z_ge2` satisfies `|T| = q^{−1}`, i.e. lies on
/// `Re(s) = 1/3`.
pub fn rh_third_line(
    parts: &Rank3Parts,
    tolerance: f64,
    precision_bits: usize,
) -> Result<RhVerdict> {
    rh_third_line_poly(parts.z_ge2.num(), parts.q, tolerance, precision_bits)
}

/// [`rh_third_line`] for an explicit numerator.
pub fn rh_third_line_poly(
    p: &Poly,
    q: u64,
    tolerance: f64,
    precision_bits: usize,
) -> Result<RhVerdict> {
    let q2 = qpow(q, 2);
    circle_verdict(p, &q2, 3, q, tolerance, precision_bits)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HalfPlaneReport {
    /// `max |T|·Q^{1/2}` over the numerator roots.
    pub max_scaled_modulus: f64,
    pub tolerance: f64,
    pub holds: bool,
}

/// No zero of the rank-3 zeta with `|T| > Q^{−1/2}(1 + tolerance)`, i.e. in
/// `Re(s) < 1/2`.
pub fn half_plane_check(
    c: &Curve,
    tolerance: f64,
    precision_bits: usize,
) -> Result<(HalfPlaneReport, RhVerdict)> {
    let b = crate::highrank::bundle(c, 3)?;
    let v = rh_verdict(&b, tolerance, precision_bits)?;
    let max_scaled_modulus = v.moduli.iter().map(|m| v.target / m).fold(0.0, f64::max);
    let report = HalfPlaneReport {
        max_scaled_modulus,
        tolerance,
        holds: v.roots_at_origin == 0 && max_scaled_modulus <= 1.0 + tolerance,
    };
    Ok((report, v))
}

/// The ratio functions `f_{n,a}` and `g_{n,a}` in `u = q^{nσ+n/2}`:
/// `f = Σ_{k ⊢ n−a} chain(k)/(1 − q^{a+k_p−n}u)` and
/// `g = Σ_{l ⊢ a−1} chain(l)·u/(u − q^{n−a+1+l_1})`, empty compositions
/// contributing 1.
pub fn fg_ratio_functions(c: &Curve, n: usize, a: usize) -> (RatFunc, RatFunc) {
    assert!(1 <= a && a <= n, "need 1 <= a <= n");
    let q = c.q();
    let sv = c.special_values(n.max(1));
    let f = compositions(n - a).iter().fold(RatFunc::zero(), |acc, k| {
        let w = RatFunc::constant(chain_weight(k, &sv, q));
        let term = match k.last() {
            None => w,
            Some(kp) => &w * &geometric(qpow(q, a as i64 + kp as i64 - n as i64)),
        };
        &acc + &term
    });
    let g = compositions(a - 1).iter().fold(RatFunc::zero(), |acc, l| {
        let w = RatFunc::constant(chain_weight(l, &sv, q));
        let term = match l.first() {
            None => w,
            Some(l1) => &w * &inverse_geometric(qpow(q, (n - a + 1 + l1) as i64)),
        };
        &acc + &term
    });
    (f, g)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscConditionReport {
    pub curve: String,
    pub genus: usize,
    /// `ν̂₂/ν̂₁²`
    pub rho: String,
    pub q_over_q2_minus_1: String,
    pub three_halves_over_q_minus_1: String,
    pub center: String,
    pub radius: String,
    /// `ρ > q/(q² − 1)`
    pub exceeds_first: bool,
    /// `ρ > (3/2)/(q − 1)`
    pub exceeds_second: bool,
    /// The disc lies inside `|w| < 1`.
    pub disc_contained: bool,
    /// `g ≥ 2`, the range in which the inequality is asserted.
    pub in_scope: bool,
}

/// Exact evaluation of the disc-containment condition: the disc of radius
/// `1/(2q(ρ + q/(1−q²)))` centred at `(ρ + 1/(1−q²))/(qρ + q²/(1−q²))`.
pub fn lemma48_condition(c: &Curve) -> DiscConditionReport {
    let q = c.q_rat();
    let sv = c.special_values(2);
    let rho = sv.nu(2) / (sv.nu(1) * sv.nu(1));
    let one_m_q2 = int(1) - &q * &q;
    let center = (&rho + one_m_q2.recip()) / (&q * &rho + &q * &q / &one_m_q2);
    let radius = (int(2) * &q * (&rho + &q / &one_m_q2)).recip();
    let first = &q / (&q * &q - int(1));
    let second = rat(3, 2) / (&q - int(1));
    let disc_contained =
        radius > int(0) && &center - &radius > int(-1) && &center + &radius < int(1);
    DiscConditionReport {
        curve: c.name().to_string(),
        genus: c.genus(),
        rho: to_ratio_string(&rho),
        q_over_q2_minus_1: to_ratio_string(&first),
        three_halves_over_q_minus_1: to_ratio_string(&second),
        center: to_ratio_string(&center),
        radius: to_ratio_string(&radius),
        exceeds_first: rho > first,
        exceeds_second: rho > second,
        disc_contained,
        in_scope: c.genus() >= 2,
    }
}
