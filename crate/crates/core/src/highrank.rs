//! Rank-n zeta functions assembled from composition sums, and extraction of
//! their numerator, α- and β-invariants.

use num_traits::{One, Zero};

use crate::curve::{Curve, SpecialValues};
use crate::error::{Error, Result};
use crate::exact::{choose2, int, qpow, to_ratio_string, Poly, RatFunc, Rational};

/// An ordered tuple of positive integers. The empty composition is the
/// unique composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "composition parts must be positive"
        );
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// Partial sums `S_1, …, S_{k−1}` (the last, equal to the total, omitted).
    pub fn inner_partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }
}

/// All compositions of `m` in lexicographic order.
pub fn compositions(m: usize) -> Vec<Composition> {
    fn rec(m: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if m == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=m {
            prefix.push(first);
            rec(m - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1usize << m.saturating_sub(1));
    rec(m, &mut Vec::new(), &mut out);
    out
}

/// `∏ ν̂(c_i) / ∏_j (1 − q^{c_j + c_{j+1}})`; 1 for the empty composition.
pub fn chain_weight(c: &Composition, sv: &SpecialValues, q: u64) -> Rational {
    let mut w = Rational::one();
    for &p in &c.parts {
        w *= sv.nu(p);
    }
    for pair in c.parts.windows(2) {
        w /= int(1) - qpow(q, (pair[0] + pair[1]) as i64);
    }
    w
}

/// `1/(1 − c·T)`
fn geometric(c: &Rational) -> RatFunc {
    RatFunc::normalize(Poly::one(), Poly::linear(int(1), -c.clone())).expect("nonzero")
}

/// `T/(T − c)`
fn shifted_pole(c: &Rational) -> RatFunc {
    RatFunc::normalize(Poly::from_ints(&[0, 1]), Poly::linear(-c.clone(), int(1))).expect("nonzero")
}

/// The summand of index `a` (`1 ≤ a ≤ n`) without the constant
/// `q^{C(n,2)(g−1)}`, as a function of `T = q^{−ns}`.
pub fn sl_n_term(c: &Curve, sv: &SpecialValues, n: usize, a: usize) -> RatFunc {
    assert!(1 <= a && a <= n, "term index out of range");
    let q = c.q();
    let left = compositions(n - a).iter().fold(RatFunc::zero(), |acc, k| {
        let w = RatFunc::constant(chain_weight(k, sv, q));
        let f = match k.last() {
            None => w,
            Some(kp) => {
                let e = a as i64 + kp as i64 - n as i64;
                &w * &shifted_pole(&qpow(q, e))
            }
        };
        &acc + &f
    });
    let right = compositions(a - 1).iter().fold(RatFunc::zero(), |acc, l| {
        let w = RatFunc::constant(chain_weight(l, sv, q));
        let f = match l.first() {
            None => w,
            Some(l1) => {
                let e = (n - a + 1 + l1) as i64;
                &w * &geometric(&qpow(q, e))
            }
        };
        &acc + &f
    });
    let mid = c.artin_zeta().scale_substitute(&qpow(q, (n - a) as i64));
    &(&left * &mid) * &right
}

/// The rank-n zeta `Ẑ_{X,n}(T)` as an exact rational function of `T`.
pub fn sl_n_zeta(c: &Curve, n: usize) -> RatFunc {
    assert!(n >= 1, "rank must be at least 1");
    let sv = c.special_values(n);
    let sum = (1..=n).fold(RatFunc::zero(), |acc, a| &acc + &sl_n_term(c, &sv, n, a));
    sum.scale(&normalization(c, n))
}

/// `C_{n,g;q} = q^{C(n,2)(g−1)}`
pub fn normalization(c: &Curve, n: usize) -> Rational {
    qpow(c.q(), choose2(n) * (c.genus() as i64 - 1))
}

/// `T^{g−1}(1−T)(1−QT)`
pub fn expected_denominator(g: usize, big_q: &Rational) -> Poly {
    &Poly::monomial(Rational::one(), g - 1)
        * &(&Poly::from_ints(&[1, -1]) * &Poly::linear(int(1), -big_q.clone()))
}

/// True iff the canonical denominator of `z` divides `T^{g−1}(1−T)(1−QT)`,
/// i.e. all intermediate factors `(1 − q^j T)` have cancelled.
pub fn verify_cancellation(z: &RatFunc, n: usize, q: u64, g: usize) -> bool {
    let target = expected_denominator(g, &qpow(q, n as i64));
    target.div_rem(z.den()).1.is_zero()
}

/// A rank-n zeta with its numerator and invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaBundle {
    pub n: usize,
    pub g: usize,
    pub q: u64,
    /// `Q = qⁿ`
    pub big_q: Rational,
    pub zhat: RatFunc,
    /// `P_{X,n}(T)`, degree `2g`.
    pub numerator: Poly,
    /// `α(mn)` for `m = 0..g−1`.
    pub alpha: Vec<Rational>,
    pub beta0: Rational,
    /// `C_{n,g;q}`
    pub normalization: Rational,
}

fn violation(c: &Curve, n: usize, what: String) -> Error {
    Error::StructureViolation(format!("{} rank {n}: {what}", c.name()))
}

/// Assembles the rank-n zeta and extracts its data, checking the expected
/// structure along the way.
pub fn bundle(c: &Curve, n: usize) -> Result<ZetaBundle> {
    let z = sl_n_zeta(c, n);
    bundle_from_zeta(c, n, z)
}

pub fn bundle_from_zeta(c: &Curve, n: usize, z: RatFunc) -> Result<ZetaBundle> {
    let g = c.genus();
    let q = c.q();
    let big_q = qpow(q, n as i64);
    let den = expected_denominator(g, &big_q);
    let num_rf = &z * &RatFunc::from_poly(den);
    if num_rf.den().degree() != Some(0) {
        return Err(violation(
            c,
            n,
            format!("uncancelled denominator {}", z.den()),
        ));
    }
    let numerator = num_rf.num().clone();
    if numerator.degree() != Some(2 * g) {
        return Err(violation(
            c,
            n,
            format!(
                "numerator degree {:?}, expected {}",
                numerator.degree(),
                2 * g
            ),
        ));
    }
    for i in 0..=2 * g {
        let lhs = numerator.coeff(2 * g - i);
        let rhs = crate::exact::pow(&big_q, g as i64 - i as i64) * numerator.coeff(i);
        if lhs != rhs {
            return Err(violation(
                c,
                n,
                format!("coefficient symmetry fails at T^{i}"),
            ));
        }
    }
    let shifted = &z * &RatFunc::from_poly(Poly::monomial(Rational::one(), g - 1));
    let alpha = shifted.taylor_coefficients(g)?;
    if numerator.coeff(0) != alpha[0] {
        return Err(violation(
            c,
            n,
            "constant term differs from alpha(0)".into(),
        ));
    }
    let lead = crate::exact::pow(&big_q, g as i64) * &alpha[0];
    if numerator.coeff(2 * g) != lead {
        return Err(violation(
            c,
            n,
            "leading coefficient differs from Q^g alpha(0)".into(),
        ));
    }
    let beta0 = z.residue_simple(&int(1))?;
    let via_num = numerator.eval(&int(1)) / (&big_q - int(1));
    if beta0 != via_num {
        return Err(violation(
            c,
            n,
            format!(
                "residue {} differs from P(1)/(Q-1) = {}",
                to_ratio_string(&beta0),
                to_ratio_string(&via_num)
            ),
        ));
    }
    Ok(ZetaBundle {
        n,
        g,
        q,
        big_q,
        zhat: z,
        numerator,
        alpha,
        beta0,
        normalization: normalization(c, n),
    })
}

impl ZetaBundle {
    /// `α(mn)` for any `0 ≤ m`, read off the power series of `T^{g−1}·Ẑ`.
    pub fn alpha_series(&self, m: usize) -> Rational {
        let shifted = &self.zhat * &RatFunc::from_poly(Poly::monomial(Rational::one(), self.g - 1));
        shifted
            .taylor_coefficients(m + 1)
            .expect("regular at the origin")
            .pop()
            .expect("m + 1 coefficients")
    }

    /// `α'(mn) = α(mn)/α(0)`
    pub fn alpha_prime(&self, m: usize) -> Rational {
        &self.alpha[m] / &self.alpha[0]
    }

    /// `β'(0) = β(0)/α(0)`
    pub fn beta_prime(&self) -> Rational {
        &self.beta0 / &self.alpha[0]
    }
}

/// Assembles `Σ_{m=0}^{g−2} α(mn)(T^{m−(g−1)} + Q^{(g−1)−m}T^{(g−1)−m})
/// + α((g−1)n) + (Q−1)β(0)T/((1−T)(1−QT))`.
pub fn reconstruct_theorem12(
    alpha: &[Rational],
    beta0: &Rational,
    n: usize,
    g: usize,
    q: u64,
) -> RatFunc {
    assert_eq!(alpha.len(), g, "alpha must hold g entries");
    let big_q = qpow(q, n as i64);
    let mut acc = RatFunc::constant(alpha[g - 1].clone());
    for (m, a) in alpha.iter().enumerate().take(g.saturating_sub(1)) {
        let k = g - 1 - m;
        let neg =
            RatFunc::normalize(Poly::one(), Poly::monomial(Rational::one(), k)).expect("nonzero");
        let pos = RatFunc::from_poly(Poly::monomial(crate::exact::pow(&big_q, k as i64), k));
        acc = &acc + &(&(&neg + &pos) * &RatFunc::constant(a.clone()));
    }
    let tail_num = Poly::monomial((&big_q - int(1)) * beta0, 1);
    let tail_den = &Poly::from_ints(&[1, -1]) * &Poly::linear(int(1), -big_q.clone());
    let tail = RatFunc::normalize(tail_num, tail_den).expect("nonzero");
    &acc + &tail
}

/// Exact sanity checks of a rank-n zeta: denominator exactly
/// `T^{g−1}(1−T)(1−QT)` up to normalization, simple poles at `1` and `1/Q`,
/// and invariance under `T ↦ 1/(QT)`.
pub fn check_structure(z: &RatFunc, n: usize, q: u64, g: usize) -> Result<()> {
    let big_q = qpow(q, n as i64);
    if z.den() != &expected_denominator(g, &big_q).monic() {
        return Err(Error::StructureViolation(format!(
            "rank {n}: denominator {} is not T^(g-1)(1-T)(1-QT)",
            z.den()
        )));
    }
    if z.invert_substitute(&big_q) != *z {
        return Err(Error::StructureViolation(format!(
            "rank {n}: functional equation T -> 1/(QT) fails"
        )));
    }
    for x in [int(1), big_q.recip()] {
        if z.residue_simple(&x)?.is_zero() {
            return Err(Error::StructureViolation(format!(
                "rank {n}: missing pole at {}",
                to_ratio_string(&x)
            )));
        }
    }
    Ok(())
}
