//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate polynomials over them, and canonical rational functions.
//!
//! Nothing in this module rounds. Every identity checked elsewhere in the
//! crate is checked here, by structural equality of canonical forms.

mod poly;
mod ratfunc;

pub use poly::Poly;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for any integer exponent. Panics on `0^negative`.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if exp < 0 {
        assert!(!base.is_zero(), "zero raised to a negative power");
        base.recip()
    } else {
        base.clone()
    };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// `q^exp` for an integer base.
pub fn qpow(q: u64, exp: i64) -> Rational {
    pow(&Rational::from_integer(BigInt::from(q)), exp)
}

/// Binomial coefficient `C(n, 2)`.
pub fn choose2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// Lossless `"p/q"` (or `"p"`) representation.
pub fn to_ratio_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`, with optional sign on `p`.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Floating-point approximation, for reporting only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator overflowed f64: go through bit lengths
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let shift = nb - db;
        let scaled = r / pow(&int(2), shift);
        let sign = if r.is_negative() { -1.0 } else { 1.0 };
        sign * scaled.abs().to_f64().unwrap_or(1.0) * 2f64.powi(shift as i32)
    })
}
