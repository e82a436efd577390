//! Closed intervals with exact rational endpoints. Arithmetic is exact, so
//! enclosures only widen where an irrational input (a square root) is
//! bracketed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{pow, to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            _ => Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Indeterminate => "indeterminate",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Enclosure of `√x` for `x ≥ 0` with width at most `2^{−bits}`;
    /// degenerate when `x` is the square of a rational.
    pub fn sqrt(x: &Rational, bits: u32) -> Self {
        assert!(!x.is_negative(), "square root of a negative number");
        // √(a/b) = √(ab)/b
        let ab = x.numer() * x.denom();
        let scale = BigInt::one() << (2 * bits as usize);
        let m = &ab * &scale;
        let s = m.sqrt();
        let den = x.denom() * (BigInt::one() << bits as usize);
        if &s * &s == m {
            return Interval::point(Rational::new(s, den));
        }
        Interval::new(
            Rational::new(s.clone(), den.clone()),
            Rational::new(s + BigInt::one(), den),
        )
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        self.mul(&Interval::point(c.clone()))
    }

    /// `None` if the divisor contains zero.
    pub fn div(&self, o: &Interval) -> Option<Interval> {
        if o.contains(&Rational::zero()) {
            return None;
        }
        let inv = Interval::new(o.hi.recip(), o.lo.recip());
        Some(self.mul(&inv))
    }

    pub fn powi(&self, k: u32) -> Interval {
        if k == 0 {
            return Interval::point(Rational::one());
        }
        if k % 2 == 1 || !self.lo.is_negative() {
            let (a, b) = (pow(&self.lo, k as i64), pow(&self.hi, k as i64));
            return Interval::new(a, b);
        }
        if !self.hi.is_positive() {
            return Interval::new(pow(&self.hi, k as i64), pow(&self.lo, k as i64));
        }
        let m = std::cmp::max(self.lo.abs(), self.hi.abs());
        Interval::new(Rational::zero(), pow(&m, k as i64))
    }

    /// Certified `self ≤ o`.
    pub fn le(&self, o: &Interval) -> Verdict {
        if self.hi <= o.lo {
            Verdict::Pass
        } else if self.lo > o.hi {
            Verdict::Fail
        } else {
            Verdict::Indeterminate
        }
    }

    /// Certified `self < o`.
    pub fn lt(&self, o: &Interval) -> Verdict {
        if self.hi < o.lo {
            Verdict::Pass
        } else if self.lo >= o.hi {
            Verdict::Fail
        } else {
            Verdict::Indeterminate
        }
    }
}
