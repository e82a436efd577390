//! Thin complex layer over `astro_float::BigFloat`.

use astro_float::{BigFloat, RoundingMode};
use num_bigint::{BigInt, Sign};

use crate::exact::Rational;

pub const RM: RoundingMode = RoundingMode::ToEven;

pub fn bf_from_bigint(n: &BigInt, p: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let base = BigFloat::from_u128(1u128 << 64, p);
    let mut acc = BigFloat::from_u64(0, p);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
    }
    if sign == Sign::Minus {
        acc = acc.neg();
    }
    acc
}

pub fn bf_from_rational(r: &Rational, p: usize) -> BigFloat {
    bf_from_bigint(r.numer(), p).div(&bf_from_bigint(r.denom(), p), p, RM)
}

pub fn bf_to_string(x: &BigFloat) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    format!("{x}")
}

pub fn bf_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    bf_to_string(x).parse().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(p: usize) -> Self {
        BigComplex::from_f64(0.0, 0.0, p)
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        BigComplex {
            re: BigFloat::from_f64(re, p),
            im: BigFloat::from_f64(im, p),
        }
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        BigComplex {
            re,
            im: BigFloat::from_u64(0, p),
        }
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        BigComplex {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        BigComplex {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        BigComplex {
            re: self
                .re
                .mul(&o.re, p, RM)
                .sub(&self.im.mul(&o.im, p, RM), p, RM),
            im: self
                .re
                .mul(&o.im, p, RM)
                .add(&self.im.mul(&o.re, p, RM), p, RM),
        }
    }

    pub fn mul_real(&self, x: &BigFloat, p: usize) -> Self {
        BigComplex {
            re: self.re.mul(x, p, RM),
            im: self.im.mul(x, p, RM),
        }
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        self.norm_sqr(p).sqrt(p, RM)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Self, p: usize) -> Self {
        let d = o.norm_sqr(p);
        assert!(!d.is_zero(), "complex division by zero");
        let re = self
            .re
            .mul(&o.re, p, RM)
            .add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self
            .im
            .mul(&o.re, p, RM)
            .sub(&self.re.mul(&o.im, p, RM), p, RM);
        BigComplex {
            re: re.div(&d, p, RM),
            im: im.div(&d, p, RM),
        }
    }

    pub fn recip(&self, p: usize) -> Self {
        BigComplex::from_f64(1.0, 0.0, p).div(self, p)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (bf_to_f64(&self.re), bf_to_f64(&self.im))
    }
}

/// Horner evaluation of a real-coefficient polynomial at a complex point.
pub fn horner(coeffs: &[BigFloat], z: &BigComplex, p: usize) -> BigComplex {
    let mut acc = BigComplex::zero(p);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, p);
        acc.re = acc.re.add(c, p, RM);
    }
    acc
}
