#![allow(dead_code)]

use nazeta::exact::Poly;
use nazeta::{Curve, RatFunc};
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn e0() -> Curve {
    Curve::from_point_counts("E0", 2, 1, &[3]).unwrap()
}

/// Largest trace `a` with `a² ≤ 4q`.
pub fn trace_bound(q: u64) -> i64 {
    let mut a = 0i64;
    while ((a + 1) * (a + 1)) as u64 <= 4 * q {
        a += 1;
    }
    a
}

/// Weil-valid curves `∏(1 − a_i t + q t²)` with admissible traces.
pub fn synthetic_curve(qs: &'static [u64], max_g: usize) -> impl Strategy<Value = Curve> {
    (prop::sample::select(qs), 1..=max_g)
        .prop_flat_map(|(q, g)| {
            let b = trace_bound(q);
            (Just(q), prop::collection::vec(-b..=b, g))
        })
        .prop_map(|(q, traces)| Curve::synthetic("S", q, traces.len(), &traces).unwrap())
}

pub fn random_synthetic(rng: &mut ChaCha8Rng, q: u64, g: usize) -> Curve {
    let b = trace_bound(q);
    let traces: Vec<i64> = (0..g).map(|_| rng.gen_range(-b..=b)).collect();
    Curve::synthetic(&format!("S{q}_{g}_{traces:?}"), q, g, &traces).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monic denominator, coprime parts, zero stored as `0/1`.
pub fn is_canonical(f: &RatFunc) -> bool {
    let den = f.den();
    if den.leading().map(|c| c.is_one()) != Some(true) {
        return false;
    }
    if f.num().is_zero() {
        return *den == Poly::one();
    }
    f.num().gcd(den) == Poly::one()
}

/// `GF(2^k)` for `k ≤ 4`, elements as bit vectors modulo a fixed
/// irreducible polynomial.
pub struct Gf2k {
    pub k: u32,
    modulus: u32,
}

impl Gf2k {
    pub fn new(k: u32) -> Self {
        let modulus = match k {
            1 => 0b11,
            2 => 0b111,
            3 => 0b1011,
            4 => 0b10011,
            _ => panic!("unsupported extension degree"),
        };
        Gf2k { k, modulus }
    }

    pub fn size(&self) -> u32 {
        1 << self.k
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut r = 0u32;
        for i in 0..self.k {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        for i in (self.k..2 * self.k).rev() {
            if r >> i & 1 == 1 {
                r ^= self.modulus << (i - self.k);
            }
        }
        r
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
}

/// Projective points of `y² + y = x^e` (`e` odd) over `GF(2^k)`: affine
/// solutions plus the single point at infinity.
pub fn count_y2_plus_y_eq_xe(e: u32, k: u32) -> i64 {
    let f = Gf2k::new(k);
    let mut n = 1;
    for x in 0..f.size() {
        let rhs = f.pow(x, e);
        for y in 0..f.size() {
            if f.mul(y, y) ^ y == rhs {
                n += 1;
            }
        }
    }
    n
}
