use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{to_ratio_string, Poly, Rational};
use crate::error::{Error, Result};

/// Rational function `num/den` in one variable, kept in canonical form:
/// `gcd(num, den) = 1` and `den` monic. The zero function is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = d.leading().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFunc { num: n, den: d })
    }

    /// Panicking variant of [`normalize`](Self::normalize) for denominators
    /// known to be nonzero.
    fn canon(num: Poly, den: Poly) -> Self {
        Self::normalize(num, den).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// The variable `T`.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::monomial(Rational::one(), 1))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` if the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0)
            .then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc::canon(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: usize) -> RatFunc {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// `f(c·T)`. With `c = 0` this is the constant `f(0)`; panics if `f`
    /// has a pole at the origin in that case.
    pub fn scale_substitute(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            let v = self
                .evaluate(c)
                .expect("scale_substitute by 0 of a function with a pole at 0");
            return RatFunc::constant(v);
        }
        RatFunc::canon(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// `f(1/(Q·T))`. Panics if `Q = 0`.
    pub fn invert_substitute(&self, q: &Rational) -> RatFunc {
        assert!(!q.is_zero(), "invert_substitute with Q = 0");
        let qi = q.recip();
        let d = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let n = self.num.scale_var(&qi).reversed(d);
        let m = self.den.scale_var(&qi).reversed(d);
        RatFunc::canon(n, m)
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleEvaluation(to_ratio_string(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `lim_{T→x} (T−x)·f(T)`; zero when `x` is not a pole.
    pub fn residue_simple(&self, x: &Rational) -> Result<Rational> {
        if !self.den.eval(x).is_zero() {
            return Ok(Rational::zero());
        }
        let dd = self.den.derivative();
        let slope = dd.eval(x);
        if slope.is_zero() {
            return Err(Error::HigherOrderPole(to_ratio_string(x)));
        }
        Ok(self.num.eval(x) / slope)
    }

    /// First `k` power-series coefficients at the origin.
    pub fn taylor_coefficients(&self, k: usize) -> Result<Vec<Rational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let inv = d0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        for i in 0..k {
            let mut acc = self.num.coeff(i);
            for j in 1..=i.min(self.den.degree().unwrap_or(0)) {
                acc -= self.den.coeff(j) * &out[i - j];
            }
            out.push(acc * &inv);
        }
        Ok(out)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::canon(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::canon(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canon(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canon(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by the zero function; see [`RatFunc::checked_div`].
impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by the zero function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::normalize(p(n), p(d)).unwrap()
    }

    /// (1 + 2t²) / ((1 − t)(1 − 2t))
    fn zhat_e0() -> RatFunc {
        rf(&[1, 0, 2], &[1, -3, 2])
    }

    #[test]
    fn normalize_examples() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[1])));
        let z = rf(&[0], &[0, 7]);
        assert_eq!((z.num(), z.den()), (&Poly::zero(), &p(&[1])));
        let s = rf(&[2, 0, 4], &[2]);
        assert_eq!((s.num(), s.den()), (&p(&[1, 0, 2]), &p(&[1])));
        assert_eq!(
            RatFunc::normalize(p(&[1]), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let f = rf(&[1], &[1, -2]);
        assert_eq!(f.den(), &Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(f.num(), &Poly::new(vec![rat(-1, 2)]));
    }

    #[test]
    fn scale_substitute_examples() {
        let f = rf(&[1], &[1, -1]);
        assert_eq!(f.scale_substitute(&int(2)), rf(&[1], &[1, -2]));
        assert_eq!(RatFunc::var().scale_substitute(&int(0)), RatFunc::zero());
        let z2 = zhat_e0().scale_substitute(&int(2));
        assert_eq!(z2.evaluate(&rat(1, 8)).unwrap(), int(3));
    }

    #[test]
    fn invert_substitute_examples() {
        let t = RatFunc::var();
        assert_eq!(t.invert_substitute(&int(4)), rf(&[1], &[0, 4]));
        assert_eq!(zhat_e0().invert_substitute(&int(2)), zhat_e0());
        let g = rf(&[1], &[1, -1]);
        assert_eq!(g.invert_substitute(&int(1)), rf(&[0, 1], &[-1, 1]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(zhat_e0().evaluate(&rat(1, 4)).unwrap(), int(3));
        assert_eq!(zhat_e0().evaluate(&rat(1, 8)).unwrap(), rat(11, 7));
        assert!(matches!(
            rf(&[1], &[1, -1]).evaluate(&int(1)),
            Err(Error::PoleEvaluation(_))
        ));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(zhat_e0().residue_simple(&int(1)).unwrap(), int(3));
        assert_eq!(RatFunc::var().residue_simple(&int(1)).unwrap(), int(0));
        assert!(matches!(
            rf(&[1], &[1, -2, 1]).residue_simple(&int(1)),
            Err(Error::HigherOrderPole(_))
        ));
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(
            rf(&[1], &[1, -2]).taylor_coefficients(3).unwrap(),
            vec![int(1), int(2), int(4)]
        );
        assert_eq!(
            rf(&[1, 1], &[1, -1]).taylor_coefficients(3).unwrap(),
            vec![int(1), int(2), int(2)]
        );
        assert_eq!(
            rf(&[1], &[0, 1]).taylor_coefficients(2),
            Err(Error::PoleAtOrigin)
        );
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[0, 1], &[1, -1]);
        // 1/(1−T) − T/(1−T) = 1
        assert_eq!(&a - &b, RatFunc::one());
        assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
        assert_eq!((&a / &a).as_constant(), Some(int(1)));
        assert_eq!(a.checked_div(&RatFunc::zero()), Err(Error::ZeroDenominator));
    }
}
