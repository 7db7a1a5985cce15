use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced quotient `num / den` of polynomials.
///
/// `den` is monic and coprime to `num`, so equal functions have identical
/// representatives and `==` is structural. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn reduce(num: Poly, den: Poly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce_nonzero(num, den))
    }

    fn reduce_nonzero(num: Poly, den: Poly) -> RatFn {
        if num.is_zero() {
            return RatFn::zero();
        }
        if den.is_constant() {
            let inv = den.coeff(0).recip();
            return RatFn {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero denominator").recip();
        RatFn {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> RatFn {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn::from(Poly::one())
    }

    pub fn constant(c: Rational) -> RatFn {
        RatFn::from(Poly::constant(c))
    }

    /// `(x - c)^m` for any integer `m`.
    pub fn linear_power(c: &Rational, m: i64) -> RatFn {
        let p = Poly::linear(c).pow(m.unsigned_abs() as u32);
        if m >= 0 {
            RatFn::from(p)
        } else {
            RatFn {
                num: Poly::one(),
                den: p,
            }
        }
    }

    /// `c x^k` with `k` possibly negative.
    pub fn monomial(c: Rational, k: i64) -> RatFn {
        if k >= 0 {
            RatFn::from(Poly::monomial(c, k as usize))
        } else {
            RatFn::reduce_nonzero(Poly::constant(c), Poly::monomial(Rational::one(), (-k) as usize))
        }
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

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<Poly> {
        self.is_polynomial().then_some(self.num)
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        if self.is_polynomial() {
            return RatFn::from(&self.num * p);
        }
        RatFn::reduce_nonzero(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFn> {
        RatFn::reduce(self.den.clone(), self.num.clone())
    }

    pub fn derive(&self) -> RatFn {
        if self.is_polynomial() {
            return RatFn::from(self.num.derive(1));
        }
        let num = &(&self.num.derive(1) * &self.den) - &(&self.num * &self.den.derive(1));
        RatFn::reduce_nonzero(num, &self.den * &self.den)
    }

    /// Evaluates at `x`; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Terms `(power, coeff)` when the function is a Laurent polynomial,
    /// i.e. the denominator is a power of `x`.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rational)>> {
        let shift = self.den.degree()? as i64;
        if self.den != Poly::monomial(Rational::one(), shift as usize) {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 - shift, c.clone()))
                .collect(),
        )
    }
}

impl From<Poly> for RatFn {
    fn from(num: Poly) -> RatFn {
        RatFn {
            num,
            den: Poly::one(),
        }
    }
}

impl Default for RatFn {
    fn default() -> Self {
        RatFn::zero()
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::reduce_nonzero(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::reduce_nonzero(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFn::from(&self.num * &rhs.num);
        }
        RatFn::reduce_nonzero(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: &RatFn) -> RatFn {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::one()
    }
}
