use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rising factorial `a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(i64::from(n - i)) / int(i64::from(i + 1));
    }
    acc
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| Error::Parse(s.to_string()))?),
    };
    Ok(parsed)
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(2), 2), int(6));
        assert_eq!(pochhammer(&int(0), 3), int(0));
        assert_eq!(pochhammer(&ratio(3, 2), 2), ratio(15, 4));
        assert_eq!(pochhammer(&ratio(-7, 3), 0), int(1));
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(pow(&ratio(1, 2), -3), int(8));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("7/3").unwrap(), ratio(7, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational(" 5 ").unwrap(), int(5));
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("0.5").is_err());
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(9)), "9");
    }

    proptest! {
        #[test]
        fn pochhammer_splits(n in -40i64..40, d in 1i64..9, j in 0u32..=6, k in 0u32..=6) {
            let a = ratio(n, d);
            let shifted = &a + int(i64::from(j));
            prop_assert_eq!(pochhammer(&a, j + k), pochhammer(&a, j) * pochhammer(&shifted, k));
        }

        #[test]
        fn format_round_trips(n in any::<i64>(), d in 1i64..1_000_000) {
            let r = ratio(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
