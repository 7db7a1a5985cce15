use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::canonical::CanonicalOperator;
use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// Truncated series `Σ a_k x^{2k}`, `k` possibly negative.
///
/// Every coefficient with `k ≤ valid_up_to` is exact (absent means zero);
/// nothing beyond `valid_up_to` is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenLaurentSeries {
    coeffs: BTreeMap<i64, Rational>,
    valid_up_to: i64,
}

impl EvenLaurentSeries {
    pub fn new(coeffs: impl IntoIterator<Item = (i64, Rational)>, valid_up_to: i64) -> Self {
        let mut s = EvenLaurentSeries {
            coeffs: BTreeMap::new(),
            valid_up_to,
        };
        for (k, c) in coeffs {
            s.accumulate(k, c);
        }
        s
    }

    pub fn zero(valid_up_to: i64) -> Self {
        Self::new([], valid_up_to)
    }

    fn accumulate(&mut self, k: i64, c: Rational) {
        if k > self.valid_up_to || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn valid_up_to(&self) -> i64 {
        self.valid_up_to
    }

    /// Coefficient of `x^{2k}`; `None` if `k` is beyond the validity bound.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        (k <= self.valid_up_to).then(|| self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// True when every exact coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest nonzero exact term, the witness for a failed residual check.
    pub fn first_nonzero(&self) -> Option<(i64, Rational)> {
        self.coeffs.iter().next().map(|(&k, c)| (k, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.terms().map(|(k, a)| (k, a * c)), self.valid_up_to)
    }

    /// Sum, exact up to the smaller validity bound.
    pub fn add(&self, other: &Self) -> Self {
        let valid = self.valid_up_to.min(other.valid_up_to);
        Self::new(
            self.terms().chain(other.terms()).map(|(k, a)| (k, a.clone())),
            valid,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Multiplication by `x^{2m}`.
    pub fn shift(&self, m: i64) -> Self {
        Self::new(
            self.terms().map(|(k, a)| (k + m, a.clone())),
            self.valid_up_to + m,
        )
    }

    /// Drops everything above `k`.
    pub fn truncate(&self, k: i64) -> Self {
        Self::new(self.terms().map(|(j, a)| (j, a.clone())), self.valid_up_to.min(k))
    }
}

fn falling(top: i64, i: usize) -> Rational {
    (0..i as i64).fold(Rational::one(), |acc, j| acc * int(top - j))
}

impl CanonicalOperator {
    /// Applies the operator termwise to an even Laurent series.
    ///
    /// Each coefficient must be a Laurent polynomial whose powers `p` satisfy
    /// `p ≡ i (mod 2)` for the derivative order `i`. A term `c x^p D^i` sends
    /// `x^{2k}` to `x^{2k + p - i}`, so the output is exact up to
    /// `valid_up_to - max (i - p)/2` over all terms.
    pub fn apply_to_series(&self, s: &EvenLaurentSeries) -> Result<EvenLaurentSeries> {
        let mut parts = Vec::new();
        let mut drop = i64::MIN;
        for (i, c) in self.terms() {
            let laurent = c
                .laurent_terms()
                .ok_or(Error::NonLaurentCoefficient { order: i })?;
            for (power, a) in laurent {
                if (power - i as i64).rem_euclid(2) != 0 {
                    return Err(Error::ParityViolation { order: i, power });
                }
                let shift = (power - i as i64) / 2;
                drop = drop.max(-shift);
                parts.push((i, shift, a));
            }
        }
        if parts.is_empty() {
            return Ok(EvenLaurentSeries::zero(s.valid_up_to()));
        }
        let mut out = EvenLaurentSeries::zero(s.valid_up_to() - drop);
        for (i, shift, a) in &parts {
            for (k, b) in s.terms() {
                let f = falling(2 * k, *i);
                if f.is_zero() {
                    continue;
                }
                out.accumulate(k + shift, a * b * f);
            }
        }
        Ok(out)
    }
}
