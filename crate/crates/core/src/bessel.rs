//! Bessel-type functions `J_λ^{α,M} = J_λ^α + M K_λ^α` as truncated even
//! series, and their operators of order 2 and `2α+4`.
//!
//! The eigenparameter only ever enters squared, so everything is expressed
//! in `λ²` and stays rational.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, pow, RatFn, Rational};
use crate::operator::{x_pow, CanonicalOperator, EvenLaurentSeries, OpWord};
use crate::special::{bessel_operator, bessel_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BesselHigherRepr {
    /// `(-1)^{α+1} x² (x^{-1}D)^{2α+4} x^{2α+2}`.
    NestedDelta,
    /// `(-1)^{α+1} [D² + (2α+1)/x D - (4α+4)/x²]^{α+2}`.
    LaurentPower,
    /// `(-1)^{α+1} Σ_i A_i^α x^{i-2α-4} D^i`.
    Explicit,
}

impl BesselHigherRepr {
    pub const ALL: [BesselHigherRepr; 3] = [
        BesselHigherRepr::NestedDelta,
        BesselHigherRepr::LaurentPower,
        BesselHigherRepr::Explicit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BesselHigherRepr::NestedDelta => "nested-delta",
            BesselHigherRepr::LaurentPower => "laurent-power",
            BesselHigherRepr::Explicit => "explicit",
        }
    }
}

impl fmt::Display for BesselHigherRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BesselHigherRepr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BesselHigherRepr::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown representation {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BesselParams {
    pub alpha: u32,
    pub mass: Rational,
    pub lambda2: Rational,
    /// Number of exact even coefficients of the input series.
    pub truncation: i64,
}

impl BesselParams {
    pub fn new(alpha: u32, mass: Rational, lambda2: Rational, truncation: i64) -> Result<Self> {
        if mass.is_negative() {
            return Err(Error::InvalidParameter(format!("mass {mass} must be nonnegative")));
        }
        if lambda2.is_negative() {
            return Err(Error::InvalidParameter(format!("lambda2 {lambda2} must be nonnegative")));
        }
        check_truncation(alpha, truncation)?;
        Ok(BesselParams { alpha, mass, lambda2, truncation })
    }

    /// Exponent of the last exact residual term, `2K - 2α - 4`.
    pub fn residual_valid_power(&self) -> i64 {
        2 * (self.truncation - i64::from(self.alpha) - 2)
    }
}

/// Smallest truncation leaving a nonempty validity window after the
/// order `2α+4` operator.
pub fn min_truncation(alpha: u32) -> i64 {
    2 * i64::from(alpha) + 5
}

fn check_truncation(alpha: u32, k: i64) -> Result<()> {
    let min = min_truncation(alpha);
    if k < min {
        return Err(Error::TruncationTooSmall { k, min });
    }
    Ok(())
}

fn sign(alpha: u32) -> Rational {
    if alpha % 2 == 0 {
        int(-1)
    } else {
        int(1)
    }
}

/// `k_λ^α = (λ²/4)^{α+2} / ((α+1)(α+2)!)`.
pub fn k_coeff(alpha: u32, lambda2: &Rational) -> Rational {
    pow(&(lambda2 / int(4)), i64::from(alpha) + 2) / (int(i64::from(alpha) + 1) * factorial(alpha + 2))
}

/// `K_λ^α = -k_λ^α x² J_λ^{α+2}`, exact through `x^{2K}`.
pub fn k_series(alpha: u32, lambda2: &Rational, k: i64) -> EvenLaurentSeries {
    bessel_series(alpha + 2, lambda2, k - 1)
        .shift(1)
        .scale(&-k_coeff(alpha, lambda2))
}

/// `J_λ^α + M K_λ^α`, exact through `x^{2K}`.
pub fn bessel_type_series(alpha: u32, mass: &Rational, lambda2: &Rational, k: i64) -> EvenLaurentSeries {
    bessel_series(alpha, lambda2, k).add(&k_series(alpha, lambda2, k).scale(mass))
}

/// `A_i^α = (α+1)!/(i-1)! Σ_{j=max(i,α+3)}^{2α+4} (-1)^{i+j} C(2α+4, j)
/// (2j-i-1)! 2^{i-2j+2α+4} / ((j-α-3)! (j-i)!)`, `1 ≤ i ≤ 2α+4`.
pub fn a_coeff(i: u32, alpha: u32) -> Result<Rational> {
    let top = 2 * alpha + 4;
    if i == 0 || i > top {
        return Err(Error::IndexOutOfRange { index: i as usize, max: top as usize });
    }
    let sum = (i.max(alpha + 3)..=top).fold(Rational::zero(), |acc, j| {
        let sgn = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
        let two = pow(&int(2), i64::from(i) - 2 * i64::from(j) + i64::from(top));
        acc + sgn * binomial(top, j) * factorial(2 * j - i - 1) * two
            / (factorial(j - alpha - 3) * factorial(j - i))
    });
    Ok(factorial(alpha + 1) / factorial(i - 1) * sum)
}

/// `D² + (2α+1)/x D`.
pub fn second_order(alpha: u32) -> CanonicalOperator {
    bessel_operator(&int(i64::from(alpha)))
}

/// The same operator as `x^{-2α-1} D x^{2α+1} D`.
pub fn second_order_weighted(alpha: u32) -> Result<CanonicalOperator> {
    let e = 2 * i64::from(alpha) + 1;
    OpWord::new().x_power(int(-e)).derive().x_power(int(e)).derive().normalize()
}

/// `D² + (2α+1)/x D - (4α+4)/x²`.
pub fn shifted_second_order(alpha: u32) -> CanonicalOperator {
    second_order(alpha).add_function(&RatFn::monomial(int(-4 * (i64::from(alpha) + 1)), -2))
}

/// The order `2α+4` Bessel-type operator.
pub fn higher_order(alpha: u32, repr: BesselHigherRepr) -> Result<CanonicalOperator> {
    let s = sign(alpha);
    let top = 2 * alpha + 4;
    let op = match repr {
        BesselHigherRepr::NestedDelta => {
            let mut word = OpWord::new().poly(x_pow(2).scale(&s));
            for _ in 0..top {
                word = word.x_power(int(-1)).derive();
            }
            word.poly(x_pow(2 * alpha as usize + 2)).normalize()?
        }
        BesselHigherRepr::LaurentPower => shifted_second_order(alpha).pow(alpha + 2).scale(&s),
        BesselHigherRepr::Explicit => {
            let mut terms = Vec::with_capacity(top as usize);
            for i in 1..=top {
                let c = a_coeff(i, alpha)? * &s;
                terms.push((i as usize, RatFn::monomial(c, i64::from(i) - i64::from(top))));
            }
            CanonicalOperator::from_terms(terms)
        }
    };
    Ok(op)
}

/// Both sides of `δ^{2β}[x^{2β} ·] = [D² + (2β+1)/x D]^β` with `δ = x^{-1}D`.
pub fn delta_power_sides(beta: u32) -> Result<(CanonicalOperator, CanonicalOperator)> {
    let mut word = OpWord::new();
    for _ in 0..2 * beta {
        word = word.x_power(int(-1)).derive();
    }
    let lhs = word.poly(x_pow(2 * beta as usize)).normalize()?;
    Ok((lhs, second_order(beta).pow(beta)))
}

/// Both sides of `x² [D² + (2α+5)/x D] x^{-2} = D² + (2α+1)/x D - (4α+4)/x²`.
pub fn shift_identity_sides(alpha: u32) -> Result<(CanonicalOperator, CanonicalOperator)> {
    let lhs = OpWord::new()
        .poly(x_pow(2))
        .apply(second_order(alpha + 2))
        .x_power(int(-2))
        .normalize()?;
    Ok((lhs, shifted_second_order(alpha)))
}

/// True when both operator identities hold at parameter `beta`.
pub fn delta_power_identity(beta: u32) -> Result<bool> {
    let (l1, r1) = delta_power_sides(beta)?;
    let (l2, r2) = shift_identity_sides(beta)?;
    Ok(l1 == r1 && l2 == r2)
}

/// Every coefficient is a Laurent polynomial whose powers of `x` share the
/// parity of the derivative order, so even series map to even series.
pub fn preserves_parity(op: &CanonicalOperator) -> bool {
    op.terms().all(|(i, c)| {
        c.laurent_terms()
            .is_some_and(|ts| ts.iter().all(|(p, _)| (p - i as i64).rem_euclid(2) == 0))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BesselResidualKind {
    /// `{[L̃_2 + λ²] + M/(2^{2α+2}(α+2)!) [L̃_{2α+4} + λ^{2α+4}]} J_λ^{α,M}`.
    Full,
    /// `[L̃_{2α+4} + λ^{2α+4}] K_λ^α`.
    KComponent,
}

impl BesselResidualKind {
    pub const ALL: [BesselResidualKind; 2] = [BesselResidualKind::Full, BesselResidualKind::KComponent];

    pub fn name(self) -> &'static str {
        match self {
            BesselResidualKind::Full => "full",
            BesselResidualKind::KComponent => "k-component",
        }
    }
}

/// `M / (2^{2α+2} (α+2)!)`.
pub fn mass_factor(alpha: u32, mass: &Rational) -> Rational {
    mass / (pow(&int(2), 2 * i64::from(alpha) + 2) * factorial(alpha + 2))
}

/// The full Bessel-type operator with a caller-supplied higher-order part.
pub fn combined_with(higher: &CanonicalOperator, alpha: u32, mass: &Rational, lambda2: &Rational) -> CanonicalOperator {
    let top = pow(lambda2, i64::from(alpha) + 2);
    second_order(alpha)
        .add_scalar(lambda2)
        .add(&higher.add_scalar(&top).scale(&mass_factor(alpha, mass)))
}

pub fn residual(kind: BesselResidualKind, params: &BesselParams) -> Result<EvenLaurentSeries> {
    let higher = higher_order(params.alpha, BesselHigherRepr::Explicit)?;
    residual_with(kind, params, &higher)
}

/// Residual series, exact through `x^{2K-2α-4}` including negative powers.
pub fn residual_with(
    kind: BesselResidualKind,
    params: &BesselParams,
    higher: &CanonicalOperator,
) -> Result<EvenLaurentSeries> {
    let BesselParams { alpha, ref mass, ref lambda2, truncation } = *params;
    check_truncation(alpha, truncation)?;
    match kind {
        BesselResidualKind::Full => combined_with(higher, alpha, mass, lambda2)
            .apply_to_series(&bessel_type_series(alpha, mass, lambda2, truncation)),
        BesselResidualKind::KComponent => higher
            .add_scalar(&pow(lambda2, i64::from(alpha) + 2))
            .apply_to_series(&k_series(alpha, lambda2, truncation)),
    }
}

/// `(i, A_i^α)` for `1 ≤ i ≤ 2α+4`.
pub fn a_table(alpha: u32) -> Result<Vec<(usize, Rational)>> {
    (1..=2 * alpha + 4).map(|i| Ok((i as usize, a_coeff(i, alpha)?))).collect()
}
