//! Classical Laguerre and Jacobi polynomials and truncated Bessel series,
//! all built from their hypergeometric sums.
//!
//! The `*_residuals` helpers restate the classical differentiation formulas
//! as pure polynomial (or series) identities; each returned value is
//! left-hand side minus right-hand side and must vanish.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, pochhammer, pow, ratio, Poly, RatFn, Rational};
use crate::operator::{CanonicalOperator, EvenLaurentSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreParams {
    pub n: u32,
    pub gamma: Rational,
}

impl LaguerreParams {
    pub fn new(n: u32, gamma: Rational) -> Result<Self> {
        if gamma <= int(-1) {
            return Err(Error::InvalidParameter(format!("laguerre gamma {gamma} must exceed -1")));
        }
        Ok(LaguerreParams { n, gamma })
    }

    pub fn poly(&self) -> Poly {
        laguerre_unchecked(self.n, &self.gamma)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiParams {
    pub n: u32,
    pub alpha: Rational,
    pub beta: Rational,
}

impl JacobiParams {
    pub fn new(n: u32, alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha <= int(-1) || beta <= int(-1) {
            return Err(Error::InvalidParameter(format!(
                "jacobi parameters ({alpha}, {beta}) must exceed -1"
            )));
        }
        Ok(JacobiParams { n, alpha, beta })
    }

    pub fn poly(&self) -> Poly {
        jacobi_unchecked(self.n, &self.alpha, &self.beta)
    }
}

/// `L_n^γ(x) = (γ+1)_n/n! · 1F1(-n; γ+1; x)`.
pub fn laguerre(n: u32, gamma: &Rational) -> Result<Poly> {
    LaguerreParams::new(n, gamma.clone()).map(|p| p.poly())
}

fn laguerre_unchecked(n: u32, gamma: &Rational) -> Poly {
    let g1 = gamma + Rational::one();
    let scale = pochhammer(&g1, n) / factorial(n);
    let coeffs = (0..=n)
        .map(|k| {
            &scale * pochhammer(&int(-i64::from(n)), k) / (pochhammer(&g1, k) * factorial(k))
        })
        .collect();
    Poly::new(coeffs)
}

/// `L_n^γ`, or zero for negative `n`.
pub fn laguerre_or_zero(n: i64, gamma: &Rational) -> Result<Poly> {
    if n < 0 {
        LaguerreParams::new(0, gamma.clone())?;
        return Ok(Poly::zero());
    }
    laguerre(n as u32, gamma)
}

/// `P_n^{α,β}(x) = (α+1)_n/n! · 2F1(-n, n+α+β+1; α+1; (1-x)/2)`.
pub fn jacobi(n: u32, alpha: &Rational, beta: &Rational) -> Result<Poly> {
    JacobiParams::new(n, alpha.clone(), beta.clone()).map(|p| p.poly())
}

fn jacobi_unchecked(n: u32, alpha: &Rational, beta: &Rational) -> Poly {
    let a1 = alpha + Rational::one();
    let b = int(i64::from(n)) + alpha + beta + Rational::one();
    let half_one_minus_x = Poly::new(vec![ratio(1, 2), ratio(-1, 2)]);
    let scale = pochhammer(&a1, n) / factorial(n);
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    for k in 0..=n {
        let c = &scale * pochhammer(&int(-i64::from(n)), k) * pochhammer(&b, k)
            / (pochhammer(&a1, k) * factorial(k));
        acc = &acc + &power.scale(&c);
        power = &power * &half_one_minus_x;
    }
    acc
}

/// Truncated `0F1(-; α+1; -λ²x²/4) = Σ_k (-λ²/4)^k / ((α+1)_k k!) x^{2k}`,
/// exact for `0 ≤ k ≤ terms`.
pub fn bessel_series(alpha: u32, lambda2: &Rational, terms: i64) -> EvenLaurentSeries {
    let a1 = int(i64::from(alpha) + 1);
    let q = -lambda2 / int(4);
    let coeffs = (0..=terms.max(-1)).map(|k| {
        let k32 = k as u32;
        (k, pow(&q, k) / (pochhammer(&a1, k32) * factorial(k32)))
    });
    EvenLaurentSeries::new(coeffs, terms)
}

/// The two weighted derivative formulas, as polynomial identities:
/// `(e^{-x} L_n^γ)' = -e^{-x} L_n^{γ+1}` becomes `L_n^γ' - L_n^γ + L_n^{γ+1}`, and
/// `(x^γ L_n^γ)' = (n+γ) x^{γ-1} L_n^{γ-1}` becomes
/// `γ L_n^γ + x L_n^γ' - (n+γ) L_n^{γ-1}` (only for `γ > 0`).
pub fn weighted_derivative_residuals(n: u32, gamma: &Rational) -> Result<Vec<Poly>> {
    let l = laguerre(n, gamma)?;
    let up = laguerre(n, &(gamma + Rational::one()))?;
    let dl = l.derive(1);
    let mut out = vec![&(&dl - &l) + &up];
    if *gamma > Rational::zero() {
        let down = laguerre(n, &(gamma - Rational::one()))?;
        let lhs = &l.scale(gamma) + &(&Poly::x() * &dl);
        let rhs = down.scale(&(int(i64::from(n)) + gamma));
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

/// The three classical relations
/// `L_n^γ' = -L_{n-1}^{γ+1}`, `L_n^γ = L_n^{γ+1} - L_{n-1}^{γ+1}` and
/// `x L_n^γ = (n+γ) L_n^{γ-1} - (n+1) L_{n+1}^{γ-1}` (the last for `γ > 0`).
pub fn laguerre_relation_residuals(n: u32, gamma: &Rational) -> Result<Vec<Poly>> {
    let n64 = i64::from(n);
    let g1 = gamma + Rational::one();
    let l = laguerre(n, gamma)?;
    let prev_up = laguerre_or_zero(n64 - 1, &g1)?;
    let mut out = vec![
        &l.derive(1) + &prev_up,
        &l - &(&laguerre(n, &g1)? - &prev_up),
    ];
    if *gamma > Rational::zero() {
        let gm = gamma - Rational::one();
        let rhs = &laguerre(n, &gm)?.scale(&(int(n64) + gamma))
            - &laguerre(n + 1, &gm)?.scale(&int(n64 + 1));
        out.push(&(&Poly::x() * &l) - &rhs);
    }
    Ok(out)
}

/// `D² + (2γ+1)/x D`.
pub fn bessel_operator(gamma: &Rational) -> CanonicalOperator {
    CanonicalOperator::from_terms([
        (2, RatFn::one()),
        (1, RatFn::monomial(int(2) * gamma + Rational::one(), -1)),
    ])
}

/// Residual of `[D² + (2α+1)/x D + λ²] J_λ^α` on the truncated series.
pub fn bessel_equation_residual(alpha: u32, lambda2: &Rational, terms: i64) -> Result<EvenLaurentSeries> {
    let op = bessel_operator(&int(i64::from(alpha))).add_scalar(lambda2);
    op.apply_to_series(&bessel_series(alpha, lambda2, terms))
}

/// The Bessel differentiation formulas with `δ = x^{-1} D`:
/// `δ J^γ + λ²/(2(γ+1)) J^{γ+1}` and, for `γ > 0`,
/// `δ[x^{2γ} J^γ] - 2γ x^{2γ-2} J^{γ-1}`.
pub fn bessel_derivative_residuals(
    gamma: u32,
    lambda2: &Rational,
    terms: i64,
) -> Result<Vec<EvenLaurentSeries>> {
    let delta = CanonicalOperator::from_terms([(1, RatFn::monomial(Rational::one(), -1))]);
    let j = bessel_series(gamma, lambda2, terms);
    let g = int(i64::from(gamma));
    let mut out = Vec::new();
    let up = bessel_series(gamma + 1, lambda2, terms).scale(&(lambda2 / (int(2) * (&g + Rational::one()))));
    out.push(delta.apply_to_series(&j)?.add(&up));
    if gamma > 0 {
        let weighted = delta.compose(&CanonicalOperator::multiplication(RatFn::monomial(
            Rational::one(),
            2 * i64::from(gamma),
        )));
        let lhs = weighted.apply_to_series(&j)?;
        let rhs = bessel_series(gamma - 1, lambda2, terms)
            .shift(i64::from(gamma) - 1)
            .scale(&(int(2) * &g));
        out.push(lhs.sub(&rhs));
    }
    Ok(out)
}
