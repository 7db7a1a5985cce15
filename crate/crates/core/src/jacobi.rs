//! Jacobi-type polynomials `P_n^{α,β,0,N} = P_n^{α,β} + N R_n^{α,β}` and
//! their second-order and order-`2α+4` operators, for concrete rational `β`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, pochhammer, Poly, RatFn, Rational};
use crate::operator::{linear_pow, CanonicalOperator, OpWord};
use crate::special::jacobi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JacHigherRepr {
    /// `(x-1)(x+1)^{-β} D^{α+2} (x+1)^{α+β+2} D^{α+2} (x-1)^{α+1}`.
    Direct,
    /// `Π_j {L_2^{α,β} - 2(α+1)/(x-1) + j(α+β+1-j)}`.
    FactoredA,
    /// `(x-1) Π_j {L_2^{α+2,β} + (j+1)(α+β+2-j)} (x-1)^{-1}`.
    FactoredAConj,
    /// `Π_j {L_2^{2j-1,β} - 4j/(x-1) + j(j+β)}`.
    FactoredB,
    /// `(x-1) Π_j {L_2^{2j+1,β} + (j+1)(j+β+1)} (x-1)^{-1}`.
    FactoredBConj,
}

impl JacHigherRepr {
    pub const ALL: [JacHigherRepr; 5] = [
        JacHigherRepr::Direct,
        JacHigherRepr::FactoredA,
        JacHigherRepr::FactoredAConj,
        JacHigherRepr::FactoredB,
        JacHigherRepr::FactoredBConj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JacHigherRepr::Direct => "direct",
            JacHigherRepr::FactoredA => "factored-a",
            JacHigherRepr::FactoredAConj => "factored-a-conj",
            JacHigherRepr::FactoredB => "factored-b",
            JacHigherRepr::FactoredBConj => "factored-b-conj",
        }
    }
}

impl fmt::Display for JacHigherRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JacHigherRepr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        JacHigherRepr::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown representation {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacTypeParams {
    pub alpha: u32,
    pub beta: Rational,
    pub mass: Rational,
    pub n: u32,
}

impl JacTypeParams {
    pub fn new(alpha: u32, beta: Rational, mass: Rational, n: u32) -> Result<Self> {
        check_beta(&beta)?;
        if mass.is_negative() {
            return Err(Error::InvalidParameter(format!("mass {mass} must be nonnegative")));
        }
        Ok(JacTypeParams { alpha, beta, mass, n })
    }
}

fn check_beta(beta: &Rational) -> Result<()> {
    if *beta <= int(-1) {
        return Err(Error::InvalidParameter(format!("beta {beta} must exceed -1")));
    }
    Ok(())
}

fn ra(alpha: u32) -> Rational {
    int(i64::from(alpha))
}

/// `c / (x - 1)`.
fn over_x_minus_one(c: Rational) -> RatFn {
    RatFn::linear_power(&Rational::one(), -1).scale(&c)
}

fn ordered_product(factors: impl IntoIterator<Item = CanonicalOperator>) -> CanonicalOperator {
    factors
        .into_iter()
        .fold(CanonicalOperator::identity(), |acc, f| f.compose(&acc))
}

/// `r_n = (α+β+2)_n (α+2)_{n-1} / (2 n! (β+1)_{n-1})`, `n ≥ 1`.
pub fn r_coeff(n: u32, alpha: u32, beta: &Rational) -> Result<Rational> {
    check_beta(beta)?;
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    let a = ra(alpha);
    Ok(pochhammer(&(&a + beta + int(2)), n) * pochhammer(&(&a + int(2)), n - 1)
        / (int(2) * factorial(n) * pochhammer(&(beta + int(1)), n - 1)))
}

/// `R_n = r_n (x-1) P_{n-1}^{α+2,β}`, `R_0 = 0`.
pub fn r_poly(n: u32, alpha: u32, beta: &Rational) -> Result<Poly> {
    check_beta(beta)?;
    if n == 0 {
        return Ok(Poly::zero());
    }
    let p = jacobi(n - 1, &(ra(alpha) + int(2)), beta)?;
    Ok((&linear_pow(1, 1) * &p).scale(&r_coeff(n, alpha, beta)?))
}

/// `P_n^{α,β} + N R_n^{α,β}`.
pub fn jac_type_poly(n: u32, alpha: u32, beta: &Rational, mass: &Rational) -> Result<Poly> {
    Ok(&jacobi(n, &ra(alpha), beta)? + &r_poly(n, alpha, beta)?.scale(mass))
}

/// `(x²-1) D² + [α-β+(α+β+2)x] D`.
pub fn second_order(alpha: &Rational, beta: &Rational) -> CanonicalOperator {
    CanonicalOperator::from_polys([
        (2, Poly::from_ints(&[-1, 0, 1])),
        (1, Poly::new(vec![alpha - beta, alpha + beta + int(2)])),
    ])
}

/// The same operator as `(x-1)^{-α}(x+1)^{-β} D (x-1)^{α+1}(x+1)^{β+1} D`.
pub fn second_order_weighted(alpha: &Rational, beta: &Rational) -> Result<CanonicalOperator> {
    OpWord::new()
        .power(int(1), -alpha)
        .power(int(-1), -beta)
        .derive()
        .power(int(1), alpha + int(1))
        .power(int(-1), beta + int(1))
        .derive()
        .normalize()
}

/// The order `2α+4` Jacobi-type operator.
pub fn higher_order(alpha: u32, beta: &Rational, repr: JacHigherRepr) -> Result<CanonicalOperator> {
    check_beta(beta)?;
    let a = ra(alpha);
    let top = i64::from(alpha) + 1;
    let j_range = || (0..=top).map(int);
    let op = match repr {
        JacHigherRepr::Direct => OpWord::new()
            .poly(linear_pow(1, 1))
            .power(int(-1), -beta)
            .derive_n(alpha as usize + 2)
            .power(int(-1), &a + beta + int(2))
            .derive_n(alpha as usize + 2)
            .poly(linear_pow(1, alpha + 1))
            .normalize()?,
        JacHigherRepr::FactoredA => ordered_product(j_range().map(|j| {
            second_order(&a, beta)
                .add_function(&over_x_minus_one(int(-2) * (&a + int(1))))
                .add_scalar(&(&j * (&a + beta + int(1) - &j)))
        })),
        JacHigherRepr::FactoredAConj => {
            let a2 = &a + int(2);
            let inner = ordered_product(j_range().map(|j| {
                second_order(&a2, beta).add_scalar(&((&j + int(1)) * (&a + beta + int(2) - &j)))
            }));
            conjugate_by_x_minus_one(inner)?
        }
        JacHigherRepr::FactoredB => ordered_product(j_range().map(|j| {
            second_order(&(int(2) * &j - int(1)), beta)
                .add_function(&over_x_minus_one(int(-4) * &j))
                .add_scalar(&(&j * (&j + beta)))
        })),
        JacHigherRepr::FactoredBConj => {
            let inner = ordered_product(j_range().map(|j| {
                second_order(&(int(2) * &j + int(1)), beta)
                    .add_scalar(&((&j + int(1)) * (&j + beta + int(1))))
            }));
            conjugate_by_x_minus_one(inner)?
        }
    };
    Ok(op)
}

fn conjugate_by_x_minus_one(inner: CanonicalOperator) -> Result<CanonicalOperator> {
    OpWord::new()
        .poly(linear_pow(1, 1))
        .apply(inner)
        .power(int(1), int(-1))
        .normalize()
}

/// `(Λ_2, Λ_{2α+4}) = (n(n+α+β+1), (n)_{α+2} (n+β)_{α+2})`.
pub fn eigenvalues(n: u32, alpha: u32, beta: &Rational) -> (Rational, Rational) {
    let n_r = int(i64::from(n));
    let second = &n_r * (&n_r + ra(alpha) + beta + int(1));
    let higher = pochhammer(&n_r, alpha + 2) * pochhammer(&(&n_r + beta), alpha + 2);
    (second, higher)
}

/// `b_{α,β} = (α+2)! (β+1)_{α+1}`.
pub fn link_constant(alpha: u32, beta: &Rational) -> Rational {
    factorial(alpha + 2) * pochhammer(&(beta + int(1)), alpha + 1)
}

/// Residual of `{[L_2 - Λ_2] + N/b [L_{2α+4} - Λ_{2α+4}]} P_n^{α,β,0,N}`.
pub fn residual(params: &JacTypeParams) -> Result<RatFn> {
    let higher = higher_order(params.alpha, &params.beta, JacHigherRepr::Direct)?;
    residual_with(params, &higher)
}

pub fn residual_with(params: &JacTypeParams, higher: &CanonicalOperator) -> Result<RatFn> {
    let JacTypeParams { alpha, ref beta, ref mass, n } = *params;
    let (l2, lh) = eigenvalues(n, alpha, beta);
    let op = second_order(&ra(alpha), beta)
        .add_scalar(&-l2)
        .add(&higher.add_scalar(&-lh).scale(&(mass / link_constant(alpha, beta))));
    Ok(op.apply_to_poly(&jac_type_poly(n, alpha, beta, mass)?))
}

/// `[L_{2α+4} - Λ_{2α+4}] R_n`: the higher operator alone annihilates the
/// `N`-component shifted by its eigenvalue.
pub fn r_component_residual(n: u32, alpha: u32, beta: &Rational, higher: &CanonicalOperator) -> Result<RatFn> {
    let (_, lh) = eigenvalues(n, alpha, beta);
    Ok(higher.add_scalar(&-lh).apply_to_poly(&r_poly(n, alpha, beta)?))
}

/// Relative distance of `Λ_2/β` from `n` and of `Λ_{2α+4}/(β b_{α,β})`
/// from `(n)_{α+2}/(α+2)!`. Both are `O(1/β)` as `β` grows; `n ≥ 1`.
pub fn confluence_deviation(n: u32, alpha: u32, beta: &Rational) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    check_beta(beta)?;
    let n_r = int(i64::from(n));
    let (l2, lh) = eigenvalues(n, alpha, beta);
    let limit2 = n_r.clone();
    let limith = pochhammer(&n_r, alpha + 2) / factorial(alpha + 2);
    let dev2 = ((l2 / beta - &limit2) / &limit2).abs();
    let devh = ((lh / (beta * link_constant(alpha, beta)) - &limith) / &limith).abs();
    Ok((dev2, devh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn r_examples() {
        assert_eq!(r_poly(0, 2, &ratio(1, 2)).unwrap(), Poly::zero());
        assert_eq!(r_coeff(1, 0, &int(0)).unwrap(), int(1));
        assert_eq!(jac_type_poly(1, 0, &int(0), &int(1)).unwrap(), Poly::from_ints(&[-1, 2]));
        assert!(r_coeff(2, 0, &int(-1)).is_err());
        assert_eq!(r_coeff(0, 0, &int(0)), Err(Error::InvalidN(0)));
    }

    #[test]
    fn second_order_examples() {
        let op = second_order(&int(0), &int(0));
        assert_eq!(
            op,
            CanonicalOperator::from_polys([(2, Poly::from_ints(&[-1, 0, 1])), (1, Poly::from_ints(&[0, 2]))])
        );
        for (a, b) in [(int(1), ratio(1, 2)), (int(0), ratio(5, 3)), (int(-1), ratio(-1, 3))] {
            assert_eq!(second_order_weighted(&a, &b).unwrap(), second_order(&a, &b));
        }
        // P_2^{0,0} is an eigenfunction with Λ = 6
        let p2 = jacobi(2, &int(0), &int(0)).unwrap();
        assert_eq!(op.apply_to_poly(&p2), RatFn::from(p2.scale(&int(6))));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalues(0, 3, &ratio(2, 3)), (int(0), int(0)));
        assert_eq!(eigenvalues(2, 0, &int(0)), (int(6), int(36)));
        assert_eq!(eigenvalues(1, 0, &ratio(1, 2)), (ratio(5, 2), ratio(15, 2)));
    }

    #[test]
    fn representations_agree() {
        for alpha in 0..=2 {
            for beta in [int(0), ratio(1, 2), ratio(5, 3)] {
                let direct = higher_order(alpha, &beta, JacHigherRepr::Direct).unwrap();
                assert_eq!(direct.order(), Some(2 * alpha as usize + 4));
                assert!(direct.has_polynomial_coefficients());
                let lead = linear_pow(1, alpha + 2) * linear_pow(-1, alpha + 2);
                assert_eq!(direct.coeff(2 * alpha as usize + 4), RatFn::from(lead));
                for repr in JacHigherRepr::ALL {
                    let op = higher_order(alpha, &beta, repr).unwrap();
                    assert!(op.first_difference(&direct).is_none(), "α={alpha} β={beta} {repr}: {:?}", op.first_difference(&direct));
                }
            }
        }
    }

    #[test]
    fn residual_examples() {
        for (n, a, b, m) in [(4, 1, ratio(1, 2), int(0)), (2, 0, int(0), int(1)), (3, 1, ratio(1, 2), ratio(2, 5))] {
            let params = JacTypeParams::new(a, b, m, n).unwrap();
            assert!(residual(&params).unwrap().is_zero());
        }
        let h = higher_order(0, &ratio(1, 2), JacHigherRepr::Direct).unwrap();
        assert!(r_component_residual(2, 0, &ratio(1, 2), &h).unwrap().is_zero());
    }

    #[test]
    fn confluence_decay() {
        for alpha in 0..3 {
            for n in 1..4 {
                let (a2, ah) = confluence_deviation(n, alpha, &int(1_000)).unwrap();
                let (b2, bh) = confluence_deviation(n, alpha, &int(1_000_000)).unwrap();
                // a thousandfold larger beta shrinks both deviations about a thousandfold
                for (small, large) in [(&b2, &a2), (&bh, &ah)] {
                    let ratio_ = large / small;
                    assert!(ratio_ > int(900) && ratio_ < int(1100), "α={alpha} n={n}: {ratio_}");
                }
            }
        }
    }
}
