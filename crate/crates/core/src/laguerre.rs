//! Laguerre-type polynomials `L_n^{α,N} = L_n^α + N T_n^α` and the order
//! `2α+4` Laguerre-type operator in all of its known forms.
//!
//! Every form is reduced to a [`CanonicalOperator`]; the forms agree exactly
//! when the construction is right, which is what the equivalence checks test.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, pochhammer, Poly, RatFn, Rational};
use crate::operator::{x_pow, CanonicalOperator, OpWord};
use crate::special::{laguerre, laguerre_or_zero};

/// The representations of the higher-order operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HigherRepr {
    /// Explicit coefficients `d_i^α(x)`.
    Koekoek,
    /// Lagrange symmetric form `e^x x^{-α} Σ (-1)^{k+1} D^k [b_k D^k]`.
    Symmetric,
    /// `(-1)^{α+1} e^x x D^{α+2} e^{-x} D^{α+2} x^{α+1}`.
    Elementary,
    /// `(-1)^{α+1} Π_j {L_2^α - (α+1)/x - j}`.
    FactoredA,
    /// `(-1)^{α+1} x Π_j {L_2^{α+2} - j - 1} x^{-1}`.
    FactoredAConj,
    /// `(-1)^{α+1} Π_j {L_2^{2j-1} - 2j/x - j}`.
    FactoredB,
    /// `(-1)^{α+1} x Π_j {L_2^{2j+1} - j - 1} x^{-1}`.
    FactoredBConj,
    /// `(-1)^{α+1} L_2^{-1} Π_{j≥1} {L_2^{α+1} - j}`.
    Duran,
    /// `(-1)^{α+1} x [L_2^{2α+3} - α - 2][D² - D] Π_{j≥1} [L_2^α - j]`.
    Bavinck,
    /// Built up from `L_2^{-1}` by the recurrence in `α`.
    Recurrence,
}

impl HigherRepr {
    pub const ALL: [HigherRepr; 10] = [
        HigherRepr::Koekoek,
        HigherRepr::Symmetric,
        HigherRepr::Elementary,
        HigherRepr::FactoredA,
        HigherRepr::FactoredAConj,
        HigherRepr::FactoredB,
        HigherRepr::FactoredBConj,
        HigherRepr::Duran,
        HigherRepr::Bavinck,
        HigherRepr::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HigherRepr::Koekoek => "koekoek",
            HigherRepr::Symmetric => "symmetric",
            HigherRepr::Elementary => "elementary",
            HigherRepr::FactoredA => "factored-a",
            HigherRepr::FactoredAConj => "factored-a-conj",
            HigherRepr::FactoredB => "factored-b",
            HigherRepr::FactoredBConj => "factored-b-conj",
            HigherRepr::Duran => "duran",
            HigherRepr::Bavinck => "bavinck",
            HigherRepr::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for HigherRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HigherRepr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HigherRepr::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown representation {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagTypeParams {
    pub alpha: u32,
    pub mass: Rational,
    pub n: u32,
}

impl LagTypeParams {
    pub fn new(alpha: u32, mass: Rational, n: u32) -> Result<Self> {
        if mass < Rational::zero() {
            return Err(Error::InvalidParameter(format!("mass {mass} must be nonnegative")));
        }
        Ok(LagTypeParams { alpha, mass, n })
    }
}

fn a64(alpha: u32) -> i64 {
    i64::from(alpha)
}

fn sign(alpha: u32) -> Rational {
    if alpha % 2 == 0 {
        int(-1)
    } else {
        int(1)
    }
}

/// `c / x`.
fn over_x(c: i64) -> RatFn {
    RatFn::monomial(int(c), -1)
}

/// Applies `factors[0]` first, then `factors[1]`, and so on.
fn ordered_product(factors: impl IntoIterator<Item = CanonicalOperator>) -> CanonicalOperator {
    factors
        .into_iter()
        .fold(CanonicalOperator::identity(), |acc, f| f.compose(&acc))
}

/// `t_n^α = (α+2)_{n-1} / n!`, defined for `n ≥ 1`.
pub fn t_coeff(n: u32, alpha: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    Ok(pochhammer(&int(a64(alpha) + 2), n - 1) / factorial(n))
}

/// `T_n^α(x) = -t_n^α x L_{n-1}^{α+2}(x)`, `T_0 = 0`.
pub fn t_poly(n: u32, alpha: u32) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let t = t_coeff(n, alpha).expect("n >= 1");
    let l = laguerre(n - 1, &int(a64(alpha) + 2)).expect("alpha + 2 > -1");
    (&Poly::x() * &l).scale(&-t)
}

/// `L_n^{α,N} = L_n^α + N T_n^α`.
pub fn lag_type_poly(n: u32, alpha: u32, mass: &Rational) -> Poly {
    let l = laguerre(n, &int(a64(alpha))).expect("alpha >= 0");
    &l + &t_poly(n, alpha).scale(mass)
}

/// Classical Laguerre operator `L_2^γ = x D² + (γ+1-x) D`.
pub fn second_order(gamma: i64) -> CanonicalOperator {
    CanonicalOperator::from_polys([
        (2, Poly::x()),
        (1, Poly::from_ints(&[gamma + 1, -1])),
    ])
}

/// `L_2^γ` built as `e^x x^{-γ} D e^{-x} x^{γ+1} D`.
pub fn second_order_weighted(gamma: i64) -> Result<CanonicalOperator> {
    OpWord::new()
        .exp(int(1))
        .x_power(int(-gamma))
        .derive()
        .exp(int(-1))
        .x_power(int(gamma + 1))
        .derive()
        .normalize()
}

/// `d_i^α(x)` for `i = 1..=2α+4`, as `(i, d_i)` pairs.
pub fn koekoek_coefficients(alpha: u32) -> Vec<(usize, Poly)> {
    let a = a64(alpha);
    (1..=2 * a + 4)
        .map(|i| {
            let mut coeffs = vec![Rational::zero(); (a + 3) as usize];
            for j in (i - a - 2).max(1)..=i.min(a + 2) {
                let s = if (i + j + 1) % 2 == 0 { int(1) } else { int(-1) };
                coeffs[j as usize] = s
                    * binomial((a + 1) as u32, (j - 1) as u32)
                    * binomial((a + 2) as u32, (i - j) as u32)
                    * pochhammer(&int(i + 1), (a + 2 - j) as u32);
            }
            (i as usize, Poly::new(coeffs))
        })
        .collect()
}

/// Polynomial parts `p_k` of `b_k^α = e^{-x} p_k(x)`, `k = 1..=α+2`.
pub fn symmetric_weights(alpha: u32) -> Vec<(usize, Poly)> {
    let a = a64(alpha);
    let front = factorial(alpha + 1) * factorial(alpha + 2);
    (1..=a + 2)
        .map(|k| {
            let c = &front / (factorial((k - 1) as u32) * factorial(k as u32));
            let mut coeffs = vec![Rational::zero(); (k + a + 1) as usize];
            for j in (2 * k - 2)..=(k + a) {
                coeffs[j as usize] = &c / factorial((j - 2 * k + 2) as u32);
            }
            (k as usize, Poly::new(coeffs))
        })
        .collect()
}

/// `Σ d_i D^i` from a coefficient table.
pub fn from_coefficient_table(table: &[(usize, Poly)]) -> CanonicalOperator {
    CanonicalOperator::from_polys(table.iter().cloned())
}

/// The order `2α+4` operator in the requested representation.
pub fn higher_order(alpha: u32, repr: HigherRepr) -> Result<CanonicalOperator> {
    let a = a64(alpha);
    let s = sign(alpha);
    let op = match repr {
        HigherRepr::Koekoek => from_coefficient_table(&koekoek_coefficients(alpha)),
        HigherRepr::Symmetric => {
            let mut total = CanonicalOperator::zero();
            for (k, p) in symmetric_weights(alpha) {
                let sk = if k % 2 == 1 { int(1) } else { int(-1) };
                let term = OpWord::new()
                    .exp(int(1))
                    .x_power(int(-a))
                    .scalar(sk)
                    .derive_n(k)
                    .exp(int(-1))
                    .poly(p)
                    .derive_n(k)
                    .normalize()?;
                total = total.add(&term);
            }
            total
        }
        HigherRepr::Elementary => OpWord::new()
            .poly(Poly::x().scale(&s))
            .exp(int(1))
            .derive_n((a + 2) as usize)
            .exp(int(-1))
            .derive_n((a + 2) as usize)
            .poly(x_pow((a + 1) as usize))
            .normalize()?,
        HigherRepr::FactoredA => ordered_product((0..=a + 1).map(|j| {
            second_order(a)
                .add_function(&over_x(-(a + 1)))
                .add_scalar(&int(-j))
        }))
        .scale(&s),
        HigherRepr::FactoredAConj => {
            let inner = ordered_product((0..=a + 1).map(|j| second_order(a + 2).add_scalar(&int(-j - 1))));
            conjugate_by_x(inner, &s)?
        }
        HigherRepr::FactoredB => ordered_product((0..=a + 1).map(|j| {
            second_order(2 * j - 1)
                .add_function(&over_x(-2 * j))
                .add_scalar(&int(-j))
        }))
        .scale(&s),
        HigherRepr::FactoredBConj => {
            let inner =
                ordered_product((0..=a + 1).map(|j| second_order(2 * j + 1).add_scalar(&int(-j - 1))));
            conjugate_by_x(inner, &s)?
        }
        HigherRepr::Duran => {
            let inner = ordered_product((1..=a + 1).map(|j| second_order(a + 1).add_scalar(&int(-j))));
            second_order(-1).compose(&inner).scale(&s)
        }
        HigherRepr::Bavinck => {
            let inner = ordered_product((1..=a).map(|j| second_order(a).add_scalar(&int(-j))));
            let d2_minus_d = CanonicalOperator::from_polys([(2, Poly::one()), (1, Poly::from_ints(&[-1]))]);
            let outer = second_order(2 * a + 3).add_scalar(&int(-a - 2));
            let x = CanonicalOperator::multiplication(RatFn::from(Poly::x().scale(&s)));
            x.compose(&outer.compose(&d2_minus_d.compose(&inner)))
        }
        HigherRepr::Recurrence => {
            let mut op = second_order(-1);
            for step in 0..=a {
                let factor = second_order(2 * step + 1)
                    .add_function(&over_x(-(2 * step + 2)))
                    .add_scalar(&int(-step - 1));
                op = factor.compose(&op).neg();
            }
            op
        }
    };
    Ok(op)
}

/// `s · x ∘ inner ∘ x^{-1}` as an operator word.
fn conjugate_by_x(inner: CanonicalOperator, s: &Rational) -> Result<CanonicalOperator> {
    OpWord::new()
        .poly(Poly::x().scale(s))
        .apply(inner)
        .x_power(int(-1))
        .normalize()
}

/// `L_2^α + N/(α+2)! · L_{2α+4}^α`.
pub fn combined(alpha: u32, mass: &Rational) -> CanonicalOperator {
    let higher = higher_order(alpha, HigherRepr::Koekoek).expect("explicit coefficients");
    combined_with(&higher, alpha, mass)
}

/// Same as [`combined`] with a caller-supplied higher-order operator.
pub fn combined_with(higher: &CanonicalOperator, alpha: u32, mass: &Rational) -> CanonicalOperator {
    second_order(a64(alpha)).add(&higher.scale(&(mass / factorial(alpha + 2))))
}

/// `Λ_n = n + N/(α+2)! · (n)_{α+2}`.
pub fn eigenvalue_combined(n: u32, alpha: u32, mass: &Rational) -> Rational {
    let n_r = int(i64::from(n));
    &n_r + mass / factorial(alpha + 2) * pochhammer(&n_r, alpha + 2)
}

/// Eigen-identities checked through [`residual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidualKind {
    /// `{[L_2^α + n] + N/(α+2)! [L_{2α+4}^α + (n)_{α+2}]} L_n^{α,N}`.
    Combined,
    /// `[L_{2α+4}^α + (n)_{α+2}] T_n^α`.
    TComponent,
    /// `(α+2)! [L_2^α + n] T_n^α + [L_{2α+4}^α + (n)_{α+2}] L_n^α`.
    Split,
    /// `(α+2)! [L_2^α + n] T_n^α + (n+1)_α (α+1)(α+2) L_{n-1}^{α+2}`.
    TSecondOrder,
    /// `[L_{2α+4}^α + (n)_{α+2}] L_n^α - (n+1)_α (α+1)(α+2) L_{n-1}^{α+2}`.
    LHigherOrder,
}

impl ResidualKind {
    pub const ALL: [ResidualKind; 5] = [
        ResidualKind::Combined,
        ResidualKind::TComponent,
        ResidualKind::Split,
        ResidualKind::TSecondOrder,
        ResidualKind::LHigherOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ResidualKind::Combined => "combined",
            ResidualKind::TComponent => "t-component",
            ResidualKind::Split => "split",
            ResidualKind::TSecondOrder => "t-second-order",
            ResidualKind::LHigherOrder => "l-higher-order",
        }
    }
}

/// Left-hand side minus right-hand side of the identity `kind`.
pub fn residual(kind: ResidualKind, params: &LagTypeParams) -> Result<RatFn> {
    let higher = higher_order(params.alpha, HigherRepr::Koekoek)?;
    residual_with(kind, params, &higher)
}

/// [`residual`] with a caller-supplied higher-order operator.
pub fn residual_with(
    kind: ResidualKind,
    params: &LagTypeParams,
    higher: &CanonicalOperator,
) -> Result<RatFn> {
    let LagTypeParams { alpha, ref mass, n } = *params;
    let a = a64(alpha);
    let n_r = int(i64::from(n));
    let poch = pochhammer(&n_r, alpha + 2);
    let shifted_higher = || higher.add_scalar(&poch);
    let scaled_second = || second_order(a).add_scalar(&n_r).scale(&factorial(alpha + 2));
    let tail = || -> Result<Poly> {
        let c = pochhammer(&(&n_r + int(1)), alpha) * int((a + 1) * (a + 2));
        Ok(laguerre_or_zero(i64::from(n) - 1, &int(a + 2))?.scale(&c))
    };
    let classical = || laguerre(n, &int(a));
    let value = match kind {
        ResidualKind::Combined => combined_with(higher, alpha, mass)
            .add_scalar(&eigenvalue_combined(n, alpha, mass))
            .apply_to_poly(&lag_type_poly(n, alpha, mass)),
        ResidualKind::TComponent => shifted_higher().apply_to_poly(&t_poly(n, alpha)),
        ResidualKind::Split => {
            &scaled_second().apply_to_poly(&t_poly(n, alpha)) + &shifted_higher().apply_to_poly(&classical()?)
        }
        ResidualKind::TSecondOrder if n == 0 => RatFn::zero(),
        ResidualKind::TSecondOrder => {
            &scaled_second().apply_to_poly(&t_poly(n, alpha)) + &RatFn::from(tail()?)
        }
        ResidualKind::LHigherOrder if n == 0 => RatFn::zero(),
        ResidualKind::LHigherOrder => {
            &shifted_higher().apply_to_poly(&classical()?) - &RatFn::from(tail()?)
        }
    };
    Ok(value)
}

/// `L_2^γ L_n^γ + n L_n^γ`, zero by the classical Laguerre equation.
pub fn classical_equation_residual(n: u32, gamma: i64) -> Result<RatFn> {
    let l = laguerre(n, &int(gamma))?;
    Ok(second_order(gamma).add_scalar(&int(i64::from(n))).apply_to_poly(&l))
}

/// Both sides of `Π_{j=1}^{α+1} {L_2^{α+1} - j} = Π_{j=1}^{α+1} {L_2^{2j-1} - j}`.
pub fn product_swap_sides(alpha: u32) -> (CanonicalOperator, CanonicalOperator) {
    let a = a64(alpha);
    let lhs = ordered_product((1..=a + 1).map(|j| second_order(a + 1).add_scalar(&int(-j))));
    let rhs = ordered_product((1..=a + 1).map(|j| second_order(2 * j - 1).add_scalar(&int(-j))));
    (lhs, rhs)
}

/// Both sides of
/// `[L_2^{α+j+2} - j - 1][L_2^{α+1} - j] = [L_2^{α+2} - j - 1][L_2^{α+j+1} - j]`.
pub fn commutation_sides(alpha: u32, j: u32) -> (CanonicalOperator, CanonicalOperator) {
    let (a, j) = (a64(alpha), i64::from(j));
    let lhs = second_order(a + j + 2)
        .add_scalar(&int(-j - 1))
        .compose(&second_order(a + 1).add_scalar(&int(-j)));
    let rhs = second_order(a + 2)
        .add_scalar(&int(-j - 1))
        .compose(&second_order(a + j + 1).add_scalar(&int(-j)));
    (lhs, rhs)
}

/// The three members of
/// `[L_2^{2j-1} - 2j/x - j] L_2^{-1} = x [L_2^{2j+1} - j - 1][D² - D] = L_2^{-1} [L_2^{2j-1} - j]`.
pub fn commutation_minus_one_sides(j: u32) -> [CanonicalOperator; 3] {
    let j = i64::from(j);
    let first = second_order(2 * j - 1)
        .add_function(&over_x(-2 * j))
        .add_scalar(&int(-j))
        .compose(&second_order(-1));
    let d2_minus_d = CanonicalOperator::from_polys([(2, Poly::one()), (1, Poly::from_ints(&[-1]))]);
    let middle = CanonicalOperator::multiplication(RatFn::from(Poly::x()))
        .compose(&second_order(2 * j + 1).add_scalar(&int(-j - 1)))
        .compose(&d2_minus_d);
    let last = second_order(-1).compose(&second_order(2 * j - 1).add_scalar(&int(-j)));
    [first, middle, last]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn alpha0_anchor() -> CanonicalOperator {
        // -x [x D^4 + (4 - 2x) D^3 - (6 - x) D^2 + 2 D]
        CanonicalOperator::from_polys([
            (4, p(&[0, 0, -1])),
            (3, p(&[0, -4, 2])),
            (2, p(&[0, 6, -1])),
            (1, p(&[0, -2])),
        ])
    }

    #[test]
    fn t_coefficients() {
        assert_eq!(t_coeff(1, 5).unwrap(), int(1));
        assert_eq!(t_coeff(2, 0).unwrap(), int(1));
        assert_eq!(t_coeff(3, 1).unwrap(), int(2));
        assert_eq!(t_coeff(0, 1), Err(Error::InvalidN(0)));
    }

    #[test]
    fn t_polynomials() {
        assert_eq!(t_poly(0, 3), Poly::zero());
        assert_eq!(t_poly(1, 4), p(&[0, -1]));
        assert_eq!(t_poly(2, 0), p(&[0, -3, 1]));
        for n in 1..8 {
            let t = t_poly(n, 2);
            assert_eq!(t.degree(), Some(n as usize));
            assert!(t.coeff(0).is_zero());
        }
    }

    #[test]
    fn laguerre_type_polynomials() {
        assert_eq!(lag_type_poly(4, 2, &int(0)), laguerre(4, &int(2)).unwrap());
        assert_eq!(lag_type_poly(1, 0, &int(1)), p(&[1, -2]));
        let expected = Poly::new(vec![int(1), int(-5), ratio(3, 2)]);
        assert_eq!(lag_type_poly(2, 0, &int(1)), expected);
    }

    #[test]
    fn second_order_forms() {
        assert_eq!(second_order(0), CanonicalOperator::from_polys([(2, p(&[0, 1])), (1, p(&[1, -1]))]));
        assert_eq!(second_order(-1), CanonicalOperator::from_polys([(2, p(&[0, 1])), (1, p(&[0, -1]))]));
        for gamma in -1..=7 {
            assert_eq!(second_order_weighted(gamma).unwrap(), second_order(gamma), "γ={gamma}");
        }
    }

    #[test]
    fn anchor_at_alpha_zero() {
        for repr in HigherRepr::ALL {
            assert_eq!(higher_order(0, repr).unwrap(), alpha0_anchor(), "{repr}");
        }
    }

    #[test]
    fn all_representations_agree() {
        for alpha in 0..=3 {
            let reference = higher_order(alpha, HigherRepr::Koekoek).unwrap();
            for repr in HigherRepr::ALL {
                let op = higher_order(alpha, repr).unwrap();
                assert!(op.first_difference(&reference).is_none(), "α={alpha} {repr}: {:?}", op.first_difference(&reference));
            }
        }
    }

    #[test]
    fn structure_of_higher_operator() {
        for alpha in 0..=5 {
            let op = higher_order(alpha, HigherRepr::Elementary).unwrap();
            let top = 2 * alpha as usize + 4;
            assert_eq!(op.order(), Some(top));
            assert_eq!(op.lowest_order(), Some(1));
            let coeffs = op.polynomial_coefficients().unwrap();
            let s = if alpha % 2 == 0 { -1 } else { 1 };
            assert_eq!(coeffs[&top], Poly::monomial(int(s), alpha as usize + 2));
            for (i, d) in &coeffs {
                assert!(d.coeff(0).is_zero(), "d_{i} divisible by x");
                assert!(d.degree().unwrap() <= (*i).min(alpha as usize + 2));
            }
        }
    }

    #[test]
    fn combined_operator() {
        assert_eq!(combined(3, &int(0)), second_order(3));
        let expected = second_order(0).add(&higher_order(0, HigherRepr::Koekoek).unwrap());
        assert_eq!(combined(0, &int(2)), expected);
        assert_eq!(combined(2, &ratio(1, 3)).order(), Some(8));
        assert_eq!(combined(2, &int(0)).order(), Some(2));
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(eigenvalue_combined(7, 2, &int(0)), int(7));
        assert_eq!(eigenvalue_combined(2, 0, &int(1)), int(5));
        assert_eq!(eigenvalue_combined(1, 0, &ratio(2, 7)), int(1) + ratio(2, 7));
        for alpha in 0..4 {
            for mass in [int(0), ratio(1, 2), int(3)] {
                for n in 0..12 {
                    assert!(eigenvalue_combined(n + 1, alpha, &mass) > eigenvalue_combined(n, alpha, &mass));
                }
            }
        }
    }

    #[test]
    fn residual_examples() {
        let r = residual(ResidualKind::Combined, &LagTypeParams::new(1, ratio(7, 3), 3).unwrap()).unwrap();
        assert!(r.is_zero());
        let r = residual(ResidualKind::TComponent, &LagTypeParams::new(0, int(0), 2).unwrap()).unwrap();
        assert!(r.is_zero());
        // [L_4^0 + (1)_2] L_1^0 = 2 = (2)_0 · 1 · 2 · L_0^2
        let h = higher_order(0, HigherRepr::Koekoek).unwrap();
        assert_eq!(h.add_scalar(&int(2)).apply_to_poly(&p(&[1, -1])), RatFn::constant(int(2)));
        let r = residual(ResidualKind::LHigherOrder, &LagTypeParams::new(0, int(0), 1).unwrap()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn residuals_vanish_on_small_grid() {
        for alpha in 0..=2 {
            let h = higher_order(alpha, HigherRepr::Koekoek).unwrap();
            for mass in [int(0), int(1), ratio(1, 2), ratio(7, 3)] {
                for n in 0..=6 {
                    let params = LagTypeParams::new(alpha, mass.clone(), n).unwrap();
                    for kind in ResidualKind::ALL {
                        let r = residual_with(kind, &params, &h).unwrap();
                        assert!(r.is_zero(), "{} α={alpha} N={mass} n={n}: {r}", kind.name());
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_operator_leaves_residual() {
        let mut table = koekoek_coefficients(1);
        table[2].1 = &table[2].1 + &Poly::x();
        let bad = from_coefficient_table(&table);
        let params = LagTypeParams::new(1, int(1), 4).unwrap();
        assert!(!residual_with(ResidualKind::Combined, &params, &bad).unwrap().is_zero());
    }

    #[test]
    fn operator_identities() {
        for alpha in 0..=3 {
            let (l, r) = product_swap_sides(alpha);
            assert_eq!(l, r, "product swap α={alpha}");
            for j in 1..=4 {
                let (l, r) = commutation_sides(alpha, j);
                assert_eq!(l, r, "commutation α={alpha} j={j}");
            }
        }
        for j in 1..=4 {
            let [a, b, c] = commutation_minus_one_sides(j);
            assert_eq!(a, b);
            assert_eq!(b, c);
        }
    }

    #[test]
    fn classical_equation() {
        for gamma in 0..=6 {
            for n in 0..=8 {
                assert!(classical_equation_residual(n, gamma).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn repr_names_round_trip() {
        for repr in HigherRepr::ALL {
            assert_eq!(repr.name().parse::<HigherRepr>().unwrap(), repr);
        }
        assert!("bogus".parse::<HigherRepr>().is_err());
    }
}
