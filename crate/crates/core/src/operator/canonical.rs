use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{binomial, Poly, RatFn, Rational};

/// Linear differential operator in normal form `Σ c_i(x) D^i`.
///
/// Coefficients are reduced rational functions and zero coefficients are
/// never stored, so two operators are equal exactly when their term maps are.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CanonicalOperator {
    terms: BTreeMap<usize, RatFn>,
}

/// First derivative order at which two operators disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDifference {
    pub order: usize,
    pub left: RatFn,
    pub right: RatFn,
}

impl fmt::Display for TermDifference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}: {} vs {}", self.order, self.left, self.right)
    }
}

impl CanonicalOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::multiplication(RatFn::one())
    }

    /// `D`.
    pub fn derivative() -> Self {
        Self::d_power(1)
    }

    /// `D^k`.
    pub fn d_power(k: usize) -> Self {
        Self::from_terms([(k, RatFn::one())])
    }

    /// Multiplication by `f`.
    pub fn multiplication(f: RatFn) -> Self {
        Self::from_terms([(0, f)])
    }

    pub fn scalar(c: Rational) -> Self {
        Self::multiplication(RatFn::constant(c))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, RatFn)>) -> Self {
        let mut op = Self::zero();
        for (i, c) in terms {
            op.accumulate(i, c);
        }
        op
    }

    /// Builds `Σ p_i D^i` from polynomial coefficients indexed by order.
    pub fn from_polys(coeffs: impl IntoIterator<Item = (usize, Poly)>) -> Self {
        Self::from_terms(coeffs.into_iter().map(|(i, p)| (i, RatFn::from(p))))
    }

    fn accumulate(&mut self, order: usize, c: RatFn) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(order) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &RatFn)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    /// Coefficient of `D^i` (zero when absent).
    pub fn coeff(&self, i: usize) -> RatFn {
        self.terms.get(&i).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_order(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn has_polynomial_coefficients(&self) -> bool {
        self.terms.values().all(RatFn::is_polynomial)
    }

    /// Polynomial coefficients by order, if every coefficient is polynomial.
    pub fn polynomial_coefficients(&self) -> Option<BTreeMap<usize, Poly>> {
        self.terms
            .iter()
            .map(|(&i, c)| c.as_poly().map(|p| (i, p.clone())))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.accumulate(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CanonicalOperator {
            terms: self.terms.iter().map(|(&i, f)| (i, f.scale(c))).collect(),
        }
    }

    /// `self + c`, i.e. adds `c` to the order-zero coefficient.
    pub fn add_scalar(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.accumulate(0, RatFn::constant(c.clone()));
        out
    }

    /// `self + f`, adding a multiplication operator.
    pub fn add_function(&self, f: &RatFn) -> Self {
        let mut out = self.clone();
        out.accumulate(0, f.clone());
        out
    }

    /// `f ∘ self`: multiplies every coefficient by `f`.
    pub fn left_mul(&self, f: &RatFn) -> Self {
        Self::from_terms(self.terms.iter().map(|(&i, c)| (i, c * f)))
    }

    /// `D ∘ self`.
    pub fn left_derive(&self) -> Self {
        let mut out = Self::zero();
        for (&i, c) in &self.terms {
            out.accumulate(i, c.derive());
            out.accumulate(i + 1, c.clone());
        }
        out
    }

    /// `self ∘ other` (`other` acts first), via
    /// `D^i ∘ b = Σ_k binom(i, k) b^(k) D^(i-k)`.
    pub fn compose(&self, other: &Self) -> Self {
        let Some(max_order) = self.order() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for (&j, b) in &other.terms {
            let mut derivs = Vec::with_capacity(max_order + 1);
            derivs.push(b.clone());
            for k in 1..=max_order {
                let next = derivs[k - 1].derive();
                if next.is_zero() {
                    break;
                }
                derivs.push(next);
            }
            for (&i, a) in &self.terms {
                for (k, bk) in derivs.iter().enumerate().take(i + 1) {
                    let coeff = (a * bk).scale(&binomial(i as u32, k as u32));
                    out.accumulate(i - k + j, coeff);
                }
            }
        }
        out
    }

    /// `self^k` under composition.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| self.compose(&acc))
    }

    /// `Σ c_i (D + ℓ)^i`, the operator `W^{-1} ∘ self ∘ W` for a weight `W`
    /// with logarithmic derivative `ℓ = W'/W`.
    pub fn conjugate_by_log_derivative(&self, ell: &RatFn) -> Self {
        if ell.is_zero() {
            return self.clone();
        }
        let Some(max_order) = self.order() else {
            return Self::zero();
        };
        let mut power = Self::identity();
        let mut out = Self::zero();
        for i in 0..=max_order {
            if let Some(c) = self.terms.get(&i) {
                out = out.add(&power.left_mul(c));
            }
            if i < max_order {
                power = power.left_derive().add(&power.left_mul(ell));
            }
        }
        out
    }

    /// `Σ c_i p^(i)` as a reduced rational function.
    pub fn apply_to_poly(&self, p: &Poly) -> RatFn {
        let mut acc = RatFn::zero();
        for (&i, c) in &self.terms {
            let dp = p.derive(i);
            if dp.is_zero() {
                continue;
            }
            acc = &acc + &c.mul_poly(&dp);
        }
        acc
    }

    /// Lowest-order term where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<TermDifference> {
        let orders: std::collections::BTreeSet<usize> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        orders.into_iter().find_map(|i| {
            let (l, r) = (self.coeff(i), other.coeff(i));
            (l != r).then_some(TermDifference {
                order: i,
                left: l,
                right: r,
            })
        })
    }
}

impl fmt::Debug for CanonicalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalOperator[{self}]")
    }
}

impl fmt::Display for CanonicalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]D")?,
                _ => write!(f, "[{c}]D^{i}")?,
            }
        }
        Ok(())
    }
}
