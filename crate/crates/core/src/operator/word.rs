use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::canonical::CanonicalOperator;
use crate::error::{Error, Result};
use crate::exact::{int, Poly, RatFn, Rational};

/// One factor of an operator word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpAtom {
    /// `D`.
    Derive,
    /// Multiplication by a polynomial.
    MulPoly(Poly),
    /// Multiplication by `(x - center)^exponent`, exponent any rational.
    MulPow { center: Rational, exponent: Rational },
    /// Multiplication by `e^{s x}`.
    MulExp(Rational),
    /// An already normalized operator used as a factor.
    Apply(CanonicalOperator),
}

/// Noncommutative product of atoms.
///
/// Atoms are listed the way the product is written: the LAST atom acts first
/// on the argument. `OpWord::new().exp(1).derive().exp(-1)` is
/// `e^x ∘ D ∘ e^{-x}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpWord {
    atoms: Vec<OpAtom>,
}

impl OpWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_atoms(atoms: Vec<OpAtom>) -> Self {
        OpWord { atoms }
    }

    pub fn atoms(&self) -> &[OpAtom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn push(mut self, atom: OpAtom) -> Self {
        self.atoms.push(atom);
        self
    }

    pub fn derive(self) -> Self {
        self.push(OpAtom::Derive)
    }

    pub fn derive_n(mut self, k: usize) -> Self {
        self.atoms.extend(std::iter::repeat_n(OpAtom::Derive, k));
        self
    }

    pub fn poly(self, p: Poly) -> Self {
        self.push(OpAtom::MulPoly(p))
    }

    pub fn scalar(self, c: Rational) -> Self {
        self.push(OpAtom::MulPoly(Poly::constant(c)))
    }

    pub fn power(self, center: Rational, exponent: Rational) -> Self {
        self.push(OpAtom::MulPow { center, exponent })
    }

    /// `x^exponent`.
    pub fn x_power(self, exponent: Rational) -> Self {
        self.power(Rational::zero(), exponent)
    }

    pub fn exp(self, s: Rational) -> Self {
        self.push(OpAtom::MulExp(s))
    }

    pub fn apply(self, op: CanonicalOperator) -> Self {
        self.push(OpAtom::Apply(op))
    }

    /// Concatenation: `self ∘ other`.
    pub fn then(mut self, other: &OpWord) -> Self {
        self.atoms.extend(other.atoms.iter().cloned());
        self
    }

    /// Reduces the word to `Σ c_i D^i`.
    ///
    /// The product is accumulated right to left as `W(x) · Σ r_i D^i`, where
    /// `W = e^{Sx} Π (x - c)^{γ_c}` keeps only fractional power exponents.
    /// Integer parts of powers go straight into the coefficients. Passing `D`
    /// across the weight uses `D ∘ W = W ∘ (D + W'/W)`. At the end `S` must be
    /// zero and every `γ_c` must have cancelled.
    pub fn normalize(&self) -> Result<CanonicalOperator> {
        let mut acc = WeightedOperator::identity();
        for atom in self.atoms.iter().rev() {
            acc.left_apply(atom);
        }
        acc.finish()
    }
}

struct WeightedOperator {
    exp: Rational,
    powers: BTreeMap<Rational, Rational>,
    op: CanonicalOperator,
}

impl WeightedOperator {
    fn identity() -> Self {
        WeightedOperator {
            exp: Rational::zero(),
            powers: BTreeMap::new(),
            op: CanonicalOperator::identity(),
        }
    }

    fn log_derivative(&self) -> RatFn {
        let mut ell = RatFn::constant(self.exp.clone());
        for (c, g) in &self.powers {
            ell = &ell + &RatFn::linear_power(c, -1).scale(g);
        }
        ell
    }

    fn left_apply(&mut self, atom: &OpAtom) {
        match atom {
            OpAtom::Derive => {
                let ell = self.log_derivative();
                let mut next = self.op.left_derive();
                if !ell.is_zero() {
                    next = next.add(&self.op.left_mul(&ell));
                }
                self.op = next;
            }
            OpAtom::MulPoly(p) => {
                self.op = self.op.left_mul(&RatFn::from(p.clone()));
            }
            OpAtom::MulExp(s) => self.exp += s,
            OpAtom::MulPow { center, exponent } => {
                let total = self.powers.remove(center).unwrap_or_else(Rational::zero) + exponent;
                let whole = total.floor();
                let frac = &total - &whole;
                if !frac.is_zero() {
                    self.powers.insert(center.clone(), frac);
                }
                if !whole.is_zero() {
                    let m: i64 = whole.to_integer().try_into().expect("power exponent fits i64");
                    self.op = self.op.left_mul(&RatFn::linear_power(center, m));
                }
            }
            OpAtom::Apply(a) => {
                let conj = a.conjugate_by_log_derivative(&self.log_derivative());
                self.op = conj.compose(&self.op);
            }
        }
    }

    fn finish(self) -> Result<CanonicalOperator> {
        if !self.exp.is_zero() {
            return Err(Error::NonCancellingExpWeight(self.exp));
        }
        if let Some((center, exponent)) = self.powers.into_iter().next() {
            return Err(Error::NonIntegerPowerResidue { center, exponent });
        }
        Ok(self.op)
    }
}

/// `x^k` as a polynomial.
pub(crate) fn x_pow(k: usize) -> Poly {
    Poly::monomial(Rational::one(), k)
}

/// Integer helper for building words: `(x - c)^k` with `k ≥ 0`.
pub(crate) fn linear_pow(c: i64, k: u32) -> Poly {
    Poly::linear(&int(c)).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn exponential_conjugation() {
        let w = OpWord::new().exp(int(1)).derive().exp(int(-1));
        let expected = CanonicalOperator::from_polys([(1, p(&[1])), (0, p(&[-1]))]);
        assert_eq!(w.normalize().unwrap(), expected);
        let w = OpWord::new().exp(int(-1)).derive().exp(int(1));
        let expected = CanonicalOperator::from_polys([(1, p(&[1])), (0, p(&[1]))]);
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn power_conjugation() {
        let w = OpWord::new().x_power(int(-1)).derive().poly(Poly::x());
        let expected = CanonicalOperator::from_terms([
            (1, RatFn::one()),
            (0, RatFn::monomial(int(1), -1)),
        ]);
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn fractional_powers_cancel() {
        // (x+1)^{-1/2} D (x+1)^{1/2} = D + 1/(2(x+1))
        let w = OpWord::new()
            .power(int(-1), ratio(-1, 2))
            .derive()
            .power(int(-1), ratio(1, 2));
        let expected = CanonicalOperator::from_terms([
            (1, RatFn::one()),
            (0, RatFn::linear_power(&int(-1), -1).scale(&ratio(1, 2))),
        ]);
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn surviving_weights_are_errors() {
        let w = OpWord::new().exp(int(2)).derive();
        assert_eq!(w.normalize(), Err(Error::NonCancellingExpWeight(int(2))));
        let w = OpWord::new().derive().power(int(1), ratio(1, 3));
        assert_eq!(
            w.normalize(),
            Err(Error::NonIntegerPowerResidue {
                center: int(1),
                exponent: ratio(1, 3)
            })
        );
        // fractional parts summing to an integer are absorbed
        let w = OpWord::new().power(int(1), ratio(2, 3)).derive().power(int(1), ratio(1, 3));
        assert!(w.normalize().unwrap().has_polynomial_coefficients());
    }

    #[test]
    fn apply_atom_through_weight() {
        // e^x ∘ (x D) ∘ e^{-x} = x D - x
        let xd = CanonicalOperator::from_polys([(1, p(&[0, 1]))]);
        let w = OpWord::new().exp(int(1)).apply(xd).exp(int(-1));
        let expected = CanonicalOperator::from_polys([(1, p(&[0, 1])), (0, p(&[0, -1]))]);
        assert_eq!(w.normalize().unwrap(), expected);
    }

    #[test]
    fn helpers() {
        assert_eq!(linear_pow(1, 2), p(&[1, -2, 1]));
        assert_eq!(x_pow(2), p(&[0, 0, 1]));
    }
}
