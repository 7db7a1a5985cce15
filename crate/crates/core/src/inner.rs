//! The scalar product `(f, g) = ∫_0^∞ f g e^{-x} x^α/α! dx + N f(0) g(0)` on
//! polynomials, computed exactly from the moments `(α+1)_k`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rational};
use crate::exec::{self, Execution};
use crate::laguerre::{combined, eigenvalue_combined, lag_type_poly};
use crate::operator::CanonicalOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightParams {
    pub alpha: u32,
    pub mass: Rational,
}

impl WeightParams {
    pub fn new(alpha: u32, mass: Rational) -> Result<Self> {
        if mass.is_negative() {
            return Err(Error::InvalidParameter(format!("mass {mass} must be nonnegative")));
        }
        Ok(WeightParams { alpha, mass })
    }

    pub fn inner(&self, f: &Poly, g: &Poly) -> Rational {
        inner(f, g, self.alpha, &self.mass)
    }
}

/// `∫_0^∞ x^k w_α(x) dx = (α+1)_k`.
pub fn moment(k: u32, alpha: u32) -> Rational {
    moments(k as usize, alpha).pop().expect("at least one moment")
}

/// `(α+1)_0, ..., (α+1)_k`.
fn moments(k: usize, alpha: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k + 1);
    let mut m = Rational::one();
    for j in 0..=k {
        if j > 0 {
            m *= int(i64::from(alpha) + j as i64);
        }
        out.push(m.clone());
    }
    out
}

pub fn inner(f: &Poly, g: &Poly, alpha: u32, mass: &Rational) -> Rational {
    let prod = f * g;
    let at_zero = mass * f.coeff(0) * g.coeff(0);
    let Some(deg) = prod.degree() else {
        return at_zero;
    };
    let integral = prod
        .coeffs()
        .iter()
        .zip(moments(deg, alpha))
        .fold(Rational::zero(), |acc, (c, m)| acc + c * m);
    integral + at_zero
}

/// `(L f, g) - (f, L g)` for the combined Laguerre-type operator.
pub fn symmetry_defect(f: &Poly, g: &Poly, alpha: u32, mass: &Rational) -> Result<Rational> {
    symmetry_defect_with(&combined(alpha, mass), f, g, alpha, mass)
}

/// `(L f, g) - (f, L g)` for an arbitrary operator with polynomial coefficients.
pub fn symmetry_defect_with(
    op: &CanonicalOperator,
    f: &Poly,
    g: &Poly,
    alpha: u32,
    mass: &Rational,
) -> Result<Rational> {
    let lf = apply_poly(op, f)?;
    let lg = apply_poly(op, g)?;
    Ok(inner(&lf, g, alpha, mass) - inner(f, &lg, alpha, mass))
}

fn apply_poly(op: &CanonicalOperator, p: &Poly) -> Result<Poly> {
    op.apply_to_poly(p)
        .into_poly()
        .ok_or_else(|| Error::InvalidParameter("operator maps a polynomial outside the polynomials".into()))
}

/// Gram matrix of `L_0^{α,N}, ..., L_{nmax}^{α,N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub size: usize,
    pub entries: Vec<Vec<Rational>>,
    pub diagonal_norms: Vec<Rational>,
}

impl GramReport {
    /// First nonzero off-diagonal entry `(n, m, value)` with `n < m`.
    pub fn off_diagonal_witness(&self) -> Option<(usize, usize, Rational)> {
        (0..self.size)
            .flat_map(|n| (n + 1..self.size).map(move |m| (n, m)))
            .find(|&(n, m)| !self.entries[n][m].is_zero())
            .map(|(n, m)| (n, m, self.entries[n][m].clone()))
    }

    /// First nonpositive `h_n`.
    pub fn nonpositive_norm(&self) -> Option<(usize, Rational)> {
        self.diagonal_norms
            .iter()
            .enumerate()
            .find(|(_, h)| !h.is_positive())
            .map(|(n, h)| (n, h.clone()))
    }

    pub fn is_orthogonal(&self) -> bool {
        self.off_diagonal_witness().is_none() && self.nonpositive_norm().is_none()
    }
}

pub fn gram(alpha: u32, mass: &Rational, nmax: u32, mode: Execution) -> GramReport {
    let size = nmax as usize + 1;
    let basis = exec::map_range(mode, size, |n| lag_type_poly(n as u32, alpha, mass));
    let pairs: Vec<(usize, usize)> = (0..size).flat_map(|n| (n..size).map(move |m| (n, m))).collect();
    let values = exec::map(mode, &pairs, |&(n, m)| inner(&basis[n], &basis[m], alpha, mass));
    let mut entries = vec![vec![Rational::zero(); size]; size];
    for (&(n, m), v) in pairs.iter().zip(values) {
        entries[m][n] = v.clone();
        entries[n][m] = v;
    }
    let diagonal_norms = (0..size).map(|n| entries[n][n].clone()).collect();
    GramReport { size, entries, diagonal_norms }
}

/// Coefficients of `p` in the Laguerre-type basis, `c_k = (p, y_k)/h_k`.
/// Exact whenever the basis is orthogonal and `nmax ≥ deg p`.
pub fn basis_expansion(p: &Poly, alpha: u32, mass: &Rational, nmax: u32) -> Vec<Rational> {
    (0..=nmax)
        .map(|k| {
            let y = lag_type_poly(k, alpha, mass);
            inner(p, &y, alpha, mass) / inner(&y, &y, alpha, mass)
        })
        .collect()
}

/// `(L p, q) + Σ_k (p, y_k)(q, y_k) Λ_k / h_k` with `L y_k = -Λ_k y_k` and `k`
/// up to the larger degree: the symmetric spectral form recovered from
/// orthogonality alone on the polynomial subspace.
pub fn spectral_form_defect(p: &Poly, q: &Poly, alpha: u32, mass: &Rational) -> Result<Rational> {
    spectral_form_defect_with(&combined(alpha, mass), p, q, alpha, mass)
}

/// [`spectral_form_defect`] for a caller-supplied combined operator.
pub fn spectral_form_defect_with(
    op: &CanonicalOperator,
    p: &Poly,
    q: &Poly,
    alpha: u32,
    mass: &Rational,
) -> Result<Rational> {
    let top = p.degree().unwrap_or(0).max(q.degree().unwrap_or(0)) as u32;
    let lp = apply_poly(op, p)?;
    let spectral = (0..=top).fold(Rational::zero(), |acc, k| {
        let y = lag_type_poly(k, alpha, mass);
        let h = inner(&y, &y, alpha, mass);
        acc + inner(p, &y, alpha, mass) * inner(q, &y, alpha, mass) * eigenvalue_combined(k, alpha, mass) / h
    });
    Ok(inner(&lp, q, alpha, mass) + spectral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(0, 3), int(1));
        assert_eq!(moment(1, 0), int(1));
        assert_eq!(moment(2, 0), int(2));
        assert_eq!(moment(3, 2), int(60));
    }

    #[test]
    fn inner_examples() {
        let n = ratio(7, 3);
        assert_eq!(inner(&p(&[1]), &p(&[1]), 2, &n), int(1) + &n);
        assert_eq!(inner(&p(&[1]), &p(&[0, 1]), 2, &n), int(3));
        assert_eq!(inner(&Poly::zero(), &p(&[1, 1]), 0, &n), int(0));
        for mass in [int(0), int(1), ratio(5, 2)] {
            let y0 = lag_type_poly(0, 0, &mass);
            let y1 = lag_type_poly(1, 0, &mass);
            assert_eq!(inner(&y0, &y1, 0, &mass), int(0));
        }
    }

    #[test]
    fn symmetry_examples() {
        let f = p(&[1, 0, 0, 1]);
        assert!(symmetry_defect(&f, &f, 1, &int(2)).unwrap().is_zero());
        assert!(symmetry_defect(&p(&[0, 1]), &p(&[0, 0, 1]), 0, &int(1)).unwrap().is_zero());
        assert!(symmetry_defect(&f, &p(&[-2, 1]), 2, &ratio(5, 2)).unwrap().is_zero());
    }

    #[test]
    fn asymmetric_operator_is_detected() {
        // D alone is not symmetric for this weight
        let d = symmetry_defect_with(&CanonicalOperator::derivative(), &p(&[1]), &p(&[0, 1]), 0, &int(0));
        assert_eq!(d.unwrap(), int(-1));
    }

    #[test]
    fn gram_examples() {
        let g = gram(0, &int(1), 1, Execution::Sequential);
        assert_eq!(g.diagonal_norms, vec![int(2), int(6)]);
        assert_eq!(g.entries[0][1], int(0));
        assert!(g.is_orthogonal());
        let mass = ratio(1, 2);
        let par = gram(2, &mass, 6, Execution::Parallel);
        assert_eq!(par, gram(2, &mass, 6, Execution::Sequential));
        assert!(par.is_orthogonal());
        assert_eq!(par.diagonal_norms[0], ratio(3, 2));
    }

    #[test]
    fn non_orthogonal_family_has_witness() {
        let report = GramReport {
            size: 2,
            entries: vec![vec![int(1), int(3)], vec![int(3), int(0)]],
            diagonal_norms: vec![int(1), int(0)],
        };
        assert_eq!(report.off_diagonal_witness(), Some((0, 1, int(3))));
        assert_eq!(report.nonpositive_norm(), Some((1, int(0))));
    }

    #[test]
    fn expansion_reconstructs() {
        let mass = ratio(1, 3);
        let q = p(&[2, -1, 0, 5]);
        let coeffs = basis_expansion(&q, 1, &mass, 3);
        let back = coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, c)| &acc + &lag_type_poly(k as u32, 1, &mass).scale(c));
        assert_eq!(back, q);
        assert!(spectral_form_defect(&q, &p(&[1, 1]), 1, &mass).unwrap().is_zero());
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..=max_deg + 1)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn inner_is_symmetric_and_bilinear(
            f in small_poly(5), g in small_poly(5), h in small_poly(5),
            a in -5i64..=5, alpha in 0u32..4, mass in 0i64..4,
        ) {
            let m = int(mass);
            prop_assert_eq!(inner(&f, &g, alpha, &m), inner(&g, &f, alpha, &m));
            let lhs = inner(&(&f.scale(&int(a)) + &h), &g, alpha, &m);
            let rhs = int(a) * inner(&f, &g, alpha, &m) + inner(&h, &g, alpha, &m);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn combined_operator_is_symmetric(
            f in small_poly(6), g in small_poly(6), alpha in 0u32..3, mass in 0i64..3,
        ) {
            prop_assert!(symmetry_defect(&f, &g, alpha, &ratio(mass, 2)).unwrap().is_zero());
        }

        #[test]
        fn norm_is_positive(f in small_poly(6), alpha in 0u32..4) {
            prop_assume!(!f.is_zero());
            prop_assert!(inner(&f, &f, alpha, &ratio(1, 3)).is_positive());
        }
    }
}
