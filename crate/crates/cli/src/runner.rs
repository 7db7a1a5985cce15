//! Evaluates cases. Every computation error becomes a failed case with the
//! error as witness.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use ltype::bessel::{self, BesselHigherRepr, BesselParams};
use ltype::exact::{format_rational, int, Poly, RatFn, Rational};
use ltype::exec::{self, Execution};
use ltype::inner::{gram, spectral_form_defect_with, symmetry_defect_with};
use ltype::jacobi::{self, JacHigherRepr, JacTypeParams};
use ltype::laguerre::{self, LagTypeParams};
use ltype::{special, CanonicalOperator, EvenLaurentSeries};
use num_traits::Zero;

use crate::cases::{Case, Job};
use crate::config::{Config, Mutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<String>,
    pub detail: Option<String>,
}

impl Verdict {
    fn pass() -> Verdict {
        Verdict { pass: true, witness: None, detail: None }
    }

    fn fail(witness: String) -> Verdict {
        Verdict { pass: false, witness: Some(witness), detail: None }
    }

    fn with_detail(mut self, detail: String) -> Verdict {
        self.detail = Some(detail);
        self
    }
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::pass()
    } else {
        Verdict::fail(witness())
    }
}

fn op_eq(lhs: &CanonicalOperator, rhs: &CanonicalOperator) -> Verdict {
    match lhs.first_difference(rhs) {
        None => Verdict::pass(),
        Some(d) => Verdict::fail(d.to_string()),
    }
}

fn ratfn_zero(r: &RatFn) -> Verdict {
    check(r.is_zero(), || format!("residual = {r}"))
}

fn rational_zero(r: &Rational) -> Verdict {
    check(r.is_zero(), || format!("defect = {}", format_rational(r)))
}

fn polys_zero(ps: &[Poly]) -> Verdict {
    match ps.iter().position(|p| !p.is_zero()) {
        None => Verdict::pass(),
        Some(k) => Verdict::fail(format!("identity {}: residual = {}", k + 1, ps[k])),
    }
}

fn series_zero(s: &EvenLaurentSeries) -> Verdict {
    let window = format!("exact through x^{}", 2 * s.valid_up_to());
    match s.first_nonzero() {
        None => Verdict::pass().with_detail(window),
        Some((k, c)) => Verdict::fail(format!("x^{}: {}", 2 * k, format_rational(&c))).with_detail(window),
    }
}

/// Memoized operators keyed by parameters.
struct Memo<K> {
    map: Mutex<BTreeMap<K, Arc<CanonicalOperator>>>,
}

impl<K: Ord + Clone> Memo<K> {
    fn new() -> Self {
        Memo { map: Mutex::new(BTreeMap::new()) }
    }

    fn get(&self, key: &K, build: impl FnOnce() -> ltype::Result<CanonicalOperator>) -> ltype::Result<Arc<CanonicalOperator>> {
        if let Some(op) = self.map.lock().expect("memo lock").get(key) {
            return Ok(op.clone());
        }
        let op = Arc::new(build()?);
        self.map.lock().expect("memo lock").insert(key.clone(), op.clone());
        Ok(op)
    }
}

/// Shared reference operators: the Koekoek form (possibly mutated), the direct
/// Jacobi-type form and the explicit Bessel-type form.
pub struct Context {
    mutation: Option<Mutation>,
    laguerre: Memo<u32>,
    jacobi: Memo<(u32, Rational)>,
    bessel: Memo<u32>,
}

impl Context {
    pub fn new(mutation: Option<Mutation>) -> Context {
        Context { mutation, laguerre: Memo::new(), jacobi: Memo::new(), bessel: Memo::new() }
    }

    /// `d_i^α` table with the configured mutation applied.
    pub fn koekoek_table(&self, alpha: u32) -> Vec<(usize, Poly)> {
        let mut table = laguerre::koekoek_coefficients(alpha);
        if let Some(m) = self.mutation.filter(|m| m.alpha == alpha) {
            let bump = Poly::monomial(int(1), m.power);
            match table.iter_mut().find(|(i, _)| *i == m.order) {
                Some((_, p)) => *p = &*p + &bump,
                None => table.push((m.order, bump)),
            }
        }
        table
    }

    fn koekoek(&self, alpha: u32) -> ltype::Result<Arc<CanonicalOperator>> {
        self.laguerre.get(&alpha, || Ok(laguerre::from_coefficient_table(&self.koekoek_table(alpha))))
    }

    fn jacobi_direct(&self, alpha: u32, beta: &Rational) -> ltype::Result<Arc<CanonicalOperator>> {
        self.jacobi.get(&(alpha, beta.clone()), || jacobi::higher_order(alpha, beta, JacHigherRepr::Direct))
    }

    fn bessel_explicit(&self, alpha: u32) -> ltype::Result<Arc<CanonicalOperator>> {
        self.bessel.get(&alpha, || bessel::higher_order(alpha, BesselHigherRepr::Explicit))
    }
}

/// A case with its verdict and optional wall-clock time in microseconds.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub case: Case,
    pub verdict: Verdict,
    pub micros: Option<u64>,
}

pub fn run_cases(config: &Config, cases: Vec<Case>) -> Vec<Evaluated> {
    let ctx = Context::new(config.mutation);
    let timing = config.timing;
    let verdicts = exec::map(config.execution, &cases, |case| {
        let start = Instant::now();
        let verdict = evaluate(&ctx, &case.job);
        (verdict, timing.then(|| start.elapsed().as_micros() as u64))
    });
    cases
        .into_iter()
        .zip(verdicts)
        .map(|(case, (verdict, micros))| Evaluated { case, verdict, micros })
        .collect()
}

pub fn evaluate(ctx: &Context, job: &Job) -> Verdict {
    evaluate_inner(ctx, job).unwrap_or_else(|e| Verdict::fail(format!("error: {e}")))
}

fn laguerre_anchor() -> CanonicalOperator {
    CanonicalOperator::from_polys([
        (4, Poly::from_ints(&[0, 0, -1])),
        (3, Poly::from_ints(&[0, -4, 2])),
        (2, Poly::from_ints(&[0, 6, -1])),
        (1, Poly::from_ints(&[0, -2])),
    ])
}

fn evaluate_inner(ctx: &Context, job: &Job) -> ltype::Result<Verdict> {
    let v = match job {
        Job::LagEquiv { alpha, repr } => op_eq(&laguerre::higher_order(*alpha, *repr)?, &*ctx.koekoek(*alpha)?),
        Job::LagAnchor => op_eq(&*ctx.koekoek(0)?, &laguerre_anchor()),
        Job::LagEigen { kind, alpha, mass, n } => {
            let params = LagTypeParams::new(*alpha, mass.clone(), *n)?;
            ratfn_zero(&laguerre::residual_with(*kind, &params, &*ctx.koekoek(*alpha)?)?)
        }
        Job::LagMonotone { alpha, mass, n_max } => {
            let values: Vec<Rational> = (0..=*n_max).map(|n| laguerre::eigenvalue_combined(n, *alpha, mass)).collect();
            match values.windows(2).position(|w| w[1] <= w[0]) {
                None => Verdict::pass(),
                Some(n) => Verdict::fail(format!(
                    "Lambda_{} = {} >= Lambda_{} = {}",
                    n,
                    format_rational(&values[n]),
                    n + 1,
                    format_rational(&values[n + 1])
                )),
            }
        }
        Job::LagSymmetry { alpha, mass, f, g } => {
            let op = laguerre::combined_with(&*ctx.koekoek(*alpha)?, *alpha, mass);
            rational_zero(&symmetry_defect_with(&op, f, g, *alpha, mass)?)
        }
        Job::LagSpectralForm { alpha, mass, f, g } => {
            let op = laguerre::combined_with(&*ctx.koekoek(*alpha)?, *alpha, mass);
            rational_zero(&spectral_form_defect_with(&op, f, g, *alpha, mass)?)
        }
        Job::LagGram { alpha, mass, n_max } => {
            let report = gram(*alpha, mass, *n_max, Execution::Sequential);
            let norms: Vec<String> = report.diagonal_norms.iter().map(format_rational).collect();
            let detail = format!("h = [{}]", norms.join(", "));
            if let Some((n, m, v)) = report.off_diagonal_witness() {
                Verdict::fail(format!("entry ({n}, {m}) = {}", format_rational(&v))).with_detail(detail)
            } else if let Some((n, h)) = report.nonpositive_norm() {
                Verdict::fail(format!("h_{n} = {}", format_rational(&h))).with_detail(detail)
            } else {
                Verdict::pass().with_detail(detail)
            }
        }
        Job::LagGramAnchor => {
            let h1 = gram(0, &int(1), 1, Execution::Sequential).diagonal_norms[1].clone();
            check(h1 == int(6), || format!("h_1 = {}", format_rational(&h1)))
        }
        Job::LagProductSwap { alpha } => {
            let (l, r) = laguerre::product_swap_sides(*alpha);
            op_eq(&l, &r)
        }
        Job::LagCommutation { alpha, j } => {
            let (l, r) = laguerre::commutation_sides(*alpha, *j);
            op_eq(&l, &r)
        }
        Job::LagCommutationMinusOne { j } => {
            let [a, b, c] = laguerre::commutation_minus_one_sides(*j);
            let first = op_eq(&a, &b);
            if first.pass {
                op_eq(&b, &c)
            } else {
                first
            }
        }
        Job::LagSecondOrderForms { gamma } => {
            op_eq(&laguerre::second_order_weighted(*gamma)?, &laguerre::second_order(*gamma))
        }
        Job::LagClassicalEquation { n, gamma } => ratfn_zero(&laguerre::classical_equation_residual(*n, *gamma)?),
        Job::LagWeightedDerivative { n, gamma } => polys_zero(&special::weighted_derivative_residuals(*n, &int(*gamma))?),
        Job::LagRelations { n, gamma } => polys_zero(&special::laguerre_relation_residuals(*n, &int(*gamma))?),
        Job::JacEquiv { alpha, beta, repr } => {
            op_eq(&jacobi::higher_order(*alpha, beta, *repr)?, &*ctx.jacobi_direct(*alpha, beta)?)
        }
        Job::JacEigen { alpha, beta, mass, n } => {
            let params = JacTypeParams::new(*alpha, beta.clone(), mass.clone(), *n)?;
            ratfn_zero(&jacobi::residual_with(&params, &*ctx.jacobi_direct(*alpha, beta)?)?)
        }
        Job::JacRComponent { alpha, beta, n } => {
            ratfn_zero(&jacobi::r_component_residual(*n, *alpha, beta, &*ctx.jacobi_direct(*alpha, beta)?)?)
        }
        Job::JacLeadingTerm { alpha, beta, n } => {
            let (l2, lh) = jacobi::eigenvalues(*n, *alpha, beta);
            let xn = Poly::monomial(int(1), *n as usize);
            let lead = |op: &CanonicalOperator| -> Rational {
                op.apply_to_poly(&xn).into_poly().map_or_else(Rational::zero, |p| p.coeff(*n as usize))
            };
            let got2 = lead(&jacobi::second_order(&int(i64::from(*alpha)), beta));
            let goth = lead(&*ctx.jacobi_direct(*alpha, beta)?);
            check(got2 == l2 && goth == lh, || {
                format!(
                    "leading coefficients ({}, {}) vs eigenvalues ({}, {})",
                    format_rational(&got2),
                    format_rational(&goth),
                    format_rational(&l2),
                    format_rational(&lh)
                )
            })
        }
        Job::JacConfluence { alpha, n } => {
            let (a2, ah) = jacobi::confluence_deviation(*n, *alpha, &int(1_000))?;
            let (b2, bh) = jacobi::confluence_deviation(*n, *alpha, &int(1_000_000))?;
            let rate = |large: &Rational, small: &Rational| large / small;
            let (r2, rh) = (rate(&a2, &b2), rate(&ah, &bh));
            let ok = |r: &Rational| *r >= int(900) && *r <= int(1100);
            let detail = format!("decay factors {} and {}", format_rational(&r2), format_rational(&rh));
            check(ok(&r2) && ok(&rh), || "deviation does not scale like 1/beta".to_string()).with_detail(detail)
        }
        Job::JacSecondOrderForms { alpha, beta } => {
            let a = int(i64::from(*alpha));
            op_eq(&jacobi::second_order_weighted(&a, beta)?, &jacobi::second_order(&a, beta))
        }
        Job::BesEquiv { alpha, repr } => op_eq(&bessel::higher_order(*alpha, *repr)?, &*ctx.bessel_explicit(*alpha)?),
        Job::BesAnchor { alpha } => {
            let table = bessel::a_table(*alpha)?;
            let top = table.last().map(|(_, a)| a.clone()).unwrap_or_else(Rational::zero);
            let anchor_ok = *alpha != 0 || table.iter().map(|(_, a)| a.clone()).eq([9, -9, 2, 1].map(int));
            let no_d0 = ctx.bessel_explicit(*alpha)?.coeff(0).is_zero();
            check(top == int(1) && anchor_ok && no_d0, || {
                let row: Vec<String> = table.iter().map(|(_, a)| format_rational(a)).collect();
                format!("A = [{}]", row.join(", "))
            })
        }
        Job::BesResidual { kind, alpha, mass, lambda2, truncation } => {
            let params = BesselParams::new(*alpha, mass.clone(), lambda2.clone(), *truncation)?;
            let s = bessel::residual_with(*kind, &params, &*ctx.bessel_explicit(*alpha)?)?;
            let window = *truncation - i64::from(*alpha) - 2;
            if s.valid_up_to() < window {
                Verdict::fail(format!("validity x^{} short of x^{}", 2 * s.valid_up_to(), 2 * window))
            } else {
                series_zero(&s)
            }
        }
        Job::BesDeltaPower { beta } => {
            let (l, r) = bessel::delta_power_sides(*beta)?;
            op_eq(&l, &r)
        }
        Job::BesShift { alpha } => {
            let (l, r) = bessel::shift_identity_sides(*alpha)?;
            op_eq(&l, &r)
        }
        Job::BesSecondOrderForms { alpha } => op_eq(&bessel::second_order_weighted(*alpha)?, &bessel::second_order(*alpha)),
        Job::BesEquation { alpha, lambda2, truncation } => {
            series_zero(&special::bessel_equation_residual(*alpha, lambda2, *truncation)?)
        }
        Job::BesDerivative { gamma, lambda2, truncation } => {
            let parts = special::bessel_derivative_residuals(*gamma, lambda2, *truncation)?;
            parts
                .iter()
                .map(series_zero)
                .enumerate()
                .find(|(_, v)| !v.pass)
                .map(|(k, v)| Verdict::fail(format!("identity {}: {}", k + 1, v.witness.unwrap_or_default())))
                .unwrap_or_else(Verdict::pass)
        }
    };
    Ok(v)
}
