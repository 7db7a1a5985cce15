//! Case grids. Each case is a pure job plus the parameters echoed in the report.

use std::collections::BTreeMap;

use ltype::bessel::{BesselHigherRepr, BesselResidualKind};
use ltype::exact::{format_rational, int, ratio};
use ltype::jacobi::JacHigherRepr;
use ltype::laguerre::{HigherRepr, ResidualKind};
use ltype::{Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Config, Family, Suite};

/// Random symmetry pairs per `(α, N)` cell.
pub const SYMMETRY_PAIRS: usize = 50;
/// Largest degree of a random symmetry polynomial.
pub const SYMMETRY_DEGREE: usize = 8;

#[derive(Debug, Clone)]
pub enum Job {
    LagEquiv { alpha: u32, repr: HigherRepr },
    LagAnchor,
    LagEigen { kind: ResidualKind, alpha: u32, mass: Rational, n: u32 },
    LagMonotone { alpha: u32, mass: Rational, n_max: u32 },
    LagSymmetry { alpha: u32, mass: Rational, f: Poly, g: Poly },
    LagSpectralForm { alpha: u32, mass: Rational, f: Poly, g: Poly },
    LagGram { alpha: u32, mass: Rational, n_max: u32 },
    LagGramAnchor,
    LagProductSwap { alpha: u32 },
    LagCommutation { alpha: u32, j: u32 },
    LagCommutationMinusOne { j: u32 },
    LagSecondOrderForms { gamma: i64 },
    LagClassicalEquation { n: u32, gamma: i64 },
    LagWeightedDerivative { n: u32, gamma: i64 },
    LagRelations { n: u32, gamma: i64 },
    JacEquiv { alpha: u32, beta: Rational, repr: JacHigherRepr },
    JacEigen { alpha: u32, beta: Rational, mass: Rational, n: u32 },
    JacRComponent { alpha: u32, beta: Rational, n: u32 },
    JacLeadingTerm { alpha: u32, beta: Rational, n: u32 },
    JacConfluence { alpha: u32, n: u32 },
    JacSecondOrderForms { alpha: u32, beta: Rational },
    BesEquiv { alpha: u32, repr: BesselHigherRepr },
    BesAnchor { alpha: u32 },
    BesResidual { kind: BesselResidualKind, alpha: u32, mass: Rational, lambda2: Rational, truncation: i64 },
    BesDeltaPower { beta: u32 },
    BesShift { alpha: u32 },
    BesSecondOrderForms { alpha: u32 },
    BesEquation { alpha: u32, lambda2: Rational, truncation: i64 },
    BesDerivative { gamma: u32, lambda2: Rational, truncation: i64 },
}

#[derive(Debug, Clone)]
pub struct Case {
    pub family: Family,
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub job: Job,
}

fn r(v: &Rational) -> String {
    format_rational(v)
}

struct Builder {
    cases: Vec<Case>,
}

impl Builder {
    fn push(&mut self, family: Family, check: impl Into<String>, params: &[(&str, String)], job: Job) {
        self.cases.push(Case {
            family,
            check: check.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            job,
        });
    }
}

/// Check ids and the identity each one verifies.
pub fn check_descriptions() -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    let mut add = |id: &str, d: &str| {
        m.insert(id.to_string(), d.to_string());
    };
    for repr in HigherRepr::ALL.into_iter().filter(|r| *r != HigherRepr::Koekoek) {
        add(&format!("laguerre/equiv:{repr}"), "Laguerre-type operator built from this representation equals the Koekoek coefficient form, coefficient by coefficient");
    }
    add("laguerre/equiv:anchor", "alpha = 0 operator equals -x[xD^4 + (4-2x)D^3 - (6-x)D^2 + 2D]");
    add("laguerre/eigen:combined", "{L_2^a + N/(a+2)! L_{2a+4}^a + Lambda_n} L_n^{a,N} = 0 with Lambda_n = n + N (n)_{a+2}/(a+2)!");
    add("laguerre/eigen:t-component", "[L_{2a+4}^a + (n)_{a+2}] T_n^a = 0");
    add("laguerre/eigen:split", "(a+2)! [L_2^a + n] T_n^a + [L_{2a+4}^a + (n)_{a+2}] L_n^a = 0");
    add("laguerre/eigen:t-second-order", "(a+2)! [L_2^a + n] T_n^a = -(n+1)_a (a+1)(a+2) L_{n-1}^{a+2}");
    add("laguerre/eigen:l-higher-order", "[L_{2a+4}^a + (n)_{a+2}] L_n^a = (n+1)_a (a+1)(a+2) L_{n-1}^{a+2}");
    add("laguerre/eigen:monotone", "Lambda_n = n + N (n)_{a+2}/(a+2)! is strictly increasing in n");
    add("laguerre/symmetry:combined", "(Lf, g) - (f, Lg) = 0 for the combined operator and the point-mass scalar product");
    add("laguerre/symmetry:spectral-form", "(Lp, q) = -sum_k (p, y_k)(q, y_k) Lambda_k / h_k on polynomials (orthogonality implies symmetry)");
    add("laguerre/gram:orthogonality", "Gram matrix of L_0^{a,N}..L_nmax^{a,N} is diagonal with positive diagonal");
    add("laguerre/gram:h1-anchor", "h_1 = 6 at alpha = 0, N = 1");
    add("laguerre/identity:product-swap", "prod_{j=1}^{a+1} (L_2^{a+1} - j) = prod_{j=1}^{a+1} (L_2^{2j-1} - j)");
    add("laguerre/identity:commutation", "(L_2^{a+j+2} - j - 1)(L_2^{a+1} - j) = (L_2^{a+2} - j - 1)(L_2^{a+j+1} - j)");
    add("laguerre/identity:commutation-minus-one", "(L_2^{2j-1} - 2j/x - j) L_2^{-1} = x (L_2^{2j+1} - j - 1)(D^2 - D) = L_2^{-1} (L_2^{2j-1} - j)");
    add("laguerre/identity:second-order-forms", "xD^2 + (g+1-x)D = e^x x^{-g} D e^{-x} x^{g+1} D");
    add("laguerre/identity:classical-equation", "[L_2^g + n] L_n^g = 0");
    add("laguerre/identity:weighted-derivative", "(e^{-x} L_n^g)' = -e^{-x} L_n^{g+1} and (x^g L_n^g)' = (n+g) x^{g-1} L_n^{g-1}");
    add("laguerre/identity:relations", "L_n^g' = -L_{n-1}^{g+1}, L_n^g = L_n^{g+1} - L_{n-1}^{g+1}, x L_n^g = (n+g) L_n^{g-1} - (n+1) L_{n+1}^{g-1}");
    for repr in JacHigherRepr::ALL.into_iter().filter(|r| *r != JacHigherRepr::Direct) {
        add(&format!("jacobi/equiv:{repr}"), "Jacobi-type operator built from this representation equals the direct weighted form");
    }
    add("jacobi/eigen:combined", "{[L_2 - Lambda_2] + N/b [L_{2a+4} - Lambda_{2a+4}]} P_n^{a,b,0,N} = 0 with b = (a+2)! (b+1)_{a+1}");
    add("jacobi/eigen:r-component", "[L_{2a+4} - (n)_{a+2} (n+b)_{a+2}] R_n = 0 (inferred from the split of the eigen-equation)");
    add("jacobi/eigen:leading-term", "leading coefficients of L_2 x^n and L_{2a+4} x^n are n(n+a+b+1) and (n)_{a+2} (n+b)_{a+2}");
    add("jacobi/eigen:confluence", "Lambda_2/b -> n and Lambda_{2a+4}/(b b_{a,b}) -> (n)_{a+2}/(a+2)! with error O(1/b)");
    add("jacobi/identity:second-order-forms", "(x^2-1)D^2 + [a-b+(a+b+2)x]D = (x-1)^{-a}(x+1)^{-b} D (x-1)^{a+1}(x+1)^{b+1} D");
    for repr in BesselHigherRepr::ALL.into_iter().filter(|r| *r != BesselHigherRepr::Explicit) {
        add(&format!("bessel/equiv:{repr}"), "Bessel-type operator built from this representation equals the explicit A_i form");
    }
    add("bessel/equiv:anchor", "A^0 = (9, -9, 2, 1) and A_{2a+4}^a = 1");
    add("bessel/eigen:full", "{[L_2 + l2] + M/(2^{2a+2}(a+2)!) [L_{2a+4} + l2^{a+2}]} J^{a,M} = 0 through x^{2K-2a-4}");
    add("bessel/eigen:k-component", "[L_{2a+4} + l2^{a+2}] K^a = 0 through x^{2K-2a-4}");
    add("bessel/identity:delta-power", "(x^{-1}D)^{2b} x^{2b} = [D^2 + (2b+1)/x D]^b");
    add("bessel/identity:shift", "x^2 [D^2 + (2a+5)/x D] x^{-2} = D^2 + (2a+1)/x D - (4a+4)/x^2");
    add("bessel/identity:second-order-forms", "D^2 + (2a+1)/x D = x^{-2a-1} D x^{2a+1} D");
    add("bessel/identity:bessel-equation", "[D^2 + (2a+1)/x D + l2] J^a = 0");
    add("bessel/identity:bessel-derivative", "x^{-1}D J^g = -l2/(2(g+1)) J^{g+1} and x^{-1}D[x^{2g} J^g] = 2g x^{2g-2} J^{g-1}");
    m
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..=SYMMETRY_DEGREE);
    Poly::new(
        (0..=deg)
            .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
            .collect(),
    )
}

pub fn generate(config: &Config) -> Vec<Case> {
    let mut b = Builder { cases: Vec::new() };
    for &family in &config.families {
        for &suite in &config.suites {
            match family {
                Family::Laguerre => laguerre(&mut b, config, suite),
                Family::Jacobi => jacobi(&mut b, config, suite),
                Family::Bessel => bessel(&mut b, config, suite),
            }
        }
    }
    b.cases
}

fn laguerre(b: &mut Builder, c: &Config, suite: Suite) {
    let f = Family::Laguerre;
    let alphas = c.alpha_range(f, suite);
    match suite {
        Suite::Equiv => {
            for alpha in alphas.clone() {
                for repr in HigherRepr::ALL.into_iter().filter(|r| *r != HigherRepr::Koekoek) {
                    b.push(f, format!("equiv:{repr}"), &[("alpha", alpha.to_string())], Job::LagEquiv { alpha, repr });
                }
            }
            if alphas.contains(&0) {
                b.push(f, "equiv:anchor", &[("alpha", "0".into())], Job::LagAnchor);
            }
        }
        Suite::Eigen => {
            let masses = c.masses_or(&[int(0), int(1), ratio(1, 2), ratio(7, 3)]);
            let n_max = c.n_max_or(10);
            for alpha in alphas {
                for kind in ResidualKind::ALL {
                    let ms = if kind == ResidualKind::Combined { masses.clone() } else { vec![int(0)] };
                    for mass in ms {
                        for n in 0..=n_max {
                            let mut p = vec![("alpha", alpha.to_string()), ("n", n.to_string())];
                            if kind == ResidualKind::Combined {
                                p.push(("mass", r(&mass)));
                            }
                            b.push(f, format!("eigen:{}", kind.name()), &p, Job::LagEigen { kind, alpha, mass: mass.clone(), n });
                        }
                    }
                }
                for mass in &masses {
                    b.push(
                        f,
                        "eigen:monotone",
                        &[("alpha", alpha.to_string()), ("mass", r(mass)), ("n_max", n_max.to_string())],
                        Job::LagMonotone { alpha, mass: mass.clone(), n_max },
                    );
                }
            }
        }
        Suite::Symmetry => {
            let masses = c.masses_or(&[int(0), int(1), ratio(1, 3), ratio(9, 4)]);
            let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
            for alpha in alphas {
                for mass in &masses {
                    for k in 0..SYMMETRY_PAIRS {
                        let (fp, gp) = (random_poly(&mut rng), random_poly(&mut rng));
                        let p = [
                            ("alpha", alpha.to_string()),
                            ("mass", r(mass)),
                            ("pair", k.to_string()),
                            ("f", fp.to_string()),
                            ("g", gp.to_string()),
                        ];
                        let mass = mass.clone();
                        if k % 10 == 0 {
                            let job = Job::LagSpectralForm { alpha, mass: mass.clone(), f: fp.clone(), g: gp.clone() };
                            b.push(f, "symmetry:spectral-form", &p, job);
                        }
                        b.push(f, "symmetry:combined", &p, Job::LagSymmetry { alpha, mass, f: fp, g: gp });
                    }
                }
            }
        }
        Suite::Gram => {
            let masses = c.masses_or(&[int(1), ratio(1, 2)]);
            let n_max = c.n_max_or(10);
            for alpha in alphas.clone() {
                for mass in &masses {
                    b.push(
                        f,
                        "gram:orthogonality",
                        &[("alpha", alpha.to_string()), ("mass", r(mass)), ("n_max", n_max.to_string())],
                        Job::LagGram { alpha, mass: mass.clone(), n_max },
                    );
                }
            }
            if alphas.contains(&0) && c.mass.is_none() {
                b.push(f, "gram:h1-anchor", &[("alpha", "0".into()), ("mass", "1".into())], Job::LagGramAnchor);
            }
        }
        Suite::Identities => {
            for alpha in alphas.clone() {
                b.push(f, "identity:product-swap", &[("alpha", alpha.to_string())], Job::LagProductSwap { alpha });
                for j in 1..=6 {
                    b.push(
                        f,
                        "identity:commutation",
                        &[("alpha", alpha.to_string()), ("j", j.to_string())],
                        Job::LagCommutation { alpha, j },
                    );
                }
            }
            for j in 1..=6 {
                b.push(f, "identity:commutation-minus-one", &[("j", j.to_string())], Job::LagCommutationMinusOne { j });
            }
            let n_max = c.n_max_or(8);
            for gamma in 0..=6i64 {
                b.push(f, "identity:second-order-forms", &[("gamma", gamma.to_string())], Job::LagSecondOrderForms { gamma });
                for n in 0..=n_max {
                    let p = [("gamma", gamma.to_string()), ("n", n.to_string())];
                    b.push(f, "identity:classical-equation", &p, Job::LagClassicalEquation { n, gamma });
                    b.push(f, "identity:weighted-derivative", &p, Job::LagWeightedDerivative { n, gamma });
                    b.push(f, "identity:relations", &p, Job::LagRelations { n, gamma });
                }
            }
        }
    }
}

fn jacobi(b: &mut Builder, c: &Config, suite: Suite) {
    let f = Family::Jacobi;
    let alphas = c.alpha_range(f, suite);
    let betas = c.betas_or(&[int(0), ratio(1, 2), int(1), ratio(5, 3)]);
    match suite {
        Suite::Equiv => {
            for alpha in alphas {
                for beta in &betas {
                    for repr in JacHigherRepr::ALL.into_iter().filter(|r| *r != JacHigherRepr::Direct) {
                        b.push(
                            f,
                            format!("equiv:{repr}"),
                            &[("alpha", alpha.to_string()), ("beta", r(beta))],
                            Job::JacEquiv { alpha, beta: beta.clone(), repr },
                        );
                    }
                }
            }
        }
        Suite::Eigen => {
            let masses = c.masses_or(&[int(0), int(1), ratio(3, 7)]);
            let n_max = c.n_max_or(8);
            for alpha in alphas.clone() {
                for beta in &betas {
                    for n in 0..=n_max {
                        for mass in &masses {
                            b.push(
                                f,
                                "eigen:combined",
                                &[("alpha", alpha.to_string()), ("beta", r(beta)), ("mass", r(mass)), ("n", n.to_string())],
                                Job::JacEigen { alpha, beta: beta.clone(), mass: mass.clone(), n },
                            );
                        }
                        let p = [("alpha", alpha.to_string()), ("beta", r(beta)), ("n", n.to_string())];
                        b.push(f, "eigen:r-component", &p, Job::JacRComponent { alpha, beta: beta.clone(), n });
                        b.push(f, "eigen:leading-term", &p, Job::JacLeadingTerm { alpha, beta: beta.clone(), n });
                    }
                }
            }
            for alpha in alphas {
                for n in 1..=n_max.max(1) {
                    b.push(
                        f,
                        "eigen:confluence",
                        &[("alpha", alpha.to_string()), ("n", n.to_string())],
                        Job::JacConfluence { alpha, n },
                    );
                }
            }
        }
        Suite::Identities => {
            for alpha in alphas {
                for beta in &betas {
                    b.push(
                        f,
                        "identity:second-order-forms",
                        &[("alpha", alpha.to_string()), ("beta", r(beta))],
                        Job::JacSecondOrderForms { alpha, beta: beta.clone() },
                    );
                }
            }
        }
        Suite::Symmetry | Suite::Gram => {}
    }
}

fn bessel(b: &mut Builder, c: &Config, suite: Suite) {
    let f = Family::Bessel;
    let alphas = c.alpha_range(f, suite);
    let lambda2s = c.lambda2s_or(&[int(1), int(4), ratio(9, 4)]);
    match suite {
        Suite::Equiv => {
            for alpha in alphas {
                for repr in BesselHigherRepr::ALL.into_iter().filter(|r| *r != BesselHigherRepr::Explicit) {
                    b.push(f, format!("equiv:{repr}"), &[("alpha", alpha.to_string())], Job::BesEquiv { alpha, repr });
                }
                b.push(f, "equiv:anchor", &[("alpha", alpha.to_string())], Job::BesAnchor { alpha });
            }
        }
        Suite::Eigen => {
            let masses = c.masses_or(&[int(0), int(1), ratio(3, 5)]);
            for alpha in alphas {
                let truncation = c.truncation.unwrap_or(2 * i64::from(alpha) + 12);
                for lambda2 in &lambda2s {
                    for kind in BesselResidualKind::ALL {
                        let ms = if kind == BesselResidualKind::Full { masses.clone() } else { vec![int(0)] };
                        for mass in ms {
                            let mut p = vec![
                                ("alpha", alpha.to_string()),
                                ("lambda2", r(lambda2)),
                                ("truncation", truncation.to_string()),
                            ];
                            if kind == BesselResidualKind::Full {
                                p.push(("mass", r(&mass)));
                            }
                            b.push(
                                f,
                                format!("eigen:{}", kind.name()),
                                &p,
                                Job::BesResidual { kind, alpha, mass, lambda2: lambda2.clone(), truncation },
                            );
                        }
                    }
                }
            }
        }
        Suite::Identities => {
            for a in alphas {
                b.push(f, "identity:delta-power", &[("beta", a.to_string())], Job::BesDeltaPower { beta: a });
                b.push(f, "identity:shift", &[("alpha", a.to_string())], Job::BesShift { alpha: a });
                b.push(f, "identity:second-order-forms", &[("alpha", a.to_string())], Job::BesSecondOrderForms { alpha: a });
                let truncation = c.truncation.unwrap_or(12);
                for lambda2 in &lambda2s {
                    let p = [("alpha", a.to_string()), ("lambda2", r(lambda2)), ("truncation", truncation.to_string())];
                    b.push(f, "identity:bessel-equation", &p, Job::BesEquation { alpha: a, lambda2: lambda2.clone(), truncation });
                    let p = [("gamma", a.to_string()), ("lambda2", r(lambda2)), ("truncation", truncation.to_string())];
                    b.push(f, "identity:bessel-derivative", &p, Job::BesDerivative { gamma: a, lambda2: lambda2.clone(), truncation });
                }
            }
        }
        Suite::Symmetry | Suite::Gram => {}
    }
}
