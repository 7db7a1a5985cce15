//! Acceptance suite: one PASS/FAIL line per criterion, all at zero tolerance.
//!
//! Criteria 1 to 9 are judged from a single `ltype verify all` report produced
//! by the built binary; criterion 10 checks the process contract and sweeps
//! single-coefficient corruptions of the Koekoek table.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::Instant;

use ltype_cli::config::{Config, Family, GridArgs, Mutation, Suite, DEFAULT_SEED};
use ltype_cli::report::Outcome;
use serde_json::Value;

struct Case {
    family: String,
    check: String,
    params: BTreeMap<String, String>,
    pass: bool,
    witness: Option<String>,
}

fn load(report: &Value) -> Vec<Case> {
    report["cases"]
        .as_array()
        .expect("cases array")
        .iter()
        .map(|c| Case {
            family: c["family"].as_str().unwrap().to_string(),
            check: c["check"].as_str().unwrap().to_string(),
            params: c["params"]
                .as_object()
                .unwrap()
                .iter()
                .map(|(k, v)| (k.clone(), v.as_str().unwrap().to_string()))
                .collect(),
            pass: c["outcome"] == "pass",
            witness: c["witness"].as_str().map(str::to_string),
        })
        .collect()
}

/// Required grid for one check id: each listed parameter must take every listed value.
struct Requirement<'a> {
    family: &'a str,
    check: &'a str,
    grid: Vec<(&'a str, Vec<String>)>,
}

fn req<'a>(family: &'a str, check: &'a str, grid: &[(&'a str, Vec<String>)]) -> Requirement<'a> {
    Requirement { family, check, grid: grid.to_vec() }
}

fn range(lo: u32, hi: u32) -> Vec<String> {
    (lo..=hi).map(|v| v.to_string()).collect()
}

fn vals(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// All selected cases pass and cover their grids; returns the number of cases.
fn judge(cases: &[Case], reqs: &[Requirement]) -> Result<usize, String> {
    let mut total = 0;
    for r in reqs {
        let selected: Vec<&Case> = cases.iter().filter(|c| c.family == r.family && c.check == r.check).collect();
        if selected.is_empty() {
            return Err(format!("no {}/{} cases", r.family, r.check));
        }
        if let Some(bad) = selected.iter().find(|c| !c.pass) {
            return Err(format!(
                "{}/{} {:?}: {}",
                r.family,
                r.check,
                bad.params,
                bad.witness.as_deref().unwrap_or("no witness")
            ));
        }
        for (key, want) in &r.grid {
            let have: BTreeSet<&str> = selected.iter().filter_map(|c| c.params.get(*key).map(String::as_str)).collect();
            if let Some(missing) = want.iter().find(|w| !have.contains(w.as_str())) {
                return Err(format!("{}/{} misses {key} = {missing}", r.family, r.check));
            }
        }
        total += selected.len();
    }
    Ok(total)
}

fn line(n: u32, title: &str, result: Result<String, String>) -> bool {
    match result {
        Ok(d) => {
            println!("criterion {n:>2} PASS  {title}: {d}");
            true
        }
        Err(e) => {
            println!("criterion {n:>2} FAIL  {title}: {e}");
            false
        }
    }
}

fn exact(r: Result<usize, String>) -> Result<String, String> {
    r.map(|n| format!("{n} cases exact"))
}

fn criterion_1(cases: &[Case]) -> Result<String, String> {
    let reprs = [
        "equiv:symmetric",
        "equiv:elementary",
        "equiv:factored-a",
        "equiv:factored-a-conj",
        "equiv:factored-b",
        "equiv:factored-b-conj",
        "equiv:duran",
        "equiv:bavinck",
        "equiv:recurrence",
    ];
    let reqs: Vec<_> = reprs.iter().map(|c| req("laguerre", c, &[("alpha", range(0, 6))])).collect();
    exact(judge(cases, &reqs))
}

fn criterion_2(cases: &[Case]) -> Result<String, String> {
    exact(judge(cases, &[req("laguerre", "equiv:anchor", &[("alpha", vals(&["0"]))])]))
}

fn criterion_3(cases: &[Case]) -> Result<String, String> {
    let grid = [("alpha", range(0, 4)), ("n", range(0, 10))];
    let mut reqs: Vec<_> = ["eigen:t-component", "eigen:split", "eigen:t-second-order", "eigen:l-higher-order"]
        .iter()
        .map(|c| req("laguerre", c, &grid))
        .collect();
    reqs.push(req(
        "laguerre",
        "eigen:combined",
        &[("alpha", range(0, 4)), ("n", range(0, 10)), ("mass", vals(&["0", "1", "1/2", "7/3"]))],
    ));
    exact(judge(cases, &reqs))
}

fn criterion_4(cases: &[Case]) -> Result<String, String> {
    exact(judge(
        cases,
        &[
            req("laguerre", "identity:product-swap", &[("alpha", range(0, 5))]),
            req("laguerre", "identity:commutation", &[("alpha", range(0, 5)), ("j", range(1, 6))]),
            req("laguerre", "identity:commutation-minus-one", &[("j", range(1, 6))]),
        ],
    ))
}

fn criterion_5(cases: &[Case]) -> Result<String, String> {
    let masses = vals(&["0", "1", "1/3", "9/4"]);
    let n = judge(cases, &[req("laguerre", "symmetry:combined", &[("alpha", range(0, 4)), ("mass", masses.clone())])])?;
    let mut per_cell: BTreeMap<(String, String), usize> = BTreeMap::new();
    for c in cases.iter().filter(|c| c.check == "symmetry:combined") {
        *per_cell.entry((c.params["alpha"].clone(), c.params["mass"].clone())).or_default() += 1;
    }
    let thin = per_cell.iter().find(|(_, &k)| k < 50);
    if let Some(((a, m), k)) = thin {
        return Err(format!("cell alpha={a} mass={m} has only {k} pairs"));
    }
    let min = per_cell.values().min().copied().unwrap_or(0);
    Ok(format!("{n} pairs exact over {} cells, at least {min} per cell", per_cell.len()))
}

fn criterion_6(cases: &[Case]) -> Result<String, String> {
    exact(judge(
        cases,
        &[
            req("laguerre", "gram:orthogonality", &[("alpha", range(0, 3)), ("mass", vals(&["1", "1/2"])), ("n_max", vals(&["10"]))]),
            req("laguerre", "gram:h1-anchor", &[("alpha", vals(&["0"])), ("mass", vals(&["1"]))]),
        ],
    ))
}

fn criterion_7(cases: &[Case]) -> Result<String, String> {
    let betas = vals(&["0", "1/2", "1", "5/3"]);
    let rep = |c| req("jacobi", c, &[("alpha", range(0, 4)), ("beta", betas.clone())]);
    let mut reqs: Vec<_> = ["equiv:factored-a", "equiv:factored-a-conj", "equiv:factored-b", "equiv:factored-b-conj"]
        .into_iter()
        .map(rep)
        .collect();
    reqs.push(req(
        "jacobi",
        "eigen:combined",
        &[("alpha", range(0, 4)), ("beta", betas.clone()), ("mass", vals(&["0", "1", "3/7"])), ("n", range(0, 8))],
    ));
    reqs.push(req("jacobi", "eigen:r-component", &[("alpha", range(0, 4)), ("beta", betas.clone()), ("n", range(0, 8))]));
    reqs.push(req("jacobi", "eigen:leading-term", &[("alpha", range(0, 4)), ("beta", betas.clone()), ("n", range(0, 8))]));
    reqs.push(req("jacobi", "eigen:confluence", &[("alpha", range(0, 4))]));
    reqs.push(rep("identity:second-order-forms"));
    exact(judge(cases, &reqs))
}

fn criterion_8(cases: &[Case]) -> Result<String, String> {
    let lambdas = vals(&["1", "4", "9/4"]);
    let windows: Vec<String> = (0..=3).map(|a: u32| (2 * a + 12).to_string()).collect();
    exact(judge(
        cases,
        &[
            req("bessel", "equiv:nested-delta", &[("alpha", range(0, 6))]),
            req("bessel", "equiv:laurent-power", &[("alpha", range(0, 6))]),
            req("bessel", "equiv:anchor", &[("alpha", range(0, 6))]),
            req(
                "bessel",
                "eigen:full",
                &[
                    ("alpha", range(0, 3)),
                    ("lambda2", lambdas.clone()),
                    ("mass", vals(&["0", "1", "3/5"])),
                    ("truncation", windows.clone()),
                ],
            ),
            req("bessel", "eigen:k-component", &[("alpha", range(0, 3)), ("lambda2", lambdas), ("truncation", windows)]),
            req("bessel", "identity:delta-power", &[("beta", range(0, 6))]),
            req("bessel", "identity:shift", &[("alpha", range(0, 6))]),
            req("bessel", "identity:second-order-forms", &[("alpha", range(0, 6))]),
        ],
    ))
}

fn criterion_9(cases: &[Case]) -> Result<String, String> {
    let lag = [("gamma", range(0, 6)), ("n", range(0, 8))];
    exact(judge(
        cases,
        &[
            req("laguerre", "identity:second-order-forms", &[("gamma", range(0, 6))]),
            req("laguerre", "identity:classical-equation", &lag),
            req("laguerre", "identity:weighted-derivative", &lag),
            req("laguerre", "identity:relations", &lag),
            req("bessel", "identity:bessel-equation", &[("alpha", range(0, 6))]),
            req("bessel", "identity:bessel-derivative", &[("gamma", range(0, 6))]),
        ],
    ))
}

fn mutation_config(m: Mutation) -> Config {
    let args = GridArgs {
        family: Some(Family::Laguerre),
        alpha: Some(m.alpha),
        seed: DEFAULT_SEED,
        mutate_koekoek: Some(m),
        ..GridArgs::default()
    };
    Config::new(vec![Suite::Equiv, Suite::Eigen], args).expect("valid mutation config")
}

fn criterion_10(all_exit: Option<i32>) -> Result<String, String> {
    if all_exit != Some(0) {
        return Err(format!("verify all exited with {all_exit:?}"));
    }
    let bin = env!("CARGO_BIN_EXE_ltype");
    let out = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
    let status = Command::new(bin)
        .args(["verify", "equiv", "--family", "laguerre", "--alpha", "0", "--mutate-koekoek", "0:2:1", "--out"])
        .arg(out.path())
        .status()
        .map_err(|e| e.to_string())?;
    if status.code() != Some(1) {
        return Err(format!("mutated run exited with {:?}", status.code()));
    }
    let text = std::fs::read_to_string(out.path()).map_err(|e| e.to_string())?;
    let report: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if !load(&report).iter().any(|c| !c.pass && c.witness.as_deref().is_some_and(|w| !w.is_empty())) {
        return Err("mutated process run reported no failing witness".into());
    }
    let mut sweeps = 0;
    for alpha in 0..=1u32 {
        for order in 1..=(2 * alpha as usize + 4) {
            for power in 0..=(alpha as usize + 2) {
                let m = Mutation { alpha, order, power };
                let report = ltype_cli::verify(&mutation_config(m));
                let caught = report
                    .cases
                    .iter()
                    .any(|c| c.outcome == Outcome::Fail && c.witness.as_deref().is_some_and(|w| !w.is_empty()));
                if !caught || report.all_pass() {
                    return Err(format!("mutation {m} went undetected"));
                }
                sweeps += 1;
            }
        }
    }
    Ok(format!("verify all exits 0; mutated process exits 1; {sweeps} single-coefficient mutations all detected"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_ltype");
    let out = tempfile::NamedTempFile::new().expect("temp file");
    let status = Command::new(bin).args(["verify", "all", "--out"]).arg(out.path()).status().expect("run ltype");
    let text = std::fs::read_to_string(out.path()).expect("read report");
    let report: Value = serde_json::from_str(&text).expect("report is JSON");
    let cases = load(&report);

    let results = [
        line(1, "Laguerre representation equivalence", criterion_1(&cases)),
        line(2, "alpha = 0 anchor operator", criterion_2(&cases)),
        line(3, "Laguerre eigen-identities", criterion_3(&cases)),
        line(4, "Laguerre operator identities", criterion_4(&cases)),
        line(5, "symmetry on random polynomial pairs", criterion_5(&cases)),
        line(6, "Gram orthogonality and h_1 anchor", criterion_6(&cases)),
        line(7, "Jacobi-type operators", criterion_7(&cases)),
        line(8, "Bessel-type operators and series", criterion_8(&cases)),
        line(9, "classical identity suite", criterion_9(&cases)),
        line(10, "CLI contract and mutation detection", criterion_10(status.code())),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria pass in {:.1}s", results.len(), start.elapsed().as_secs_f64());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
