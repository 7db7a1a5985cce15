use std::collections::BTreeMap;

use serde::Serialize;

use crate::cases::check_descriptions;
use crate::config::{Config, ConfigEcho, Family};
use crate::runner::Evaluated;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub family: Family,
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    /// Check id (`family/check`) to the identity it verifies.
    pub checks: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub total_micros: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub config: ConfigEcho,
    pub seed: u64,
    pub metadata: Metadata,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    /// Present only when timing was requested, so default reports are reproducible byte for byte.
    pub timing: Option<Timing>,
}

impl Report {
    pub fn build(config: &Config, evaluated: Vec<Evaluated>, total_micros: Option<u64>) -> Report {
        let all = check_descriptions();
        let mut used = BTreeMap::new();
        let cases: Vec<CaseReport> = evaluated
            .into_iter()
            .map(|e| {
                let key = format!("{}/{}", e.case.family, e.case.check);
                if let Some(d) = all.get(&key) {
                    used.insert(key, d.clone());
                }
                CaseReport {
                    family: e.case.family,
                    check: e.case.check,
                    params: e.case.params,
                    outcome: if e.verdict.pass { Outcome::Pass } else { Outcome::Fail },
                    witness: e.verdict.witness,
                    detail: e.verdict.detail,
                    micros: e.micros,
                }
            })
            .collect();
        let fail = cases.iter().filter(|c| c.outcome == Outcome::Fail).count();
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.echo(),
            seed: config.seed,
            metadata: Metadata { checks: used },
            summary: Summary { pass: cases.len() - fail, fail },
            cases,
            timing: total_micros.map(|total_micros| Timing { total_micros }),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per case; parameters are flattened into `key=value` pairs.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["family", "check", "params", "outcome", "witness", "detail", "micros"])
            .expect("in-memory write");
        for c in &self.cases {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let outcome = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "fail",
            };
            w.write_record([
                c.family.name(),
                &c.check,
                &params.join(";"),
                outcome,
                c.witness.as_deref().unwrap_or(""),
                c.detail.as_deref().unwrap_or(""),
                &c.micros.map(|m| m.to_string()).unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
