use ltype::bessel;
use ltype::exact::{format_rational, int, Poly};
use ltype::jacobi::{self, JacHigherRepr};
use ltype::laguerre;
use ltype::Rational;
use serde::Serialize;

use crate::config::{Family, Format};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    /// Koekoek coefficients `d_i^α(x)` (Laguerre).
    D,
    /// Polynomial parts of the symmetric-form weights `b_k^α` (Laguerre).
    B,
    /// Explicit coefficients `A_i^α` (Bessel).
    A,
    /// Coefficients of the direct higher-order operator (Jacobi).
    Operator,
}

impl Table {
    pub fn default_for(family: Family) -> Table {
        match family {
            Family::Laguerre => Table::D,
            Family::Jacobi => Table::Operator,
            Family::Bessel => Table::A,
        }
    }
}

/// One row: a polynomial as degree-indexed coefficients, or a single number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableDocument {
    pub family: Family,
    pub table: Table,
    pub alpha: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    pub rows: Vec<Row>,
}

fn poly_row(index: usize, p: &Poly) -> Row {
    Row { index, coeffs: Some(p.coeffs().iter().map(format_rational).collect()), value: None }
}

pub fn coefficient_table(
    family: Family,
    table: Option<Table>,
    alpha: u32,
    beta: Option<&Rational>,
) -> Result<TableDocument, CliError> {
    let table = table.unwrap_or(Table::default_for(family));
    let rows = match (family, table) {
        (Family::Laguerre, Table::D) => {
            laguerre::koekoek_coefficients(alpha).iter().map(|(i, p)| poly_row(*i, p)).collect()
        }
        (Family::Laguerre, Table::B) => {
            laguerre::symmetric_weights(alpha).iter().map(|(k, p)| poly_row(*k, p)).collect()
        }
        (Family::Bessel, Table::A) => bessel::a_table(alpha)
            .map_err(|e| CliError::Config(e.to_string()))?
            .into_iter()
            .map(|(i, a)| Row { index: i, coeffs: None, value: Some(format_rational(&a)) })
            .collect(),
        (Family::Jacobi, Table::Operator) => {
            let b = beta.cloned().unwrap_or_else(|| int(0));
            let op = jacobi::higher_order(alpha, &b, JacHigherRepr::Direct).map_err(|e| CliError::Config(e.to_string()))?;
            let coeffs = op
                .polynomial_coefficients()
                .ok_or_else(|| CliError::Config("operator has non-polynomial coefficients".into()))?;
            coeffs.iter().map(|(i, p)| poly_row(*i, p)).collect()
        }
        (f, t) => {
            return Err(CliError::Config(format!("no table {t:?} for family {f}")));
        }
    };
    let beta = (family == Family::Jacobi).then(|| format_rational(&beta.cloned().unwrap_or_else(|| int(0))));
    Ok(TableDocument { family, table, alpha, beta, rows })
}

impl TableDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("table serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["index", "degree", "value"]).expect("in-memory write");
                for row in &self.rows {
                    let index = row.index.to_string();
                    match (&row.coeffs, &row.value) {
                        (Some(cs), _) => {
                            for (d, c) in cs.iter().enumerate() {
                                w.write_record([index.as_str(), &d.to_string(), c]).expect("in-memory write");
                            }
                        }
                        (None, Some(v)) => w.write_record([index.as_str(), "", v]).expect("in-memory write"),
                        (None, None) => {}
                    }
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
        }
    }
}
