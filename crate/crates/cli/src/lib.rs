//! Document shapes and renderers behind the `ellgw` binary.
//!
//! Every emitted document is one of three shapes — a coefficient list, a
//! row table, or a verification report set — rendered as plain text, CSV
//! (header row, UTF-8, LF line endings), or JSON (a top-level object
//! `{name, order, coefficients | rows, verdict?}`). Rationals are always
//! serialized as exact strings like `-1/24`; no format ever sees a float.

use serde::{Deserialize, Serialize};

use ellgw::Series;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// A named series document: `{name, order, coefficients}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub name: String,
    pub order: usize,
    pub coefficients: Series,
}

impl SeriesDoc {
    pub fn new(name: impl Into<String>, series: Series) -> Self {
        SeriesDoc {
            name: name.into(),
            order: series.order(),
            coefficients: series,
        }
    }
}

/// A named row table: `{name, order, rows}`.
#[derive(Clone, Debug, Serialize)]
pub struct TableDoc<R: Serialize> {
    pub name: String,
    pub order: usize,
    pub rows: Vec<R>,
}

/// Canonical JSON emission: pretty-printed with a trailing newline.
/// Parsing an emitted document and re-emitting it through this function
/// yields byte-identical output.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize infallibly");
    s.push('\n');
    s
}

pub fn render_series(doc: &SeriesDoc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(doc),
        OutputFormat::Csv => {
            let mut out = String::from("d,coefficient\n");
            for (d, c) in doc.coefficients.coeffs().iter().enumerate() {
                out.push_str(&format!("{d},{c}\n"));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for (d, c) in doc.coefficients.coeffs().iter().enumerate() {
                out.push_str(&format!("{d}\t{c}\n"));
            }
            out
        }
    }
}

/// Renders a row table; `columns` drive the CSV header and the text
/// layout, and each row must supply exactly one cell per column.
pub fn render_table(
    name: &str,
    order: usize,
    columns: &[&str],
    rows: &[Vec<String>],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_owned(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            to_json(&serde_json::json!({
                "name": name,
                "order": order,
                "rows": json_rows,
            }))
        }
        OutputFormat::Csv => {
            let mut out = columns.join(",");
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => {
            let mut out = columns.join("\t");
            out.push('\n');
            for row in rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
            out
        }
    }
}

/// Renders the verification reports plus a closing verdict. Text output is
/// one PASS/FAIL line per check.
pub fn render_verify(
    reports: &[ellgw::VerificationReport],
    order: usize,
    format: OutputFormat,
) -> String {
    let verdict = if ellgw::all_passed(reports) {
        "pass"
    } else {
        "fail"
    };
    match format {
        OutputFormat::Json => to_json(&serde_json::json!({
            "name": "verify",
            "order": order,
            "verdict": verdict,
            "rows": reports,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("name,order,verdict,detail\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.name,
                    r.order,
                    if r.passed { "pass" } else { "fail" },
                    r.detail.as_deref().unwrap_or("").replace(',', ";"),
                ));
            }
            out.push_str(&format!("total,{order},{verdict},\n"));
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                match (&r.detail, r.passed) {
                    (Some(detail), false) => out.push_str(&format!(
                        "{status} {} (order {}): {detail}\n",
                        r.name, r.order
                    )),
                    _ => out.push_str(&format!("{status} {} (order {})\n", r.name, r.order)),
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            out.push_str(&format!(
                "verdict: {verdict} ({passed}/{} checks passed)\n",
                reports.len()
            ));
            out
        }
    }
}

/// Renders the doubling verification report: one row per residual or
/// flag, plus the overall verdict.
pub fn render_doubling_report(report: &ellgw::DoublingReport, format: OutputFormat) -> String {
    let series_row = |component: &str, s: &Series| -> Vec<String> {
        match s.first_nonzero() {
            None => vec![
                component.to_owned(),
                "pass".to_owned(),
                String::new(),
                String::new(),
            ],
            Some(m) => vec![
                component.to_owned(),
                "fail".to_owned(),
                m.to_string(),
                s.coeff(m).to_string(),
            ],
        }
    };
    let mut rows = vec![
        series_row("modular-residual", &report.modular_residual),
        series_row("substituted-ode-residual", &report.substituted_ode_residual),
        series_row("ode-residual", &report.ode_residual),
        series_row("difference", &report.difference),
        vec![
            "odd-coefficients-zero".to_owned(),
            if report.odd_coefficients_zero {
                "pass"
            } else {
                "fail"
            }
            .to_owned(),
            String::new(),
            String::new(),
        ],
        vec![
            "even-genus2-difference".to_owned(),
            "assumed".to_owned(),
            String::new(),
            String::new(),
        ],
    ];
    let verdict = if report.passed { "pass" } else { "fail" };
    let columns = [
        "component",
        "status",
        "first_nonzero_power",
        "first_nonzero_value",
    ];
    match format {
        OutputFormat::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let map: serde_json::Map<String, serde_json::Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_owned(), serde_json::Value::String(v.clone())))
                        .collect();
                    serde_json::Value::Object(map)
                })
                .collect();
            to_json(&serde_json::json!({
                "name": "doubling-report",
                "order": report.order,
                "verdict": verdict,
                "rows": json_rows,
            }))
        }
        OutputFormat::Csv | OutputFormat::Text => {
            rows.push(vec![
                "total".to_owned(),
                verdict.to_owned(),
                String::new(),
                String::new(),
            ]);
            render_table("doubling-report", report.order, &columns, &rows, format)
        }
    }
}
