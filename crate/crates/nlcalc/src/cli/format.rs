//! Output rendering: aligned tables, CSV with header rows, and versioned
//! JSON documents. All renderers are deterministic: the same inputs yield
//! byte-identical output.

use serde::Serialize;

use crate::nl::{AuditRow, NLReport};

/// Output format selector shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Human-readable aligned columns.
    Table,
    /// Comma-separated values with a header row.
    Csv,
    /// A versioned JSON document (`"schema": 1`).
    Json,
}

/// Left-aligns `rows` under `header` with two-space column separation.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(ncols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate().take(ncols) {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < ncols {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    emit(&mut out, &header_cells);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn csv_line(cells: &[String]) -> String {
    let mut line = cells.join(",");
    line.push('\n');
    line
}

/// Serializes a document as pretty JSON with a trailing newline.
pub fn render_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serialization cannot fail");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Codimension reports
// ---------------------------------------------------------------------------

pub const REPORT_CSV_HEADER: [&str; 13] = [
    "family",
    "k",
    "r",
    "d",
    "ideal_codim",
    "family_dim",
    "family_dim_provenance",
    "nl_codim",
    "gh_bound",
    "slack",
    "verdict",
    "certified",
    "seed",
];

fn report_cells(rep: &NLReport) -> Vec<String> {
    vec![
        rep.family.clone(),
        rep.k.to_string(),
        rep.r.to_string(),
        rep.d.to_string(),
        rep.ideal_codim.to_string(),
        rep.family_dim.to_string(),
        rep.family_dim_provenance.as_str().to_string(),
        rep.nl_codim.to_string(),
        rep.gh_bound.to_string(),
        rep.slack.to_string(),
        rep.verdict.as_str().to_string(),
        rep.certified.to_string(),
        rep.seed.map(|s| s.to_string()).unwrap_or_default(),
    ]
}

/// CSV for a list of reports: header plus one row per report. A missing seed
/// (custom arrangements) renders as an empty field.
pub fn reports_csv(reports: &[NLReport]) -> String {
    let mut out = csv_line(
        &REPORT_CSV_HEADER
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>(),
    );
    for rep in reports {
        out.push_str(&csv_line(&report_cells(rep)));
    }
    out
}

/// Aligned table for a list of reports.
pub fn reports_table(reports: &[NLReport]) -> String {
    let rows: Vec<Vec<String>> = reports.iter().map(report_cells).collect();
    render_table(&REPORT_CSV_HEADER, &rows)
}

/// A single report as a versioned JSON document.
#[derive(Serialize)]
pub struct ReportDoc<'a> {
    pub schema: u32,
    #[serde(flatten)]
    pub report: &'a NLReport,
}

/// Counts of verdicts across a verification sweep.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub equality: usize,
    pub strict: usize,
    pub violations: usize,
    pub equality_failures: usize,
    pub uncertified: usize,
}

impl SweepSummary {
    pub fn render(&self) -> String {
        format!(
            "total={} equality={} strict={} violations={} equality_failures={} uncertified={}\n",
            self.total,
            self.equality,
            self.strict,
            self.violations,
            self.equality_failures,
            self.uncertified
        )
    }
}

/// A verification sweep as a versioned JSON document.
#[derive(Serialize)]
pub struct SweepDoc<'a> {
    pub schema: u32,
    pub reports: &'a [NLReport],
    pub summary: &'a SweepSummary,
}

// ---------------------------------------------------------------------------
// Bound tables
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundRow {
    pub d: i64,
    pub gh_bound: i64,
    pub classical_min: i64,
    pub classical_max: i64,
}

#[derive(Serialize)]
pub struct BoundDoc<'a> {
    pub schema: u32,
    pub r: i64,
    pub rows: &'a [BoundRow],
}

const BOUND_HEADER: [&str; 4] = ["d", "gh_bound", "classical_min", "classical_max"];

fn bound_cells(row: &BoundRow) -> Vec<String> {
    vec![
        row.d.to_string(),
        row.gh_bound.to_string(),
        row.classical_min.to_string(),
        row.classical_max.to_string(),
    ]
}

pub fn bounds_table(rows: &[BoundRow]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(bound_cells).collect();
    render_table(&BOUND_HEADER, &cells)
}

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = csv_line(
        &BOUND_HEADER
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>(),
    );
    for row in rows {
        out.push_str(&csv_line(&bound_cells(row)));
    }
    out
}

// ---------------------------------------------------------------------------
// Hilbert tables
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize)]
pub struct HilbertRow {
    pub t: i64,
    pub hilbert: i64,
    pub polynomial: i64,
    /// `None` below the stabilization window `t >= deg(C) - 1`, where the
    /// difference `P(t) - HF(t)` is not the ideal-sheaf cohomology.
    pub h1: Option<i64>,
}

#[derive(Serialize)]
pub struct HilbertDoc<'a> {
    pub schema: u32,
    pub source: &'a str,
    pub degree: i64,
    pub polynomial: String,
    pub slope: i64,
    pub constant: i64,
    pub genus: i64,
    pub connected: bool,
    pub rows: &'a [HilbertRow],
}

const HILBERT_HEADER: [&str; 4] = ["t", "HF", "P(t)", "h1"];

fn hilbert_cells(row: &HilbertRow) -> Vec<String> {
    vec![
        row.t.to_string(),
        row.hilbert.to_string(),
        row.polynomial.to_string(),
        row.h1.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
    ]
}

pub fn hilbert_table(doc: &HilbertDoc) -> String {
    let mut out = format!(
        "source: {}\ndegree: {}\npolynomial: P(t) = {}\ngenus: {}\nconnected: {}\n",
        doc.source, doc.degree, doc.polynomial, doc.genus, doc.connected
    );
    let cells: Vec<Vec<String>> = doc.rows.iter().map(hilbert_cells).collect();
    out.push_str(&render_table(&HILBERT_HEADER, &cells));
    out
}

pub fn hilbert_csv(doc: &HilbertDoc) -> String {
    let mut out = csv_line(
        &HILBERT_HEADER
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>(),
    );
    for row in doc.rows {
        out.push_str(&csv_line(&[
            row.t.to_string(),
            row.hilbert.to_string(),
            row.polynomial.to_string(),
            row.h1.map(|v| v.to_string()).unwrap_or_default(),
        ]));
    }
    out
}

// ---------------------------------------------------------------------------
// Audit tables
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize)]
pub struct EhRow {
    pub k: i64,
    pub family_dim: i64,
    pub eh_bound: i64,
    pub margin: i64,
}

#[derive(Serialize)]
pub struct AuditDoc<'a> {
    pub schema: u32,
    pub window: &'a [AuditRow],
    pub eh: &'a [EhRow],
}

const AUDIT_WINDOW_HEADER: [&str; 5] = ["r", "d", "lhs", "rhs", "margin"];
const AUDIT_EH_HEADER: [&str; 4] = ["k", "family_dim", "eh_bound", "margin"];

fn window_cells(row: &AuditRow) -> Vec<String> {
    vec![
        row.r.to_string(),
        row.d.to_string(),
        row.lhs.to_string(),
        row.rhs.to_string(),
        row.margin.to_string(),
    ]
}

fn eh_cells(row: &EhRow) -> Vec<String> {
    vec![
        row.k.to_string(),
        row.family_dim.to_string(),
        row.eh_bound.to_string(),
        row.margin.to_string(),
    ]
}

pub fn audit_table(doc: &AuditDoc) -> String {
    let window: Vec<Vec<String>> = doc.window.iter().map(window_cells).collect();
    let eh: Vec<Vec<String>> = doc.eh.iter().map(eh_cells).collect();
    let mut out = String::from("degree-window audit:\n");
    out.push_str(&render_table(&AUDIT_WINDOW_HEADER, &window));
    out.push_str("\nline-family dimension vs curve-family bound:\n");
    out.push_str(&render_table(&AUDIT_EH_HEADER, &eh));
    out
}

pub fn audit_csv(doc: &AuditDoc) -> String {
    let mut out = csv_line(
        &AUDIT_WINDOW_HEADER
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>(),
    );
    for row in doc.window {
        out.push_str(&csv_line(&window_cells(row)));
    }
    out.push('\n');
    out.push_str(&csv_line(
        &AUDIT_EH_HEADER
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>(),
    ));
    for row in doc.eh {
        out.push_str(&csv_line(&eh_cells(row)));
    }
    out
}
