//! Command-line surface: arrangement ingestion, named-family generation,
//! report emission, and the verification sweep as a single reproducible
//! command.
//!
//! Exit codes: `0` success, `1` usage or parse error, `2` mathematical
//! violation, `3` result not certified (degree below the semiregularity
//! window). Identical invocations (including `--seed`) produce byte-identical
//! output.

pub mod format;
pub mod parse;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::exact::rank::PrimePolicy;
use crate::geometry::{FamilySpec, LineArrangement};
use crate::ideal::{hilbert_function, hilbert_polynomial};
use crate::nl::{
    classical_range, eh_bound, gh4_audit_row, gh_bound, nl_codim, verify_gh_with_bias, NLReport,
    Verdict,
};

use format::{
    audit_csv, audit_table, bounds_csv, bounds_table, hilbert_csv, hilbert_table, render_json,
    reports_csv, reports_table, AuditDoc, BoundDoc, BoundRow, EhRow, HilbertDoc, HilbertRow,
    OutputFormat, ReportDoc, SweepDoc, SweepSummary,
};

/// Exact verification of Noether-Lefschetz codimension bounds for line
/// arrangements in projective 3-space.
#[derive(Debug, Parser)]
#[command(name = "nlcalc", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Rank certification policy: two independent modular ranks that must
    /// agree (escalating to exact arithmetic on disagreement), or exact
    /// arithmetic only.
    #[arg(long, global = true, value_enum, default_value_t = PrimePolicyArg::TwoPrime)]
    pub prime_policy: PrimePolicyArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PrimePolicyArg {
    TwoPrime,
    ExactOnly,
}

impl From<PrimePolicyArg> for PrimePolicy {
    fn from(arg: PrimePolicyArg) -> Self {
        match arg {
            PrimePolicyArg::TwoPrime => PrimePolicy::TwoPrime,
            PrimePolicyArg::ExactOnly => PrimePolicy::ExactOnly,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the Griffiths-Harris bound and the classical codimension
    /// range for a lattice rank over a degree range.
    Bound {
        /// Lattice rank (at least 3).
        #[arg(short = 'r', long = "r")]
        r: i64,
        /// Degree or inclusive degree range, e.g. `12` or `7..30`.
        #[arg(short = 'd', long = "d")]
        d: String,
    },
    /// Compute one codimension report for a named family or an arrangement
    /// file.
    Codim {
        /// Named family: generic, coplanar, or concurrent.
        #[arg(long, conflicts_with = "file", requires = "k")]
        family: Option<String>,
        /// Number of lines in the family.
        #[arg(short = 'k', long = "k")]
        k: Option<usize>,
        /// Degree of the graded piece (at least 4).
        #[arg(short = 'd', long = "d")]
        d: i64,
        /// Seed for witness generation (required for named families).
        #[arg(long)]
        seed: Option<u64>,
        /// Arrangement file instead of a named family.
        #[arg(long, value_name = "PATH", conflicts_with = "k")]
        file: Option<PathBuf>,
    },
    /// Sweep named families over (k, d) grids, verifying the bound on every
    /// report.
    Verify {
        /// Line count or inclusive range, e.g. `4` or `2..6` (at least 2).
        #[arg(short = 'k', long = "k")]
        k: String,
        /// Degree range: `D`, `LO..HI`, `auto`, or `auto..HI`, where `auto`
        /// is the smallest certified degree per family.
        #[arg(short = 'd', long = "d", default_value = "auto..20")]
        d: String,
        /// Comma-separated named families.
        #[arg(long, default_value = "coplanar,generic,concurrent")]
        families: String,
        /// Seed for witness generation.
        #[arg(long)]
        seed: Option<u64>,
        /// Test hook: additively distort every family dimension.
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        inject_family_dim_bias: i64,
    },
    /// Tabulate the Hilbert function, fitted polynomial, genus, and
    /// cohomology column for one arrangement.
    Hilbert {
        /// Named family: generic, coplanar, or concurrent.
        #[arg(long, conflicts_with = "file", requires = "k")]
        family: Option<String>,
        /// Number of lines in the family.
        #[arg(short = 'k', long = "k")]
        k: Option<usize>,
        /// Arrangement file instead of a named family.
        #[arg(long, value_name = "PATH", conflicts_with = "k")]
        file: Option<PathBuf>,
        /// Largest degree tabulated (default: arrangement degree + 6).
        #[arg(long, value_name = "D")]
        d_max: Option<i64>,
        /// Seed for witness generation (required for named families).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Audit the asymptotic degree window and compare line-family dimensions
    /// against the general curve-family bound.
    Audit {
        /// Lattice rank or inclusive range, e.g. `3..5`.
        #[arg(short = 'r', long = "r")]
        r: String,
        /// Degree override (default: r^3 per rank; must be at least r^3).
        #[arg(short = 'd', long = "d")]
        d: Option<i64>,
    },
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ViolationFound(_) | Error::EqualityFailed(_) | Error::AuditFailure { .. } => 2,
        _ => 1,
    }
}

/// Parses real process arguments and runs, printing to stdout/stderr.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    execute(cli, &mut stdout, &mut stderr)
}

/// Runs a parsed invocation, writing rendered output to `out` (or the
/// `--output` path) and error messages to `err`. Returns the process exit
/// code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let policy: PrimePolicy = cli.prime_policy.into();
    let result = match cli.command {
        Command::Bound { r, d } => cmd_bound(r, &d, cli.format),
        Command::Codim {
            family,
            k,
            d,
            seed,
            file,
        } => cmd_codim(
            family.as_deref(),
            k,
            d,
            seed,
            file.as_deref(),
            policy,
            cli.format,
        ),
        Command::Verify {
            k,
            d,
            families,
            seed,
            inject_family_dim_bias,
        } => cmd_verify(
            &k,
            &d,
            &families,
            seed,
            inject_family_dim_bias,
            policy,
            cli.format,
        ),
        Command::Hilbert {
            family,
            k,
            file,
            d_max,
            seed,
        } => cmd_hilbert(
            family.as_deref(),
            k,
            file.as_deref(),
            d_max,
            seed,
            policy,
            cli.format,
        ),
        Command::Audit { r, d } => cmd_audit(&r, d, cli.format),
    };
    match result {
        Ok((text, code)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(err, "error: {e}");
                    return 1;
                }
            } else if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_bound(r: i64, d: &str, fmt: OutputFormat) -> Result<(String, i32)> {
    let (lo, hi) = parse::parse_range(d)?;
    if lo < 4 {
        return Err(Error::BadDegree(lo));
    }
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for d in lo..=hi {
        let gh = gh_bound(r, d)?;
        let (cmin, cmax) = classical_range(d);
        rows.push(BoundRow {
            d,
            gh_bound: gh,
            classical_min: cmin,
            classical_max: cmax,
        });
    }
    let text = match fmt {
        OutputFormat::Table => bounds_table(&rows),
        OutputFormat::Csv => bounds_csv(&rows),
        OutputFormat::Json => render_json(&BoundDoc {
            schema: 1,
            r,
            rows: &rows,
        }),
    };
    Ok((text, 0))
}

fn load_arrangement(path: &std::path::Path) -> Result<LineArrangement> {
    let text = std::fs::read_to_string(path)?;
    parse::parse_arrangement(&text)
}

fn family_spec(
    family: Option<&str>,
    k: Option<usize>,
    file: Option<&std::path::Path>,
) -> Result<FamilySpec> {
    match (family, file) {
        (None, Some(path)) => Ok(FamilySpec::custom(load_arrangement(path)?)),
        (Some(name), None) => {
            let kind = parse::parse_family(name)?;
            let k = k.ok_or_else(|| Error::Parse("--family requires -k".into()))?;
            if k < 2 {
                return Err(Error::TooFewLines { min: 2, got: k });
            }
            Ok(FamilySpec::named(kind, k))
        }
        (None, None) => Err(Error::Parse(
            "specify either --family with -k or --file".into(),
        )),
        (Some(_), Some(_)) => Err(Error::Parse(
            "--family and --file are mutually exclusive".into(),
        )),
    }
}

fn report_exit_code(reports: &[NLReport], mathematical_failure: bool) -> i32 {
    if mathematical_failure || reports.iter().any(|r| r.verdict == Verdict::Violation) {
        2
    } else if reports.iter().any(|r| !r.certified) {
        3
    } else {
        0
    }
}

fn cmd_codim(
    family: Option<&str>,
    k: Option<usize>,
    d: i64,
    seed: Option<u64>,
    file: Option<&std::path::Path>,
    policy: PrimePolicy,
    fmt: OutputFormat,
) -> Result<(String, i32)> {
    let spec = family_spec(family, k, file)?;
    let rep = nl_codim(&spec, d, seed, policy)?;
    let text = match fmt {
        OutputFormat::Table => reports_table(std::slice::from_ref(&rep)),
        OutputFormat::Csv => reports_csv(std::slice::from_ref(&rep)),
        OutputFormat::Json => render_json(&ReportDoc {
            schema: 1,
            report: &rep,
        }),
    };
    let code = report_exit_code(std::slice::from_ref(&rep), false);
    Ok((text, code))
}

fn cmd_verify(
    k: &str,
    d: &str,
    families: &str,
    seed: Option<u64>,
    bias: i64,
    policy: PrimePolicy,
    fmt: OutputFormat,
) -> Result<(String, i32)> {
    let (k_lo, k_hi) = parse::parse_range(k)?;
    if k_lo < 2 {
        return Err(Error::Parse(format!(
            "verification needs at least 2 lines, got k={k_lo}"
        )));
    }
    let d_range = parse::parse_degree_range(d)?;
    let kinds = parse::parse_families(families)?;
    let seed = seed.ok_or(Error::SeedRequired)?;

    let mut reports = Vec::new();
    let mut summary = SweepSummary::default();
    for &kind in &kinds {
        for k in k_lo..=k_hi {
            let spec = FamilySpec::named(kind, k as usize);
            let (d_lo, d_hi) = d_range.resolve(k as usize);
            for d in d_lo..=d_hi {
                let rep = match verify_gh_with_bias(&spec, d, Some(seed), policy, bias) {
                    Ok(rep) => rep,
                    Err(Error::ViolationFound(rep)) => {
                        summary.violations += 1;
                        *rep
                    }
                    Err(Error::EqualityFailed(rep)) => {
                        summary.equality_failures += 1;
                        *rep
                    }
                    Err(other) => return Err(other),
                };
                summary.total += 1;
                match rep.verdict {
                    Verdict::Equality => summary.equality += 1,
                    Verdict::Strict => summary.strict += 1,
                    Verdict::Violation => {}
                }
                if !rep.certified {
                    summary.uncertified += 1;
                }
                reports.push(rep);
            }
        }
    }

    let failure = summary.violations > 0 || summary.equality_failures > 0;
    let code = report_exit_code(&reports, failure);
    let text = match fmt {
        OutputFormat::Table => {
            let mut text = reports_table(&reports);
            text.push('\n');
            text.push_str(&summary.render());
            text
        }
        OutputFormat::Csv => reports_csv(&reports),
        OutputFormat::Json => render_json(&SweepDoc {
            schema: 1,
            reports: &reports,
            summary: &summary,
        }),
    };
    Ok((text, code))
}

fn cmd_hilbert(
    family: Option<&str>,
    k: Option<usize>,
    file: Option<&std::path::Path>,
    d_max: Option<i64>,
    seed: Option<u64>,
    policy: PrimePolicy,
    fmt: OutputFormat,
) -> Result<(String, i32)> {
    let spec = family_spec(family, k, file)?;
    let arr = spec.realize(seed)?;
    let source = match (family, file) {
        (Some(name), _) => format!(
            "{} k={} (seed {})",
            name.trim(),
            arr.len(),
            seed.expect("realize enforced the seed")
        ),
        (_, Some(path)) => format!("file {}", path.display()),
        _ => unreachable!("family_spec rejected this combination"),
    };
    let degree = arr.degree() as i64;
    let d_max = d_max.unwrap_or(degree + 6);
    if d_max < 0 {
        return Err(Error::BadDegree(d_max));
    }
    let poly = hilbert_polynomial(&arr, policy)?;
    let mut rows = Vec::with_capacity(d_max as usize + 1);
    for t in 0..=d_max {
        let hf = hilbert_function(&arr, t, policy)?;
        let p = poly.eval(t);
        let h1 = (t >= degree - 1).then_some(p - hf);
        rows.push(HilbertRow {
            t,
            hilbert: hf,
            polynomial: p,
            h1,
        });
    }
    let doc = HilbertDoc {
        schema: 1,
        source: &source,
        degree,
        polynomial: poly.to_string(),
        slope: poly.slope,
        constant: poly.constant,
        genus: poly.arithmetic_genus(),
        connected: arr.is_connected(),
        rows: &rows,
    };
    let text = match fmt {
        OutputFormat::Table => hilbert_table(&doc),
        OutputFormat::Csv => hilbert_csv(&doc),
        OutputFormat::Json => render_json(&doc),
    };
    Ok((text, 0))
}

fn cmd_audit(r: &str, d: Option<i64>, fmt: OutputFormat) -> Result<(String, i32)> {
    let (r_lo, r_hi) = parse::parse_range(r)?;
    let mut window = Vec::new();
    for r in r_lo..=r_hi {
        let d = d.unwrap_or(r * r * r);
        window.push(gh4_audit_row(r, d)?);
    }
    let mut eh = Vec::new();
    let mut failure = false;
    for k in 2..=8i64 {
        let family_dim = 4 * k;
        let bound = eh_bound(k)?;
        let margin = bound - family_dim;
        if margin < 0 {
            failure = true;
        }
        eh.push(EhRow {
            k,
            family_dim,
            eh_bound: bound,
            margin,
        });
    }
    let doc = AuditDoc {
        schema: 1,
        window: &window,
        eh: &eh,
    };
    let text = match fmt {
        OutputFormat::Table => audit_table(&doc),
        OutputFormat::Csv => audit_csv(&doc),
        OutputFormat::Json => render_json(&doc),
    };
    Ok((text, if failure { 2 } else { 0 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (String, String, i32) {
        let cli = Cli::try_parse_from(args).expect("test arguments must parse");
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = execute(cli, &mut out, &mut err);
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
            code,
        )
    }

    #[test]
    fn bound_rows_match_closed_form() {
        let (out, _, code) = run(&["nlcalc", "bound", "--r", "3", "--d", "7..10"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap().split_whitespace().collect::<Vec<_>>(),
            vec!["d", "gh_bound", "classical_min", "classical_max"]
        );
        let bounds: Vec<i64> = lines
            .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
            .collect();
        assert_eq!(bounds, vec![8, 10, 12, 14]);

        let (out, _, code) = run(&["nlcalc", "bound", "--r", "5", "--d", "12"]);
        assert_eq!(code, 0);
        assert!(out.lines().nth(1).unwrap().contains("35"));

        let (_, err, code) = run(&["nlcalc", "bound", "--r", "2", "--d", "12"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn audit_is_clean_and_rejects_small_degrees() {
        let (out, _, code) = run(&["nlcalc", "audit", "--r", "3..5"]);
        assert_eq!(code, 0);
        assert!(out.contains("margin"));
        for margin in ["8", "25", "58"] {
            assert!(
                out.lines()
                    .any(|l| l.split_whitespace().last() == Some(margin)),
                "missing margin {margin} in:\n{out}"
            );
        }
        let (_, _, code) = run(&["nlcalc", "audit", "--r", "3", "--d", "20"]);
        assert_eq!(code, 1);
        let (_, _, code) = run(&["nlcalc", "audit", "--r", "3", "--d", "27"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn codim_reports_named_families() {
        let (out, _, code) = run(&[
            "nlcalc", "codim", "--family", "coplanar", "-k", "3", "-d", "10", "--seed", "7",
        ]);
        assert_eq!(code, 0, "stdout: {out}");
        let row = out.lines().nth(1).unwrap();
        assert!(row.contains("coplanar") && row.contains("equality"));
        let cells: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(cells[7], "21"); // nl_codim column

        let (out, _, code) = run(&[
            "nlcalc", "codim", "--family", "generic", "-k", "4", "-d", "12", "--seed", "7",
            "--format", "json",
        ]);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["schema"], 1);
        assert_eq!(doc["nl_codim"], 36);
        assert_eq!(doc["slack"], 1);
        assert_eq!(doc["verdict"], "strict");

        // Usage errors.
        let (_, _, code) = run(&[
            "nlcalc", "codim", "--family", "coplanar", "-k", "3", "-d", "10",
        ]);
        assert_eq!(code, 1); // seed required
        let (_, _, code) = run(&["nlcalc", "codim", "-d", "10"]);
        assert_eq!(code, 1); // neither family nor file
    }

    #[test]
    fn codim_from_file_below_window_exits_3() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tri.lines");
        std::fs::write(
            &path,
            "P = 1,0,0,0 ; Q = 0,1,0,0\nP = 1,0,0,0 ; Q = 0,0,1,0\nP = 0,1,0,0 ; Q = 0,0,1,0\n",
        )
        .unwrap();
        let (out, _, code) = run(&[
            "nlcalc",
            "codim",
            "--file",
            path.to_str().unwrap(),
            "-d",
            "6",
        ]);
        assert_eq!(code, 3, "stdout: {out}");
        assert!(out.lines().nth(1).unwrap().contains("false"));

        let (out, _, code) = run(&[
            "nlcalc",
            "codim",
            "--file",
            path.to_str().unwrap(),
            "-d",
            "7",
        ]);
        assert_eq!(code, 0, "stdout: {out}");
        assert!(out.lines().nth(1).unwrap().contains("custom"));

        let (_, err, code) = run(&["nlcalc", "codim", "--file", "/nonexistent.lines", "-d", "7"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn verify_sweep_summarizes_and_bias_hook_fails() {
        let (out, _, code) = run(&[
            "nlcalc",
            "verify",
            "--k",
            "2",
            "--d",
            "10",
            "--families",
            "coplanar",
            "--seed",
            "1",
        ]);
        assert_eq!(code, 0, "stdout: {out}");
        assert!(out.contains("total=1 equality=1 strict=0"));
        assert!(out.contains("14")); // 2d - 6

        let (out, _, code) = run(&[
            "nlcalc",
            "verify",
            "--k",
            "2..3",
            "--d",
            "auto..9",
            "--families",
            "coplanar,generic",
            "--seed",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0, "stdout: {out}");
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["schema"], 1);
        // coplanar k=2 d 6..9, k=3 d 7..9; generic likewise: 2*(4+3) rows.
        assert_eq!(doc["summary"]["total"], 14);
        assert_eq!(doc["summary"]["violations"], 0);
        assert_eq!(doc["reports"].as_array().unwrap().len(), 14);

        let (out, _, code) = run(&[
            "nlcalc",
            "verify",
            "--k",
            "3",
            "--d",
            "8",
            "--families",
            "coplanar",
            "--seed",
            "1",
            "--inject-family-dim-bias",
            "1",
        ]);
        assert_eq!(code, 2, "stdout: {out}");
        assert!(out.contains("VIOLATION"));
        assert!(out.contains("violations=1"));
    }

    #[test]
    fn verify_below_window_exits_3() {
        let (out, _, code) = run(&[
            "nlcalc",
            "verify",
            "--k",
            "3",
            "--d",
            "5..7",
            "--families",
            "coplanar",
            "--seed",
            "2",
        ]);
        assert_eq!(code, 3, "stdout: {out}");
        assert!(out.contains("uncertified=2"));
    }

    #[test]
    fn hilbert_tables() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tri.lines");
        std::fs::write(
            &path,
            "P = 1,0,0,0 ; Q = 0,1,0,0\nP = 1,0,0,0 ; Q = 0,0,1,0\nP = 0,1,0,0 ; Q = 0,0,1,0\n",
        )
        .unwrap();
        let (out, _, code) = run(&["nlcalc", "hilbert", "--file", path.to_str().unwrap()]);
        assert_eq!(code, 0, "stdout: {out}");
        assert!(out.contains("polynomial: P(t) = 3t"));
        assert!(out.contains("genus: 1"));
        assert!(out.contains("connected: true"));
        // Below the window the cohomology column is masked.
        let row0 = out.lines().find(|l| l.starts_with("0 ")).unwrap();
        assert!(row0.trim_end().ends_with('-'));

        let (out, _, code) = run(&[
            "nlcalc", "hilbert", "--family", "generic", "-k", "2", "--seed", "3", "--d-max", "5",
            "--format", "json",
        ]);
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["slope"], 2);
        assert_eq!(doc["constant"], 2);
        assert_eq!(doc["genus"], -1);
        assert_eq!(doc["rows"].as_array().unwrap().len(), 6);
        assert_eq!(doc["rows"][0]["h1"], serde_json::Value::Null);
        assert_eq!(doc["rows"][5]["h1"], 0);
    }

    #[test]
    fn output_is_deterministic() {
        let args = [
            "nlcalc",
            "verify",
            "--k",
            "2..3",
            "--d",
            "auto..8",
            "--families",
            "coplanar,generic,concurrent",
            "--seed",
            "11",
            "--format",
            "csv",
        ];
        let (a, _, code_a) = run(&args);
        let (b, _, code_b) = run(&args);
        assert_eq!(code_a, 0);
        assert_eq!(code_a, code_b);
        assert_eq!(a, b);
        assert!(a.starts_with("family,k,r,d,ideal_codim,family_dim,"));
    }

    #[test]
    fn output_file_redirection() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bounds.csv");
        let (out, _, code) = run(&[
            "nlcalc",
            "bound",
            "--r",
            "4",
            "--d",
            "8..9",
            "--format",
            "csv",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            written,
            "d,gh_bound,classical_min,classical_max\n8,15,5,35\n9,18,6,56\n"
        );
    }
}
