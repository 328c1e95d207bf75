//! Command-line surface for the rank-2 Higgs moduli intersection
//! cohomology calculator: compute named quantities per genus, run the
//! verification suite over a genus range, and emit the low-genus table
//! in machine- and human-readable formats.
//!
//! Exit codes: 0 success, 1 check failure (or I/O failure), 2 usage
//! error, 3 internal arithmetic error (failed exact division or a
//! non-integer series coefficient).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use higgs_ih::engine::{
    self, ip_m_closed, ip_m_pipeline, CheckResult, FaultInjection, QuantityReport, Route,
};
use higgs_ih::equivariant;
use higgs_ih::spaces;
use higgs_ih::{blowup, Error, Genus, Polynomial};

#[derive(Parser)]
#[command(
    name = "higgs-ih",
    version,
    about = "Exact intersection Poincaré polynomials of the moduli of rank-2 Higgs bundles \
             with trivial determinant",
    after_help = "Quantities: ip_m, ip_m_closed, ip_p_upsilon, ip_upsilon, p_sl2_r, p_sl2_sigma, \
                  p_sl2_e_ss, p_sl2_e2_ss, p_sl2_p_upsilon_ss, p_sl2_r2s, correction_theorem2, \
                  correction_theorem3, d1, p_s2a, incidence_split, tjtilde_split.\n\
                  Split-series quantities report the total (plus + minus) Poincaré polynomial.\n\
                  Exit codes: 0 success, 1 check failure, 2 usage error, 3 arithmetic error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one named quantity at one genus
    Compute {
        /// Genus of the base curve (>= 2)
        #[arg(long)]
        genus: i64,
        /// Registered quantity name
        #[arg(long)]
        quantity: String,
        /// Output format (default: text on a terminal, json when --output is set)
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write the document to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Series truncation order for infinite-series quantities
        /// (default 6g - 2)
        #[arg(long)]
        truncation_order: Option<usize>,
    },
    /// Run the per-genus cross-check suite over a range
    Verify {
        /// Inclusive genus range A..B
        #[arg(long, default_value = "2..30")]
        genus_range: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Corrupt one pipeline coefficient to exercise failure reporting
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Emit the table of IP_t(M) over a genus range
    Table {
        /// Inclusive genus range A..B
        #[arg(long)]
        genus_range: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidGenus { .. }
        | Error::UnknownQuantity { .. }
        | Error::InvalidArgument { .. } => 2,
        // failed validity checks on otherwise well-formed requests
        Error::CheckFailed { .. }
        | Error::NegativeCokernel { .. }
        | Error::NegativeCoefficient { .. }
        | Error::DegreeMismatch { .. } => 1,
        // broken exact arithmetic: a formula transcription defect
        Error::NotDivisible { .. } | Error::NonIntegerCoefficient { .. } | Error::SeriesPole => 3,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            genus,
            quantity,
            format,
            output,
            truncation_order,
        } => {
            let g = Genus::new(genus)?;
            let report = compute_quantity(&quantity, g, truncation_order)?;
            let format = resolve_format(format, &output);
            let doc = render_report(&report, format);
            emit(&doc, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            genus_range,
            format,
            output,
            inject_fault,
        } => {
            let range = parse_range(&genus_range)?;
            let fault = if inject_fault {
                FaultInjection::CorruptPipeline
            } else {
                FaultInjection::None
            };
            let mut results = Vec::new();
            for g in range {
                results.extend(engine::verify_genus_with(g, fault));
            }
            let all_passed = results.iter().all(|r| r.passed);
            let format = resolve_format(format, &output);
            let doc = render_checks(&results, format);
            emit(&doc, &output)?;
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                for r in results.iter().filter(|r| !r.passed) {
                    eprintln!(
                        "check failed: g={} {}: {}",
                        r.genus,
                        r.name,
                        r.detail.as_deref().unwrap_or("no detail")
                    );
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Table {
            genus_range,
            format,
            output,
        } => {
            let range = parse_range(&genus_range)?;
            let mut reports = Vec::new();
            for g in range {
                reports.push(ip_m_pipeline(g)?);
            }
            let format = resolve_format(format, &output);
            let doc = render_table(&reports, format);
            emit(&doc, &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_format(format: Option<Format>, output: &Option<PathBuf>) -> Format {
    match format {
        Some(f) => f,
        // machine default for file output, text for terminals and pipes
        None if output.is_some() => Format::Json,
        None => Format::Text,
    }
}

fn emit(doc: &str, output: &Option<PathBuf>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, doc).map_err(|e| Error::InvalidArgument {
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{doc}") {
                Ok(()) => Ok(()),
                // downstream consumer closed the pipe; not our error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(Error::InvalidArgument {
                    message: format!("cannot write to stdout: {e}"),
                }),
            }
        }
    }
}

fn parse_range(s: &str) -> Result<Vec<Genus>, Error> {
    let usage = || Error::InvalidArgument {
        message: format!("genus range must look like A..B with 2 <= A <= B, got `{s}`"),
    };
    let (a, b) = s.split_once("..").ok_or_else(usage)?;
    let a: i64 = a.trim().parse().map_err(|_| usage())?;
    let b: i64 = b.trim().parse().map_err(|_| usage())?;
    if a > b {
        return Err(usage());
    }
    (a..=b).map(Genus::new).collect()
}

/// The closed quantity registry. Each entry is one citation-anchored
/// formula; arbitrary extension is deliberately not supported.
fn compute_quantity(
    name: &str,
    g: Genus,
    truncation_order: Option<usize>,
) -> Result<QuantityReport, Error> {
    let order = truncation_order.unwrap_or_else(|| equivariant::default_order(g));
    let report = match name {
        "ip_m" => ip_m_pipeline(g)?,
        "ip_m_closed" => ip_m_closed(g)?,
        "ip_p_upsilon" => {
            let value = blowup::ip_p_upsilon(g)?;
            require_check(
                "two_path_agreement",
                blowup::ip_p_upsilon_via_blowup(g)? == value,
            )?;
            QuantityReport::new(
                "ip_p_upsilon",
                g,
                value,
                Route::ClosedForm,
                vec!["two_path_agreement".to_owned()],
            )
        }
        "ip_upsilon" => {
            let value = blowup::ip_upsilon(g)?;
            require_check(
                "cone_path_agreement",
                blowup::ip_upsilon_via_cone(g)? == value,
            )?;
            QuantityReport::new(
                "ip_upsilon",
                g,
                value,
                Route::ClosedForm,
                vec!["cone_path_agreement".to_owned()],
            )
        }
        "p_sl2_r" => series_report(equivariant::p_sl2_r(g, order)?, Route::ClosedForm),
        "p_sl2_sigma" => series_report(equivariant::p_sl2_sigma(g, order)?, Route::ClosedForm),
        "p_sl2_e_ss" => series_report(
            equivariant::EquivariantSeries::exact("p_sl2_e_ss", g, equivariant::p_sl2_e_ss(g)?)?,
            Route::ClosedForm,
        ),
        "p_sl2_e2_ss" => series_report(
            equivariant::EquivariantSeries::exact("p_sl2_e2_ss", g, equivariant::p_sl2_e2_ss(g)?)?,
            Route::ClosedForm,
        ),
        "p_sl2_p_upsilon_ss" => series_report(
            equivariant::p_sl2_p_upsilon_ss(g, order)?,
            Route::ClosedForm,
        ),
        "p_sl2_r2s" => series_report(equivariant::p_sl2_r2s(g, order)?, Route::Pipeline),
        "correction_theorem2" => {
            let value = blowup::correction_theorem2(g)?;
            require_check(
                "closed_form_agreement",
                blowup::correction_theorem2_closed_form(g)? == value,
            )?;
            QuantityReport::new(
                "correction_theorem2",
                g,
                value,
                Route::Pipeline,
                vec!["closed_form_agreement".to_owned()],
            )
        }
        "correction_theorem3" => {
            let value = blowup::correction_theorem3(g)?;
            require_check(
                "closed_form_agreement",
                blowup::correction_theorem3_closed_form(g)? == value,
            )?;
            QuantityReport::new(
                "correction_theorem3",
                g,
                value,
                Route::Pipeline,
                vec!["closed_form_agreement".to_owned()],
            )
        }
        "d1" => QuantityReport::new("d1", g, spaces::d1_poly(g)?, Route::ClosedForm, vec![]),
        "p_s2a" => QuantityReport::new("p_s2a", g, spaces::p_s2a(g)?, Route::ClosedForm, vec![]),
        "incidence_split" => {
            let s = spaces::incidence_split(g)?;
            let n = g.get();
            require_check(
                "sum_identity",
                s.total()
                    == spaces::projective_space(2 * n - 3) * spaces::projective_space(2 * n - 4),
            )?;
            split_report(
                spaces::SpaceSeries::split("incidence_split", g, s),
                vec!["sum_identity".to_owned()],
            )
        }
        "tjtilde_split" => split_report(
            spaces::SpaceSeries::split("tjtilde_split", g, spaces::tjtilde_split(g)),
            vec!["split_parity".to_owned()],
        ),
        other => {
            return Err(Error::UnknownQuantity {
                name: other.to_owned(),
            })
        }
    };
    Ok(report)
}

fn require_check(check: &str, passed: bool) -> Result<(), Error> {
    if passed {
        Ok(())
    } else {
        Err(Error::CheckFailed {
            check: check.to_owned(),
            detail: "computed value disagrees with its independent route".to_owned(),
        })
    }
}

fn series_report(s: equivariant::EquivariantSeries, route: Route) -> QuantityReport {
    let name = s.name.clone();
    QuantityReport::new(
        &name,
        s.genus,
        s.value,
        route,
        vec![
            "integer_coefficients".to_owned(),
            "nonnegative_coefficients".to_owned(),
        ],
    )
}

/// Split-series quantities are reported through their total Poincaré
/// polynomial (plus + minus), the single-polynomial invariant of the
/// underlying space.
fn split_report(s: spaces::SpaceSeries, checks: Vec<String>) -> QuantityReport {
    let value = match &s.series {
        spaces::SeriesKind::Plain(p) => p.clone(),
        spaces::SeriesKind::Split(split) => split.total(),
    };
    QuantityReport::new(&s.name, s.genus, value, Route::ClosedForm, checks)
}

fn render_report(report: &QuantityReport, format: Format) -> String {
    match format {
        Format::Text => report.polynomial().to_string(),
        Format::Json => report_json(report).to_string(),
        Format::Csv => {
            let mut doc = csv_header(report.degree);
            doc.push('\n');
            doc.push_str(&csv_row(report, report.degree));
            doc
        }
        Format::Latex => format!("${}$", latex_poly(&report.polynomial())),
    }
}

fn report_json(report: &QuantityReport) -> serde_json::Value {
    serde_json::json!({
        "quantity": report.quantity,
        "genus": report.genus.get(),
        "route": report.route.as_str(),
        "degree": report.degree,
        "coefficients": report
            .coefficients
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>(),
        "checks_passed": report.checks_passed,
    })
}

fn csv_header(width: usize) -> String {
    let mut h = String::from("genus,degree");
    for i in 0..=width {
        let _ = write!(h, ",c{i}");
    }
    h
}

fn csv_row(report: &QuantityReport, width: usize) -> String {
    let mut row = format!("{},{}", report.genus.get(), report.degree);
    let poly = report.polynomial();
    for i in 0..=width {
        let _ = write!(row, ",{}", poly.coeff(i));
    }
    row
}

fn render_checks(results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<_> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "genus": r.genus.get(),
                        "check": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    })
                })
                .collect();
            serde_json::Value::Array(items).to_string()
        }
        _ => {
            let mut out = String::new();
            let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = write!(out, "g={:<3} {:<width$} {status}", r.genus.get(), r.name);
                if let Some(detail) = &r.detail {
                    let _ = write!(out, "  ({detail})");
                }
                out.push('\n');
            }
            let passed = results.iter().filter(|r| r.passed).count();
            let _ = write!(out, "summary: {passed}/{} checks passed", results.len());
            out
        }
    }
}

fn render_table(reports: &[QuantityReport], format: Format) -> String {
    match format {
        Format::Csv => {
            let width = reports.iter().map(|r| r.degree).max().unwrap_or(0);
            let mut out = csv_header(width);
            for r in reports {
                out.push('\n');
                out.push_str(&csv_row(r, width));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = reports.iter().map(report_json).collect();
            serde_json::Value::Array(items).to_string()
        }
        Format::Latex => {
            let mut out = String::from("\\begin{itemize}\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "\\item $g={}$ : $IP_{{t}}(\\mathbf{{M}})={}$",
                    r.genus.get(),
                    latex_poly(&r.polynomial())
                );
            }
            out.push_str("\\end{itemize}");
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = write!(
                    out,
                    "g={:<3} degree={:<3} {}",
                    r.genus.get(),
                    r.degree,
                    r.polynomial()
                );
            }
            out
        }
    }
}

fn latex_poly(p: &Polynomial) -> String {
    use num_traits::{One, Signed, Zero};
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        if i == 0 {
            let _ = write!(out, "{mag}");
        } else if mag.is_one() {
            let _ = write!(out, "t^{{{i}}}");
        } else {
            let _ = write!(out, "{mag}t^{{{i}}}");
        }
    }
    out
}
