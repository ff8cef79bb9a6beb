//! Rendering of records in the three output formats.

use std::io::{self, Write};

use hydromoments::record::{decimal, OutputRecord, RecordResult, CSV_HEADER, SCHEMA_VERSION};
use hydromoments::uncertainty::Orientation;
use hydromoments::verify::{LimitRow, SuiteReport};
use serde::Serialize;

use crate::args::{Format, Regime};

const PREVIEW: usize = 10;

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

pub fn moments(out: &mut impl Write, format: Format, records: &[&OutputRecord]) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for r in records {
                if let Some(row) = r.csv_row() {
                    w.write_record(&row).map_err(csv_err)?;
                }
            }
            w.flush()?;
        }
        Format::Human => {
            for r in records {
                writeln!(out, "{}", human_moment(r))?;
            }
        }
    }
    Ok(())
}

fn human_moment(r: &OutputRecord) -> String {
    let (Some(s), Some(o)) = (r.request.state, r.request.order.as_ref()) else {
        return String::new();
    };
    let tag = hydromoments::record::space_str(o.space);
    let head = format!("<{tag}^{}> D={} n={} l={} Z={}", o.alpha, s.dim(), s.n(), s.l(), s.charge());
    match &r.result {
        RecordResult::Moment(m) => match &m.exact {
            Some(e) => {
                let value = m.value();
                let shown = value.as_exact().map(|v| v.to_string()).unwrap_or_else(|| format!("{}·π^({})", e.coeff, e.pi_pow));
                format!("{head} = {shown} ≈ {} [{:?}]", m.decimal, m.method)
            }
            None => format!("{head} = {} ± {:.1e} [{:?}]", m.decimal, m.error_bound, m.method),
        },
        RecordResult::Failure { status, message } => format!("{head}: {} ({message})", status.as_str()),
        _ => head,
    }
}

pub fn verify(out: &mut impl Write, format: Format, reports: &[SuiteReport], verbose: bool) -> io::Result<()> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Wrapped<'a> {
                schema_version: &'a str,
                #[serde(flatten)]
                report: &'a SuiteReport,
            }
            for r in reports {
                let json = serde_json::to_string(&Wrapped { schema_version: SCHEMA_VERSION, report: r }).map_err(io::Error::other)?;
                writeln!(out, "{json}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "passed", "checks", "failed", "worst_deviation", "worst_case", "findings"]).map_err(csv_err)?;
            for r in reports {
                let t = &r.tally;
                w.write_record([
                    r.suite.name().to_string(),
                    r.passed.to_string(),
                    t.checks.to_string(),
                    t.failed.to_string(),
                    decimal::format(t.worst_deviation),
                    t.worst_case.clone(),
                    t.findings.len().to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Human => {
            for r in reports {
                let t = &r.tally;
                writeln!(
                    out,
                    "{:<12} {}  {} checks, {} failed, worst deviation {:.3e}{}",
                    r.suite.name(),
                    if r.passed { "PASS" } else { "FAIL" },
                    t.checks,
                    t.failed,
                    t.worst_deviation,
                    if t.worst_case.is_empty() { String::new() } else { format!(" ({})", t.worst_case) }
                )?;
                if let Some(m) = t.tightest_margin {
                    writeln!(out, "    tightest rigorous bound margin {m:.6}")?;
                }
                let limit = if verbose { usize::MAX } else { PREVIEW };
                for f in t.failures.iter().take(limit) {
                    writeln!(out, "    failure: {f}")?;
                }
                if t.failures.len() > limit {
                    writeln!(out, "    ... {} more failures (use --verbose)", t.failures.len() - limit)?;
                }
                writeln!(out, "    findings: {}", t.findings.len())?;
                for f in t.findings.iter().take(limit) {
                    writeln!(out, "    finding: {f}")?;
                }
                if t.findings.len() > limit {
                    writeln!(out, "    ... {} more findings (use --verbose)", t.findings.len() - limit)?;
                }
            }
        }
    }
    Ok(())
}

pub fn limits(out: &mut impl Write, format: Format, regime: Regime, rows: &[LimitRow]) -> io::Result<()> {
    let param = if regime == Regime::Rydberg { "n" } else { "D" };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Wrapped<'a> {
                schema_version: &'a str,
                regime: &'a str,
                #[serde(flatten)]
                row: &'a LimitRow,
            }
            for r in rows {
                let json = serde_json::to_string(&Wrapped { schema_version: SCHEMA_VERSION, regime: regime.name(), row: r })
                    .map_err(io::Error::other)?;
                writeln!(out, "{json}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([param, "exact", "leading", "corrected", "leading_ratio_minus_1", "corrected_ratio_minus_1"]).map_err(csv_err)?;
            for r in rows {
                w.write_record([
                    r.parameter.to_string(),
                    decimal::format(r.exact),
                    decimal::format(r.leading),
                    decimal::format(r.corrected),
                    decimal::format(r.leading_deviation),
                    decimal::format(r.corrected_deviation),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Human => {
            writeln!(out, "{param:>6} {:>24} {:>24} {:>24} {:>12} {:>12}", "exact", "leading", "corrected", "lead-1", "corr-1")?;
            for r in rows {
                writeln!(
                    out,
                    "{:>6} {:>24.16e} {:>24.16e} {:>24.16e} {:>12.4e} {:>12.4e}",
                    r.parameter, r.exact, r.leading, r.corrected, r.leading_deviation, r.corrected_deviation
                )?;
            }
        }
    }
    Ok(())
}

pub fn inequalities(out: &mut impl Write, format: Format, records: &[OutputRecord]) -> io::Result<()> {
    let reports = records.iter().filter_map(|r| match &r.result {
        RecordResult::Inequality(rep) => Some(rep),
        _ => None,
    });
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["bound", "D", "n", "l", "Z", "lhs", "rhs", "ratio", "orientation", "satisfied", "rigorous"]).map_err(csv_err)?;
            for rep in reports {
                let s = &rep.state;
                w.write_record([
                    format!("{:?}", rep.name),
                    s.dim().to_string(),
                    s.n().to_string(),
                    s.l().to_string(),
                    decimal::format(s.charge()),
                    decimal::format(rep.lhs),
                    decimal::format(rep.rhs),
                    decimal::format(rep.ratio),
                    orientation(rep.orientation).to_string(),
                    rep.satisfied.to_string(),
                    rep.name.is_rigorous().to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Human => {
            for rep in reports {
                let rel = if rep.orientation == Orientation::Lower { ">=" } else { "<=" };
                writeln!(
                    out,
                    "{:<22} {:.10e} {rel} {:.10e}  ratio {:.6}  {}{}",
                    format!("{:?}", rep.name),
                    rep.lhs,
                    rep.rhs,
                    rep.ratio,
                    if rep.satisfied { "holds" } else { "VIOLATED" },
                    if rep.name.is_rigorous() { "" } else { " (semiclassical)" }
                )?;
            }
        }
    }
    Ok(())
}

fn orientation(o: Orientation) -> &'static str {
    match o {
        Orientation::Lower => "lower",
        Orientation::Upper => "upper",
    }
}
