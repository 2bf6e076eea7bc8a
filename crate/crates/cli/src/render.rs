use crate::Format;
use anyhow::Result;
use logkernel::catalog::{registry, StatusHint};
use logkernel::quad::Interval;
use logkernel::series::{SumResult, TermId};
use logkernel::verify::{fitted_remark_constant, HuntReport, VerificationResult, Verdict};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

/// CSV column order of verification records.
pub const COLUMNS: [&str; 12] = [
    "identity_id",
    "params",
    "lhs",
    "lhs_err",
    "rhs",
    "rhs_err",
    "abs_diff",
    "rel_diff",
    "tol",
    "verdict",
    "mode_notes",
    "elapsed_ms",
];

/// Shortest representation that parses back to the same double (at most 17
/// significant digits).
fn real(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else if v == 0.0 || (1e-5..1e16).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn params(r: &VerificationResult) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn results_csv(rows: &[VerificationResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS)?;
    for r in rows {
        w.write_record([
            r.identity_id.clone(),
            params(r),
            real(r.lhs),
            real(r.lhs_err),
            real(r.rhs),
            real(r.rhs_err),
            real(r.abs_diff),
            real(r.rel_diff),
            real(r.tol),
            r.verdict.to_string(),
            r.mode_notes.clone(),
            r.elapsed_ms.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn results_table(rows: &[VerificationResult]) -> String {
    let mut s = String::new();
    let w = rows.iter().map(|r| params(r).len()).max().unwrap_or(0).max(6);
    let _ = writeln!(
        s,
        "{:<26} {:<w$} {:>24} {:>24} {:>10} {:>8}  verdict",
        "identity", "params", "lhs", "rhs", "abs_diff", "tol"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:<26} {:<w$} {:>24} {:>24} {:>10.3e} {:>8.0e}  {}",
            r.identity_id,
            params(r),
            real(r.lhs),
            real(r.rhs),
            r.abs_diff,
            r.tol,
            r.verdict
        );
    }
    let mut counts: BTreeMap<Verdict, usize> = BTreeMap::new();
    for r in rows {
        *counts.entry(r.verdict).or_default() += 1;
    }
    let summary: Vec<String> = counts.iter().map(|(v, n)| format!("{n} {v}")).collect();
    let _ = writeln!(s, "{} rows: {}", rows.len(), summary.join(", "));
    for iv in [Interval::ZeroOne, Interval::OneInf] {
        if let Some(c) = fitted_remark_constant(rows, iv) {
            let _ = writeln!(s, "remark-n on {iv}: fitted I(n) = c/n with c = {c:.10}");
        }
    }
    s
}

fn conv_label(c: Option<logkernel::specfun::Convention>) -> &'static str {
    c.map(|c| c.name()).unwrap_or("-")
}

pub fn hunt_table(report: &HuntReport) -> String {
    let mut s = String::new();
    for e in &report.entries {
        let _ = writeln!(s, "entry {:>2}  {}", e.entry, e.statement);
        for p in &e.points {
            let at: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            for c in &p.checks {
                let _ = writeln!(
                    s,
                    "    {:<24} conv={:<8} lhs={:<20} table={:<20} diff={:<10.3e} {}",
                    at.join(", "),
                    conv_label(c.convention),
                    p.lhs_digits,
                    format!("{:.11e}", c.rhs),
                    c.abs_diff,
                    c.verdict
                );
            }
        }
        for n in &e.notes {
            let _ = writeln!(s, "    note: {n}");
        }
    }
    s
}

pub fn hunt_csv(report: &HuntReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["entry", "identity_id", "params", "convention", "lhs", "lhs_err", "rhs", "rhs_err", "abs_diff", "verdict"])?;
    for e in &report.entries {
        for p in &e.points {
            let at = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
            for c in &p.checks {
                w.write_record([
                    e.entry.to_string(),
                    e.identity_id.clone(),
                    at.clone(),
                    conv_label(c.convention).to_string(),
                    real(p.lhs),
                    real(p.lhs_err),
                    real(c.rhs),
                    real(c.rhs_err),
                    real(c.abs_diff),
                    c.verdict.to_string(),
                ])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Serialize)]
struct EvalRecord<'a> {
    function: &'a str,
    x: f64,
    value: f64,
}

pub fn eval(format: Format, function: &str, x: f64, value: f64) -> Result<String> {
    Ok(match format {
        Format::Table => format!("{function}({}) = {}\n", real(x), real(value)),
        Format::Json => json(&EvalRecord { function, x, value })?,
        Format::Csv => format!("function,x,value\n{function},{},{}\n", real(x), real(value)),
    })
}

pub fn sum(format: Format, term: TermId, r: &SumResult) -> Result<String> {
    Ok(match format {
        Format::Table => {
            let mut s = format!(
                "{term} ({}): {} +/- {:.3e}, {} terms, converged: {}\n",
                r.mode_used,
                real(r.value),
                r.error_estimate,
                r.terms_used,
                r.converged
            );
            for n in &r.notes {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
        Format::Json => json(r)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["series", "mode_used", "value", "error_estimate", "terms_used", "converged", "notes"])?;
            w.write_record([
                term.to_string(),
                r.mode_used.to_string(),
                real(r.value),
                real(r.error_estimate),
                r.terms_used.to_string(),
                r.converged.to_string(),
                r.notes.join("; "),
            ])?;
            String::from_utf8(w.into_inner()?)?
        }
    })
}

fn hint(h: StatusHint) -> &'static str {
    match h {
        StatusHint::ExpectedPass => "expected_pass",
        StatusHint::Suspect => "suspect",
        StatusHint::ArchaicConvention => "archaic_convention",
    }
}

pub fn registry_table() -> String {
    let mut s = String::new();
    for i in registry() {
        let e = i.export();
        let _ = writeln!(s, "{:<26} {:<20} {}", e.id, hint(e.status_hint), e.statement);
        let _ = writeln!(s, "{:<26} domain: {}; citation: {}", "", e.param_domain, e.citation);
        for r in &e.rhs {
            let _ = writeln!(s, "{:<26} rhs [{}] {}", "", r.label, r.expression);
        }
    }
    s
}

pub fn registry_csv() -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "status_hint", "citation", "param_domain", "intervals", "rhs", "statement"])?;
    for i in registry() {
        let e = i.export();
        let rhs = e.rhs.iter().map(|r| format!("{}: {}", r.label, r.expression)).collect::<Vec<_>>().join(" | ");
        w.write_record([
            e.id.to_string(),
            hint(e.status_hint).to_string(),
            e.citation.to_string(),
            e.param_domain.to_string(),
            e.intervals.join(" "),
            rhs,
            e.statement.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
