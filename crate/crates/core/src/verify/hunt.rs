use super::{decide, describe_eval, grid_points, real, table_exhausted, Verdict, VerifyError, DEFAULT_A_GRID};
use crate::catalog::{registry, Identity, Params, SeriesConfig};
use crate::quad::QuadConfig;
use crate::specfun::Convention;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConventionChoice {
    Modern,
    Archaic,
    Both,
}

impl ConventionChoice {
    pub fn conventions(self) -> Vec<Convention> {
        match self {
            ConventionChoice::Modern => vec![Convention::Modern],
            ConventionChoice::Archaic => vec![Convention::Archaic],
            ConventionChoice::Both => vec![Convention::Modern, Convention::Archaic],
        }
    }
}

impl FromStr for ConventionChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "modern" => Ok(ConventionChoice::Modern),
            "archaic" => Ok(ConventionChoice::Archaic),
            "both" => Ok(ConventionChoice::Both),
            other => Err(format!("unknown convention '{other}'; valid: modern, archaic, both")),
        }
    }
}

/// One RHS evaluation at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntCheck {
    /// Set only for entries whose table value depends on the convention.
    pub convention: Option<Convention>,
    #[serde(with = "real")]
    pub rhs: f64,
    #[serde(with = "real")]
    pub rhs_err: f64,
    #[serde(with = "real")]
    pub abs_diff: f64,
    pub verdict: Verdict,
    pub mode_notes: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntPoint {
    pub params: Params,
    #[serde(with = "real")]
    pub lhs: f64,
    #[serde(with = "real")]
    pub lhs_err: f64,
    /// Measured LHS to 12 significant digits.
    pub lhs_digits: String,
    pub checks: Vec<HuntCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntEntry {
    pub entry: u32,
    pub identity_id: String,
    pub statement: String,
    pub table_value: String,
    pub convention_dependent: bool,
    pub points: Vec<HuntPoint>,
    pub notes: Vec<String>,
}

impl HuntEntry {
    /// Worst verdict over all points for one convention (`None` for
    /// convention-independent entries).
    pub fn verdict(&self, convention: Option<Convention>) -> Option<Verdict> {
        let rank = |v: Verdict| match v {
            Verdict::Pass => 0,
            Verdict::Inconclusive => 1,
            Verdict::UnsupportedConvention => 2,
            Verdict::Fail => 3,
        };
        self.points
            .iter()
            .flat_map(|p| p.checks.iter())
            .filter(|c| c.convention == convention)
            .map(|c| c.verdict)
            .max_by_key(|v| rank(*v))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntReport {
    pub conventions: Vec<Convention>,
    pub tol: f64,
    pub entries: Vec<HuntEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HuntConfig {
    pub a_grid: Vec<f64>,
    pub tol: f64,
    pub quad: QuadConfig,
    pub series_tol: f64,
}

impl Default for HuntConfig {
    fn default() -> Self {
        Self {
            a_grid: DEFAULT_A_GRID.to_vec(),
            tol: 1e-8,
            quad: QuadConfig {
                abs_tol: 1e-14,
                rel_tol: 1e-13,
                ..QuadConfig::default()
            },
            series_tol: 1e-14,
        }
    }
}

fn digits(v: f64) -> String {
    format!("{v:.11e}")
}

fn hunt_point(ident: &Identity, params: &Params, conventions: &[Convention], cfg: &HuntConfig) -> HuntPoint {
    let interval = ident.intervals.first().copied();
    let lhs = ident.lhs_evaluation(params, interval, &cfg.quad);
    let (lv, le, lnote) = match &lhs {
        Ok(e) => (e.value, e.error_estimate, describe_eval("lhs", e)),
        Err(e) => (f64::NAN, f64::NAN, format!("lhs error: {e}")),
    };
    let variant = &ident.rhs[0];
    let convs: Vec<Option<Convention>> = if variant.value.convention_dependent() {
        conventions.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let checks = convs
        .into_iter()
        .map(|conv| {
            let scfg = SeriesConfig {
                tol: cfg.series_tol,
                convention: conv.unwrap_or(Convention::Modern),
            };
            let (rv, re, rnote, unsupported) = match variant.value.evaluate(params, &cfg.quad, &scfg) {
                Ok(e) => (e.value, e.error_estimate, describe_eval("rhs", &e), table_exhausted(&e)),
                Err(e) => (f64::NAN, f64::NAN, format!("rhs error: {e}"), false),
            };
            let abs_diff = (lv - rv).abs();
            let verdict = if unsupported {
                Verdict::UnsupportedConvention
            } else {
                decide(abs_diff, le, re, cfg.tol.max(variant.tol_floor))
            };
            let mode_notes = [lnote.clone(), rnote]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("; ");
            HuntCheck {
                convention: conv,
                rhs: rv,
                rhs_err: re,
                abs_diff,
                verdict,
                mode_notes,
            }
        })
        .collect();
    HuntPoint {
        params: params.clone(),
        lhs: lv,
        lhs_err: le,
        lhs_digits: digits(lv),
        checks,
    }
}

fn point_label(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

fn entry_notes(entry: &HuntEntry) -> Vec<String> {
    let mut notes = Vec::new();
    let convs: BTreeSet<Option<Convention>> =
        entry.points.iter().flat_map(|p| p.checks.iter().map(|c| c.convention)).collect();
    for conv in convs {
        let label = conv.map(|c| format!("{} convention: ", c.name())).unwrap_or_default();
        match entry.verdict(conv) {
            Some(Verdict::Pass) => notes.push(format!("{label}table value confirmed at every point")),
            Some(_) => {
                for p in &entry.points {
                    for c in p.checks.iter().filter(|c| c.convention == conv && c.verdict != Verdict::Pass) {
                        notes.push(format!(
                            "{label}{} at {}: measured LHS {} vs table value {} (|diff| {:.3e})",
                            c.verdict,
                            point_label(&p.params),
                            p.lhs_digits,
                            digits(c.rhs),
                            c.abs_diff
                        ));
                    }
                }
            }
            None => {}
        }
    }
    notes
}

/// Adjudicate every appendix-table entry with the default configuration.
pub fn hunt_table129(choice: ConventionChoice) -> HuntReport {
    hunt_with(choice, &HuntConfig::default()).expect("default hunt configuration is valid")
}

pub fn hunt_with(choice: ConventionChoice, cfg: &HuntConfig) -> Result<HuntReport, VerifyError> {
    cfg.quad.validate().map_err(crate::catalog::CatalogError::from)?;
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(VerifyError::InvalidConfig(format!("tol must be positive, got {}", cfg.tol)));
    }
    let conventions = choice.conventions();
    let idents: Vec<&Identity> = registry().iter().filter(|i| i.id.starts_with("appendix-")).collect();
    let mut entries = idents
        .par_iter()
        .map(|ident| {
            let points: Vec<HuntPoint> = grid_points(ident, &cfg.a_grid)
                .iter()
                .map(|p| hunt_point(ident, p, &conventions, cfg))
                .collect();
            let mut entry = HuntEntry {
                entry: ident.id.trim_start_matches("appendix-").parse().unwrap_or(0),
                identity_id: ident.id.to_string(),
                statement: ident.statement.to_string(),
                table_value: ident.rhs[0].value.describe(),
                convention_dependent: ident.rhs[0].value.convention_dependent(),
                points,
                notes: Vec::new(),
            };
            entry.notes = entry_notes(&entry);
            entry
        })
        .collect::<Vec<_>>();
    entries.sort_by_key(|e| e.entry);
    Ok(HuntReport {
        conventions,
        tol: cfg.tol,
        entries,
    })
}
