//! LHS-versus-RHS verification, suite runs and the appendix-table hunt.

mod hunt;
mod select;

pub use hunt::{hunt_table129, hunt_with, ConventionChoice, HuntConfig, HuntCheck, HuntEntry, HuntPoint, HuntReport};
pub use select::select_ids;

use crate::catalog::{find, registry, CatalogError, Evaluation, Grid, Identity, Params, SeriesConfig};
use crate::quad::{Interval, QuadConfig};
use crate::specfun::Convention;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;
use thiserror::Error;

/// Default a-grid of suite runs.
pub const DEFAULT_A_GRID: [f64; 7] = [0.5, 1.0, PI / 2.0, PI, 2.0, 2.0 * PI, 5.0];
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("invalid id filter '{filter}': {reason}")]
    BadFilter { filter: String, reason: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    UnsupportedConvention,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::UnsupportedConvention => "unsupported_convention",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict from a discrepancy and the two error estimates.
///
/// Inconclusive when the combined estimate exceeds `tol`; otherwise pass iff
/// `abs_diff <= max(tol, 3 * combined)`. Non-finite inputs fail.
pub fn decide(abs_diff: f64, lhs_err: f64, rhs_err: f64, tol: f64) -> Verdict {
    if !(abs_diff.is_finite() && lhs_err.is_finite() && rhs_err.is_finite()) {
        return Verdict::Fail;
    }
    let combined = lhs_err + rhs_err;
    if combined > tol {
        Verdict::Inconclusive
    } else if abs_diff <= tol.max(3.0 * combined) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// A parameter value in a result record: numeric parameters plus the
/// interval, RHS variant label and Bernoulli convention as text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Num(f64),
    Text(String),
}

impl Eq for ParamValue {}

impl Ord for ParamValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ParamValue::Num(a), ParamValue::Num(b)) => a.total_cmp(b),
            (ParamValue::Num(_), ParamValue::Text(_)) => Ordering::Less,
            (ParamValue::Text(_), ParamValue::Num(_)) => Ordering::Greater,
            (ParamValue::Text(a), ParamValue::Text(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ParamValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Num(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Finite floats as JSON numbers, non-finite ones as "NaN", "inf", "-inf".
pub mod real {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("NaN")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => match t.as_str() {
                "NaN" => Ok(f64::NAN),
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                other => Err(serde::de::Error::custom(format!("not a number: {other}"))),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationResult {
    pub identity_id: String,
    pub params: BTreeMap<String, ParamValue>,
    #[serde(with = "real")]
    pub lhs: f64,
    #[serde(with = "real")]
    pub lhs_err: f64,
    #[serde(with = "real")]
    pub rhs: f64,
    #[serde(with = "real")]
    pub rhs_err: f64,
    #[serde(with = "real")]
    pub abs_diff: f64,
    #[serde(with = "real")]
    pub rel_diff: f64,
    #[serde(with = "real")]
    pub tol: f64,
    pub verdict: Verdict,
    pub mode_notes: String,
    pub elapsed_ms: u64,
}

/// Field-wise equality with NaN equal to NaN, as needed for round trips.
impl PartialEq for VerificationResult {
    fn eq(&self, o: &Self) -> bool {
        let same = |a: f64, b: f64| a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan());
        self.identity_id == o.identity_id
            && self.params == o.params
            && same(self.lhs, o.lhs)
            && same(self.lhs_err, o.lhs_err)
            && same(self.rhs, o.rhs)
            && same(self.rhs_err, o.rhs_err)
            && same(self.abs_diff, o.abs_diff)
            && same(self.rel_diff, o.rel_diff)
            && same(self.tol, o.tol)
            && self.verdict == o.verdict
            && self.mode_notes == o.mode_notes
            && self.elapsed_ms == o.elapsed_ms
    }
}

impl VerificationResult {
    /// Numeric parameter, if present.
    pub fn num(&self, name: &str) -> Option<f64> {
        match self.params.get(name) {
            Some(ParamValue::Num(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn text(&self, name: &str) -> Option<&str> {
        match self.params.get(name) {
            Some(ParamValue::Text(s)) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub a_grid: Vec<f64>,
    pub tol: f64,
    pub quad: QuadConfig,
    pub series_tol: f64,
    /// Conventions tried for convention-dependent RHS variants.
    pub conventions: Vec<Convention>,
    /// Fill `elapsed_ms`; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            a_grid: DEFAULT_A_GRID.to_vec(),
            tol: DEFAULT_TOL,
            quad: QuadConfig::default(),
            series_tol: SeriesConfig::default().tol,
            conventions: vec![Convention::Modern],
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        self.quad.validate().map_err(CatalogError::from)?;
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(VerifyError::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        if !(self.series_tol > 0.0 && self.series_tol.is_finite()) {
            return Err(VerifyError::InvalidConfig(format!(
                "series tol must be positive, got {}",
                self.series_tol
            )));
        }
        if self.conventions.is_empty() {
            return Err(VerifyError::InvalidConfig("no Bernoulli convention selected".into()));
        }
        if let Some(a) = self.a_grid.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(VerifyError::InvalidConfig(format!("a-grid values must be > 0, got {a}")));
        }
        Ok(())
    }
}

fn join_notes(parts: impl IntoIterator<Item = String>) -> String {
    parts.into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("; ")
}

fn describe_eval(side: &str, e: &Evaluation) -> String {
    let mut parts = Vec::new();
    if let Some(m) = e.mode_used {
        parts.push(format!("{side}: {m}, {} terms", e.terms_used));
    }
    parts.extend(e.notes.iter().map(|n| format!("{side}: {n}")));
    join_notes(parts)
}

fn table_exhausted(e: &Evaluation) -> bool {
    !e.converged && e.notes.iter().any(|n| n.contains("exceeds the table limit"))
}

fn base_params(params: &Params) -> BTreeMap<String, ParamValue> {
    params.iter().map(|(k, v)| (k.clone(), ParamValue::Num(*v))).collect()
}

/// One LHS evaluation checked against every RHS variant (and convention).
fn check_point(
    ident: &Identity,
    params: &Params,
    interval: Option<Interval>,
    cfg: &SuiteConfig,
) -> Vec<VerificationResult> {
    let (qcfg, tol) = (&cfg.quad, cfg.tol);
    let started = Instant::now();
    let lhs = ident.lhs_evaluation(params, interval, qcfg);
    let lhs_ms = started.elapsed().as_millis() as u64;
    let mut rows = Vec::new();
    for variant in &ident.rhs {
        let convs: Vec<Option<Convention>> = if variant.value.convention_dependent() {
            cfg.conventions.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for conv in convs {
            let t0 = Instant::now();
            let scfg = SeriesConfig {
                tol: cfg.series_tol,
                convention: conv.unwrap_or(Convention::Modern),
            };
            let rhs = variant.value.evaluate(params, qcfg, &scfg);
            let mut p = base_params(params);
            if let Some(i) = interval {
                p.insert("interval".into(), ParamValue::Text(i.to_string()));
            }
            p.insert("variant".into(), ParamValue::Text(variant.label.to_string()));
            if let Some(c) = conv {
                p.insert("convention".into(), ParamValue::Text(c.name().to_string()));
            }
            let tol_eff = tol.max(variant.tol_floor);
            let elapsed_ms = if cfg.timing {
                lhs_ms + t0.elapsed().as_millis() as u64
            } else {
                0
            };
            rows.push(make_row(ident.id, p, &lhs, &rhs, tol_eff, elapsed_ms));
        }
    }
    rows
}

fn make_row(
    id: &str,
    params: BTreeMap<String, ParamValue>,
    lhs: &Result<Evaluation, CatalogError>,
    rhs: &Result<Evaluation, CatalogError>,
    tol: f64,
    elapsed_ms: u64,
) -> VerificationResult {
    let (l, le, lnote) = match lhs {
        Ok(e) => (e.value, e.error_estimate, describe_eval("lhs", e)),
        Err(err) => (f64::NAN, f64::NAN, format!("lhs error: {err}")),
    };
    let (r, re, rnote, unsupported) = match rhs {
        Ok(e) => (e.value, e.error_estimate, describe_eval("rhs", e), table_exhausted(e)),
        Err(err) => {
            let unsupported = matches!(
                err,
                CatalogError::SpecFun(crate::specfun::SpecFunError::Overflow { .. })
            );
            (f64::NAN, f64::NAN, format!("rhs error: {err}"), unsupported)
        }
    };
    let abs_diff = (l - r).abs();
    let scale = l.abs().max(r.abs());
    let rel_diff = if scale > 0.0 { abs_diff / scale } else { 0.0 };
    let verdict = if unsupported {
        Verdict::UnsupportedConvention
    } else {
        decide(abs_diff, le, re, tol)
    };
    VerificationResult {
        identity_id: id.to_string(),
        params,
        lhs: l,
        lhs_err: le,
        rhs: r,
        rhs_err: re,
        abs_diff,
        rel_diff,
        tol,
        verdict,
        mode_notes: join_notes([lnote, rnote]),
        elapsed_ms,
    }
}

fn lhs_pieces(ident: &Identity) -> Vec<Option<Interval>> {
    if ident.intervals.is_empty() {
        vec![None]
    } else {
        ident.intervals.iter().copied().map(Some).collect()
    }
}

/// Check one identity at one parameter point under `scfg.convention`.
///
/// Returns one record per (interval, RHS variant).
pub fn verify_identity(
    id: &str,
    params: &Params,
    qcfg: &QuadConfig,
    scfg: &SeriesConfig,
    tol: f64,
) -> Result<Vec<VerificationResult>, VerifyError> {
    let ident = find(id)?;
    ident.domain.check(params)?;
    let cfg = SuiteConfig {
        a_grid: Vec::new(),
        tol,
        quad: *qcfg,
        series_tol: scfg.tol,
        conventions: vec![scfg.convention],
        timing: false,
    };
    let mut rows: Vec<VerificationResult> = lhs_pieces(ident)
        .into_iter()
        .flat_map(|iv| check_point(ident, params, iv, &cfg))
        .collect();
    sort_results(&mut rows);
    Ok(rows)
}

/// Parameter points of an identity for a given a-grid; excluded points are dropped.
pub fn grid_points(ident: &Identity, a_grid: &[f64]) -> Vec<Params> {
    let pts: Vec<Params> = match &ident.domain.grid {
        Grid::AGrid => a_grid
            .iter()
            .map(|&a| [("a".to_string(), a)].into_iter().collect())
            .collect(),
        Grid::Fixed(sets) => sets.clone(),
    };
    pts.into_iter().filter(|p| ident.domain.check(p).is_ok()).collect()
}

pub fn sort_results(rows: &mut [VerificationResult]) {
    rows.sort_by(|x, y| (&x.identity_id, &x.params).cmp(&(&y.identity_id, &y.params)));
}

/// Run every identity in `ids` over its grid. Failures become rows; the
/// output order is canonical regardless of scheduling.
pub fn run_suite(ids: &[&str], cfg: &SuiteConfig) -> Result<Vec<VerificationResult>, VerifyError> {
    cfg.validate()?;
    let idents: Vec<&Identity> = ids.iter().map(|id| find(id)).collect::<Result<_, _>>()?;
    let tasks: Vec<(&Identity, Params, Option<Interval>)> = idents
        .iter()
        .flat_map(|ident| {
            grid_points(ident, &cfg.a_grid).into_iter().flat_map(move |p| {
                lhs_pieces(ident).into_iter().map(move |iv| (*ident, p.clone(), iv))
            })
        })
        .collect();
    let mut rows: Vec<VerificationResult> = tasks
        .par_iter()
        .flat_map_iter(|(ident, p, iv)| {
            check_point(ident, p, *iv, cfg)
        })
        .collect();
    sort_results(&mut rows);
    Ok(rows)
}

/// Every registry id, in registry order.
pub fn all_ids() -> Vec<&'static str> {
    registry().iter().map(|i| i.id).collect()
}

/// Least-squares constant c in I(n) ≈ c/n from the `remark-n` rows of one interval.
pub fn fitted_remark_constant(rows: &[VerificationResult], interval: Interval) -> Option<f64> {
    let label = interval.to_string();
    let mut seen = BTreeMap::new();
    for r in rows.iter().filter(|r| r.identity_id == "remark-n") {
        if r.text("interval") != Some(label.as_str()) {
            continue;
        }
        if let Some(n) = r.num("n") {
            seen.entry(n.to_bits()).or_insert((n, r.lhs));
        }
    }
    if seen.is_empty() {
        return None;
    }
    let (num, den) = seen
        .values()
        .fold((0.0, 0.0), |(s, d), (n, v)| (s + v / n, d + 1.0 / (n * n)));
    Some(num / den)
}

/// True when at least one row failed.
pub fn any_failed(rows: &[VerificationResult]) -> bool {
    rows.iter().any(|r| r.verdict == Verdict::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decide_rule() {
        assert_eq!(decide(1e-12, 1e-13, 1e-13, 1e-9), Verdict::Pass);
        assert_eq!(decide(2e-9, 1e-13, 1e-13, 1e-9), Verdict::Fail);
        assert_eq!(decide(1e-12, 1e-6, 0.0, 1e-9), Verdict::Inconclusive);
        assert_eq!(decide(1.0, 1e-6, 0.0, 1e-9), Verdict::Inconclusive);
        // 3x combined may exceed tol when combined itself does not
        assert_eq!(decide(2.5e-9, 5e-10, 4e-10, 1e-9), Verdict::Pass);
        assert_eq!(decide(f64::NAN, 0.0, 0.0, 1e-9), Verdict::Fail);
    }

    #[test]
    fn param_value_order_is_total() {
        let mut v = vec![
            ParamValue::Text("b".into()),
            ParamValue::Num(2.0),
            ParamValue::Text("a".into()),
            ParamValue::Num(-1.0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                ParamValue::Num(-1.0),
                ParamValue::Num(2.0),
                ParamValue::Text("a".into()),
                ParamValue::Text("b".into())
            ]
        );
    }

    #[test]
    fn non_finite_round_trip() {
        let row = make_row(
            "x",
            BTreeMap::new(),
            &Err(CatalogError::MissingParam("a".into())),
            &Ok(Evaluation {
                value: 1.0,
                error_estimate: 0.0,
                converged: true,
                mode_used: None,
                terms_used: 0,
                notes: vec![],
            }),
            1e-9,
            0,
        );
        assert_eq!(row.verdict, Verdict::Fail);
        let js = serde_json::to_string(&row).unwrap();
        assert!(js.contains("\"lhs\":\"NaN\""));
        let back: VerificationResult = serde_json::from_str(&js).unwrap();
        assert_eq!(back, row);
    }

    #[test]
    fn main_13_passes() {
        let rows = verify_identity(
            "main-13",
            &[("a".to_string(), PI)].into_iter().collect(),
            &QuadConfig::default(),
            &SeriesConfig::default(),
            DEFAULT_TOL,
        )
        .unwrap();
        assert_eq!(rows.len(), 6);
        for r in &rows {
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }

    #[test]
    fn excluded_points_are_skipped() {
        let ident = find("main-03").unwrap();
        let pts = grid_points(ident, &DEFAULT_A_GRID);
        assert_eq!(pts.len(), DEFAULT_A_GRID.len() - 1);
        assert!(pts.iter().all(|p| (p["a"] - PI).abs() > 1e-6));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(run_suite(&["no-such-id"], &SuiteConfig::default()).is_err());
        assert!(run_suite(&[], &SuiteConfig::default()).unwrap().is_empty());
    }
}
