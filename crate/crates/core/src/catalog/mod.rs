//! Registry of identities: left-hand sides as integrals or computed values,
//! right-hand sides as closed forms, series or exact constants.

pub mod expr;
mod lemmas;
mod registry;

pub use expr::{Expr, Func};
pub use lemmas::{moment_integral, summation_formula, trig_difference, trig_difference_exact};
pub use registry::build_registry;

use crate::quad::{integrate, IntegrandSpec, Interval, QuadConfig, QuadError, QuadResult};
use crate::series::{sum, Mode, SeriesError, SeriesSpec, TermId};
use crate::specfun::{Convention, SpecFunError};
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::OnceLock;
use thiserror::Error;

pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown identity '{0}'")]
    UnknownId(String),
    #[error("missing parameter '{0}'")]
    MissingParam(String),
    #[error("parameter out of domain: {0}")]
    OutOfDomain(String),
    #[error("identity '{id}' has {count} right-hand sides; variant {index} does not exist")]
    BadVariant { id: String, index: usize, count: usize },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// A value other than an integral: closed form, affine image of a series,
/// exact rational, or a dedicated computation.
#[derive(Debug, Clone)]
pub enum ValueExpr {
    ClosedForm(Expr),
    /// offset + scale · Σ term
    Series {
        term: TermId,
        params: Vec<(&'static str, Expr)>,
        mode: Mode,
        fallback: Option<Mode>,
        max_terms: Option<u64>,
        offset: Expr,
        scale: Expr,
    },
    RationalConstant { p: i64, q: i64 },
    Computed {
        description: &'static str,
        eval: fn(&Params, &QuadConfig) -> Result<Estimate, CatalogError>,
    },
}

impl ValueExpr {
    pub fn series(term: TermId, mode: Mode) -> Self {
        ValueExpr::Series {
            term,
            params: Vec::new(),
            mode,
            fallback: None,
            max_terms: None,
            offset: expr::num(0.0),
            scale: expr::num(1.0),
        }
    }

    /// Parameter binding, offset or scale on a series value (no-op otherwise).
    pub fn with_param(mut self, name: &'static str, e: Expr) -> Self {
        if let ValueExpr::Series { params, .. } = &mut self {
            params.push((name, e));
        }
        self
    }

    pub fn affine(mut self, off: Expr, sc: Expr) -> Self {
        if let ValueExpr::Series { offset, scale, .. } = &mut self {
            *offset = off;
            *scale = sc;
        }
        self
    }

    pub fn terms(mut self, n: u64) -> Self {
        if let ValueExpr::Series { max_terms, .. } = &mut self {
            *max_terms = Some(n);
        }
        self
    }

    pub fn or_else(mut self, m: Mode) -> Self {
        if let ValueExpr::Series { fallback, .. } = &mut self {
            *fallback = Some(m);
        }
        self
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ValueExpr::ClosedForm(_) => "closed_form",
            ValueExpr::Series { .. } => "series",
            ValueExpr::RationalConstant { .. } => "rational_constant",
            ValueExpr::Computed { .. } => "computed",
        }
    }

    /// True when the value depends on the Bernoulli convention.
    pub fn convention_dependent(&self) -> bool {
        matches!(self, ValueExpr::Series { term, .. } if term.info().convention_dependent)
    }

    pub fn describe(&self) -> String {
        match self {
            ValueExpr::ClosedForm(e) => e.to_string(),
            ValueExpr::Series {
                term,
                params,
                mode,
                offset,
                scale,
                ..
            } => {
                let info = term.info();
                let bind: Vec<String> = params.iter().map(|(n, e)| format!("{n}={e}")).collect();
                let bind = if bind.is_empty() {
                    String::new()
                } else {
                    format!("[{}]", bind.join(", "))
                };
                let sum = format!("sum_{{k>={}}} {}{bind} ({mode})", info.start, info.formula);
                let zero = matches!(offset, Expr::Num(x) if *x == 0.0);
                let one = matches!(scale, Expr::Num(x) if *x == 1.0);
                match (zero, one) {
                    (true, true) => sum,
                    (true, false) => format!("{scale} * {sum}"),
                    (false, true) => format!("{offset} + {sum}"),
                    (false, false) => format!("{offset} + ({scale}) * {sum}"),
                }
            }
            ValueExpr::RationalConstant { p, q } => format!("{p}/{q}"),
            ValueExpr::Computed { description, .. } => description.to_string(),
        }
    }

    pub fn evaluate(
        &self,
        params: &Params,
        qcfg: &QuadConfig,
        scfg: &SeriesConfig,
    ) -> Result<Evaluation, CatalogError> {
        match self {
            ValueExpr::ClosedForm(e) => Ok(Evaluation::exact(e.eval(params)?)),
            ValueExpr::RationalConstant { p, q } => {
                let v = *p as f64 / *q as f64;
                Ok(Evaluation::exact(Estimate {
                    value: v,
                    error: 0.5 * f64::EPSILON * v.abs(),
                }))
            }
            ValueExpr::Computed { eval, .. } => Ok(Evaluation::exact(eval(params, qcfg)?)),
            ValueExpr::Series {
                term,
                params: bound,
                mode,
                fallback,
                max_terms,
                offset,
                scale,
            } => {
                let mut spec = SeriesSpec::new(*term, *mode)
                    .tol(scfg.tol)
                    .convention(scfg.convention);
                if let Some(n) = max_terms {
                    spec = spec.max_terms(*n);
                }
                if let Some(m) = fallback {
                    spec = spec.fallback(*m);
                }
                for (name, e) in bound {
                    spec = spec.param(name, e.eval(params)?.value);
                }
                let s = sum(&spec)?;
                let off = offset.eval(params)?;
                let sc = scale.eval(params)?;
                let value = off.value + sc.value * s.value;
                let error = off.error
                    + sc.value.abs() * s.error_estimate
                    + sc.error * s.value.abs()
                    + 0.5 * f64::EPSILON * value.abs();
                let mut notes = s.notes;
                if !s.converged {
                    notes.push(format!(
                        "series did not reach tol {:e} (estimate {:e})",
                        scfg.tol, s.error_estimate
                    ));
                }
                Ok(Evaluation {
                    value,
                    error_estimate: error,
                    converged: s.converged,
                    mode_used: Some(s.mode_used),
                    terms_used: s.terms_used,
                    notes,
                })
            }
        }
    }
}

/// Settings shared by all series evaluations of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub tol: f64,
    pub convention: Convention,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            convention: Convention::Modern,
        }
    }
}

/// Result of evaluating a [`ValueExpr`] or a non-integral left-hand side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub mode_used: Option<Mode>,
    pub terms_used: u64,
    pub notes: Vec<String>,
}

impl Evaluation {
    fn exact(e: Estimate) -> Self {
        Self {
            value: e.value,
            error_estimate: e.error,
            converged: e.value.is_finite(),
            mode_used: None,
            terms_used: 0,
            notes: Vec::new(),
        }
    }
}

impl From<QuadResult> for Evaluation {
    fn from(q: QuadResult) -> Self {
        let mut notes = Vec::new();
        if !q.converged {
            notes.push(format!(
                "quadrature unconverged after {} subdivisions",
                q.subdivisions_used
            ));
        }
        Self {
            value: q.value,
            error_estimate: q.error_estimate,
            converged: q.converged,
            mode_used: None,
            terms_used: 0,
            notes,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Lhs {
    /// Integrated on each of the identity's intervals.
    Integral(IntegrandSpec),
    /// Σ cᵢ ∫ specᵢ over the intervals stored in each spec.
    Combination(Vec<(f64, IntegrandSpec)>),
    Value(ValueExpr),
}

#[derive(Debug, Clone)]
pub struct RhsVariant {
    pub label: &'static str,
    pub value: ValueExpr,
    /// Lower bound on the verification tolerance for this variant.
    pub tol_floor: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusHint {
    ExpectedPass,
    Suspect,
    ArchaicConvention,
}

#[derive(Debug, Clone)]
pub enum Grid {
    /// Every point of the run's a-grid.
    AGrid,
    /// Fixed parameter sets, independent of the a-grid.
    Fixed(Vec<Params>),
}

#[derive(Debug, Clone)]
pub struct ParamDomain {
    pub description: &'static str,
    pub grid: Grid,
    pub required: &'static [&'static str],
    /// Reject a within 1e-6 of an odd multiple of π.
    pub exclude_odd_pi: bool,
}

impl ParamDomain {
    pub fn check(&self, params: &Params) -> Result<(), CatalogError> {
        for name in self.required {
            let v = *params
                .get(*name)
                .ok_or_else(|| CatalogError::MissingParam(name.to_string()))?;
            if !v.is_finite() {
                return Err(CatalogError::OutOfDomain(format!("{name} = {v}")));
            }
        }
        if let Some(&a) = params.get("a") {
            if !(a > 0.0) {
                return Err(CatalogError::OutOfDomain(format!("a must be > 0, got {a}")));
            }
            if self.exclude_odd_pi && near_odd_pi(a) {
                return Err(CatalogError::OutOfDomain(format!(
                    "a = {a} is within 1e-6 of an odd multiple of pi"
                )));
            }
        }
        Ok(())
    }
}

pub fn near_odd_pi(a: f64) -> bool {
    let j = ((a / PI - 1.0) / 2.0).round();
    j >= 0.0 && (a - (2.0 * j + 1.0) * PI).abs() <= 1e-6
}

pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
    pub lhs: fn(&Params) -> Result<Lhs, CatalogError>,
    /// Intervals on which an `Lhs::Integral` is checked; empty otherwise.
    pub intervals: Vec<Interval>,
    pub rhs: Vec<RhsVariant>,
    pub domain: ParamDomain,
    pub citation: &'static str,
    pub status_hint: StatusHint,
}

impl Identity {
    pub fn build_lhs(&self, params: &Params) -> Result<Lhs, CatalogError> {
        self.domain.check(params)?;
        (self.lhs)(params)
    }

    /// Evaluate the left-hand side; `interval` selects the piece for integrals.
    pub fn lhs_evaluation(
        &self,
        params: &Params,
        interval: Option<Interval>,
        qcfg: &QuadConfig,
    ) -> Result<Evaluation, CatalogError> {
        match self.build_lhs(params)? {
            Lhs::Integral(spec) => {
                let spec = match interval {
                    Some(i) => spec.on(i),
                    None => spec,
                };
                Ok(integrate(&spec, qcfg)?.into())
            }
            Lhs::Combination(parts) => {
                let mut value = 0.0;
                let mut err = 0.0;
                let mut converged = true;
                for (c, spec) in parts {
                    let r = integrate(&spec, qcfg)?;
                    value += c * r.value;
                    err += c.abs() * r.error_estimate;
                    converged &= r.converged;
                }
                Ok(Evaluation {
                    value,
                    error_estimate: err + 2.0 * f64::EPSILON * value.abs(),
                    converged,
                    mode_used: None,
                    terms_used: 0,
                    notes: Vec::new(),
                })
            }
            Lhs::Value(v) => v.evaluate(params, qcfg, &SeriesConfig::default()),
        }
    }

    pub fn rhs_evaluation(
        &self,
        variant: usize,
        params: &Params,
        qcfg: &QuadConfig,
        scfg: &SeriesConfig,
    ) -> Result<Evaluation, CatalogError> {
        self.domain.check(params)?;
        let v = self.rhs.get(variant).ok_or_else(|| CatalogError::BadVariant {
            id: self.id.to_string(),
            index: variant,
            count: self.rhs.len(),
        })?;
        v.value.evaluate(params, qcfg, scfg)
    }
}

/// The registry, built once.
pub fn registry() -> &'static [Identity] {
    static REG: OnceLock<Vec<Identity>> = OnceLock::new();
    REG.get_or_init(build_registry)
}

pub fn find(id: &str) -> Result<&'static Identity, CatalogError> {
    registry()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

/// Left-hand side on the identity's first interval (or its only value).
pub fn lhs_value(id: &str, params: &Params, cfg: &QuadConfig) -> Result<QuadResult, CatalogError> {
    let ident = find(id)?;
    let e = ident.lhs_evaluation(params, ident.intervals.first().copied(), cfg)?;
    Ok(QuadResult {
        value: e.value,
        error_estimate: e.error_estimate,
        subdivisions_used: 0,
        converged: e.converged,
    })
}

pub fn lhs_value_on(
    id: &str,
    params: &Params,
    interval: Interval,
    cfg: &QuadConfig,
) -> Result<QuadResult, CatalogError> {
    let ident = find(id)?;
    let spec = match ident.build_lhs(params)? {
        Lhs::Integral(spec) => spec.on(interval),
        _ => {
            return Err(CatalogError::OutOfDomain(format!(
                "identity '{id}' has no integral left-hand side"
            )))
        }
    };
    Ok(integrate(&spec, cfg)?)
}

pub fn rhs_value(
    id: &str,
    variant: usize,
    params: &Params,
    scfg: &SeriesConfig,
) -> Result<Evaluation, CatalogError> {
    find(id)?.rhs_evaluation(variant, params, &QuadConfig::default(), scfg)
}

#[derive(Debug, Clone, Serialize)]
pub struct RhsExport {
    pub label: &'static str,
    pub kind: &'static str,
    pub expression: String,
    pub tol_floor: f64,
    pub convention_dependent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityExport {
    pub id: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
    pub param_domain: &'static str,
    pub grid: String,
    pub intervals: Vec<String>,
    pub rhs: Vec<RhsExport>,
    pub status_hint: StatusHint,
}

impl Identity {
    pub fn export(&self) -> IdentityExport {
        let grid = match &self.domain.grid {
            Grid::AGrid => "a-grid".to_string(),
            Grid::Fixed(sets) => {
                let pts: Vec<String> = sets
                    .iter()
                    .map(|p| {
                        let kv: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        format!("{{{}}}", kv.join(", "))
                    })
                    .collect();
                pts.join(" ")
            }
        };
        IdentityExport {
            id: self.id,
            statement: self.statement,
            citation: self.citation,
            param_domain: self.domain.description,
            grid,
            intervals: self.intervals.iter().map(|i| i.to_string()).collect(),
            rhs: self
                .rhs
                .iter()
                .map(|r| RhsExport {
                    label: r.label,
                    kind: r.value.kind(),
                    expression: r.value.describe(),
                    tol_floor: r.tol_floor,
                    convention_dependent: r.value.convention_dependent(),
                })
                .collect(),
            status_hint: self.status_hint,
        }
    }
}

/// JSON document describing every identity.
pub fn export_json() -> String {
    let docs: Vec<IdentityExport> = registry().iter().map(Identity::export).collect();
    serde_json::to_string_pretty(&docs).expect("registry export is plain data")
}
