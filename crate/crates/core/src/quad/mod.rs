//! Adaptive quadrature and the log-kernel integrand family.

mod gk;
mod integrand;
mod logkernel;

pub use gk::{integrate_adaptive, integrate_breakpoints};
pub use integrand::{Family, IntegrandSpec, Interval, KernelSign, Outer};
pub use logkernel::{
    integrate, integrate_legendre, integrate_logkernel_01, integrate_logkernel_0inf,
    integrate_logkernel_1inf,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Initial truncation point of exponentially decaying integrands, in units
    /// of the decay length of the transformed variable t.
    pub tail_cutoff_margin: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            tail_cutoff_margin: 40.0,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<(), QuadError> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol > 0.0
            && self.max_subdivisions >= 1
            && self.tail_cutoff_margin > 0.0
            && self.abs_tol.is_finite()
            && self.rel_tol.is_finite()
            && self.tail_cutoff_margin.is_finite();
        if ok {
            Ok(())
        } else {
            Err(QuadError::InvalidConfig(format!("{self:?}")))
        }
    }

    pub(crate) fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    pub(crate) fn scaled(&self, factor: f64) -> Self {
        Self {
            abs_tol: self.abs_tol * factor,
            rel_tol: self.rel_tol * factor,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions_used: usize,
    pub converged: bool,
}

impl QuadResult {
    /// Sum of two independent pieces; errors add.
    pub fn combine(self, other: QuadResult, cfg: &QuadConfig) -> QuadResult {
        let value = self.value + other.value;
        let error_estimate = self.error_estimate + other.error_estimate;
        QuadResult {
            value,
            error_estimate,
            subdivisions_used: self.subdivisions_used + other.subdivisions_used,
            converged: self.converged
                && other.converged
                && error_estimate <= cfg.tolerance(value),
        }
    }

    pub fn scale(self, factor: f64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.abs(),
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("integrand is not finite at t = {0}")]
    NonFinite(f64),
    #[error("invalid integrand: {0}")]
    InvalidSpec(String),
}
