//! Special functions in IEEE double precision.

mod bernoulli;
mod dilog;
mod expint;
mod gamma;
mod kummer;
mod saalschuetz;
mod zeta;

pub use bernoulli::{
    bernoulli, bernoulli_even, bernoulli_even_exact, bernoulli_even_via_zeta, Convention, K_MAX,
};
pub use dilog::dilog;
pub use expint::{ci, ei_imag, sici, si_lower, si_upper, ComplexPair, SiCi};
pub use gamma::{digamma, gamma_ln, polygamma};
pub use kummer::{kummer_ln_gamma, kummer_ln_gamma_detailed, KummerEstimate};
pub use saalschuetz::tanh_saalschuetz;
pub use zeta::zeta;

use thiserror::Error;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("{function}: argument {x} is outside the domain {domain}")]
    Domain {
        function: &'static str,
        x: f64,
        domain: &'static str,
    },
    #[error("{function}: pole at {x}")]
    Pole { function: &'static str, x: f64 },
    #[error("polygamma: order {0} is not supported (supported orders: 1, 2)")]
    UnsupportedOrder(u32),
    #[error("bernoulli: index {index} exceeds the table limit {limit}")]
    Overflow { index: u32, limit: u32 },
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

pub(crate) fn domain(function: &'static str, x: f64, domain: &'static str) -> SpecFunError {
    SpecFunError::Domain {
        function,
        x,
        domain,
    }
}
