//! Numerical verification of definite integrals built on the kernel
//! `1/(a² + ln²x)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`]: lnΓ, ψ and ψ⁽ⁿ⁾, Si/Ci, Bernoulli numbers, ζ, Li₂ and a few
//!   classical series representations.
//! * [`quad`]: adaptive Gauss–Kronrod quadrature and log-kernel integrands
//!   evaluated in the variable `t = −ln x`.
//! * [`series`]: direct, tail-corrected, Euler-accelerated and Cesàro summation.
//! * [`catalog`]: the registry of identities with their left- and right-hand sides.
//! * [`verify`]: verdicts, suite runs and the appendix-table hunt.

// Frozen constants keep every digit they were published with, and `!(x > 0.0)`
// guards are meant to reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod compensated;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod verify;

