use super::QuadError;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// ln(x)^p / (a² ± ln²x)^m · outer(x)
    LogKernel,
    /// ln(((n+1)²π² + ln²x) / ((n−1)²π² + ln²x)) · outer(x)
    LogRatioKernel { n: u32 },
    /// t / ((e^{bt} + 1)(t² + a²)) directly in t on (0, ∞)
    LegendreTKernel { b: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelSign {
    /// a² + ln²x
    Plus,
    /// a² − ln²x; the pole at ln x = −a is taken as a principal value (m = 1)
    /// or a Hadamard finite part (m = 2).
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outer {
    /// 1/(1+x)
    OnePlusX,
    /// 1/(1+x)²
    OnePlusXSquared,
    /// 1/(1−x)
    OneMinusX,
    /// x/(1−x²)
    XOverOneMinusX2,
    /// 1/(1−x²)
    OneMinusX2,
    /// 1/(1+x²)
    OnePlusX2,
    /// 1/((1+x)√x)
    OnePlusXSqrtX,
    /// (−x)ᵏ
    NegXPow(u32),
}

impl fmt::Display for Outer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outer::OnePlusX => write!(f, "1/(1+x)"),
            Outer::OnePlusXSquared => write!(f, "1/(1+x)^2"),
            Outer::OneMinusX => write!(f, "1/(1-x)"),
            Outer::XOverOneMinusX2 => write!(f, "x/(1-x^2)"),
            Outer::OneMinusX2 => write!(f, "1/(1-x^2)"),
            Outer::OnePlusX2 => write!(f, "1/(1+x^2)"),
            Outer::OnePlusXSqrtX => write!(f, "1/((1+x)sqrt(x))"),
            Outer::NegXPow(k) => write!(f, "(-x)^{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Interval {
    #[serde(rename = "(0,1)")]
    ZeroOne,
    #[serde(rename = "(1,inf)")]
    OneInf,
    #[serde(rename = "(0,inf)")]
    ZeroInf,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interval::ZeroOne => "(0,1)",
            Interval::OneInf => "(1,inf)",
            Interval::ZeroInf => "(0,inf)",
        })
    }
}

/// Which half-line piece of x a transformed integrand covers:
/// x = e^{−t} on (0,1), x = e^{t} on (1,∞), t ∈ (0,∞) in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Lower,
    Upper,
}

/// Large-t behaviour of the outer weight w(t) = x·outer(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Decay {
    /// |w(t)| ≤ c·e^{−λt} for t ≥ T, with c depending on T
    Exponential { rate: f64 },
    /// w(t) → 1
    Algebraic,
}

impl Outer {
    /// True if w(t) ~ 1/t as t → 0 on the (0,1) side.
    pub(crate) fn singular_at_one(self) -> bool {
        matches!(
            self,
            Outer::OneMinusX | Outer::XOverOneMinusX2 | Outer::OneMinusX2
        )
    }

    pub(crate) fn supports(self, side: Side) -> bool {
        match side {
            Side::Lower => true,
            Side::Upper => matches!(
                self,
                Outer::OnePlusX
                    | Outer::OnePlusXSquared
                    | Outer::OneMinusX2
                    | Outer::OnePlusX2
                    | Outer::OnePlusXSqrtX
            ),
        }
    }

    /// w(t) = x·outer(x) at x = e^{∓t}.
    pub(crate) fn weight(self, side: Side, t: f64) -> f64 {
        let e = (-t).exp();
        match (self, side) {
            (Outer::OnePlusX, Side::Lower) => e / (1.0 + e),
            (Outer::OnePlusX, Side::Upper) => 1.0 / (1.0 + e),
            (Outer::OnePlusXSquared, _) => e / ((1.0 + e) * (1.0 + e)),
            (Outer::OneMinusX, _) => 1.0 / t.exp_m1(),
            (Outer::XOverOneMinusX2, _) => 1.0 / (2.0 * t).exp_m1(),
            (Outer::OneMinusX2, Side::Lower) => e / -(-2.0 * t).exp_m1(),
            (Outer::OneMinusX2, Side::Upper) => -e / -(-2.0 * t).exp_m1(),
            (Outer::OnePlusX2, _) => e / (1.0 + e * e),
            (Outer::OnePlusXSqrtX, _) => (-0.5 * t).exp() / (1.0 + e),
            (Outer::NegXPow(k), _) => {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * (-((k + 1) as f64) * t).exp()
            }
        }
    }

    pub(crate) fn decay(self, side: Side) -> Decay {
        match (self, side) {
            (Outer::OnePlusX, Side::Upper) => Decay::Algebraic,
            (Outer::XOverOneMinusX2, _) => Decay::Exponential { rate: 2.0 },
            (Outer::OnePlusXSqrtX, _) => Decay::Exponential { rate: 0.5 },
            (Outer::NegXPow(k), _) => Decay::Exponential {
                rate: (k + 1) as f64,
            },
            _ => Decay::Exponential { rate: 1.0 },
        }
    }

    /// c(T) with |w(t)| ≤ c(T)·e^{−λt} for t ≥ T.
    pub(crate) fn decay_constant(self, t: f64) -> f64 {
        match self {
            Outer::OneMinusX => 1.0 / -(-t).exp_m1(),
            Outer::XOverOneMinusX2 | Outer::OneMinusX2 => 1.0 / -(-2.0 * t).exp_m1(),
            _ => 1.0,
        }
    }
}

/// Integrand of the log-kernel families.
///
/// For `LogKernel` the integrand on x is
/// `scale · ln(x)^p / (a² ± ln²x)^m · outer(x)`; for `LogRatioKernel` the
/// kernel factor is replaced by the logarithm of the ratio and p, m, a are
/// unused. `LegendreTKernel` is defined directly in t on (0, ∞) with a = shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrandSpec {
    #[serde(flatten)]
    pub family: Family,
    pub log_power: u32,
    pub denom_power: u32,
    pub shift: f64,
    pub sign: KernelSign,
    pub scale: f64,
    pub outer: Outer,
    pub interval: Interval,
}

impl IntegrandSpec {
    /// `1/(a² + ln²x)^m · ln(x)^p · outer(x)` on the given interval.
    pub fn log_kernel(p: u32, m: u32, a: f64, outer: Outer, interval: Interval) -> Self {
        Self {
            family: Family::LogKernel,
            log_power: p,
            denom_power: m,
            shift: a,
            sign: KernelSign::Plus,
            scale: 1.0,
            outer,
            interval,
        }
    }

    pub fn log_ratio(n: u32, interval: Interval) -> Self {
        Self {
            family: Family::LogRatioKernel { n },
            log_power: 0,
            denom_power: 1,
            shift: std::f64::consts::PI,
            sign: KernelSign::Plus,
            scale: 1.0,
            outer: Outer::OnePlusXSquared,
            interval,
        }
    }

    pub fn legendre(a: f64, b: f64) -> Self {
        Self {
            family: Family::LegendreTKernel { b },
            log_power: 1,
            denom_power: 1,
            shift: a,
            sign: KernelSign::Plus,
            scale: 1.0,
            outer: Outer::OnePlusX,
            interval: Interval::ZeroInf,
        }
    }

    pub fn with_sign(mut self, sign: KernelSign) -> Self {
        self.sign = sign;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn on(mut self, interval: Interval) -> Self {
        self.interval = interval;
        self
    }

    pub fn validate(&self) -> Result<(), QuadError> {
        let bad = |msg: String| Err(QuadError::InvalidSpec(msg));
        if !self.scale.is_finite() {
            return bad(format!("scale {} is not finite", self.scale));
        }
        match self.family {
            Family::LegendreTKernel { b } => {
                if !(self.shift > 0.0 && self.shift.is_finite() && b > 0.0 && b.is_finite()) {
                    return bad(format!("Legendre kernel needs a, b > 0 (a={}, b={b})", self.shift));
                }
                return Ok(());
            }
            Family::LogRatioKernel { n } => {
                if n < 1 {
                    return bad("log-ratio kernel needs n >= 1".into());
                }
                if self.outer != Outer::OnePlusXSquared {
                    return bad("log-ratio kernel is defined with outer 1/(1+x)^2".into());
                }
                if self.log_power != 0 {
                    return bad("log-ratio kernel takes no ln(x)^p numerator".into());
                }
            }
            Family::LogKernel => {
                if !(self.shift > 0.0 && self.shift.is_finite()) {
                    return bad(format!("shift a must be positive and finite, got {}", self.shift));
                }
                if self.log_power > 1 {
                    return bad(format!("log power {} not in {{0, 1}}", self.log_power));
                }
                if !(1..=2).contains(&self.denom_power) {
                    return bad(format!("denominator power {} not in {{1, 2}}", self.denom_power));
                }
            }
        }
        if self.sign == KernelSign::Minus && self.interval != Interval::ZeroOne {
            return bad("a² − ln²x kernels are supported on (0,1) only".into());
        }
        if self.outer.singular_at_one() && self.log_power == 0 {
            return bad(format!(
                "outer factor {} diverges at x = 1 without a ln(x) numerator",
                self.outer
            ));
        }
        let sides: &[Side] = match self.interval {
            Interval::ZeroOne => &[Side::Lower],
            Interval::OneInf => &[Side::Upper],
            Interval::ZeroInf => &[Side::Lower, Side::Upper],
        };
        for &side in sides {
            if !self.outer.supports(side) {
                return bad(format!(
                    "outer factor {} is not integrable on (1,inf)",
                    self.outer
                ));
            }
            if self.outer.decay(side) == Decay::Algebraic
                && self.family == Family::LogKernel
                && (self.log_power as i32) - 2 * (self.denom_power as i32) >= -1
            {
                return bad("integrand decays too slowly on (1,inf)".into());
            }
        }
        Ok(())
    }

    /// Kernel factor as a function of t = |ln x|, excluding the ln(x)^p numerator.
    pub(crate) fn kernel(&self, t: f64) -> f64 {
        match self.family {
            Family::LogKernel => {
                let a2 = self.shift * self.shift;
                let d = match self.sign {
                    KernelSign::Plus => a2 + t * t,
                    KernelSign::Minus => a2 - t * t,
                };
                if self.denom_power == 1 {
                    1.0 / d
                } else {
                    1.0 / (d * d)
                }
            }
            Family::LogRatioKernel { n } => {
                let pi2 = std::f64::consts::PI * std::f64::consts::PI;
                let hi = ((n + 1) * (n + 1)) as f64 * pi2;
                let lo = ((n - 1) * (n - 1)) as f64 * pi2;
                let t2 = t * t;
                // ln((hi + t²)/(lo + t²)) = ln1p((hi − lo)/(lo + t²))
                ((hi - lo) / (lo + t2)).ln_1p()
            }
            Family::LegendreTKernel { .. } => 1.0 / (self.shift * self.shift + t * t),
        }
    }

    /// ln(x)^p at x = e^{∓t}.
    pub(crate) fn numerator(&self, side: Side, t: f64) -> f64 {
        match (self.log_power, side) {
            (0, _) => 1.0,
            (p, Side::Lower) => (-t).powi(p as i32),
            (p, Side::Upper) => t.powi(p as i32),
        }
    }

    /// The integrand transformed to t ∈ (0, ∞) for one side.
    pub(crate) fn transformed(&self, side: Side, t: f64) -> f64 {
        self.scale * self.numerator(side, t) * self.kernel(t) * self.outer.weight(side, t)
    }
}

impl fmt::Display for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.log_power == 0 { "1" } else { "ln(x)" };
        let op = match self.sign {
            KernelSign::Plus => "+",
            KernelSign::Minus => "-",
        };
        if self.scale != 1.0 {
            write!(f, "{} * ", self.scale)?;
        }
        match self.family {
            Family::LogKernel => {
                let pow = if self.denom_power == 1 {
                    String::new()
                } else {
                    format!("^{}", self.denom_power)
                };
                write!(
                    f,
                    "int_{} {num}/({}^2 {op} ln(x)^2){pow} * {} dx",
                    self.interval, self.shift, self.outer
                )
            }
            Family::LogRatioKernel { n } => write!(
                f,
                "int_{} ln(({}pi^2 + ln(x)^2)/({}pi^2 + ln(x)^2)) * {} dx",
                self.interval,
                (n + 1) * (n + 1),
                (n - 1) * (n - 1),
                self.outer
            ),
            Family::LegendreTKernel { b } => write!(
                f,
                "int_(0,inf) t/((exp({b} t)+1)(t^2+{}^2)) dt",
                self.shift
            ),
        }
    }
}
