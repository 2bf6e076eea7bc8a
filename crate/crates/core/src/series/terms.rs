use super::{Mode, SeriesError, SeriesSpec};
use crate::specfun::{bernoulli, bernoulli_even, sici, zeta, Convention, SpecFunError};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Named term sequences that the catalog and the CLI can sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermId {
    Telescoping,
    AltZeta,
    Grandi,
    #[serde(rename = "zeta_k4k")]
    ZetaK4k,
    #[serde(rename = "zeta_2km1_4k")]
    Zeta2km14k,
    BernoulliPi,
    #[serde(rename = "log_kk1")]
    LogKk1,
    #[serde(rename = "log_2km1_2kp3")]
    Log2km12kp3,
    #[serde(rename = "log_k2k12")]
    LogK2k12,
    LogShiftA,
    LogShiftASq,
    SiciA,
    SiKpi,
    KSiKpi,
    CiKpi,
    KCiKpi,
    Saalschuetz,
    #[serde(rename = "bernoulli_alt_n1")]
    BernoulliAltN1,
    BernoulliPlain,
    BernoulliAlt,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermInfo {
    pub name: &'static str,
    pub formula: &'static str,
    pub start: u64,
    pub params: &'static [&'static str],
    pub modes: &'static [Mode],
    pub convention_dependent: bool,
}

const SMOOTH: &[Mode] = &[Mode::Direct, Mode::TailCorrected, Mode::CesaroC1];
const ALTERNATING: &[Mode] = &[Mode::Direct, Mode::AlternatingAccelerated, Mode::CesaroC1];
const GEOMETRIC: &[Mode] = &[Mode::Direct];

impl TermId {
    pub const ALL: [TermId; 20] = [
        TermId::Telescoping,
        TermId::AltZeta,
        TermId::Grandi,
        TermId::ZetaK4k,
        TermId::Zeta2km14k,
        TermId::BernoulliPi,
        TermId::LogKk1,
        TermId::Log2km12kp3,
        TermId::LogK2k12,
        TermId::LogShiftA,
        TermId::LogShiftASq,
        TermId::SiciA,
        TermId::SiKpi,
        TermId::KSiKpi,
        TermId::CiKpi,
        TermId::KCiKpi,
        TermId::Saalschuetz,
        TermId::BernoulliAltN1,
        TermId::BernoulliPlain,
        TermId::BernoulliAlt,
    ];

    pub fn info(self) -> TermInfo {
        let (name, formula, start, params, modes, conv): (_, _, _, &'static [&'static str], _, _) =
            match self {
                TermId::Telescoping => ("telescoping", "1/(k(k+1))", 1, &[], SMOOTH, false),
                TermId::AltZeta => ("alt_zeta", "(-1)^(k+1)/k^s", 1, &["s"], ALTERNATING, false),
                TermId::Grandi => (
                    "grandi",
                    "(-1)^(k+1)",
                    1,
                    &[],
                    &[Mode::AlternatingAccelerated, Mode::CesaroC1][..],
                    false,
                ),
                TermId::ZetaK4k => ("zeta_k4k", "zeta(2k)/(k 4^k)", 1, &[], GEOMETRIC, false),
                TermId::Zeta2km14k => {
                    ("zeta_2km1_4k", "zeta(2k)/((2k-1) 4^k)", 1, &[], GEOMETRIC, false)
                }
                TermId::BernoulliPi => (
                    "bernoulli_pi",
                    "(-1)^k pi^(2k) B_2k/((2k)! k (2k-1))",
                    1,
                    &[],
                    GEOMETRIC,
                    false,
                ),
                TermId::LogKk1 => ("log_kk1", "ln(2k+1)/(k(k+1))", 1, &[], SMOOTH, false),
                TermId::Log2km12kp3 => {
                    ("log_2km1_2kp3", "ln(2k+1)/((2k-1)(2k+3))", 1, &[], SMOOTH, false)
                }
                TermId::LogK2k12 => ("log_k2k12", "ln(2k+1)/(k^2 (k+1)^2)", 1, &[], SMOOTH, false),
                TermId::LogShiftA => (
                    "log_shift_a",
                    "(ln a - ln pi - ln(2k+1))/(a^2 - (2k+1)^2 pi^2)",
                    0,
                    &["a"],
                    SMOOTH,
                    false,
                ),
                TermId::LogShiftASq => (
                    "log_shift_a_sq",
                    "(ln((2k+1) pi) - ln a)/((2k+1)^2 pi^2 - a^2)^2",
                    0,
                    &["a"],
                    SMOOTH,
                    false,
                ),
                TermId::SiciA => (
                    "sici_a",
                    "(-1)^k [si(ak) cos(ak) - Ci(ak) sin(ak)]",
                    1,
                    &["a"],
                    ALTERNATING,
                    false,
                ),
                TermId::SiKpi => ("si_kpi", "si(k pi)", 1, &[], ALTERNATING, false),
                TermId::KSiKpi => ("k_si_kpi", "k si(k pi)", 1, &[], ALTERNATING, false),
                TermId::CiKpi => ("ci_kpi", "Ci(k pi)", 1, &[], ALTERNATING, false),
                TermId::KCiKpi => ("k_ci_kpi", "k Ci(k pi)", 1, &[], ALTERNATING, false),
                TermId::Saalschuetz => (
                    "saalschuetz",
                    "8x/((2k+1)^2 pi^2 + 4x^2)",
                    0,
                    &["x"],
                    &[Mode::Direct, Mode::TailCorrected][..],
                    false,
                ),
                TermId::BernoulliAltN1 => (
                    "bernoulli_alt_n1",
                    "(-1)^(n-1)/(n+1) B_(2n+1) r^(2n)",
                    0,
                    &["r"],
                    GEOMETRIC,
                    true,
                ),
                TermId::BernoulliPlain => {
                    ("bernoulli_plain", "B_(2n+1) r^(2n)", 0, &["r"], GEOMETRIC, true)
                }
                TermId::BernoulliAlt => {
                    ("bernoulli_alt", "(-1)^(n-1) B_(2n+1) r^(2n)", 0, &["r"], GEOMETRIC, true)
                }
            };
        TermInfo {
            name,
            formula,
            start,
            params,
            modes,
            convention_dependent: conv,
        }
    }

    pub fn name(self) -> &'static str {
        self.info().name
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TermId::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<_> = TermId::ALL.iter().map(|t| t.name()).collect();
                format!("unknown series '{s}'; valid series: {}", names.join(", "))
            })
    }
}

fn sign(k: u64) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// A term sequence with its parameters bound.
pub(crate) struct BoundTerm {
    id: TermId,
    p: f64,
    convention: Convention,
}

pub(crate) fn resolve(spec: &SeriesSpec) -> Result<BoundTerm, SeriesError> {
    let info = spec.term_id.info();
    for key in spec.params.keys() {
        if !info.params.contains(&key.as_str()) {
            return Err(SeriesError::InvalidSpec(format!(
                "series '{}' takes no parameter '{key}' (parameters: [{}])",
                info.name,
                info.params.join(", ")
            )));
        }
    }
    let p = match info.params.first() {
        Some(&name) => *spec.params.get(name).ok_or(SeriesError::MissingParam {
            term: info.name,
            name,
        })?,
        None => 0.0,
    };
    if !p.is_finite() {
        return Err(SeriesError::InvalidSpec(format!("parameter of '{}' is not finite", info.name)));
    }
    let bad = match spec.term_id {
        TermId::AltZeta => p <= 0.0,
        TermId::LogShiftA | TermId::LogShiftASq | TermId::SiciA => p <= 0.0,
        _ => false,
    };
    if bad {
        return Err(SeriesError::InvalidSpec(format!(
            "series '{}' requires a positive parameter, got {p}",
            info.name
        )));
    }
    Ok(BoundTerm {
        id: spec.term_id,
        p,
        convention: spec.convention,
    })
}

impl BoundTerm {
    pub(crate) fn start(&self) -> u64 {
        self.id.info().start
    }

    pub(crate) fn eval(&self, k: u64) -> Result<f64, SpecFunError> {
        let kf = k as f64;
        let odd = 2.0 * kf + 1.0;
        Ok(match self.id {
            TermId::Telescoping => 1.0 / (kf * (kf + 1.0)),
            TermId::AltZeta => -sign(k) / kf.powf(self.p),
            TermId::Grandi => -sign(k),
            TermId::ZetaK4k => zeta(2.0 * kf)? / (kf * 4f64.powf(kf)),
            TermId::Zeta2km14k => zeta(2.0 * kf)? / ((2.0 * kf - 1.0) * 4f64.powf(kf)),
            TermId::BernoulliPi => {
                let kk = u32::try_from(k).unwrap_or(u32::MAX);
                let b = bernoulli_even(kk, Convention::Modern)?;
                let mut r = 1.0;
                for j in 1..=2 * k {
                    r *= PI / j as f64;
                }
                sign(k) * r * b / (kf * (2.0 * kf - 1.0))
            }
            TermId::LogKk1 => odd.ln() / (kf * (kf + 1.0)),
            TermId::Log2km12kp3 => odd.ln() / ((2.0 * kf - 1.0) * (2.0 * kf + 3.0)),
            TermId::LogK2k12 => odd.ln() / (kf * kf * (kf + 1.0) * (kf + 1.0)),
            TermId::LogShiftA | TermId::LogShiftASq => return Ok(self.model(kf)),
            TermId::SiciA => {
                let x = self.p * kf;
                let v = sici(x)?;
                let (s, c) = x.sin_cos();
                sign(k) * (v.si_lower * c - v.ci * s)
            }
            TermId::SiKpi => sici(kf * PI)?.si_lower,
            TermId::KSiKpi => kf * sici(kf * PI)?.si_lower,
            TermId::CiKpi => sici(kf * PI)?.ci,
            TermId::KCiKpi => kf * sici(kf * PI)?.ci,
            TermId::Saalschuetz => self.model(kf),
            TermId::BernoulliAltN1 | TermId::BernoulliPlain | TermId::BernoulliAlt => {
                let idx = u32::try_from(2 * k + 1).unwrap_or(u32::MAX);
                let b = bernoulli(idx, self.convention)?;
                let r = self.p.powi(2 * k as i32);
                // (−1)^(n−1)
                let s = -sign(k);
                match self.id {
                    TermId::BernoulliAltN1 => s * b * r / (kf + 1.0),
                    TermId::BernoulliPlain => b * r,
                    _ => s * b * r,
                }
            }
        })
    }

    /// Smooth continuation of the term in k, for tail-corrected summation.
    pub(crate) fn model(&self, x: f64) -> f64 {
        let odd = 2.0 * x + 1.0;
        let a = self.p;
        match self.id {
            TermId::Telescoping => 1.0 / (x * (x + 1.0)),
            TermId::LogKk1 => odd.ln() / (x * (x + 1.0)),
            TermId::Log2km12kp3 => odd.ln() / ((2.0 * x - 1.0) * (2.0 * x + 3.0)),
            TermId::LogK2k12 => odd.ln() / (x * x * (x + 1.0) * (x + 1.0)),
            TermId::LogShiftA => {
                let w = odd * PI;
                (a.ln() - w.ln()) / ((a - w) * (a + w))
            }
            TermId::LogShiftASq => {
                let w = odd * PI;
                let d = (w - a) * (w + a);
                (w.ln() - a.ln()) / (d * d)
            }
            TermId::Saalschuetz => 8.0 * a / (odd * odd * PI * PI + 4.0 * a * a),
            _ => f64::NAN,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_round_trip_and_are_unique() {
        let mut seen = HashSet::new();
        for t in TermId::ALL {
            assert!(seen.insert(t.name()));
            assert_eq!(t.name().parse::<TermId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.name()));
        }
        assert!("nope".parse::<TermId>().unwrap_err().contains("log_kk1"));
    }

    #[test]
    fn models_match_terms() {
        for t in TermId::ALL {
            if !t.info().modes.contains(&Mode::TailCorrected) {
                continue;
            }
            let mut spec = SeriesSpec::new(t, Mode::TailCorrected);
            if let Some(p) = t.info().params.first() {
                spec = spec.param(p, 1.3);
            }
            let b = resolve(&spec).unwrap();
            for k in [1u64, 7, 50] {
                let (e, m) = (b.eval(k).unwrap(), b.model(k as f64));
                assert!((e - m).abs() <= 1e-15 * e.abs(), "{t} at {k}");
            }
        }
    }

    #[test]
    fn sici_a_terms_decay_like_one_over_ak() {
        // si cos − Ci sin ≈ −1/x, so the signed term is (−1)^{k+1}/(ak)·(1 + O(1/k²)).
        let spec = SeriesSpec::new(TermId::SiciA, Mode::Direct).param("a", 1.0);
        let b = resolve(&spec).unwrap();
        for k in [200u64, 201] {
            let t = b.eval(k).unwrap() * k as f64;
            assert!((t.abs() - 1.0).abs() < 1e-4, "k={k} {t}");
        }
    }

    #[test]
    fn bernoulli_terms_by_convention() {
        let spec = SeriesSpec::new(TermId::BernoulliPlain, Mode::Direct).param("r", 0.5);
        let b = resolve(&spec).unwrap();
        assert_eq!(b.eval(0).unwrap(), 0.5);
        assert_eq!(b.eval(3).unwrap(), 0.0);
        let b = resolve(&spec.clone().convention(Convention::Archaic)).unwrap();
        // archaic B_3 = |B_6| = 1/42
        assert!((b.eval(1).unwrap() - 0.25 / 42.0).abs() < 1e-17);
        assert!(b.eval(20).is_err());
    }
}
