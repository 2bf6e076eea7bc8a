use super::{domain, Result, EULER_GAMMA};
use crate::compensated::Neumaier;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

/// Number of Euler-transform columns applied to the tail Σ_{k>N} ln k/k · zᵏ.
const EULER_COLUMNS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerEstimate {
    pub value: f64,
    pub error_estimate: f64,
}

/// Kummer's Fourier series for ln Γ(y), 0 < y < 1:
///
/// ln Γ(y) = (½ − y)(γ + ln 2) + (1 − y) ln π − ½ ln sin πy + (1/π) Σ_{k≥1} ln k / k · sin 2πky
///
/// The first `terms` summands are added directly; the remainder is the
/// imaginary part of Σ_{k>N} ln k/k · zᵏ with z = e^{2πiy}, evaluated by
/// repeated summation by parts (Euler's transformation in powers of z/(1−z)).
pub fn kummer_ln_gamma_detailed(y: f64, terms: u64) -> Result<KummerEstimate> {
    if !(y > 0.0 && y < 1.0) {
        return Err(domain("kummer_ln_gamma", y, "0 < y < 1"));
    }
    if terms == 0 {
        return Err(domain("kummer_ln_gamma", 0.0, "terms >= 1"));
    }
    let closed =
        (0.5 - y) * (EULER_GAMMA + LN_2) + (1.0 - y) * PI.ln() - 0.5 * (PI * y).sin().ln();

    let mut partial = Neumaier::new();
    for k in 2..=terms {
        let kf = k as f64;
        partial.add(kf.ln() / kf * (2.0 * PI * y * kf).sin());
    }

    let a = |k: u64| (k as f64).ln() / k as f64;
    let z = Complex64::from_polar(1.0, 2.0 * PI * y);
    let one_minus_z = Complex64::new(1.0, 0.0) - z;
    let first = terms + 1;
    let b: Vec<f64> = (0..EULER_COLUMNS as u64).map(|i| a(first + i)).collect();
    let mut diffs = b.clone();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut z_pow = Complex64::new(1.0, 0.0);
    let mut denom = one_minus_z;
    let mut last = 0.0;
    for j in 0..EULER_COLUMNS {
        let term = z_pow * diffs[0] / denom;
        tail += term;
        last = term.norm();
        for i in 0..EULER_COLUMNS - 1 - j {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        z_pow *= z;
        denom *= one_minus_z;
    }
    let z_first = Complex64::from_polar(1.0, 2.0 * PI * (y * first as f64).fract());
    let tail = tail * z_first;
    let roundoff = 2f64.powi(EULER_COLUMNS as i32) * f64::EPSILON * b[0]
        / one_minus_z.norm().powi(EULER_COLUMNS as i32);
    let series = partial.value() + tail.im;
    Ok(KummerEstimate {
        value: closed + series / PI,
        error_estimate: (last + roundoff) / PI + 4.0 * f64::EPSILON * closed.abs(),
    })
}

pub fn kummer_ln_gamma(y: f64, terms: u64) -> Result<f64> {
    Ok(kummer_ln_gamma_detailed(y, terms)?.value)
}
