use super::{domain, Result};
use std::f64::consts::PI;

/// Σ xᵏ/k² for 0 ≤ x ≤ 1/2.
fn series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut p = x;
    for k in 1..200 {
        let kf = k as f64;
        let term = p / (kf * kf);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        p *= x;
    }
    sum
}

/// Dilogarithm Li₂(x) on [0, 1].
pub fn dilog(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("dilog", x, "0 <= x <= 1"));
    }
    if x == 1.0 {
        return Ok(PI * PI / 6.0);
    }
    if x <= 0.5 {
        return Ok(series(x));
    }
    // Li₂(x) = π²/6 − ln x ln(1−x) − Li₂(1−x)
    let y = 1.0 - x;
    Ok(PI * PI / 6.0 - x.ln() * y.ln() - series(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate_adaptive, QuadConfig};
    use std::f64::consts::LN_2;

    #[test]
    fn special_values() {
        assert_eq!(dilog(0.0).unwrap(), 0.0);
        assert!((dilog(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        let half = PI * PI / 12.0 - 0.5 * LN_2 * LN_2;
        assert!((dilog(0.5).unwrap() - half).abs() < 1e-15);
        assert!((dilog(0.5).unwrap() - 0.58224052646501250590).abs() < 1e-15);
    }

    #[test]
    fn reference_values() {
        let cases = [
            (0.3, 0.32612951007547606953),
            (0.9, 1.2997147230049587252),
            (0.99, 1.588625448076375327),
        ];
        for (x, want) in cases {
            assert!((dilog(x).unwrap() - want).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn matches_integral_definition() {
        let cfg = QuadConfig::default();
        for x in [0.2, 0.6, 0.95] {
            let q = integrate_adaptive(|t: f64| -(-t).ln_1p() / t, 0.0, x, &cfg).unwrap();
            assert!((dilog(x).unwrap() - q.value).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn domain() {
        assert!(dilog(-0.1).is_err());
        assert!(dilog(1.1).is_err());
    }
}
