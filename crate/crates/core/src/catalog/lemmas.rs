use super::{CatalogError, Estimate};
use crate::quad::{integrate_adaptive, QuadConfig, QuadError, QuadResult};
use crate::specfun::sici;
use std::f64::consts::PI;

/// Closed form of ∫₀¹ (−x)ᵏ ln(x)^p / (a² + ln²x) dx, p ∈ {0, 1}.
///
/// With c = k+1:
/// p = 0: (−1)ᵏ (1/a) [Ci(ac) sin(ac) − si(ac) cos(ac)],
/// p = 1: (−1)ᵏ [Ci(ac) cos(ac) + si(ac) sin(ac)].
pub fn moment_integral(k: u32, a: f64, p: u32) -> Result<f64, CatalogError> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(CatalogError::OutOfDomain(format!("moment integral needs a > 0, got {a}")));
    }
    let x = a * (k as f64 + 1.0);
    let v = sici(x)?;
    let (s, c) = x.sin_cos();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    match p {
        0 => Ok(sign * (v.ci * s - v.si_lower * c) / a),
        1 => Ok(sign * (v.ci * c + v.si_lower * s)),
        _ => Err(CatalogError::OutOfDomain(format!("moment integral log power {p} not in {{0, 1}}"))),
    }
}

/// (π/(s−1)) ∫₀^∞ Re[(½ + it)^{1−s}] sech²(πt) dt, which equals ζ(s) for s > 1.
pub fn summation_formula(s: f64, cfg: &QuadConfig) -> Result<QuadResult, CatalogError> {
    if !(s > 1.0 && s.is_finite()) {
        return Err(CatalogError::OutOfDomain(format!("summation formula needs s > 1, got {s}")));
    }
    cfg.validate()?;
    let pre = PI / (s - 1.0);
    let f = |t: f64| {
        let r2 = 0.25 + t * t;
        let theta = t.atan2(0.5);
        let re = r2.powf(0.5 * (1.0 - s)) * ((1.0 - s) * theta).cos();
        let ch = (PI * t).cosh();
        pre * re / (ch * ch)
    };
    // |Re| ≤ 2^{s−1} and sech² ≤ 4e^{−2πt}
    let bound = |t: f64| pre * 2f64.powf(s - 1.0) * 4.0 * (-2.0 * PI * t).exp() / (2.0 * PI);
    let mut cut = 2.0;
    while bound(cut) > 0.1 * cfg.abs_tol && cut < 200.0 {
        cut *= 1.25;
    }
    let r = integrate_adaptive(f, 0.0, cut, &cfg.scaled(0.9))?;
    let error_estimate = r.error_estimate + bound(cut);
    Ok(QuadResult {
        error_estimate,
        converged: r.converged && error_estimate <= cfg.abs_tol.max(cfg.rel_tol * r.value.abs()),
        ..r
    })
}

/// ∫_{3/4}^1 sin(2πky) cos(4πy) dy − ∫_{1/4}^{1/2} sin(2πky) cos(4πy) dy by quadrature.
pub fn trig_difference(k: u32, cfg: &QuadConfig) -> Result<Estimate, QuadError> {
    let kf = k as f64;
    let f = |y: f64| (2.0 * PI * kf * y).sin() * (4.0 * PI * y).cos();
    let hi = integrate_adaptive(f, 0.75, 1.0, cfg)?;
    let lo = integrate_adaptive(f, 0.25, 0.5, cfg)?;
    Ok(Estimate {
        value: hi.value - lo.value,
        error: hi.error_estimate + lo.error_estimate,
    })
}

/// Exact value of [`trig_difference`]: −k/(π(k²−4)) for odd k, 0 for even k.
pub fn trig_difference_exact(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        0.0
    } else {
        let kf = k as f64;
        -kf / (PI * (kf * kf - 4.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, IntegrandSpec, Interval, Outer};
    use crate::specfun::{ci, zeta};

    fn cfg() -> QuadConfig {
        QuadConfig {
            abs_tol: 1e-14,
            rel_tol: 1e-14,
            ..QuadConfig::default()
        }
    }

    #[test]
    fn moments_against_quadrature() {
        for a in [1.0, PI] {
            for p in 0..=1 {
                for k in [0u32, 1, 3, 10] {
                    let spec = IntegrandSpec::log_kernel(p, 1, a, Outer::NegXPow(k), Interval::ZeroOne);
                    let q = integrate(&spec, &cfg()).unwrap();
                    let m = moment_integral(k, a, p).unwrap();
                    assert!((q.value - m).abs() < 1e-12, "k={k} a={a} p={p}: {} vs {m}", q.value);
                }
            }
        }
    }

    #[test]
    fn moment_at_pi_is_minus_ci() {
        for k in 0..=5u32 {
            let m = moment_integral(k, PI, 1).unwrap();
            let c = ci((k as f64 + 1.0) * PI).unwrap();
            assert!((m + c).abs() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn summation_formula_gives_zeta() {
        for s in [2.0, 3.0, 4.0, 2.5] {
            let r = summation_formula(s, &cfg()).unwrap();
            assert!((r.value - zeta(s).unwrap()).abs() < 1e-12, "s={s}");
        }
        assert!(summation_formula(1.0, &cfg()).is_err());
    }

    #[test]
    fn trig_difference_closed_form() {
        for k in 1..=9u32 {
            let q = trig_difference(k, &cfg()).unwrap();
            assert!((q.value - trig_difference_exact(k)).abs() < 1e-13, "k={k}");
        }
    }
}
