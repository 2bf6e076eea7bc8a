use super::{domain, Result, SpecFunError};
use std::f64::consts::PI;

/// B₂ₖ / (2k(2k−1)) for k = 1..8, the Stirling series coefficients.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B₂ₖ for k = 1..8.
const B2K: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// Below this the recurrence shifts the argument upward before the
/// asymptotic series is used.
const ASYMPTOTIC_FROM: f64 = 15.0;

fn horner_inverse_square(z: f64, coeffs: &[f64]) -> f64 {
    let w = 1.0 / (z * z);
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * w + c)
}

/// ln Γ(x) for x > 0.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("gamma_ln", x, "x > 0"));
    }
    let mut z = x;
    let mut prod = 1.0;
    while z < ASYMPTOTIC_FROM {
        prod *= z;
        z += 1.0;
    }
    let stirling = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln()
        + horner_inverse_square(z, &STIRLING) / z;
    Ok(stirling - prod.ln())
}

/// Digamma ψ(x) = d/dx ln Γ(x).
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain("digamma", x, "finite x"));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(SpecFunError::Pole { function: "digamma", x });
    }
    if x < 0.0 {
        // ψ(x) = ψ(1−x) − π cot(πx); reduce the cotangent argument first.
        let r = x - x.round();
        let cot = (PI * r).cos() / (PI * r).sin();
        return Ok(digamma(1.0 - x)? - PI * cot);
    }
    let mut z = x;
    let mut shift = 0.0;
    while z < ASYMPTOTIC_FROM {
        shift -= 1.0 / z;
        z += 1.0;
    }
    let mut coeffs = [0.0; 8];
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c = B2K[k] / (2.0 * (k + 1) as f64);
    }
    let tail = horner_inverse_square(z, &coeffs) / (z * z);
    Ok(shift + z.ln() - 0.5 / z - tail)
}

/// Polygamma ψ⁽ⁿ⁾(x) for n ∈ {1, 2} and x > 0.
pub fn polygamma(order: u32, x: f64) -> Result<f64> {
    if order != 1 && order != 2 {
        return Err(SpecFunError::UnsupportedOrder(order));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("polygamma", x, "x > 0"));
    }
    let mut z = x;
    let mut shift = 0.0;
    while z < ASYMPTOTIC_FROM {
        shift += match order {
            1 => 1.0 / (z * z),
            _ => -2.0 / (z * z * z),
        };
        z += 1.0;
    }
    let value = if order == 1 {
        let tail = horner_inverse_square(z, &B2K) / (z * z * z);
        1.0 / z + 0.5 / (z * z) + tail
    } else {
        let mut coeffs = [0.0; 8];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = (2 * k + 3) as f64 * B2K[k];
        }
        let tail = horner_inverse_square(z, &coeffs) / (z * z * z * z);
        -1.0 / (z * z) - 1.0 / (z * z * z) - tail
    };
    Ok(value + shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{zeta, EULER_GAMMA};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::LN_2;

    #[test]
    fn gamma_ln_at_integers_and_half() {
        assert!(gamma_ln(1.0).unwrap().abs() < 1e-14);
        assert!(gamma_ln(2.0).unwrap().abs() < 1e-14);
        assert_relative_eq!(gamma_ln(0.5).unwrap(), 0.5 * PI.ln(), max_relative = 1e-14);
        assert_relative_eq!(gamma_ln(5.0).unwrap(), 24f64.ln(), max_relative = 1e-14);
    }

    // Reference values computed independently at 30 significant digits.
    #[test]
    fn gamma_ln_reference_values() {
        let cases = [
            (0.1, 2.2527126517342059599),
            (2.5, 0.28468287047291915963),
            (7.3, 7.1478925230222490328),
            (33.3, 82.603723581654952928),
            (1e-8, 18.420680738180208905),
        ];
        for (x, want) in cases {
            let got = gamma_ln(x).unwrap();
            assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0), "x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn gamma_ln_rejects_non_positive() {
        assert!(gamma_ln(0.0).is_err());
        assert!(gamma_ln(-1.5).is_err());
        assert!(gamma_ln(f64::NAN).is_err());
    }

    #[test]
    fn digamma_special_values() {
        assert_relative_eq!(digamma(1.0).unwrap(), -EULER_GAMMA, max_relative = 1e-14);
        assert_relative_eq!(
            digamma(0.5).unwrap(),
            -EULER_GAMMA - 2.0 * LN_2,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            digamma(0.75).unwrap() - digamma(0.25).unwrap(),
            PI,
            max_relative = 1e-14
        );
    }

    #[test]
    fn digamma_reference_values() {
        let cases = [
            (0.1, -10.423754940411076795),
            (2.5, 0.70315664064524318723),
            (-0.5, 0.036489973978576520559),
            (-2.7, -1.1153471291406869883),
            (1e-6, -1000000.5772140199687),
            (40.0, 3.6763273740348431259),
        ];
        for (x, want) in cases {
            assert_relative_eq!(digamma(x).unwrap(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn digamma_poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(digamma(x), Err(SpecFunError::Pole { .. })));
        }
    }

    #[test]
    fn polygamma_special_values() {
        let z3 = zeta(3.0).unwrap();
        assert_relative_eq!(polygamma(1, 0.5).unwrap(), PI * PI / 2.0, max_relative = 1e-13);
        assert_relative_eq!(polygamma(1, 1.0).unwrap(), PI * PI / 6.0, max_relative = 1e-13);
        assert_relative_eq!(polygamma(2, 0.5).unwrap(), -14.0 * z3, max_relative = 1e-13);
        assert_relative_eq!(polygamma(2, 1.0).unwrap(), -2.0 * z3, max_relative = 1e-13);
    }

    #[test]
    fn polygamma_reference_values() {
        let cases = [
            (1, 0.3, 12.245364546107730465),
            (2, 0.3, -75.272536588726030667),
            (1, 4.2, 0.26866494073140079456),
            (2, 4.2, -0.07176485055313121152),
            (1, 25.0, 0.040810663257225579187),
            (2, 25.0, -0.0016652793184224681654),
        ];
        for (n, x, want) in cases {
            assert_relative_eq!(polygamma(n, x).unwrap(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn polygamma_errors() {
        assert_eq!(polygamma(3, 1.0), Err(SpecFunError::UnsupportedOrder(3)));
        assert!(polygamma(1, 0.0).is_err());
        assert!(polygamma(2, -0.5).is_err());
    }

    #[test]
    fn reflection_on_grid() {
        for i in 1..20 {
            let z = i as f64 / 20.0;
            let lhs = digamma(1.0 - z).unwrap() - digamma(z).unwrap();
            let rhs = PI / (PI * z).tan();
            assert!((lhs - rhs).abs() <= 1e-11, "z={z}");
        }
    }

    #[test]
    fn duplication_on_grid() {
        for a in [0.5, 1.0, PI, 2.0 * PI, 10.0] {
            let lhs = digamma(a / PI).unwrap()
                - 0.5 * digamma(0.5 + a / (2.0 * PI)).unwrap()
                - 0.5 * digamma(a / (2.0 * PI)).unwrap();
            assert!((lhs - LN_2).abs() <= 1e-11, "a={a}");
        }
    }

    proptest! {
        #[test]
        fn digamma_recurrence(x in 0.01f64..50.0) {
            let lhs = digamma(x + 1.0).unwrap();
            let rhs = digamma(x).unwrap() + 1.0 / x;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }

        #[test]
        fn trigamma_recurrence(x in 0.05f64..50.0) {
            let lhs = polygamma(1, x + 1.0).unwrap();
            let rhs = polygamma(1, x).unwrap() - 1.0 / (x * x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * polygamma(1, x).unwrap().abs().max(1.0));
        }

        #[test]
        fn tetragamma_recurrence(x in 0.05f64..50.0) {
            let lhs = polygamma(2, x + 1.0).unwrap();
            let rhs = polygamma(2, x).unwrap() + 2.0 / (x * x * x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * polygamma(2, x).unwrap().abs().max(1.0));
        }

        #[test]
        fn gamma_ln_recurrence(x in 0.01f64..100.0) {
            let lhs = gamma_ln(x + 1.0).unwrap();
            let rhs = gamma_ln(x).unwrap() + x.ln();
            prop_assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0) * 4.0);
        }

        #[test]
        fn digamma_recurrence_negative(x in -20.0f64..-0.01) {
            prop_assume!((x - x.round()).abs() > 1e-3);
            let lhs = digamma(x).unwrap();
            let rhs = digamma(x + 1.0).unwrap() - 1.0 / x;
            prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0));
        }
    }
}
