use crate::compensated::Neumaier;
use std::f64::consts::PI;

/// Partial-fraction expansion tanh x = 8x Σ_{k≥0} 1/((2k+1)²π² + 4x²).
///
/// With `tail_corrected`, the remainder from k = N is replaced by its
/// integral (2/π)·atan(2x/((2N+1)π)) plus the first two Euler–Maclaurin
/// corrections f(N)/2 − f′(N)/12.
pub fn tanh_saalschuetz(x: f64, terms: u64, tail_corrected: bool) -> f64 {
    let f = |k: f64| {
        let u = (2.0 * k + 1.0) * PI;
        8.0 * x / (u * u + 4.0 * x * x)
    };
    let mut acc = Neumaier::new();
    for k in (0..terms).rev() {
        acc.add(f(k as f64));
    }
    if tail_corrected {
        let n = terms as f64;
        let u = (2.0 * n + 1.0) * PI;
        let d = u * u + 4.0 * x * x;
        let df = -32.0 * x * PI * PI * (2.0 * n + 1.0) / (d * d);
        acc.add(2.0 / PI * (2.0 * x / u).atan());
        acc.add(0.5 * f(n));
        acc.add(-df / 12.0);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_and_one() {
        assert_eq!(tanh_saalschuetz(0.0, 100, true), 0.0);
        let e = std::f64::consts::E;
        let want = (e - 1.0 / e) / (e + 1.0 / e);
        assert!((tanh_saalschuetz(1.0, 10_000, true) - want).abs() < 1e-12);
    }

    #[test]
    fn corrected_within_tolerance_on_grid() {
        for i in -40..=40 {
            let x = i as f64 * 0.25;
            let v = tanh_saalschuetz(x, 10_000, true);
            assert!((v - x.tanh()).abs() <= 1e-10, "x={x}");
        }
    }

    #[test]
    fn uncorrected_converges_slowly() {
        let v = tanh_saalschuetz(5.0, 10_000, false);
        let err = (v - 5f64.tanh()).abs();
        assert!(err > 1e-6 && err < 1e-3);
    }

    proptest! {
        #[test]
        fn partial_sums_increase(x in 1e-3f64..20.0, n in 1u64..500) {
            prop_assert!(tanh_saalschuetz(x, n + 1, false) > tanh_saalschuetz(x, n, false));
        }

        #[test]
        fn odd_in_x(x in -20.0f64..20.0, n in 1u64..2000) {
            prop_assert_eq!(tanh_saalschuetz(-x, n, true), -tanh_saalschuetz(x, n, true));
        }
    }
}
