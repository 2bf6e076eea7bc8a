use super::{domain, Result};

/// Euler–Maclaurin cut-off: the first N−1 terms are summed directly.
const N: f64 = 16.0;

/// B₂ⱼ for j = 1..12.
const B2J: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// Riemann ζ(s) for real s > 1.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain("zeta", s, "s > 1"));
    }
    let mut head = 0.0;
    for n in (1..N as u32).rev() {
        head += (n as f64).powf(-s);
    }
    let n_s = N.powf(-s);
    let mut tail = N * n_s / (s - 1.0) + 0.5 * n_s;
    // Σ B₂ⱼ/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = n_s / N;
    for (j, b) in B2J.iter().enumerate() {
        let term = b / fact * rising * power;
        tail += term;
        let m = 2.0 * (j + 1) as f64;
        rising *= (s + m - 1.0) * (s + m);
        fact *= (m + 1.0) * (m + 2.0);
        power /= N * N;
        if term.abs() < 1e-18 * head {
            break;
        }
    }
    Ok(head + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compensated::Neumaier;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn even_values() {
        assert!((zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((zeta(6.0).unwrap() - PI.powi(6) / 945.0).abs() < 1e-15);
    }

    // Reference values computed independently at 30 significant digits.
    #[test]
    fn reference_values() {
        let cases = [
            (1.5, 2.6123753486854883433),
            (3.0, 1.2020569031595942854),
            (5.5, 1.0252045799546856946),
            (20.0, 1.0000009539620338728),
        ];
        for (s, want) in cases {
            let got = zeta(s).unwrap();
            assert!(((got - want) / want).abs() <= 1e-14, "s={s}: {got}");
        }
    }

    /// Independent route: 10⁶ terms summed with compensation plus a
    /// two-term Euler–Maclaurin tail.
    fn brute_force(s: f64) -> f64 {
        let n = 1_000_000u64;
        let mut acc = Neumaier::new();
        for k in (1..n).rev() {
            acc.add((k as f64).powf(-s));
        }
        let nf = n as f64;
        acc.add(nf.powf(1.0 - s) / (s - 1.0));
        acc.add(0.5 * nf.powf(-s));
        acc.add(s / 12.0 * nf.powf(-s - 1.0));
        acc.value()
    }

    #[test]
    fn agrees_with_brute_force() {
        for s in [1.1, 2.5, 3.0, 7.0] {
            let a = zeta(s).unwrap();
            let b = brute_force(s);
            assert!(((a - b) / a).abs() < 1e-12, "s={s}: {a} vs {b}");
        }
    }

    #[test]
    fn domain() {
        assert!(zeta(1.0).is_err());
        assert!(zeta(0.5).is_err());
    }

    proptest! {
        #[test]
        fn decreasing_towards_one(s in 1.05f64..60.0) {
            let a = zeta(s).unwrap();
            let b = zeta(s + 0.01).unwrap();
            prop_assert!(a >= 1.0);
            prop_assert!(b <= a);
        }
    }
}
