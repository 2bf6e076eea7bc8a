use super::{QuadConfig, QuadError, QuadResult};
use crate::compensated;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// 15-point Kronrod estimate with the embedded 7-point Gauss error estimate,
/// rescaled as in QUADPACK's qk15.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel, QuadError> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadError::NonFinite(x))
        }
    };
    let fc = eval(centre)?;
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    #[allow(clippy::needless_range_loop)]
    for j in 0..3 {
        let jt = 2 * j + 1;
        let dx = half * XGK[jt];
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        fv1[jt] = f1;
        fv2[jt] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[jt] * (f1 + f2);
        res_abs += WGK[jt] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let jt = 2 * j;
        let dx = half * XGK[jt];
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        fv1[jt] = f1;
        fv2[jt] = f2;
        res_k += WGK[jt] * (f1 + f2);
        res_abs += WGK[jt] * (f1.abs() + f2.abs());
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    let value = res_k * half;
    let res_abs = res_abs * h;
    let res_asc = res_asc * h;
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, err })
}

/// Adaptive Gauss–Kronrod integration of f over [lo, hi].
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    integrate_breakpoints(f, &[lo, hi], cfg)
}

/// Adaptive integration over consecutive panels given by increasing breakpoints,
/// with a single global error budget.
pub fn integrate_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    cfg.validate()?;
    if breaks.len() < 2 {
        return Err(QuadError::InvalidInterval {
            lo: f64::NAN,
            hi: f64::NAN,
        });
    }
    for w in breaks.windows(2) {
        if !(w[0] < w[1]) || !w[0].is_finite() || !w[1].is_finite() {
            return Err(QuadError::InvalidInterval { lo: w[0], hi: w[1] });
        }
    }
    let mut heap = BinaryHeap::new();
    let mut total_value = 0.0;
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        let p = kronrod15(&f, w[0], w[1])?;
        total_value += p.value;
        total_err += p.err;
        heap.push(p);
    }
    let mut finished: Vec<Panel> = Vec::new();
    let mut subdivisions = 0;
    while total_err > cfg.tolerance(total_value) && subdivisions < cfg.max_subdivisions {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            finished.push(worst);
            continue;
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        total_value += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(finished);
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = compensated::sum(panels.iter().map(|p| p.value));
    let error_estimate = compensated::sum(panels.iter().map(|p| p.err));
    Ok(QuadResult {
        value,
        error_estimate,
        subdivisions_used: subdivisions,
        converged: error_estimate <= cfg.tolerance(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_and_polynomial() {
        let cfg = QuadConfig::default();
        let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, &cfg).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15 && r.converged);
        let r = integrate_adaptive(|x: f64| x.powi(5), 0.0, 2.0, &cfg).unwrap();
        assert!((r.value - 64.0 / 6.0).abs() < 1e-13);
    }

    #[test]
    fn odd_integrand_vanishes() {
        let cfg = QuadConfig::default();
        let r = integrate_adaptive(|x: f64| x.powi(3) * (x * x).cos(), -1.0, 1.0, &cfg).unwrap();
        assert!(r.value.abs() <= cfg.abs_tol);
    }

    #[test]
    fn sinc_gives_si_pi() {
        let cfg = QuadConfig::default();
        let r = integrate_adaptive(|t: f64| t.sin() / t, 0.0, PI, &cfg).unwrap();
        assert!((r.value - 1.85193705198246617036).abs() < 1e-13);
    }

    #[test]
    fn logarithmic_endpoint_singularity() {
        let cfg = QuadConfig::default();
        let r = integrate_adaptive(|x: f64| x.ln(), 0.0, 1.0, &cfg).unwrap();
        assert!(r.converged);
        assert!((r.value + 1.0).abs() <= r.error_estimate.max(1e-14));
    }

    #[test]
    fn reports_non_convergence() {
        let cfg = QuadConfig {
            max_subdivisions: 3,
            ..QuadConfig::default()
        };
        let r = integrate_adaptive(|x: f64| (1.0 / x).sin(), 1e-4, 1.0, &cfg).unwrap();
        assert!(!r.converged);
        assert_eq!(r.subdivisions_used, 3);
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = QuadConfig::default();
        assert!(integrate_adaptive(|x| x, 1.0, 0.0, &cfg).is_err());
        assert!(integrate_adaptive(|x| x, 0.0, f64::INFINITY, &cfg).is_err());
        assert!(matches!(
            integrate_adaptive(|x: f64| 1.0 / (x - 0.5), 0.0, 1.0, &cfg),
            Err(QuadError::NonFinite(_))
        ));
        let bad = QuadConfig {
            abs_tol: 0.0,
            ..cfg
        };
        assert!(integrate_adaptive(|x| x, 0.0, 1.0, &bad).is_err());
    }

    #[test]
    fn deterministic() {
        let cfg = QuadConfig::default();
        let f = |x: f64| (x * 7.0).sin().exp() / (1.0 + x * x);
        let a = integrate_adaptive(f, 0.0, 10.0, &cfg).unwrap();
        let b = integrate_adaptive(f, 0.0, 10.0, &cfg).unwrap();
        assert_eq!(a, b);
    }
}
