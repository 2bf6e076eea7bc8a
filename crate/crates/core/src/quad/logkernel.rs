use super::gk::integrate_breakpoints;
use super::integrand::{Decay, Side};
use super::{Family, IntegrandSpec, Interval, KernelSign, QuadConfig, QuadError, QuadResult};

/// Upper limit on the truncation point of exponentially decaying integrands.
const MAX_CUTOFF: f64 = 1e4;

/// Dispatch on the integrand's family and interval.
pub fn integrate(spec: &IntegrandSpec, cfg: &QuadConfig) -> Result<QuadResult, QuadError> {
    if let Family::LegendreTKernel { b } = spec.family {
        return Ok(integrate_legendre(spec.shift, b, cfg)?.scale(spec.scale));
    }
    match spec.interval {
        Interval::ZeroOne => integrate_logkernel_01(spec, cfg),
        Interval::OneInf => integrate_logkernel_1inf(spec, cfg),
        Interval::ZeroInf => integrate_logkernel_0inf(spec, cfg),
    }
}

/// (0,1) piece via x = e^{−t}.
pub fn integrate_logkernel_01(
    spec: &IntegrandSpec,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    let spec = spec.on(Interval::ZeroOne);
    spec.validate()?;
    cfg.validate()?;
    integrate_side(&spec, Side::Lower, cfg)
}

/// (1,∞) piece via x → 1/x followed by x = e^{−t}, i.e. x = e^{t}.
pub fn integrate_logkernel_1inf(
    spec: &IntegrandSpec,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    let spec = spec.on(Interval::OneInf);
    spec.validate()?;
    cfg.validate()?;
    integrate_side(&spec, Side::Upper, cfg)
}

/// (0,∞) as the sum of the two half-line pieces.
pub fn integrate_logkernel_0inf(
    spec: &IntegrandSpec,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    let spec = spec.on(Interval::ZeroInf);
    spec.validate()?;
    cfg.validate()?;
    let half = cfg.scaled(0.5);
    let lower = integrate_side(&spec, Side::Lower, &half)?;
    let upper = integrate_side(&spec, Side::Upper, &half)?;
    Ok(lower.combine(upper, cfg))
}

/// ∫₀^∞ t / ((e^{bt} + 1)(t² + a²)) dt.
pub fn integrate_legendre(a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult, QuadError> {
    IntegrandSpec::legendre(a, b).validate()?;
    cfg.validate()?;
    let f = |t: f64| {
        let e = (-b * t).exp();
        t * e / ((1.0 + e) * (t * t + a * a))
    };
    let bound = |t: f64| (-b * t).exp() / b * t / (t * t + a * a);
    let mut cut = (cfg.tail_cutoff_margin / b).max(a);
    while bound(cut) > 0.1 * cfg.abs_tol && cut < MAX_CUTOFF {
        cut *= 1.25;
    }
    let breaks = doubling_breaks(0.0, cut, &[a]);
    let r = integrate_breakpoints(f, &breaks, &cfg.scaled(0.9))?;
    Ok(with_tail(r, bound(cut), cfg))
}

fn with_tail(r: QuadResult, tail: f64, cfg: &QuadConfig) -> QuadResult {
    let error_estimate = r.error_estimate + tail;
    QuadResult {
        error_estimate,
        converged: r.converged && error_estimate <= cfg.tolerance(r.value),
        ..r
    }
}

/// Breakpoints lo, then powers of two from 1/8 up to hi, plus any extra
/// interior points.
fn doubling_breaks(lo: f64, hi: f64, extra: &[f64]) -> Vec<f64> {
    let mut pts = vec![lo, hi];
    let mut p = 0.125;
    while p < hi {
        if p > lo {
            pts.push(p);
        }
        p *= 2.0;
    }
    pts.extend(extra.iter().copied().filter(|&x| x > lo && x < hi));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Bound on |∫_T^∞ F(t) dt| for an exponentially decaying transformed integrand.
fn tail_bound(spec: &IntegrandSpec, rate: f64, cut: f64) -> f64 {
    let p = spec.log_power as f64;
    let moment = (-rate * cut).exp() * (cut.powf(p) / rate + p / (rate * rate));
    spec.scale.abs() * spec.outer.decay_constant(cut) * moment * spec.kernel(cut).abs()
}

fn cutoff(spec: &IntegrandSpec, rate: f64, floor: f64, cfg: &QuadConfig) -> f64 {
    let mut cut = (cfg.tail_cutoff_margin / rate).max(floor);
    while tail_bound(spec, rate, cut) > 0.1 * cfg.abs_tol && cut < MAX_CUTOFF {
        cut *= 1.25;
    }
    cut
}

fn singular_extra(spec: &IntegrandSpec) -> Vec<f64> {
    match spec.family {
        // ln(4π²/t²) behaviour at t → 0: graded panels at 2^{−j}.
        Family::LogRatioKernel { n: 1 } => (4..=40).map(|j| 2f64.powi(-j)).collect(),
        Family::LogKernel => vec![spec.shift],
        _ => Vec::new(),
    }
}

fn integrate_side(
    spec: &IntegrandSpec,
    side: Side,
    cfg: &QuadConfig,
) -> Result<QuadResult, QuadError> {
    if spec.sign == KernelSign::Minus {
        return integrate_regularized(spec, cfg);
    }
    let f = |t: f64| spec.transformed(side, t);
    let extra = singular_extra(spec);
    match spec.outer.decay(side) {
        Decay::Exponential { rate } => {
            let floor = 2.0 * spec.shift;
            let cut = cutoff(spec, rate, floor, cfg);
            let breaks = doubling_breaks(0.0, cut, &extra);
            let r = integrate_breakpoints(f, &breaks, &cfg.scaled(0.9))?;
            Ok(with_tail(r, tail_bound(spec, rate, cut), cfg))
        }
        Decay::Algebraic => {
            let cut = cfg.tail_cutoff_margin.max(4.0 * spec.shift);
            let half = cfg.scaled(0.5);
            let breaks = doubling_breaks(0.0, cut, &extra);
            let head = integrate_breakpoints(f, &breaks, &half)?;
            // t = T/u maps [T, ∞) onto (0, 1].
            let g = |u: f64| {
                let t = cut / u;
                f(t) * cut / (u * u)
            };
            let tail = integrate_breakpoints(g, &[0.0, 0.5, 1.0], &half)?;
            Ok(head.combine(tail, cfg))
        }
    }
}

/// ∫₀¹ ln(x)^p/(a² − ln²x)^m · outer(x) dx with the pole at t = a regularized:
/// principal value for m = 1, Hadamard finite part for m = 2.
///
/// With h(t) = F(t)·(a − t)^m, the part on (0, 2a) is folded about t = a:
///   m = 1:  ∫₀^a [h(a−u) − h(a+u)] / u du
///   m = 2:  ∫₀^a [h(a−u) + h(a+u) − 2h(a)] / u² du − 2h(a)/a
fn integrate_regularized(spec: &IntegrandSpec, cfg: &QuadConfig) -> Result<QuadResult, QuadError> {
    let a = spec.shift;
    let m = spec.denom_power as i32;
    let h = |t: f64| {
        spec.scale * spec.numerator(Side::Lower, t) * spec.outer.weight(Side::Lower, t)
            / (a + t).powi(m)
    };
    let third = cfg.scaled(1.0 / 3.0);
    let (near, constant) = if m == 1 {
        let g = |u: f64| (h(a - u) - h(a + u)) / u;
        (integrate_breakpoints(g, &[0.0, 0.5 * a, a], &third)?, 0.0)
    } else {
        let ha = h(a);
        let g = |u: f64| (h(a - u) + h(a + u) - 2.0 * ha) / (u * u);
        (
            integrate_breakpoints(g, &[0.0, 0.5 * a, a], &third)?,
            -2.0 * ha / a,
        )
    };
    let near = QuadResult {
        value: near.value + constant,
        error_estimate: near.error_estimate + 4.0 * f64::EPSILON * constant.abs(),
        ..near
    };
    let rate = match spec.outer.decay(Side::Lower) {
        Decay::Exponential { rate } => rate,
        Decay::Algebraic => 1.0,
    };
    let cut = cutoff(spec, rate, 3.0 * a, cfg);
    let f = |t: f64| spec.transformed(Side::Lower, t);
    let breaks = doubling_breaks(2.0 * a, cut, &[]);
    let far = integrate_breakpoints(f, &breaks, &third)?;
    let far = with_tail(far, tail_bound(spec, rate, cut), &third);
    Ok(near.combine(far, cfg))
}
