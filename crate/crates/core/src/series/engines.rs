use super::{Mode, SeriesError, SumResult};
use crate::compensated::Neumaier;
use crate::quad::{integrate_adaptive, QuadConfig};
use crate::specfun::SpecFunError;

/// A run of this many exact zeros ends a direct sum.
const ZERO_RUN: u32 = 8;
/// Consecutive growing terms that mark an asymptotic (divergent) series.
const GROWTH_RUN: u32 = 3;
/// Deepest binomial averaging used by the alternating engine.
const EULER_DEPTH: usize = 64;
/// Leading terms exempt from the alternation check; the average only sees
/// late partial sums, so an irregular head is harmless.
const HEAD: usize = 8;

fn table_exhausted(e: &SpecFunError) -> bool {
    matches!(e, SpecFunError::Overflow { .. })
}

/// Plain compensated summation.
///
/// Stops when the geometric tail estimate drops below `tol / 100`, after a run
/// of exact zeros, or at the smallest term of an eventually growing series
/// (optimal truncation).
pub fn sum_direct<F>(term: F, start: u64, max_terms: u64, tol: f64) -> Result<SumResult, SeriesError>
where
    F: Fn(u64) -> Result<f64, SpecFunError>,
{
    let mut acc = Neumaier::new();
    let mut notes = Vec::new();
    let mut prev_abs = f64::INFINITY;
    let mut est = f64::INFINITY;
    let mut zeros = 0u32;
    let mut growth = 0u32;
    // (|t|, index, partial sum before it)
    let mut smallest = (f64::INFINITY, 0u64, 0.0);
    let mut used = 0u64;
    let mut converged = false;

    for i in 0..max_terms {
        let t = match term(start + i) {
            Ok(t) => t,
            Err(e) if table_exhausted(&e) => {
                notes.push(format!("{e}; sum truncated after {used} terms"));
                est = if prev_abs.is_finite() { prev_abs } else { f64::INFINITY };
                converged = est <= tol;
                return Ok(SumResult {
                    value: acc.value(),
                    error_estimate: est,
                    terms_used: used,
                    converged,
                    mode_used: Mode::Direct,
                    notes,
                });
            }
            Err(e) => return Err(e.into()),
        };
        if !t.is_finite() {
            return Err(SeriesError::InvalidSpec(format!("term {} is not finite", start + i)));
        }
        let a = t.abs();
        if a < smallest.0 {
            smallest = (a, i, acc.value());
        }
        acc.add(t);
        used = i + 1;

        if a == 0.0 {
            zeros += 1;
            if zeros >= ZERO_RUN {
                est = 0.0;
                converged = true;
                break;
            }
            continue;
        }
        zeros = 0;

        let ratio = a / prev_abs;
        if ratio < 1.0 {
            est = a * ratio / (1.0 - ratio);
            growth = 0;
            if i >= 4 && est <= 0.01 * tol && a <= tol {
                converged = true;
                break;
            }
        } else {
            est = a * (max_terms - used) as f64;
            if i > 2 {
                growth += 1;
            }
        }
        if growth >= GROWTH_RUN && smallest.1 + 1 < used {
            notes.push(format!(
                "terms grow after index {}; optimally truncated before the smallest term",
                start + smallest.1
            ));
            return Ok(SumResult {
                value: smallest.2,
                error_estimate: smallest.0,
                terms_used: smallest.1,
                converged: smallest.0 <= tol,
                mode_used: Mode::Direct,
                notes,
            });
        }
        prev_abs = a;
    }
    let roundoff = 4.0 * f64::EPSILON * acc.value().abs();
    Ok(SumResult {
        value: acc.value(),
        error_estimate: est.max(roundoff),
        terms_used: used,
        converged,
        mode_used: Mode::Direct,
        notes,
    }
    .finish(tol))
}

fn diff(model: &impl Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (p1, p2, m1, m2) = (model(x + h), model(x + 2.0 * h), model(x - h), model(x - 2.0 * h));
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d3 = (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h);
    (d1, d3)
}

/// `n_terms` explicit terms plus an Euler–Maclaurin tail built from the
/// smooth continuation `model` of the term sequence.
pub fn sum_tail_corrected<F, M>(
    term: F,
    model: M,
    start: u64,
    n_terms: u64,
    tol: f64,
) -> Result<SumResult, SeriesError>
where
    F: Fn(u64) -> Result<f64, SpecFunError>,
    M: Fn(f64) -> f64,
{
    let mut acc = Neumaier::new();
    let n_terms = n_terms.max(8);
    for k in start..start + n_terms {
        acc.add(term(k)?);
    }
    let n = (start + n_terms) as f64;

    // ∫_n^∞ model = ∫_0^1 model(n/u) n/u² du
    let cfg = QuadConfig {
        abs_tol: (tol * 1e-3).max(1e-300),
        rel_tol: 1e-14,
        ..QuadConfig::default()
    };
    let integral = integrate_adaptive(
        |u: f64| {
            if u <= 0.0 {
                0.0
            } else {
                model(n / u) * n / (u * u)
            }
        },
        0.0,
        1.0,
        &cfg,
    )?;

    let h = (n / 64.0).max(1.0).min(n / 4.0);
    let (d1, d3) = diff(&model, n, h);
    let tail = integral.value + 0.5 * model(n) - d1 / 12.0 + d3 / 720.0;
    let value = acc.value() + tail;

    let mut notes = Vec::new();
    let (last, half) = (start + n_terms - 1, start + (n_terms - 1) / 2);
    let emp = term(last)? / term(half)?;
    let fit = model(last as f64) / model(half as f64);
    if (emp - fit).abs() > 0.1 * fit.abs() {
        notes.push(format!(
            "model decay {fit:.4e} disagrees with observed decay {emp:.4e} between terms {half} and {last}"
        ));
    }
    let err = d3.abs() / 720.0
        + integral.error_estimate
        + 4.0 * f64::EPSILON * value.abs();
    Ok(SumResult {
        value,
        error_estimate: err,
        terms_used: n_terms,
        converged: integral.converged && notes.is_empty(),
        mode_used: Mode::TailCorrected,
        notes,
    }
    .finish(tol))
}

/// Euler (binomial) average of the last D+1 partial sums, with the number of
/// terms doubled from 32 until consecutive averages agree to `tol`.
///
/// The inner `Err` carries a note when the terms are not sign-alternating.
pub fn sum_alternating<F>(
    term: F,
    start: u64,
    max_terms: u64,
    tol: f64,
) -> Result<Result<SumResult, String>, SeriesError>
where
    F: Fn(u64) -> Result<f64, SpecFunError>,
{
    let mut partial: Vec<f64> = Vec::new();
    let mut acc = Neumaier::new();
    let mut last_sign = 0.0f64;
    let mut extend = |upto: usize, partial: &mut Vec<f64>| -> Result<Result<(), String>, SeriesError> {
        while partial.len() < upto {
            let k = start + partial.len() as u64;
            let t = term(k)?;
            if !t.is_finite() {
                return Err(SeriesError::InvalidSpec(format!("term {k} is not finite")));
            }
            if t != 0.0 && partial.len() >= HEAD {
                let s = t.signum();
                if last_sign == s {
                    return Ok(Err(format!(
                        "terms {} and {k} share a sign; series is not alternating",
                        k - 1
                    )));
                }
                last_sign = s;
            } else if t != 0.0 {
                last_sign = t.signum();
            }
            acc.add(t);
            partial.push(acc.value());
        }
        Ok(Ok(()))
    };

    let euler = |partial: &[f64], n: usize| -> f64 {
        let d = EULER_DEPTH.min(n - 1);
        let mut w = 1.0f64;
        let mut s = Neumaier::new();
        let base = n - 1 - d;
        for i in 0..=d {
            s.add(w * partial[base + i]);
            w = w * (d - i) as f64 / (i + 1) as f64;
        }
        s.value() / 2f64.powi(d as i32)
    };

    let cap = max_terms.max(2) as usize;
    let mut n = 32usize.min(cap);
    if let Err(note) = extend(n, &mut partial)? {
        return Ok(Err(note));
    }
    let mut prev = euler(&partial, n);
    let mut half = n;
    loop {
        let next = (2 * n).min(cap);
        if next == n {
            break;
        }
        half = n;
        n = next;
        if let Err(note) = extend(n, &mut partial)? {
            return Ok(Err(note));
        }
        let cur = euler(&partial, n);
        let err = (cur - prev).abs();
        prev = cur;
        if err <= tol {
            break;
        }
    }
    let value = prev;
    let err = (value - euler(&partial, half)).abs();
    let scale = partial[half - 1..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let err = err.max(8.0 * f64::EPSILON * scale);
    Ok(Ok(SumResult {
        value,
        error_estimate: err,
        terms_used: n as u64,
        converged: true,
        mode_used: Mode::AlternatingAccelerated,
        notes: Vec::new(),
    }
    .finish(tol)))
}

/// Cesàro (C,1) means followed by an averaging pass over consecutive means,
/// which removes the period-two oscillation of the first means.
pub fn sum_cesaro_c1<F>(term: F, start: u64, n_terms: u64, tol: f64) -> Result<SumResult, SeriesError>
where
    F: Fn(u64) -> Result<f64, SpecFunError>,
{
    let n = n_terms.max(4);
    let half = n / 2;
    let mut s = Neumaier::new();
    let mut cum = Neumaier::new();
    let mut sigma_prev = 0.0;
    let mut tau_half = 0.0;
    let mut tau = 0.0;
    for j in 1..=n {
        let t = term(start + j - 1)?;
        if !t.is_finite() {
            return Err(SeriesError::InvalidSpec(format!("term {} is not finite", start + j - 1)));
        }
        s.add(t);
        cum.add(s.value());
        let sigma = cum.value() / j as f64;
        tau = 0.5 * (sigma + sigma_prev);
        if j == half {
            tau_half = tau;
        }
        sigma_prev = sigma;
    }
    let err = (tau - tau_half).abs().max(8.0 * f64::EPSILON * tau.abs());
    Ok(SumResult {
        value: tau,
        error_estimate: err,
        terms_used: n,
        converged: true,
        mode_used: Mode::CesaroC1,
        notes: Vec::new(),
    }
    .finish(tol))
}
