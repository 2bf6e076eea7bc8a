use super::{domain, Result, EULER_GAMMA};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

/// Above this argument the continued fraction for E₁(ix) converges quickly;
/// below it the Maclaurin series loses at most a few ulps to cancellation.
const SERIES_LIMIT: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPair {
    pub re: f64,
    pub im: f64,
}

impl ComplexPair {
    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }
}

/// Sine and cosine integrals evaluated together.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiCi {
    /// Si(x) = ∫₀ˣ sin t / t dt
    pub si_upper: f64,
    /// si(x) = Si(x) − π/2
    pub si_lower: f64,
    /// Ci(x) = −∫ₓ^∞ cos t / t dt
    pub ci: f64,
}

fn maclaurin(x: f64) -> SiCi {
    let x2 = x * x;
    // Si = Σ (−1)ⁿ x²ⁿ⁺¹ / ((2n+1)(2n+1)!)
    let mut p = x;
    let mut si = x;
    // Ci − γ − ln x = Σ_{n≥1} (−1)ⁿ x²ⁿ / (2n (2n)!)
    let mut q = 1.0;
    let mut cin = 0.0;
    for n in 1..60 {
        let nf = n as f64;
        p *= -x2 / ((2.0 * nf) * (2.0 * nf + 1.0));
        q *= -x2 / ((2.0 * nf - 1.0) * (2.0 * nf));
        let ds = p / (2.0 * nf + 1.0);
        let dc = q / (2.0 * nf);
        si += ds;
        cin += dc;
        if ds.abs() < 1e-18 * si.abs() && dc.abs() < 1e-18 {
            break;
        }
    }
    let ci = if x > 0.0 {
        EULER_GAMMA + x.ln() + cin
    } else {
        f64::NEG_INFINITY
    };
    SiCi {
        si_upper: si,
        si_lower: si - FRAC_PI_2,
        ci,
    }
}

/// Modified Lentz evaluation of the continued fraction for E₁(ix).
fn continued_fraction(x: f64) -> SiCi {
    const TINY: f64 = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..100_000u32 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    let (s, co) = x.sin_cos();
    let e1 = Complex64::new(co, -s) * h;
    SiCi {
        si_upper: FRAC_PI_2 + e1.im,
        si_lower: e1.im,
        ci: -e1.re,
    }
}

/// Si, si and Ci at x ≥ 0 (Ci(0) is −∞).
pub fn sici(x: f64) -> Result<SiCi> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("sici", x, "x >= 0"));
    }
    Ok(if x <= SERIES_LIMIT {
        maclaurin(x)
    } else {
        continued_fraction(x)
    })
}

pub fn si_upper(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("si_upper", x, "x >= 0"));
    }
    Ok(sici(x)?.si_upper)
}

pub fn si_lower(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(domain("si_lower", x, "x >= 0"));
    }
    Ok(sici(x)?.si_lower)
}

pub fn ci(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain("ci", x, "x > 0"));
    }
    Ok(sici(x)?.ci)
}

/// Ei(ix) = Ci(x) + i(Si(x) + π/2) for x > 0; Ei(−ix) is its conjugate.
pub fn ei_imag(x: f64) -> Result<ComplexPair> {
    if !(x > 0.0) {
        return Err(domain("ei_imag", x, "x > 0"));
    }
    let v = sici(x)?;
    Ok(ComplexPair {
        re: v.ci,
        im: v.si_upper + FRAC_PI_2,
    })
}
