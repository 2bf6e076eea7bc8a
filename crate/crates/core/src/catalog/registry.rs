use super::expr::{
    call, ci, cos, euler_gamma, ln, ln2, lngamma, num, param, pi, psi, psi1, ratio, sin, sqrt,
    tan, tanh, zeta_of, Func,
};
use super::lemmas::{moment_integral, summation_formula, trig_difference, trig_difference_exact};
use super::{
    CatalogError, Estimate, Grid, Identity, Lhs, ParamDomain, Params, RhsVariant, StatusHint,
    ValueExpr,
};
use crate::quad::{IntegrandSpec, Interval, KernelSign, Outer, QuadConfig};
use crate::series::{Mode, TermId};
use crate::specfun::kummer_ln_gamma_detailed;
use std::f64::consts::PI;

const LOWER: Interval = Interval::ZeroOne;
const UPPER: Interval = Interval::OneInf;
const FULL: Interval = Interval::ZeroInf;

/// Explicit terms used by tail-corrected right-hand sides.
const TAIL_TERMS: u64 = 4096;
/// Terms used for the Kummer series left-hand side.
const KUMMER_TERMS: u64 = 2000;

fn get(p: &Params, name: &str) -> Result<f64, CatalogError> {
    p.get(name)
        .copied()
        .ok_or_else(|| CatalogError::MissingParam(name.to_string()))
}

fn index(p: &Params, name: &str) -> Result<u32, CatalogError> {
    let v = get(p, name)?;
    if v >= 0.0 && v.fract() == 0.0 && v <= 1e6 {
        Ok(v as u32)
    } else {
        Err(CatalogError::OutOfDomain(format!("{name} must be a non-negative integer, got {v}")))
    }
}

fn set(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn points(name: &str, values: &[f64]) -> Grid {
    Grid::Fixed(values.iter().map(|&v| set(&[(name, v)])).collect())
}

fn a_grid(exclude_odd_pi: bool) -> ParamDomain {
    ParamDomain {
        description: if exclude_odd_pi {
            "a > 0, a not within 1e-6 of an odd multiple of pi"
        } else {
            "a > 0"
        },
        grid: Grid::AGrid,
        required: &["a"],
        exclude_odd_pi,
    }
}

fn fixed_a(a: f64, description: &'static str) -> ParamDomain {
    ParamDomain {
        description,
        grid: points("a", &[a]),
        required: &["a"],
        exclude_odd_pi: false,
    }
}

fn fixed(description: &'static str, grid: Grid, required: &'static [&'static str]) -> ParamDomain {
    ParamDomain {
        description,
        grid,
        required,
        exclude_odd_pi: false,
    }
}

fn variant(label: &'static str, value: ValueExpr) -> RhsVariant {
    RhsVariant {
        label,
        value,
        tol_floor: 0.0,
    }
}

fn floored(label: &'static str, value: ValueExpr, tol_floor: f64) -> RhsVariant {
    RhsVariant {
        label,
        value,
        tol_floor,
    }
}

fn closed(e: super::Expr) -> ValueExpr {
    ValueExpr::ClosedForm(e)
}

fn series(term: TermId, mode: Mode) -> ValueExpr {
    ValueExpr::series(term, mode)
}

fn kernel(p: &Params, log_power: u32, denom_power: u32, outer: Outer) -> Result<IntegrandSpec, CatalogError> {
    Ok(IntegrandSpec::log_kernel(log_power, denom_power, get(p, "a")?, outer, LOWER))
}

fn integral(p: &Params, log_power: u32, denom_power: u32, outer: Outer) -> Result<Lhs, CatalogError> {
    Ok(Lhs::Integral(kernel(p, log_power, denom_power, outer)?))
}

fn minus(p: &Params, log_power: u32, denom_power: u32, outer: Outer) -> Result<Lhs, CatalogError> {
    Ok(Lhs::Integral(
        kernel(p, log_power, denom_power, outer)?.with_sign(KernelSign::Minus),
    ))
}

fn scaled(p: &Params, log_power: u32, outer: Outer, scale: f64) -> Result<Lhs, CatalogError> {
    Ok(Lhs::Integral(kernel(p, log_power, 1, outer)?.with_scale(scale)))
}

fn identity(
    id: &'static str,
    statement: &'static str,
    lhs: fn(&Params) -> Result<Lhs, CatalogError>,
    intervals: &[Interval],
    rhs: Vec<RhsVariant>,
    domain: ParamDomain,
    citation: &'static str,
) -> Identity {
    Identity {
        id,
        statement,
        lhs,
        intervals: intervals.to_vec(),
        rhs,
        domain,
        citation,
        status_hint: StatusHint::ExpectedPass,
    }
}

fn hint(mut i: Identity, h: StatusHint) -> Identity {
    i.status_hint = h;
    i
}

// Series forms shared between identities.

fn log_series_at_pi() -> ValueExpr {
    series(TermId::LogKk1, Mode::TailCorrected)
        .terms(TAIL_TERMS)
        .affine(ratio(1, 4) - 1.0 / pi().powi(2), -1.0 / (2.0 * pi().powi(2)))
}

fn bernoulli_series_at_pi() -> ValueExpr {
    series(TermId::BernoulliPi, Mode::Direct).affine(
        ratio(1, 4) - 1.0 / pi().powi(2) - ln(pi() / 2.0) / pi().powi(2),
        1.0 / (2.0 * pi().powi(2)),
    )
}

fn zeta_series_at_pi() -> ValueExpr {
    series(TermId::Zeta2km14k, Mode::Direct)
        .affine(ratio(1, 4) - 1.0 / pi().powi(2), -2.0 / pi().powi(2))
}

fn a() -> super::Expr {
    param("a")
}

fn main_identities() -> Vec<Identity> {
    let pi_fixed = || fixed_a(PI, "a = pi");
    vec![
        identity(
            "main-01",
            "int_0^1 dx/((a^2+ln^2 x)(1+x)) = (1/a) sum_{k>=1} (-1)^k [si(ak)cos(ak) - Ci(ak)sin(ak)]",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "si/Ci series",
                series(TermId::SiciA, Mode::AlternatingAccelerated)
                    .with_param("a", a())
                    .or_else(Mode::CesaroC1)
                    .affine(num(0.0), 1.0 / a()),
            )],
            a_grid(false),
            "main results, item 1",
        ),
        identity(
            "main-02",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x)) = (1/pi) sum_{k>=1} si(k pi)",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![
                variant(
                    "si series",
                    series(TermId::SiKpi, Mode::AlternatingAccelerated).affine(num(0.0), 1.0 / pi()),
                ),
                variant("log series (limit of item 3)", log_series_at_pi()),
            ],
            pi_fixed(),
            "main results, item 2",
        ),
        identity(
            "main-03",
            "int_0^1 dx/((a^2+ln^2 x)(1+x)) = pi/(4a) - 2 sum_{k>=0} (ln a - ln pi - ln(2k+1))/(a^2 - (2k+1)^2 pi^2)",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "log series",
                series(TermId::LogShiftA, Mode::TailCorrected)
                    .with_param("a", a())
                    .terms(TAIL_TERMS)
                    .affine(pi() / (4.0 * a()), num(-2.0)),
            )],
            a_grid(true),
            "main results, item 3",
        ),
        identity(
            "main-04",
            "int_1^inf dx/((a^2+ln^2 x)(1+x)) = pi/(4a) + 2 sum_{k>=0} (ln a - ln pi - ln(2k+1))/(a^2 - (2k+1)^2 pi^2)",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[UPPER],
            vec![variant(
                "log series",
                series(TermId::LogShiftA, Mode::TailCorrected)
                    .with_param("a", a())
                    .terms(TAIL_TERMS)
                    .affine(pi() / (4.0 * a()), num(2.0)),
            )],
            a_grid(true),
            "main results, item 4",
        ),
        identity(
            "main-05",
            "int_0^inf dx/((a^2+ln^2 x)(1+x)) = pi/(2a)",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[FULL],
            vec![variant("closed form", closed(pi() / (2.0 * a())))],
            a_grid(false),
            "main results, item 5",
        ),
        identity(
            "main-06",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x)) = 1/4 - 1/pi^2 - (1/(2 pi^2)) sum_{k>=1} ln(2k+1)/(k(k+1))",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![
                variant("log series", log_series_at_pi()),
                variant("Bernoulli series", bernoulli_series_at_pi()),
                variant("zeta series", zeta_series_at_pi()),
            ],
            pi_fixed(),
            "main results, items 6-8",
        ),
        identity(
            "main-07",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x)) = 1/4 - 1/pi^2 - ln(pi/2)/pi^2 + (1/2) sum_{k>=1} (-1)^k pi^(2k-2) B_2k/((2k)! k (2k-1))",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant("Bernoulli series", bernoulli_series_at_pi())],
            pi_fixed(),
            "main results, item 7",
        ),
        identity(
            "main-08",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x)) = 1/4 - 1/pi^2 - (2/pi^2) sum_{k>=1} zeta(2k)/((2k-1) 4^k)",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant("zeta series", zeta_series_at_pi())],
            pi_fixed(),
            "main results, item 8",
        ),
        identity(
            "main-09",
            "int_0^1 dx/((4 pi^2+ln^2 x)(1+x)) = 1/8 - (2/pi^2) sum_{k>=1} ln(2k+1)/((2k-1)(2k+3))",
            |p| integral(p, 0, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "log series",
                series(TermId::Log2km12kp3, Mode::TailCorrected)
                    .terms(TAIL_TERMS)
                    .affine(ratio(1, 8), -2.0 / pi().powi(2)),
            )],
            fixed_a(2.0 * PI, "a = 2 pi"),
            "main results, item 9",
        ),
        identity(
            "main-10",
            "int_0^1 dx/((a^2+ln^2 x)^2 (1+x)) = pi/(8a^3) - tan(a/2)/(4a^3) + 2 sum_{k>=0} (ln((2k+1)pi) - ln a)/((2k+1)^2 pi^2 - a^2)^2",
            |p| integral(p, 0, 2, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "log series",
                series(TermId::LogShiftASq, Mode::TailCorrected)
                    .with_param("a", a())
                    .terms(TAIL_TERMS)
                    .affine(
                        pi() / (8.0 * a().powi(3)) - tan(a() / 2.0) / (4.0 * a().powi(3)),
                        num(2.0),
                    ),
            )],
            a_grid(true),
            "main results, item 10",
        ),
        identity(
            "main-11",
            "int_0^1 dx/((pi^2+ln^2 x)^2 (1+x)) = 1/(8 pi^2) - 3/(4 pi^4) + (1/(8 pi^4)) sum_{k>=1} ln(1+2k)/(k^2 (1+k)^2)",
            |p| integral(p, 0, 2, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "log series",
                series(TermId::LogK2k12, Mode::TailCorrected).terms(TAIL_TERMS).affine(
                    1.0 / (8.0 * pi().powi(2)) - 3.0 / (4.0 * pi().powi(4)),
                    1.0 / (8.0 * pi().powi(4)),
                ),
            )],
            pi_fixed(),
            "main results, item 11",
        ),
        identity(
            "main-12",
            "int_0^1 dx/((a^2+ln^2 x)(1+x)^2) = -psi1(a/(2pi))/(4 a pi) + psi1(a/pi)/(a pi), equal on (1,inf)",
            |p| integral(p, 0, 1, Outer::OnePlusXSquared),
            &[LOWER, UPPER],
            vec![variant(
                "trigamma closed form",
                closed(
                    -(psi1(a() / (2.0 * pi())) / (4.0 * a() * pi())) + psi1(a() / pi()) / (a() * pi()),
                ),
            )],
            a_grid(false),
            "main results, item 12",
        ),
        identity(
            "main-13",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x)^2) = (1/pi) sum_{k>=1} k si(k pi) = 1/24, equal on (1,inf)",
            |p| integral(p, 0, 1, Outer::OnePlusXSquared),
            &[LOWER, UPPER],
            vec![
                variant("exact", ValueExpr::RationalConstant { p: 1, q: 24 }),
                floored(
                    "k si series, Cesaro",
                    series(TermId::KSiKpi, Mode::CesaroC1).affine(num(0.0), 1.0 / pi()),
                    1e-4,
                ),
                variant(
                    "k si series, Euler",
                    series(TermId::KSiKpi, Mode::AlternatingAccelerated).affine(num(0.0), 1.0 / pi()),
                ),
            ],
            pi_fixed(),
            "main results, item 13",
        ),
        identity(
            "main-14",
            "int_0^1 ln x dx/((a^2+ln^2 x)(1+x)) = (1/2) ln(2a/pi) + (1/2) psi(a/(2pi)) - psi(a/pi)",
            |p| integral(p, 1, 1, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "digamma closed form",
                closed(
                    0.5 * ln(2.0 * a() / pi()) + 0.5 * psi(a() / (2.0 * pi())) - psi(a() / pi()),
                ),
            )],
            a_grid(false),
            "main results, item 14",
        ),
        identity(
            "main-15",
            "int_0^1 ln x dx/((pi^2+ln^2 x)(1+x)) = -sum_{k>=1} Ci(k pi) = gamma/2 - ln2/2",
            |p| integral(p, 1, 1, Outer::OnePlusX),
            &[LOWER],
            vec![
                variant("closed form", closed(euler_gamma() / 2.0 - ln2() / 2.0)),
                variant(
                    "Ci series",
                    series(TermId::CiKpi, Mode::AlternatingAccelerated).affine(num(0.0), num(-1.0)),
                ),
            ],
            pi_fixed(),
            "main results, item 15",
        ),
        identity(
            "main-16",
            "int_0^1 ln x dx/((a^2+ln^2 x)^2 (1+x)) = -1/(4a^2) - psi1(a/(2pi))/(8 a pi) + psi1(a/pi)/(2 a pi)",
            |p| integral(p, 1, 2, Outer::OnePlusX),
            &[LOWER],
            vec![variant(
                "trigamma closed form",
                closed(
                    -1.0 / (4.0 * a().powi(2)) - psi1(a() / (2.0 * pi())) / (8.0 * a() * pi())
                        + psi1(a() / pi()) / (2.0 * a() * pi()),
                ),
            )],
            a_grid(false),
            "main results, item 16",
        ),
        identity(
            "main-17",
            "int_0^1 ln x dx/((pi^2+ln^2 x)^2 (1+x)) = 1/48 - 1/(4 pi^2)",
            |p| integral(p, 1, 2, Outer::OnePlusX),
            &[LOWER],
            vec![
                variant("closed form", closed(ratio(1, 48) - 1.0 / (4.0 * pi().powi(2)))),
                variant(
                    "trigamma values",
                    closed(
                        -1.0 / (4.0 * pi().powi(2)) - psi1(num(0.5)) / (8.0 * pi().powi(2))
                            + psi1(num(1.0)) / (2.0 * pi().powi(2)),
                    ),
                ),
            ],
            pi_fixed(),
            "main results, item 17",
        ),
        identity(
            "main-18",
            "int_0^1 ln x dx/((pi^2+ln^2 x)(1+x)^2) = -sum_{k>=1} k Ci(k pi)",
            |p| integral(p, 1, 1, Outer::OnePlusXSquared),
            &[LOWER],
            vec![
                variant(
                    "k Ci series, Euler",
                    series(TermId::KCiKpi, Mode::AlternatingAccelerated).affine(num(0.0), num(-1.0)),
                ),
                floored(
                    "k Ci series, Cesaro",
                    series(TermId::KCiKpi, Mode::CesaroC1).affine(num(0.0), num(-1.0)),
                    1e-4,
                ),
            ],
            pi_fixed(),
            "main results, item 18",
        ),
        identity(
            "main-19",
            "int_0^1 dx/((pi^2+ln^2 x)^2 (1+x)^2) = (zeta(3)+zeta(2))/(8 pi^4), equal on (1,inf)",
            |p| integral(p, 0, 2, Outer::OnePlusXSquared),
            &[LOWER, UPPER],
            vec![variant(
                "zeta closed form",
                closed((zeta_of(num(3.0)) + zeta_of(num(2.0))) / (8.0 * pi().powi(4))),
            )],
            pi_fixed(),
            "main results, item 19",
        ),
    ]
}

fn kummer_lhs(p: &Params, _: &QuadConfig) -> Result<Estimate, CatalogError> {
    let k = kummer_ln_gamma_detailed(get(p, "y")?, KUMMER_TERMS)?;
    Ok(Estimate {
        value: k.value,
        error: k.error_estimate,
    })
}

fn moment_rhs(p: &Params, _: &QuadConfig) -> Result<Estimate, CatalogError> {
    let v = moment_integral(index(p, "k")?, get(p, "a")?, index(p, "p")?)?;
    Ok(Estimate {
        value: v,
        error: 16.0 * f64::EPSILON * (v.abs() + 1.0),
    })
}

fn moment_lhs(p: &Params) -> Result<Lhs, CatalogError> {
    let k = index(p, "k")?;
    let lp = index(p, "p")?;
    Ok(Lhs::Integral(IntegrandSpec::log_kernel(
        lp,
        1,
        get(p, "a")?,
        Outer::NegXPow(k),
        LOWER,
    )))
}

fn summation_lhs(p: &Params, cfg: &QuadConfig) -> Result<Estimate, CatalogError> {
    let r = summation_formula(get(p, "s")?, cfg)?;
    Ok(Estimate {
        value: r.value,
        error: r.error_estimate,
    })
}

fn trig_lhs(p: &Params, cfg: &QuadConfig) -> Result<Estimate, CatalogError> {
    Ok(trig_difference(index(p, "k")?, cfg)?)
}

fn trig_claimed(p: &Params, _: &QuadConfig) -> Result<Estimate, CatalogError> {
    let k = index(p, "k")?;
    Ok(Estimate {
        value: if k % 2 == 0 { 0.0 } else { -2.0 },
        error: 0.0,
    })
}

fn trig_exact(p: &Params, _: &QuadConfig) -> Result<Estimate, CatalogError> {
    let v = trig_difference_exact(index(p, "k")?);
    Ok(Estimate {
        value: v,
        error: f64::EPSILON * v.abs(),
    })
}

fn moment_grid(fixed_a: Option<f64>) -> Grid {
    let a_values: Vec<f64> = match fixed_a {
        Some(a) => vec![a],
        None => vec![1.0, PI, 2.0 * PI],
    };
    let mut sets = Vec::new();
    for &a in &a_values {
        for k in 0..=20 {
            sets.push(set(&[("a", a), ("k", k as f64)]));
        }
    }
    Grid::Fixed(sets)
}

fn with_p(grid: Grid, p: f64) -> Grid {
    match grid {
        Grid::Fixed(sets) => Grid::Fixed(
            sets.into_iter()
                .map(|mut s| {
                    s.insert("p".into(), p);
                    s
                })
                .collect(),
        ),
        g => g,
    }
}

fn lemma_identities() -> Vec<Identity> {
    let mut legendre_grid = Vec::new();
    for a in [0.5, 1.0, PI, 2.0 * PI, 5.0] {
        for b in [0.5, 1.0, 2.0] {
            legendre_grid.push(set(&[("a", a), ("b", b)]));
        }
    }
    let abn = || a() * param("b") / (2.0 * pi());
    vec![
        identity(
            "lemma-saalschuetz",
            "tanh x = 8x sum_{k>=0} 1/((2k+1)^2 pi^2 + 4x^2)",
            |_| Ok(Lhs::Value(closed(tanh(param("x"))))),
            &[],
            vec![variant(
                "partial fractions, tail corrected",
                series(TermId::Saalschuetz, Mode::TailCorrected)
                    .with_param("x", param("x"))
                    .terms(10_000),
            )],
            fixed(
                "0 < |x| <= 10",
                points("x", &[-10.0, -5.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0, 10.0]),
                &["x"],
            ),
            "proof lemma: partial-fraction expansion of tanh",
        ),
        identity(
            "lemma-kummer",
            "ln Gamma(y) = Kummer's Fourier series on (0,1)",
            |_| {
                Ok(Lhs::Value(ValueExpr::Computed {
                    description: "Kummer series, 2000 terms plus accelerated tail",
                    eval: kummer_lhs,
                }))
            },
            &[],
            vec![floored("ln Gamma", closed(lngamma(param("y"))), 1e-6)],
            fixed(
                "0 < y < 1",
                points("y", &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]),
                &["y"],
            ),
            "proof lemma: Kummer's series for ln Gamma",
        ),
        identity(
            "lemma-kummer-trig",
            "int_{3/4}^1 sin(2 pi k y) cos(4 pi y) dy - int_{1/4}^{1/2} sin(2 pi k y) cos(4 pi y) dy = (-1)^k - 1",
            |_| {
                Ok(Lhs::Value(ValueExpr::Computed {
                    description: "quadrature of the two trigonometric integrals",
                    eval: trig_lhs,
                }))
            },
            &[],
            vec![
                variant(
                    "claimed (-1)^k - 1",
                    ValueExpr::Computed {
                        description: "(-1)^k - 1",
                        eval: trig_claimed,
                    },
                ),
                variant(
                    "exact",
                    ValueExpr::Computed {
                        description: "-k/(pi (k^2-4)) for odd k, 0 for even k",
                        eval: trig_exact,
                    },
                ),
            ],
            fixed("k = 1..6", points("k", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]), &["k"]),
            "proof lemma: trigonometric integral in the Kummer-series step",
        ),
        identity(
            "lemma-legendre",
            "int_0^inf t dt/((e^{bt}+1)(t^2+a^2)) = (1/2) psi(1/2 + ab/(2pi)) - (1/2) ln(ab/(2pi))",
            |p| Ok(Lhs::Integral(IntegrandSpec::legendre(get(p, "a")?, get(p, "b")?))),
            &[],
            vec![variant(
                "digamma closed form",
                closed(0.5 * psi(0.5 + abn()) - 0.5 * ln(abn())),
            )],
            fixed("a > 0, b > 0", Grid::Fixed(legendre_grid), &["a", "b"]),
            "proof lemma: Legendre's integral for the digamma function",
        ),
        identity(
            "lemma-bernoulli-zeta",
            "B_2k = (-1)^(k+1) 2 (2k)! zeta(2k)/(2 pi)^(2k)",
            |_| Ok(Lhs::Value(closed(call(Func::Bernoulli2k, param("k"))))),
            &[],
            vec![variant(
                "zeta relation",
                closed(call(Func::Bernoulli2kZeta, param("k"))),
            )],
            fixed(
                "k = 1..8",
                points("k", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]),
                &["k"],
            ),
            "proof lemma: Bernoulli numbers and zeta at even integers",
        ),
        identity(
            "lemma-zeta-k4k",
            "2 sum_{k>=1} zeta(2k)/(k 4^k) = 2 ln(pi/2)",
            |_| {
                Ok(Lhs::Value(
                    series(TermId::ZetaK4k, Mode::Direct).affine(num(0.0), num(2.0)),
                ))
            },
            &[],
            vec![variant("closed form", closed(2.0 * ln(pi() / 2.0)))],
            fixed("no parameters", Grid::Fixed(vec![Params::new()]), &[]),
            "proof lemma: series of zeta(2k)/(k 4^k)",
        ),
        identity(
            "lemma-log-bernoulli",
            "sum_{k>=1} ln(2k+1)/(k(k+1)) = 2 ln(pi/2) - sum_{k>=1} (-1)^k B_2k pi^(2k)/((2k)! k (2k-1))",
            |_| {
                Ok(Lhs::Value(
                    series(TermId::LogKk1, Mode::TailCorrected).terms(TAIL_TERMS),
                ))
            },
            &[],
            vec![variant(
                "Bernoulli series",
                series(TermId::BernoulliPi, Mode::Direct)
                    .affine(2.0 * ln(pi() / 2.0), num(-1.0)),
            )],
            fixed("no parameters", Grid::Fixed(vec![Params::new()]), &[]),
            "proof lemma: logarithmic series in Bernoulli form",
        ),
        identity(
            "lemma-moment-p0",
            "int_0^1 (-x)^k dx/(a^2+ln^2 x) = (-1)^k (1/a) [Ci(a(k+1)) sin(a(k+1)) - si(a(k+1)) cos(a(k+1))]",
            moment_lhs,
            &[LOWER],
            vec![variant(
                "Ci/si closed form",
                ValueExpr::Computed {
                    description: "(-1)^k (1/a) [Ci(ac) sin(ac) - si(ac) cos(ac)], c = k+1",
                    eval: moment_rhs,
                },
            )],
            fixed(
                "k = 0..20, a in {1, pi, 2pi}",
                with_p(moment_grid(None), 0.0),
                &["a", "k", "p"],
            ),
            "proof lemma: moment integral without logarithm",
        ),
        identity(
            "lemma-moment-p1",
            "int_0^1 (-x)^k ln x dx/(a^2+ln^2 x) = (-1)^k [Ci(a(k+1)) cos(a(k+1)) + si(a(k+1)) sin(a(k+1))]",
            moment_lhs,
            &[LOWER],
            vec![variant(
                "Ci/si closed form",
                ValueExpr::Computed {
                    description: "(-1)^k [Ci(ac) cos(ac) + si(ac) sin(ac)], c = k+1",
                    eval: moment_rhs,
                },
            )],
            fixed(
                "k = 0..20, a in {1, pi, 2pi}",
                with_p(moment_grid(None), 1.0),
                &["a", "k", "p"],
            ),
            "proof lemma: moment integral with logarithm",
        ),
        identity(
            "lemma-moment-ci",
            "int_0^1 (-x)^k ln x dx/(pi^2+ln^2 x) = -Ci((k+1) pi)",
            moment_lhs,
            &[LOWER],
            vec![variant(
                "-Ci((k+1)pi)",
                closed(-ci((param("k") + 1.0) * pi())),
            )],
            fixed("k = 0..20, a = pi", with_p(moment_grid(Some(PI)), 1.0), &["a", "k", "p"]),
            "proof lemma: moment integral at a = pi",
        ),
        identity(
            "lemma-summation-formula",
            "(pi/(s-1)) int_0^inf Re[(1/2+it)^(1-s)] sech^2(pi t) dt = zeta(s)",
            |_| {
                Ok(Lhs::Value(ValueExpr::Computed {
                    description: "quadrature of the summation formula",
                    eval: summation_lhs,
                }))
            },
            &[],
            vec![variant("zeta", closed(zeta_of(param("s"))))],
            fixed("s > 1", points("s", &[2.0, 3.0, 4.0]), &["s"]),
            "proof lemma: summation formula for zeta(3)",
        ),
        identity(
            "lemma-digamma-reflection",
            "psi(1-x) - psi(x) = pi cot(pi x)",
            |_| Ok(Lhs::Value(closed(psi(1.0 - param("x")) - psi(param("x"))))),
            &[],
            vec![variant(
                "cotangent",
                closed(pi() * cos(pi() * param("x")) / sin(pi() * param("x"))),
            )],
            fixed(
                "0 < x < 1",
                points("x", &[0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9]),
                &["x"],
            ),
            "proof lemma: digamma reflection",
        ),
        identity(
            "lemma-digamma-duplication",
            "psi(a/pi) = (1/2) psi(1/2 + a/(2pi)) + (1/2) psi(a/(2pi)) + ln 2",
            |_| Ok(Lhs::Value(closed(psi(a() / pi())))),
            &[],
            vec![variant(
                "duplication",
                closed(0.5 * psi(0.5 + a() / (2.0 * pi())) + 0.5 * psi(a() / (2.0 * pi())) + ln2()),
            )],
            fixed(
                "a > 0",
                points("a", &[0.5, 1.0, PI, 2.0 * PI, 10.0]),
                &["a"],
            ),
            "proof lemma: digamma duplication",
        ),
        identity(
            "lemma-sqrt-outer",
            "int_0^1 dx/((4 pi^2+ln^2 x)(1+x) sqrt(x)) = (4-pi)/(8 pi)",
            |p| integral(p, 0, 1, Outer::OnePlusXSqrtX),
            &[LOWER],
            vec![variant("closed form", closed((4.0 - pi()) / (8.0 * pi())))],
            fixed_a(2.0 * PI, "a = 2 pi"),
            "proof lemma: auxiliary integral in the Kummer-series step",
        ),
        identity(
            "lemma-fullline-13",
            "int_0^inf dx/((pi^2+ln^2 x)(1+x)^2) = 1/12",
            |p| integral(p, 0, 1, Outer::OnePlusXSquared),
            &[FULL],
            vec![variant("exact", ValueExpr::RationalConstant { p: 1, q: 12 })],
            fixed_a(PI, "a = pi"),
            "main results, item 13 on the full line",
        ),
        identity(
            "lemma-fullline-19",
            "int_0^inf dx/((pi^2+ln^2 x)^2 (1+x)^2) = (zeta(3)+zeta(2))/(4 pi^4)",
            |p| integral(p, 0, 2, Outer::OnePlusXSquared),
            &[FULL],
            vec![variant(
                "zeta closed form",
                closed((zeta_of(num(3.0)) + zeta_of(num(2.0))) / (4.0 * pi().powi(4))),
            )],
            fixed_a(PI, "a = pi"),
            "main results, item 19 on the full line",
        ),
        identity(
            "lemma-zeta3-chain",
            "4 pi^4 int_0^inf dx/((pi^2+ln^2 x)^2 (1+x)^2) - 2 pi^2 int_0^inf dx/((pi^2+ln^2 x)(1+x)^2) = zeta(3)",
            |p| {
                let a = get(p, "a")?;
                Ok(Lhs::Combination(vec![
                    (
                        4.0 * PI.powi(4),
                        IntegrandSpec::log_kernel(0, 2, a, Outer::OnePlusXSquared, FULL),
                    ),
                    (
                        -2.0 * PI * PI,
                        IntegrandSpec::log_kernel(0, 1, a, Outer::OnePlusXSquared, FULL),
                    ),
                ]))
            },
            &[],
            vec![variant("zeta(3)", closed(zeta_of(num(3.0))))],
            fixed_a(PI, "a = pi"),
            "main results, item 19: derivation of zeta(3)",
        ),
        identity(
            "remark-n",
            "int_0^1 ln(((n+1)^2 pi^2+ln^2 x)/((n-1)^2 pi^2+ln^2 x)) dx/(1+x)^2 = 2/n, same on (1,inf)",
            |p| {
                let n = index(p, "n")?;
                Ok(Lhs::Integral(IntegrandSpec::log_ratio(n, LOWER)))
            },
            &[LOWER, UPPER],
            vec![variant("claimed 2/n", closed(2.0 / param("n")))],
            fixed(
                "n = 1..5",
                points("n", &[1.0, 2.0, 3.0, 4.0, 5.0]),
                &["n"],
            ),
            "closing remark: log-ratio integrals",
        ),
    ]
}

fn appendix_identities() -> Vec<Identity> {
    let q = a;
    let bern = |term: TermId, r: super::Expr, scale: super::Expr| -> ValueExpr {
        series(term, Mode::Direct)
            .with_param("r", r)
            .affine(num(0.0), scale)
    };
    let hunt_grid_3 = || {
        fixed(
            "q = 10 pi, 20 pi (q identified with a)",
            points("a", &[10.0 * PI, 20.0 * PI]),
            &["a"],
        )
    };
    let hunt_grid_15 = || {
        fixed(
            "q = 5 pi, 10 pi (q identified with a)",
            points("a", &[5.0 * PI, 10.0 * PI]),
            &["a"],
        )
    };
    let r2 = || 2.0 * pi() / q();
    let r1 = || pi() / q();
    let sqrt2 = || sqrt(num(2.0));
    let lnr = || ln((sqrt2() - 1.0) / (sqrt2() + 1.0));
    vec![
        identity(
            "appendix-01",
            "int_0^1 ln x dx/((4 pi^2+ln^2 x)(1-x)) = 1/4 - gamma/2",
            |p| integral(p, 1, 1, Outer::OneMinusX),
            &[LOWER],
            vec![variant("table value", closed(ratio(1, 4) - euler_gamma() / 2.0))],
            fixed_a(2.0 * PI, "a = 2 pi"),
            "appendix table, entry 1",
        ),
        identity(
            "appendix-02",
            "int_0^1 ln x dx/((q^2+ln^2 x)(1-x)) = (1/2)(pi/q + ln(2pi/q) + psi(q/(2pi)))",
            |p| integral(p, 1, 1, Outer::OneMinusX),
            &[LOWER],
            vec![variant(
                "table value",
                closed(0.5 * (pi() / q() + ln(2.0 * pi() / q()) + psi(q() / (2.0 * pi())))),
            )],
            a_grid(false),
            "appendix table, entry 2",
        ),
        hint(
            identity(
                "appendix-03",
                "PV int_0^1 ln x dx/((q^2-ln^2 x)(1-x)) = (pi^2/q^2) sum_{n>=0} (-1)^(n-1)/(n+1) B_(2n+1) (2pi/q)^(2n)",
                |p| minus(p, 1, 1, Outer::OneMinusX),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(TermId::BernoulliAltN1, r2(), pi().powi(2) / q().powi(2)),
                )],
                hunt_grid_3(),
                "appendix table, entry 3",
            ),
            StatusHint::ArchaicConvention,
        ),
        hint(
            identity(
                "appendix-04",
                "int_0^1 ln x dx/((q^2+ln^2 x)^2 (1-x)) = -(pi^2/q^4) sum_{n>=0} B_(2n+1) (2pi/q)^(2n)",
                |p| integral(p, 1, 2, Outer::OneMinusX),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(TermId::BernoulliPlain, r2(), -(pi().powi(2) / q().powi(4))),
                )],
                hunt_grid_3(),
                "appendix table, entry 4",
            ),
            StatusHint::ArchaicConvention,
        ),
        hint(
            identity(
                "appendix-05",
                "FP int_0^1 ln x dx/((q^2-ln^2 x)^2 (1-x)) = (pi^2/q^2) sum_{n>=0} (-1)^(n-1) B_(2n+1) (2pi/q)^(2n)",
                |p| minus(p, 1, 2, Outer::OneMinusX),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(TermId::BernoulliAlt, r2(), pi().powi(2) / q().powi(2)),
                )],
                hunt_grid_3(),
                "appendix table, entry 5",
            ),
            StatusHint::ArchaicConvention,
        ),
        identity(
            "appendix-06",
            "int_0^1 dx/((pi^2+ln^2 x)(1+x^2)) = (4-pi)/(4pi)",
            |p| integral(p, 0, 1, Outer::OnePlusX2),
            &[LOWER],
            vec![variant("table value", closed((4.0 - pi()) / (4.0 * pi())))],
            fixed_a(PI, "a = pi"),
            "appendix table, entry 6",
        ),
        identity(
            "appendix-07",
            "int_0^1 dx/((pi^2+4 ln^2 x)(1+x^2)) = ln2/(4pi)",
            |p| scaled(p, 0, Outer::OnePlusX2, 0.25),
            &[LOWER],
            vec![variant("table value", closed(ln2() / (4.0 * pi())))],
            fixed_a(PI / 2.0, "written as (1/4)/((pi/2)^2+ln^2 x), a = pi/2"),
            "appendix table, entry 7",
        ),
        identity(
            "appendix-08",
            "int_0^1 dx/((pi^2+16 ln^2 x)(1+x^2)) = (pi + ln((sqrt2-1)/(sqrt2+1)))/(8 pi sqrt2)",
            |p| scaled(p, 0, Outer::OnePlusX2, 1.0 / 16.0),
            &[LOWER],
            vec![variant(
                "table value",
                closed((pi() + lnr()) / (8.0 * pi() * sqrt2())),
            )],
            fixed_a(PI / 4.0, "written as (1/16)/((pi/4)^2+ln^2 x), a = pi/4"),
            "appendix table, entry 8",
        ),
        identity(
            "appendix-09",
            "int_0^1 dx/((q^2+ln^2 x)(1+x^2)) = (psi((2q+3pi)/(4pi)) - psi((2q+pi)/(4pi)))/(4q)",
            |p| integral(p, 0, 1, Outer::OnePlusX2),
            &[LOWER],
            vec![variant(
                "table value",
                closed(
                    (psi((2.0 * q() + 3.0 * pi()) / (4.0 * pi())) - psi((2.0 * q() + pi()) / (4.0 * pi())))
                        / (4.0 * q()),
                ),
            )],
            a_grid(false),
            "appendix table, entry 9",
        ),
        identity(
            "appendix-10",
            "int_0^1 ln x dx/((pi^2+ln^2 x)(1-x^2)) = (1/2)(1/2 - ln2)",
            |p| integral(p, 1, 1, Outer::OneMinusX2),
            &[LOWER],
            vec![variant("table value", closed(0.5 * (0.5 - ln2())))],
            fixed_a(PI, "a = pi"),
            "appendix table, entry 10",
        ),
        identity(
            "appendix-11",
            "int_0^1 ln x dx/((pi^2+4 ln^2 x)(1-x^2)) = (2-pi)/16",
            |p| scaled(p, 1, Outer::OneMinusX2, 0.25),
            &[LOWER],
            vec![variant("table value", closed((2.0 - pi()) / 16.0))],
            fixed_a(PI / 2.0, "written as (1/4)/((pi/2)^2+ln^2 x), a = pi/2"),
            "appendix table, entry 11",
        ),
        identity(
            "appendix-12",
            "int_0^1 ln x dx/((pi^2+16 ln^2 x)(1-x^2)) = -pi/(32 sqrt2) + 1/16 + ln((sqrt2-1)/(sqrt2+1))/(32 sqrt2)",
            |p| scaled(p, 1, Outer::OneMinusX2, 1.0 / 16.0),
            &[LOWER],
            vec![variant(
                "table value",
                closed(-(pi() / (32.0 * sqrt2())) + ratio(1, 16) + lnr() / (32.0 * sqrt2())),
            )],
            fixed_a(PI / 4.0, "written as (1/16)/((pi/4)^2+ln^2 x), a = pi/4"),
            "appendix table, entry 12",
        ),
        identity(
            "appendix-13",
            "int_0^1 x ln x dx/((pi^2+ln^2 x)(1-x^2)) = 1/4 - gamma/2",
            |p| integral(p, 1, 1, Outer::XOverOneMinusX2),
            &[LOWER],
            vec![variant("table value", closed(ratio(1, 4) - euler_gamma() / 2.0))],
            fixed_a(PI, "a = pi"),
            "appendix table, entry 13",
        ),
        identity(
            "appendix-14",
            "int_0^1 x ln x dx/((q^2+ln^2 x)(1-x^2)) = (1/2)(pi/(2q) + ln(pi/q) + psi(q/pi))",
            |p| integral(p, 1, 1, Outer::XOverOneMinusX2),
            &[LOWER],
            vec![variant(
                "table value",
                closed(0.5 * (pi() / (2.0 * q()) + ln(pi() / q()) + psi(q() / pi()))),
            )],
            a_grid(false),
            "appendix table, entry 14",
        ),
        hint(
            identity(
                "appendix-15",
                "PV int_0^1 x ln x dx/((q^2-ln^2 x)(1-x^2)) = (pi^2/(4q^2)) sum_{n>=0} (-1)^(n-1)/(n+1) B_(2n+1) (pi/q)^(2n)",
                |p| minus(p, 1, 1, Outer::XOverOneMinusX2),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(
                        TermId::BernoulliAltN1,
                        r1(),
                        pi().powi(2) / (4.0 * q().powi(2)),
                    ),
                )],
                hunt_grid_15(),
                "appendix table, entry 15",
            ),
            StatusHint::ArchaicConvention,
        ),
        hint(
            identity(
                "appendix-16",
                "int_0^1 x ln x dx/((q^2+ln^2 x)^2 (1-x^2)) = -(pi^2/(4q^4)) sum_{n>=0} B_(2n+1) (pi/q)^(2n)",
                |p| integral(p, 1, 2, Outer::XOverOneMinusX2),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(
                        TermId::BernoulliPlain,
                        r1(),
                        -(pi().powi(2) / (4.0 * q().powi(4))),
                    ),
                )],
                hunt_grid_15(),
                "appendix table, entry 16",
            ),
            StatusHint::ArchaicConvention,
        ),
        hint(
            identity(
                "appendix-17",
                "FP int_0^1 x ln x dx/((q^2-ln^2 x)^2 (1-x^2)) = -(pi^2/(4q^4)) sum_{n>=0} (-1)^(n-1) B_(2n+1) (pi/q)^(2n)",
                |p| minus(p, 1, 2, Outer::XOverOneMinusX2),
                &[LOWER],
                vec![variant(
                    "table value",
                    bern(
                        TermId::BernoulliAlt,
                        r1(),
                        -(pi().powi(2) / (4.0 * q().powi(4))),
                    ),
                )],
                hunt_grid_15(),
                "appendix table, entry 17",
            ),
            StatusHint::ArchaicConvention,
        ),
    ]
}

/// Every identity, in a stable order.
pub fn build_registry() -> Vec<Identity> {
    let mut all = main_identities();
    all.extend(lemma_identities());
    all.extend(appendix_identities());
    for i in all.iter_mut() {
        if i.id == "lemma-kummer-trig" {
            i.status_hint = StatusHint::Suspect;
        }
    }
    all
}
