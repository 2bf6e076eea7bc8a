use super::{CatalogError, Estimate, Params};
use crate::specfun::{
    bernoulli_even, bernoulli_even_via_zeta, digamma, gamma_ln, polygamma, sici, zeta, Convention,
    EULER_GAMMA,
};
use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Ln,
    Sqrt,
    Sin,
    Cos,
    Tan,
    Tanh,
    Psi,
    Psi1,
    Psi2,
    LnGamma,
    Zeta,
    Ci,
    /// Si(x)
    Si,
    /// si(x) = Si(x) − π/2
    SiLower,
    /// Modern B₂ₖ at integer k
    Bernoulli2k,
    /// B₂ₖ through ζ(2k)
    Bernoulli2kZeta,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Tanh => "tanh",
            Func::Psi => "psi",
            Func::Psi1 => "psi1",
            Func::Psi2 => "psi2",
            Func::LnGamma => "lngamma",
            Func::Zeta => "zeta",
            Func::Ci => "Ci",
            Func::Si => "Si",
            Func::SiLower => "si",
            Func::Bernoulli2k => "B2k",
            Func::Bernoulli2kZeta => "B2k_via_zeta",
        }
    }

    /// True for functions of an integer index; their argument must be exact.
    fn indexed(self) -> bool {
        matches!(self, Func::Bernoulli2k | Func::Bernoulli2kZeta)
    }

    fn apply(self, x: f64) -> Result<f64, CatalogError> {
        let index = || -> Result<u32, CatalogError> {
            if x >= 1.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
                Ok(x as u32)
            } else {
                Err(CatalogError::OutOfDomain(format!("{} needs a positive integer, got {x}", self.name())))
            }
        };
        Ok(match self {
            Func::Ln => {
                if !(x > 0.0) {
                    return Err(CatalogError::OutOfDomain(format!("ln of {x}")));
                }
                x.ln()
            }
            Func::Sqrt => {
                if !(x >= 0.0) {
                    return Err(CatalogError::OutOfDomain(format!("sqrt of {x}")));
                }
                x.sqrt()
            }
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Tanh => x.tanh(),
            Func::Psi => digamma(x)?,
            Func::Psi1 => polygamma(1, x)?,
            Func::Psi2 => polygamma(2, x)?,
            Func::LnGamma => gamma_ln(x)?,
            Func::Zeta => zeta(x)?,
            Func::Ci => sici(x)?.ci,
            Func::Si => sici(x)?.si_upper,
            Func::SiLower => sici(x)?.si_lower,
            Func::Bernoulli2k => bernoulli_even(index()?, Convention::Modern)?,
            Func::Bernoulli2kZeta => bernoulli_even_via_zeta(index()?)?,
        })
    }

    /// Rounding-level error of one evaluation.
    fn roundoff(self, v: f64) -> f64 {
        match self {
            Func::Ci | Func::Si | Func::SiLower => 8.0 * EPS * (v.abs() + 1.0),
            Func::Bernoulli2kZeta => 64.0 * EPS * v.abs(),
            Func::Psi | Func::Psi1 | Func::Psi2 | Func::LnGamma | Func::Zeta => 16.0 * EPS * v.abs(),
            _ => 2.0 * EPS * v.abs(),
        }
    }
}

/// Closed-form expression over constants, parameters and special functions.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Ratio(i64, i64),
    Pi,
    EulerGamma,
    Ln2,
    Param(&'static str),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Powi(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

pub fn num(x: f64) -> Expr {
    Expr::Num(x)
}

pub fn ratio(p: i64, q: i64) -> Expr {
    Expr::Ratio(p, q)
}

pub fn pi() -> Expr {
    Expr::Pi
}

pub fn euler_gamma() -> Expr {
    Expr::EulerGamma
}

pub fn ln2() -> Expr {
    Expr::Ln2
}

pub fn param(name: &'static str) -> Expr {
    Expr::Param(name)
}

pub fn call(f: Func, x: Expr) -> Expr {
    Expr::Call(f, Box::new(x))
}

macro_rules! unary {
    ($($name:ident => $f:ident),* $(,)?) => {
        $(pub fn $name(x: Expr) -> Expr { call(Func::$f, x) })*
    };
}

unary!(
    ln => Ln, sqrt => Sqrt, sin => Sin, cos => Cos, tan => Tan, tanh => Tanh,
    psi => Psi, psi1 => Psi1, psi2 => Psi2, lngamma => LnGamma, zeta_of => Zeta,
    ci => Ci, si_upper => Si, si_lower => SiLower,
);

impl Expr {
    pub fn powi(self, n: i32) -> Expr {
        Expr::Powi(Box::new(self), n)
    }

    /// Value and a first-order propagated rounding error.
    pub fn eval(&self, params: &Params) -> Result<Estimate, CatalogError> {
        let est = |value: f64, error: f64| Estimate { value, error };
        Ok(match self {
            Expr::Num(x) => est(*x, 0.0),
            Expr::Ratio(p, q) => {
                let v = *p as f64 / *q as f64;
                est(v, 0.5 * EPS * v.abs())
            }
            Expr::Pi => est(PI, 0.5 * EPS * PI),
            Expr::EulerGamma => est(EULER_GAMMA, 0.5 * EPS * EULER_GAMMA),
            Expr::Ln2 => est(LN_2, 0.5 * EPS * LN_2),
            Expr::Param(name) => match params.get(*name) {
                Some(&v) => est(v, 0.0),
                None => return Err(CatalogError::MissingParam(name.to_string())),
            },
            Expr::Neg(x) => {
                let x = x.eval(params)?;
                est(-x.value, x.error)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (a_, b_) = (a.eval(params)?, b.eval(params)?);
                let v = if matches!(self, Expr::Add(..)) {
                    a_.value + b_.value
                } else {
                    a_.value - b_.value
                };
                est(v, a_.error + b_.error + 0.5 * EPS * v.abs())
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.eval(params)?, b.eval(params)?);
                let v = a.value * b.value;
                est(v, a.error * b.value.abs() + b.error * a.value.abs() + 0.5 * EPS * v.abs())
            }
            Expr::Div(a, b) => {
                let (a, b) = (a.eval(params)?, b.eval(params)?);
                if b.value == 0.0 {
                    return Err(CatalogError::OutOfDomain(format!("division by zero in {self}")));
                }
                let v = a.value / b.value;
                est(v, (a.error + v.abs() * b.error) / b.value.abs() + 0.5 * EPS * v.abs())
            }
            Expr::Powi(x, n) => {
                let x = x.eval(params)?;
                let v = x.value.powi(*n);
                let nf = *n as f64;
                let dv = if x.value == 0.0 {
                    0.0
                } else {
                    (nf * v / x.value).abs()
                };
                est(v, dv * x.error + nf.abs() * EPS * v.abs())
            }
            Expr::Call(f, x) => {
                let x = x.eval(params)?;
                let v = f.apply(x.value)?;
                let mut err = f.roundoff(v);
                if x.error > 0.0 && !f.indexed() {
                    let h = 1e-5 * x.value.abs().max(1e-3);
                    let d = (f.apply(x.value + h)? - f.apply(x.value - h)?) / (2.0 * h);
                    err += d.abs() * x.error;
                }
                est(v, err)
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Ratio(..) => 2,
            Expr::Num(x) if *x < 0.0 => 3,
            _ => 4,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Ratio(p, q) => write!(f, "{p}/{q}"),
            Expr::Pi => f.write_str("pi"),
            Expr::EulerGamma => f.write_str("gamma"),
            Expr::Ln2 => f.write_str("ln2"),
            Expr::Param(name) => f.write_str(name),
            Expr::Neg(x) => {
                f.write_str("-")?;
                x.fmt_child(f, 3)
            }
            Expr::Add(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_child(f, 2)
            }
            Expr::Sub(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" - ")?;
                b.fmt_child(f, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_child(f, 2)?;
                f.write_str("*")?;
                b.fmt_child(f, 3)
            }
            Expr::Div(a, b) => {
                a.fmt_child(f, 2)?;
                f.write_str("/")?;
                b.fmt_child(f, 4)
            }
            Expr::Powi(x, n) => {
                x.fmt_child(f, 4)?;
                write!(f, "^{n}")
            }
            Expr::Call(func, x) => write!(f, "{}({x})", func.name()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl $trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
        impl $trait<f64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: f64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(Expr::Num(rhs)))
            }
        }
        impl $trait<Expr> for f64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(Expr::Num(self)), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64) -> Params {
        Params::from([("a".to_string(), a)])
    }

    #[test]
    fn arithmetic_and_display() {
        let e = pi() / (2.0 * param("a"));
        assert_eq!(e.to_string(), "pi/(2*a)");
        assert!((e.eval(&p(2.0)).unwrap().value - PI / 4.0).abs() < 1e-16);
        let e = ratio(1, 4) - 1.0 / pi().powi(2);
        assert_eq!(e.to_string(), "1/4 - 1/pi^2");
        let e = -(psi1(param("a") / (2.0 * pi())) / (4.0 * param("a") * pi()));
        assert_eq!(e.to_string(), "-(psi1(a/(2*pi))/(4*a*pi))");
    }

    #[test]
    fn polygamma_closed_form_at_pi() {
        let a = param("a");
        let e = -(psi1(a.clone() / (2.0 * pi())) / (4.0 * a.clone() * pi()))
            + psi1(a.clone() / pi()) / (a * pi());
        let v = e.eval(&p(PI)).unwrap();
        assert!((v.value - 1.0 / 24.0).abs() < 1e-15);
        assert!(v.error < 1e-14 && v.error > 0.0);
    }

    #[test]
    fn missing_param_and_domain() {
        assert!(matches!(param("q").eval(&p(1.0)), Err(CatalogError::MissingParam(_))));
        assert!(ln(num(-1.0)).eval(&Params::new()).is_err());
        assert!(call(Func::Bernoulli2k, num(1.5)).eval(&Params::new()).is_err());
        assert!((call(Func::Bernoulli2k, num(1.0)).eval(&Params::new()).unwrap().value - 1.0 / 6.0).abs() < 1e-17);
    }

    #[test]
    fn error_propagates_through_functions() {
        let e = ln(num(1.0) + pi() * 1e10);
        let v = e.eval(&Params::new()).unwrap();
        assert!(v.error >= 0.5 * EPS);
    }
}
