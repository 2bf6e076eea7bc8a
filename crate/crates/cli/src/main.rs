mod render;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use logkernel::series::{sum, Mode, SeriesSpec, TermId};
use logkernel::specfun::{self, Convention};
use logkernel::verify::{self, ConventionChoice, HuntConfig, SuiteConfig, Verdict};
use std::f64::consts::PI;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "logkernel", version, about = "Verify definite integrals with the kernel 1/(a^2 + ln^2 x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities: ids, ranges (main-01..main-19) and globs (appendix-*)
    Verify {
        #[arg(long, default_value = "")]
        ids: String,
        /// Comma-separated a-grid; accepts numbers and forms like pi, 2pi, pi/2
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value_t = verify::DEFAULT_TOL)]
        tol: f64,
        /// Bernoulli convention for convention-dependent sums
        #[arg(long, default_value = "modern")]
        convention: String,
        /// Record wall-clock time per row (makes output non-reproducible)
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Adjudicate the appendix-table entries
    Hunt {
        #[arg(long, default_value = "both")]
        convention: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate a special function
    Eval {
        #[arg(long = "fn", value_name = "NAME")]
        function: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "modern")]
        convention: String,
        #[command(flatten)]
        output: Output,
    },
    /// Sum a registered series
    Sum {
        #[arg(long)]
        series: String,
        #[arg(long)]
        mode: String,
        #[arg(long)]
        terms: Option<u64>,
        /// Series parameter, NAME=VALUE (repeatable)
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value = "modern")]
        convention: String,
        #[command(flatten)]
        output: Output,
    },
    /// Describe every registered identity
    Registry {
        #[command(flatten)]
        output: Output,
    },
}

const FUNCTIONS: &[&str] = &[
    "Si", "si", "Ci", "lngamma", "digamma", "trigamma", "tetragamma", "zeta", "dilog", "bernoulli",
    "kummer_lngamma",
];

/// Parses `2.5`, `pi`, `2pi`, `3*pi`, `pi/2`, `3pi/4`.
fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().with_context(|| format!("bad number '{s}'"))?),
        None => (s, 1.0),
    };
    let coef = num
        .strip_suffix("pi")
        .map(|c| c.trim().trim_end_matches('*').trim())
        .ok_or_else(|| anyhow!("bad number '{s}'"))?;
    let c = if coef.is_empty() {
        1.0
    } else {
        coef.parse::<f64>().with_context(|| format!("bad number '{s}'"))?
    };
    Ok(c * PI / den)
}

fn parse_grid(s: &str) -> Result<Vec<f64>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_real).collect()
}

fn parse_convention(s: &str) -> Result<Convention> {
    match s {
        "modern" => Ok(Convention::Modern),
        "archaic" => Ok(Convention::Archaic),
        other => bail!("unknown convention '{other}'; valid: modern, archaic"),
    }
}

fn parse_choice(s: &str) -> Result<ConventionChoice> {
    s.parse().map_err(|e: String| anyhow!(e))
}

fn eval_function(name: &str, x: f64, convention: Convention) -> Result<f64> {
    let v = match name {
        "Si" => specfun::si_upper(x)?,
        "si" => specfun::si_lower(x)?,
        "Ci" => specfun::ci(x)?,
        "lngamma" => specfun::gamma_ln(x)?,
        "digamma" => specfun::digamma(x)?,
        "trigamma" => specfun::polygamma(1, x)?,
        "tetragamma" => specfun::polygamma(2, x)?,
        "zeta" => specfun::zeta(x)?,
        "dilog" => specfun::dilog(x)?,
        "bernoulli" => {
            if !(x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64) {
                bail!("bernoulli needs a non-negative integer index, got {x}");
            }
            specfun::bernoulli(x as u32, convention)?
        }
        "kummer_lngamma" => specfun::kummer_ln_gamma(x, 2000)?,
        other => bail!("unknown function '{other}'; valid: {}", FUNCTIONS.join(", ")),
    };
    Ok(v)
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn exit_for(any_fail: bool) -> ExitCode {
    if any_fail {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            ids,
            a,
            tol,
            convention,
            timing,
            output,
        } => {
            let ids = verify::select_ids(&ids)?;
            let conventions = parse_choice(&convention)?.conventions();
            let mut cfg = SuiteConfig {
                tol,
                conventions,
                timing,
                ..SuiteConfig::default()
            };
            if let Some(a) = a {
                cfg.a_grid = parse_grid(&a)?;
            }
            let rows = verify::run_suite(&ids, &cfg)?;
            let text = match output.format {
                Format::Table => render::results_table(&rows),
                Format::Json => render::json(&rows)?,
                Format::Csv => render::results_csv(&rows)?,
            };
            emit(&output, &text)?;
            Ok(exit_for(verify::any_failed(&rows)))
        }
        Command::Hunt {
            convention,
            a,
            tol,
            output,
        } => {
            let mut cfg = HuntConfig {
                tol,
                ..HuntConfig::default()
            };
            if let Some(a) = a {
                cfg.a_grid = parse_grid(&a)?;
            }
            let report = verify::hunt_with(parse_choice(&convention)?, &cfg)?;
            let text = match output.format {
                Format::Table => render::hunt_table(&report),
                Format::Json => render::json(&report)?,
                Format::Csv => render::hunt_csv(&report)?,
            };
            emit(&output, &text)?;
            let failed = report
                .entries
                .iter()
                .flat_map(|e| e.points.iter().flat_map(|p| p.checks.iter()))
                .any(|c| c.verdict == Verdict::Fail);
            Ok(exit_for(failed))
        }
        Command::Eval {
            function,
            x,
            convention,
            output,
        } => {
            let xv = parse_real(&x)?;
            let value = eval_function(&function, xv, parse_convention(&convention)?)?;
            emit(&output, &render::eval(output.format, &function, xv, value)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sum {
            series,
            mode,
            terms,
            params,
            tol,
            convention,
            output,
        } => {
            let term: TermId = series.parse().map_err(|e: String| anyhow!(e))?;
            let mode: Mode = mode.parse().map_err(|e: String| anyhow!(e))?;
            let mut spec = SeriesSpec::new(term, mode).tol(tol).convention(parse_convention(&convention)?);
            if let Some(n) = terms {
                spec = spec.max_terms(n);
            }
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| anyhow!("--param expects NAME=VALUE, got '{p}'"))?;
                spec = spec.param(k.trim(), parse_real(v)?);
            }
            let r = sum(&spec)?;
            emit(&output, &render::sum(output.format, term, &r)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Registry { output } => {
            let text = match output.format {
                Format::Json => logkernel::catalog::export_json() + "\n",
                Format::Table => render::registry_table(),
                Format::Csv => render::registry_csv()?,
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
