use super::{zeta, Result, SpecFunError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Largest k for which B₂ₖ is tabulated.
pub const K_MAX: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// B₀ = 1, B₁ = +1/2, B₂ = 1/6, B₃ = 0, B₄ = −1/30, …
    Modern,
    /// Older table notation: Bₙ stands for |B₂ₙ| in the modern numbering.
    Archaic,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Modern => "modern",
            Convention::Archaic => "archaic",
        }
    }
}

struct Table {
    exact: Vec<BigRational>,
    values: Vec<f64>,
}

/// Bₘ = Σ_{k=0}^{m} 1/(k+1) Σ_{j=0}^{k} C(k,j) (−1)ʲ (j+1)ᵐ in exact arithmetic, m = 0..2·K_MAX.
fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let max_m = 2 * K_MAX as usize;
        let mut binom = vec![vec![BigInt::one()]];
        for k in 1..=max_m {
            let prev = &binom[k - 1];
            let mut row = vec![BigInt::one(); k + 1];
            for j in 1..k {
                row[j] = &prev[j - 1] + &prev[j];
            }
            binom.push(row);
        }
        let mut powers: Vec<BigInt> = vec![BigInt::one(); max_m + 1];
        let mut exact = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            if m > 0 {
                for (j, p) in powers.iter_mut().enumerate() {
                    *p *= BigInt::from(j + 1);
                }
            }
            let mut b = BigRational::zero();
            #[allow(clippy::needless_range_loop)]
            for k in 0..=m {
                let mut inner = BigInt::zero();
                for j in 0..=k {
                    let term = &binom[k][j] * &powers[j];
                    if j % 2 == 0 {
                        inner += term;
                    } else {
                        inner -= term;
                    }
                }
                b += BigRational::new(inner, BigInt::from(k + 1));
            }
            exact.push(b);
        }
        let values = exact.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
        Table { exact, values }
    })
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 || k > K_MAX {
        Err(SpecFunError::Overflow {
            index: k,
            limit: K_MAX,
        })
    } else {
        Ok(())
    }
}

/// Modern B₂ₖ, or the archaic Bₖ = |B₂ₖ|, for 1 ≤ k ≤ K_MAX.
pub fn bernoulli_even(k: u32, convention: Convention) -> Result<f64> {
    check_k(k)?;
    let v = table().values[2 * k as usize];
    Ok(match convention {
        Convention::Modern => v,
        Convention::Archaic => v.abs(),
    })
}

/// Exact modern B₂ₖ as a reduced fraction.
pub fn bernoulli_even_exact(k: u32) -> Result<BigRational> {
    check_k(k)?;
    Ok(table().exact[2 * k as usize].clone())
}

/// B₂ₖ = (−1)^{k+1} 2 (2k)! ζ(2k) / (2π)^{2k}, the independent zeta route.
pub fn bernoulli_even_via_zeta(k: u32) -> Result<f64> {
    check_k(k)?;
    let two_k = 2 * k;
    // (2k)!/(2π)^{2k} built as a running product to stay in range.
    let mut ratio = 1.0;
    for j in 1..=two_k {
        ratio *= j as f64 / (2.0 * PI);
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * 2.0 * ratio * zeta(two_k as f64)?)
}

/// Bernoulli number Bₙ at index n in the given convention.
///
/// Modern: n = 0..2·K_MAX with B₁ = +1/2 and Bₙ = 0 for odd n > 1.
/// Archaic: n = 1..K_MAX with Bₙ = |B₂ₙ|.
pub fn bernoulli(n: u32, convention: Convention) -> Result<f64> {
    match convention {
        Convention::Modern => {
            if n > 2 * K_MAX {
                return Err(SpecFunError::Overflow {
                    index: n,
                    limit: 2 * K_MAX,
                });
            }
            Ok(table().values[n as usize])
        }
        Convention::Archaic => bernoulli_even(n, Convention::Archaic),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn frac(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn first_values_exact() {
        assert_eq!(bernoulli_even_exact(1).unwrap(), frac(1, 6));
        assert_eq!(bernoulli_even_exact(2).unwrap(), frac(-1, 30));
        assert_eq!(bernoulli_even_exact(3).unwrap(), frac(1, 42));
        assert_eq!(bernoulli_even_exact(6).unwrap(), frac(-691, 2730));
        assert_eq!(bernoulli_even_exact(8).unwrap(), frac(-3617, 510));
    }

    #[test]
    fn low_indices_in_modern_convention() {
        assert_eq!(bernoulli(0, Convention::Modern).unwrap(), 1.0);
        assert_eq!(bernoulli(1, Convention::Modern).unwrap(), 0.5);
        for n in (3..80).step_by(2) {
            assert_eq!(bernoulli(n, Convention::Modern).unwrap(), 0.0, "n={n}");
        }
    }

    #[test]
    fn archaic_is_absolute_modern_even() {
        for k in 1..=K_MAX {
            let m = bernoulli_even(k, Convention::Modern).unwrap();
            assert_eq!(bernoulli(k, Convention::Archaic).unwrap(), m.abs());
            assert_eq!(bernoulli_even(k, Convention::Archaic).unwrap(), m.abs());
        }
    }

    #[test]
    fn zeta_route_agrees() {
        for k in 1..=8 {
            let a = bernoulli_even(k, Convention::Modern).unwrap();
            let b = bernoulli_even_via_zeta(k).unwrap();
            assert!(((a - b) / a).abs() <= 1e-12, "k={k}");
        }
        for k in 9..=K_MAX {
            let a = bernoulli_even(k, Convention::Modern).unwrap();
            let b = bernoulli_even_via_zeta(k).unwrap();
            assert!(((a - b) / a).abs() <= 1e-10, "k={k}");
        }
    }

    #[test]
    fn signs_alternate() {
        for k in 1..=K_MAX {
            let b = bernoulli_even(k, Convention::Modern).unwrap();
            assert_eq!(b > 0.0, k % 2 == 1, "k={k}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            bernoulli_even(0, Convention::Modern),
            Err(SpecFunError::Overflow { .. })
        ));
        assert!(matches!(
            bernoulli_even(K_MAX + 1, Convention::Modern),
            Err(SpecFunError::Overflow { .. })
        ));
        assert!(bernoulli(2 * K_MAX + 1, Convention::Modern).is_err());
        assert!(bernoulli(0, Convention::Archaic).is_err());
    }
}
