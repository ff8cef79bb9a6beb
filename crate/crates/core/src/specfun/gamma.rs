use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::exact::{int, ExactValue};
use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::NonpositiveArgument(x));
    }
    Ok(libm::lgamma(x))
}

/// `ln Γ(x)` without argument checks, for callers that already validated.
pub(crate) fn lgamma(x: f64) -> f64 {
    libm::lgamma(x)
}

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `Γ(x)` exactly for positive integer or half-integer `x`.
pub fn gamma_exact(x: &BigRational) -> Result<ExactValue> {
    if !x.is_positive() {
        return Err(Error::NonpositiveArgument(x.to_f64().unwrap_or(f64::NAN)));
    }
    let two = BigInt::from(2);
    if x.is_integer() {
        let m = x.to_integer().to_u64().ok_or_else(|| Error::UnsupportedArgument(x.to_string()))?;
        return Ok(ExactValue::rational(BigRational::from_integer(factorial(m - 1))));
    }
    if *x.denom() == two {
        // Γ(m + 1/2) = (2m)! / (4^m m!) · √π
        let m = ((x.numer() - BigInt::one()) / &two)
            .to_u64()
            .ok_or_else(|| Error::UnsupportedArgument(x.to_string()))?;
        let num = factorial(2 * m);
        let den = BigInt::from(4).pow(m as u32) * factorial(m);
        return Ok(ExactValue::new(BigRational::new(num, den), 1));
    }
    Err(Error::UnsupportedArgument(format!(
        "Γ({x}) needs an integer or half-integer argument"
    )))
}

/// `Γ(a)/Γ(b)` exactly; a plain product when `a - b` is an integer.
pub fn gamma_ratio_exact(a: &BigRational, b: &BigRational) -> Result<ExactValue> {
    let diff = a - b;
    if diff.is_integer() {
        if let Some(m) = diff.to_integer().to_i64() {
            if m >= 0 {
                return Ok(ExactValue::rational(pochhammer_exact(b, m as u64)));
            }
            return Ok(ExactValue::rational(pochhammer_exact(a, (-m) as u64).recip()));
        }
    }
    Ok(gamma_exact(a)? / gamma_exact(b)?)
}

/// Rising factorial `(a)_j` in exact arithmetic.
pub fn pochhammer_exact(a: &BigRational, j: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    let one = BigRational::one();
    for _ in 0..j {
        if x.is_zero() {
            return BigRational::zero();
        }
        acc *= &x;
        x += &one;
    }
    acc
}

/// Rising factorial `(a)_j` in floating point.
pub fn pochhammer(a: f64, j: u64) -> f64 {
    let mut acc = 1.0;
    for i in 0..j {
        acc *= a + i as f64;
    }
    acc
}

/// Binomial coefficient `C(k, j)` as a rational.
pub fn binomial_exact(k: u64, j: u64) -> BigRational {
    if j > k {
        return BigRational::zero();
    }
    BigRational::new(factorial(k), factorial(j) * factorial(k - j))
}

/// `x! ` as a rational, convenience for formulas written in factorials.
pub fn factorial_rational(m: u64) -> BigRational {
    BigRational::from_integer(factorial(m))
}

/// `Γ(x)` for half-integer `x` given as twice its value.
pub fn gamma_exact_half(twice: i64) -> Result<ExactValue> {
    gamma_exact(&BigRational::new(BigInt::from(twice), BigInt::from(2)))
}

/// Integer-valued convenience wrapper around [`gamma_exact`].
pub fn gamma_exact_int(m: i64) -> Result<ExactValue> {
    gamma_exact(&int(m))
}
