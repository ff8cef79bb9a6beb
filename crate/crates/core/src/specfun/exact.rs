use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::states::HalfInt;

/// Exact number `coeff · π^(pi_pow2 / 2)` with a rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactValue {
    coeff: BigRational,
    pi_pow2: i32,
}

impl ExactValue {
    pub fn new(coeff: BigRational, pi_pow2: i32) -> Self {
        if coeff.is_zero() {
            ExactValue { coeff, pi_pow2: 0 }
        } else {
            ExactValue { coeff, pi_pow2 }
        }
    }

    pub fn rational(coeff: BigRational) -> Self {
        ExactValue::new(coeff, 0)
    }

    pub fn from_integer(v: i64) -> Self {
        ExactValue::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        ExactValue::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        ExactValue::from_integer(0)
    }

    pub fn one() -> Self {
        ExactValue::from_integer(1)
    }

    /// `π^(pi_pow2 / 2)`.
    pub fn pi_power(pi_pow2: i32) -> Self {
        ExactValue::new(BigRational::one(), pi_pow2)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn pi_pow2(&self) -> i32 {
        self.pi_pow2
    }

    pub fn pi_pow(&self) -> HalfInt {
        HalfInt::from_twice(self.pi_pow2 as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        let c = ratio_to_f64(&self.coeff);
        if self.pi_pow2 == 0 {
            c
        } else {
            c * std::f64::consts::PI.powf(self.pi_pow2 as f64 / 2.0)
        }
    }

    /// Sum of two values with the same power of π; `None` otherwise.
    pub fn checked_add(&self, other: &ExactValue) -> Option<ExactValue> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.pi_pow2 == other.pi_pow2)
            .then(|| ExactValue::new(&self.coeff + &other.coeff, self.pi_pow2))
    }

    pub fn checked_sub(&self, other: &ExactValue) -> Option<ExactValue> {
        self.checked_add(&-other.clone())
    }

    pub fn powi(&self, e: i32) -> ExactValue {
        if e >= 0 {
            ExactValue::new(num_traits::pow(self.coeff.clone(), e as usize), self.pi_pow2 * e)
        } else {
            ExactValue::new(num_traits::pow(self.coeff.recip(), (-e) as usize), self.pi_pow2 * e)
        }
    }

    pub fn recip(&self) -> ExactValue {
        ExactValue::new(self.coeff.recip(), -self.pi_pow2)
    }

    /// Renders the coefficient as `p/q` (or `p` when integral).
    pub fn coeff_string(&self) -> String {
        rational_string(&self.coeff)
    }

    /// Renders the π exponent as `m/2` (or `m` when integral).
    pub fn pi_pow_string(&self) -> String {
        self.pi_pow().to_string()
    }

    pub fn parse(coeff: &str, pi_pow: &str) -> Option<ExactValue> {
        let coeff = parse_rational(coeff)?;
        let pp = parse_rational(pi_pow)?;
        let twice = &pp * BigRational::from_integer(BigInt::from(2));
        if !twice.is_integer() {
            return None;
        }
        Some(ExactValue::new(coeff, twice.to_integer().to_i32()?))
    }
}

impl From<BigRational> for ExactValue {
    fn from(r: BigRational) -> Self {
        ExactValue::rational(r)
    }
}

impl Mul for ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: ExactValue) -> ExactValue {
        ExactValue::new(self.coeff * rhs.coeff, self.pi_pow2 + rhs.pi_pow2)
    }
}

impl<'a> Mul<&'a ExactValue> for &'a ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: &ExactValue) -> ExactValue {
        ExactValue::new(&self.coeff * &rhs.coeff, self.pi_pow2 + rhs.pi_pow2)
    }
}

impl Mul<BigRational> for ExactValue {
    type Output = ExactValue;
    fn mul(self, rhs: BigRational) -> ExactValue {
        ExactValue::new(self.coeff * rhs, self.pi_pow2)
    }
}

impl Div for ExactValue {
    type Output = ExactValue;
    fn div(self, rhs: ExactValue) -> ExactValue {
        ExactValue::new(self.coeff / rhs.coeff, self.pi_pow2 - rhs.pi_pow2)
    }
}

impl Div<BigRational> for ExactValue {
    type Output = ExactValue;
    fn div(self, rhs: BigRational) -> ExactValue {
        ExactValue::new(self.coeff / rhs, self.pi_pow2)
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        ExactValue::new(-self.coeff, self.pi_pow2)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow2 {
            0 => write!(f, "{}", self.coeff_string()),
            2 => write!(f, "{}·π", self.coeff_string()),
            _ => write!(f, "{}·π^({})", self.coeff_string(), self.pi_pow_string()),
        }
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Correctly scaled conversion that survives numerators and denominators far
/// outside the `f64` range.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() && (v != 0.0 || r.is_zero()) {
            return v;
        }
    }
    let (num, den) = (r.numer(), r.denom());
    let shift = num.bits() as i64 - den.bits() as i64;
    let (n, d) = if shift > 0 {
        (num.clone(), den.clone() << (shift as u64))
    } else {
        (num.clone() << ((-shift) as u64), den.clone())
    };
    let scaled = BigRational::new(n, d).to_f64().unwrap_or(f64::NAN);
    scaled * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// Integer power of a rational.
pub fn rational_powi(r: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_canonical() {
        let a = ExactValue::new(int(0), 3);
        assert_eq!(a, ExactValue::zero());
        assert_eq!(a.pi_pow2(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = ExactValue::new(rat(16, 3), -2);
        let b = ExactValue::new(rat(3, 4), 1);
        assert_eq!(&a * &b, ExactValue::new(int(4), -1));
        assert_eq!(a.clone() / a.clone(), ExactValue::one());
        assert_eq!(a.checked_add(&b), None);
        assert_eq!(a.checked_add(&a), Some(ExactValue::new(rat(32, 3), -2)));
        assert_eq!(b.powi(-2), ExactValue::new(rat(16, 9), -2));
        assert!((a.to_f64() - 16.0 / (3.0 * std::f64::consts::PI)).abs() < 1e-15);
    }

    #[test]
    fn string_roundtrip() {
        let a = ExactValue::new(rat(-256, 15), -2);
        assert_eq!(a.coeff_string(), "-256/15");
        assert_eq!(a.pi_pow_string(), "-1");
        assert_eq!(ExactValue::parse(&a.coeff_string(), &a.pi_pow_string()), Some(a));
        let h = ExactValue::new(rat(1, 2), 1);
        assert_eq!(h.pi_pow_string(), "1/2");
        assert_eq!(ExactValue::parse("1/2", "1/2"), Some(h));
        assert_eq!(ExactValue::parse("1/0", "0"), None);
        assert_eq!(ExactValue::parse("1", "1/3"), None);
    }

    #[test]
    fn huge_ratio_conversion() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = BigRational::new(&big * BigInt::from(3), &big * BigInt::from(7));
        assert!((ratio_to_f64(&r) - 3.0 / 7.0).abs() < 1e-16);
        let r = BigRational::new(big.clone(), BigInt::from(1) + &big * BigInt::from(1_000_000));
        assert!((ratio_to_f64(&r) / 1e-6 - 1.0).abs() < 1e-14);
    }
}
