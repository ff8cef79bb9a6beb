//! Terminating generalized hypergeometric series at unit argument,
//! `Σ_{j=0..k} Π(a_i)_j / Π(b_i)_j / j!`, with a leading upper parameter `-k`.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::exact::{int, ratio_to_f64};
use super::sum::{chained_rel_err, CompensatedSum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Rational(BigRational),
    Real(f64),
}

impl Param {
    pub fn to_f64(&self) -> f64 {
        match self {
            Param::Rational(r) => ratio_to_f64(r),
            Param::Real(x) => *x,
        }
    }

    fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Param::Rational(r) => Some(r),
            Param::Real(_) => None,
        }
    }

    /// `Some(m)` when the parameter equals the non-positive integer `-m`.
    fn nonpositive_integer(&self) -> Option<u64> {
        match self {
            Param::Rational(r) if r.is_integer() && *r <= BigRational::zero() => (-r.to_integer()).to_u64(),
            Param::Real(x) if x.fract() == 0.0 && *x <= 0.0 => Some((-x) as u64),
            _ => None,
        }
    }
}

impl From<BigRational> for Param {
    fn from(r: BigRational) -> Self {
        Param::Rational(r)
    }
}

impl From<f64> for Param {
    fn from(x: f64) -> Self {
        Param::Real(x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypSumSpec {
    pub top: Vec<Param>,
    pub bottom: Vec<Param>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatSum {
    pub value: f64,
    pub error_bound: f64,
}

impl FloatSum {
    pub fn relative_bound(&self) -> f64 {
        if self.value == 0.0 {
            if self.error_bound == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.error_bound / self.value.abs()
        }
    }
}

impl HypSumSpec {
    pub fn new(top: Vec<Param>, bottom: Vec<Param>) -> Self {
        HypSumSpec { top, bottom }
    }

    /// Degree `k` of the leading parameter `-k`.
    pub fn degree(&self) -> Result<u64> {
        self.top.first().and_then(Param::nonpositive_integer).ok_or(Error::NonTerminating)
    }

    /// Number of terms `k + 1`.
    pub fn terms(&self) -> Result<u64> {
        Ok(self.degree()? + 1)
    }

    /// Last index whose term can be nonzero: the smallest `m` over upper
    /// parameters equal to `-m`.
    fn last_index(&self) -> Result<u64> {
        let k = self.degree()?;
        Ok(self.top.iter().filter_map(Param::nonpositive_integer).fold(k, u64::min))
    }

    fn check_poles(&self) -> Result<u64> {
        let last = self.last_index()?;
        for (index, b) in self.bottom.iter().enumerate() {
            if let Some(m) = b.nonpositive_integer() {
                if m < last {
                    let value = match b {
                        Param::Rational(r) => r.to_string(),
                        Param::Real(x) => x.to_string(),
                    };
                    return Err(Error::PoleInBottomParameter { index, value });
                }
            }
        }
        Ok(last)
    }
}

/// Exact rational sum; every parameter must be rational.
pub fn hyp_sum_exact(spec: &HypSumSpec) -> Result<BigRational> {
    let last = spec.check_poles()?;
    let top: Vec<&BigRational> = spec.top.iter().map(Param::as_rational).collect::<Option<_>>().ok_or_else(not_rational)?;
    let bottom: Vec<&BigRational> = spec.bottom.iter().map(Param::as_rational).collect::<Option<_>>().ok_or_else(not_rational)?;

    let mut term = BigRational::one();
    let mut total = BigRational::one();
    for j in 0..last {
        let jr = int(j as i64);
        let mut num = BigRational::one();
        for a in &top {
            num *= *a + &jr;
        }
        let mut den = &jr + BigRational::one();
        for b in &bottom {
            den *= *b + &jr;
        }
        term = term * num / den;
        if term.is_zero() {
            break;
        }
        total += &term;
    }
    Ok(total)
}

fn not_rational() -> Error {
    Error::ExactUnavailable("hypergeometric parameters must be rational in exact mode".into())
}

/// Floating-point sum with compensated accumulation and an error bound.
pub fn hyp_sum_float(spec: &HypSumSpec) -> Result<FloatSum> {
    let last = spec.check_poles()?;
    let top: Vec<f64> = spec.top.iter().map(Param::to_f64).collect();
    let bottom: Vec<f64> = spec.bottom.iter().map(Param::to_f64).collect();
    let ops = 2 * (top.len() + bottom.len() + 1);

    let mut acc = CompensatedSum::new();
    let mut term = 1.0f64;
    acc.add(term, 0.0);
    for j in 0..last {
        let jf = j as f64;
        let mut ratio = 1.0 / (jf + 1.0);
        for a in &top {
            ratio *= a + jf;
        }
        for b in &bottom {
            ratio /= b + jf;
        }
        term *= ratio;
        if !term.is_finite() {
            return Err(Error::CancellationOverflow { relative_bound: f64::INFINITY });
        }
        if term == 0.0 {
            break;
        }
        acc.add(term, chained_rel_err(j as usize + 1, ops));
    }
    Ok(FloatSum {
        value: acc.value(),
        error_bound: acc.error_bound(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::exact::rat;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Param {
        Param::Rational(rat(n, d))
    }

    #[test]
    fn single_term() {
        let spec = HypSumSpec::new(vec![r(0, 1), r(7, 2), r(-5, 1)], vec![r(3, 1), r(1, 2)]);
        assert_eq!(hyp_sum_exact(&spec).unwrap(), rat(1, 1));
        assert_eq!(hyp_sum_float(&spec).unwrap().value, 1.0);
    }

    #[test]
    fn three_f_two_example() {
        // 3F2(-1, -1, 2; 2, 1; 1) = 1 + (-1)(-1)(2)/(2·1·1) = 2
        let spec = HypSumSpec::new(vec![r(-1, 1), r(-1, 1), r(2, 1)], vec![r(2, 1), r(1, 1)]);
        assert_eq!(hyp_sum_exact(&spec).unwrap(), rat(2, 1));
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1(-k, b; c; 1) = (c-b)_k / (c)_k
        use crate::specfun::gamma::pochhammer_exact;
        for k in 0..12 {
            let (b, c) = (rat(3, 2), rat(7, 2));
            let spec = HypSumSpec::new(vec![r(-k, 1), Param::Rational(b.clone())], vec![Param::Rational(c.clone())]);
            let expected = pochhammer_exact(&(&c - &b), k as u64) / pochhammer_exact(&c, k as u64);
            assert_eq!(hyp_sum_exact(&spec).unwrap(), expected);
        }
    }

    #[test]
    fn errors() {
        let spec = HypSumSpec::new(vec![r(1, 2)], vec![]);
        assert_eq!(hyp_sum_exact(&spec), Err(Error::NonTerminating));
        let spec = HypSumSpec::new(vec![r(-4, 1)], vec![r(-2, 1)]);
        assert!(matches!(hyp_sum_exact(&spec), Err(Error::PoleInBottomParameter { index: 0, .. })));
        // Termination through another upper parameter before the pole is fine.
        let spec = HypSumSpec::new(vec![r(-4, 1), r(-1, 1)], vec![r(-2, 1)]);
        assert_eq!(hyp_sum_exact(&spec).unwrap(), rat(1, 1) + rat(-4 * -1, -2));
        let spec = HypSumSpec::new(vec![r(-2, 1), Param::Real(0.3)], vec![r(1, 1)]);
        assert!(matches!(hyp_sum_exact(&spec), Err(Error::ExactUnavailable(_))));
    }

    fn half(twice: i64) -> Param {
        Param::Rational(BigRational::new(BigInt::from(twice), BigInt::from(2)))
    }

    proptest! {
        #[test]
        fn float_within_bound_of_exact(
            k in 0i64..=40,
            tops in proptest::collection::vec(-30i64..30, 0..4),
            bottoms in proptest::collection::vec(1i64..40, 0..4),
        ) {
            let mut top = vec![r(-k, 1)];
            top.extend(tops.iter().map(|&t| half(t)));
            let bottom: Vec<Param> = bottoms.iter().map(|&b| half(b)).collect();
            let spec = HypSumSpec::new(top, bottom);
            let exact = ratio_to_f64(&hyp_sum_exact(&spec).unwrap());
            let float = hyp_sum_float(&spec).unwrap();
            let slack = 4.0 * f64::EPSILON * exact.abs();
            prop_assert!((float.value - exact).abs() <= float.error_bound + slack,
                "exact {exact} float {} bound {}", float.value, float.error_bound);
        }
    }
}
