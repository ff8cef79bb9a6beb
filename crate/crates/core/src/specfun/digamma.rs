use num_rational::BigRational;
use num_traits::Zero;

use super::exact::{ratio_to_f64, rat};
use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Digamma `ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::NonpositiveArgument(x));
    }
    // Upward recurrence into the asymptotic region, then the Bernoulli series.
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let r = 1.0 / (y * y);
    let series = r
        * (1.0 / 12.0
            - r * (1.0 / 120.0
                - r * (1.0 / 252.0 - r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * (691.0 / 32760.0))))));
    Ok(y.ln() - 0.5 / y - series - shift)
}

/// `ψ(n + 1/2) = rational - γ - 2 ln 2` with the rational part kept exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDigamma {
    pub rational: BigRational,
}

impl HalfDigamma {
    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rational) - EULER_GAMMA - 2.0 * std::f64::consts::LN_2
    }
}

/// Exact decomposition of `ψ(n + 1/2)`: the rational part is `2 Σ_{k=1..n} 1/(2k-1)`.
pub fn digamma_half_exact(n: u32) -> HalfDigamma {
    let rational = (1..=n as i64).fold(BigRational::zero(), |acc, k| acc + rat(2, 2 * k - 1));
    HalfDigamma { rational }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reference_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        let psi_half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - psi_half).abs() < 1e-14);
        // ψ(10) = H_9 - γ
        let h9: f64 = (1..=9).map(|k| 1.0 / k as f64).sum();
        assert!((digamma(10.0).unwrap() - (h9 - EULER_GAMMA)).abs() < 1e-14);
        assert!(digamma(0.0).is_err());
    }

    #[test]
    fn half_integer_decomposition() {
        assert_eq!(digamma_half_exact(1).rational, rat(2, 1));
        assert_eq!(digamma_half_exact(2).rational, rat(8, 3));
        assert_eq!(digamma_half_exact(0).rational, rat(0, 1));
        for n in 0..40u32 {
            let exact = digamma_half_exact(n).to_f64();
            let float = digamma(n as f64 + 0.5).unwrap();
            assert!((exact - float).abs() <= 1e-13 * float.abs().max(1.0), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn recurrence(x in 0.5f64..100.0) {
            let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            prop_assert!((d - 1.0 / x).abs() < 1e-12);
        }
    }
}
