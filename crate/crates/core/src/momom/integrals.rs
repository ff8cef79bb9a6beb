//! Gegenbauer integrals behind `<p>` and `<p^{-1}>`:
//!
//! ```text
//! I = ∫_{-1}^{1} [C_k^{(ν)}(t)]² (1-t²)^ν dt,            <p>      = 𝒦' I
//! J = ∫_{-1}^{1} [C_k^{(ν)}(t)]² (1-t²)^{ν-1} (1+t)² dt, <p^{-1}> = 𝒦'' J
//! 𝒦 = 2^{2ν} η Γ(ν)² k! / (2π Γ(k+2ν)),  𝒦' = (Z/η) 𝒦,  𝒦'' = (η/Z) 𝒦
//! ```

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::oracle::gauss::gauss_rule;
use crate::oracle::poly::{gegenbauer, Family};
use crate::specfun::exact::{int, rat, rational_powi};
use crate::specfun::gamma::{factorial_rational, gamma_exact, pochhammer_exact};
use crate::specfun::ExactValue;
use crate::states::HydrogenicState;

#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerIntegrals {
    /// `I` by Gauss–Jacobi quadrature.
    pub i_value: f64,
    /// `J` by Gauss–Jacobi quadrature.
    pub j_value: f64,
    /// `I` from the power expansion of `C_k^{(ν)}` and Beta integrals.
    pub i_exact: ExactValue,
    /// `J` from the power expansion of `C_k^{(ν)}` and Beta integrals.
    pub j_exact: ExactValue,
    pub k_prime: ExactValue,
    pub k_double_prime: ExactValue,
}

impl GegenbauerIntegrals {
    pub fn mean_momentum(&self) -> f64 {
        self.k_prime.to_f64() * self.i_value
    }

    pub fn inverse_momentum(&self) -> f64 {
        self.k_double_prime.to_f64() * self.j_value
    }
}

pub fn gegenbauer_integrals(state: &HydrogenicState) -> Result<GegenbauerIntegrals> {
    let k = state.k() as usize;
    let nu_f = state.nu().to_f64();
    let c2 = |t: f64| {
        let c = gegenbauer(k, nu_f, t).unwrap_or(f64::NAN);
        c * c
    };
    let rule_i = gauss_rule(Family::Jacobi { a: nu_f, b: nu_f }, k + 2)?;
    let i_value = rule_i.log_mu0.exp() * rule_i.normalized_sum(c2);
    let rule_j = gauss_rule(Family::Jacobi { a: nu_f - 1.0, b: nu_f + 1.0 }, k + 2)?;
    let j_value = rule_j.log_mu0.exp() * rule_j.normalized_sum(c2);

    let nu = state.nu().to_rational();
    let eta = state.eta().to_rational();
    let z = state.charge_rational();
    let g_nu = gamma_exact(&nu)?;
    let kk = gamma_exact(&(int(k as i64) + &nu * int(2)))? * ExactValue::pi_power(2);
    let base = g_nu.clone() * g_nu / kk
        * (rational_powi(&int(2), state.nu().twice()) * &eta * factorial_rational(k as u64) / int(2));
    let k_prime = base.clone() * (&z / &eta);
    let k_double_prime = base * (&eta / &z);

    Ok(GegenbauerIntegrals {
        i_value,
        j_value,
        i_exact: gegenbauer_weighted_integral(state, false)?,
        j_exact: gegenbauer_weighted_integral(state, true)?,
        k_prime,
        k_double_prime,
    })
}

/// Coefficients `g_m` of `C_k^{(ν)}(t) = Σ_m g_m t^{k-2m}`.
fn gegenbauer_power_coefficients(k: u64, nu: &BigRational) -> Vec<BigRational> {
    (0..=k / 2)
        .map(|m| {
            let sign = if m % 2 == 0 { int(1) } else { int(-1) };
            sign * pochhammer_exact(nu, k - m) * rational_powi(&int(2), (k - 2 * m) as i64)
                / (factorial_rational(m) * factorial_rational(k - 2 * m))
        })
        .collect()
}

/// `I` (`with_one_plus_t = false`) or `J` exactly. Odd powers integrate to
/// zero, so `(1+t)²` reduces to `1+t²`; the even moments are
/// `∫ t^{2p} (1-t²)^μ dt = B(1/2, μ+1) (1/2)_p / (μ+3/2)_p`.
fn gegenbauer_weighted_integral(state: &HydrogenicState, with_one_plus_t: bool) -> Result<ExactValue> {
    let k = state.k() as u64;
    let nu = state.nu().to_rational();
    let mu = if with_one_plus_t { &nu - int(1) } else { nu.clone() };
    let g = gegenbauer_power_coefficients(k, &nu);
    let half = rat(1, 2);
    let shifted = &mu + rat(3, 2);
    let moment = |p: u64| pochhammer_exact(&half, p) / pochhammer_exact(&shifted, p);
    let mut sum = BigRational::zero();
    for (m, gm) in g.iter().enumerate() {
        for (mp, gmp) in g.iter().enumerate() {
            let p = k - (m + mp) as u64;
            let mut w = moment(p);
            if with_one_plus_t {
                w += moment(p + 1);
            }
            sum += gm * gmp * w;
        }
    }
    let beta = gamma_exact(&half)? * gamma_exact(&(&mu + int(1)))? / gamma_exact(&shifted)?;
    Ok(beta * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momom::{inverse_momentum, mean_momentum};
    use crate::states::make_state;

    #[test]
    fn reference_values() {
        let a = gegenbauer_integrals(&make_state(3, 1, 0, 1.0).unwrap()).unwrap();
        assert_eq!(a.i_exact, ExactValue::from_ratio(4, 3));
        assert!((a.i_value - 4.0 / 3.0).abs() < 1e-14);
        let expected = 16.0 / (3.0 * std::f64::consts::PI);
        assert!((a.inverse_momentum() - expected).abs() < 1e-13);

        let a = gegenbauer_integrals(&make_state(3, 2, 1, 1.0).unwrap()).unwrap();
        assert_eq!(a.i_exact, ExactValue::from_ratio(16, 15));
    }

    #[test]
    fn closed_forms_for_i() {
        for n in 1..=12i64 {
            let s = make_state(3, n, 0, 1.0).unwrap();
            let a = gegenbauer_integrals(&s).unwrap();
            assert_eq!(a.i_exact, ExactValue::from_ratio(4 * n * n, 4 * n * n - 1));
            let c = make_state(3, n, n - 1, 1.0).unwrap();
            let a = gegenbauer_integrals(&c).unwrap();
            let num = int(2).pow((2 * n + 1) as i32) * factorial_rational(n as u64).pow(2);
            let expected = ExactValue::rational(num / factorial_rational(2 * n as u64 + 1));
            assert_eq!(a.i_exact, expected);
        }
    }

    #[test]
    fn reproduces_mean_and_inverse_momentum() {
        for d in 2..=7 {
            for n in 1..=6 {
                for l in 0..n {
                    let s = make_state(d, n, l, 1.3).unwrap();
                    let a = gegenbauer_integrals(&s).unwrap();
                    let mean = mean_momentum(&s).unwrap().exact_value().unwrap().clone();
                    let inv = inverse_momentum(&s).unwrap().exact_value().unwrap().clone();
                    assert_eq!(a.k_prime.clone() * a.i_exact.clone(), mean);
                    assert_eq!(a.k_double_prime.clone() * a.j_exact.clone(), inv);
                    let m = mean.to_f64();
                    let i = inv.to_f64();
                    assert!((a.mean_momentum() - m).abs() <= 1e-12 * m);
                    assert!((a.inverse_momentum() - i).abs() <= 1e-12 * i);
                }
            }
        }
    }
}
