//! Balanced `5F4` representation
//!
//! ```text
//! <p^α> = 2^{1-2ν} Z^α √π / (k! η^α)
//!         · (k+ν) Γ(k+2ν) Γ(ν+(α+1)/2) Γ(ν+(3-α)/2) / (Γ(ν+1/2)² Γ(ν+1) Γ(ν+3/2))
//!         · 5F4(-k, k+2ν, ν, ν+(α+1)/2, ν+(3-α)/2; 2ν, ν+1/2, ν+1, ν+3/2; 1)
//! ```

use crate::error::{Error, Result};
use crate::posmom::CANCELLATION_LIMIT;
use crate::specfun::exact::{int, rat, rational_powi};
use crate::specfun::gamma::{factorial_rational, gamma_exact, lgamma};
use crate::specfun::hypsum::{hyp_sum_exact, hyp_sum_float, HypSumSpec, Param};
use crate::specfun::ExactValue;
use crate::states::HydrogenicState;

pub fn hyp5f4_exact(state: &HydrogenicState, alpha: i64) -> Result<ExactValue> {
    let k = state.k() as i64;
    let nu = state.nu().to_rational();
    let two_nu = &nu * int(2);
    let up = &nu + rat(alpha + 1, 2);
    let dn = &nu + rat(3 - alpha, 2);
    let h1 = &nu + rat(1, 2);
    let h3 = &nu + rat(3, 2);
    let spec = HypSumSpec::new(
        vec![int(-k).into(), (int(k) + &two_nu).into(), nu.clone().into(), up.clone().into(), dn.clone().into()],
        vec![two_nu.clone().into(), h1.clone().into(), (&nu + int(1)).into(), h3.clone().into()],
    );
    let series = hyp_sum_exact(&spec)?;

    let z_eta = state.charge_rational() / state.eta().to_rational();
    let two_pow = rational_powi(&int(2), 1 - state.nu().twice());
    let g_h1 = gamma_exact(&h1)?;
    let num = gamma_exact(&(int(k) + &two_nu))? * gamma_exact(&up)? * gamma_exact(&dn)? * ExactValue::pi_power(1);
    let den = g_h1.clone() * g_h1 * gamma_exact(&(&nu + int(1)))? * gamma_exact(&h3)?;
    let rational = two_pow * rational_powi(&z_eta, alpha) * (int(k) + &nu) * series / factorial_rational(k as u64);
    Ok(num / den * rational)
}

pub fn hyp5f4_float(state: &HydrogenicState, alpha: f64) -> Result<(f64, f64)> {
    let kf = state.k() as f64;
    let nu = state.nu().to_f64();
    let up = nu + 0.5 * (alpha + 1.0);
    let dn = nu + 0.5 * (3.0 - alpha);
    let spec = HypSumSpec::new(
        vec![Param::Real(-kf), Param::Real(kf + 2.0 * nu), Param::Real(nu), Param::Real(up), Param::Real(dn)],
        vec![Param::Real(2.0 * nu), Param::Real(nu + 0.5), Param::Real(nu + 1.0), Param::Real(nu + 1.5)],
    );
    let sum = hyp_sum_float(&spec)?;
    let rel = sum.relative_bound();
    if !(rel <= CANCELLATION_LIMIT) {
        return Err(Error::CancellationOverflow { relative_bound: rel });
    }
    let logs = [
        (1.0 - 2.0 * nu) * std::f64::consts::LN_2,
        alpha * (state.charge() / state.eta().to_f64()).ln(),
        0.5 * std::f64::consts::PI.ln(),
        -lgamma(kf + 1.0),
        (kf + nu).ln(),
        lgamma(kf + 2.0 * nu),
        lgamma(up),
        lgamma(dn),
        -2.0 * lgamma(nu + 0.5),
        -lgamma(nu + 1.0),
        -lgamma(nu + 1.5),
    ];
    let value = logs.iter().sum::<f64>().exp() * sum.value;
    let pre_err = 4.0 * f64::EPSILON * (1.0 + logs.iter().map(|t| t.abs()).sum::<f64>());
    Ok((value, value.abs() * (rel + pre_err)))
}
