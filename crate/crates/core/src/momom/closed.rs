//! Closed-form momentum moments: even orders, reflection, circular states,
//! and the `<p>` and `<p^{-1}>` specializations.

use num_rational::BigRational;

use super::single::single_sum_exact;
use super::p_moment;
use crate::error::{Error, Result};
use crate::posmom::{integer_order, Method, Mode, MomentResult, Value};
use crate::specfun::digamma::digamma_half_exact;
use crate::specfun::exact::{int, rat, rational_powi};
use crate::specfun::gamma::{gamma_exact, lgamma};
use crate::specfun::ExactValue;
use crate::states::{HydrogenicState, Space};

/// Orders with a tabulated even closed form.
pub const EVEN_ORDERS: [i64; 5] = [0, 2, -2, 4, 6];

pub fn p_moment_even_closed(state: &HydrogenicState, alpha: i64) -> Result<MomentResult> {
    if !EVEN_ORDERS.contains(&alpha) {
        return Err(Error::UnsupportedArgument(format!("no closed form for <p^{alpha}>")));
    }
    state.require_order(Space::Momentum, alpha as f64)?;
    let eta = state.eta().to_rational();
    let z_eta = state.charge_rational() / &eta;
    let two_l = state.big_l().to_rational() * int(2);
    let nonzero = |v: &BigRational| -> Result<()> {
        if *v == int(0) {
            Err(Error::SingularDenominator(format!("L = {} makes <p^{alpha}> singular", state.big_l())))
        } else {
            Ok(())
        }
    };
    let value = match alpha {
        0 => int(1),
        2 => &z_eta * &z_eta,
        -2 | 4 => {
            let den = &two_l + int(1);
            nonzero(&den)?;
            let ratio = (int(8) * &eta - int(3) * &den) / den;
            rational_powi(&z_eta, if alpha == 4 { 4 } else { -2 }) * ratio
        }
        6 => {
            let k = int(state.k() as i64);
            let nu = state.nu().to_rational();
            let den = (&two_l + int(3)) * (&two_l + int(1)) * (&two_l - int(1));
            nonzero(&den)?;
            let a = int(4) * &k + int(2) * &nu + int(1);
            let b = int(16) * &k * &k + int(40) * &nu * &k - int(4) * &k + int(4) * &nu * &nu + int(16) * &nu + int(15);
            rational_powi(&z_eta, 6) * a * b / den
        }
        _ => unreachable!(),
    };
    Ok(MomentResult::exact(state, Space::Momentum, alpha as f64, Method::ClosedForm, ExactValue::rational(value)))
}

/// `<p^{2-α}> = (η/Z)^{2α-2} <p^α>`.
pub fn reflect(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    state.require_order(Space::Momentum, alpha)?;
    state.require_order(Space::Momentum, 2.0 - alpha)?;
    let base = p_moment(state, alpha, mode)?;
    match (&base.value, integer_order(alpha)) {
        (Value::Exact(v), Some(a)) => {
            let eta_z = state.eta().to_rational() / state.charge_rational();
            let value = v.clone() * rational_powi(&eta_z, 2 * a - 2);
            Ok(MomentResult::exact(state, Space::Momentum, 2.0 - alpha, Method::Reflection, value))
        }
        _ => {
            let scale = (state.eta().to_f64() / state.charge()).powf(2.0 * alpha - 2.0);
            Ok(MomentResult::float(
                state,
                Space::Momentum,
                2.0 - alpha,
                Method::Reflection,
                scale * base.to_f64(),
                scale * base.error_estimate,
            ))
        }
    }
}

/// `<p³> = (Z/η)⁴ <p^{-1}>`.
pub fn p_cubed(state: &HydrogenicState) -> Result<MomentResult> {
    reflect(state, -1.0, Mode::Exact)
}

/// Circular states `l = n-1`:
/// `(Z/η)^α Γ(η+(α+1)/2) Γ(η+(3-α)/2) / (Γ(η+1/2) Γ(η+3/2))`.
pub fn p_moment_circular(state: &HydrogenicState, alpha: f64) -> Result<MomentResult> {
    if !state.is_circular() {
        return Err(Error::NotCircular { n: state.n(), l: state.l() });
    }
    state.require_order(Space::Momentum, alpha)?;
    if let Some(a) = integer_order(alpha) {
        let eta = state.eta().to_rational();
        let z_eta = state.charge_rational() / &eta;
        let num = gamma_exact(&(&eta + rat(a + 1, 2)))? * gamma_exact(&(&eta + rat(3 - a, 2)))?;
        let den = gamma_exact(&(&eta + rat(1, 2)))? * gamma_exact(&(&eta + rat(3, 2)))?;
        let value = num / den * rational_powi(&z_eta, a);
        return Ok(MomentResult::exact(state, Space::Momentum, alpha, Method::ClosedForm, value));
    }
    let eta = state.eta().to_f64();
    let logs = [
        alpha * (state.charge() / eta).ln(),
        lgamma(eta + 0.5 * (alpha + 1.0)),
        lgamma(eta + 0.5 * (3.0 - alpha)),
        -lgamma(eta + 0.5),
        -lgamma(eta + 1.5),
    ];
    let value = logs.iter().sum::<f64>().exp();
    let err = 4.0 * f64::EPSILON * (1.0 + logs.iter().map(|t| t.abs()).sum::<f64>());
    Ok(MomentResult::float(state, Space::Momentum, alpha, Method::ClosedForm, value, value * err))
}

fn cross_checked(general: ExactValue, special: Option<ExactValue>, state: &HydrogenicState, alpha: i64) -> Result<MomentResult> {
    match special {
        Some(s) if s != general => Err(Error::RouteMismatch(format!(
            "<p^{alpha}> specialization {s} differs from the general formula {general}"
        ))),
        Some(s) => Ok(MomentResult::exact(state, Space::Momentum, alpha as f64, Method::ClosedForm, s)),
        None => Ok(MomentResult::exact(state, Space::Momentum, alpha as f64, Method::SingleSum, general)),
    }
}

fn is_three_d_s(state: &HydrogenicState) -> bool {
    state.dim() == 3 && state.l() == 0
}

/// `<p>`; circular and three-dimensional `nS` states use their closed forms,
/// cross-checked against the general single sum.
pub fn mean_momentum(state: &HydrogenicState) -> Result<MomentResult> {
    let general = single_sum_exact(state, 1)?;
    let special = if is_three_d_s(state) {
        // (2Z/(πn)) · 4n²/(4n²-1)
        let n = state.n() as i64;
        let coeff = int(2) * state.charge_rational() / int(n) * rat(4 * n * n, 4 * n * n - 1);
        Some(ExactValue::new(coeff, -2))
    } else if state.is_circular() {
        p_moment_circular(state, 1.0)?.exact_value().cloned()
    } else {
        None
    };
    cross_checked(general, special, state, 1)
}

/// `<p^{-1}>`; the `nS` route uses `ψ(n+1/2)` with its transcendental part
/// cancelled analytically, so the result is rational over `πZ`.
pub fn inverse_momentum(state: &HydrogenicState) -> Result<MomentResult> {
    let general = single_sum_exact(state, -1)?;
    let special = if is_three_d_s(state) {
        // (4n/(Zπ)) [ψ(n+1/2) + γ + 2 ln 2 - 2n²/(4n²-1)]
        let n = state.n() as i64;
        let bracket = digamma_half_exact(state.n()).rational - rat(2 * n * n, 4 * n * n - 1);
        Some(ExactValue::new(int(4 * n) / state.charge_rational() * bracket, -2))
    } else if state.is_circular() {
        p_moment_circular(state, -1.0)?.exact_value().cloned()
    } else {
        None
    };
    cross_checked(general, special, state, -1)
}

/// `<p>`, to which the Dirac–Slater exchange energy is proportional.
pub fn exchange_moment(state: &HydrogenicState) -> Result<MomentResult> {
    mean_momentum(state)
}

/// `<p²>`, proportional to the kinetic energy.
pub fn kinetic_moment(state: &HydrogenicState) -> Result<MomentResult> {
    p_moment(state, 2.0, Mode::Exact)
}

/// `<p³>`, proportional to the interelectronic repulsion estimate.
pub fn repulsion_moment(state: &HydrogenicState) -> Result<MomentResult> {
    p_moment(state, 3.0, Mode::Exact)
}

/// `<p⁴>`, proportional to the Breit–Pauli relativistic correction.
pub fn breit_pauli_moment(state: &HydrogenicState) -> Result<MomentResult> {
    p_moment(state, 4.0, Mode::Exact)
}
