//! Independent numerical ground truth: quadrature over the radial
//! wavefunctions and entropic moments of S-wave densities.
//!
//! Gauss rules absorb `r̃^{2L+2+α} e^{-r̃}` (position) or
//! `(1-t)^{ν+(α-1)/2} (1+t)^{ν-(α-1)/2}` (momentum) into the weight, which
//! leaves a squared polynomial of degree `2k`; `k+1` nodes integrate it
//! exactly for every real order inside the validity domain.

pub mod adaptive;
pub mod gauss;
pub mod poly;
pub mod radial;

use serde::{Deserialize, Serialize};

pub use gauss::{gauss_rule, GaussRule};
pub use poly::{gegenbauer, gegenbauer_orthonormal, laguerre, laguerre_orthonormal, Family};
pub use radial::RadialFunctions;

use crate::error::{Error, Result};
use crate::posmom::{Method, MomentResult};
use crate::specfun::gamma::lgamma;
use crate::states::{HydrogenicState, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// Generalized Gauss–Laguerre in position space.
    GaussGenLaguerre,
    /// Gauss–Jacobi in momentum space.
    GaussJacobi,
    /// Adaptive Gauss–Kronrod over the explicit wavefunctions.
    AdaptiveGK,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Either Gauss variant selects the Gauss rule native to the space.
    pub rule: Rule,
    /// Node count for Gauss rules; `0` picks `k + 2`.
    pub nodes: usize,
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rule: Rule::GaussJacobi,
            nodes: 0,
            rel_tol: 1e-13,
        }
    }
}

impl QuadratureSpec {
    pub fn adaptive(rel_tol: f64) -> Self {
        QuadratureSpec {
            rule: Rule::AdaptiveGK,
            nodes: 0,
            rel_tol,
        }
    }

    pub fn gauss(nodes: usize) -> Self {
        QuadratureSpec {
            nodes,
            ..Default::default()
        }
    }

    fn node_count(&self, k: usize) -> usize {
        if self.nodes == 0 {
            k + 2
        } else {
            self.nodes
        }
    }
}

/// `<r^α>` by quadrature.
pub fn quad_r_moment(state: &HydrogenicState, alpha: f64, spec: &QuadratureSpec) -> Result<MomentResult> {
    state.require_order(Space::Position, alpha)?;
    let (value, error) = match spec.rule {
        Rule::AdaptiveGK => r_adaptive(state, alpha, spec.rel_tol)?,
        _ => {
            let n = spec.node_count(state.k() as usize);
            let a = r_gauss(state, alpha, n)?;
            let b = r_gauss(state, alpha, n + 2)?;
            (a, (a - b).abs().max(4.0 * n as f64 * f64::EPSILON * a.abs()))
        }
    };
    Ok(MomentResult::float(state, Space::Position, alpha, Method::Quadrature, value, error))
}

fn r_gauss(state: &HydrogenicState, alpha: f64, n: usize) -> Result<f64> {
    let k = state.k() as usize;
    let eta = state.eta().to_f64();
    let z = state.charge();
    let lam_poly = 2.0 * state.big_l().to_f64() + 1.0;
    let lam = lam_poly + 1.0 + alpha;
    let rule = gauss_rule(Family::Laguerre { lambda: lam }, n)?;
    let poly = Family::Laguerre { lambda: lam_poly };
    let log_pre = -(2.0 * eta).ln() + alpha * (eta / (2.0 * z)).ln() + lgamma(lam + 1.0) - poly.log_mu0();
    let mut acc = crate::specfun::CompensatedSum::new();
    for (&x, &lw) in rule.nodes.iter().zip(&rule.log_weights) {
        let (v, s) = poly.orthonormal_scaled(k, x);
        if v == 0.0 {
            continue;
        }
        acc.add((lw + 2.0 * (v.abs().ln() + s) + log_pre).exp(), 0.0);
    }
    Ok(acc.value())
}

fn r_adaptive(state: &HydrogenicState, alpha: f64, rel_tol: f64) -> Result<(f64, f64)> {
    let rf = RadialFunctions::new(state)?;
    let d = state.dim() as f64;
    let eta = state.eta().to_f64();
    let z = state.charge();
    let power = 2.0 * state.l() as f64 + d - 1.0 + alpha;
    let log_scale = (d + alpha) * (eta / (2.0 * z)).ln();
    // Integrand in r̃ without the r̃^{2l} factor folded into ln R².
    let f = |rt: f64| {
        if rt <= 0.0 {
            return 0.0;
        }
        (rf.ln_r_sq_scaled(rt) + (d - 1.0 + alpha) * rt.ln() + log_scale).exp()
    };
    let k = state.k() as f64;
    let split = 4.0 * k + 2.0 * (2.0 * state.big_l().to_f64() + 1.0) + 8.0 + alpha.abs();
    let head = adaptive::integrate_power_endpoint(f, power, split, rel_tol, 0.0)?;
    let tail = adaptive::integrate_to_infinity(f, split, rel_tol, 0.0)?;
    Ok((head.value + tail.value, head.error + tail.error))
}

/// `<p^α>` by quadrature.
pub fn quad_p_moment(state: &HydrogenicState, alpha: f64, spec: &QuadratureSpec) -> Result<MomentResult> {
    state.require_order(Space::Momentum, alpha)?;
    let (value, error) = match spec.rule {
        Rule::AdaptiveGK => p_adaptive(state, alpha, spec.rel_tol)?,
        _ => {
            let n = spec.node_count(state.k() as usize);
            let a = p_gauss(state, alpha, n)?;
            let b = p_gauss(state, alpha, n + 2)?;
            (a, (a - b).abs().max(4.0 * n as f64 * f64::EPSILON * a.abs()))
        }
    };
    Ok(MomentResult::float(state, Space::Momentum, alpha, Method::Quadrature, value, error))
}

fn p_gauss(state: &HydrogenicState, alpha: f64, n: usize) -> Result<f64> {
    let k = state.k() as usize;
    let nu = state.nu().to_f64();
    let a = nu + 0.5 * (alpha - 1.0);
    let b = nu - 0.5 * (alpha - 1.0);
    let rule = gauss_rule(Family::Jacobi { a, b }, n)?;
    let poly = Family::gegenbauer(nu);
    let ratio = (rule.log_mu0 - poly.log_mu0() + alpha * (state.charge() / state.eta().to_f64()).ln()).exp();
    Ok(ratio * rule.normalized_sum(|t| poly.orthonormal(k, t).powi(2)))
}

fn p_adaptive(state: &HydrogenicState, alpha: f64, rel_tol: f64) -> Result<(f64, f64)> {
    let rf = RadialFunctions::new(state)?;
    let d = state.dim() as f64;
    let l = state.l() as f64;
    let scale = (state.charge() / state.eta().to_f64()).powf(d + alpha);
    let f = |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        rf.m_sq_scaled(u) * u.powf(d - 1.0 + alpha)
    };
    let head = adaptive::integrate_power_endpoint(f, 2.0 * l + d - 1.0 + alpha, 1.0, rel_tol, 0.0)?;
    // u = 1/s on [1, ∞)
    let g = |s: f64| rf.m_sq_inverted(s, -(d + 1.0 + alpha));
    let tail = adaptive::integrate_power_endpoint(g, 2.0 * l + d + 1.0 - alpha, 1.0, rel_tol, 0.0)?;
    Ok((scale * (head.value + tail.value), scale * (head.error + tail.error)))
}

/// Entropic moment `W_β[ρ] = ∫ ρ^β d^D r` of an S-wave state.
pub fn entropic_moment(state: &HydrogenicState, beta: f64) -> Result<f64> {
    if state.l() != 0 {
        return Err(Error::NotSWave(state.l()));
    }
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::ParameterOutOfRange { name: "beta", value: beta });
    }
    let d = state.dim() as f64;
    let k = state.k() as usize;
    let eta = state.eta().to_f64();
    let z = state.charge();
    let poly = Family::Laguerre { lambda: d - 2.0 };
    let ln_two_eta = (2.0 * eta).ln();
    let half_ln_mu0 = 0.5 * poly.log_mu0();
    let f = |rt: f64| {
        if rt <= 0.0 {
            return 0.0;
        }
        let (v, s) = poly.orthonormal_scaled(k, rt);
        if v == 0.0 {
            return 0.0;
        }
        let ln_lt_sq = 2.0 * (v.abs().ln() + s - half_ln_mu0);
        (beta * (ln_lt_sq - ln_two_eta) - beta * rt + (d - 1.0) * rt.ln()).exp()
    };

    // Integrate between consecutive zeros of the radial polynomial.
    let mut breaks = vec![0.0];
    if k > 0 {
        breaks.extend(gauss_rule(poly, k)?.nodes.iter().copied());
    }
    let tol = 1e-12;
    let mut total = 0.0;
    for w in breaks.windows(2) {
        total += adaptive::integrate(f, w[0], w[1], tol, 0.0)?.value;
    }
    let last = *breaks.last().expect("non-empty");
    total += adaptive::integrate_to_infinity(f, last, tol, 0.0)?.value;

    let ln_omega = std::f64::consts::LN_2 + 0.5 * d * std::f64::consts::PI.ln() - lgamma(0.5 * d);
    let ln_pre = (1.0 - beta) * ln_omega + d * (beta - 1.0) * (2.0 * z / eta).ln();
    Ok(ln_pre.exp() * total)
}
