//! Large-`n` (Rydberg) and large-`D` (pseudo-classical) estimates.
//!
//! These return estimates unconditionally; how fast they converge is checked
//! against exact values in the test suite.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::gamma::lgamma;
use crate::specfun::EULER_GAMMA;
use crate::states::{HydrogenicState, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Rydberg,
    HighD,
}

/// Leading asymptotic value and, when a first correction is known, the
/// corrected value (`corrected == leading` otherwise).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticEstimate {
    #[serde(with = "crate::record::decimal")]
    pub leading: f64,
    #[serde(with = "crate::record::decimal")]
    pub corrected: f64,
    pub regime: Regime,
    pub constraints: String,
}

impl AsymptoticEstimate {
    fn new(leading: f64, corrected: f64, regime: Regime, constraints: impl Into<String>) -> Self {
        AsymptoticEstimate { leading, corrected, regime, constraints: constraints.into() }
    }

    fn uncorrected(leading: f64, regime: Regime, constraints: impl Into<String>) -> Self {
        Self::new(leading, leading, regime, constraints)
    }
}

/// Which family of states an inverse-momentum estimate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InverseFamily {
    Circular,
    NS,
}

/// `Γ(x+a)/Γ(x+b) ≈ x^{a-b} [1 + (a-b)(a+b-1)/(2x)]`.
pub fn gamma_ratio_asym(x: f64, a: f64, b: f64) -> f64 {
    x.powf(a - b) * (1.0 + (a - b) * (a + b - 1.0) / (2.0 * x))
}

/// `<r^α>` for large `n`.
///
/// * `α > -3/2`: `(η²/Z)^α 2^{α+1} Γ(α+3/2) / (√π Γ(α+2))`
/// * `α = -a` with `3/2 < a < 2L+3`:
///   `Z^a/η³ · Γ(2L-a+3)/Γ(2L+a) · 2^{3a-5} Γ(a-3/2) / (√π Γ(a-1))`
pub fn rydberg_r(alpha: f64, state: &HydrogenicState) -> Result<AsymptoticEstimate> {
    let eta = state.eta().to_f64();
    let z = state.charge();
    let ln_sqrt_pi = 0.5 * PI.ln();
    if alpha > -1.5 {
        let ln = alpha * (eta * eta / z).ln() + (alpha + 1.0) * std::f64::consts::LN_2 + lgamma(alpha + 1.5)
            - ln_sqrt_pi
            - lgamma(alpha + 2.0);
        return Ok(AsymptoticEstimate::uncorrected(ln.exp(), Regime::Rydberg, "alpha > -3/2"));
    }
    let a = -alpha;
    let two_l = state.big_l().to_f64() * 2.0;
    if !(a > 1.5 && a < two_l + 3.0) {
        return Err(Error::OrderOutOfRegime {
            alpha,
            constraint: format!("alpha > -3/2 or -alpha in (3/2, 2L+3) = (3/2, {})", two_l + 3.0),
        });
    }
    let ln = a * z.ln() - 3.0 * eta.ln() + lgamma(two_l - a + 3.0) - lgamma(two_l + a)
        + (3.0 * a - 5.0) * std::f64::consts::LN_2
        + lgamma(a - 1.5)
        - ln_sqrt_pi
        - lgamma(a - 1.0);
    Ok(AsymptoticEstimate::uncorrected(ln.exp(), Regime::Rydberg, "-alpha in (3/2, 2L+3)"))
}

/// `<p^α> ≈ (Z/n)^α (2/π) Γ((α+1)/2) Γ((3-α)/2)` for `-1 < α < 3`; at `α = 1`
/// this is `2Z/(πn)`.
pub fn rydberg_p(alpha: f64, n: u32, z: f64) -> Result<AsymptoticEstimate> {
    if !(alpha > -1.0 && alpha < 3.0) {
        return Err(Error::OrderOutOfRegime { alpha, constraint: "alpha in (-1, 3)".into() });
    }
    let scale = z / n as f64;
    let leading = if alpha == 1.0 {
        2.0 * scale / PI
    } else {
        scale.powf(alpha) * 2.0 / PI * (lgamma(0.5 * (alpha + 1.0)) + lgamma(0.5 * (3.0 - alpha))).exp()
    };
    Ok(AsymptoticEstimate::uncorrected(leading, Regime::Rydberg, "alpha in (-1, 3)"))
}

/// Three-dimensional circular states: `(Z/n)^α (1 + α(α-2)/(4n))`.
pub fn rydberg_circular_p(alpha: f64, n: u32, z: f64) -> AsymptoticEstimate {
    let nf = n as f64;
    let leading = (z / nf).powf(alpha);
    let corrected = leading * (1.0 + alpha * (alpha - 2.0) / (4.0 * nf));
    AsymptoticEstimate::new(leading, corrected, Regime::Rydberg, "D = 3, l = n-1")
}

/// Three-dimensional `<p^{-1}>` for large `n`:
///
/// * circular: `(n/Z)(1 + 3/(4n))`
/// * `nS`: `(4n/(πZ)) [ln(4n) + γ - 1/2 - 1/(2n) - 1/(12n²)]`
pub fn rydberg_inverse_p(n: u32, z: f64, family: InverseFamily) -> AsymptoticEstimate {
    let nf = n as f64;
    match family {
        InverseFamily::Circular => {
            let leading = nf / z;
            AsymptoticEstimate::new(leading, leading * (1.0 + 0.75 / nf), Regime::Rydberg, "D = 3, l = n-1")
        }
        InverseFamily::NS => {
            let pre = 4.0 * nf / (PI * z);
            let base = (4.0 * nf).ln() + EULER_GAMMA - 0.5;
            let leading = pre * base;
            let corrected = pre * (base - 0.5 / nf - 1.0 / (12.0 * nf * nf));
            AsymptoticEstimate::new(leading, corrected, Regime::Rydberg, "D = 3, l = 0")
        }
    }
}

/// Large-`D` estimates:
///
/// * position: `(D²/(4Z))^α (1 + (α+1)(α+4l-2)/(2D)) (1 + (α+1)(α+2)(n-l-1)/(D+2l-1))`
/// * momentum: `(2Z/D)^α (1 + α(α-2)(2n-2l-1)/(2D))`
///
/// For circular states these reduce to `1 + (α+1)(4n+α-6)/(2D)` and
/// `1 + α(α-2)/(2D)`.
pub fn high_d(alpha: f64, state: &HydrogenicState, space: Space) -> Result<AsymptoticEstimate> {
    let d = state.dim() as f64;
    let n = state.n() as f64;
    let l = state.l() as f64;
    let z = state.charge();
    let lower = -d - 2.0 * l;
    let in_regime = match space {
        Space::Position => alpha > lower,
        Space::Momentum => alpha > lower && alpha < d + 2.0 * l + 2.0,
    };
    let constraint = match space {
        Space::Position => format!("alpha > -D-2l = {lower}"),
        Space::Momentum => format!("alpha in (-D-2l, D+2l+2) = ({lower}, {})", d + 2.0 * l + 2.0),
    };
    if !in_regime {
        return Err(Error::OrderOutOfRegime { alpha, constraint });
    }
    let (leading, factor) = match space {
        Space::Position => {
            let leading = (d * d / (4.0 * z)).powf(alpha);
            let factor = if state.is_circular() {
                1.0 + (alpha + 1.0) * (4.0 * n + alpha - 6.0) / (2.0 * d)
            } else {
                (1.0 + (alpha + 1.0) * (alpha + 4.0 * l - 2.0) / (2.0 * d))
                    * (1.0 + (alpha + 1.0) * (alpha + 2.0) * (n - l - 1.0) / (d + 2.0 * l - 1.0))
            };
            (leading, factor)
        }
        Space::Momentum => {
            let leading = (2.0 * z / d).powf(alpha);
            let factor = if state.is_circular() {
                1.0 + alpha * (alpha - 2.0) / (2.0 * d)
            } else {
                1.0 + alpha * (alpha - 2.0) * (2.0 * n - 2.0 * l - 1.0) / (2.0 * d)
            };
            (leading, factor)
        }
    };
    Ok(AsymptoticEstimate::new(leading, leading * factor, Regime::HighD, constraint))
}
