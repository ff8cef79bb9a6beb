//! Explicit radial wavefunctions in position and momentum space.

use num_rational::BigRational;

use super::gauss::gauss_rule;
use super::poly::Family;
use crate::error::Result;
use crate::specfun::exact::{int, rational_powi};
use crate::specfun::gamma::{factorial_rational, gamma_exact, lgamma};
use crate::specfun::ExactValue;
use crate::states::HydrogenicState;

/// Radial functions `R_{n,l}(r)` and `M_{n,l}(p)` of one state.
///
/// * `R(r) = K (2Zr/η)^l e^{-Zr/η} L_k^{(2L+1)}(2Zr/η)`
/// * `M(p) = K' u^l (1+u²)^{-(L+2)} C_k^{(L+1)}((1-u²)/(1+u²))`, with `u = ηp/Z`
#[derive(Debug, Clone)]
pub struct RadialFunctions {
    pub state: HydrogenicState,
    /// `K²_{n,l}`, exact.
    pub norm_pos_sq: ExactValue,
    /// `K'²_{n,l}`, exact.
    pub norm_mom_sq: ExactValue,
    ln_k_pos_sq: f64,
    ln_k_mom_sq: f64,
}

impl RadialFunctions {
    pub fn new(state: &HydrogenicState) -> Result<Self> {
        let d = state.dim() as i64;
        let k = state.k() as u64;
        let eta = state.eta().to_rational();
        let z = state.charge_rational();
        let two_l = state.big_l().twice();

        // K² = (2Z/η)^D k! / (2η Γ(n+l+D-2))
        let top = int(state.n() as i64 + state.l() as i64 + d - 2);
        let k2 = ExactValue::rational(rational_powi(&(int(2) * &z / &eta), d) * factorial_rational(k) / (int(2) * &eta))
            / gamma_exact(&top)?;

        // K'² = 2^{4L+6} k! Γ(L+1)² η^{D+1} / (2π Γ(η+L+1) Z^D)
        let nu = state.nu().to_rational();
        let g_nu = gamma_exact(&nu)?;
        let pref: BigRational = rational_powi(&int(2), 2 * two_l + 6) * factorial_rational(k) * rational_powi(&eta, d + 1)
            / (int(2) * rational_powi(&z, d));
        let kp2 = ExactValue::rational(pref) * g_nu.clone() * g_nu / (gamma_exact(&top)? * ExactValue::pi_power(2));

        Ok(RadialFunctions {
            state: *state,
            ln_k_pos_sq: k2.to_f64().ln(),
            ln_k_mom_sq: kp2.to_f64().ln(),
            norm_pos_sq: k2,
            norm_mom_sq: kp2,
        })
    }

    fn lambda(&self) -> f64 {
        self.state.big_l().to_f64() * 2.0 + 1.0
    }

    /// `(sign, ln|L_k^{(λ)}(x)|)` in the standard normalization.
    fn ln_laguerre(&self, x: f64) -> (f64, f64) {
        let k = self.state.k() as usize;
        let lambda = self.lambda();
        let fam = Family::Laguerre { lambda };
        let (v, s) = fam.orthonormal_scaled(k, x);
        let kf = k as f64;
        let sign = if k % 2 == 0 { v.signum() } else { -v.signum() };
        let ln = v.abs().ln() + s + 0.5 * (lgamma(kf + lambda + 1.0) - lgamma(kf + 1.0) - fam.log_mu0());
        (sign, ln)
    }

    /// `ln R²(r)` in terms of `r̃ = 2Zr/η`.
    pub(crate) fn ln_r_sq_scaled(&self, rt: f64) -> f64 {
        let l = self.state.l() as f64;
        let (_, ln_l) = self.ln_laguerre(rt);
        self.ln_k_pos_sq + 2.0 * l * rt.ln() - rt + 2.0 * ln_l
    }

    /// `R_{n,l}(r)`.
    pub fn position(&self, r: f64) -> f64 {
        let scale = 2.0 * self.state.charge() / self.state.eta().to_f64();
        let rt = scale * r;
        let (sign, _) = self.ln_laguerre(rt);
        if rt == 0.0 {
            let k = self.state.k() as usize;
            let lag = super::poly::laguerre(k, self.lambda(), 0.0).unwrap_or(f64::NAN);
            return if self.state.l() == 0 { (0.5 * self.ln_k_pos_sq).exp() * lag } else { 0.0 };
        }
        sign * (0.5 * self.ln_r_sq_scaled(rt)).exp()
    }

    /// `M²(p)` in terms of `u = ηp/Z`.
    pub(crate) fn m_sq_scaled(&self, u: f64) -> f64 {
        let l = self.state.l() as f64;
        let big_l = self.state.big_l().to_f64();
        let k = self.state.k() as usize;
        let u2 = u * u;
        let y = (1.0 - u2) / (1.0 + u2);
        let c = super::poly::gegenbauer(k, self.state.nu().to_f64(), y).unwrap_or(f64::NAN);
        let ln = self.ln_k_mom_sq + 2.0 * l * u.ln() - 2.0 * (big_l + 2.0) * u2.ln_1p();
        if u == 0.0 {
            return if self.state.l() == 0 { self.ln_k_mom_sq.exp() * c * c } else { 0.0 };
        }
        ln.exp() * c * c
    }

    /// `M²(1/s)·s^e` in terms of `s = Z/(ηp)`, evaluated in logarithms so
    /// that `s → 0` neither overflows nor underflows prematurely.
    pub(crate) fn m_sq_inverted(&self, s: f64, e: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let l = self.state.l() as f64;
        let big_l = self.state.big_l().to_f64();
        let k = self.state.k() as usize;
        let s2 = s * s;
        let y = (s2 - 1.0) / (s2 + 1.0);
        let c = super::poly::gegenbauer(k, self.state.nu().to_f64(), y).unwrap_or(f64::NAN);
        let ln = self.ln_k_mom_sq + (4.0 * (big_l + 2.0) - 2.0 * l + e) * s.ln() - 2.0 * (big_l + 2.0) * s2.ln_1p();
        ln.exp() * c * c
    }

    /// `M_{n,l}(p)`.
    pub fn momentum(&self, p: f64) -> f64 {
        let u = self.state.eta().to_f64() * p / self.state.charge();
        let k = self.state.k() as usize;
        let u2 = u * u;
        let y = (1.0 - u2) / (1.0 + u2);
        let c = super::poly::gegenbauer(k, self.state.nu().to_f64(), y).unwrap_or(f64::NAN);
        self.m_sq_scaled(u).sqrt() * c.signum()
    }

    /// Radial position density `R²(r) r^{D-1}`.
    pub fn position_density(&self, r: f64) -> f64 {
        let v = self.position(r);
        v * v * r.powi(self.state.dim() as i32 - 1)
    }

    /// Radial momentum density `M²(p) p^{D-1}`.
    pub fn momentum_density(&self, p: f64) -> f64 {
        let u = self.state.eta().to_f64() * p / self.state.charge();
        self.m_sq_scaled(u) * p.powi(self.state.dim() as i32 - 1)
    }

    /// `∫ R² r^{D-1} dr` by generalized Gauss–Laguerre quadrature.
    pub fn normalization_position(&self) -> Result<f64> {
        let k = self.state.k() as usize;
        let lambda2 = self.lambda() + 1.0;
        let rule = gauss_rule(Family::Laguerre { lambda: lambda2 }, k + 2)?;
        let d = self.state.dim() as f64;
        let log_pre = self.ln_k_pos_sq + d * (self.state.eta().to_f64() / (2.0 * self.state.charge())).ln()
            + lgamma(lambda2 + 1.0);
        let sum = rule.nodes.iter().zip(&rule.log_weights).map(|(&x, &lw)| (lw + 2.0 * self.ln_laguerre(x).1 + log_pre).exp());
        Ok(sum.sum())
    }

    /// `∫ M² p^{D-1} dp` by Gauss–Jacobi quadrature in `y`.
    pub fn normalization_momentum(&self) -> Result<f64> {
        let k = self.state.k() as usize;
        let nu = self.state.nu().to_f64();
        let big_l = self.state.big_l().to_f64();
        let fam = Family::Jacobi { a: nu - 0.5, b: nu + 0.5 };
        let rule = gauss_rule(fam, k + 2)?;
        let d = self.state.dim() as f64;
        let pre = (self.ln_k_mom_sq + d * (self.state.charge() / self.state.eta().to_f64()).ln()
            - (2.0 * big_l + 4.0) * std::f64::consts::LN_2
            + rule.log_mu0)
            .exp();
        let sum = rule.normalized_sum(|y| {
            let c = super::poly::gegenbauer(k, nu, y).unwrap_or(f64::NAN);
            c * c
        });
        Ok(pre * sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::exact::rat;
    use crate::states::make_state;

    #[test]
    fn hydrogen_ground_state_functions() {
        let rf = RadialFunctions::new(&make_state(3, 1, 0, 1.0).unwrap()).unwrap();
        // R = 2 e^{-r}, K² = 4
        assert_eq!(rf.norm_pos_sq, ExactValue::from_integer(4));
        assert!((rf.position(0.7) - 2.0 * (-0.7f64).exp()).abs() < 1e-14);
        // M(p) = (32/π)^{1/2} / (1+p²)² in this radial normalization
        assert_eq!(rf.norm_mom_sq, ExactValue::new(rat(32, 1), -2));
        let p = 0.9f64;
        let expected = (32.0 / std::f64::consts::PI).sqrt() / (1.0 + p * p).powi(2);
        assert!((rf.momentum(p) - expected).abs() < 1e-14);
    }

    #[test]
    fn normalizations_small_grid() {
        for d in [2, 3, 5, 8] {
            for n in 1..=5 {
                for l in 0..n {
                    let rf = RadialFunctions::new(&make_state(d, n, l, 1.7).unwrap()).unwrap();
                    assert!((rf.normalization_position().unwrap() - 1.0).abs() < 1e-12);
                    assert!((rf.normalization_momentum().unwrap() - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}
