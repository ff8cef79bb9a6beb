//! Laguerre and Gegenbauer polynomials by three-term recurrence.

use crate::error::{Error, Result};
use crate::specfun::gamma::lgamma;

/// Classical weight families described by their Jacobi-matrix recurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `x^λ e^{-x}` on `[0, ∞)`.
    Laguerre { lambda: f64 },
    /// `(1-t)^a (1+t)^b` on `[-1, 1]`.
    Jacobi { a: f64, b: f64 },
}

impl Family {
    pub fn gegenbauer(nu: f64) -> Family {
        Family::Jacobi { a: nu - 0.5, b: nu - 0.5 }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            Family::Laguerre { lambda } if !(lambda > -1.0) => {
                Err(Error::ParameterOutOfRange { name: "lambda", value: lambda })
            }
            Family::Jacobi { a, .. } if !(a > -1.0) => Err(Error::ParameterOutOfRange { name: "a", value: a }),
            Family::Jacobi { b, .. } if !(b > -1.0) => Err(Error::ParameterOutOfRange { name: "b", value: b }),
            _ => Ok(()),
        }
    }

    /// Diagonal recurrence coefficient `a_j`.
    pub fn diag(&self, j: usize) -> f64 {
        let jf = j as f64;
        match *self {
            Family::Laguerre { lambda } => 2.0 * jf + lambda + 1.0,
            Family::Jacobi { a, b } => {
                if j == 0 {
                    (b - a) / (a + b + 2.0)
                } else {
                    let s = 2.0 * jf + a + b;
                    (b * b - a * a) / (s * (s + 2.0))
                }
            }
        }
    }

    /// Off-diagonal recurrence coefficient `b_j` for `j >= 1`.
    pub fn off(&self, j: usize) -> f64 {
        let jf = j as f64;
        match *self {
            Family::Laguerre { lambda } => (jf * (jf + lambda)).sqrt(),
            Family::Jacobi { a, b } => {
                if j == 1 {
                    let s = a + b + 2.0;
                    (4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0))).sqrt()
                } else {
                    let s = 2.0 * jf + a + b;
                    (4.0 * jf * (jf + a) * (jf + b) * (jf + a + b) / (s * s * (s + 1.0) * (s - 1.0))).sqrt()
                }
            }
        }
    }

    /// `ln ∫ w`, the log of the total weight.
    pub fn log_mu0(&self) -> f64 {
        match *self {
            Family::Laguerre { lambda } => lgamma(lambda + 1.0),
            Family::Jacobi { a, b } => {
                (a + b + 1.0) * std::f64::consts::LN_2 + lgamma(a + 1.0) + lgamma(b + 1.0) - lgamma(a + b + 2.0)
            }
        }
    }

    /// Orthonormal polynomial of degree `k` for the probability weight `w/μ0`
    /// at `x`, returned as `(mantissa, log_scale)` with value `mantissa·e^log_scale`.
    pub fn orthonormal_scaled(&self, k: usize, x: f64) -> (f64, f64) {
        let mut prev = 0.0;
        let mut cur = 1.0;
        let mut log_scale = 0.0;
        for j in 0..k {
            let b_prev = if j == 0 { 0.0 } else { self.off(j) };
            let next = ((x - self.diag(j)) * cur - b_prev * prev) / self.off(j + 1);
            prev = cur;
            cur = next;
            if cur.abs() > 1e150 {
                prev *= 1e-150;
                cur *= 1e-150;
                log_scale += 150.0 * std::f64::consts::LN_10;
            }
        }
        (cur, log_scale)
    }

    /// Orthonormal polynomial for the probability weight `w/μ0`.
    pub fn orthonormal(&self, k: usize, x: f64) -> f64 {
        let (v, s) = self.orthonormal_scaled(k, x);
        v * s.exp()
    }

    /// `ln Σ_{j<n} q_j(x)^2`, used for Christoffel weights.
    pub fn log_christoffel_sum(&self, n: usize, x: f64) -> f64 {
        let mut prev = 0.0;
        let mut cur = 1.0;
        let mut sumsq = 1.0;
        let mut log_scale = 0.0;
        for j in 0..n.saturating_sub(1) {
            let b_prev = if j == 0 { 0.0 } else { self.off(j) };
            let next = ((x - self.diag(j)) * cur - b_prev * prev) / self.off(j + 1);
            prev = cur;
            cur = next;
            sumsq += cur * cur;
            if cur.abs() > 1e100 {
                prev *= 1e-100;
                cur *= 1e-100;
                sumsq *= 1e-200;
                log_scale += 200.0 * std::f64::consts::LN_10;
            }
        }
        sumsq.ln() + log_scale
    }

    /// Ratio `P_n(x)/P_n'(x)` of the degree-`n` orthogonal polynomial, for Newton steps.
    pub fn newton_ratio(&self, n: usize, x: f64) -> f64 {
        let (mut p_prev, mut p) = (0.0, 1.0);
        let (mut d_prev, mut d) = (0.0, 0.0);
        for j in 0..n {
            let b_prev = if j == 0 { 0.0 } else { self.off(j) };
            let scale = if j + 1 < n { self.off(j + 1) } else { 1.0 };
            let p_next = ((x - self.diag(j)) * p - b_prev * p_prev) / scale;
            let d_next = (p + (x - self.diag(j)) * d - b_prev * d_prev) / scale;
            p_prev = p;
            p = p_next;
            d_prev = d;
            d = d_next;
            let m = p.abs().max(d.abs());
            if m > 1e100 {
                p_prev /= m;
                p /= m;
                d_prev /= m;
                d /= m;
            }
        }
        p / d
    }
}

/// Generalized Laguerre polynomial `L_k^{(λ)}(x)` in the standard normalization.
pub fn laguerre(k: usize, lambda: f64, x: f64) -> Result<f64> {
    Family::Laguerre { lambda }.validate()?;
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + lambda - x) * cur - (jf + lambda) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Orthonormal Laguerre polynomial `[k!/Γ(k+λ+1)]^{1/2} L_k^{(λ)}(x)` for the weight `x^λ e^{-x}`.
pub fn laguerre_orthonormal(k: usize, lambda: f64, x: f64) -> Result<f64> {
    let fam = Family::Laguerre { lambda };
    fam.validate()?;
    let (v, s) = fam.orthonormal_scaled(k, x);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * v * (s - 0.5 * fam.log_mu0()).exp())
}

/// Gegenbauer polynomial `C_k^{(ν)}(t)` in the standard normalization.
pub fn gegenbauer(k: usize, nu: f64, t: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(Error::ParameterOutOfRange { name: "nu", value: nu });
    }
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..k {
        let jf = j as f64;
        let next = (2.0 * (jf + nu) * t * cur - (jf + 2.0 * nu - 1.0) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Orthonormal Gegenbauer polynomial for the weight `(1-t²)^{ν-1/2}`.
pub fn gegenbauer_orthonormal(k: usize, nu: f64, t: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(Error::ParameterOutOfRange { name: "nu", value: nu });
    }
    let fam = Family::gegenbauer(nu);
    Ok(fam.orthonormal(k, t) * (-0.5 * fam.log_mu0()).exp())
}
