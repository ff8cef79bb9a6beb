//! Single-sum representation `<p^α> = (Z/η)^α F_k(ν,α) f_k(ν)` with
//!
//! ```text
//! F_k(ν,α) = (2/k!) (k+ν) Γ(k+2ν)/Γ(2ν+1)
//!            · Γ(ν+(α+1)/2) Γ(ν+(3-α)/2) / (Γ(ν+1/2) Γ(ν+3/2))
//! f_k(ν)   = (1/(2ν)_k) Σ_j (-1)^j C(k,j) (2ν+j)_k d_j
//! d_j      = ν/(ν+j) · (ν+(α+1)/2)_j (ν+(3-α)/2)_j / ((ν+1/2)_j (ν+3/2)_j)
//! ```

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::posmom::CANCELLATION_LIMIT;
use crate::specfun::exact::{int, rat, rational_powi};
use crate::specfun::gamma::{factorial_rational, gamma_ratio_exact, lgamma};
use crate::specfun::sum::{chained_rel_err, CompensatedSum};
use crate::specfun::ExactValue;
use crate::states::HydrogenicState;

/// Exact parts of the single-sum formula for an integer order.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleSumParts {
    pub big_f: ExactValue,
    pub f: BigRational,
    pub d: Vec<BigRational>,
}

/// Floating-point parts, with the relative error bounds of `F` and `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleSumPartsFloat {
    pub big_f: f64,
    pub big_f_rel_err: f64,
    pub f: f64,
    pub f_rel_err: f64,
    pub d: Vec<f64>,
}

pub fn single_sum_parts(state: &HydrogenicState, alpha: i64) -> Result<SingleSumParts> {
    let k = state.k() as u64;
    let nu = state.nu().to_rational();
    let two_nu = &nu * int(2);
    let up = &nu + rat(alpha + 1, 2);
    let dn = &nu + rat(3 - alpha, 2);
    let h1 = &nu + rat(1, 2);
    let h3 = &nu + rat(3, 2);

    let ratio = gamma_ratio_exact(&(int(k as i64) + &two_nu), &(&two_nu + int(1)))?;
    let big_f = ratio
        * gamma_ratio_exact(&up, &h1)?
        * gamma_ratio_exact(&dn, &h3)?
        * (int(2) * (int(k as i64) + &nu) / factorial_rational(k));

    let mut d = Vec::with_capacity(k as usize + 1);
    let mut dj = BigRational::one();
    let mut cj = BigRational::one();
    let mut f = BigRational::zero();
    for j in 0..=k {
        let term = &cj * &dj;
        if j % 2 == 0 {
            f += term;
        } else {
            f -= term;
        }
        d.push(dj.clone());
        if j == k {
            break;
        }
        let jr = int(j as i64);
        cj = cj * int((k - j) as i64) / int(j as i64 + 1) * (&two_nu + &jr + int(k as i64)) / (&two_nu + &jr);
        dj = dj * (&nu + &jr) / (&nu + &jr + int(1)) * (&up + &jr) * (&dn + &jr) / ((&h1 + &jr) * (&h3 + &jr));
    }
    Ok(SingleSumParts { big_f, f, d })
}

pub fn single_sum_exact(state: &HydrogenicState, alpha: i64) -> Result<ExactValue> {
    let parts = single_sum_parts(state, alpha)?;
    let z_eta = state.charge_rational() / state.eta().to_rational();
    Ok(parts.big_f * (parts.f * rational_powi(&z_eta, alpha)))
}

pub fn single_sum_parts_float(state: &HydrogenicState, alpha: f64) -> Result<SingleSumPartsFloat> {
    let k = state.k() as usize;
    let kf = k as f64;
    let nu = state.nu().to_f64();
    let up = nu + 0.5 * (alpha + 1.0);
    let dn = nu + 0.5 * (3.0 - alpha);

    let logs = [
        std::f64::consts::LN_2 - lgamma(kf + 1.0),
        (kf + nu).ln(),
        lgamma(kf + 2.0 * nu),
        -lgamma(2.0 * nu + 1.0),
        lgamma(up),
        lgamma(dn),
        -lgamma(nu + 0.5),
        -lgamma(nu + 1.5),
    ];
    let big_f = logs.iter().sum::<f64>().exp();
    let big_f_rel_err = 4.0 * f64::EPSILON * (1.0 + logs.iter().map(|t| t.abs()).sum::<f64>());

    let mut d = Vec::with_capacity(k + 1);
    let (mut cj, mut dj) = (1.0f64, 1.0f64);
    let mut acc = CompensatedSum::new();
    for j in 0..=k {
        let term = cj * dj;
        if !term.is_finite() {
            return Err(Error::CancellationOverflow { relative_bound: f64::INFINITY });
        }
        acc.add(if j % 2 == 0 { term } else { -term }, chained_rel_err(j, 14));
        d.push(dj);
        if j == k {
            break;
        }
        let jf = j as f64;
        cj *= (kf - jf) / (jf + 1.0) * (2.0 * nu + jf + kf) / (2.0 * nu + jf);
        dj *= (nu + jf) / (nu + jf + 1.0) * (up + jf) * (dn + jf) / ((nu + 0.5 + jf) * (nu + 1.5 + jf));
    }
    Ok(SingleSumPartsFloat {
        big_f,
        big_f_rel_err,
        f: acc.value(),
        f_rel_err: acc.relative_bound(),
        d,
    })
}

/// `(value, absolute error bound)`; rejects results swamped by cancellation.
pub fn single_sum_float(state: &HydrogenicState, alpha: f64) -> Result<(f64, f64)> {
    let parts = single_sum_parts_float(state, alpha)?;
    if !(parts.f_rel_err <= CANCELLATION_LIMIT) {
        return Err(Error::CancellationOverflow { relative_bound: parts.f_rel_err });
    }
    let scale = (state.charge() / state.eta().to_f64()).powf(alpha);
    let value = scale * parts.big_f * parts.f;
    let rel = parts.f_rel_err + parts.big_f_rel_err + 2.0 * f64::EPSILON * (1.0 + alpha.abs());
    Ok((value, value.abs() * rel))
}
