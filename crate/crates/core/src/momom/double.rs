//! Double-sum representation over the Gegenbauer expansion coefficients:
//!
//! ```text
//! <p^α> = 4η (Z/η)^α Γ(b+1) Γ(a+1) Γ(k+2ν) / (k! Γ(c)² Γ(2ν+2)) Σ_{i,j} A_i A_j B_{i+j}
//! A_i   = (-k)_i (k+2ν)_i / ((c)_i i!),    B_m = (a+1)_m / (2ν+2)_m
//! ```
//!
//! with `a = ν + (α-1)/2`, `b = ν - (α-1)/2`, `c = ν + 1/2`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::posmom::CANCELLATION_LIMIT;
use crate::specfun::exact::{int, rat, rational_powi};
use crate::specfun::gamma::{factorial_rational, gamma_exact, lgamma};
use crate::specfun::sum::{chained_rel_err, CompensatedSum};
use crate::specfun::ExactValue;
use crate::states::HydrogenicState;

pub fn double_sum_exact(state: &HydrogenicState, alpha: i64) -> Result<ExactValue> {
    let k = state.k() as i64;
    let nu = state.nu().to_rational();
    let two_nu = &nu * int(2);
    let c = &nu + rat(1, 2);
    let a1 = &nu + rat(alpha + 1, 2);
    let b1 = &nu + rat(3 - alpha, 2);
    let kk = int(k) + &two_nu;

    // A_i = (-k)_i (k+2ν)_i / ((c)_i i!)
    let mut a_coef = Vec::with_capacity(k as usize + 1);
    let mut acc = BigRational::one();
    for i in 0..=k {
        a_coef.push(acc.clone());
        let ir = int(i);
        acc = acc * (int(-k) + &ir) * (&kk + &ir) / ((&c + &ir) * (&ir + int(1)));
    }
    // B_m = (a+1)_m / (2ν+2)_m
    let mut b_coef = Vec::with_capacity(2 * k as usize + 1);
    let mut acc = BigRational::one();
    for m in 0..=2 * k {
        b_coef.push(acc.clone());
        let mr = int(m);
        acc = acc * (&a1 + &mr) / (&two_nu + int(2) + &mr);
    }
    let mut sum = BigRational::zero();
    for i in 0..=k as usize {
        for j in 0..=k as usize {
            sum += &a_coef[i] * &a_coef[j] * &b_coef[i + j];
        }
    }

    let eta = state.eta().to_rational();
    let z_eta = state.charge_rational() / &eta;
    let g_c = gamma_exact(&c)?;
    let pre = gamma_exact(&b1)? * gamma_exact(&a1)? * gamma_exact(&kk)?
        / (g_c.clone() * g_c * gamma_exact(&(&two_nu + int(2)))?);
    Ok(pre * (int(4) * eta * rational_powi(&z_eta, alpha) * sum / factorial_rational(k as u64)))
}

pub fn double_sum_float(state: &HydrogenicState, alpha: f64) -> Result<(f64, f64)> {
    let k = state.k() as usize;
    let kf = k as f64;
    let nu = state.nu().to_f64();
    let c = nu + 0.5;
    let a1 = nu + 0.5 * (alpha + 1.0);
    let b1 = nu + 0.5 * (3.0 - alpha);
    let kk = kf + 2.0 * nu;

    let mut a_coef = Vec::with_capacity(k + 1);
    let mut acc = 1.0f64;
    for i in 0..=k {
        a_coef.push(acc);
        let fi = i as f64;
        acc *= (fi - kf) * (kk + fi) / ((c + fi) * (fi + 1.0));
    }
    let mut b_coef = Vec::with_capacity(2 * k + 1);
    let mut acc = 1.0f64;
    for m in 0..=2 * k {
        b_coef.push(acc);
        let fm = m as f64;
        acc *= (a1 + fm) / (2.0 * nu + 2.0 + fm);
    }
    let mut sum = CompensatedSum::new();
    for i in 0..=k {
        for j in 0..=k {
            let term = a_coef[i] * a_coef[j] * b_coef[i + j];
            if !term.is_finite() {
                return Err(Error::CancellationOverflow { relative_bound: f64::INFINITY });
            }
            sum.add(term, chained_rel_err(i + j + (i + j), 6));
        }
    }
    let rel = sum.relative_bound();
    if !(rel <= CANCELLATION_LIMIT) {
        return Err(Error::CancellationOverflow { relative_bound: rel });
    }
    let eta = state.eta().to_f64();
    let logs = [
        (4.0 * eta).ln(),
        alpha * (state.charge() / eta).ln(),
        lgamma(b1),
        lgamma(a1),
        lgamma(kk),
        -2.0 * lgamma(c),
        -lgamma(2.0 * nu + 2.0),
        -lgamma(kf + 1.0),
    ];
    let value = logs.iter().sum::<f64>().exp() * sum.value();
    let pre_err = 4.0 * f64::EPSILON * (1.0 + logs.iter().map(|t| t.abs()).sum::<f64>());
    Ok((value, value.abs() * (rel + pre_err)))
}
