//! Position expectation values `<r^α>`.
//!
//! The general route is the terminating series
//!
//! ```text
//! <r^α> = η^(α-1) / (2^(α+1) Z^α) · Γ(2L+α+3)/Γ(2L+2)
//!         · 3F2(-k, -α-1, α+2; 2L+2, 1; 1)
//! ```
//!
//! which has `k + 1` terms for every real `α`. For integer `α` all gamma
//! arguments are integers, so exact mode produces a rational.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{self, QuadratureSpec};
use crate::specfun::exact::{int, rational_powi, rat};
use crate::specfun::gamma::{gamma_ratio_exact, lgamma};
use crate::specfun::hypsum::{hyp_sum_exact, hyp_sum_float, HypSumSpec, Param};
use crate::specfun::ExactValue;
use crate::states::{make_state, HydrogenicState, Space};

/// Relative float error bound beyond which a result is rejected.
pub const CANCELLATION_LIMIT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact for integer orders, float otherwise, quadrature if float cancels.
    Auto,
    Exact,
    Float,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    Hyp3F2,
    Hyp5F4,
    SingleSum,
    DoubleSum,
    ClosedForm,
    Reflection,
    Quadrature,
    Asymptotic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(ExactValue),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(v) => v.to_f64(),
            Value::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactValue> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Float(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentResult {
    pub value: Value,
    pub error_estimate: f64,
    pub method: Method,
    pub space: Space,
    pub alpha: f64,
    pub state: HydrogenicState,
}

impl MomentResult {
    pub fn exact(state: &HydrogenicState, space: Space, alpha: f64, method: Method, value: ExactValue) -> Self {
        MomentResult {
            value: Value::Exact(value),
            error_estimate: 0.0,
            method,
            space,
            alpha,
            state: *state,
        }
    }

    pub fn float(state: &HydrogenicState, space: Space, alpha: f64, method: Method, value: f64, error: f64) -> Self {
        MomentResult {
            value: Value::Float(value),
            error_estimate: error,
            method,
            space,
            alpha,
            state: *state,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn exact_value(&self) -> Option<&ExactValue> {
        self.value.as_exact()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.value, Value::Exact(_))
    }

    /// Relative error estimate (0 for exact values).
    pub fn relative_error(&self) -> f64 {
        let v = self.to_f64().abs();
        if v == 0.0 {
            self.error_estimate
        } else {
            self.error_estimate / v
        }
    }
}

/// `Some(m)` when `alpha` is an integer representable as `i64`.
pub fn integer_order(alpha: f64) -> Option<i64> {
    (alpha.fract() == 0.0 && alpha.abs() < 1e15).then_some(alpha as i64)
}

pub(crate) fn require_integer(alpha: f64) -> Result<i64> {
    integer_order(alpha).ok_or_else(|| Error::ExactUnavailable(format!("order {alpha} is not an integer")))
}

/// `<r^α>` with the mode policy: closed forms and exact series for integer
/// orders, float series otherwise, quadrature when the float series cancels.
pub fn r_moment(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    state.require_order(Space::Position, alpha)?;
    match mode {
        Mode::Exact => r_moment_hyp(state, alpha, Mode::Exact),
        Mode::Float => r_moment_hyp(state, alpha, Mode::Float),
        Mode::Oracle => oracle::quad_r_moment(state, alpha, &QuadratureSpec::default()),
        Mode::Auto => match integer_order(alpha) {
            Some(a) if CLOSED_ORDERS.contains(&a) => {
                r_moment_closed(state, a).or_else(|_| r_moment_hyp(state, alpha, Mode::Exact))
            }
            Some(_) => r_moment_hyp(state, alpha, Mode::Exact),
            None => match r_moment_hyp(state, alpha, Mode::Float) {
                Err(Error::CancellationOverflow { .. }) => {
                    oracle::quad_r_moment(state, alpha, &QuadratureSpec::default())
                }
                other => other,
            },
        },
    }
}

/// `<r^α>` through the hypergeometric series only (`Exact` or `Float`).
pub fn r_moment_hyp(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    state.require_order(Space::Position, alpha)?;
    let k = state.k() as i64;
    let two_l = state.big_l().twice();
    match mode {
        Mode::Exact => {
            let a = require_integer(alpha)?;
            let eta = state.eta().to_rational();
            let z = state.charge_rational();
            let spec = HypSumSpec::new(
                vec![int(-k).into(), int(-a - 1).into(), int(a + 2).into()],
                vec![int(two_l + 2).into(), int(1).into()],
            );
            let series = hyp_sum_exact(&spec)?;
            let pre = rational_powi(&eta, a - 1) / (rational_powi(&int(2), a + 1) * rational_powi(&z, a));
            let ratio = gamma_ratio_exact(&int(two_l + a + 3), &int(two_l + 2))?;
            let value = ratio * (pre * series);
            Ok(MomentResult::exact(state, Space::Position, alpha, Method::Hyp3F2, value))
        }
        Mode::Float | Mode::Auto => {
            let eta = state.eta().to_f64();
            let z = state.charge();
            let l2 = two_l as f64;
            let spec = HypSumSpec::new(
                vec![Param::Real(-(k as f64)), Param::Real(-alpha - 1.0), Param::Real(alpha + 2.0)],
                vec![Param::Real(l2 + 2.0), Param::Real(1.0)],
            );
            let sum = hyp_sum_float(&spec)?;
            let rel = sum.relative_bound();
            if !(rel <= CANCELLATION_LIMIT) {
                return Err(Error::CancellationOverflow { relative_bound: rel });
            }
            let log_terms = [
                (alpha - 1.0) * eta.ln(),
                -(alpha + 1.0) * std::f64::consts::LN_2,
                -alpha * z.ln(),
                lgamma(l2 + alpha + 3.0),
                -lgamma(l2 + 2.0),
            ];
            let log_pre: f64 = log_terms.iter().sum();
            let pre_err = 4.0 * f64::EPSILON * (1.0 + log_terms.iter().map(|t| t.abs()).sum::<f64>());
            let value = log_pre.exp() * sum.value;
            Ok(MomentResult::float(state, Space::Position, alpha, Method::Hyp3F2, value, value.abs() * (rel + pre_err)))
        }
        Mode::Oracle => oracle::quad_r_moment(state, alpha, &QuadratureSpec::default()),
    }
}

/// Orders with a tabulated closed form.
pub const CLOSED_ORDERS: [i64; 7] = [1, 2, -1, -2, -3, -4, -6];

/// Tabulated closed forms for `α ∈ {1, 2, -1, -2, -3, -4, -6}`.
pub fn r_moment_closed(state: &HydrogenicState, alpha: i64) -> Result<MomentResult> {
    if !CLOSED_ORDERS.contains(&alpha) {
        return Err(Error::UnsupportedArgument(format!("no closed form for <r^{alpha}>")));
    }
    let eta = state.eta().to_rational();
    let l = state.big_l().to_rational();
    let z = state.charge_rational();
    let eta2 = &eta * &eta;
    let llp1 = &l * (&l + int(1));

    // Denominator factors L + j/2 that must not vanish.
    let factors: &[i64] = match alpha {
        -2 => &[1],
        -3 => &[0, 1, 2],
        -4 => &[-1, 0, 1, 2, 3],
        -6 => &[-3, -2, -1, 0, 1, 2, 3, 4, 5],
        _ => &[],
    };
    for &f in factors {
        if l.clone() + rat(f, 2) == int(0) {
            return Err(Error::SingularDenominator(format!("L = {} makes <r^{alpha}> singular", state.big_l())));
        }
    }
    state.require_order(Space::Position, alpha as f64)?;
    let den_product = |fs: &[i64]| fs.iter().fold(int(1), |acc, &f| acc * (&l + rat(f, 2)));

    let value: BigRational = match alpha {
        1 => (int(3) * &eta2 - &llp1) / (int(2) * &z),
        2 => &eta2 / (int(2) * &z * &z) * (int(5) * &eta2 + int(1) - int(3) * &llp1),
        -1 => &z / &eta2,
        -2 => &z * &z / (&eta2 * &eta * den_product(factors)),
        -3 => rational_powi(&z, 3) / (&eta2 * &eta * den_product(factors)),
        -4 => rational_powi(&z, 4) * (int(3) * &eta2 - &llp1) / (int(2) * rational_powi(&eta, 5) * den_product(factors)),
        -6 => {
            let num = int(35) * &eta2 * (&eta2 - int(1)) - int(30) * &eta2 * (&l + int(2)) * (&l - int(1))
                + int(3) * (&l + int(2)) * (&l + int(1)) * &l * (&l - int(1));
            rational_powi(&z, 6) * num / (int(8) * rational_powi(&eta, 7) * den_product(factors))
        }
        _ => unreachable!(),
    };
    Ok(MomentResult::exact(state, Space::Position, alpha as f64, Method::ClosedForm, ExactValue::rational(value)))
}

/// Ground-state `<r^α> = ((D-1)/(4Z))^α Γ(D+α)/Γ(D)` for `α > -D`.
pub fn r_moment_ground(d: i64, z: f64, alpha: f64) -> Result<MomentResult> {
    let state = make_state(d, 1, 0, z)?;
    state.require_order(Space::Position, alpha)?;
    if let Some(a) = integer_order(alpha) {
        let base = int(d - 1) / (int(4) * state.charge_rational());
        let value = gamma_ratio_exact(&int(d + a), &int(d))? * rational_powi(&base, a);
        return Ok(MomentResult::exact(&state, Space::Position, alpha, Method::ClosedForm, value));
    }
    let df = d as f64;
    let logs = [alpha * ((df - 1.0) / (4.0 * z)).ln(), lgamma(df + alpha), -lgamma(df)];
    let value = logs.iter().sum::<f64>().exp();
    let err = value * 4.0 * f64::EPSILON * (1.0 + logs.iter().map(|t| t.abs()).sum::<f64>());
    Ok(MomentResult::float(&state, Space::Position, alpha, Method::ClosedForm, value, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn st(d: i64, n: i64, l: i64, z: f64) -> HydrogenicState {
        make_state(d, n, l, z).unwrap()
    }

    fn exact(v: &MomentResult) -> ExactValue {
        v.exact_value().cloned().expect("exact result")
    }

    #[test]
    fn hypergeometric_examples() {
        let r = r_moment(&st(3, 2, 1, 1.0), 1.0, Mode::Exact).unwrap();
        assert_eq!(exact(&r), ExactValue::from_integer(5));
        assert_eq!(r.method, Method::Hyp3F2);
        assert_eq!(exact(&r_moment(&st(3, 1, 0, 1.0), 2.0, Mode::Exact).unwrap()), ExactValue::from_integer(3));
        for s in [st(3, 1, 0, 1.0), st(7, 5, 2, 3.0), st(2, 4, 0, 0.5)] {
            assert_eq!(exact(&r_moment(&s, 0.0, Mode::Exact).unwrap()), ExactValue::one());
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(exact(&r_moment_closed(&st(3, 2, 1, 1.0), 2).unwrap()), ExactValue::from_integer(30));
        assert_eq!(exact(&r_moment_closed(&st(3, 2, 0, 1.0), -1).unwrap()), ExactValue::from_ratio(1, 4));
        assert_eq!(exact(&r_moment_closed(&st(3, 1, 0, 2.0), -2).unwrap()), ExactValue::from_integer(8));
        assert!(matches!(r_moment_closed(&st(3, 1, 0, 1.0), -3), Err(Error::SingularDenominator(_))));
        assert!(matches!(r_moment_closed(&st(3, 2, 1, 1.0), -6), Err(Error::SingularDenominator(_))));
        assert!(matches!(r_moment_closed(&st(3, 2, 1, 1.0), 3), Err(Error::UnsupportedArgument(_))));
    }

    #[test]
    fn ground_state_examples() {
        assert_eq!(exact(&r_moment_ground(3, 1.0, 1.0).unwrap()), ExactValue::from_ratio(3, 2));
        assert_eq!(exact(&r_moment_ground(3, 1.0, 0.0).unwrap()), ExactValue::one());
        assert_eq!(exact(&r_moment_ground(5, 1.0, -1.0).unwrap()), ExactValue::from_ratio(1, 4));
        assert!(r_moment_ground(3, 1.0, -3.0).is_err());
        let g = r_moment_ground(4, 1.5, 0.7).unwrap();
        let h = r_moment(&st(4, 1, 0, 1.5), 0.7, Mode::Float).unwrap();
        assert!((g.to_f64() / h.to_f64() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn closed_forms_match_series() {
        for d in 2..=12 {
            for n in 1..=8 {
                for l in 0..n {
                    let s = st(d, n, l, 1.0);
                    for &a in &CLOSED_ORDERS {
                        match r_moment_closed(&s, a) {
                            Ok(c) => {
                                let h = r_moment_hyp(&s, a as f64, Mode::Exact).unwrap();
                                assert_eq!(exact(&c), exact(&h), "D={d} n={n} l={l} α={a}");
                            }
                            Err(e) => assert!(e.is_domain_violation()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn float_matches_exact_for_integer_orders() {
        for (d, n, l) in [(3, 4, 1), (6, 7, 3), (2, 3, 0)] {
            let s = st(d, n, l, 1.3);
            for a in -1..6 {
                let e = r_moment(&s, a as f64, Mode::Exact).unwrap().to_f64();
                let f = r_moment(&s, a as f64, Mode::Float).unwrap();
                assert!((f.to_f64() - e).abs() <= f.error_estimate + 1e-15 * e);
            }
        }
    }

    #[test]
    fn rejects_out_of_domain_and_non_integer_exact() {
        assert!(matches!(r_moment(&st(3, 1, 0, 1.0), -3.0, Mode::Auto), Err(Error::OrderOutOfDomain { .. })));
        assert!(matches!(r_moment(&st(3, 1, 0, 1.0), 0.5, Mode::Exact), Err(Error::ExactUnavailable(_))));
    }

    proptest! {
        #[test]
        fn positive_and_cauchy_schwarz(d in 2i64..9, n in 1i64..7, lsel in 0i64..7, t in 0.0f64..1.0) {
            let l = lsel % n;
            let s = st(d, n, l, 1.0);
            let edge = (d + 2 * l) as f64;
            let alpha = t * (edge - 1e-3);
            let up = r_moment(&s, alpha, Mode::Auto).unwrap().to_f64();
            let down = r_moment(&s, -alpha, Mode::Auto).unwrap().to_f64();
            prop_assert!(up > 0.0 && down > 0.0);
            prop_assert!(up * down >= 1.0 - 1e-10);
        }
    }
}
