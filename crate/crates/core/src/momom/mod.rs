//! Momentum expectation values `<p^α>`.

pub mod integrals;
pub mod closed;
pub mod double;
pub mod hyp;
pub mod single;

pub use integrals::{gegenbauer_integrals, GegenbauerIntegrals};
pub use closed::{
    breit_pauli_moment, exchange_moment, inverse_momentum, kinetic_moment, mean_momentum, p_cubed, p_moment_circular,
    p_moment_even_closed, reflect, repulsion_moment, EVEN_ORDERS,
};
pub use single::{single_sum_parts, single_sum_parts_float, SingleSumParts, SingleSumPartsFloat};

use crate::error::{Error, Result};
use crate::oracle::{self, QuadratureSpec};
use crate::posmom::{integer_order, require_integer, Method, Mode, MomentResult};
use crate::specfun::ExactValue;
use crate::states::{HydrogenicState, Space};

/// Series representation used for `<p^α>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    SingleSum,
    Hyp5F4,
    DoubleSum,
}

impl Route {
    fn method(self) -> Method {
        match self {
            Route::SingleSum => Method::SingleSum,
            Route::Hyp5F4 => Method::Hyp5F4,
            Route::DoubleSum => Method::DoubleSum,
        }
    }

    fn exact(self, state: &HydrogenicState, alpha: i64) -> Result<ExactValue> {
        match self {
            Route::SingleSum => single::single_sum_exact(state, alpha),
            Route::Hyp5F4 => hyp::hyp5f4_exact(state, alpha),
            Route::DoubleSum => double::double_sum_exact(state, alpha),
        }
    }

    fn float(self, state: &HydrogenicState, alpha: f64) -> Result<(f64, f64)> {
        match self {
            Route::SingleSum => single::single_sum_float(state, alpha),
            Route::Hyp5F4 => hyp::hyp5f4_float(state, alpha),
            Route::DoubleSum => double::double_sum_float(state, alpha),
        }
    }
}

/// `<p^α>` through the single sum, with the mode policy of [`p_moment_route`].
pub fn p_moment(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    p_moment_route(state, alpha, mode, Route::SingleSum)
}

/// `<p^α>` through the `5F4` series.
pub fn p_moment_hyp5f4(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    p_moment_route(state, alpha, mode, Route::Hyp5F4)
}

/// `<p^α>` through the double sum; kept as an independent cross-check.
pub fn p_moment_double_sum(state: &HydrogenicState, alpha: f64, mode: Mode) -> Result<MomentResult> {
    p_moment_route(state, alpha, mode, Route::DoubleSum)
}

/// `Exact` needs an integer order. `Auto` is exact for integer orders and
/// otherwise sums in floating point, falling back to quadrature when the
/// cancellation bound exceeds the limit.
pub fn p_moment_route(state: &HydrogenicState, alpha: f64, mode: Mode, route: Route) -> Result<MomentResult> {
    state.require_order(Space::Momentum, alpha)?;
    let exact = |a: i64| {
        let v = route.exact(state, a)?;
        Ok(MomentResult::exact(state, Space::Momentum, alpha, route.method(), v))
    };
    let float = || {
        let (v, e) = route.float(state, alpha)?;
        Ok(MomentResult::float(state, Space::Momentum, alpha, route.method(), v, e))
    };
    match mode {
        Mode::Exact => exact(require_integer(alpha)?),
        Mode::Float => float(),
        Mode::Oracle => oracle::quad_p_moment(state, alpha, &QuadratureSpec::default()),
        Mode::Auto => match integer_order(alpha) {
            Some(a) => exact(a),
            None => match float() {
                Err(Error::CancellationOverflow { .. }) => {
                    oracle::quad_p_moment(state, alpha, &QuadratureSpec::default())
                }
                other => other,
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::exact::rat;
    use crate::states::make_state;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn exact(s: &HydrogenicState, a: i64) -> ExactValue {
        p_moment(s, a as f64, Mode::Exact).unwrap().exact_value().unwrap().clone()
    }

    #[test]
    fn examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!(exact(&h, -2), ExactValue::from_integer(5));
        assert_eq!(exact(&h, 0), ExactValue::one());
        let c = make_state(3, 2, 1, 1.0).unwrap();
        assert_eq!(exact(&c, 6), ExactValue::from_ratio(21, 64));
        assert!(matches!(p_moment(&h, 5.0, Mode::Auto), Err(Error::OrderOutOfDomain { .. })));
        assert!(matches!(p_moment(&h, -3.0, Mode::Auto), Err(Error::OrderOutOfDomain { .. })));
        assert!(matches!(p_moment(&h, 0.5, Mode::Exact), Err(Error::ExactUnavailable(_))));
    }

    #[test]
    fn single_sum_parts_invariants() {
        let s = make_state(5, 4, 1, 1.0).unwrap();
        let parts = single_sum_parts(&s, 3).unwrap();
        assert_eq!(parts.d[0], rat(1, 1));
        assert_eq!(parts.d.len(), 3);
        let g = single_sum_parts(&make_state(4, 3, 2, 1.0).unwrap(), -1).unwrap();
        assert_eq!(g.f, rat(1, 1));
    }

    #[test]
    fn even_closed_examples() {
        let s = make_state(3, 5, 2, 1.0).unwrap();
        assert_eq!(p_moment_even_closed(&s, 2).unwrap().exact_value().unwrap(), &ExactValue::from_ratio(1, 25));
        let h = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!(p_moment_even_closed(&h, 4).unwrap().exact_value().unwrap(), &ExactValue::from_integer(5));
        assert!(matches!(p_moment_even_closed(&h, 6), Err(Error::OrderOutOfDomain { .. })));
    }

    #[test]
    fn even_closed_forms_match_series() {
        for d in 2..=10 {
            for n in 1..=6 {
                for l in 0..n {
                    let s = make_state(d, n, l, 1.0).unwrap();
                    for a in EVEN_ORDERS {
                        if let Ok(c) = p_moment_even_closed(&s, a) {
                            assert_eq!(c.exact_value().unwrap(), &exact(&s, a), "D={d} n={n} l={l} a={a}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn routes_agree_exactly() {
        for d in 2..=10 {
            for n in 1..=6 {
                for l in 0..n {
                    let s = make_state(d, n, l, 1.0).unwrap();
                    let lo = -(d + 2 * l) + 1;
                    let hi = d + 2 * l + 1;
                    for a in lo..=hi {
                        let single = exact(&s, a);
                        let hyp = p_moment_hyp5f4(&s, a as f64, Mode::Exact).unwrap();
                        let dbl = p_moment_double_sum(&s, a as f64, Mode::Exact).unwrap();
                        assert_eq!(hyp.exact_value().unwrap(), &single, "5F4 D={d} n={n} l={l} a={a}");
                        assert_eq!(dbl.exact_value().unwrap(), &single, "double D={d} n={n} l={l} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let r = reflect(&h, 4.0, Mode::Exact).unwrap();
        assert_eq!(r.alpha, -2.0);
        assert_eq!(r.exact_value().unwrap(), &ExactValue::from_integer(5));
        let cube = p_cubed(&h).unwrap();
        assert_eq!(cube.exact_value().unwrap(), &ExactValue::new(rat(16, 3), -2));
        assert_eq!(cube.exact_value().unwrap(), &exact(&h, 3));
        let s = make_state(4, 3, 1, 2.0).unwrap();
        assert_eq!(reflect(&s, 1.0, Mode::Exact).unwrap().exact_value(), Some(&exact(&s, 1)));
    }

    #[test]
    fn circular_examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!(p_moment_circular(&h, 1.0).unwrap().exact_value().unwrap(), &ExactValue::new(rat(8, 3), -2));
        let c = make_state(3, 2, 1, 1.0).unwrap();
        assert_eq!(p_moment_circular(&c, 6.0).unwrap().exact_value().unwrap(), &ExactValue::from_ratio(21, 64));
        assert!(matches!(p_moment_circular(&make_state(3, 2, 0, 1.0).unwrap(), 1.0), Err(Error::NotCircular { .. })));
        for d in 2..=9 {
            for n in 1..=7 {
                let s = make_state(d, n, n - 1, 1.5).unwrap();
                let c = p_moment_circular(&s, 2.0).unwrap();
                let expected = (1.5 / s.eta().to_f64()).powi(2);
                assert!((c.to_f64() - expected).abs() < 1e-14 * expected);
                for a in -(d + 2 * n - 2) + 1..d + 2 * n {
                    assert_eq!(p_moment_circular(&s, a as f64).unwrap().exact_value().unwrap(), &exact(&s, a));
                }
            }
        }
    }

    #[test]
    fn mean_and_inverse_examples() {
        let value = |r: Result<MomentResult>| r.unwrap().exact_value().unwrap().clone();
        let h = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!(value(mean_momentum(&h)), ExactValue::new(rat(8, 3), -2));
        assert!((mean_momentum(&h).unwrap().to_f64() - 0.848_826_363_156_775_4).abs() < 1e-15);
        assert_eq!(value(inverse_momentum(&h)), ExactValue::new(rat(16, 3), -2));
        let s2 = make_state(3, 2, 0, 1.0).unwrap();
        assert_eq!(value(mean_momentum(&s2)), ExactValue::new(rat(16, 15), -2));
        assert_eq!(value(inverse_momentum(&s2)), ExactValue::new(rat(256, 15), -2));
        let p2 = make_state(3, 2, 1, 1.0).unwrap();
        assert_eq!(value(mean_momentum(&p2)), ExactValue::new(rat(64, 45), -2));
        assert_eq!(value(inverse_momentum(&p2)), ExactValue::new(rat(128, 15), -2));
        let s3 = make_state(3, 3, 0, 1.0).unwrap();
        assert_eq!(value(inverse_momentum(&s3)), ExactValue::new(rat(12 * 268, 105), -2));
    }

    #[test]
    fn specializations_cross_checked() {
        for n in 1..=10 {
            for z in [1.0, 2.0, 3.5] {
                let s = make_state(3, n, 0, z).unwrap();
                assert_eq!(mean_momentum(&s).unwrap().method, Method::ClosedForm);
                assert_eq!(inverse_momentum(&s).unwrap().method, Method::ClosedForm);
            }
        }
        for d in 2..=8 {
            for n in 1..=6 {
                let s = make_state(d, n, n - 1, 1.0).unwrap();
                assert!(mean_momentum(&s).is_ok());
                assert!(inverse_momentum(&s).is_ok());
            }
        }
    }

    #[test]
    fn mean_momentum_matches_quadrature() {
        for (d, n, l) in [(3, 2, 0), (3, 2, 1), (4, 5, 2), (7, 6, 0)] {
            let s = make_state(d, n, l, 1.0).unwrap();
            let q = oracle::quad_p_moment(&s, 1.0, &QuadratureSpec::adaptive(1e-13)).unwrap().to_f64();
            let m = mean_momentum(&s).unwrap().to_f64();
            assert!((q - m).abs() < 1e-12 * m, "D={d} n={n} l={l}: {q} vs {m}");
        }
    }

    #[test]
    fn aliases() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!(kinetic_moment(&h).unwrap().exact_value().unwrap(), &ExactValue::one());
        assert_eq!(breit_pauli_moment(&h).unwrap().exact_value().unwrap(), &ExactValue::from_integer(5));
        assert_eq!(repulsion_moment(&h).unwrap().exact_value(), p_cubed(&h).unwrap().exact_value());
        assert_eq!(exchange_moment(&h).unwrap().exact_value(), mean_momentum(&h).unwrap().exact_value());
    }

    #[test]
    fn float_routes_match_exact() {
        for d in [2, 3, 6] {
            for n in 1..=8 {
                for l in 0..n {
                    let s = make_state(d, n, l, 1.0).unwrap();
                    for a in [-1, 1, 2, 3] {
                        let e = exact(&s, a).to_f64();
                        for route in [Route::SingleSum, Route::Hyp5F4, Route::DoubleSum] {
                            let f = match p_moment_route(&s, a as f64, Mode::Float, route) {
                                Err(Error::CancellationOverflow { relative_bound }) => {
                                    assert!(n > 4, "{route:?} D={d} n={n} l={l} a={a}: {relative_bound}");
                                    continue;
                                }
                                other => other.unwrap(),
                            };
                            assert!((f.to_f64() - e).abs() <= f.error_estimate.max(1e-13 * e), "{route:?} D={d} n={n} l={l} a={a}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn large_k_falls_back_to_quadrature() {
        let s = make_state(3, 160, 0, 1.0).unwrap();
        let r = p_moment(&s, 0.5, Mode::Auto).unwrap();
        assert_eq!(r.method, Method::Quadrature);
        let sq = p_moment(&s, 2.0, Mode::Exact).unwrap().to_f64();
        assert!((sq - 1.0 / (160.0f64 * 160.0)).abs() < 1e-18);
    }

    #[test]
    fn ground_state_three_d_inverse() {
        let h = make_state(3, 1, 0, 2.0).unwrap();
        let v = inverse_momentum(&h).unwrap().to_f64();
        assert!((v - 16.0 / (3.0 * PI * 2.0)).abs() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_real_orders_agree_with_quadrature(d in 2i64..=10, n in 1i64..=6, lf in 0.0f64..1.0, t in 0.001f64..0.999) {
            let l = ((n as f64) * lf) as i64;
            let s = make_state(d, n, l, 1.0).unwrap();
            let lo = -(d + 2 * l) as f64;
            let hi = (d + 2 * l + 2) as f64;
            let alpha = lo + (hi - lo) * t;
            let q = oracle::quad_p_moment(&s, alpha, &QuadratureSpec::default()).unwrap().to_f64();
            for route in [Route::SingleSum, Route::Hyp5F4, Route::DoubleSum] {
                let v = p_moment_route(&s, alpha, Mode::Auto, route).unwrap().to_f64();
                prop_assert!(v > 0.0);
                prop_assert!((v - q).abs() <= 1e-10 * q, "{:?} {} vs {}", route, v, q);
            }
        }

        #[test]
        fn reflection_is_consistent(d in 2i64..=8, n in 1i64..=6, lf in 0.0f64..1.0, t in 0.001f64..0.999) {
            let l = ((n as f64) * lf) as i64;
            let s = make_state(d, n, l, 1.7).unwrap();
            let lo = -(d + 2 * l) as f64;
            let hi = (d + 2 * l + 2) as f64;
            let alpha = lo + (hi - lo) * t;
            let direct = p_moment(&s, 2.0 - alpha, Mode::Auto).unwrap().to_f64();
            let reflected = reflect(&s, alpha, Mode::Auto).unwrap().to_f64();
            prop_assert!((direct - reflected).abs() <= 1e-11 * direct);
        }
    }
}
