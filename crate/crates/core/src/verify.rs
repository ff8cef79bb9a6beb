//! Verification suites: cross-route agreement, reflection, oracle
//! agreement, asymptotic convergence and uncertainty inequalities.
//!
//! Every suite returns a [`SuiteReport`]; hard failures are listed in
//! `failures`, soft-check violations in `findings`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::asympt::{self, InverseFamily};
use crate::error::{Error, Result};
use crate::momom::{p_moment, p_moment_route, reflect, Route};
use crate::oracle::{self, QuadratureSpec, RadialFunctions};
use crate::posmom::{r_moment, r_moment_closed, r_moment_hyp, Mode, CLOSED_ORDERS};
use crate::specfun::ExactValue;
use crate::states::{make_state, HydrogenicState, Space};
use crate::uncertainty::{self, fermion_constant, BoundName, InequalityReport, Orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Routes,
    Reflection,
    Oracle,
    Asymptotics,
    Uncertainty,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Routes, Suite::Reflection, Suite::Oracle, Suite::Asymptotics, Suite::Uncertainty];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Reflection => "reflection",
            Suite::Oracle => "oracle",
            Suite::Asymptotics => "asymptotics",
            Suite::Uncertainty => "uncertainty",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridSize {
    Small,
    Medium,
    Full,
}

/// The set of states and random cases a suite sweeps over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub d_min: u32,
    pub d_max: u32,
    pub n_max: u32,
    pub charges: Vec<f64>,
    pub random_cases: usize,
    pub seed: u64,
}

impl Grid {
    pub fn of(size: GridSize) -> Grid {
        match size {
            GridSize::Small => Grid { d_min: 2, d_max: 5, n_max: 4, charges: vec![1.0], random_cases: 50, seed: 1 },
            GridSize::Medium => Grid { d_min: 2, d_max: 10, n_max: 6, charges: vec![1.0, 2.0], random_cases: 200, seed: 1 },
            GridSize::Full => Grid { d_min: 2, d_max: 12, n_max: 8, charges: vec![1.0, 2.0], random_cases: 500, seed: 1 },
        }
    }

    /// All states in lexicographic `(D, n, l, Z)` order.
    pub fn states(&self) -> Vec<HydrogenicState> {
        let mut out = Vec::new();
        for d in self.d_min..=self.d_max {
            for n in 1..=self.n_max {
                for l in 0..n {
                    for &z in &self.charges {
                        out.push(make_state(d as i64, n as i64, l as i64, z).expect("grid states are valid"));
                    }
                }
            }
        }
        out
    }

    /// The grid clipped to the uncertainty verification range `D ≤ 10, n ≤ 6`.
    pub fn uncertainty_grid(&self) -> Grid {
        Grid { d_max: self.d_max.min(10), n_max: self.n_max.min(6), ..self.clone() }
    }

    /// Deterministic `(state, α)` pairs with α drawn uniformly inside the
    /// state's domain for `space`, away from the endpoints by 0.1% of its width.
    pub fn random_orders(&self, space: Space) -> Vec<(HydrogenicState, f64)> {
        let states = self.states();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.random_cases)
            .map(|_| {
                let s = states[rng.gen_range(0..states.len())];
                let dom = s.domain(space);
                let hi = dom.upper.unwrap_or(dom.lower + 12.0);
                let t: f64 = rng.gen_range(0.001..0.999);
                (s, dom.lower + (hi - dom.lower) * t)
            })
            .collect()
    }
}

/// Running totals of one suite.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Tally {
    pub checks: usize,
    pub failed: usize,
    #[serde(with = "crate::record::decimal")]
    pub worst_deviation: f64,
    pub worst_case: String,
    /// Tightest `lhs/rhs` (lower bounds) or `rhs/lhs` (upper bounds) over hard inequality checks.
    #[serde(skip_serializing_if = "Option::is_none", default, with = "crate::record::decimal::option")]
    pub tightest_margin: Option<f64>,
    pub failures: Vec<String>,
    pub findings: Vec<String>,
}

impl Tally {
    /// Records `deviation <= tol` as a hard check.
    pub fn check(&mut self, deviation: f64, tol: f64, label: impl FnOnce() -> String) {
        self.checks += 1;
        let worse = deviation.is_nan() || deviation > self.worst_deviation;
        let ok = deviation <= tol;
        if worse || !ok {
            let label = label();
            if worse && !self.worst_deviation.is_nan() {
                self.worst_deviation = deviation;
                self.worst_case = label.clone();
            }
            if !ok {
                self.failed += 1;
                self.failures.push(format!("{label}: deviation {deviation:.3e} exceeds {tol:.1e}"));
            }
        }
    }

    /// Records a pass/fail assertion that has no natural deviation.
    pub fn assert(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            self.failures.push(label());
        }
    }

    pub fn error(&mut self, label: impl FnOnce() -> String, err: &Error) {
        self.checks += 1;
        self.failed += 1;
        self.failures.push(format!("{}: {err}", label()));
    }

    pub fn finding(&mut self, text: String) {
        self.findings.push(text);
    }

    fn inequality(&mut self, rep: &InequalityReport) {
        let margin = match rep.orientation {
            Orientation::Lower => rep.lhs / rep.rhs,
            Orientation::Upper => rep.rhs / rep.lhs,
        };
        if rep.name.is_rigorous() {
            self.checks += 1;
            if self.tightest_margin.map_or(true, |m| margin < m) {
                self.tightest_margin = Some(margin);
            }
            if !rep.satisfied {
                self.failed += 1;
                self.failures.push(describe(rep));
            }
        } else if !rep.satisfied {
            self.findings.push(describe(rep));
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failed += other.failed;
        if (other.worst_deviation.is_nan() || other.worst_deviation > self.worst_deviation) && !self.worst_deviation.is_nan() {
            self.worst_deviation = other.worst_deviation;
            self.worst_case = other.worst_case;
        }
        self.tightest_margin = match (self.tightest_margin, other.tightest_margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn describe(rep: &InequalityReport) -> String {
    let s = &rep.state;
    let rel = match rep.orientation {
        Orientation::Lower => ">=",
        Orientation::Upper => "<=",
    };
    format!(
        "{:?} D={} n={} l={} {}: {:.6e} {rel} {:.6e} {}",
        rep.name,
        s.dim(),
        s.n(),
        s.l(),
        params_label(rep),
        rep.lhs,
        rep.rhs,
        if rep.satisfied { "holds" } else { "violated" }
    )
}

fn params_label(rep: &InequalityReport) -> String {
    let p = &rep.params;
    let mut parts = Vec::new();
    for (name, v) in [("a", p.a), ("b", p.b), ("alpha", p.alpha), ("k", p.k)] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    parts.join(",")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    #[serde(flatten)]
    pub tally: Tally,
}

impl SuiteReport {
    fn new(suite: Suite, tally: Tally) -> Self {
        SuiteReport { suite, passed: tally.passed(), tally }
    }
}

pub fn run(suite: Suite, grid: &Grid) -> SuiteReport {
    let tally = match suite {
        Suite::Routes => {
            let mut t = routes_exact(grid);
            t.merge(position_routes_exact(grid));
            t.merge(routes_random(grid));
            t.merge(reflection_random(grid));
            t
        }
        Suite::Reflection => reflection_exact(grid),
        Suite::Oracle => {
            let mut t = oracle_random(grid);
            t.merge(normalizations(grid));
            t.merge(entropic_normalization(grid));
            t.merge(exact_float_consistency(grid));
            t
        }
        Suite::Asymptotics => asymptotics(),
        Suite::Uncertainty => uncertainty_suite(&grid.uncertainty_grid()),
    };
    SuiteReport::new(suite, tally)
}

fn map_merge<T: Sync, F: Fn(&T) -> Tally + Sync + Send>(items: &[T], f: F) -> Tally {
    #[cfg(feature = "parallel")]
    let parts: Vec<Tally> = {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Tally> = items.iter().map(f).collect();
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    total
}

fn label(s: &HydrogenicState, space: &str, alpha: f64) -> String {
    format!("D={} n={} l={} Z={} <{space}^{alpha}>", s.dim(), s.n(), s.l(), s.charge())
}

fn exact_deviation(a: &ExactValue, b: &ExactValue) -> f64 {
    if a == b {
        0.0
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        ((x - y) / y).abs().max(f64::MIN_POSITIVE)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Integer orders strictly inside the open interval `(lo, hi)`.
fn integer_orders(s: &HydrogenicState, space: Space) -> Vec<i64> {
    let dom = s.domain(space);
    let hi = dom.upper.unwrap_or(dom.lower + 12.0);
    ((dom.lower.floor() as i64 + 1)..(hi.ceil() as i64)).filter(|&a| dom.contains(a as f64)).collect()
}

/// Single sum, ₅F₄ and double sum agree exactly for every integer order.
pub fn routes_exact(grid: &Grid) -> Tally {
    map_merge(&grid.states(), |s| {
        let mut t = Tally::default();
        for a in integer_orders(s, Space::Momentum) {
            let alpha = a as f64;
            let vals: Vec<_> = [Route::SingleSum, Route::Hyp5F4, Route::DoubleSum]
                .iter()
                .map(|&r| p_moment_route(s, alpha, Mode::Exact, r))
                .collect();
            match (&vals[0], &vals[1], &vals[2]) {
                (Ok(x), Ok(y), Ok(z)) => {
                    let (x, y, z) = (x.exact_value().unwrap(), y.exact_value().unwrap(), z.exact_value().unwrap());
                    t.check(exact_deviation(y, x).max(exact_deviation(z, x)), 0.0, || label(s, "p", alpha));
                }
                _ => {
                    let err = vals.into_iter().find_map(|v| v.err()).unwrap();
                    t.error(|| label(s, "p", alpha), &err);
                }
            }
        }
        t
    })
}

/// The ₃F₂ series agrees exactly with each closed position form where both exist.
pub fn position_routes_exact(grid: &Grid) -> Tally {
    map_merge(&grid.states(), |s| {
        let mut t = Tally::default();
        for a in CLOSED_ORDERS {
            let (Ok(closed), Ok(hyp)) = (r_moment_closed(s, a), r_moment_hyp(s, a as f64, Mode::Exact)) else {
                continue;
            };
            t.check(exact_deviation(hyp.exact_value().unwrap(), closed.exact_value().unwrap()), 0.0, || {
                label(s, "r", a as f64)
            });
        }
        t
    })
}

/// Every momentum route at random real orders against Gauss–Jacobi quadrature.
pub fn routes_random(grid: &Grid) -> Tally {
    let cases = grid.random_orders(Space::Momentum);
    map_merge(&cases, |(s, alpha)| {
        let mut t = Tally::default();
        let q = match oracle::quad_p_moment(s, *alpha, &QuadratureSpec::default()) {
            Ok(q) => q.to_f64(),
            Err(e) => {
                t.error(|| label(s, "p", *alpha), &e);
                return t;
            }
        };
        for route in [Route::SingleSum, Route::Hyp5F4, Route::DoubleSum] {
            match p_moment_route(s, *alpha, Mode::Auto, route) {
                Ok(v) => t.check(rel(v.to_f64(), q), 1e-10, || format!("{} via {route:?}", label(s, "p", *alpha))),
                Err(e) => t.error(|| format!("{} via {route:?}", label(s, "p", *alpha)), &e),
            }
        }
        t
    })
}

/// `(η/Z)^{2-α}<p^{2-α}> = (η/Z)^α<p^α>` exactly for integer orders.
pub fn reflection_exact(grid: &Grid) -> Tally {
    map_merge(&grid.states(), |s| {
        let mut t = Tally::default();
        let dom = s.domain(Space::Momentum);
        for a in integer_orders(s, Space::Momentum) {
            if !dom.contains((2 - a) as f64) {
                continue;
            }
            let alpha = a as f64;
            match (reflect(s, alpha, Mode::Exact), p_moment(s, 2.0 - alpha, Mode::Exact)) {
                (Ok(r), Ok(d)) => t.check(exact_deviation(r.exact_value().unwrap(), d.exact_value().unwrap()), 0.0, || {
                    label(s, "p", 2.0 - alpha)
                }),
                (Err(e), _) | (_, Err(e)) => t.error(|| label(s, "p", 2.0 - alpha), &e),
            }
        }
        t
    })
}

pub fn reflection_random(grid: &Grid) -> Tally {
    let cases = grid.random_orders(Space::Momentum);
    map_merge(&cases, |(s, alpha)| {
        let mut t = Tally::default();
        match (reflect(s, *alpha, Mode::Auto), p_moment(s, 2.0 - alpha, Mode::Auto)) {
            (Ok(r), Ok(d)) => t.check(rel(r.to_f64(), d.to_f64()), 1e-10, || label(s, "p", 2.0 - alpha)),
            (Err(e), _) | (_, Err(e)) => t.error(|| label(s, "p", 2.0 - alpha), &e),
        }
        t
    })
}

/// Library values at random real orders against adaptive quadrature over
/// the explicit wavefunctions, in both spaces.
pub fn oracle_random(grid: &Grid) -> Tally {
    let mut cases: Vec<(HydrogenicState, Space, f64)> =
        grid.random_orders(Space::Position).into_iter().map(|(s, a)| (s, Space::Position, a)).collect();
    let mut g = grid.clone();
    g.seed = grid.seed.wrapping_add(1);
    cases.extend(g.random_orders(Space::Momentum).into_iter().map(|(s, a)| (s, Space::Momentum, a)));
    let spec = QuadratureSpec::adaptive(1e-13);
    map_merge(&cases, |&(s, space, alpha)| {
        let mut t = Tally::default();
        let (lib, quad, tag) = match space {
            Space::Position => (r_moment(&s, alpha, Mode::Auto), oracle::quad_r_moment(&s, alpha, &spec), "r"),
            Space::Momentum => (p_moment(&s, alpha, Mode::Auto), oracle::quad_p_moment(&s, alpha, &spec), "p"),
        };
        match (lib, quad) {
            (Ok(v), Ok(q)) => t.check(rel(v.to_f64(), q.to_f64()), 1e-10, || label(&s, tag, alpha)),
            (Err(e), _) | (_, Err(e)) => t.error(|| label(&s, tag, alpha), &e),
        }
        t
    })
}

/// Position and momentum wavefunctions integrate to 1.
pub fn normalizations(grid: &Grid) -> Tally {
    let states: Vec<_> = grid.states().into_iter().filter(|s| s.charge() == grid.charges[0]).collect();
    map_merge(&states, |s| {
        let mut t = Tally::default();
        match RadialFunctions::new(s) {
            Ok(rf) => {
                for (tag, v) in [("norm r", rf.normalization_position()), ("norm p", rf.normalization_momentum())] {
                    match v {
                        Ok(v) => t.check((v - 1.0).abs(), 1e-12, || label(s, tag, 0.0)),
                        Err(e) => t.error(|| label(s, tag, 0.0), &e),
                    }
                }
            }
            Err(e) => t.error(|| label(s, "norm", 0.0), &e),
        }
        t
    })
}

/// `W₁[ρ] = 1` for every S-wave state.
pub fn entropic_normalization(grid: &Grid) -> Tally {
    let states: Vec<_> = grid.states().into_iter().filter(|s| s.l() == 0).collect();
    map_merge(&states, |s| {
        let mut t = Tally::default();
        match oracle::entropic_moment(s, 1.0) {
            Ok(w) => t.check((w - 1.0).abs(), 1e-10, || format!("W_1 D={} n={} Z={}", s.dim(), s.n(), s.charge())),
            Err(e) => t.error(|| format!("W_1 D={} n={}", s.dim(), s.n()), &e),
        }
        t
    })
}

/// Exact results agree with float-mode evaluation within the float error bound.
pub fn exact_float_consistency(grid: &Grid) -> Tally {
    map_merge(&grid.states(), |s| {
        let mut t = Tally::default();
        for space in [Space::Position, Space::Momentum] {
            for a in integer_orders(s, space) {
                let alpha = a as f64;
                let (ex, fl) = match space {
                    Space::Position => (r_moment(s, alpha, Mode::Exact), r_moment(s, alpha, Mode::Float)),
                    Space::Momentum => (p_moment(s, alpha, Mode::Exact), p_moment(s, alpha, Mode::Float)),
                };
                let tag = if space == Space::Position { "r" } else { "p" };
                match (ex, fl) {
                    (Ok(e), Ok(f)) => {
                        let x = e.to_f64();
                        let bound = f.error_estimate + 4.0 * f64::EPSILON * x.abs();
                        t.assert((x - f.to_f64()).abs() <= bound, || {
                            format!("{}: exact {x:e} vs float {:e} ± {:e}", label(s, tag, alpha), f.to_f64(), f.error_estimate)
                        });
                    }
                    (Err(Error::SingularDenominator(_)), _) => {}
                    // Float routes may refuse on cancellation; exact is still checked elsewhere.
                    (Ok(_), Err(Error::CancellationOverflow { .. })) => {}
                    (Err(e), _) | (_, Err(e)) => t.error(|| label(s, tag, alpha), &e),
                }
            }
        }
        t
    })
}

/// Which member of a Rydberg or high-D comparison sequence to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `l = 0`.
    NS,
    /// `l = n − 1`.
    Circular,
}

/// One row of an exact-versus-asymptotic comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LimitRow {
    /// `n` for Rydberg sequences, `D` for high-D sequences.
    pub parameter: u32,
    #[serde(with = "crate::record::decimal")]
    pub exact: f64,
    #[serde(with = "crate::record::decimal")]
    pub leading: f64,
    #[serde(with = "crate::record::decimal")]
    pub corrected: f64,
    /// `exact/leading − 1`.
    #[serde(with = "crate::record::decimal")]
    pub leading_deviation: f64,
    /// `exact/corrected − 1`.
    #[serde(with = "crate::record::decimal")]
    pub corrected_deviation: f64,
}

impl LimitRow {
    fn new(parameter: u32, exact: f64, leading: f64, corrected: f64) -> Self {
        LimitRow {
            parameter,
            exact,
            leading,
            corrected,
            leading_deviation: exact / leading - 1.0,
            corrected_deviation: exact / corrected - 1.0,
        }
    }
}

fn exact_moment(s: &HydrogenicState, space: Space, alpha: f64) -> Result<f64> {
    Ok(match space {
        Space::Position => r_moment(s, alpha, Mode::Auto)?,
        Space::Momentum => p_moment(s, alpha, Mode::Auto)?,
    }
    .to_f64())
}

/// Exact moment of the `n`-th member of `family` in dimension `d` against its
/// Rydberg estimate. Momentum nS uses the general `(−1, 3)` estimate, or the
/// inverse-momentum estimate at `α = −1`; momentum circular uses the corrected
/// circular form.
pub fn rydberg_row(space: Space, family: Family, alpha: f64, d: u32, n: u32, z: f64) -> Result<LimitRow> {
    let l = match family {
        Family::NS => 0,
        Family::Circular => n - 1,
    };
    let s = make_state(d as i64, n as i64, l as i64, z)?;
    let est = match (space, family) {
        (Space::Position, _) => asympt::rydberg_r(alpha, &s)?,
        (Space::Momentum, Family::NS) if alpha == -1.0 => asympt::rydberg_inverse_p(n, z, InverseFamily::NS),
        (Space::Momentum, Family::NS) => asympt::rydberg_p(alpha, n, z)?,
        (Space::Momentum, Family::Circular) if alpha == -1.0 => asympt::rydberg_inverse_p(n, z, InverseFamily::Circular),
        (Space::Momentum, Family::Circular) => asympt::rydberg_circular_p(alpha, n, z),
    };
    let exact = exact_moment(&s, space, alpha)?;
    Ok(LimitRow::new(n, exact, est.leading, est.corrected))
}

/// Exact moment of `(D, n, l)` against the high-D estimate.
pub fn high_d_row(space: Space, alpha: f64, d: u32, n: u32, l: u32, z: f64) -> Result<LimitRow> {
    let s = make_state(d as i64, n as i64, l as i64, z)?;
    let est = asympt::high_d(alpha, &s, space)?;
    let exact = exact_moment(&s, space, alpha)?;
    Ok(LimitRow::new(d, exact, est.leading, est.corrected))
}

/// Least-squares slope of `ln|y|` against `ln x`; NaN when any `y` is zero
/// or not finite.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    if points.len() < 2 || points.iter().any(|&(_, y)| !(y.abs() > 0.0) || !y.is_finite()) {
        return f64::NAN;
    }
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.abs().ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// A fitted convergence order with the deviations it was fitted to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Convergence {
    pub label: String,
    #[serde(with = "crate::record::decimal")]
    pub slope: f64,
    #[serde(with = "crate::record::decimal")]
    pub expected: f64,
    #[serde(with = "crate::record::decimal")]
    pub tolerance: f64,
    pub deviations: Vec<(u32, f64)>,
    /// Every deviation is at rounding level, so no rate can be fitted and
    /// the estimate is exact along the sequence.
    pub exact_agreement: bool,
}

/// Deviations at or below this are treated as rounding noise.
pub const EXACT_AGREEMENT: f64 = 1e-13;

impl Convergence {
    pub fn passed(&self) -> bool {
        self.exact_agreement || (self.slope - self.expected).abs() <= self.tolerance
    }
}

pub const RYDBERG_NS: [u32; 4] = [20, 40, 80, 160];
pub const HIGH_D: [u32; 4] = [16, 32, 64, 128];

fn convergence(label: String, expected: f64, tolerance: f64, rows: Result<Vec<LimitRow>>, corrected: bool) -> Result<Convergence> {
    let rows = rows?;
    let deviations: Vec<(u32, f64)> =
        rows.iter().map(|r| (r.parameter, if corrected { r.corrected_deviation } else { r.leading_deviation })).collect();
    let pts: Vec<(f64, f64)> = deviations.iter().map(|&(p, y)| (p as f64, y)).collect();
    let exact_agreement = deviations.iter().all(|&(_, y)| y.abs() <= EXACT_AGREEMENT);
    Ok(Convergence { label, slope: loglog_slope(&pts), expected, tolerance, deviations, exact_agreement })
}

/// nS momentum moments against the leading Rydberg estimate, `D = 3`.
pub fn rydberg_ns_convergence(alpha: f64) -> Result<Convergence> {
    let rows = RYDBERG_NS.iter().map(|&n| rydberg_row(Space::Momentum, Family::NS, alpha, 3, n, 1.0)).collect();
    convergence(format!("Rydberg nS <p^{alpha}> leading"), -1.0, 0.2, rows, false)
}

/// Circular momentum moments against the corrected circular estimate, `D = 3`.
pub fn rydberg_circular_convergence(alpha: f64) -> Result<Convergence> {
    let rows = RYDBERG_NS.iter().map(|&n| rydberg_row(Space::Momentum, Family::Circular, alpha, 3, n, 1.0)).collect();
    convergence(format!("Rydberg circular <p^{alpha}> corrected"), -2.0, 0.3, rows, true)
}

/// Fixed `(n, l)` moments against the corrected high-D estimate.
pub fn high_d_convergence(space: Space, alpha: f64, n: u32, l: u32) -> Result<Convergence> {
    let rows = HIGH_D.iter().map(|&d| high_d_row(space, alpha, d, n, l, 1.0)).collect();
    let tag = if space == Space::Position { "r" } else { "p" };
    convergence(format!("high-D (n={n},l={l}) <{tag}^{alpha}> corrected"), -2.0, 0.3, rows, true)
}

pub const RYDBERG_ALPHAS: [f64; 3] = [0.5, 2.0, 2.5];
pub const CIRCULAR_ALPHAS: [f64; 4] = [0.5, 1.0, 2.0, 2.5];
pub const HIGH_D_ALPHAS: [f64; 3] = [1.0, 2.0, 3.0];
pub const HIGH_D_STATES: [(u32, u32); 3] = [(1, 0), (2, 1), (3, 0)];

/// Every convergence sequence the asymptotics suite checks.
pub fn convergence_table() -> Vec<Result<Convergence>> {
    let mut out: Vec<Result<Convergence>> = RYDBERG_ALPHAS.iter().map(|&a| rydberg_ns_convergence(a)).collect();
    out.extend(CIRCULAR_ALPHAS.iter().map(|&a| rydberg_circular_convergence(a)));
    for space in [Space::Position, Space::Momentum] {
        for &a in &HIGH_D_ALPHAS {
            for &(n, l) in &HIGH_D_STATES {
                out.push(high_d_convergence(space, a, n, l));
            }
        }
    }
    out
}

pub fn asymptotics() -> Tally {
    let mut t = Tally::default();
    for c in convergence_table() {
        match c {
            Ok(c) => {
                let dev = if c.exact_agreement { 0.0 } else { (c.slope - c.expected).abs() };
                let dev = if dev.is_nan() { f64::INFINITY } else { dev };
                t.check(dev, c.tolerance, || format!("{} slope {:.3} (expected {} ± {})", c.label, c.slope, c.expected, c.tolerance));
            }
            Err(e) => t.error(|| "convergence sequence".to_string(), &e),
        }
    }
    // Two-term gamma ratio against the log-gamma ratio.
    for &(x, a, b) in &[(50.0, 1.5, 0.5), (100.0, 0.25, -0.5), (200.0, 2.0, 1.0)] {
        let exact = (crate::specfun::gamma::lgamma(x + a) - crate::specfun::gamma::lgamma(x + b)).exp();
        t.check(rel(asympt::gamma_ratio_asym(x, a, b), exact), 1e-4, || format!("gamma ratio x={x} a={a} b={b}"));
    }
    t
}

/// Heisenberg, Pitt–Beckner and fermion-product bounds over the grid as
/// hard checks; Daubechies–Thakkar over the S-wave states as soft checks,
/// except the hydrogen ground state at `k = 2`.
pub fn uncertainty_suite(grid: &Grid) -> Tally {
    let mut t = map_merge(&grid.states(), |s| {
        let mut t = Tally::default();
        let d = s.dim() as f64;
        let push = |t: &mut Tally, what: String, reps: Result<Vec<InequalityReport>>| match reps {
            Ok(reps) => reps.iter().for_each(|r| t.inequality(r)),
            Err(e) if e.is_domain_violation() => {}
            Err(e) => t.error(|| what, &e),
        };
        for &a in &[0.5, 1.0, 2.0, 3.0] {
            for &b in &[0.5, 1.0, 2.0, 3.0] {
                push(&mut t, label(s, "heisenberg", a * 10.0 + b), uncertainty::heisenberg_general(s, a, b));
            }
        }
        for &alpha in &[0.0, 0.5, 1.0, 2.0, 3.0] {
            if alpha < d {
                push(&mut t, label(s, "pitt-beckner", alpha), uncertainty::pitt_beckner(s, alpha));
            }
        }
        for &alpha in &[1.0, 2.0, 3.0] {
            for &k in &[1.0, 2.0, 3.0] {
                push(&mut t, label(s, "fermion", alpha * 10.0 + k), uncertainty::fermion_product(s, alpha, k, 2, 1));
            }
        }
        if s.l() == 0 {
            for &k in &[-1.0, 1.0, 2.0, 3.0] {
                push(&mut t, label(s, "daubechies-thakkar", k), uncertainty::daubechies_thakkar(s, k, 2));
            }
        }
        // Z-invariance of the ratio.
        if let (Ok(a), Ok(b)) = (
            uncertainty::heisenberg_general(s, 1.0, 1.0),
            s.with_charge(s.charge() * 3.5).and_then(|s2| uncertainty::heisenberg_general(&s2, 1.0, 1.0)),
        ) {
            t.check(rel(b[0].ratio, a[0].ratio), 1e-11, || label(s, "Z-invariance", 1.0));
        }
        t
    });

    // The evaluated fermion-product constant at α = k = 2, D = 3, q = 2.
    let c = fermion_constant(3.0, 2.0, 2.0) * 2f64.powf(-2.0 / 3.0);
    t.check((c - 1.17005).abs() / 1.17005, 5e-6, || format!("fermion constant {c:.6}"));

    // Hydrogen ground state at k = 2.
    let h = make_state(3, 1, 0, 1.0).expect("valid");
    match uncertainty::daubechies_thakkar(&h, 2.0, 2) {
        Ok(reps) => {
            let r = &reps[0];
            t.assert(r.name == BoundName::DaubechiesThakkar && r.satisfied && (r.rhs / r.lhs - 0.578).abs() <= 0.01, || {
                format!("hydrogen ground state k=2: rhs/lhs = {:.4}", r.rhs / r.lhs)
            });
        }
        Err(e) => t.error(|| "hydrogen ground state k=2".into(), &e),
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_lexicographic() {
        let g = Grid::of(GridSize::Small);
        let s = g.states();
        assert_eq!(s.len(), 4 * 10);
        assert_eq!((s[0].dim(), s[0].n(), s[0].l()), (2, 1, 0));
        assert_eq!((s[1].dim(), s[1].n(), s[1].l()), (2, 2, 0));
        assert_eq!(g.random_orders(Space::Momentum), g.random_orders(Space::Momentum));
    }

    #[test]
    fn tally_tracks_worst_and_failures() {
        let mut t = Tally::default();
        t.check(1e-12, 1e-10, || "a".into());
        t.check(1e-9, 1e-10, || "b".into());
        t.check(1e-11, 1e-10, || "c".into());
        assert_eq!((t.checks, t.failed), (3, 1));
        assert_eq!(t.worst_case, "b");
        let mut u = Tally::default();
        u.check(f64::NAN, 1.0, || "nan".into());
        t.merge(u);
        assert!(t.worst_deviation.is_nan() && t.failed == 2);
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<_> = [10.0, 20.0, 40.0].iter().map(|&x: &f64| (x, 3.0 / (x * x))).collect();
        assert!((loglog_slope(&pts) + 2.0).abs() < 1e-12);
        assert!(loglog_slope(&[(1.0, 0.0), (2.0, 1.0)]).is_nan());
    }

    #[test]
    fn ns_mean_momentum_row() {
        // <p> for nS against 2Z/(πn): exact/leading − 1 = 1/(4n² − 1).
        let r = rydberg_row(Space::Momentum, Family::NS, 1.0, 3, 10, 1.0).unwrap();
        assert!((r.leading_deviation - 1.0 / 399.0).abs() < 1e-13);
    }

    #[test]
    fn small_suites_pass() {
        let g = Grid::of(GridSize::Small);
        for suite in [Suite::Routes, Suite::Reflection, Suite::Oracle, Suite::Uncertainty] {
            let r = run(suite, &g);
            assert!(r.passed, "{:?}: {:?}", suite, r.tally.failures);
            assert!(r.tally.checks > 0);
        }
        assert_eq!(run(Suite::Reflection, &g).tally.worst_deviation, 0.0);
    }
}
