//! Browser bindings for the `hydromoments` demo page.
//!
//! Every export takes plain numbers and returns a JSON string; failures come
//! back as `{"error": "..."}` so the page never has to catch exceptions.

use hydromoments::oracle::RadialFunctions;
use hydromoments::record::{OutputRecord, Status};
use hydromoments::uncertainty::{self, InequalityReport};
use hydromoments::{expectation, make_state, HydrogenicState, Mode, Result, Space};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

const MAX_POINTS: u32 = 2000;

fn space_of(tag: &str) -> Option<Space> {
    match tag {
        "r" => Some(Space::Position),
        "p" => Some(Space::Momentum),
        _ => None,
    }
}

fn mode_of(tag: &str) -> Option<Mode> {
    match tag {
        "auto" => Some(Mode::Auto),
        "exact" => Some(Mode::Exact),
        "float" => Some(Mode::Float),
        "oracle" => Some(Mode::Oracle),
        _ => None,
    }
}

fn error_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).unwrap_or_else(error_json)
}

/// One moment as a full output record.
#[wasm_bindgen]
pub fn moment(space: &str, d: i32, n: i32, l: i32, z: f64, alpha: f64, mode: &str) -> String {
    let (Some(space), Some(mode)) = (space_of(space), mode_of(mode)) else {
        return error_json("space must be r or p; mode auto, exact, float or oracle");
    };
    match make_state(d.into(), n.into(), l.into(), z) {
        Ok(s) => OutputRecord::moment("web", &s, space, alpha, mode, &expectation(&s, space, alpha, mode)).to_json(),
        Err(e) => error_json(e),
    }
}

#[derive(Serialize)]
struct CurvePoint {
    alpha: f64,
    value: Option<f64>,
    status: &'static str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Curve {
    space: &'static str,
    domain_lower: f64,
    domain_upper: Option<f64>,
    points: Vec<CurvePoint>,
}

fn curve(state: &HydrogenicState, space: Space, lo: f64, hi: f64, points: u32) -> Curve {
    let dom = state.domain(space);
    let count = points.clamp(2, MAX_POINTS);
    let points = (0..count)
        .map(|i| {
            let alpha = lo + (hi - lo) * i as f64 / (count - 1) as f64;
            match expectation(state, space, alpha, Mode::Auto) {
                Ok(m) => CurvePoint { alpha, value: Some(m.value.to_f64()), status: Status::Ok.as_str() },
                Err(e) => CurvePoint { alpha, value: None, status: Status::of(&e).as_str() },
            }
        })
        .collect();
    Curve {
        space: if space == Space::Position { "r" } else { "p" },
        domain_lower: dom.lower,
        domain_upper: dom.upper,
        points,
    }
}

/// `<r^α>` or `<p^α>` sampled at evenly spaced orders in `[lo, hi]`.
/// Orders outside the domain are reported with a null value.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn moment_curve(space: &str, d: i32, n: i32, l: i32, z: f64, lo: f64, hi: f64, points: u32) -> String {
    let Some(space) = space_of(space) else {
        return error_json("space must be r or p");
    };
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return error_json("order range must be finite with lo < hi");
    }
    match make_state(d.into(), n.into(), l.into(), z) {
        Ok(s) => to_json(&curve(&s, space, lo, hi, points)),
        Err(e) => error_json(e),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Densities {
    r: Vec<f64>,
    position: Vec<f64>,
    p: Vec<f64>,
    momentum: Vec<f64>,
    mean_r: f64,
    mean_p: f64,
}

fn moment_f64(state: &HydrogenicState, space: Space, alpha: f64) -> Result<f64> {
    expectation(state, space, alpha, Mode::Auto).map(|m| m.value.to_f64())
}

/// Grid reaching `mean + width·σ` of the distribution of `x`.
fn span(state: &HydrogenicState, space: Space, width: f64) -> Result<(f64, f64)> {
    let m1 = moment_f64(state, space, 1.0)?;
    let m2 = moment_f64(state, space, 2.0)?;
    let sigma = (m2 - m1 * m1).max(0.0).sqrt();
    Ok((m1, m1 + width * sigma))
}

fn densities(state: &HydrogenicState, points: u32) -> Result<Densities> {
    let rf = RadialFunctions::new(state)?;
    let count = points.clamp(2, MAX_POINTS) as usize;
    let (mean_r, r_max) = span(state, Space::Position, 6.0)?;
    // The momentum density decays only algebraically, so its σ is a loose guide.
    let (mean_p, p_max) = span(state, Space::Momentum, 3.0)?;
    let grid = |max: f64| (0..count).map(|i| max * i as f64 / (count - 1) as f64).collect::<Vec<_>>();
    let r = grid(r_max);
    let p = grid(p_max);
    let position = r.iter().map(|&x| rf.position_density(x)).collect();
    let momentum = p.iter().map(|&x| rf.momentum_density(x)).collect();
    Ok(Densities { r, position, p, momentum, mean_r, mean_p })
}

/// Radial probability densities in both spaces on grids covering the bulk.
#[wasm_bindgen]
pub fn radial_density(d: i32, n: i32, l: i32, z: f64, points: u32) -> String {
    match make_state(d.into(), n.into(), l.into(), z).and_then(|s| densities(&s, points)) {
        Ok(v) => to_json(&v),
        Err(e) => error_json(e),
    }
}

#[derive(Serialize)]
struct Skipped {
    bound: &'static str,
    reason: String,
}

#[derive(Serialize)]
struct Uncertainty {
    reports: Vec<InequalityReport>,
    skipped: Vec<Skipped>,
}

fn uncertainty_for(state: &HydrogenicState, a: f64, b: f64, alpha: f64, k: f64) -> Uncertainty {
    let runs: [(&'static str, Result<Vec<InequalityReport>>); 4] = [
        ("heisenberg", uncertainty::heisenberg_general(state, a, b)),
        ("pitt-beckner", uncertainty::pitt_beckner(state, alpha)),
        ("daubechies-thakkar", uncertainty::daubechies_thakkar(state, k, 2)),
        ("fermion", uncertainty::fermion_product(state, alpha, k, 2, 1)),
    ];
    let mut out = Uncertainty { reports: Vec::new(), skipped: Vec::new() };
    for (bound, res) in runs {
        match res {
            Ok(r) => out.reports.extend(r),
            Err(e) => out.skipped.push(Skipped { bound, reason: e.to_string() }),
        }
    }
    out
}

/// All four uncertainty-type inequalities for one state. Bounds that do not
/// apply (for example Daubechies–Thakkar away from l = 0) are listed with
/// the reason in `skipped`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn uncertainty_report(d: i32, n: i32, l: i32, z: f64, a: f64, b: f64, alpha: f64, k: f64) -> String {
    match make_state(d.into(), n.into(), l.into(), z) {
        Ok(s) => to_json(&uncertainty_for(&s, a, b, alpha, k)),
        Err(e) => error_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value as Json;

    fn parse(s: &str) -> Json {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn single_moment_record() {
        let v = parse(&moment("p", 3, 1, 0, 1.0, -1.0, "exact"));
        assert_eq!(v["result"]["exact"]["coeff"], "16/3");
        assert!(parse(&moment("q", 3, 1, 0, 1.0, 1.0, "auto"))["error"].is_string());
    }

    #[test]
    fn curve_marks_orders_outside_domain() {
        let v = parse(&moment_curve("p", 3, 1, 0, 1.0, -4.0, 6.0, 11));
        let pts = v["points"].as_array().unwrap();
        assert_eq!(pts.len(), 11);
        assert_eq!(pts[0]["status"], "out-of-domain");
        assert!(pts[0]["value"].is_null());
        // α = 0 is the normalization.
        assert!((pts[4]["value"].as_f64().unwrap() - 1.0).abs() < 1e-14);
        // α = 2 is 2E_kin = Z²/η².
        assert!((pts[6]["value"].as_f64().unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(pts[10]["status"], "out-of-domain");
        assert_eq!(v["domainLower"], -3.0);
        assert_eq!(v["domainUpper"], 5.0);
    }

    #[test]
    fn densities_integrate_to_one() {
        let v = parse(&radial_density(3, 2, 1, 1.0, 2000));
        for (x, y) in [("r", "position"), ("p", "momentum")] {
            let xs: Vec<f64> = v[x].as_array().unwrap().iter().map(|t| t.as_f64().unwrap()).collect();
            let ys: Vec<f64> = v[y].as_array().unwrap().iter().map(|t| t.as_f64().unwrap()).collect();
            let h = xs[1] - xs[0];
            let trapezoid: f64 = ys.windows(2).map(|w| 0.5 * h * (w[0] + w[1])).sum();
            // The momentum grid cuts off a p^-(2l+D+3) tail.
            assert!(trapezoid > 0.98 && trapezoid < 1.0 + 1e-6, "{y}: {trapezoid}");
        }
        assert!((v["meanR"].as_f64().unwrap() - 5.0).abs() < 1e-13);
    }

    #[test]
    fn uncertainty_lists_skipped_bounds() {
        let v = parse(&uncertainty_report(3, 2, 1, 1.0, 2.0, 2.0, 1.0, 2.0));
        let reports = v["reports"].as_array().unwrap();
        assert!(reports.iter().all(|r| r["satisfied"] == true));
        assert!(v["skipped"].as_array().unwrap().iter().any(|s| s["bound"] == "daubechies-thakkar"));
        assert!(parse(&uncertainty_report(3, 1, 1, 1.0, 2.0, 2.0, 1.0, 2.0))["error"].is_string());
    }
}
