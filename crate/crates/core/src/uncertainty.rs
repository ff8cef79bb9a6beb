//! Uncertainty-type inequalities between position and momentum moments.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momom::p_moment;
use crate::oracle::entropic_moment;
use crate::posmom::{r_moment, Mode};
use crate::specfun::gamma::lgamma;
use crate::states::{HydrogenicState, Space};

/// Relative slack applied when deciding whether a bound holds, so that
/// equality cases are not decided by rounding.
pub const SATISFACTION_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundName {
    HeisenbergGeneral,
    HeisenbergD2over4,
    SphericalL,
    Heisenberg3D,
    Heisenberg3Dab,
    PittBeckner,
    KineticBound,
    DaubechiesThakkar,
    DaubechiesThakkar3D,
    FermionProduct,
    FermionProduct3D,
}

impl BoundName {
    /// Whether the bound is a proven inequality (as opposed to a semiclassical one).
    pub fn is_rigorous(self) -> bool {
        !matches!(self, BoundName::DaubechiesThakkar | BoundName::DaubechiesThakkar3D)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `lhs >= rhs`
    Lower,
    /// `lhs <= rhs`
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none", default, with = "crate::record::decimal::option")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "crate::record::decimal::option")]
    pub b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "crate::record::decimal::option")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "crate::record::decimal::option")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u32>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none", default)]
    pub n_particles: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: BoundName,
    pub state: HydrogenicState,
    #[serde(with = "crate::record::decimal")]
    pub lhs: f64,
    #[serde(with = "crate::record::decimal")]
    pub rhs: f64,
    #[serde(with = "crate::record::decimal")]
    pub ratio: f64,
    pub orientation: Orientation,
    pub satisfied: bool,
    pub params: BoundParams,
}

impl InequalityReport {
    fn new(name: BoundName, state: &HydrogenicState, lhs: f64, rhs: f64, orientation: Orientation, params: BoundParams) -> Self {
        let satisfied = match orientation {
            Orientation::Lower => lhs >= rhs * (1.0 - SATISFACTION_SLACK),
            Orientation::Upper => lhs <= rhs * (1.0 + SATISFACTION_SLACK),
        };
        InequalityReport {
            name,
            state: *state,
            lhs,
            rhs,
            ratio: lhs / rhs,
            orientation,
            satisfied,
            params,
        }
    }
}

/// Source of the moments the bounds are evaluated on.
pub trait MomentProvider {
    fn r_moment(&self, state: &HydrogenicState, alpha: f64) -> Result<f64>;
    fn p_moment(&self, state: &HydrogenicState, alpha: f64) -> Result<f64>;
    fn entropic_moment(&self, state: &HydrogenicState, beta: f64) -> Result<f64>;
}

/// Moments from the library's own routes with a fixed mode.
#[derive(Debug, Clone, Copy)]
pub struct Library(pub Mode);

impl Default for Library {
    fn default() -> Self {
        Library(Mode::Auto)
    }
}

impl MomentProvider for Library {
    fn r_moment(&self, state: &HydrogenicState, alpha: f64) -> Result<f64> {
        Ok(r_moment(state, alpha, self.0)?.to_f64())
    }

    fn p_moment(&self, state: &HydrogenicState, alpha: f64) -> Result<f64> {
        Ok(p_moment(state, alpha, self.0)?.to_f64())
    }

    fn entropic_moment(&self, state: &HydrogenicState, beta: f64) -> Result<f64> {
        entropic_moment(state, beta)
    }
}

fn require_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonpositiveParameters(format!("{name} = {v}")))
    }
}

/// `e D^{2/a} Γ(1+D/2)^{2/D} / ((ae)^{2/a} Γ(1+D/a)^{2/D})`
fn heisenberg_factor(d: f64, a: f64) -> f64 {
    let ln = 1.0 + (2.0 / a) * (d.ln() - a.ln() - 1.0) + (2.0 / d) * (lgamma(1.0 + d / 2.0) - lgamma(1.0 + d / a));
    ln.exp()
}

/// `<r^a>^{2/a} <p^b>^{2/b}` against the general bound, with the `a = b = 2`
/// forms `D²/4` and `(l+D/2)²`, and for `D = 3` the three-dimensional forms.
pub fn heisenberg_general(state: &HydrogenicState, a: f64, b: f64) -> Result<Vec<InequalityReport>> {
    heisenberg_general_with(&Library::default(), state, a, b)
}

pub fn heisenberg_general_with(
    provider: &impl MomentProvider,
    state: &HydrogenicState,
    a: f64,
    b: f64,
) -> Result<Vec<InequalityReport>> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    state.require_order(Space::Position, a)?;
    state.require_order(Space::Momentum, b)?;
    let r = provider.r_moment(state, a)?;
    let p = provider.p_moment(state, b)?;
    let d = state.dim() as f64;
    let params = BoundParams { a: Some(a), b: Some(b), ..Default::default() };

    let lhs = r.powf(2.0 / a) * p.powf(2.0 / b);
    let rhs = heisenberg_factor(d, a) * heisenberg_factor(d, b);
    let mut out = vec![InequalityReport::new(BoundName::HeisenbergGeneral, state, lhs, rhs, Orientation::Lower, params)];

    if a == 2.0 && b == 2.0 {
        let l = state.l() as f64;
        out.push(InequalityReport::new(BoundName::HeisenbergD2over4, state, lhs, d * d / 4.0, Orientation::Lower, params));
        let sph = (l + d / 2.0).powi(2);
        out.push(InequalityReport::new(BoundName::SphericalL, state, lhs, sph, Orientation::Lower, params));
    }
    if state.dim() == 3 {
        // <r^a>^{1/a} <p^b>^{1/b} >= (πab/(16Γ(3/a)Γ(3/b)))^{1/3} (3/a)^{1/a} (3/b)^{1/b} e^{1-1/a-1/b}
        let lhs3 = r.powf(1.0 / a) * p.powf(1.0 / b);
        let ln = ((PI * a * b / 16.0).ln() - lgamma(3.0 / a) - lgamma(3.0 / b)) / 3.0
            + (3.0 / a).ln() / a
            + (3.0 / b).ln() / b
            + 1.0
            - 1.0 / a
            - 1.0 / b;
        out.push(InequalityReport::new(BoundName::Heisenberg3Dab, state, lhs3, ln.exp(), Orientation::Lower, params));
        if a == b {
            // The a-th power of the previous bound at b = a.
            let lhs_aa = r * p;
            let ln_aa = a * (((PI * a * a / 16.0).ln() - 2.0 * lgamma(3.0 / a)) / 3.0 + 2.0 * (3.0 / a).ln() / a + 1.0
                - 2.0 / a);
            out.push(InequalityReport::new(BoundName::Heisenberg3D, state, lhs_aa, ln_aa.exp(), Orientation::Lower, params));
        }
    }
    Ok(out)
}

/// `<p^α> >= 2^α [Γ((D+α)/4)/Γ((D-α)/4)]² <r^{-α}>` for `0 <= α < D`; at
/// `α = 2` and `D > 2` also `T = <p²>/2 >= ((D-2)²/8) <r^{-2}>`.
pub fn pitt_beckner(state: &HydrogenicState, alpha: f64) -> Result<Vec<InequalityReport>> {
    pitt_beckner_with(&Library::default(), state, alpha)
}

pub fn pitt_beckner_with(provider: &impl MomentProvider, state: &HydrogenicState, alpha: f64) -> Result<Vec<InequalityReport>> {
    let d = state.dim() as f64;
    if !(alpha >= 0.0 && alpha < d) {
        return Err(Error::OrderOutOfRegime { alpha, constraint: format!("alpha in [0, D) = [0, {d})") });
    }
    state.require_order(Space::Momentum, alpha)?;
    state.require_order(Space::Position, -alpha)?;
    let p = provider.p_moment(state, alpha)?;
    let r = provider.r_moment(state, -alpha)?;
    let params = BoundParams { alpha: Some(alpha), ..Default::default() };
    let constant = (alpha * std::f64::consts::LN_2 + 2.0 * (lgamma((d + alpha) / 4.0) - lgamma((d - alpha) / 4.0))).exp();
    let mut out = vec![InequalityReport::new(BoundName::PittBeckner, state, p, constant * r, Orientation::Lower, params)];
    if alpha == 2.0 && state.dim() > 2 {
        let rhs = (d - 2.0).powi(2) / 8.0 * r;
        out.push(InequalityReport::new(BoundName::KineticBound, state, p / 2.0, rhs, Orientation::Lower, params));
    }
    Ok(out)
}

/// `K_D(k) = D/(k+D) (2π)^k Γ(1+D/2)^{k/D} / π^{k/2}`.
pub fn k_constant(d: f64, k: f64) -> f64 {
    ((d / (k + d)).ln() + k * (2.0 * PI).ln() + (k / d) * lgamma(1.0 + d / 2.0) - 0.5 * k * PI.ln()).exp()
}

/// `c_k = 3 (3π²)^{k/3} / (k+3)`.
pub fn c_constant(k: f64) -> f64 {
    3.0 * (3.0 * PI * PI).powf(k / 3.0) / (k + 3.0)
}

/// `<p^k>` against `K_D(k) q^{-k/D} W_{1+k/D}[ρ]`; the inequality reverses
/// for `k < 0`. S-wave states only. For `D = 3, q = 2` the `c_k` form is
/// added.
pub fn daubechies_thakkar(state: &HydrogenicState, k: f64, q: u32) -> Result<Vec<InequalityReport>> {
    daubechies_thakkar_with(&Library::default(), state, k, q)
}

pub fn daubechies_thakkar_with(
    provider: &impl MomentProvider,
    state: &HydrogenicState,
    k: f64,
    q: u32,
) -> Result<Vec<InequalityReport>> {
    if state.l() != 0 {
        return Err(Error::NotSWave(state.l()));
    }
    if q == 0 {
        return Err(Error::NonpositiveParameters("q = 0".into()));
    }
    state.require_order(Space::Momentum, k)?;
    let d = state.dim() as f64;
    let beta = 1.0 + k / d;
    let p = provider.p_moment(state, k)?;
    let w = provider.entropic_moment(state, beta)?;
    let orientation = if k < 0.0 { Orientation::Upper } else { Orientation::Lower };
    let params = BoundParams { k: Some(k), q: Some(q), ..Default::default() };
    let rhs = k_constant(d, k) * (q as f64).powf(-k / d) * w;
    let mut out = vec![InequalityReport::new(BoundName::DaubechiesThakkar, state, p, rhs, orientation, params)];
    if state.dim() == 3 && q == 2 {
        out.push(InequalityReport::new(BoundName::DaubechiesThakkar3D, state, p, c_constant(k) * w, orientation, params));
    }
    Ok(out)
}

/// `Ω_D = 2π^{D/2}/Γ(D/2)`.
fn ln_omega(d: f64) -> f64 {
    std::f64::consts::LN_2 + 0.5 * d * PI.ln() - lgamma(0.5 * d)
}

/// `F(D,α,k)` of the N-fermion product bound.
pub fn f_factor(d: f64, alpha: f64, k: f64) -> f64 {
    let s = 1.0 + k / d;
    let ln_beta = lgamma(d / alpha) + lgamma(2.0 + d / k) - lgamma(d / alpha + 2.0 + d / k);
    let m = s * alpha + k;
    let ln = s * s.ln() + (1.0 + 2.0 * k / d) * alpha.ln() - (k / d) * (ln_omega(d) + ln_beta)
        + (k * k.ln() - m * m.ln()) / alpha;
    ln.exp()
}

/// `ℱ(D,α,k) = K_D(k) F(D,α,k)`.
pub fn fermion_constant(d: f64, alpha: f64, k: f64) -> f64 {
    k_constant(d, k) * f_factor(d, alpha, k)
}

/// `<r^α>^{k/α} <p^k> >= ℱ(D,α,k) q^{-k/D} N^{1+k(1/α+1/D)}`.
pub fn fermion_product(state: &HydrogenicState, alpha: f64, k: f64, q: u32, n: u32) -> Result<Vec<InequalityReport>> {
    fermion_product_with(&Library::default(), state, alpha, k, q, n)
}

pub fn fermion_product_with(
    provider: &impl MomentProvider,
    state: &HydrogenicState,
    alpha: f64,
    k: f64,
    q: u32,
    n: u32,
) -> Result<Vec<InequalityReport>> {
    require_positive("alpha", alpha)?;
    require_positive("k", k)?;
    if q == 0 || n == 0 {
        return Err(Error::NonpositiveParameters(format!("q = {q}, N = {n}")));
    }
    state.require_order(Space::Position, alpha)?;
    state.require_order(Space::Momentum, k)?;
    let d = state.dim() as f64;
    let lhs = provider.r_moment(state, alpha)?.powf(k / alpha) * provider.p_moment(state, k)?;
    let rhs = fermion_constant(d, alpha, k) * (q as f64).powf(-k / d) * (n as f64).powf(1.0 + k * (1.0 / alpha + 1.0 / d));
    let params = BoundParams { alpha: Some(alpha), k: Some(k), q: Some(q), n_particles: Some(n), ..Default::default() };
    let mut out = vec![InequalityReport::new(BoundName::FermionProduct, state, lhs, rhs, Orientation::Lower, params)];
    if state.dim() == 3 && q == 2 {
        let rhs3 = fermion_constant(3.0, alpha, k) * 2f64.powf(-k / 3.0) * (n as f64).powf(k / alpha + (k + 3.0) / 3.0);
        out.push(InequalityReport::new(BoundName::FermionProduct3D, state, lhs, rhs3, Orientation::Lower, params));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::make_state;

    fn find(reports: &[InequalityReport], name: BoundName) -> &InequalityReport {
        reports.iter().find(|r| r.name == name).unwrap()
    }

    #[test]
    fn heisenberg_examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let reps = heisenberg_general(&h, 2.0, 2.0).unwrap();
        let d2 = find(&reps, BoundName::HeisenbergD2over4);
        assert!((d2.lhs - 3.0).abs() < 1e-14 && d2.rhs == 2.25 && d2.satisfied);
        assert_eq!(find(&reps, BoundName::SphericalL).rhs, 2.25);
        // The general bound at a = b = 2 is D²/4.
        for d in 2..=12 {
            let s = make_state(d, 1, 0, 1.0).unwrap();
            let g = &heisenberg_general(&s, 2.0, 2.0).unwrap()[0];
            let df = d as f64;
            assert!((g.rhs - df * df / 4.0).abs() < 1e-13 * df * df);
        }
        let p = make_state(3, 2, 1, 1.0).unwrap();
        let reps = heisenberg_general(&p, 2.0, 2.0).unwrap();
        let s = find(&reps, BoundName::SphericalL);
        assert_eq!(s.rhs, 6.25);
        assert!((s.lhs - 7.5).abs() < 1e-13 && s.satisfied);
        // Three-dimensional forms agree with the general one.
        let reps = heisenberg_general(&p, 1.3, 0.7).unwrap();
        let g = find(&reps, BoundName::HeisenbergGeneral);
        let ab = find(&reps, BoundName::Heisenberg3Dab);
        assert!((ab.rhs * ab.rhs - g.rhs).abs() < 1e-12 * g.rhs);
        let reps = heisenberg_general(&p, 2.0, 2.0).unwrap();
        assert!((find(&reps, BoundName::Heisenberg3D).rhs - 2.25).abs() < 1e-13);
        let g5 = &heisenberg_general(&make_state(5, 1, 0, 1.0).unwrap(), 2.0, 2.0).unwrap()[1];
        assert_eq!(g5.rhs, 6.25);
        assert!(g5.satisfied);
    }

    #[test]
    fn pitt_beckner_examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let reps = pitt_beckner(&h, 2.0).unwrap();
        let t = find(&reps, BoundName::KineticBound);
        assert!((t.lhs - 0.5).abs() < 1e-15 && (t.rhs - 0.25).abs() < 1e-15 && t.satisfied);
        // Both forms agree at α = 2.
        assert!((reps[0].rhs / 2.0 - t.rhs).abs() < 1e-14);
        let zero = &pitt_beckner(&make_state(6, 4, 2, 1.0).unwrap(), 0.0).unwrap()[0];
        assert_eq!((zero.lhs, zero.rhs, zero.satisfied), (1.0, 1.0, true));
        let five = &pitt_beckner(&make_state(5, 1, 0, 1.0).unwrap(), 2.0).unwrap()[0];
        let expected = 4.0 * ((lgamma(1.75) - lgamma(0.75)).exp()).powi(2) * (1.0 / (8.0 * 1.5));
        assert!((five.rhs - expected).abs() < 1e-14 && five.satisfied);
        assert!(pitt_beckner(&h, 3.0).is_err());
    }

    #[test]
    fn daubechies_thakkar_examples() {
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let reps = daubechies_thakkar(&h, 2.0, 2).unwrap();
        assert!((k_constant(3.0, 2.0) - 9.116).abs() < 1e-3);
        assert!((reps[0].lhs - 1.0).abs() < 1e-14);
        assert!((reps[0].rhs - 0.578).abs() < 0.01 && reps[0].satisfied);
        assert!((reps[1].rhs - reps[0].rhs).abs() < 1e-12);
        let zero = &daubechies_thakkar(&h, 0.0, 2).unwrap()[0];
        assert!((zero.rhs - 1.0).abs() < 1e-10 && zero.satisfied);
        let neg = daubechies_thakkar(&h, -1.0, 2).unwrap();
        assert_eq!(neg[0].orientation, Orientation::Upper);
        assert!(matches!(daubechies_thakkar(&make_state(3, 2, 1, 1.0).unwrap(), 2.0, 2), Err(Error::NotSWave(1))));
    }

    #[test]
    fn fermion_examples() {
        let c = fermion_constant(3.0, 2.0, 2.0);
        assert!((c - 1.85733).abs() < 5e-5, "{c}");
        let h = make_state(3, 1, 0, 1.0).unwrap();
        let reps = fermion_product(&h, 2.0, 2.0, 2, 1).unwrap();
        assert!((reps[0].lhs - 3.0).abs() < 1e-14);
        assert!((reps[0].rhs - 1.17005).abs() < 5e-6 && reps[0].satisfied);
        assert!((reps[1].rhs - reps[0].rhs).abs() < 1e-14);
        assert!((reps[0].rhs - c * 2f64.powf(-2.0 / 3.0)).abs() < 1e-15);
        assert!(fermion_product(&make_state(3, 3, 0, 1.0).unwrap(), 2.0, 2.0, 2, 1).unwrap()[0].satisfied);
        assert!(matches!(fermion_product(&h, -1.0, 2.0, 2, 1), Err(Error::NonpositiveParameters(_))));
    }

    #[test]
    fn ratios_are_charge_invariant() {
        for z in [0.5, 2.0, 10.0] {
            let s1 = make_state(4, 3, 0, 1.0).unwrap();
            let sz = make_state(4, 3, 0, z).unwrap();
            let pairs = [
                (heisenberg_general(&s1, 1.5, 2.5).unwrap(), heisenberg_general(&sz, 1.5, 2.5).unwrap()),
                (pitt_beckner(&s1, 1.5).unwrap(), pitt_beckner(&sz, 1.5).unwrap()),
                (daubechies_thakkar(&s1, 1.0, 2).unwrap(), daubechies_thakkar(&sz, 1.0, 2).unwrap()),
                (fermion_product(&s1, 1.0, 3.0, 2, 1).unwrap(), fermion_product(&sz, 1.0, 3.0, 2, 1).unwrap()),
            ];
            for (a, b) in pairs {
                for (x, y) in a.iter().zip(&b) {
                    assert!((x.ratio - y.ratio).abs() < 1e-9 * x.ratio, "{:?} Z={z}", x.name);
                }
            }
        }
    }
}
