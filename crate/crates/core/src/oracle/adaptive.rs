//! Adaptive Gauss–Kronrod (7/15) quadrature on finite intervals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Piece {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    let value = k * h;
    let error = ((k - g) * h).abs().max(10.0 * f64::EPSILON * value.abs());
    Piece { a, b, value, error }
}

/// Adaptive integration of `f` over `[a, b]` to `max(abs_tol, rel_tol·|I|)`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Result<Integral> {
    integrate_with_limit(f, a, b, rel_tol, abs_tol, 4000)
}

pub fn integrate_with_limit(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_pieces: usize,
) -> Result<Integral> {
    if a == b {
        return Ok(Integral { value: 0.0, error: 0.0 });
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod(&f, a, b);
    let (mut value, mut error) = (first.value, first.error);
    heap.push(first);
    while error > abs_tol.max(rel_tol.max(20.0 * f64::EPSILON) * value.abs()) {
        if heap.len() >= max_pieces {
            return Err(Error::QuadratureFailure(format!(
                "adaptive quadrature did not converge on [{a}, {b}]: estimate {value:e} ± {error:e}"
            )));
        }
        let worst = heap.pop().expect("non-empty heap");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b)) {
            // Interval cannot be split further in floating point.
            heap.push(worst);
            break;
        }
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed drift from incremental updates.
    let (mut v, mut e) = (0.0, 0.0);
    for p in heap.iter() {
        v += p.value;
        e += p.error;
    }
    if !v.is_finite() {
        return Err(Error::QuadratureFailure("non-finite integrand".into()));
    }
    Ok(Integral { value: v, error: e })
}

/// `∫_0^c g(x) dx` for an integrand behaving like `x^e` (`e > -1`) at zero.
/// The substitution `x = c·u^m` with `m = 1/(e+1)` removes the singularity.
pub fn integrate_power_endpoint(
    g: impl Fn(f64) -> f64,
    e: f64,
    c: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Integral> {
    if !(e > -1.0) {
        return Err(Error::QuadratureFailure(format!("endpoint exponent {e} is not integrable")));
    }
    if e >= 0.0 {
        return integrate(g, 0.0, c, rel_tol, abs_tol);
    }
    let m = 1.0 / (e + 1.0);
    integrate(
        |u: f64| {
            if u == 0.0 {
                // The transformed integrand tends to a finite constant; skip the node.
                return 0.0;
            }
            let x = c * u.powf(m);
            g(x) * c * m * u.powf(m - 1.0)
        },
        0.0,
        1.0,
        rel_tol,
        abs_tol,
    )
}

/// `∫_a^∞ g(x) dx` through `x = a + t/(1-t)`.
pub fn integrate_to_infinity(g: impl Fn(f64) -> f64, a: f64, rel_tol: f64, abs_tol: f64) -> Result<Integral> {
    integrate(
        |t: f64| {
            if t >= 1.0 {
                return 0.0;
            }
            let s = 1.0 - t;
            g(a + t / s) / (s * s)
        },
        0.0,
        1.0,
        rel_tol,
        abs_tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_integrals() {
        let r = integrate(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-14, 0.0).unwrap();
        assert!((r.value - 2.0).abs() < 1e-14);
        let r = integrate(|x| (-x * x).exp(), -6.0, 6.0, 1e-14, 0.0).unwrap();
        assert!((r.value - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫_0^1 x^{-0.9} e^x dx via series Σ 1/(k!(k+0.1))
        let expected: f64 = (0..30).scan(1.0, |f, k| {
            let term = 1.0 / (*f * (k as f64 + 0.1));
            *f *= (k + 1) as f64;
            Some(term)
        }).sum();
        let r = integrate_power_endpoint(|x| x.powf(-0.9) * x.exp(), -0.9, 1.0, 1e-13, 0.0).unwrap();
        assert!((r.value / expected - 1.0).abs() < 1e-12, "{} vs {}", r.value, expected);
    }

    #[test]
    fn semi_infinite() {
        let r = integrate_to_infinity(|x| (-x).exp() * x * x, 0.0, 1e-13, 0.0).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reports_failure() {
        let r = integrate_with_limit(|x| 1.0 / x.abs().sqrt().max(1e-300) * (1.0 / x).sin().signum(), -1.0, 1.0, 1e-15, 0.0, 20);
        assert!(matches!(r, Err(Error::QuadratureFailure(_))));
    }
}
