//! Hydrogenic states, moment orders and their validity domains.
//!
//! A state is labelled by the dimension `D`, the principal number `n`, the
//! orbital number `l` and the nuclear charge `Z`. Radial moments depend on the
//! remaining hyperangular numbers only through these, so they are not stored.
//! The derived hyperquantum numbers
//!
//! * `η = n + (D-3)/2`
//! * `L = l + (D-3)/2`
//! * `ν = L + 1 = l + (D-1)/2`
//! * `k = n - l - 1`
//!
//! are integers or half-integers and are kept exactly as [`HalfInt`]s.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Interval, Result};

/// An exact multiple of one half, stored as its doubled value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    pub fn add_int(self, v: i64) -> Self {
        HalfInt(self.0 + 2 * v)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    #[serde(rename = "r")]
    Position,
    #[serde(rename = "p")]
    Momentum,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Position => f.write_str("position"),
            Space::Momentum => f.write_str("momentum"),
        }
    }
}

/// A validated bound state of the D-dimensional hydrogenic system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateFields", into = "StateFields")]
pub struct HydrogenicState {
    d: u32,
    n: u32,
    l: u32,
    z: f64,
}

#[derive(Serialize, Deserialize)]
struct StateFields {
    #[serde(rename = "D")]
    d: i64,
    n: i64,
    l: i64,
    #[serde(rename = "Z", with = "crate::record::decimal")]
    z: f64,
}

impl TryFrom<StateFields> for HydrogenicState {
    type Error = Error;
    fn try_from(s: StateFields) -> Result<Self> {
        make_state(s.d, s.n, s.l, s.z)
    }
}

impl From<HydrogenicState> for StateFields {
    fn from(s: HydrogenicState) -> Self {
        StateFields {
            d: s.d as i64,
            n: s.n as i64,
            l: s.l as i64,
            z: s.z,
        }
    }
}

/// Builds a validated state.
pub fn make_state(d: i64, n: i64, l: i64, z: f64) -> Result<HydrogenicState> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    if n < 1 || l < 0 || l >= n {
        return Err(Error::QuantumNumberOutOfRange { n, l });
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::NonpositiveCharge(z));
    }
    let to_u32 = |v: i64| u32::try_from(v).map_err(|_| Error::UnsupportedArgument(format!("{v} too large")));
    Ok(HydrogenicState {
        d: to_u32(d)?,
        n: to_u32(n)?,
        l: to_u32(l)?,
        z,
    })
}

impl HydrogenicState {
    pub fn new(d: i64, n: i64, l: i64, z: f64) -> Result<Self> {
        make_state(d, n, l, z)
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn charge(&self) -> f64 {
        self.z
    }

    /// Principal hyperquantum number `η = n + (D-3)/2`.
    pub fn eta(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.n as i64 + self.d as i64 - 3)
    }

    /// Grand orbital number `L = l + (D-3)/2`.
    pub fn big_l(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.l as i64 + self.d as i64 - 3)
    }

    /// Gegenbauer parameter `ν = L + 1`.
    pub fn nu(&self) -> HalfInt {
        self.big_l().add_int(1)
    }

    /// Degree `k = n - l - 1` of the radial polynomials.
    pub fn k(&self) -> u32 {
        self.n - self.l - 1
    }

    pub fn is_circular(&self) -> bool {
        self.l + 1 == self.n
    }

    /// Exact rational value of `Z` (every finite `f64` is a dyadic rational).
    pub fn charge_rational(&self) -> BigRational {
        BigRational::from_float(self.z).expect("charge is finite")
    }

    /// Same state with a different charge.
    pub fn with_charge(&self, z: f64) -> Result<Self> {
        make_state(self.d as i64, self.n as i64, self.l as i64, z)
    }

    /// Open interval of orders for which `<r^α>` or `<p^α>` exists.
    pub fn domain(&self, space: Space) -> Interval {
        let edge = (self.d + 2 * self.l) as f64;
        match space {
            Space::Position => Interval { lower: -edge, upper: None },
            Space::Momentum => Interval {
                lower: -edge,
                upper: Some(edge + 2.0),
            },
        }
    }

    pub(crate) fn require_order(&self, space: Space, alpha: f64) -> Result<()> {
        let interval = self.domain(space);
        if alpha.is_finite() && interval.contains(alpha) {
            Ok(())
        } else {
            Err(Error::OrderOutOfDomain { space, alpha, interval })
        }
    }
}

impl fmt::Display for HydrogenicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={}, n={}, l={}, Z={}", self.d, self.n, self.l, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentOrder {
    pub alpha: f64,
    pub space: Space,
}

impl MomentOrder {
    pub fn position(alpha: f64) -> Self {
        MomentOrder { alpha, space: Space::Position }
    }

    pub fn momentum(alpha: f64) -> Self {
        MomentOrder { alpha, space: Space::Momentum }
    }
}

/// True iff the order lies in the open validity interval of its space.
pub fn check_order(state: &HydrogenicState, order: MomentOrder) -> bool {
    order.alpha.is_finite() && state.domain(order.space).contains(order.alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_numbers() {
        let s = make_state(3, 1, 0, 1.0).unwrap();
        assert_eq!((s.eta(), s.big_l(), s.nu(), s.k()), (HalfInt::from_int(1), HalfInt::from_int(0), HalfInt::from_int(1), 0));

        let s = make_state(5, 3, 1, 2.0).unwrap();
        assert_eq!((s.eta(), s.big_l(), s.nu(), s.k()), (HalfInt::from_int(4), HalfInt::from_int(2), HalfInt::from_int(3), 1));

        let s = make_state(2, 1, 0, 1.0).unwrap();
        assert_eq!(s.eta(), HalfInt::from_twice(1));
        assert_eq!(s.big_l(), HalfInt::from_twice(-1));
        assert_eq!(s.nu(), HalfInt::from_twice(1));
        assert_eq!(s.k(), 0);
    }

    #[test]
    fn rejects_invalid() {
        assert_eq!(make_state(1, 1, 0, 1.0), Err(Error::DimensionTooSmall(1)));
        assert!(matches!(make_state(3, 2, 2, 1.0), Err(Error::QuantumNumberOutOfRange { .. })));
        assert!(matches!(make_state(3, 0, 0, 1.0), Err(Error::QuantumNumberOutOfRange { .. })));
        assert!(matches!(make_state(3, 2, -1, 1.0), Err(Error::QuantumNumberOutOfRange { .. })));
        assert!(matches!(make_state(3, 1, 0, 0.0), Err(Error::NonpositiveCharge(_))));
        assert!(matches!(make_state(3, 1, 0, f64::NAN), Err(Error::NonpositiveCharge(_))));
    }

    #[test]
    fn order_domains() {
        let g = make_state(3, 1, 0, 1.0).unwrap();
        assert!(!check_order(&g, MomentOrder::momentum(6.0)));
        assert!(!check_order(&g, MomentOrder::momentum(5.0)));
        assert!(check_order(&g, MomentOrder::momentum(4.999)));
        assert!(check_order(&g, MomentOrder::position(-2.0)));
        assert!(!check_order(&g, MomentOrder::position(-3.0)));
        let p = make_state(3, 2, 1, 1.0).unwrap();
        assert!(check_order(&p, MomentOrder::momentum(6.0)));
        assert_eq!(p.domain(Space::Momentum), Interval { lower: -5.0, upper: Some(7.0) });
    }

    #[test]
    fn identities_and_monotone_domain() {
        for d in 2..14i64 {
            for n in 1..9i64 {
                for l in 0..n {
                    let s = make_state(d, n, l, 1.0).unwrap();
                    assert_eq!(s.eta().twice() - s.big_l().twice() - 2, 2 * s.k() as i64);
                    assert_eq!(s.big_l().twice() + 1, 2 * l + d - 2);
                    if l + 1 < n {
                        let t = make_state(d, n, l + 1, 1.0).unwrap();
                        let (a, b) = (s.domain(Space::Momentum), t.domain(Space::Momentum));
                        assert!(b.lower <= a.lower && b.upper >= a.upper);
                    }
                }
            }
        }
    }

    #[test]
    fn serde_roundtrip_validates() {
        let s = make_state(4, 3, 2, 0.5).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"D":4,"n":3,"l":2,"Z":5.0000000000000000e-1}"#);
        let back: HydrogenicState = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<HydrogenicState>(r#"{"D":1,"n":1,"l":0,"Z":1.0}"#).is_err());
    }
}
