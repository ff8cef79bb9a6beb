//! Position and momentum radial expectation values `<r^α>` and `<p^α>` of
//! D-dimensional hydrogenic bound states, with exact rational·π^{m/2}
//! results for integer orders, float evaluation for real orders and an
//! independent quadrature oracle.
//!
//! ```
//! use hydromoments::{expectation, make_state, Mode, Space};
//!
//! let h = make_state(3, 1, 0, 1.0).unwrap();
//! let p = expectation(&h, Space::Momentum, -1.0, Mode::Exact).unwrap();
//! assert_eq!(p.exact_value().unwrap().to_string(), "16/3·π^(-1)");
//! ```

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asympt;
pub mod error;
pub mod momom;
pub mod oracle;
pub mod posmom;
pub mod record;
pub mod specfun;
pub mod states;
pub mod uncertainty;
pub mod verify;

pub use error::{Error, Interval, Result};
pub use momom::{p_moment, Route};
pub use posmom::{r_moment, Method, Mode, MomentResult, Value};
pub use record::OutputRecord;
pub use specfun::ExactValue;
pub use states::{make_state, HydrogenicState, MomentOrder, Space};

/// `<r^α>` or `<p^α>` for `state`.
pub fn expectation(state: &HydrogenicState, space: Space, alpha: f64, mode: Mode) -> Result<MomentResult> {
    match space {
        Space::Position => r_moment(state, alpha, mode),
        Space::Momentum => p_moment(state, alpha, mode),
    }
}
