//! Gamma-family functions, exact rational×π arithmetic and terminating
//! hypergeometric summation.

pub mod digamma;
pub mod exact;
pub mod gamma;
pub mod hypsum;
pub mod sum;

pub use digamma::{digamma, digamma_half_exact, HalfDigamma, EULER_GAMMA};
pub use exact::ExactValue;
pub use gamma::{gamma, gamma_exact, gamma_ratio_exact, log_gamma, pochhammer, pochhammer_exact};
pub use hypsum::{hyp_sum_exact, hyp_sum_float, FloatSum, HypSumSpec, Param};
pub use sum::CompensatedSum;
