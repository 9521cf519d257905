//! Independent numeric oracles for the series of the catalog.
//!
//! Terms are exact rationals. Acceleration runs on exact partial sums, the
//! quadrature evaluates the integral representations, and tail brackets give
//! rigorous enclosures from the two-sided bound on `C(2k,k)/4^k`.

mod genfunc;
mod levin;
mod quad;
mod tail;
mod terms;
mod verify;

pub use genfunc::{
    beta_derivative_fd, boyadzhiev_check, complex_modulus_sum, genfunc_sum, SequenceKind,
};
pub use levin::{accelerate, max_order_for, Accelerated, DEFAULT_MAX_ORDER};
pub use quad::{quadrature_integral, quadrature_oracle};
pub use tail::{tail_bracket, Interval};
pub use terms::{partial_sum, term, term_exact, CentralRatio, TermStream};
pub use verify::{
    digits_agreed, reference_value, spot_recheck, verify, verify_all, VerificationReport,
    ACCEL_BUFFER, QUAD_DIGITS, SPOT_CHECKS, TAIL_N,
};
