//! Exact closed forms for series built from central binomial coefficients,
//! together with independent high-precision numeric oracles that check them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: the constant field and its decimal evaluation,
//! * [`special`]: exact gamma, digamma and polygamma values on the quarter grid,
//! * [`bell`]: complete exponential Bell polynomials,
//! * [`identities`]: the closed-form catalog,
//! * [`numeric`]: accelerated summation, quadrature and the verification driver.

pub mod bell;
pub mod error;
pub mod exact;
pub mod identities;
pub mod numeric;
pub mod special;

pub use error::{Error, Result};
pub use exact::{Decimal, ExactConstant, Monomial, Rational};

/// The guide's chapters, compiled as doc-tests so their snippets stay in
/// sync with the API.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/constant-field.md")]
    pub mod constant_field {}
    #[doc = include_str!("../../../book/src/special-values.md")]
    pub mod special_values {}
    #[doc = include_str!("../../../book/src/bell.md")]
    pub mod bell {}
    #[doc = include_str!("../../../book/src/identities.md")]
    pub mod identities {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    pub mod numerics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
