//! Exact verification of q-series identities.
//!
//! The crate is layered bottom-up:
//!
//! - [`kernel`]: truncated Laurent series over the rationals, q-Pochhammer
//!   symbols, Gaussian binomials and Lambert series.
//! - [`hypergeometric`]: basic hypergeometric sums with monomial parameters,
//!   both as formal series and as exact point values with tail bounds.
//! - [`eval`]: a mode-agnostic evaluation context, so an identity form is
//!   written once and evaluated either as a series or at a rational `q`.
//! - [`registry`]: every identity as a multi-form entry.
//! - [`verify`]: sampling, per-mode checks and the suite runner.

pub mod ball;
pub mod error;
pub mod eval;
pub mod hypergeometric;
pub mod kernel;
pub mod rational;
pub mod registry;
pub mod verify;

pub use ball::Ball;
pub use error::{EvalError, Result};
pub use eval::{Args, Ctx, Val};
pub use kernel::{LaurentSeries, Monomial, PochLength};
pub use rational::Rational;
