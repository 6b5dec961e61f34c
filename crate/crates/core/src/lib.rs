//! Exact arithmetic for the Roman factorial and its helper functions.
//!
//! The Roman factorial extends `n!` to negative integers: it equals `n!` for
//! `n >= 0` and `(-1)^(-n-1) / (-n-1)!` for `n < 0`, so it is never zero and
//! its negative values alternate in sign. This crate implements every
//! formulation of it — a piecewise closed form, two recursive rewrites, and
//! six Π-product forms — over exact rationals, together with the family of
//! ten sign/indicator helper functions the unified formulations are built
//! from.
//!
//! Because several of the formulations are transcribed literally from their
//! source tables, two of them are intentionally *not* corrected where the
//! tables are internally inconsistent; the [`oracle`] module cross-checks all
//! formulations against the closed form and reports those mismatches as known
//! discrepancies instead of hiding them.
//!
//! Modules:
//! - [`exact`]: arbitrary-precision integers and canonical rationals.
//! - [`ff`]: the ten helper ("foundational") functions and their
//!   alternative forms.
//! - [`roman`]: the non-product Roman factorial formulations.
//! - [`products`]: the Π-product evaluator and the product formulations.
//! - [`fourier`]: floating-point Fourier approximations of sawtooth, floor,
//!   and the δ helper.
//! - [`oracle`]: cross-definition equivalence verification and the pattern,
//!   binary, and alternative-form tables.

pub mod exact;
pub mod ff;
pub mod fourier;
pub mod oracle;
pub mod products;
pub mod roman;

pub use exact::{int_factorial, rat_normalize, ExactError, ExactInt, ExactRational};
pub use ff::{Epsilon, FfError, FfName, OutputSymbol, TernaryPattern};
pub use fourier::{FourierConfig, FourierError};
pub use oracle::{OracleError, VerificationReport};
pub use products::{pi_product, ProductError, ProductSpec};
pub use roman::DefinitionKind;
