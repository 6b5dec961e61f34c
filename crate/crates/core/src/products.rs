//! Π-product evaluation and the product-form Roman factorials.
//!
//! The evaluator honors the usual conventions: a product whose upper limit
//! is below its lower limit is the empty product, 1, regardless of the
//! factor mapping; a product with equal limits is the single factor there.
//!
//! On top of it sit the six product formulations:
//!
//! - [`rising_pos`] / [`falling_pos`]: `n!` for `n >= 0` as `∏ k` and
//!   `∏ (n - k)`.
//! - [`rising_neg`] / [`falling_neg`]: the negative Roman factorials as
//!   `n · ∏ 1/(-k)` and `n · ∏ 1/(n + k)`.
//! - [`roman_rising`] / [`roman_falling`]: all integers at once,
//!   `phi(n) · ∏ (k·theta(n))^theta(n)` and
//!   `phi(n) · ∏ (n - k·theta(n))^theta(n)`.
//! - [`roman_rising_alt`] / [`roman_falling_alt`]: the alternative
//!   generalization that drops the `phi` prefactor and shortens the limits
//!   by `xi_prime(n)` instead. The falling variant is transcribed literally
//!   and provably disagrees with the closed form for `n <= -2` (at `n = -2`
//!   it gives -1/2 where `⌊-2⌉! = -1`); the oracle reports that, it is not
//!   patched here.

use std::fmt;

use crate::exact::{ExactInt, ExactRational};
use crate::ff::{self, Epsilon};

/// Hard cap on `|lower|` and `|upper|`; guards runaway CLI input.
pub const LIMIT_MAGNITUDE_CAP: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    /// The factor mapping produced no value inside the range.
    FactorUndefined { at: ExactInt },
    /// A product limit exceeds [`LIMIT_MAGNITUDE_CAP`].
    LimitTooLarge,
    /// Positive-domain form applied to a negative integer.
    NegativeInput,
    /// Negative-domain form applied to a non-negative integer.
    NonNegativeInput,
}

impl fmt::Display for ProductError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductError::FactorUndefined { at } => {
                write!(f, "product factor undefined at k = {at}")
            }
            ProductError::LimitTooLarge => {
                write!(f, "product limit exceeds {LIMIT_MAGNITUDE_CAP}")
            }
            ProductError::NegativeInput => write!(f, "input must be non-negative"),
            ProductError::NonNegativeInput => write!(f, "input must be negative"),
        }
    }
}

impl std::error::Error for ProductError {}

type FactorFn<'a> = Box<dyn Fn(&ExactInt) -> Option<ExactRational> + 'a>;

/// A finite product `∏_{k = lower}^{upper} factor(k)`.
///
/// The factor mapping must be total on `[lower, upper]`; returning `None`
/// inside the range surfaces as [`ProductError::FactorUndefined`].
pub struct ProductSpec<'a> {
    pub lower: ExactInt,
    pub upper: ExactInt,
    factor: FactorFn<'a>,
}

impl<'a> ProductSpec<'a> {
    pub fn new(
        lower: ExactInt,
        upper: ExactInt,
        factor: impl Fn(&ExactInt) -> Option<ExactRational> + 'a,
    ) -> Self {
        ProductSpec {
            lower,
            upper,
            factor: Box::new(factor),
        }
    }
}

/// Evaluates the product. Empty range (upper < lower) yields 1 before any
/// cap or factor check, per the empty-product convention.
pub fn pi_product(spec: &ProductSpec<'_>) -> Result<ExactRational, ProductError> {
    if spec.upper < spec.lower {
        return Ok(ExactRational::one());
    }
    let cap = ExactInt::from(LIMIT_MAGNITUDE_CAP);
    if spec.lower.abs() > cap || spec.upper.abs() > cap {
        return Err(ProductError::LimitTooLarge);
    }
    let mut acc = ExactRational::one();
    for k in spec.lower.range_inclusive(&spec.upper) {
        let factor = (spec.factor)(&k).ok_or(ProductError::FactorUndefined { at: k })?;
        acc *= &factor;
    }
    Ok(acc)
}

/// `n! = ∏_{k=1}^{n} k` for `n >= 0`.
pub fn rising_pos(n: &ExactInt) -> Result<ExactRational, ProductError> {
    if n.is_negative() {
        return Err(ProductError::NegativeInput);
    }
    let spec = ProductSpec::new(ExactInt::one(), n.clone(), |k| {
        Some(ExactRational::from(k.clone()))
    });
    pi_product(&spec)
}

/// `n! = ∏_{k=0}^{n-1} (n - k)` for `n >= 0`.
pub fn falling_pos(n: &ExactInt) -> Result<ExactRational, ProductError> {
    if n.is_negative() {
        return Err(ProductError::NegativeInput);
    }
    let spec = ProductSpec::new(ExactInt::zero(), n - &ExactInt::one(), |k| {
        Some(ExactRational::from(n - k))
    });
    pi_product(&spec)
}

/// `⌊n⌉! = n · ∏_{k=1}^{-n} 1/(-k)` for `n < 0`.
pub fn rising_neg(n: &ExactInt) -> Result<ExactRational, ProductError> {
    if !n.is_negative() {
        return Err(ProductError::NonNegativeInput);
    }
    let spec = ProductSpec::new(ExactInt::one(), -n, |k| {
        ExactRational::one()
            .try_div(&ExactRational::from(-k))
            .ok()
    });
    Ok(&ExactRational::from(n.clone()) * &pi_product(&spec)?)
}

/// `⌊n⌉! = n · ∏_{k=0}^{-n-1} 1/(n + k)` for `n < 0`; the extra `n/n` term
/// keeps `n = -1` off the empty product.
pub fn falling_neg(n: &ExactInt) -> Result<ExactRational, ProductError> {
    if !n.is_negative() {
        return Err(ProductError::NonNegativeInput);
    }
    let upper = &-n - &ExactInt::one();
    let spec = ProductSpec::new(ExactInt::zero(), upper, |k| {
        ExactRational::one()
            .try_div(&ExactRational::from(n + k))
            .ok()
    });
    Ok(&ExactRational::from(n.clone()) * &pi_product(&spec)?)
}

/// Generalized rising product over all integers:
/// `phi(n) · ∏_{k=1}^{|n|} (k·theta(n))^theta(n)`.
///
/// # Panics
///
/// Panics when `|n|` exceeds [`LIMIT_MAGNITUDE_CAP`].
pub fn roman_rising(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let x = ExactRational::from(n.clone());
    let theta_n = ff::theta(&x, &eps);
    let theta_exp = theta_n.to_int().expect("theta is an integer");
    let spec = ProductSpec::new(ExactInt::one(), n.abs(), |k| {
        (&ExactRational::from(k.clone()) * &theta_n).pow(&theta_exp).ok()
    });
    let product = pi_product(&spec).expect("|n| within the limit cap");
    &ff::phi(&x, &eps) * &product
}

/// Generalized falling product over all integers:
/// `phi(n) · ∏_{k=0}^{|n|-1} (n - k·theta(n))^theta(n)`.
///
/// # Panics
///
/// Panics when `|n|` exceeds [`LIMIT_MAGNITUDE_CAP`].
pub fn roman_falling(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let x = ExactRational::from(n.clone());
    let theta_n = ff::theta(&x, &eps);
    let theta_exp = theta_n.to_int().expect("theta is an integer");
    let upper = &n.abs() - &ExactInt::one();
    let spec = ProductSpec::new(ExactInt::zero(), upper, |k| {
        (&x - &(&ExactRational::from(k.clone()) * &theta_n))
            .pow(&theta_exp)
            .ok()
    });
    let product = pi_product(&spec).expect("|n| within the limit cap");
    &ff::phi(&x, &eps) * &product
}

/// Alternative rising generalization, no prefactor:
/// `∏_{k=1}^{|n| - xi_prime(n)} (k·theta(n))^theta(n)`.
///
/// # Panics
///
/// Panics when `|n|` exceeds [`LIMIT_MAGNITUDE_CAP`].
pub fn roman_rising_alt(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let x = ExactRational::from(n.clone());
    let theta_n = ff::theta(&x, &eps);
    let theta_exp = theta_n.to_int().expect("theta is an integer");
    let xi_prime_n = ff::xi_prime(&x, &eps).to_int().expect("xi_prime is 0 or 1");
    let upper = &n.abs() - &xi_prime_n;
    let spec = ProductSpec::new(ExactInt::one(), upper, |k| {
        (&ExactRational::from(k.clone()) * &theta_n).pow(&theta_exp).ok()
    });
    pi_product(&spec).expect("|n| within the limit cap")
}

/// Alternative falling generalization, transcribed literally:
/// `∏_{k=0}^{|n| - 1 - xi_prime(n)} (n - k·theta(n))^theta(n)`.
///
/// For `n <= -2` this product runs over `1/n .. 1/(-2)` and never reaches
/// the `1/(-1)` factor, so it does *not* reproduce the closed form there.
///
/// # Panics
///
/// Panics when `|n|` exceeds [`LIMIT_MAGNITUDE_CAP`].
pub fn roman_falling_alt(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let x = ExactRational::from(n.clone());
    let theta_n = ff::theta(&x, &eps);
    let theta_exp = theta_n.to_int().expect("theta is an integer");
    let xi_prime_n = ff::xi_prime(&x, &eps).to_int().expect("xi_prime is 0 or 1");
    let upper = &(&n.abs() - &ExactInt::one()) - &xi_prime_n;
    let spec = ProductSpec::new(ExactInt::zero(), upper, |k| {
        (&x - &(&ExactRational::from(k.clone()) * &theta_n))
            .pow(&theta_exp)
            .ok()
    });
    pi_product(&spec).expect("|n| within the limit cap")
}
