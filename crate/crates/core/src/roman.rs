//! The Roman factorial: non-product formulations over all integers.
//!
//! `roman(n) = n!` for `n >= 0` and `(-1)^(-n-1) / (-n-1)!` for `n < 0`,
//! written `⌊n⌉!`. Four equivalent formulations live here:
//!
//! - [`roman_piecewise`]: the closed form above, the reference definition.
//! - [`roman_doubly_recursive`]: upward recursion `n · ⌊n-1⌉!` for positive
//!   `n`, downward recursion `⌊n+1⌉! / (n+1)` for `n <= -2`, base cases
//!   `⌊0⌉! = ⌊-1⌉! = 1`.
//! - [`roman_first_gen`]: both recursions folded into the single step
//!   `(n + xi_prime(n))^theta(n) · ⌊n - theta(n)⌉!`.
//! - [`roman_unified_recursive`]: the non-recursive rewrite
//!   `eta(n) · ((|n| - xi_prime(n))!)^theta(n)`.
//!
//! The recursive formulations are evaluated iteratively, walking from the
//! nearest base case, so inputs like ±10000 don't hit call-depth limits.
//! Helper-function calls inside the evaluators fix `eps = 1/2`; by
//! eps-invariance the choice is immaterial.

use std::fmt;
use std::str::FromStr;

use crate::exact::{int_factorial, ExactInt, ExactRational};
use crate::ff::{self, Epsilon};
use crate::products;

/// Names one of the eight Roman-factorial formulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DefinitionKind {
    /// Closed form, two cases over the sign of `n`.
    PiecewiseClosed,
    /// Recursion upward for positive `n`, downward for negative `n`.
    DoublyRecursive,
    /// `eta(n) · ((|n| - xi_prime(n))!)^theta(n)`.
    UnifiedRecursive,
    /// Single recursive step `(n + xi_prime(n))^theta(n) · ⌊n - theta(n)⌉!`.
    FirstGenRecursive,
    /// Rising product, positive/negative cases.
    RisingProduct,
    /// Falling product, positive/negative cases.
    FallingProduct,
    /// Generalized rising product without the `phi` prefactor.
    RisingProductAlt,
    /// Generalized falling product without the `phi` prefactor; transcribed
    /// literally, known to disagree with the closed form for `n <= -2`.
    FallingProductAlt,
}

impl DefinitionKind {
    /// All eight kinds, in presentation order.
    pub const ALL: [DefinitionKind; 8] = [
        DefinitionKind::PiecewiseClosed,
        DefinitionKind::DoublyRecursive,
        DefinitionKind::UnifiedRecursive,
        DefinitionKind::FirstGenRecursive,
        DefinitionKind::RisingProduct,
        DefinitionKind::FallingProduct,
        DefinitionKind::RisingProductAlt,
        DefinitionKind::FallingProductAlt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DefinitionKind::PiecewiseClosed => "piecewise",
            DefinitionKind::DoublyRecursive => "doubly-recursive",
            DefinitionKind::UnifiedRecursive => "unified-recursive",
            DefinitionKind::FirstGenRecursive => "first-gen",
            DefinitionKind::RisingProduct => "rising",
            DefinitionKind::FallingProduct => "falling",
            DefinitionKind::RisingProductAlt => "rising-alt",
            DefinitionKind::FallingProductAlt => "falling-alt",
        }
    }

    /// Evaluate this formulation at `n`.
    pub fn evaluate(self, n: &ExactInt) -> ExactRational {
        match self {
            DefinitionKind::PiecewiseClosed => roman_piecewise(n),
            DefinitionKind::DoublyRecursive => roman_doubly_recursive(n),
            DefinitionKind::UnifiedRecursive => roman_unified_recursive(n),
            DefinitionKind::FirstGenRecursive => roman_first_gen(n),
            DefinitionKind::RisingProduct => products::roman_rising(n),
            DefinitionKind::FallingProduct => products::roman_falling(n),
            DefinitionKind::RisingProductAlt => products::roman_rising_alt(n),
            DefinitionKind::FallingProductAlt => products::roman_falling_alt(n),
        }
    }
}

impl FromStr for DefinitionKind {
    type Err = UnknownDefinition;

    fn from_str(s: &str) -> Result<Self, UnknownDefinition> {
        DefinitionKind::ALL
            .into_iter()
            .find(|kind| kind.as_str() == s)
            .ok_or_else(|| UnknownDefinition(s.to_owned()))
    }
}

impl fmt::Display for DefinitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parse error for [`DefinitionKind`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownDefinition(pub String);

impl fmt::Display for UnknownDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown definition \"{}\"", self.0)
    }
}

impl std::error::Error for UnknownDefinition {}

/// A Roman factorial value together with the formulation that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RomanValue {
    pub n: ExactInt,
    pub value: ExactRational,
    pub definition: DefinitionKind,
}

impl RomanValue {
    pub fn compute(definition: DefinitionKind, n: &ExactInt) -> Self {
        RomanValue {
            n: n.clone(),
            value: definition.evaluate(n),
            definition,
        }
    }
}

/// Closed form: `n!` for `n >= 0`, `(-1)^(-n-1) / (-n-1)!` for `n < 0`.
pub fn roman_piecewise(n: &ExactInt) -> ExactRational {
    if !n.is_negative() {
        return ExactRational::from(int_factorial(n).expect("n >= 0"));
    }
    let m = -n - ExactInt::one(); // -n - 1 >= 0
    let numerator = ExactRational::from(-1).pow(&m).expect("base is nonzero");
    let denominator = ExactRational::from(int_factorial(&m).expect("m >= 0"));
    numerator.try_div(&denominator).expect("factorial is positive")
}

/// Doubly-recursive form, walked iteratively from the base cases
/// `⌊0⌉! = ⌊-1⌉! = 1`: upward `⌊m⌉! = m · ⌊m-1⌉!` for `m >= 1`, downward
/// `⌊m⌉! = ⌊m+1⌉! / (m+1)` for `m <= -2`.
pub fn roman_doubly_recursive(n: &ExactInt) -> ExactRational {
    let mut value = ExactRational::one();
    if n.is_positive() {
        for m in ExactInt::one().range_inclusive(n) {
            value *= &ExactRational::from(m);
        }
    } else if n < &ExactInt::from(-1) {
        // m runs -2, -3, ..., n; each step divides by m + 1.
        let mut m = ExactInt::from(-2);
        while m >= *n {
            let divisor = ExactRational::from(&m + &ExactInt::one());
            value = value.try_div(&divisor).expect("m + 1 <= -1");
            m = m - ExactInt::one();
        }
    }
    value
}

/// Consolidated recursive form
/// `⌊n⌉! = (n + xi_prime(n))^theta(n) · ⌊n - theta(n)⌉!` for
/// `n` outside the base cases `{0, -1}`, walked iteratively.
pub fn roman_first_gen(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let step = |m: &ExactInt, inner: &ExactRational| -> ExactRational {
        let x = ExactRational::from(m.clone());
        let theta_m = ff::theta(&x, &eps)
            .to_int()
            .expect("theta is an integer");
        let base = &x + &ff::xi_prime(&x, &eps);
        let factor = base.pow(&theta_m).expect("base is nonzero off the base cases");
        &factor * inner
    };

    let mut value = ExactRational::one();
    if n.is_positive() {
        for m in ExactInt::one().range_inclusive(n) {
            value = step(&m, &value);
        }
    } else if n < &ExactInt::from(-1) {
        let mut m = ExactInt::from(-2);
        while m >= *n {
            value = step(&m, &value);
            m = m - ExactInt::one();
        }
    }
    value
}

/// Unified non-recursive form `eta(n) · ((|n| - xi_prime(n))!)^theta(n)`.
pub fn roman_unified_recursive(n: &ExactInt) -> ExactRational {
    let eps = Epsilon::half();
    let x = ExactRational::from(n.clone());
    let xi_prime_n = ff::xi_prime(&x, &eps).to_int().expect("xi_prime is 0 or 1");
    let theta_n = ff::theta(&x, &eps).to_int().expect("theta is an integer");
    let inner = &n.abs() - &xi_prime_n;
    let fact = ExactRational::from(int_factorial(&inner).expect("|n| - xi_prime(n) >= 0"));
    let powered = fact.pow(&theta_n).expect("factorial is positive");
    &ff::eta(&x, &eps) * &powered
}

/// Does `⌊n⌉! · (n+1) = ⌊n+1⌉!` hold at `n` under the chosen formulation?
///
/// Checked multiplicatively, with no division, so `n = -1` evaluates to an
/// honest `false` (`1 · 0 ≠ 1`) instead of a division error.
pub fn roman_recurrence_holds(n: &ExactInt, eval: DefinitionKind) -> bool {
    let at_n = eval.evaluate(n);
    let successor = n + &ExactInt::one();
    let at_successor = eval.evaluate(&successor);
    &at_n * &ExactRational::from(successor) == at_successor
}
