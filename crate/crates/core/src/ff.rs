//! The ten foundational helper functions over exact rationals.
//!
//! These are Boolean-like step functions built on an exact floor, each with a
//! fixed output pattern over negative, zero, and positive inputs:
//!
//! ```text
//! delta(x)    = floor(x) + eps                  [-,  +, +]
//! theta(x)    = delta / |delta|                 [-1, 1, 1]
//! xi(x)       = (1 + theta) / 2                 [0,  1, 1]
//! xi_prime(x) = (1 - theta) / 2                 [1,  0, 0]
//! eta(x)      = theta ^ (-ceil(x) - 1)          [±1, 1, 1]
//! cap_theta(x)= xi(x) * xi(-x)                  [0,  1, 0]
//! q(x)        = theta - cap_theta               [-1, 0, 1]
//! q_prime(x)  = |q|                             [1,  0, 1]
//! psi(x)      = x + cap_theta                   [x,  1, x]
//! phi(x)      = psi ^ xi_prime                  [x,  1, 1]
//! ```
//!
//! `eps` may be any rational strictly between 0 and 1; every function except
//! `delta` itself is invariant in that choice, because the sign of
//! `floor(x) + eps` depends only on `floor(x)`. The canonical domain is exact
//! rationals so that outputs are exactly `{-1, 0, 1, x}`-valued and equality
//! is decidable.

use std::fmt;
use std::str::FromStr;

use crate::exact::{rat_normalize, ExactInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FfError {
    /// Name does not identify one of the ten functions.
    UnknownFunction(String),
    /// Epsilon outside the open interval (0, 1).
    EpsilonOutOfRange(ExactRational),
}

impl fmt::Display for FfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FfError::UnknownFunction(name) => write!(f, "unknown function \"{name}\""),
            FfError::EpsilonOutOfRange(v) => {
                write!(f, "epsilon must satisfy 0 < eps < 1, got {v}")
            }
        }
    }
}

impl std::error::Error for FfError {}

/// The offset added to `floor(x)`; must satisfy `0 < eps < 1` so that
/// `delta` is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Epsilon(ExactRational);

impl Epsilon {
    pub fn new(value: ExactRational) -> Result<Self, FfError> {
        if value.is_positive() && value < ExactRational::one() {
            Ok(Epsilon(value))
        } else {
            Err(FfError::EpsilonOutOfRange(value))
        }
    }

    /// The default choice, 1/2.
    pub fn half() -> Self {
        Epsilon(rat_normalize(ExactInt::from(1), ExactInt::from(2)).expect("static value"))
    }

    pub fn value(&self) -> &ExactRational {
        &self.0
    }
}

impl Default for Epsilon {
    fn default() -> Self {
        Epsilon::half()
    }
}

/// Exact floor of a rational (rounds toward negative infinity).
pub fn floor(x: &ExactRational) -> ExactInt {
    x.numer().div_floor(x.denom())
}

/// Exact ceiling of a rational (rounds toward positive infinity).
pub fn ceil(x: &ExactRational) -> ExactInt {
    x.numer().div_ceil(x.denom())
}

/// `floor(x) + eps`: negative for `floor(x) < 0`, positive otherwise, never
/// zero.
pub fn delta(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    &ExactRational::from(floor(x)) + eps.value()
}

/// `delta / |delta|`: the sign of `delta`, so -1 or 1, with `theta(0) = 1`.
pub fn theta(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    let d = delta(x, eps);
    d.try_div(&d.abs()).expect("delta is never zero")
}

/// `(1 + theta) / 2`: indicator of `x >= 0`.
pub fn xi(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    halve(&(&ExactRational::one() + &theta(x, eps)))
}

/// `(1 - theta) / 2`: indicator of `x < 0`.
pub fn xi_prime(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    halve(&(&ExactRational::one() - &theta(x, eps)))
}

/// `theta(x) ^ (-ceil(x) - 1)`: 1 for `x >= 0`; the alternating sign of the
/// negative Roman factorials for `x < 0`.
pub fn eta(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    let exponent = -ceil(x) - ExactInt::one();
    theta(x, eps)
        .pow(&exponent)
        .expect("theta is -1 or 1, never zero")
}

/// `xi(x) * xi(-x)`: 1 exactly at `x = 0`, else 0.
pub fn cap_theta(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    &xi(x, eps) * &xi(&-x, eps)
}

/// `theta - cap_theta`: the sign function, 0 at 0.
pub fn q(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    &theta(x, eps) - &cap_theta(x, eps)
}

/// `|q|`: 0 exactly at `x = 0`, else 1.
pub fn q_prime(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    q(x, eps).abs()
}

/// `x + cap_theta(x)`: the identity with 0 remapped to 1; never zero.
pub fn psi(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    x + &cap_theta(x, eps)
}

/// `psi(x) ^ xi_prime(x)`: `x` for `x < 0`, else 1. The `psi` base keeps the
/// `x = 0` case away from `0^0`.
pub fn phi(x: &ExactRational, eps: &Epsilon) -> ExactRational {
    let exponent = xi_prime(x, eps)
        .to_int()
        .expect("xi_prime is 0 or 1");
    psi(x, eps).pow(&exponent).expect("psi is never zero")
}

/// The five listed alternative forms of `cap_theta`, evaluated in order:
///
/// 1. `(theta(x) + theta(-x)) / 2`
/// 2. `(xi(x) + xi(-x)) / 2`
/// 3. `(1 + theta(x) * theta(-x)) / 2`
/// 4. `(1 + theta(-|x|)) / 2`
/// 5. `xi(-|x|)`
///
/// Form 2 is transcribed as listed even though it evaluates to 1/2 (not 0)
/// for positive `x`; the oracle reports that as a known counterexample
/// rather than repairing the form.
pub fn cap_theta_alternatives(x: &ExactRational, eps: &Epsilon) -> [ExactRational; 5] {
    let neg = -x;
    let minus_abs = -x.abs();
    [
        halve(&(&theta(x, eps) + &theta(&neg, eps))),
        halve(&(&xi(x, eps) + &xi(&neg, eps))),
        halve(&(&ExactRational::one() + &(&theta(x, eps) * &theta(&neg, eps)))),
        halve(&(&ExactRational::one() + &theta(&minus_abs, eps))),
        xi(&minus_abs, eps),
    ]
}

/// The three listed alternative forms of `q`, in order:
/// `(theta(x) - theta(-x)) / 2`, `xi(x) - xi(-x)`, `xi_prime(-x) - xi_prime(x)`.
pub fn q_alternatives(x: &ExactRational, eps: &Epsilon) -> [ExactRational; 3] {
    let neg = -x;
    [
        halve(&(&theta(x, eps) - &theta(&neg, eps))),
        &xi(x, eps) - &xi(&neg, eps),
        &xi_prime(&neg, eps) - &xi_prime(x, eps),
    ]
}

/// The three listed alternative forms of `q_prime`, in order:
/// `1 - cap_theta(x)`, `(1 - theta(x) * theta(-x)) / 2`, `xi_prime(-|x|)`.
pub fn q_prime_alternatives(x: &ExactRational, eps: &Epsilon) -> [ExactRational; 3] {
    let neg = -x;
    let minus_abs = -x.abs();
    [
        &ExactRational::one() - &cap_theta(x, eps),
        halve(&(&ExactRational::one() - &(&theta(x, eps) * &theta(&neg, eps)))),
        xi_prime(&minus_abs, eps),
    ]
}

fn halve(v: &ExactRational) -> ExactRational {
    v.try_div(&ExactRational::from(2)).expect("two is nonzero")
}

/// Identifier for one of the ten functions; the string forms are the CLI
/// and report vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FfName {
    Delta,
    Theta,
    Xi,
    XiPrime,
    Eta,
    CapTheta,
    Q,
    QPrime,
    Psi,
    Phi,
}

impl FfName {
    /// All ten, in the canonical presentation order.
    pub const ALL: [FfName; 10] = [
        FfName::Delta,
        FfName::Theta,
        FfName::Xi,
        FfName::XiPrime,
        FfName::Eta,
        FfName::CapTheta,
        FfName::Q,
        FfName::QPrime,
        FfName::Psi,
        FfName::Phi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FfName::Delta => "delta",
            FfName::Theta => "theta",
            FfName::Xi => "xi",
            FfName::XiPrime => "xi_prime",
            FfName::Eta => "eta",
            FfName::CapTheta => "cap_theta",
            FfName::Q => "q",
            FfName::QPrime => "q_prime",
            FfName::Psi => "psi",
            FfName::Phi => "phi",
        }
    }

    /// Evaluate the named function.
    pub fn eval(self, x: &ExactRational, eps: &Epsilon) -> ExactRational {
        match self {
            FfName::Delta => delta(x, eps),
            FfName::Theta => theta(x, eps),
            FfName::Xi => xi(x, eps),
            FfName::XiPrime => xi_prime(x, eps),
            FfName::Eta => eta(x, eps),
            FfName::CapTheta => cap_theta(x, eps),
            FfName::Q => q(x, eps),
            FfName::QPrime => q_prime(x, eps),
            FfName::Psi => psi(x, eps),
            FfName::Phi => phi(x, eps),
        }
    }
}

impl FromStr for FfName {
    type Err = FfError;

    fn from_str(s: &str) -> Result<Self, FfError> {
        FfName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| FfError::UnknownFunction(s.to_owned()))
    }
}

impl fmt::Display for FfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One slot of an output pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputSymbol {
    MinusOne,
    Zero,
    One,
    AnyNegative,
    AnyPositive,
    PlusOrMinusOne,
    /// The output equals the input.
    IdentityN,
}

impl OutputSymbol {
    /// Does an observed `(input, output)` sample fit this symbol?
    pub fn admits(self, input: &ExactRational, output: &ExactRational) -> bool {
        match self {
            OutputSymbol::MinusOne => *output == ExactRational::from(-1),
            OutputSymbol::Zero => output.is_zero(),
            OutputSymbol::One => *output == ExactRational::one(),
            OutputSymbol::AnyNegative => output.is_negative(),
            OutputSymbol::AnyPositive => output.is_positive(),
            OutputSymbol::PlusOrMinusOne => {
                *output == ExactRational::one() || *output == ExactRational::from(-1)
            }
            OutputSymbol::IdentityN => output == input,
        }
    }
}

impl fmt::Display for OutputSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OutputSymbol::MinusOne => "-1",
            OutputSymbol::Zero => "0",
            OutputSymbol::One => "1",
            OutputSymbol::AnyNegative => "-",
            OutputSymbol::AnyPositive => "+",
            OutputSymbol::PlusOrMinusOne => "±1",
            OutputSymbol::IdentityN => "n",
        };
        f.write_str(s)
    }
}

/// A function's outputs over the three sign regions, ordered (-, 0, +).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TernaryPattern {
    pub at_negative: OutputSymbol,
    pub at_zero: OutputSymbol,
    pub at_positive: OutputSymbol,
}

impl fmt::Display for TernaryPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.at_negative, self.at_zero, self.at_positive)
    }
}

/// The pattern each function claims for itself.
fn claimed_pattern(name: FfName) -> TernaryPattern {
    use OutputSymbol::*;
    let (n, z, p) = match name {
        FfName::Delta => (AnyNegative, AnyPositive, AnyPositive),
        FfName::Theta => (MinusOne, One, One),
        FfName::Xi => (Zero, One, One),
        FfName::XiPrime => (One, Zero, Zero),
        FfName::Eta => (PlusOrMinusOne, One, One),
        FfName::CapTheta => (Zero, One, Zero),
        FfName::Q => (MinusOne, Zero, One),
        FfName::QPrime => (One, Zero, One),
        FfName::Psi => (IdentityN, One, IdentityN),
        FfName::Phi => (IdentityN, One, One),
    };
    TernaryPattern {
        at_negative: n,
        at_zero: z,
        at_positive: p,
    }
}

/// The verified output pattern of the function named `name`.
///
/// The claimed pattern is checked against samples of each slot: the integer
/// representatives {-2, 0, 3} plus the half-integers {-1/2, 1/2}, so a slot
/// symbol must hold at both an integer and a non-integer input.
///
/// # Panics
///
/// Panics if any sample contradicts the claimed pattern; that would mean the
/// function and its published pattern have diverged, which is a bug, not a
/// recoverable condition.
pub fn pattern_of(name: &str, eps: &Epsilon) -> Result<TernaryPattern, FfError> {
    Ok(checked_pattern(name.parse()?, eps))
}

/// [`pattern_of`] for an already-resolved name.
pub fn checked_pattern(name: FfName, eps: &Epsilon) -> TernaryPattern {
    let pattern = claimed_pattern(name);
    let half = rat_normalize(ExactInt::from(1), ExactInt::from(2)).expect("static value");
    let slots = [
        (pattern.at_negative, vec![ExactRational::from(-2), -half.clone()]),
        (pattern.at_zero, vec![ExactRational::zero()]),
        (pattern.at_positive, vec![ExactRational::from(3), half]),
    ];
    for (symbol, samples) in slots {
        for sample in samples {
            let output = name.eval(&sample, eps);
            assert!(
                symbol.admits(&sample, &output),
                "{name}({sample}) = {output} does not fit claimed symbol {symbol}"
            );
        }
    }
    pattern
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> ExactRational {
        rat_normalize(ExactInt::from(n), ExactInt::from(d)).unwrap()
    }

    fn int(v: i64) -> ExactRational {
        ExactRational::from(v)
    }

    fn eps(n: i64, d: i64) -> Epsilon {
        Epsilon::new(rat(n, d)).unwrap()
    }

    #[test]
    fn epsilon_rejects_out_of_range() {
        assert!(Epsilon::new(int(0)).is_err());
        assert!(Epsilon::new(int(1)).is_err());
        assert!(Epsilon::new(rat(-1, 2)).is_err());
        assert!(Epsilon::new(rat(999, 1000)).is_ok());
    }

    #[test]
    fn floor_and_ceil_examples() {
        assert_eq!(floor(&rat(-17, 5)), ExactInt::from(-4));
        assert_eq!(floor(&int(3)), ExactInt::from(3));
        assert_eq!(floor(&rat(13, 10)), ExactInt::from(1));
        assert_eq!(floor(&rat(27, 10)), ExactInt::from(2));
        // ceil(x) = -floor(-x) oracle.
        for x in [rat(-17, 5), int(3), rat(7, 10), rat(-7, 10), int(-2)] {
            assert_eq!(ceil(&x), -floor(&-&x), "x = {x}");
        }
        assert_eq!(ceil(&rat(-17, 5)), ExactInt::from(-3));
    }

    #[test]
    fn delta_examples() {
        let half = eps(1, 2);
        assert_eq!(delta(&int(0), &half), rat(1, 2));
        assert_eq!(delta(&int(-1), &half), rat(-1, 2));
        // floor(7/10) = 0, then add the offset.
        assert_eq!(delta(&rat(7, 10), &eps(1, 4)), rat(1, 4));
    }

    #[test]
    fn theta_examples() {
        let e = Epsilon::half();
        assert_eq!(theta(&int(0), &e), int(1));
        assert_eq!(theta(&int(-5), &e), int(-1));
        // delta(3/2) = 1 + 1/2 > 0, so theta = 1.
        assert_eq!(theta(&rat(3, 2), &e), int(1));
    }

    #[test]
    fn xi_and_xi_prime_examples() {
        let e = Epsilon::half();
        assert_eq!(xi(&int(0), &e), int(1));
        assert_eq!(xi_prime(&int(-2), &e), int(1));
        // Hand chain: floor(-1/2) = -1, delta = -1/2, theta = -1, xi = 0.
        assert_eq!(xi(&rat(-1, 2), &e), int(0));
        assert_eq!(xi_prime(&rat(3, 2), &e), int(0));
    }

    #[test]
    fn eta_examples() {
        let e = Epsilon::half();
        assert_eq!(eta(&int(-2), &e), int(-1));
        assert_eq!(eta(&int(-1), &e), int(1));
        assert_eq!(eta(&int(4), &e), int(1));
    }

    #[test]
    fn eta_matches_parity_piecewise_on_integers() {
        let e = Epsilon::half();
        for n in -20..=20i64 {
            let expected = if n >= 0 || n % 2 != 0 { 1 } else { -1 };
            assert_eq!(eta(&int(n), &e), int(expected), "n = {n}");
        }
    }

    #[test]
    fn cap_theta_examples() {
        let e = Epsilon::half();
        assert_eq!(cap_theta(&int(0), &e), int(1));
        assert_eq!(cap_theta(&int(-3), &e), int(0));
        // xi(1/3) = 1 and xi(-1/3) = 0, so the product vanishes.
        assert_eq!(cap_theta(&rat(1, 3), &e), int(0));
    }

    #[test]
    fn q_and_q_prime_examples() {
        let e = Epsilon::half();
        assert_eq!(q(&int(-5), &e), int(-1));
        assert_eq!(q(&int(0), &e), int(0));
        assert_eq!(q_prime(&int(0), &e), int(0));
        // theta(-7/2) = -1, cap_theta = 0, so |q| = 1.
        assert_eq!(q_prime(&rat(-7, 2), &e), int(1));
    }

    #[test]
    fn psi_and_phi_examples() {
        let e = Epsilon::half();
        assert_eq!(psi(&int(0), &e), int(1));
        assert_eq!(phi(&int(-3), &e), int(-3));
        assert_eq!(phi(&int(0), &e), int(1));
        assert_eq!(phi(&rat(-1, 2), &e), rat(-1, 2));
        assert_eq!(phi(&rat(5, 2), &e), int(1));
    }

    #[test]
    fn cap_theta_alternatives_at_key_points() {
        let e = Epsilon::half();
        for form in cap_theta_alternatives(&int(0), &e) {
            assert_eq!(form, int(1));
        }
        // Direct evaluation at x = 1: form 2 yields 1/2, the rest vanish.
        let at_one = cap_theta_alternatives(&int(1), &e);
        assert_eq!(at_one[0], int(0));
        assert_eq!(at_one[1], rat(1, 2));
        assert_eq!(at_one[2], int(0));
        assert_eq!(at_one[3], int(0));
        assert_eq!(at_one[4], int(0));
        // (theta(-2) + theta(2)) / 2 cancels.
        assert_eq!(cap_theta_alternatives(&int(-2), &e)[0], int(0));
    }

    #[test]
    fn q_alternatives_at_key_points() {
        let e = Epsilon::half();
        assert_eq!(q_alternatives(&int(2), &e), [int(1), int(1), int(1)]);
        assert_eq!(q_alternatives(&int(0), &e), [int(0), int(0), int(0)]);
        assert_eq!(q_prime_alternatives(&int(-1), &e), [int(1), int(1), int(1)]);
    }

    #[test]
    fn pattern_of_named_functions() {
        use OutputSymbol::*;
        let e = Epsilon::half();
        let theta_pattern = pattern_of("theta", &e).unwrap();
        assert_eq!(
            (theta_pattern.at_negative, theta_pattern.at_zero, theta_pattern.at_positive),
            (MinusOne, One, One)
        );
        let xp = pattern_of("xi_prime", &e).unwrap();
        assert_eq!((xp.at_negative, xp.at_zero, xp.at_positive), (One, Zero, Zero));
        let psi_pattern = pattern_of("psi", &e).unwrap();
        assert_eq!(
            (psi_pattern.at_negative, psi_pattern.at_zero, psi_pattern.at_positive),
            (IdentityN, One, IdentityN)
        );
        assert_eq!(psi_pattern.to_string(), "n 1 n");
    }

    #[test]
    fn pattern_of_rejects_unknown_name() {
        let e = Epsilon::half();
        assert_eq!(
            pattern_of("gamma", &e),
            Err(FfError::UnknownFunction("gamma".into()))
        );
    }
}
