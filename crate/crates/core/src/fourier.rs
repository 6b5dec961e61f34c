//! Truncated Fourier approximations of the sawtooth, floor, and delta
//! functions, in binary64.
//!
//! The sawtooth (fractional part) has the partial-sum approximation
//!
//! ```text
//! {x}_K = 1/2 - (1/pi) Σ_{k=1}^{K} sin(2πkx)/k
//! ```
//!
//! from which `floor_K(x) = x - {x}_K` and `delta_K(x) = floor_K(x) + eps`.
//! At integers every sine term vanishes, so the partial sums take the
//! midpoint value there: `{n}_K = 1/2` and `delta_K(n) = n + eps - 1/2`.
//! For the delta variant to keep its sign pattern (negative below zero,
//! positive at and above) the offset must satisfy `1/2 < eps < 1`; the
//! default is 3/4.
//!
//! Pointwise accuracy claims near the jump points are hopeless (Gibbs
//! oscillation), so consumers assert behavior only outside a guard band
//! around the integers.

use std::f64::consts::PI;
use std::fmt;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: u32 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierError {
    /// Input was NaN or infinite.
    NonFiniteInput,
    /// Term count outside `1..=MAX_TERMS`.
    InvalidTermCount(u32),
    /// Epsilon outside the open interval (1/2, 1).
    EpsilonOutOfRange,
}

impl fmt::Display for FourierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourierError::NonFiniteInput => write!(f, "input must be finite"),
            FourierError::InvalidTermCount(k) => {
                write!(f, "term count must be in 1..={MAX_TERMS}, got {k}")
            }
            FourierError::EpsilonOutOfRange => {
                write!(f, "epsilon must satisfy 1/2 < eps < 1")
            }
        }
    }
}

impl std::error::Error for FourierError {}

/// Partial-sum configuration: term count `K >= 1` and offset
/// `eps in (1/2, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierConfig {
    terms: u32,
    epsilon: f64,
}

impl FourierConfig {
    pub fn new(terms: u32, epsilon: f64) -> Result<Self, FourierError> {
        if terms == 0 || terms > MAX_TERMS {
            return Err(FourierError::InvalidTermCount(terms));
        }
        if !(epsilon > 0.5 && epsilon < 1.0) {
            return Err(FourierError::EpsilonOutOfRange);
        }
        Ok(FourierConfig { terms, epsilon })
    }

    /// `K` terms with the default offset 3/4.
    pub fn with_terms(terms: u32) -> Result<Self, FourierError> {
        FourierConfig::new(terms, 0.75)
    }

    pub fn terms(&self) -> u32 {
        self.terms
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

fn check_finite(x: f64) -> Result<f64, FourierError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(FourierError::NonFiniteInput)
    }
}

/// The exact fractional part `x - floor(x)`, in `[0, 1)`.
pub fn sawtooth_exact(x: f64) -> Result<f64, FourierError> {
    let x = check_finite(x)?;
    Ok(x - x.floor())
}

/// `1/2 - (1/pi) Σ_{k=1}^{K} sin(2πkx)/k`, summed in increasing `k` with
/// plain accumulation; deterministic for a fixed `K`.
pub fn sawtooth_fourier(x: f64, cfg: &FourierConfig) -> Result<f64, FourierError> {
    let x = check_finite(x)?;
    let mut sum = 0.0;
    for k in 1..=cfg.terms {
        let kf = f64::from(k);
        sum += (2.0 * PI * kf * x).sin() / kf;
    }
    Ok(0.5 - sum / PI)
}

/// `x - {x}_K`: the Fourier-approximated floor, equal to `n - 1/2` at
/// integers.
pub fn floor_fourier(x: f64, cfg: &FourierConfig) -> Result<f64, FourierError> {
    Ok(x - sawtooth_fourier(x, cfg)?)
}

/// `floor_K(x) + eps`; with the default `eps = 3/4` this is
/// `x + 1/4 + (1/pi) Σ sin(2πkx)/k`.
pub fn delta_fourier(x: f64, cfg: &FourierConfig) -> Result<f64, FourierError> {
    Ok(floor_fourier(x, cfg)? + cfg.epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(terms: u32) -> FourierConfig {
        FourierConfig::with_terms(terms).unwrap()
    }

    #[test]
    fn config_validation() {
        assert_eq!(
            FourierConfig::with_terms(0),
            Err(FourierError::InvalidTermCount(0))
        );
        assert_eq!(
            FourierConfig::with_terms(MAX_TERMS + 1),
            Err(FourierError::InvalidTermCount(MAX_TERMS + 1))
        );
        assert_eq!(
            FourierConfig::new(10, 0.5),
            Err(FourierError::EpsilonOutOfRange)
        );
        assert_eq!(
            FourierConfig::new(10, 1.0),
            Err(FourierError::EpsilonOutOfRange)
        );
        assert!(FourierConfig::new(10, 0.9).is_ok());
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        assert_eq!(sawtooth_exact(f64::NAN), Err(FourierError::NonFiniteInput));
        assert_eq!(
            sawtooth_fourier(f64::INFINITY, &cfg(1)),
            Err(FourierError::NonFiniteInput)
        );
    }

    #[test]
    fn sawtooth_exact_examples() {
        assert!((sawtooth_exact(-3.9).unwrap() - 0.1).abs() < 1e-12);
        assert_eq!(sawtooth_exact(6.0).unwrap(), 0.0);
        assert!((sawtooth_exact(5.7).unwrap() - 0.7).abs() < 1e-12);
        assert!((sawtooth_exact(-0.2).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn sawtooth_fourier_midpoint_at_integers() {
        for terms in [1, 7, 100] {
            for n in [-3.0, 0.0, 1.0, 12.0] {
                let v = sawtooth_fourier(n, &cfg(terms)).unwrap();
                assert!((v - 0.5).abs() < 1e-9, "K={terms} n={n} got {v}");
            }
        }
    }

    #[test]
    fn sawtooth_fourier_single_term_value() {
        // One term at x = 1/4: sin(π/2) = 1, so the sum is 1/2 - 1/π.
        let v = sawtooth_fourier(0.25, &cfg(1)).unwrap();
        assert!((v - (0.5 - 1.0 / PI)).abs() < 1e-12);
    }

    #[test]
    fn sawtooth_fourier_converges_away_from_jumps() {
        let v = sawtooth_fourier(0.3, &cfg(10_000)).unwrap();
        let exact = sawtooth_exact(0.3).unwrap();
        assert!((v - exact).abs() < 0.01, "got {v}, exact {exact}");
    }

    #[test]
    fn floor_fourier_examples() {
        for terms in [1, 10, 500] {
            let v = floor_fourier(2.0, &cfg(terms)).unwrap();
            assert!((v - 1.5).abs() < 1e-9, "K={terms} got {v}");
        }
        assert!((floor_fourier(3.4, &cfg(10_000)).unwrap() - 3.0).abs() < 0.01);
        assert!((floor_fourier(-0.2, &cfg(10_000)).unwrap() - (-1.0)).abs() < 0.01);
    }

    #[test]
    fn delta_fourier_key_values() {
        let c = cfg(100);
        assert!((delta_fourier(0.0, &c).unwrap() - 0.25).abs() < 1e-9);
        assert!((delta_fourier(-1.0, &c).unwrap() - (-0.75)).abs() < 1e-9);
        assert!((delta_fourier(1.0, &c).unwrap() - 1.25).abs() < 1e-9);
    }

    #[test]
    fn delta_fourier_integer_midpoints_for_any_epsilon() {
        for epsilon in [0.6, 0.75, 0.9] {
            for terms in [1, 10, 100] {
                let c = FourierConfig::new(terms, epsilon).unwrap();
                for n in -20..=20i32 {
                    let x = f64::from(n);
                    let got = delta_fourier(x, &c).unwrap();
                    let expected = x + epsilon - 0.5;
                    assert!(
                        (got - expected).abs() < 1e-9,
                        "eps={epsilon} K={terms} n={n}: got {got}, expected {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn convergence_is_monotone_with_slack() {
        // Max |{x}_K - {x}| over a guard-banded grid must not grow by more
        // than 10% as K increases through 100, 1000, 10000.
        let grid: Vec<f64> = (-500..=500)
            .map(|i| f64::from(i) * 0.01)
            .filter(|x| (x - x.round()).abs() >= 0.05)
            .collect();
        let max_err = |terms: u32| -> f64 {
            let c = cfg(terms);
            grid.iter()
                .map(|&x| {
                    (sawtooth_fourier(x, &c).unwrap() - sawtooth_exact(x).unwrap()).abs()
                })
                .fold(0.0, f64::max)
        };
        let errs = [max_err(100), max_err(1000), max_err(10_000)];
        assert!(errs[1] <= errs[0] * 1.1, "{errs:?}");
        assert!(errs[2] <= errs[1] * 1.1, "{errs:?}");
    }
}
