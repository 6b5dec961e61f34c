//! Arbitrary-precision integers and canonical rationals.
//!
//! Everything downstream computes on these two types, so canonical form is
//! enforced at construction: a denominator is always positive, numerator and
//! denominator are always coprime, and zero is always `0/1`. Equality is then
//! plain component-wise comparison, which is what the verification oracle
//! relies on when it compares thousands of values structurally.
//!
//! No floating-point conversions live here; decimal rendering is a CLI
//! concern.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A rational was constructed with denominator 0.
    ZeroDenominator,
    /// Division by the zero rational.
    DivisionByZero,
    /// `0` raised to a negative power.
    ZeroToNegativePower,
    /// Factorial of a negative integer.
    NegativeInput,
    /// Text that does not parse as a rational.
    InvalidLiteral,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroDenominator => write!(f, "denominator is zero"),
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::ZeroToNegativePower => write!(f, "zero raised to a negative power"),
            ExactError::NegativeInput => write!(f, "factorial of a negative integer"),
            ExactError::InvalidLiteral => write!(f, "invalid rational literal"),
        }
    }
}

impl std::error::Error for ExactError {}

/// Arbitrary-precision signed integer.
///
/// A thin wrapper over a bignum; the unique-zero invariant (sign "zero",
/// magnitude 0) is maintained by the underlying representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn one() -> Self {
        ExactInt(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    pub fn abs(&self) -> Self {
        ExactInt(self.0.abs())
    }

    /// Floor division (rounds toward negative infinity).
    pub fn div_floor(&self, other: &Self) -> Self {
        ExactInt(self.0.div_floor(&other.0))
    }

    /// Ceiling division (rounds toward positive infinity).
    pub fn div_ceil(&self, other: &Self) -> Self {
        ExactInt(self.0.div_ceil(&other.0))
    }

    /// Iterator of every integer from `self` to `to` inclusive, ascending.
    /// Empty when `to < self`.
    pub fn range_inclusive(&self, to: &Self) -> IntRange {
        IntRange {
            next: self.clone(),
            stop: to.clone(),
        }
    }

    fn bigint(&self) -> &BigInt {
        &self.0
    }
}

/// Ascending iterator over an inclusive integer interval.
pub struct IntRange {
    next: ExactInt,
    stop: ExactInt,
}

impl Iterator for IntRange {
    type Item = ExactInt;

    fn next(&mut self) -> Option<ExactInt> {
        if self.next > self.stop {
            return None;
        }
        let current = self.next.clone();
        self.next.0 += 1;
        Some(current)
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl FromStr for ExactInt {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(ExactInt(BigInt::from_str(s)?))
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactInt({})", self.0)
    }
}

macro_rules! int_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for &ExactInt {
            type Output = ExactInt;
            fn $op(self, rhs: &ExactInt) -> ExactInt {
                ExactInt((&self.0).$op(&rhs.0))
            }
        }
        impl $Op for ExactInt {
            type Output = ExactInt;
            fn $op(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$op(rhs.0))
            }
        }
        impl $Op<&ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $op(self, rhs: &ExactInt) -> ExactInt {
                ExactInt(self.0.$op(&rhs.0))
            }
        }
    };
}

int_binop!(Add, add);
int_binop!(Sub, sub);
int_binop!(Mul, mul);

impl AddAssign<i64> for ExactInt {
    fn add_assign(&mut self, rhs: i64) {
        self.0 += rhs;
    }
}

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-&self.0)
    }
}

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

/// `n!` as a rising product over `1..=n`; the empty product gives `0! = 1`.
///
/// Iterative on purpose: callers walk factorials into the thousands and a
/// recursive definition would be call-depth bound.
pub fn int_factorial(n: &ExactInt) -> Result<ExactInt, ExactError> {
    if n.is_negative() {
        return Err(ExactError::NegativeInput);
    }
    let mut acc = BigInt::one();
    let mut k = BigInt::one();
    while k <= *n.bigint() {
        acc *= &k;
        k += 1;
    }
    Ok(ExactInt(acc))
}

/// Reduced fraction with positive denominator; zero is represented as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: ExactInt,
    den: ExactInt,
}

/// Canonical reduced form: divide through by the gcd and move the sign to
/// the numerator.
pub fn rat_normalize(num: ExactInt, den: ExactInt) -> Result<ExactRational, ExactError> {
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(ExactRational {
            num: ExactInt::zero(),
            den: ExactInt::one(),
        });
    }
    // Unit numerator or denominator means the fraction is already reduced;
    // skipping the gcd there keeps the factorial walks linear.
    let already_reduced =
        num.bigint().magnitude().is_one() || den.bigint().magnitude().is_one();
    let (mut n, mut d) = if already_reduced {
        (num.0, den.0)
    } else {
        let g = num.bigint().gcd(den.bigint());
        (num.bigint() / &g, den.bigint() / &g)
    };
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Ok(ExactRational {
        num: ExactInt(n),
        den: ExactInt(d),
    })
}

impl ExactRational {
    /// See [`rat_normalize`].
    pub fn new(num: ExactInt, den: ExactInt) -> Result<Self, ExactError> {
        rat_normalize(num, den)
    }

    pub fn zero() -> Self {
        ExactRational {
            num: ExactInt::zero(),
            den: ExactInt::one(),
        }
    }

    pub fn one() -> Self {
        ExactRational {
            num: ExactInt::one(),
            den: ExactInt::one(),
        }
    }

    pub fn numer(&self) -> &ExactInt {
        &self.num
    }

    pub fn denom(&self) -> &ExactInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.den.bigint().is_one()
    }

    /// The value as an integer, if it is one.
    pub fn to_int(&self) -> Option<ExactInt> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn abs(&self) -> Self {
        ExactRational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Exact division; `rhs` must be nonzero.
    pub fn try_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        rat_normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power, exactly. `a^0 = 1`; a negative exponent inverts, so
    /// the base must then be nonzero.
    pub fn pow(&self, exp: &ExactInt) -> Result<Self, ExactError> {
        if self.is_zero() {
            if exp.is_negative() {
                return Err(ExactError::ZeroToNegativePower);
            }
            return Ok(if exp.is_zero() {
                Self::one()
            } else {
                Self::zero()
            });
        }
        let mag = exp.bigint().magnitude();
        let n = bigint_pow(self.num.bigint(), mag.bits(), |i| mag.bit(i));
        let d = bigint_pow(self.den.bigint(), mag.bits(), |i| mag.bit(i));
        if exp.is_negative() {
            rat_normalize(ExactInt(d), ExactInt(n))
        } else {
            // p^k / q^k is already reduced and q^k > 0.
            Ok(ExactRational {
                num: ExactInt(n),
                den: ExactInt(d),
            })
        }
    }

    /// Re-checks the canonical-form invariants; test support.
    pub fn is_canonical(&self) -> bool {
        if !self.den.is_positive() {
            return false;
        }
        if self.num.is_zero() {
            return self.den.bigint().is_one();
        }
        self.num.bigint().gcd(self.den.bigint()).is_one()
    }
}

/// Square-and-multiply over exponent bits (most significant first).
fn bigint_pow(base: &BigInt, bits: u64, bit: impl Fn(u64) -> bool) -> BigInt {
    let mut acc = BigInt::one();
    for i in (0..bits).rev() {
        acc = &acc * &acc;
        if bit(i) {
            acc *= base;
        }
    }
    acc
}

impl From<ExactInt> for ExactRational {
    fn from(n: ExactInt) -> Self {
        ExactRational {
            num: n,
            den: ExactInt::one(),
        }
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from(ExactInt::from(v))
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        rat_normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        self + &-rhs
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        rat_normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

/// Renders `p/q`, or just `p` when the value is an integer.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactRational({})", self)
    }
}

/// Accepts `p`, `p/q`, and decimal literals like `-3.25`.
impl FromStr for ExactRational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num = ExactInt::from_str(n.trim()).map_err(|_| ExactError::InvalidLiteral)?;
            let den = ExactInt::from_str(d.trim()).map_err(|_| ExactError::InvalidLiteral)?;
            return rat_normalize(num, den);
        }
        if let Some((whole, frac)) = s.split_once('.') {
            let negative = whole.trim_start().starts_with('-');
            let whole_int = if whole.is_empty() || whole == "-" || whole == "+" {
                ExactInt::zero()
            } else {
                ExactInt::from_str(whole).map_err(|_| ExactError::InvalidLiteral)?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ExactError::InvalidLiteral);
            }
            let frac_int = ExactInt::from_str(frac).map_err(|_| ExactError::InvalidLiteral)?;
            let scale = ExactInt(BigInt::from(10u8).pow(frac.len() as u32));
            let whole_part = ExactRational::from(whole_int);
            let frac_part = rat_normalize(frac_int, scale)?;
            return Ok(if negative {
                &whole_part - &frac_part
            } else {
                &whole_part + &frac_part
            });
        }
        let n = ExactInt::from_str(s).map_err(|_| ExactError::InvalidLiteral)?;
        Ok(ExactRational::from(n))
    }
}
