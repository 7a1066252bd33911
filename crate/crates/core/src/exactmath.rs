//! Overflow-safe integer primitives and exact rational arithmetic.
//!
//! Everything downstream (volume formulas, Diophantine solvers, search
//! kernels) funnels its arithmetic through this module. Operations either
//! return the mathematically exact result or an [`ExactMathError`]; silent
//! wraparound never happens.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactMathError {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("rational with zero denominator")]
    ZeroDenominator,
}

/// Signed 64-bit integer whose arithmetic is exact-or-error.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckedInt(i64);

impl CheckedInt {
    pub const fn new(value: i64) -> Self {
        CheckedInt(value)
    }

    pub const fn get(self) -> i64 {
        self.0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, ExactMathError> {
        self.0
            .checked_add(rhs.0)
            .map(CheckedInt)
            .ok_or(ExactMathError::Overflow("integer addition"))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, ExactMathError> {
        self.0
            .checked_sub(rhs.0)
            .map(CheckedInt)
            .ok_or(ExactMathError::Overflow("integer subtraction"))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, ExactMathError> {
        self.0
            .checked_mul(rhs.0)
            .map(CheckedInt)
            .ok_or(ExactMathError::Overflow("integer multiplication"))
    }

    pub fn checked_neg(self) -> Result<Self, ExactMathError> {
        self.0
            .checked_neg()
            .map(CheckedInt)
            .ok_or(ExactMathError::Overflow("integer negation"))
    }
}

impl From<i64> for CheckedInt {
    fn from(value: i64) -> Self {
        CheckedInt(value)
    }
}

impl fmt::Display for CheckedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Greatest common divisor of two nonnegative integers, at least one of
/// which must be nonzero.
pub fn gcd(u: u64, v: u64) -> Result<u64, ExactMathError> {
    if u == 0 && v == 0 {
        return Err(ExactMathError::GcdOfZeros);
    }
    Ok(gcd_nonzero(u, v))
}

fn gcd_nonzero(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor square root of `n` plus a flag that is true exactly when `n` is a
/// perfect square.
///
/// A floating-point seed is refined by an integer correction loop; the
/// exactness decision uses integer multiplication only.
pub fn integer_sqrt(n: u64) -> (u64, bool) {
    if n == 0 {
        return (0, true);
    }
    let mut root = (n as f64).sqrt() as u64;
    // The seed can land a step or two off on either side.
    while root > 0 && root.checked_mul(root).is_none_or(|sq| sq > n) {
        root -= 1;
    }
    while (root + 1).checked_mul(root + 1).is_some_and(|sq| sq <= n) {
        root += 1;
    }
    (root, root * root == n)
}

pub(crate) fn mul_wide(a: i128, b: i128, what: &'static str) -> Result<i128, ExactMathError> {
    a.checked_mul(b).ok_or(ExactMathError::Overflow(what))
}

pub(crate) fn add_wide(a: i128, b: i128, what: &'static str) -> Result<i128, ExactMathError> {
    a.checked_add(b).ok_or(ExactMathError::Overflow(what))
}

/// Exact fraction with positive denominator, always stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: CheckedInt,
    den: CheckedInt,
}

impl Rational {
    /// Reduces `num/den` to lowest terms with a positive denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, ExactMathError> {
        Self::from_wide(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational {
            num: CheckedInt::new(n),
            den: CheckedInt::new(1),
        }
    }

    /// Builds a reduced rational from wide intermediates. Errors only when
    /// the reduced numerator or denominator does not fit in 64 bits.
    pub(crate) fn from_wide(num: i128, den: i128) -> Result<Self, ExactMathError> {
        if den == 0 {
            return Err(ExactMathError::ZeroDenominator);
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let num = i64::try_from(num).map_err(|_| ExactMathError::Overflow("rational numerator"))?;
        let den =
            i64::try_from(den).map_err(|_| ExactMathError::Overflow("rational denominator"))?;
        Ok(Rational {
            num: CheckedInt::new(num),
            den: CheckedInt::new(den),
        })
    }

    pub fn numerator(&self) -> i64 {
        self.num.get()
    }

    pub fn denominator(&self) -> i64 {
        self.den.get()
    }

    pub fn is_integer(&self) -> bool {
        self.den.get() == 1
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactMathError> {
        let (an, ad) = (self.num.get() as i128, self.den.get() as i128);
        let (bn, bd) = (rhs.num.get() as i128, rhs.den.get() as i128);
        Self::from_wide(an * bd + bn * ad, ad * bd)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ExactMathError> {
        let (an, ad) = (self.num.get() as i128, self.den.get() as i128);
        let (bn, bd) = (rhs.num.get() as i128, rhs.den.get() as i128);
        Self::from_wide(an * bd - bn * ad, ad * bd)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactMathError> {
        let (an, ad) = (self.num.get() as i128, self.den.get() as i128);
        let (bn, bd) = (rhs.num.get() as i128, rhs.den.get() as i128);
        Self::from_wide(an * bn, ad * bd)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication in 128 bits cannot overflow for 64-bit parts.
        let lhs = self.num.get() as i128 * other.den.get() as i128;
        let rhs = other.num.get() as i128 * self.den.get() as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(15, 5).unwrap(), 5);
        assert_eq!(gcd(1, 7).unwrap(), 1);
        assert_eq!(gcd(18, 6).unwrap(), 6);
        assert_eq!(gcd(0, 9).unwrap(), 9);
        assert_eq!(gcd(9, 0).unwrap(), 9);
        assert_eq!(gcd(0, 0), Err(ExactMathError::GcdOfZeros));
    }

    #[test]
    fn integer_sqrt_examples() {
        assert_eq!(integer_sqrt(49), (7, true));
        assert_eq!(integer_sqrt(50), (7, false));
        assert_eq!(integer_sqrt(0), (0, true));
        assert_eq!(integer_sqrt(1), (1, true));
        assert_eq!(integer_sqrt(2), (1, false));
        assert_eq!(integer_sqrt(u64::MAX), (u32::MAX as u64, false));
        let big = (u32::MAX as u64).pow(2);
        assert_eq!(integer_sqrt(big), (u32::MAX as u64, true));
    }

    #[test]
    fn rational_examples() {
        let r = Rational::new(104, 6).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (52, 3));
        assert!(!r.is_integer());

        let r = Rational::new(93, 1).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (93, 1));
        assert!(r.is_integer());

        let r = Rational::new(-3, -6).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (1, 2));

        assert_eq!(Rational::new(1, 0), Err(ExactMathError::ZeroDenominator));
    }

    #[test]
    fn rational_display() {
        assert_eq!(Rational::new(93, 1).unwrap().to_string(), "93");
        assert_eq!(Rational::new(104, 6).unwrap().to_string(), "52/3");
        assert_eq!(Rational::new(-1, 3).unwrap().to_string(), "-1/3");
    }

    #[test]
    fn rational_handles_extreme_inputs() {
        let r = Rational::new(i64::MIN, i64::MIN).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (1, 1));
        // |i64::MIN| does not fit back into i64 once the sign moves up.
        assert!(Rational::new(i64::MIN, -1).is_err());
    }

    #[test]
    fn checked_int_detects_overflow() {
        let max = CheckedInt::new(i64::MAX);
        let one = CheckedInt::new(1);
        assert!(max.checked_add(one).is_err());
        assert!(max.checked_mul(max).is_err());
        assert!(CheckedInt::new(i64::MIN).checked_neg().is_err());
        assert_eq!(max.checked_sub(one).unwrap().get(), i64::MAX - 1);
    }
}
