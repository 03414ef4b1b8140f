//! Exact arithmetic on half-integers, the elements of (1/2)Z.
//!
//! Every spectral parameter in this crate (lambda, mu, infinitesimal
//! character entries) lives in (1/2)Z, so the whole engine runs on
//! [`HalfInt`] and plain machine integers. No floating point anywhere.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

/// An element of (1/2)Z, stored as twice its value.
///
/// The representation is unique: two values are equal iff their doubled
/// forms are equal, and `x` is an integer iff the doubled form is even.
/// Arithmetic is exact; overflow of the underlying `i64` is detected and
/// reported, never wrapped.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Builds the half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Builds the integer `n` as a half-integer.
    ///
    /// Panics if `2 * n` does not fit in an `i64`.
    pub fn from_int(n: i64) -> Self {
        HalfInt {
            twice: n.checked_mul(2).expect("HalfInt overflow"),
        }
    }

    /// Twice the value; the canonical internal form.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// True iff the value lies in Z.
    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_positive(self) -> bool {
        self.twice > 0
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.checked_abs().expect("HalfInt overflow"),
        }
    }

    /// Exact sum, `None` on `i64` overflow of the doubled form.
    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        self.twice.checked_add(rhs.twice).map(HalfInt::from_twice)
    }

    /// Exact difference, `None` on `i64` overflow of the doubled form.
    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.twice.checked_sub(rhs.twice).map(HalfInt::from_twice)
    }

    /// Total-order comparison; consistent with subtraction sign.
    pub fn compare(self, rhs: Self) -> Ordering {
        self.cmp(&rhs)
    }

    /// Largest integer `<=` the value.
    pub const fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> HalfInt {
        self.checked_add(rhs).expect("HalfInt overflow")
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> HalfInt {
        self.checked_sub(rhs).expect("HalfInt overflow")
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            twice: self.twice.checked_neg().expect("HalfInt overflow"),
        }
    }
}

/// Text form: `"a"` when integral, `"t/2"` with odd `t` otherwise.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to read a half-integer from text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseHalfIntError;

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer \"a\" or a half \"t/2\"")
    }
}

impl core::error::Error for ParseHalfIntError {}

/// Accepts both text forms: `"3"`, `"-3"`, `"5/2"`, `"-5/2"`.
/// Even numerators over 2 are tolerated on input (`"6/2"` reads as 3).
impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, ParseHalfIntError> {
        if let Some(numerator) = s.strip_suffix("/2") {
            let twice: i64 = numerator.parse().map_err(|_| ParseHalfIntError)?;
            Ok(HalfInt::from_twice(twice))
        } else {
            let n: i64 = s.parse().map_err(|_| ParseHalfIntError)?;
            n.checked_mul(2)
                .map(HalfInt::from_twice)
                .ok_or(ParseHalfIntError)
        }
    }
}
