//! Coefficient rings for multivectors and polynomials.
//!
//! Everything in the kernel is generic over a [`Scalar`] ring. Two modes are
//! supported: exact arbitrary-precision rationals (`BigRational`) and binary64
//! floats. Making the mode a type parameter instead of a runtime tag means a
//! mixed-mode product is a compile error rather than a runtime one; there is
//! no silent demotion from exact to float anywhere. Conversions between modes
//! go through the explicit `to_f64` helpers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};

/// Ring of coefficients a multivector or polynomial can carry.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    /// The exact value `num/den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

/// Scalars that embed into `f64` (used for residual norms and reports).
pub trait NumericScalar: Scalar {
    fn to_f64(&self) -> f64;
}

/// Scalars with exact division (rationals and floats, not polynomials).
pub trait FieldScalar: Scalar + std::ops::Div<Output = Self> {
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl NumericScalar for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational out of f64 range")
    }
}

impl FieldScalar for BigRational {}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
}

impl NumericScalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl FieldScalar for f64 {}

/// Exact rational shorthand used all over the test suites.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::from_ratio(num, den)
}

/// Approximate comparison: relative tolerance with an absolute floor.
pub fn approx_eq(a: f64, b: f64, rel: f64, abs_floor: f64) -> bool {
    let diff = (a - b).abs();
    diff <= abs_floor || diff <= rel * a.abs().max(b.abs())
}

/// Default float tolerances: relative 1e-10 with absolute floor 1e-14.
pub fn approx_eq_default(a: f64, b: f64) -> bool {
    approx_eq(a, b, 1e-10, 1e-14)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(a.clone() + b.clone(), rat(1, 2));
        assert_eq!(a * b, rat(1, 18));
    }

    #[test]
    fn approx_floor_covers_tiny_values() {
        assert!(approx_eq_default(1e-16, 0.0));
        assert!(!approx_eq_default(1e-3, 0.0));
    }
}
