//! Coefficient rings.
//!
//! Every container in the crate is generic over a [`Scalar`], an exact
//! commutative ring. Operations that divide (factorial normalizations,
//! series logarithms, triangular solves) additionally need a [`Field`].
//! The crate root fixes [`Rational`] as the default.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational number, always reduced.
pub type Rational = BigRational;

/// An exact commutative ring usable as a coefficient type.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    /// Numerator and denominator as decimal strings (JSON form).
    fn num_den(&self) -> (String, String);
}

/// A [`Scalar`] with exact division by nonzero elements.
pub trait Field: Scalar + Div<Output = Self> {}

impl Scalar for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
    fn num_den(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

impl Field for BigRational {}

impl Scalar for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }
    fn num_den(&self) -> (String, String) {
        (self.to_string(), "1".to_string())
    }
}

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub fn pow<C: Scalar>(x: &C, e: usize) -> C {
    let mut r = C::one();
    for _ in 0..e {
        r = r * x.clone();
    }
    r
}

pub fn factorial_in<C: Scalar>(n: usize) -> C {
    C::from_bigint(factorial(n))
}

pub fn binomial_in<C: Scalar>(n: i64, k: i64) -> C {
    C::from_bigint(binomial(n, k))
}
