//! Coefficient rings used by the symbolic kernel.
//!
//! Everything in this crate is exact. Polynomials and Laurent polynomials are
//! generic over a [`Coefficient`] ring so the same code serves arbitrary
//! precision integers (the default, see [`crate::IntPoly`]), machine integers
//! in tests, and exact rationals for point evaluation.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Num;

/// An exact commutative ring with unit.
pub trait Coefficient:
    Clone + Num + Neg<Output = Self> + Debug + Display + Send + Sync + 'static
{
    /// Lossless embedding of a small integer.
    fn from_i64(v: i64) -> Self;
}

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coefficient for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Coefficient for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Coefficient for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

/// Exact field used for evaluating rational functions at points.
pub trait ExactField: Coefficient + std::ops::Div<Output = Self> {}

impl ExactField for BigRational {}

/// `x^e` by repeated squaring.
pub fn pow<C: Coefficient>(x: &C, mut e: u32) -> C {
    let mut base = x.clone();
    let mut acc = C::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}
