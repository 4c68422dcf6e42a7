//! Scalar abstractions shared by the polynomial, reduction and Landen code.
//!
//! Everything algebraic in this crate is written once against [`Scalar`]
//! (field arithmetic) or [`Real`] (field arithmetic plus roots) and then
//! instantiated with `f32`/`f64`, exact [`BigRational`] or the MPFR-backed
//! [`BigFloat`](crate::BigFloat).

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{NumOps, One, Signed, ToPrimitive, Zero};

/// A field element usable as a polynomial coefficient.
pub trait Scalar:
    Clone + Debug + PartialEq + Zero + One + NumOps + Neg<Output = Self> + Send + Sync
{
    /// Converts an exact rational into this number system, using the
    /// precision of `self` where the type carries one.
    fn lift(&self, q: &BigRational) -> Self;

    fn lift_int(&self, n: i64) -> Self {
        self.lift(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Strict positivity; for exact types this is decided exactly.
    fn is_positive_value(&self) -> bool;
}

/// An ordered field with root extraction.
pub trait Real: Scalar + PartialOrd {
    fn sqrt(&self) -> Self;
    /// Principal `n`-th root of a nonnegative value.
    fn nth_root(&self, n: u32) -> Self;
    fn abs(&self) -> Self;
    /// π at the precision of `self`.
    fn pi_like(&self) -> Self;
    fn to_f64(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

macro_rules! float_scalar {
    ($t:ident) => {
        impl Scalar for $t {
            fn lift(&self, q: &BigRational) -> Self {
                q.to_f64().map_or($t::NAN, |v| v as $t)
            }

            fn is_positive_value(&self) -> bool {
                *self > 0.0
            }
        }

        impl Real for $t {
            fn sqrt(&self) -> Self {
                $t::sqrt(*self)
            }

            fn nth_root(&self, n: u32) -> Self {
                match n {
                    1 => *self,
                    2 => $t::sqrt(*self),
                    3 => $t::cbrt(*self),
                    _ => self.powf(1.0 / n as $t),
                }
            }

            fn abs(&self) -> Self {
                $t::abs(*self)
            }

            fn pi_like(&self) -> Self {
                std::$t::consts::PI
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    fn lift(&self, q: &BigRational) -> Self {
        q.clone()
    }

    fn is_positive_value(&self) -> bool {
        self.is_positive()
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
