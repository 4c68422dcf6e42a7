//! MPFR-backed arbitrary-precision float.
//!
//! Binary operations run at the larger of the two operand precisions, so
//! low-precision constants such as `BigFloat::one()` mix freely with
//! working-precision values without any global precision setting.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rug::float::Constant;
use rug::integer::Order;
use rug::{Float, Integer, Rational};

use crate::scalar::{Real, Scalar};

/// Precision of values created without context (`zero`, `one`).
const CONTEXT_FREE_PREC: u32 = 64;

#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigFloat(Float);

/// Number of bits needed to carry `digits` decimal digits plus guard bits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 24
}

pub(crate) fn bigint_to_integer(n: &BigInt) -> Integer {
    let (sign, digits) = n.to_u32_digits();
    let magnitude = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -magnitude
    } else {
        magnitude
    }
}

pub(crate) fn integer_to_bigint(n: &Integer) -> BigInt {
    let digits: Vec<u32> = n.to_digits(Order::Lsf);
    let sign = match n.cmp0() {
        Ordering::Less => Sign::Minus,
        Ordering::Equal => Sign::NoSign,
        Ordering::Greater => Sign::Plus,
    };
    BigInt::from_slice(sign, &digits)
}

pub(crate) fn bigrational_to_rational(q: &BigRational) -> Rational {
    Rational::from((bigint_to_integer(q.numer()), bigint_to_integer(q.denom())))
}

pub(crate) fn rational_to_bigrational(q: &Rational) -> BigRational {
    BigRational::new(integer_to_bigint(q.numer()), integer_to_bigint(q.denom()))
}

impl BigFloat {
    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        BigFloat(Float::with_val(prec, bigrational_to_rational(q)))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        BigFloat(Float::with_val(prec, v))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigFloat(Float::with_val(prec, v))
    }

    pub fn pi(prec: u32) -> Self {
        BigFloat(Float::with_val(prec, Constant::Pi))
    }

    pub fn from_float(f: Float) -> Self {
        BigFloat(f)
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    /// Same value re-rounded to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        BigFloat(Float::with_val(prec, &self.0))
    }

    /// Exact rational value of this binary float. Panics on non-finite input.
    pub fn to_rational(&self) -> BigRational {
        let r = self
            .0
            .to_rational()
            .expect("non-finite BigFloat has no rational value");
        rational_to_bigrational(&r)
    }

    pub fn exp(&self) -> Self {
        BigFloat(self.0.clone().exp())
    }

    pub fn ln(&self) -> Self {
        BigFloat(self.0.clone().ln())
    }

    pub fn sinh(&self) -> Self {
        BigFloat(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Self {
        BigFloat(self.0.clone().cosh())
    }

    pub fn tanh(&self) -> Self {
        BigFloat(self.0.clone().tanh())
    }

    pub fn sin(&self) -> Self {
        BigFloat(self.0.clone().sin())
    }

    pub fn cos(&self) -> Self {
        BigFloat(self.0.clone().cos())
    }

    pub fn powi(&self, n: i32) -> Self {
        use rug::ops::Pow;
        BigFloat(Float::with_val(self.prec(), (&self.0).pow(n)))
    }

    pub fn is_zero_value(&self) -> bool {
        self.0.is_zero()
    }

    /// `digits` significant decimal digits, round-half-even.
    pub fn to_decimal(&self, digits: u32) -> String {
        crate::format::format_significant(&self.0, digits)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec() as f64) / std::f64::consts::LOG2_10).floor() as u32;
        write!(f, "{}", self.to_decimal(digits.max(1)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                let prec = self.prec().max(rhs.prec());
                BigFloat(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }

        impl<'a> $trait<&'a BigFloat> for &'a BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &'a BigFloat) -> BigFloat {
                let prec = self.prec().max(rhs.prec());
                BigFloat(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
forward_binop!(Div, div, /);
forward_binop!(Rem, rem, %);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat(Float::with_val(CONTEXT_FREE_PREC, 0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat(Float::with_val(CONTEXT_FREE_PREC, 1))
    }
}

impl Scalar for BigFloat {
    fn lift(&self, q: &BigRational) -> Self {
        BigFloat::from_rational(q, self.prec())
    }

    fn is_positive_value(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero() && !self.0.is_nan()
    }
}

impl Real for BigFloat {
    fn sqrt(&self) -> Self {
        BigFloat(self.0.clone().sqrt())
    }

    fn nth_root(&self, n: u32) -> Self {
        BigFloat(self.0.clone().root(n))
    }

    fn abs(&self) -> Self {
        BigFloat(self.0.clone().abs())
    }

    fn pi_like(&self) -> Self {
        BigFloat::pi(self.prec())
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn is_finite_value(&self) -> bool {
        self.0.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn mixed_precision_keeps_the_larger() {
        let x = BigFloat::from_rational(&ratio(1, 3), 300);
        let y = x.clone() + BigFloat::one();
        assert_eq!(y.prec(), 300);
        let z = x.clone() * BigFloat::one();
        assert_eq!(z, x);
    }

    #[test]
    fn bigint_round_trip() {
        let n: BigInt = "-123456789012345678901234567890".parse().unwrap();
        assert_eq!(integer_to_bigint(&bigint_to_integer(&n)), n);
        assert_eq!(
            integer_to_bigint(&bigint_to_integer(&BigInt::zero())),
            BigInt::zero()
        );
    }

    #[test]
    fn roots() {
        let x = BigFloat::from_i64(64, 200);
        assert_eq!(x.nth_root(6), BigFloat::from_i64(2, 200));
        assert_eq!(x.sqrt(), BigFloat::from_i64(8, 200));
    }
}
