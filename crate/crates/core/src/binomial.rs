//! Exact combinatorics.
//!
//! `binomial(n, k)` is zero for `k < 0` and for `k > n >= 0`. For a negative
//! upper index the polynomial extension `C(n, k) = (-1)^k C(k - n - 1, k)` is
//! used, so `C(-1, 0) = 1`. The closed forms for exponents above the middle
//! of the convergence range rely on this extension with even lower index.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let c = binomial(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_q(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow2(e: i64) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    if e >= 0 {
        num_traits::pow(two, e as usize)
    } else {
        num_traits::pow(two, (-e) as usize).recip()
    }
}

pub fn pow4(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(4), e as usize)
}
