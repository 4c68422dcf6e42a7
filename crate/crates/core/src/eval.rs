//! Rigorous decimal evaluation of [`Expr`] trees by midpoint-radius ball
//! arithmetic on MPFR floats.
//!
//! Each node yields a ball that provably contains the exact value. The
//! working precision is doubled until the final radius is at most
//! `|mid| · 10^-(digits+3)`, so the printed significant digits carry a
//! relative error far below one unit in the last place.

use rug::float::{Constant, Round};
use rug::ops::PowAssignRound;
use rug::Float;

use crate::bigfloat::{bigrational_to_rational, digits_to_bits, BigFloat};
use crate::error::{Error, Result};
use crate::expr::Expr;

/// Radii are kept at this precision and always rounded upward.
const RAD_PREC: u32 = 64;
/// Number of precision doublings before giving up.
const MAX_DOUBLINGS: u32 = 8;

#[derive(Clone, Debug)]
struct Ball {
    mid: Float,
    rad: Float,
}

enum Fail {
    /// The enclosure is too wide to decide a sign; retry at higher precision.
    NeedPrecision,
    Hard(Error),
}

fn up_add(a: &Float, b: &Float) -> Float {
    Float::with_val_round(RAD_PREC, a + b, Round::Up).0
}

fn up_mul(a: &Float, b: &Float) -> Float {
    Float::with_val_round(RAD_PREC, a * b, Round::Up).0
}

fn up_abs(a: &Float) -> Float {
    Float::with_val_round(RAD_PREC, a.abs_ref(), Round::Up).0
}

/// Bound on the rounding error of a value just rounded to `prec` bits.
fn eps(mid: &Float, prec: u32) -> Float {
    let mut e = up_abs(mid);
    e >>= prec - 1;
    e
}

impl Ball {
    fn exact_or_rounded(mid: Float, prec: u32) -> Ball {
        let rad = eps(&mid, prec);
        Ball { mid, rad }
    }

    fn lo(&self) -> Float {
        Float::with_val_round(self.mid.prec(), &self.mid - &self.rad, Round::Down).0
    }

    fn hi(&self) -> Float {
        Float::with_val_round(self.mid.prec(), &self.mid + &self.rad, Round::Up).0
    }

    fn add(&self, o: &Ball, prec: u32) -> Ball {
        let mid = Float::with_val(prec, &self.mid + &o.mid);
        let rad = up_add(&up_add(&self.rad, &o.rad), &eps(&mid, prec));
        Ball { mid, rad }
    }

    fn mul(&self, o: &Ball, prec: u32) -> Ball {
        let mid = Float::with_val(prec, &self.mid * &o.mid);
        let mut rad = up_mul(&up_abs(&self.mid), &o.rad);
        rad = up_add(&rad, &up_mul(&up_abs(&o.mid), &self.rad));
        rad = up_add(&rad, &up_mul(&self.rad, &o.rad));
        rad = up_add(&rad, &eps(&mid, prec));
        Ball { mid, rad }
    }

    fn inv(&self, prec: u32) -> std::result::Result<Ball, Fail> {
        let m = Float::with_val_round(RAD_PREC, up_abs(&self.mid) - &self.rad, Round::Down).0;
        if m <= 0 {
            return Err(Fail::NeedPrecision);
        }
        let mid = Float::with_val(prec, 1 / &self.mid);
        let abs = Float::with_val(self.mid.prec(), self.mid.abs_ref());
        let den = Float::with_val_round(RAD_PREC, &abs * &m, Round::Down).0;
        let mut rad = Float::with_val_round(RAD_PREC, &self.rad / &den, Round::Up).0;
        rad = up_add(&rad, &eps(&mid, prec));
        Ok(Ball { mid, rad })
    }

    fn powi(&self, k: i64, prec: u32) -> std::result::Result<Ball, Fail> {
        let mut base = self.clone();
        let mut n = k.unsigned_abs();
        let mut acc = Ball::exact_or_rounded(Float::with_val(prec, 1), prec);
        acc.rad = Float::with_val(RAD_PREC, 0);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, prec);
            }
        }
        if k < 0 {
            acc.inv(prec)
        } else {
            Ok(acc)
        }
    }
}

fn opposite(r: Round) -> Round {
    match r {
        Round::Up => Round::Down,
        _ => Round::Up,
    }
}

/// `x^(p/q)` for `x > 0`, rounded in direction `round`.
fn pow_directed(x: &Float, p: i64, q: u32, round: Round, prec: u32) -> Float {
    if p < 0 {
        let d = pow_directed(x, -p, q, opposite(round), prec);
        return Float::with_val_round(prec, 1 / &d, round).0;
    }
    let mut r = Float::with_val(prec, x);
    r.root_round(q, round);
    r.pow_assign_round(p as u32, round);
    r
}

fn eval_ball(e: &Expr, prec: u32) -> std::result::Result<Ball, Fail> {
    match e {
        Expr::Rational(q) => Ok(Ball::exact_or_rounded(
            Float::with_val(prec, bigrational_to_rational(q)),
            prec,
        )),
        Expr::Pi => Ok(Ball::exact_or_rounded(
            Float::with_val(prec, Constant::Pi),
            prec,
        )),
        Expr::Sum(cs) => {
            let mut acc = Ball {
                mid: Float::with_val(prec, 0),
                rad: Float::with_val(RAD_PREC, 0),
            };
            for c in cs {
                acc = acc.add(&eval_ball(c, prec)?, prec);
            }
            Ok(acc)
        }
        Expr::Product(cs) => {
            let mut acc = Ball {
                mid: Float::with_val(prec, 1),
                rad: Float::with_val(RAD_PREC, 0),
            };
            for c in cs {
                acc = acc.mul(&eval_ball(c, prec)?, prec);
            }
            Ok(acc)
        }
        Expr::Power(b, x) => {
            let base = eval_ball(b, prec)?;
            if x.is_integer() {
                let k: i64 = x.numer().try_into().map_err(|_| {
                    Fail::Hard(Error::RangeViolation(format!("exponent {x} too large")))
                })?;
                return base.powi(k, prec);
            }
            let hi = base.hi();
            if hi < 0 {
                return Err(Fail::Hard(Error::NegativeBaseFractionalPower {
                    subtree: e.to_string(),
                }));
            }
            if base.mid.is_zero() && base.rad.is_zero() && x > &num_traits::Zero::zero() {
                return Ok(base);
            }
            let lo = base.lo();
            if lo <= 0 {
                return Err(Fail::NeedPrecision);
            }
            let p: i64 = x.numer().try_into().map_err(|_| {
                Fail::Hard(Error::RangeViolation(format!("exponent {x} too large")))
            })?;
            let q: u32 = x.denom().try_into().map_err(|_| {
                Fail::Hard(Error::RangeViolation(format!("exponent {x} too large")))
            })?;
            let (lower, upper) = if p > 0 {
                (
                    pow_directed(&lo, p, q, Round::Down, prec),
                    pow_directed(&hi, p, q, Round::Up, prec),
                )
            } else {
                (
                    pow_directed(&hi, p, q, Round::Down, prec),
                    pow_directed(&lo, p, q, Round::Up, prec),
                )
            };
            let mid = Float::with_val(prec, &lower + &upper) / 2u32;
            let half = Float::with_val_round(RAD_PREC, &upper - &lower, Round::Up).0 / 2u32;
            let rad = up_add(&half, &eps(&mid, prec));
            Ok(Ball { mid, rad })
        }
    }
}

fn tight_enough(b: &Ball, digits: u32) -> bool {
    if b.rad.is_zero() {
        return true;
    }
    let scale = Float::with_val_round(RAD_PREC, Float::u_pow_u(10, digits + 3), Round::Up).0;
    up_mul(&b.rad, &scale) <= up_abs(&b.mid) && !b.mid.is_zero()
}

/// Midpoint and radius of an enclosure of `e` that meets the relative
/// bound for `digits` significant digits.
pub fn enclose(e: &Expr, digits: u32) -> Result<(BigFloat, BigFloat)> {
    let start = digits_to_bits(digits) + 32;
    let mut prec = start;
    let mut last: Option<Ball> = None;
    for _ in 0..=MAX_DOUBLINGS {
        match eval_ball(e, prec) {
            Ok(b) if tight_enough(&b, digits) => {
                return Ok((BigFloat::from_float(b.mid), BigFloat::from_float(b.rad)));
            }
            Ok(b) => last = Some(b),
            Err(Fail::NeedPrecision) => {}
            Err(Fail::Hard(err)) => return Err(err),
        }
        prec *= 2;
    }
    let (best, bound) = match last {
        Some(b) => (
            crate::format::format_significant(&b.mid, digits),
            crate::format::format_significant(&b.rad, 6),
        ),
        None => ("undetermined".into(), "inf".into()),
    };
    Err(Error::PrecisionNotReached { best, bound })
}

/// Value of `e` correct to `digits` significant digits.
pub fn eval_bigfloat(e: &Expr, digits: u32) -> Result<BigFloat> {
    enclose(e, digits).map(|(mid, _)| mid)
}

/// Decimal string with exactly `digits` significant digits.
pub fn eval_expression(e: &Expr, digits: u32) -> Result<String> {
    Ok(eval_bigfloat(e, digits)?.to_decimal(digits))
}

pub fn eval_f64(e: &Expr) -> Result<f64> {
    Ok(eval_bigfloat(e, 20)?.as_float().to_f64())
}
