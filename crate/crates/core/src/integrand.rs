use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::EvenPoly;

/// `P(z) / Q(z)^power` on `[0, inf)` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenRationalIntegrand {
    numerator: EvenPoly<BigRational>,
    denominator: EvenPoly<BigRational>,
    power: u32,
}

impl EvenRationalIntegrand {
    /// Validates convergence at infinity and positivity of the denominator
    /// on `[0, inf)` (constant term positive, no positive real root in `t`).
    pub fn new(
        numerator: EvenPoly<BigRational>,
        denominator: EvenPoly<BigRational>,
        power: u32,
    ) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidIntegrand(
                "denominator power must be at least 1".into(),
            ));
        }
        let dq = denominator.half_degree().ok_or(Error::ZeroPolynomial)?;
        if let Some(dp) = numerator.half_degree() {
            // P/Q^power = O(z^{-2}) at infinity.
            let max = (power as usize) * dq;
            if max == 0 || dp + 1 > max {
                return Err(Error::NonConvergentIntegrand(format!(
                    "numerator degree {} in z exceeds {}",
                    2 * dp,
                    2 * max as i64 - 2
                )));
            }
        }
        if !denominator.coeff(0).is_positive() {
            return Err(Error::InvalidIntegrand(
                "denominator must be positive at z = 0".into(),
            ));
        }
        if dq > 0 && denominator.as_poly().count_positive_roots()? > 0 {
            return Err(Error::InvalidIntegrand(
                "denominator vanishes on (0, inf)".into(),
            ));
        }
        Ok(EvenRationalIntegrand {
            numerator,
            denominator,
            power,
        })
    }

    pub fn numerator(&self) -> &EvenPoly<BigRational> {
        &self.numerator
    }

    pub fn denominator(&self) -> &EvenPoly<BigRational> {
        &self.denominator
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// Half-degree `p` of the denominator.
    pub fn half_degree(&self) -> usize {
        self.denominator.half_degree().unwrap_or(0)
    }

    /// `a0 = ap = 1`.
    pub fn is_normalized(&self) -> bool {
        self.denominator.coeff(0).is_one() && self.denominator.leading().is_some_and(|c| c.is_one())
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.denominator.coeffs().iter().all(|c| c.is_positive())
            && self.numerator.coeffs().iter().all(|c| !c.is_negative())
    }

    /// Same integrand with the numerator multiplied by `c`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        EvenRationalIntegrand {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
            power: self.power,
        }
    }

    /// Replaces the numerator, keeping the (already validated) denominator.
    pub fn with_numerator(&self, numerator: EvenPoly<BigRational>) -> Result<Self> {
        EvenRationalIntegrand::new(numerator, self.denominator.clone(), self.power)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Evaluates the integrand at a real point given in any [`crate::Real`] type.
    pub fn eval<T: crate::Real>(&self, z: &T) -> T {
        let t = z.clone() * z.clone();
        let lift = |p: &EvenPoly<BigRational>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(T::zero(), |acc, c| acc * t.clone() + z.lift(c))
        };
        let q = lift(&self.denominator);
        let mut qp = T::one();
        for _ in 0..self.power {
            qp = qp * q.clone();
        }
        lift(&self.numerator) / qp
    }
}

impl fmt::Display for EvenRationalIntegrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})^{}",
            self.numerator, self.denominator, self.power
        )
    }
}

/// Builds an exact even polynomial from integer coefficients (ascending in `z²`).
pub fn even_poly_from_ints(c: &[i64]) -> EvenPoly<BigRational> {
    EvenPoly::new(c.iter().map(|&x| crate::scalar::rat(x)).collect())
}
