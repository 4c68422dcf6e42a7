//! Dense univariate polynomials and even polynomials stored in `t = z²`.
//!
//! Coefficients are always ascending (index `k` is the coefficient of `x^k`,
//! resp. `z^{2k}` for [`EvenPoly`]) and trimmed so the leading coefficient is
//! nonzero. The zero polynomial has no coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(T::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `x^n f(1/x)`; requires `n >= deg f`.
    pub fn reflect_with_degree(&self, n: usize) -> Self {
        assert!(
            self.coeffs.len() <= n + 1,
            "reflection degree below polynomial degree"
        );
        let mut out = vec![T::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n - k] = c.clone();
        }
        Poly::new(out)
    }

    /// Coefficient reversal, `x^{deg f} f(1/x)`.
    pub fn reflect(&self) -> Result<Self> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(d) => Ok(self.reflect_with_degree(d)),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * c.lift_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone() / lead.clone();
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * b.clone();
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<BigRational> {
    /// Number of distinct real roots in the open interval `(0, inf)`, by a
    /// Sturm sequence. Requires `f(0) != 0`.
    pub fn count_positive_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeff(0).is_zero() {
            return Err(Error::InvalidIntegrand("polynomial vanishes at 0".into()));
        }
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1])?;
            seq.push(r.scale(&-BigRational::one()));
        }
        seq.pop();
        let changes = |signs: Vec<BigRational>| {
            let nonzero: Vec<_> = signs.into_iter().filter(|s| !s.is_zero()).collect();
            nonzero
                .windows(2)
                .filter(|w| w[0].is_positive() != w[1].is_positive())
                .count()
        };
        let at_zero = changes(seq.iter().map(|p| p.coeff(0)).collect());
        let at_inf = changes(seq.iter().map(|p| p.leading().unwrap().clone()).collect());
        Ok(at_zero - at_inf)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x", 1)
    }
}

fn write_terms<T: Scalar + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
    step: usize,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match k * step {
            0 => write!(f, "{c}")?,
            1 => write!(f, "({c})*{var}")?,
            e => write!(f, "({c})*{var}^{e}")?,
        }
    }
    Ok(())
}

/// Even polynomial in `z`, stored as a polynomial in `t = z²`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenPoly<T>(Poly<T>);

impl<T: Scalar> EvenPoly<T> {
    /// From ascending coefficients of `z^0, z^2, z^4, ...`.
    pub fn new(coeffs: Vec<T>) -> Self {
        EvenPoly(Poly::new(coeffs))
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        EvenPoly(p)
    }

    pub fn zero() -> Self {
        EvenPoly(Poly::zero())
    }

    pub fn one() -> Self {
        EvenPoly(Poly::constant(T::one()))
    }

    /// `c z^{2k}`.
    pub fn monomial(c: T, k: usize) -> Self {
        EvenPoly(Poly::monomial(c, k))
    }

    pub fn as_poly(&self) -> &Poly<T> {
        &self.0
    }

    pub fn coeffs(&self) -> &[T] {
        self.0.coeffs()
    }

    pub fn coeff(&self, k: usize) -> T {
        self.0.coeff(k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Half-degree `p` (degree `2p` in `z`); `None` for zero.
    pub fn half_degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn leading(&self) -> Option<&T> {
        self.0.leading()
    }

    pub fn add(&self, other: &Self) -> Self {
        EvenPoly(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        EvenPoly(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &T) -> Self {
        EvenPoly(self.0.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        EvenPoly(self.0.mul(&other.0))
    }

    pub fn pow(&self, e: u32) -> Self {
        EvenPoly(self.0.pow(e))
    }

    /// `z^{2p} q(1/z)` with `p` the half-degree.
    pub fn reflect(&self) -> Result<Self> {
        self.0.reflect().map(EvenPoly)
    }

    /// `z^{2n} q(1/z)` for an explicit half-degree `n >= p`.
    pub fn reflect_with_degree(&self, n: usize) -> Self {
        EvenPoly(self.0.reflect_with_degree(n))
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.is_palindrome()
    }

    pub fn eval_z(&self, z: &T) -> T {
        self.0.eval(&(z.clone() * z.clone()))
    }

    pub fn eval_t(&self, t: &T) -> T {
        self.0.eval(t)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> EvenPoly<U> {
        EvenPoly(self.0.map(f))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for EvenPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.coeffs(), "z", 2)
    }
}

/// Product of two even polynomials.
pub fn poly_mul<T: Scalar>(f: &EvenPoly<T>, g: &EvenPoly<T>) -> EvenPoly<T> {
    f.mul(g)
}

/// `z^{2p} q(1/z)`; rejects the zero polynomial.
pub fn reflect<T: Scalar>(q: &EvenPoly<T>) -> Result<EvenPoly<T>> {
    q.reflect()
}

pub fn is_symmetric<T: Scalar>(q: &EvenPoly<T>) -> bool {
    q.is_symmetric()
}
