//! Halving the degree of a symmetric denominator.
//!
//! A palindromic denominator of half-degree `2p`,
//!
//! ```text
//! D_p(z) = Σ_{k=0}^{p-1} d_{p+1-k} (z^{2k} + z^{4p-2k}) + 2 d_1 z^{2p},
//! ```
//!
//! satisfies, for `0 <= n <= (m+1)p - 1`,
//!
//! ```text
//! ∫ z^{2n} / D_p^{m+1} = 2^{-m} Σ_j 4^j C((m+1)p-n-1+j, 2j) ∫ z^{2((m+1)p-1-j)} / E_p^{m+1}
//! ```
//!
//! with `E_p` of half-degree `p` given by [`build_ep`]. Larger `n` are first
//! folded by `z -> 1/z`, which maps `n` to `2p(m+1) - 1 - n`.

use num_rational::BigRational;
use num_traits::One;

use crate::binomial::{binomial, pow2, pow4};
use crate::error::{Error, Result};
use crate::integrand::EvenRationalIntegrand;
use crate::poly::EvenPoly;
use crate::scalar::Scalar;

/// `D_p` in parameter form: `d[0..=p]` holds `d_1, ..., d_{p+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricDenominator<T> {
    d: Vec<T>,
}

impl<T: Scalar> SymmetricDenominator<T> {
    /// From `d_1, ..., d_p` with the leading `d_{p+1} = 1`.
    pub fn new(d: Vec<T>) -> Self {
        assert!(!d.is_empty(), "p must be at least 1");
        let one = d[0].lift(&BigRational::one());
        let mut d = d;
        d.push(one);
        SymmetricDenominator { d }
    }

    /// From `d_1, ..., d_{p+1}`; `d_{p+1}` is the leading (and constant)
    /// coefficient of `D_p`.
    pub fn with_leading(d: Vec<T>) -> Self {
        assert!(d.len() >= 2, "p must be at least 1");
        SymmetricDenominator { d }
    }

    /// Extracts the parameters of a palindromic polynomial of even
    /// half-degree.
    pub fn from_poly(q: &EvenPoly<T>) -> Result<Self> {
        let deg = q.half_degree().ok_or(Error::ZeroPolynomial)?;
        if !q.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if deg % 2 == 1 || deg == 0 {
            return Err(Error::OddHalfDegree(deg));
        }
        let p = deg / 2;
        let c = q.coeff(p);
        let half = c.lift(&BigRational::new(1.into(), 2.into()));
        let mut d = vec![c * half];
        for j in 2..=p + 1 {
            d.push(q.coeff(p + 1 - j));
        }
        Ok(SymmetricDenominator { d })
    }

    pub fn p(&self) -> usize {
        self.d.len() - 1
    }

    /// `d_j` for `1 <= j <= p + 1`.
    pub fn d(&self, j: usize) -> &T {
        &self.d[j - 1]
    }

    pub fn params(&self) -> &[T] {
        &self.d
    }

    /// The palindromic polynomial `D_p` (half-degree `2p`).
    pub fn expand(&self) -> EvenPoly<T> {
        let p = self.p();
        let mut c = vec![T::zero(); 2 * p + 1];
        for k in 0..p {
            c[k] = self.d(p + 1 - k).clone();
            c[2 * p - k] = self.d(p + 1 - k).clone();
        }
        c[p] = self.d(1).clone() + self.d(1).clone();
        EvenPoly::new(c)
    }
}

/// Weight of `d_{j+i}` in the coefficient of `t^{p-i}` of `E_p`, for `i >= 1`.
fn ep_weight(i: usize, j: usize) -> BigRational {
    let (i, j) = (i as i64, j as i64);
    pow2(2 * i - 1)
        * BigRational::new((j + i - 1).into(), i.into())
        * BigRational::from_integer(binomial(j + 2 * i - 2, j - 1))
}

/// `E_p` of half-degree `p`. Its `t^p` coefficient is `Σ d_j` and its
/// constant coefficient is `2^{2p-1} d_{p+1}`.
pub fn build_ep<T: Scalar>(den: &SymmetricDenominator<T>) -> EvenPoly<T> {
    let p = den.p();
    let mut c = vec![T::zero(); p + 1];
    c[p] = den.params().iter().cloned().fold(T::zero(), |a, b| a + b);
    for i in 1..=p {
        let mut acc = T::zero();
        for j in 1..=p - i + 1 {
            let w = ep_weight(i, j);
            let dj = den.d(j + i);
            acc = acc + dj.lift(&w) * dj.clone();
        }
        c[p - i] = acc;
    }
    EvenPoly::new(c)
}

/// One summand `coefficient · z^{2 exponent}` over `E_p^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTerm {
    pub coefficient: BigRational,
    pub exponent: usize,
}

/// Largest admissible numerator exponent `2p(m+1) - 1`.
pub fn convergence_max(p: usize, m: usize) -> usize {
    2 * p * (m + 1) - 1
}

/// Folds `n` into the lower half `0..=(m+1)p-1` by `z -> 1/z`.
pub fn fold_exponent(n: usize, p: usize, m: usize) -> Result<usize> {
    let max = convergence_max(p, m);
    if n > max {
        return Err(Error::OutOfConvergenceRange { n, max });
    }
    Ok(if n + 1 > (m + 1) * p { max - n } else { n })
}

/// Terms of the reduction of `∫ z^{2n} / D_p^{m+1}`; they depend only on
/// `n`, `p` and `m`.
pub fn reduction_terms(n: usize, p: usize, m: usize) -> Result<Vec<ReductionTerm>> {
    let n = fold_exponent(n, p, m)?;
    let top = (m + 1) * p;
    let span = top - n - 1;
    Ok((0..=span)
        .map(|j| ReductionTerm {
            coefficient: pow2(-(m as i64))
                * BigRational::from_integer(
                    pow4(j as u64) * binomial((span + j) as i64, 2 * j as i64),
                ),
            exponent: top - 1 - j,
        })
        .collect())
}

pub fn reduce_monomial<T: Scalar>(
    n: usize,
    den: &SymmetricDenominator<T>,
    m: usize,
) -> Result<Vec<ReductionTerm>> {
    reduction_terms(n, den.p(), m)
}

/// Image of a numerator under the reduction (denominator `E_p^{m+1}`).
pub fn reduce_numerator<T: Scalar>(num: &EvenPoly<T>, p: usize, m: usize) -> Result<EvenPoly<T>> {
    let mut out = EvenPoly::zero();
    for (n, b) in num.coeffs().iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        for term in reduction_terms(n, p, m)? {
            let w = b.lift(&term.coefficient) * b.clone();
            out = out.add(&EvenPoly::monomial(w, term.exponent));
        }
    }
    Ok(out)
}

/// Maps `P / D_p^{m+1}` to the integrand over `E_p^{m+1}` with the same
/// integral over `[0, inf)`.
pub fn reduce_function(r: &EvenRationalIntegrand) -> Result<EvenRationalIntegrand> {
    let den = SymmetricDenominator::from_poly(r.denominator())?;
    let m = r.power() as usize - 1;
    let num = reduce_numerator(r.numerator(), den.p(), m)?;
    EvenRationalIntegrand::new(num, build_ep(&den), r.power())
}
