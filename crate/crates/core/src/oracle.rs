//! Independent checks: double-exponential quadrature over `[0, inf)`, and
//! brute-force evaluation of the binomial identities the reduction rests on.
//!
//! Nothing here calls into the closed-form or reduction code except
//! [`reduced_denominator_expansion_holds`], whose whole point is to compare against
//! [`build_ep`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigfloat::{digits_to_bits, BigFloat};
use crate::binomial::{binomial, factorial, pow2, pow4};
use crate::error::{Error, Result};
use crate::integrand::EvenRationalIntegrand;
use crate::poly::EvenPoly;
use crate::reduction::{build_ep, SymmetricDenominator};
use crate::scalar::{Real, Scalar};

/// Refinement levels tried before giving up.
const MAX_LEVELS: u32 = 16;

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: BigFloat,
    /// Difference between the last two refinement levels.
    pub error_estimate: BigFloat,
    pub evaluations: usize,
}

fn pow10_neg(k: u32, prec: u32) -> BigFloat {
    BigFloat::from_rational(
        &num_traits::pow(BigRational::new(1.into(), 10.into()), k as usize),
        prec,
    )
}

/// Trapezoidal sums of `g(t)` over the real line with step `2^-l`, halving
/// until two levels agree to `digits + 5` significant digits. `g` must
/// decay doubly exponentially in both directions.
fn double_exponential(
    g: &dyn Fn(&BigFloat) -> Result<BigFloat>,
    digits: u32,
    prec: u32,
) -> Result<QuadratureResult> {
    let tiny = pow10_neg(digits + 12, prec);
    let target = pow10_neg(digits + 5, prec);
    let mut evaluations = 0usize;
    let mut eval = |t: &BigFloat| -> Result<BigFloat> {
        evaluations += 1;
        g(t)
    };

    // Find the truncation window on the coarse grid h = 1/2.
    let h0 = BigFloat::from_rational(&BigRational::new(1.into(), 2.into()), prec);
    let mut total = eval(&BigFloat::zero().with_prec(prec))?;
    let mut peak = total.abs();
    let mut bounds = [0i64; 2];
    for (side, sign) in [(0usize, 1i64), (1, -1)] {
        let mut quiet = 0;
        let mut k = 0i64;
        while quiet < 3 {
            k += 1;
            if k > 400 {
                return Err(Error::NonConvergentIntegrand(
                    "integrand does not decay".into(),
                ));
            }
            let t = h0.clone() * BigFloat::from_i64(sign * k, prec);
            let v = eval(&t)?;
            let a = v.abs();
            if a > peak {
                peak = a.clone();
            }
            total = total + v;
            if a <= tiny.clone() * peak.clone() {
                quiet += 1;
            } else {
                quiet = 0;
            }
        }
        bounds[side] = k + 1;
    }
    let (kmax, kmin) = (bounds[0], -bounds[1]);
    let mut estimate = total.clone() * h0.clone();
    let mut level = 1u32;
    loop {
        // Odd multiples of h = 2^-(level+1) inside the window.
        let denom = 1i64 << (level + 1);
        let h = BigFloat::from_rational(&BigRational::new(1.into(), denom.into()), prec);
        let lo = kmin * (denom / 2);
        let hi = kmax * (denom / 2);
        let mut j = lo + 1;
        while j < hi {
            let t = h.clone() * BigFloat::from_i64(j, prec);
            total = total + eval(&t)?;
            j += 2;
        }
        let next = total.clone() * h;
        let diff = (next.clone() - estimate.clone()).abs();
        estimate = next;
        if diff <= target.clone() * estimate.abs() || estimate.is_zero() {
            return Ok(QuadratureResult {
                value: estimate,
                error_estimate: diff,
                evaluations,
            });
        }
        level += 1;
        if level > MAX_LEVELS {
            return Err(Error::PrecisionNotReached {
                best: estimate.to_decimal(digits),
                bound: diff.to_decimal(6),
            });
        }
    }
}

/// `∫_0^inf num(z²) / den(z²)^power dz` for float coefficients.
pub fn integrate_float_coeffs(
    num: &EvenPoly<BigFloat>,
    den: &EvenPoly<BigFloat>,
    power: u32,
    digits: u32,
) -> Result<QuadratureResult> {
    let prec = digits_to_bits(digits + 15);
    let num = num.map(|c| c.with_prec(prec));
    let den = den.map(|c| c.with_prec(prec));
    let half_pi = BigFloat::pi(prec) / BigFloat::from_i64(2, prec);
    let g = |t: &BigFloat| -> Result<BigFloat> {
        let s = half_pi.clone() * t.sinh();
        let z = s.exp();
        let tt = z.clone() * z.clone();
        let d = den.eval_t(&tt);
        if !d.is_positive_value() {
            if z.is_zero() || !z.is_finite_value() {
                return Ok(BigFloat::zero());
            }
            return Err(Error::NonConvergentIntegrand(format!(
                "denominator not positive at z = {z}"
            )));
        }
        let f = num.eval_t(&tt) / d.powi(power as i32);
        Ok(f * z * half_pi.clone() * t.cosh())
    };
    let mut res = double_exponential(&g, digits, prec)?;
    res.value = res.value.with_prec(digits_to_bits(digits));
    Ok(res)
}

/// High-precision quadrature of an exact integrand.
pub fn integrate_numeric(r: &EvenRationalIntegrand, digits: u32) -> Result<QuadratureResult> {
    let prec = digits_to_bits(digits + 15);
    let lift = |p: &EvenPoly<BigRational>| p.map(|c| BigFloat::from_rational(c, prec));
    integrate_float_coeffs(
        &lift(r.numerator()),
        &lift(r.denominator()),
        r.power(),
        digits,
    )
}

/// `∫_a^b f` by tanh-sinh quadrature, for `f` smooth on `[a, b]`.
pub fn integrate_interval(
    f: &dyn Fn(&BigFloat) -> BigFloat,
    a: &BigFloat,
    b: &BigFloat,
    digits: u32,
) -> Result<QuadratureResult> {
    let prec = digits_to_bits(digits + 15);
    let (a, b) = (a.with_prec(prec), b.with_prec(prec));
    let two = BigFloat::from_i64(2, prec);
    let mid = (a.clone() + b.clone()) / two.clone();
    let half = (b - a) / two.clone();
    let half_pi = BigFloat::pi(prec) / two;
    let g = |t: &BigFloat| -> Result<BigFloat> {
        let s = half_pi.clone() * t.sinh();
        let c = s.cosh();
        let x = mid.clone() + half.clone() * s.tanh();
        let w = half.clone() * half_pi.clone() * t.cosh() / (c.clone() * c);
        Ok(f(&x) * w)
    };
    double_exponential(&g, digits, prec)
}

/// `G(a, b) = ∫_0^{π/2} dθ / sqrt(a² cos²θ + b² sin²θ)`, by quadrature.
pub fn elliptic_g(a: &BigFloat, b: &BigFloat, digits: u32) -> Result<BigFloat> {
    let prec = digits_to_bits(digits + 15);
    let (a2, b2) = (
        a.with_prec(prec) * a.with_prec(prec),
        b.with_prec(prec) * b.with_prec(prec),
    );
    let f = |th: &BigFloat| {
        let (c, s) = (th.cos(), th.sin());
        let v = a2.clone() * c.clone() * c + b2.clone() * s.clone() * s;
        BigFloat::one().with_prec(prec) / v.sqrt()
    };
    let half_pi = BigFloat::pi(prec) / BigFloat::from_i64(2, prec);
    Ok(integrate_interval(&f, &BigFloat::zero().with_prec(prec), &half_pi, digits)?.value)
}

fn check_kn(k: i64, n: i64, lo: i64) -> Result<()> {
    if k < lo || k > n || n < 1 {
        return Err(Error::RangeViolation(format!(
            "need {lo} <= k <= N, N >= 1; got k = {k}, N = {n}"
        )));
    }
    Ok(())
}

/// Both sides of `Σ_j C(2N+1, 2j) C(N-j, k) = C(2N-k, k) 4^{N-k}`.
pub fn odd_binomial_sum(k: i64, n: i64) -> Result<(BigInt, BigInt)> {
    check_kn(k, n, 1)?;
    let lhs = (0..=n - k)
        .map(|j| binomial(2 * n + 1, 2 * j) * binomial(n - j, k))
        .sum();
    let rhs = binomial(2 * n - k, k) * pow4((n - k) as u64);
    Ok((lhs, rhs))
}

/// Both sides of `Σ_{j<=k} C(2N, 2j) C(N-j, N-k) = 2^{2k-1} (N/k) C(k+N-1, N-k)`.
pub fn even_binomial_sum(k: i64, n: i64) -> Result<(BigRational, BigRational)> {
    check_kn(k, n, 1)?;
    let lhs: BigInt = (0..=k)
        .map(|j| binomial(2 * n, 2 * j) * binomial(n - j, n - k))
        .sum();
    let rhs = pow2(2 * k - 1)
        * BigRational::new(n.into(), k.into())
        * BigRational::from_integer(binomial(k + n - 1, n - k));
    Ok((BigRational::from_integer(lhs), rhs))
}

fn t_poly(c: &[i64]) -> EvenPoly<BigRational> {
    EvenPoly::new(
        c.iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect(),
    )
}

/// `Σ_j C(2N+1, 2j) (1+z²)^{N-j} = Σ_j C(N+j, 2j) 4^j z^{2(N-j)}`, compared
/// coefficient by coefficient.
pub fn odd_binomial_expansion_holds(n: i64) -> bool {
    let one_plus = t_poly(&[1, 1]);
    let mut lhs = EvenPoly::zero();
    let mut rhs = EvenPoly::zero();
    for j in 0..=n {
        let c = BigRational::from_integer(binomial(2 * n + 1, 2 * j));
        lhs = lhs.add(&one_plus.pow((n - j) as u32).scale(&c));
        let w = BigRational::from_integer(binomial(n + j, 2 * j) * pow4(j as u64));
        rhs = rhs.add(&EvenPoly::monomial(w, (n - j) as usize));
    }
    lhs == rhs
}

/// Expands `Σ_k d_{p+1-k} z^{2k} Σ_j C(2p-2k, 2j) (1+z²)^{p-k-j}` with
/// `d_{p+1} = 1` and compares it with `build_ep`.
pub fn reduced_denominator_expansion_holds(d: &[BigRational]) -> bool {
    let p = d.len();
    let den = SymmetricDenominator::new(d.to_vec());
    let one_plus = t_poly(&[1, 1]);
    let mut lhs = EvenPoly::zero();
    for k in 0..=p {
        let mut inner = EvenPoly::zero();
        for j in 0..=p - k {
            let c = BigRational::from_integer(binomial(2 * (p - k) as i64, 2 * j as i64));
            inner = inner.add(&one_plus.pow((p - k - j) as u32).scale(&c));
        }
        let shifted = EvenPoly::monomial(den.d(p + 1 - k).clone(), k).mul(&inner);
        lhs = lhs.add(&shifted);
    }
    lhs == build_ep(&den)
}

/// `F(k; j)` of the WZ pair certifying [`even_binomial_sum`].
pub fn wz_f(n: i64, k: i64, j: i64) -> BigRational {
    if j < 0 || j > k {
        return BigRational::zero();
    }
    let num = BigInt::from(k) * binomial(2 * n, 2 * j) * binomial(n - j, n - k);
    let den = BigInt::from(n) * binomial(k + n - 1, n - k);
    BigRational::new(num, den) * pow2(1 - 2 * k)
}

/// `G(k; j) = F(k; j) · j(2j-1) / (2(N+k)(k-j+1))`, with the removable
/// singularity at `j = k+1` taken from the factorial form of `F`.
pub fn wz_g(n: i64, k: i64, j: i64) -> BigRational {
    if j < 0 || j > k + 1 || j > n {
        return BigRational::zero();
    }
    // C(N-j, N-k) / (k-j+1) = (N-j)! / ((N-k)! (k-j+1)!)
    let c = BigRational::new(
        factorial((n - j) as u64),
        factorial((n - k) as u64) * factorial((k - j + 1) as u64),
    );
    let f_part = BigRational::from_integer(BigInt::from(k) * binomial(2 * n, 2 * j))
        / BigRational::from_integer(BigInt::from(n) * binomial(k + n - 1, n - k))
        * pow2(1 - 2 * k);
    f_part * c * BigRational::new(BigInt::from(j * (2 * j - 1)), BigInt::from(2 * (n + k)))
}

/// `F(k; j) - F(k+1; j) = G(k; j+1) - G(k; j)` for all `j`, and `Σ_j F(k; j) = 1`.
pub fn wz_certificate_holds(n: i64, k: i64) -> bool {
    if k < 1 || k >= n {
        return false;
    }
    let telescopes =
        (0..=n + 1).all(|j| wz_f(n, k, j) - wz_f(n, k + 1, j) == wz_g(n, k, j + 1) - wz_g(n, k, j));
    let unit = (0..=k)
        .map(|j| wz_f(n, k, j))
        .fold(BigRational::zero(), |a, b| a + b)
        .is_one();
    telescopes && unit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrand::even_poly_from_ints;
    use crate::scalar::rat;

    #[test]
    fn arctangent() {
        let r =
            EvenRationalIntegrand::new(even_poly_from_ints(&[1]), even_poly_from_ints(&[1, 1]), 1)
                .unwrap();
        let q = integrate_numeric(&r, 30).unwrap();
        let half_pi = BigFloat::pi(200) / BigFloat::from_i64(2, 64);
        assert_eq!(q.value.to_decimal(30), half_pi.to_decimal(30));
    }

    #[test]
    fn degree_six_example() {
        let r = EvenRationalIntegrand::new(
            even_poly_from_ints(&[1230, 25000, 45]),
            even_poly_from_ints(&[1, 3000, 1, 1]),
            1,
        )
        .unwrap();
        let q = integrate_numeric(&r, 20).unwrap();
        assert_eq!(q.value.to_decimal(6), "109.889");
    }

    #[test]
    fn identity_spot_checks() {
        assert_eq!(
            odd_binomial_sum(1, 2).unwrap(),
            (BigInt::from(12), BigInt::from(12))
        );
        assert_eq!(
            odd_binomial_sum(5, 5).unwrap(),
            (BigInt::from(1), BigInt::from(1))
        );
        assert!(odd_binomial_sum(0, 3).is_err());
        assert!(odd_binomial_expansion_holds(0) && odd_binomial_expansion_holds(1));
        assert!(reduced_denominator_expansion_holds(&[rat(7)]));
        let (l, r) = even_binomial_sum(3, 3).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn wz_small() {
        for n in 2..8 {
            for k in 1..n {
                assert!(wz_certificate_holds(n, k), "N = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn g_matches_quarter_period() {
        // G(1, 1) = π/2.
        let one = BigFloat::from_i64(1, 200);
        let g = elliptic_g(&one, &one, 30).unwrap();
        assert_eq!(
            g.to_decimal(30),
            (BigFloat::pi(200) / BigFloat::from_i64(2, 64)).to_decimal(30)
        );
    }
}
