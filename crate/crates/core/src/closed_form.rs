//! Closed forms for the base families: powers of linear and quartic
//! denominators in `z²`, and powers of symmetric octics.
//!
//! The quartic sums use `C(2m-2j, m-j)` as the first binomial; this is the
//! factor that reduces to Wallis' formula at `a = 1`. Exponents above the
//! middle of the convergence range are folded by `z -> 1/z`, which for the
//! quartic `b z⁴ + 2a z² + c` maps `n` to `2m+1-n` and swaps `b` and `c`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::{binomial, binomial_q, pow2};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::integrand::EvenRationalIntegrand;
use crate::poly::{EvenPoly, Poly};
use crate::reduction::reduction_terms;
use crate::scalar::{rat, ratio};

fn q(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn half_integer(num: i64) -> BigRational {
    ratio(num, 2)
}

/// `∫ dz / (1 + z²)^{m+1} = π C(2m, m) / 2^{2m+1}`.
pub fn wallis(m: usize) -> Expr {
    let m = m as i64;
    Expr::pi().scale(&(binomial_q(2 * m, m) * pow2(-(2 * m + 1))))
}

/// `∫ u^{r-1/2} / (1+u)^s du` over `[0, inf)`.
pub fn beta_half_integral(r: usize, s: usize) -> Result<Expr> {
    if s < r + 1 {
        return Err(Error::OutOfConvergenceRange {
            n: r,
            max: s.saturating_sub(1),
        });
    }
    let (r, s) = (r as i64, s as i64);
    let c = pow2(-2 * (s - 1)) * binomial_q(2 * r, r) * binomial_q(2 * (s - r - 1), s - r - 1)
        / binomial_q(s - 1, r);
    Ok(Expr::pi().scale(&c))
}

/// `∫ z^{2n} / (α z² + β)^s dz` for `α, β > 0`.
pub fn linear_base(n: usize, alpha: &BigRational, beta: &BigRational, s: usize) -> Result<Expr> {
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    let ratio_ba = Expr::rational(beta / alpha).pow(&half_integer(2 * n as i64 + 1));
    let scale = beta.pow(-(s as i32)) / rat(2);
    Ok((ratio_ba * beta_half_integral(n, s)?).scale(&scale))
}

/// `∫ z^{2n} / (z⁴ + 2a z² + 1)^{m+1} dz` for `a > -1`, `0 <= n <= 2m+1`.
pub fn quartic(a: &BigRational, m: usize, n: usize) -> Result<Expr> {
    if a <= &-BigRational::one() {
        return Err(Error::HypothesisViolation(format!(
            "need a > -1, got a = {a}"
        )));
    }
    if n > 2 * m + 1 {
        return Err(Error::OutOfConvergenceRange { n, max: 2 * m + 1 });
    }
    let n = if n > m { 2 * m + 1 - n } else { n };
    Ok(quartic_sum(a, m, n, m - n))
}

/// The plain quartic sum with an explicit upper limit; for `n > m` the
/// second binomial has a negative upper index.
fn quartic_sum(a: &BigRational, m: usize, n: usize, upper: usize) -> Expr {
    let (mi, ni) = (m as i64, n as i64);
    let one_a = BigRational::one() + a;
    let mut poly = BigRational::zero();
    let mut power = BigRational::one();
    for j in 0..=upper as i64 {
        let w = pow2(j)
            * binomial_q(2 * mi - 2 * j, mi - j)
            * binomial_q(mi - ni + j, 2 * j)
            * binomial_q(2 * j, j)
            / binomial_q(mi, j);
        poly += w * &power;
        power *= &one_a;
    }
    let prefactor = Expr::rational(one_a).pow(&half_integer(-(2 * mi + 1)));
    (Expr::pi() * prefactor).scale(&(poly * pow2(-3 * mi) * pow2(-1)))
        * Expr::int(2).pow(&ratio(-1, 2))
}

/// Upper-branch sum exactly as stated for `m+1 <= n <= 2m+1`.
pub fn quartic_upper_branch(a: &BigRational, m: usize, n: usize) -> Result<Expr> {
    if n <= m || n > 2 * m + 1 {
        return Err(Error::OutOfConvergenceRange { n, max: 2 * m + 1 });
    }
    Ok(quartic_sum(a, m, n, n - m - 1))
}

fn check_scaled(a: &BigRational, b: &BigRational, c: &BigRational) -> Result<()> {
    if !b.is_positive() || !c.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    // a > -sqrt(bc), decided exactly.
    if a.is_negative() && a * a >= b * c {
        return Err(Error::HypothesisViolation(format!(
            "need a > -sqrt(bc), got a = {a}, bc = {}",
            b * c
        )));
    }
    Ok(())
}

/// `∫ z^{2n} / (b z⁴ + 2a z² + c)^{m+1} dz` for `b, c > 0`,
/// `a > -sqrt(bc)`, `0 <= n <= 2m+1`.
pub fn quartic_scaled(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    m: usize,
    n: usize,
) -> Result<Expr> {
    check_scaled(a, b, c)?;
    if n > 2 * m + 1 {
        return Err(Error::OutOfConvergenceRange { n, max: 2 * m + 1 });
    }
    if n > m {
        return Ok(scaled_sum(a, c, b, m, 2 * m + 1 - n, m - (2 * m + 1 - n)));
    }
    Ok(scaled_sum(a, b, c, m, n, m - n))
}

/// Upper-branch scaled sum exactly as stated for `m+1 <= n <= 2m+1`.
pub fn quartic_scaled_upper_branch(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    m: usize,
    n: usize,
) -> Result<Expr> {
    check_scaled(a, b, c)?;
    if n <= m || n > 2 * m + 1 {
        return Err(Error::OutOfConvergenceRange { n, max: 2 * m + 1 });
    }
    Ok(scaled_sum(a, b, c, m, n, n - m - 1))
}

fn scaled_sum(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    m: usize,
    n: usize,
    upper: usize,
) -> Expr {
    let (mi, ni) = (m as i64, n as i64);
    let root_bc = Expr::rational(b * c).sqrt();
    let base = Expr::rational(a.clone()) + root_bc.clone();
    // (a / sqrt(bc) + 1) = (a + sqrt(bc)) / sqrt(bc)
    let ratio_term = base.clone() / root_bc;
    let mut terms = Vec::new();
    for k in 0..=upper as i64 {
        let w = pow2(k)
            * binomial_q(2 * mi - 2 * k, mi - k)
            * binomial_q(mi - ni + k, 2 * k)
            * binomial_q(2 * k, k)
            / binomial_q(mi, k);
        if w.is_zero() {
            continue;
        }
        terms.push(ratio_term.powi(k).scale(&w));
    }
    let prefactor = Expr::product([
        Expr::pi(),
        Expr::rational(c.clone()).pow(&ratio(-1, 2)),
        Expr::rational(c / b).pow(&half_integer(-(mi - ni))),
        (base.scale(&rat(8))).pow(&half_integer(-(2 * mi + 1))),
    ]);
    prefactor * Expr::sum(terms)
}

/// Parameters of `z⁸ + a₂ z⁶ + 2a₁ z⁴ + a₂ z² + 1`.
fn sym8_constants(a1: &BigRational, a2: &BigRational) -> Result<(BigRational, BigRational)> {
    let c1 = a2 + rat(4);
    let c2 = BigRational::one() + a1 + a2;
    if !c2.is_positive() {
        return Err(Error::HypothesisViolation(format!(
            "need 1 + a1 + a2 > 0, got {c2}"
        )));
    }
    if c1.is_negative() && &c1 * &c1 >= rat(8) * &c2 {
        return Err(Error::HypothesisViolation(format!(
            "need a2 + 4 > -sqrt(8(1 + a1 + a2)), got c1 = {c1}, c2 = {c2}"
        )));
    }
    Ok((c1, c2))
}

/// `∫ z^{2n} / (z⁸ + a₂ z⁶ + 2a₁ z⁴ + a₂ z² + 1)^{m+1} dz`, `0 <= n <= 4m+3`,
/// by the double sum of terms `t_{k,j}`.
pub fn sym8(a1: &BigRational, a2: &BigRational, m: usize, n: usize) -> Result<Expr> {
    let (c1, c2) = sym8_constants(a1, a2)?;
    if n > 4 * m + 3 {
        return Err(Error::OutOfConvergenceRange { n, max: 4 * m + 3 });
    }
    let n = if n > 2 * m + 1 { 4 * m + 3 - n } else { n };
    let (mi, ni) = (m as i64, n as i64);
    let surd = Expr::rational(c1.clone()) + Expr::rational(rat(8) * &c2).sqrt();
    let t = |k: i64, j: i64| -> Option<Expr> {
        let w = binomial_q(4 * mi - ni - k + 2, k - ni)
            * binomial_q(2 * mi - 2 * j, mi - j)
            * binomial_q(mi - k + j, 2 * j)
            * binomial_q(2 * j, j)
            / binomial_q(mi, j);
        if w.is_zero() {
            return None;
        }
        Some(
            Expr::product([
                Expr::pi(),
                Expr::int(2).pow(&half_integer(-(3 * mi + 2 + k + j))),
                Expr::rational(c2.clone()).pow(&half_integer(mi - k - j)),
                surd.pow(&(rat(j - mi) - ratio(1, 2))),
            ])
            .scale(&w),
        )
    };
    let mut terms = Vec::new();
    if n <= m {
        for k in ni..=mi {
            for j in 0..=mi - k {
                terms.extend(t(k, j));
            }
        }
    }
    for k in (ni.max(mi + 1))..=(2 * mi + 1) {
        for j in 0..=k - mi - 1 {
            terms.extend(t(k, j));
        }
    }
    Ok(Expr::sum(terms))
}

/// The same integral computed by reducing to `c₂ z⁴ + 2c₁ z² + 8` and
/// applying [`quartic_scaled`] to each term.
pub fn sym8_via_reduction(a1: &BigRational, a2: &BigRational, m: usize, n: usize) -> Result<Expr> {
    let (c1, c2) = sym8_constants(a1, a2)?;
    let mut out = Vec::new();
    for term in reduction_terms(n, 2, m)? {
        let v = quartic_scaled(&c1, &c2, &rat(8), m, term.exponent)?;
        out.push(v.scale(&term.coefficient));
    }
    Ok(Expr::sum(out))
}

/// `P_m(a) = 2^{-2m} Σ_k 2^k C(2m-2k, m-k) C(m+k, m) (a+1)^k` in powers of `a`.
pub fn pm_polynomial(m: usize) -> Poly<BigRational> {
    let mi = m as i64;
    let a_plus_1 = Poly::new(vec![rat(1), rat(1)]);
    let mut acc = Poly::zero();
    for k in 0..=mi {
        let w = pow2(k) * q(binomial(2 * mi - 2 * k, mi - k) * binomial(mi + k, mi));
        acc = acc.add(&a_plus_1.pow(k as u32).scale(&w));
    }
    acc.scale(&pow2(-2 * mi))
}

/// `∫ P(z) / (b z⁴ + 2a z² + c)^{m+1} dz` term by term.
pub fn integrate_quartic_family(r: &EvenRationalIntegrand) -> Result<Expr> {
    let den = r.denominator();
    if den.half_degree() != Some(2) {
        return Err(Error::UnsupportedDegree(den.half_degree().unwrap_or(0)));
    }
    let (c, a, b) = (den.coeff(0), den.coeff(1) / rat(2), den.coeff(2));
    let m = r.power() as usize - 1;
    let mut out = Vec::new();
    for (n, bn) in r.numerator().coeffs().iter().enumerate() {
        if bn.is_zero() {
            continue;
        }
        out.push(quartic_scaled(&a, &b, &c, m, n)?.scale(bn));
    }
    Ok(Expr::sum(out))
}

/// `∫ P(z) / (α z² + β)^s dz` term by term.
pub fn integrate_linear_family(r: &EvenRationalIntegrand) -> Result<Expr> {
    let den = r.denominator();
    if den.half_degree() != Some(1) {
        return Err(Error::UnsupportedDegree(den.half_degree().unwrap_or(0)));
    }
    let (beta, alpha) = (den.coeff(0), den.coeff(1));
    let s = r.power() as usize;
    let mut out = Vec::new();
    for (n, bn) in r.numerator().coeffs().iter().enumerate() {
        if bn.is_zero() {
            continue;
        }
        out.push(linear_base(n, &alpha, &beta, s)?.scale(bn));
    }
    Ok(Expr::sum(out))
}

/// `∫ P(z) / D(z)^{m+1} dz` for a palindromic octic `D = λ (z⁸ + a₂ z⁶ + 2a₁ z⁴ + a₂ z² + 1)`.
pub fn integrate_sym8_family(r: &EvenRationalIntegrand) -> Result<Expr> {
    let den = r.denominator();
    if den.half_degree() != Some(4) {
        return Err(Error::UnsupportedDegree(den.half_degree().unwrap_or(0)));
    }
    if !den.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let lead = den.coeff(0);
    let a2 = den.coeff(1) / &lead;
    let a1 = den.coeff(2) / (&lead * rat(2));
    let m = r.power() as usize - 1;
    let mut out = Vec::new();
    for (n, bn) in r.numerator().coeffs().iter().enumerate() {
        if bn.is_zero() {
            continue;
        }
        out.push(sym8(&a1, &a2, m, n)?.scale(bn));
    }
    Ok(Expr::sum(out).scale(&lead.pow(-(r.power() as i32))))
}

/// Even polynomial `b z⁴ + 2a z² + c` (handy for building integrands).
pub fn quartic_denominator(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> EvenPoly<BigRational> {
    EvenPoly::new(vec![c.clone(), a * rat(2), b.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_expression;

    fn close(a: &Expr, b: &Expr, digits: u32) {
        assert_eq!(
            eval_expression(a, digits).unwrap(),
            eval_expression(b, digits).unwrap(),
            "{a} vs {b}"
        );
    }

    #[test]
    fn wallis_values() {
        assert_eq!(wallis(0), Expr::pi().scale(&ratio(1, 2)));
        assert_eq!(wallis(1), Expr::pi().scale(&ratio(1, 4)));
        assert_eq!(wallis(3), Expr::pi().scale(&ratio(5, 32)));
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_half_integral(0, 1).unwrap(), Expr::pi());
        assert_eq!(
            beta_half_integral(0, 2).unwrap(),
            Expr::pi().scale(&ratio(1, 2))
        );
        assert_eq!(
            beta_half_integral(1, 3).unwrap(),
            Expr::pi().scale(&ratio(1, 8))
        );
        assert!(beta_half_integral(2, 2).is_err());
    }

    #[test]
    fn quartic_wallis_degeneration() {
        assert_eq!(
            quartic(&rat(1), 1, 0).unwrap(),
            Expr::pi().scale(&ratio(5, 32))
        );
        for m in 0..=10 {
            assert_eq!(
                quartic(&rat(1), m, 0).unwrap(),
                wallis(2 * m + 1),
                "m = {m}"
            );
        }
    }

    #[test]
    fn quartic_diagonal_case() {
        // n = m: π C(2m, m) / (2^{3m+3/2} (1+a)^{m+1/2}).
        let a = ratio(3, 7);
        for m in 0..6i64 {
            let expected = Expr::pi().scale(&binomial_q(2 * m, m))
                * Expr::int(2).pow(&half_integer(-(6 * m + 3)))
                * Expr::rational(BigRational::one() + &a).pow(&half_integer(-(2 * m + 1)));
            assert_eq!(quartic(&a, m as usize, m as usize).unwrap(), expected);
        }
    }

    #[test]
    fn first_quartic_example() {
        let v = quartic(&rat(2), 8, 1).unwrap();
        assert_eq!(v.to_string(), "23698523*pi/(12230590464*sqrt(6))");
    }

    #[test]
    fn upper_branch_agrees_with_folding() {
        for m in 0..6 {
            for n in m + 1..=2 * m + 1 {
                let a = ratio(5, 3);
                close(
                    &quartic(&a, m, n).unwrap(),
                    &quartic_upper_branch(&a, m, n).unwrap(),
                    40,
                );
                let (b, c) = (rat(2), ratio(7, 2));
                close(
                    &quartic_scaled(&a, &b, &c, m, n).unwrap(),
                    &quartic_scaled_upper_branch(&a, &b, &c, m, n).unwrap(),
                    40,
                );
            }
        }
    }

    #[test]
    fn scaled_reduces_to_plain() {
        for m in 0..5 {
            for n in 0..=2 * m + 1 {
                let a = ratio(-1, 3);
                close(
                    &quartic_scaled(&a, &rat(1), &rat(1), m, n).unwrap(),
                    &quartic(&a, m, n).unwrap(),
                    40,
                );
            }
        }
    }

    #[test]
    fn second_quartic_example() {
        let v = quartic_scaled(&rat(1), &rat(2), &rat(3), 10, 3).unwrap();
        let s6 = Expr::int(6).sqrt();
        let expected =
            Expr::int(11) * Expr::pi() * (Expr::int(14229567) + Expr::int(4937288) * s6.clone())
                / (Expr::int(440301256704) * (Expr::one() + s6).pow(&ratio(21, 2)));
        close(&v, &expected, 50);
    }

    #[test]
    fn octic_example() {
        let v = sym8(&rat(7), &rat(5), 3, 0).unwrap();
        let s26 = Expr::int(26).sqrt();
        let expected = (Expr::int(14325195794) + Expr::int(2815367209) * s26.clone()) * Expr::pi()
            / (Expr::int(14623232) * (Expr::int(9) + Expr::int(2) * s26).pow(&ratio(7, 2)));
        close(&v, &expected, 50);
    }

    #[test]
    fn octic_square_of_quartic() {
        // (z⁴ + 2z² + 1)² = z⁸ + 4z⁶ + 6z⁴ + 4z² + 1 = (1 + z²)⁴.
        for m in 0..3 {
            assert_eq!(
                crate::eval::eval_expression(&sym8(&rat(3), &rat(4), m, 0).unwrap(), 40).unwrap(),
                crate::eval::eval_expression(&wallis(4 * m + 3), 40).unwrap()
            );
        }
    }

    #[test]
    fn octic_matches_reduction_route() {
        for m in 0..3 {
            for n in 0..=4 * m + 3 {
                close(
                    &sym8(&ratio(3, 2), &ratio(-1, 4), m, n).unwrap(),
                    &sym8_via_reduction(&ratio(3, 2), &ratio(-1, 4), m, n).unwrap(),
                    40,
                );
            }
        }
    }

    #[test]
    fn pm_values() {
        assert_eq!(pm_polynomial(0), Poly::new(vec![rat(1)]));
        assert_eq!(pm_polynomial(1), Poly::new(vec![ratio(3, 2), rat(1)]));
    }

    #[test]
    fn pm_matches_quartic() {
        let a = ratio(2, 5);
        for m in 0..6i64 {
            let pm = pm_polynomial(m as usize).eval(&a);
            let expected = Expr::pi().scale(&pm)
                * Expr::int(2).pow(&half_integer(-(2 * m + 3)))
                * Expr::rational(BigRational::one() + &a).pow(&half_integer(-(2 * m + 1)));
            close(&quartic(&a, m as usize, 0).unwrap(), &expected, 40);
        }
    }

    #[test]
    fn hypotheses() {
        assert!(matches!(
            quartic(&rat(-1), 0, 0),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            quartic_scaled(&rat(-3), &rat(2), &rat(4), 0, 0),
            Err(Error::HypothesisViolation(_))
        ));
        assert_eq!(
            quartic_scaled(&rat(1), &rat(0), &rat(4), 0, 0),
            Err(Error::NonPositiveScale)
        );
        assert!(matches!(
            sym8(&rat(-3), &rat(1), 0, 0),
            Err(Error::HypothesisViolation(_))
        ));
        assert_eq!(
            quartic(&rat(1), 1, 4),
            Err(Error::OutOfConvergenceRange { n: 4, max: 3 })
        );
    }
}
