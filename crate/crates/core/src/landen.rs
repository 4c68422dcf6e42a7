//! The rational Landen transformation on normalized even rational functions
//!
//! ```text
//! R(z) = (b_0 z^{2p-2} + ... + b_{p-1}) / (z^{2p} + a_1 z^{2p-2} + ... + a_{p-1} z² + 1)
//! ```
//!
//! One step multiplies numerator and denominator by the reflected
//! denominator, halves the resulting palindromic denominator, and rescales
//! `z -> λz` so that the new denominator is again normalized. The integral
//! over `[0, inf)` is unchanged, and iterating drives the point towards
//! `a_i = C(p, i)`, `b_i = L·C(p-1, i)` with integral `L·π/2`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigfloat::{digits_to_bits, BigFloat};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::eval::eval_bigfloat;
use crate::expr::Expr;
use crate::integrand::EvenRationalIntegrand;
use crate::poly::EvenPoly;
use crate::reduction::{build_ep, reduce_numerator, SymmetricDenominator};
use crate::scalar::{ratio, Real, Scalar};

/// Coefficients `a_1..a_{p-1}` and `b_0..b_{p-1}` of a normalized integrand.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterPoint<T> {
    pub a: Vec<T>,
    pub b: Vec<T>,
}

impl<T> ParameterPoint<T> {
    pub fn new(a: Vec<T>, b: Vec<T>) -> Result<Self> {
        if b.len() < 2 || a.len() + 1 != b.len() {
            return Err(Error::RangeViolation(format!(
                "need p >= 2 with {} a-entries and {} b-entries",
                b.len().saturating_sub(1),
                b.len()
            )));
        }
        Ok(ParameterPoint { a, b })
    }

    pub fn p(&self) -> usize {
        self.b.len()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> ParameterPoint<U> {
        ParameterPoint {
            a: self.a.iter().map(&f).collect(),
            b: self.b.iter().map(&f).collect(),
        }
    }
}

impl<T: Scalar> ParameterPoint<T> {
    /// Denominator `Q`, ascending in `t = z²`.
    pub fn denominator(&self) -> EvenPoly<T> {
        let one = self.b[0].lift(&BigRational::one());
        let mut c = vec![one.clone()];
        c.extend(self.a.iter().rev().cloned());
        c.push(one);
        EvenPoly::new(c)
    }

    /// Numerator `P`, ascending in `t = z²`.
    pub fn numerator(&self) -> EvenPoly<T> {
        EvenPoly::new(self.b.iter().rev().cloned().collect())
    }

    pub fn is_positive(&self) -> bool {
        self.a.iter().chain(&self.b).all(Scalar::is_positive_value)
    }
}

impl ParameterPoint<BigRational> {
    pub fn from_integrand(r: &EvenRationalIntegrand) -> Result<Self> {
        if r.power() != 1 {
            return Err(Error::UnsupportedPower(r.power()));
        }
        let q = r.denominator();
        let p = q.half_degree().ok_or(Error::ZeroPolynomial)?;
        if p < 2 || !q.coeff(0).is_one() || !q.coeff(p).is_one() {
            return Err(Error::NotNormalized);
        }
        let a = (1..p).map(|i| q.coeff(p - i)).collect();
        let b = (0..p).map(|i| r.numerator().coeff(p - 1 - i)).collect();
        ParameterPoint::new(a, b)
    }

    pub fn integrand(&self) -> Result<EvenRationalIntegrand> {
        EvenRationalIntegrand::new(self.numerator(), self.denominator(), 1)
    }

    pub fn to_bigfloat(&self, prec: u32) -> ParameterPoint<BigFloat> {
        self.map(|x| BigFloat::from_rational(x, prec))
    }
}

impl ParameterPoint<Expr> {
    /// Numerical value of every coordinate to `digits` significant digits.
    pub fn evaluate(&self, digits: u32) -> Result<ParameterPoint<BigFloat>> {
        let eval = |v: &[Expr]| {
            v.iter()
                .map(|e| eval_bigfloat(e, digits))
                .collect::<Result<Vec<_>>>()
        };
        Ok(ParameterPoint {
            a: eval(&self.a)?,
            b: eval(&self.b)?,
        })
    }
}

/// `C = P·Q*` and `D = Q·Q*`, with `Q*` the reflection of `Q`.
fn symmetrize<T: Scalar>(
    num: &EvenPoly<T>,
    den: &EvenPoly<T>,
    p: usize,
) -> (EvenPoly<T>, SymmetricDenominator<T>) {
    let reflected = den.reflect_with_degree(p);
    let c = num.mul(&reflected);
    let d = den.mul(&reflected);
    // Read the parameters off the lower half, so rounding cannot break the
    // palindrome.
    let half = d.coeff(p).lift(&ratio(1, 2)) * d.coeff(p);
    let mut params = vec![half];
    params.extend((2..=p + 1).map(|j| d.coeff(p + 1 - j)));
    (c, SymmetricDenominator::with_leading(params))
}

/// One step before rescaling: `∫ P/Q = ∫ N/E` with `deg E = p` in `t`.
/// Exact on rational input.
pub fn landen_step_unscaled<T: Scalar>(
    x: &ParameterPoint<T>,
) -> Result<(EvenPoly<T>, EvenPoly<T>)> {
    let p = x.p();
    let (c, den) = symmetrize(&x.numerator(), &x.denominator(), p);
    let n = reduce_numerator(&c, p, 0)?;
    Ok((n, build_ep(&den)))
}

/// One Landen step in floating-point arithmetic.
pub fn landen_step<T: Real>(x: &ParameterPoint<T>) -> Result<ParameterPoint<T>> {
    let p = x.p();
    let (n, e) = landen_step_unscaled(x)?;
    let (e0, ep) = (e.coeff(0), e.coeff(p));
    if !e0.is_positive_value() || !ep.is_positive_value() {
        return Err(Error::DomainExit(0));
    }
    let lambda = (e0.clone() / ep).nth_root(2 * p as u32);
    // powers[k] = λ^k
    let mut powers = vec![lambda.lift_int(1)];
    for k in 1..=2 * p {
        powers.push(powers[k - 1].clone() * lambda.clone());
    }
    let qplus: Vec<T> = (0..=p)
        .map(|i| e.coeff(i) * powers[2 * i].clone() / e0.clone())
        .collect();
    let nplus: Vec<T> = (0..p)
        .map(|i| n.coeff(i) * powers[2 * i + 1].clone() / e0.clone())
        .collect();
    let a = (1..p).map(|k| qplus[p - k].clone()).collect();
    let b = (0..p).map(|k| nplus[p - 1 - k].clone()).collect();
    ParameterPoint::new(a, b)
}

/// One exact Landen step on a normalized integrand with `power = 1`. The
/// new coefficients are rational multiples of powers of
/// `λ = (e_0/e_p)^{1/2p}`.
pub fn landen_step_exact(r: &EvenRationalIntegrand) -> Result<ParameterPoint<Expr>> {
    let x = ParameterPoint::from_integrand(r)?;
    if !x.is_positive() {
        return Err(Error::NonPositiveParameter(x.to_string_exact()));
    }
    let p = x.p();
    let (n, e) = landen_step_unscaled(&x)?;
    let (e0, ep) = (e.coeff(0), e.coeff(p));
    let ratio_e = Expr::rational(&e0 / &ep);
    let pi = p as i64;
    let a = (1..p)
        .map(|k| {
            let i = (p - k) as i64;
            ratio_e.pow(&ratio(i, pi)).scale(&(e.coeff(p - k) / &e0))
        })
        .collect();
    let b = (0..p)
        .map(|k| {
            let i = (p - 1 - k) as i64;
            ratio_e
                .pow(&ratio(2 * i + 1, 2 * pi))
                .scale(&(n.coeff(p - 1 - k) / &e0))
        })
        .collect();
    ParameterPoint::new(a, b)
}

impl ParameterPoint<BigRational> {
    fn to_string_exact(&self) -> String {
        let show = |v: &[BigRational]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("({}; {})", show(&self.a), show(&self.b))
    }
}

/// `x^{k/q}` for `x > 0`.
fn frac_pow<T: Real>(x: &T, k: u32, q: u32) -> T {
    let r = x.nth_root(q);
    let mut acc = r.lift_int(1);
    for _ in 0..k {
        acc = acc * r.clone();
    }
    acc
}

/// The explicit map for `p = 3`, with the `b_1` numerator
/// `b_0(a_2+3) + 2b_1 + b_2(a_1+3)`.
pub fn phi6<T: Real>(x: &ParameterPoint<T>) -> Result<ParameterPoint<T>> {
    if x.p() != 3 {
        return Err(Error::UnsupportedDegree(x.p()));
    }
    let (a1, a2) = (&x.a[0], &x.a[1]);
    let (b0, b1, b2) = (&x.b[0], &x.b[1], &x.b[2]);
    let c = |n: i64| a1.lift_int(n);
    let s = a1.clone() + a2.clone() + c(2);
    let na1 = c(9) + c(5) * a1.clone() + c(5) * a2.clone() + a1.clone() * a2.clone();
    let na2 = a1.clone() + a2.clone() + c(6);
    let nb0 = b0.clone() + b1.clone() + b2.clone();
    let nb1 =
        b0.clone() * (a2.clone() + c(3)) + c(2) * b1.clone() + b2.clone() * (a1.clone() + c(3));
    let nb2 = b0.clone() + b2.clone();
    ParameterPoint::new(
        vec![na1 / frac_pow(&s, 4, 3), na2 / frac_pow(&s, 2, 3)],
        vec![
            nb0 / frac_pow(&s, 2, 3),
            nb1 / s.clone(),
            nb2 / frac_pow(&s, 1, 3),
        ],
    )
}

/// The explicit map for `p = 4`.
pub fn phi8<T: Real>(x: &ParameterPoint<T>) -> Result<ParameterPoint<T>> {
    if x.p() != 4 {
        return Err(Error::UnsupportedDegree(x.p()));
    }
    let (a1, a2, a3) = (&x.a[0], &x.a[1], &x.a[2]);
    let (b0, b1, b2, b3) = (&x.b[0], &x.b[1], &x.b[2], &x.b[3]);
    let c = |n: i64| a1.lift_int(n);
    let s = a1.clone() + a2.clone() + a3.clone() + c(2);
    let a13 = a1.clone() + a3.clone();
    let na1 = a2.clone() * a13.clone()
        + c(4) * a1.clone() * a3.clone()
        + c(10) * a13.clone()
        + c(8) * (a2.clone() + c(2));
    let na2 = a1.clone() * a3.clone() + c(6) * a13.clone() + c(2) * (a2.clone() + c(10));
    let na3 = a13 + c(8);
    let nb0 = b0.clone() + b1.clone() + b2.clone() + b3.clone();
    let nb1 = b3.clone() * (c(3) * a1.clone() + a2.clone() + c(6))
        + b2.clone() * (a1.clone() + c(4))
        + b1.clone() * (a3.clone() + c(4))
        + b0.clone() * (c(3) * a3.clone() + a2.clone() + c(6));
    let nb2 = b3.clone() * (a1.clone() + c(5))
        + b2.clone()
        + b1.clone()
        + b0.clone() * (a3.clone() + c(5));
    let nb3 = b0.clone() + b3.clone();
    ParameterPoint::new(
        vec![
            na1 / frac_pow(&s, 3, 2),
            na2 / s.clone(),
            na3 / frac_pow(&s, 1, 2),
        ],
        vec![
            nb0 / frac_pow(&s, 3, 4),
            nb1 / frac_pow(&s, 5, 4),
            nb2 / frac_pow(&s, 3, 4),
            nb3 / frac_pow(&s, 1, 4),
        ],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterationStatus {
    Converged,
    MaxIterations,
    /// A coordinate left the positive orthant at the given step.
    DomainExit(usize),
}

#[derive(Clone, Debug)]
pub struct IterationResult {
    pub limit: BigFloat,
    pub integral: BigFloat,
    pub iterations: usize,
    /// Starting point followed by every iterate.
    pub trajectory: Vec<ParameterPoint<BigFloat>>,
    pub status: IterationStatus,
}

#[derive(Clone, Debug)]
pub struct IterateOptions {
    pub digits: u32,
    /// Defaults to `10^-(digits-10)`.
    pub tol: Option<BigFloat>,
    pub max_iter: usize,
}

impl Default for IterateOptions {
    fn default() -> Self {
        IterateOptions {
            digits: 50,
            tol: None,
            max_iter: 200,
        }
    }
}

fn binomial_f(n: usize, k: usize, like: &BigFloat) -> BigFloat {
    like.lift(&BigRational::from_integer(binomial(n as i64, k as i64)))
}

fn limit_of(x: &ParameterPoint<BigFloat>) -> BigFloat {
    let p = x.p();
    let sum = x.b.iter().cloned().fold(BigFloat::zero(), |a, b| a + b);
    let w = x.b[0].lift(&crate::binomial::pow2(p as i64 - 1));
    sum / w
}

fn max_rel(a: &[BigFloat], b: &[BigFloat]) -> BigFloat {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.clone() - y.clone()).abs() / x.abs())
        .fold(BigFloat::zero(), |m, v| if v > m { v } else { m })
}

/// Distance of the `a`-vector from `(C(p,1), ..., C(p,p-1))`, max-norm.
pub fn distance_to_target(x: &ParameterPoint<BigFloat>) -> BigFloat {
    let p = x.p();
    x.a.iter()
        .enumerate()
        .map(|(i, a)| (a.clone() - binomial_f(p, i + 1, a)).abs())
        .fold(BigFloat::zero(), |m, v| if v > m { v } else { m })
}

fn ratio_spread(x: &ParameterPoint<BigFloat>) -> BigFloat {
    let p = x.p();
    let r: Vec<BigFloat> =
        x.b.iter()
            .enumerate()
            .map(|(i, b)| b.clone() / binomial_f(p - 1, i, b))
            .collect();
    let lo = r
        .iter()
        .cloned()
        .fold(r[0].clone(), |m, v| if v < m { v } else { m });
    let hi = r
        .iter()
        .cloned()
        .fold(r[0].clone(), |m, v| if v > m { v } else { m });
    (hi - lo.clone()) / lo
}

/// Iterates the Landen step from a positive rational start until the point
/// is within `tol` of the binomial fixed point.
pub fn iterate(x0: &ParameterPoint<BigRational>, opts: &IterateOptions) -> Result<IterationResult> {
    if !x0.is_positive() {
        return Err(Error::NonPositiveParameter(x0.to_string_exact()));
    }
    let digits = opts.digits.max(50);
    let prec = digits_to_bits(digits);
    let tol = match &opts.tol {
        Some(t) => t.with_prec(prec),
        None => BigFloat::from_rational(
            &num_traits::pow(ratio(1, 10), (opts.digits.max(11) - 10) as usize),
            prec,
        ),
    };
    iterate_float(x0.to_bigfloat(prec), &tol, opts.max_iter)
}

fn iterate_float(
    x0: ParameterPoint<BigFloat>,
    tol: &BigFloat,
    max_iter: usize,
) -> Result<IterationResult> {
    let mut trajectory = vec![x0];
    let mut status = IterationStatus::MaxIterations;
    for step in 1..=max_iter {
        let cur = trajectory.last().expect("non-empty");
        let next = match landen_step(cur) {
            Ok(n) if n.is_positive() && n.a.iter().chain(&n.b).all(Real::is_finite_value) => n,
            _ => {
                status = IterationStatus::DomainExit(step);
                break;
            }
        };
        let converged = distance_to_target(&next) < *tol
            && max_rel(&next.b, &cur.b) < *tol
            && ratio_spread(&next) < *tol;
        trajectory.push(next);
        if converged {
            status = IterationStatus::Converged;
            break;
        }
    }
    let last = trajectory.last().expect("non-empty");
    let limit = limit_of(last);
    let half_pi = last.b[0].pi_like() / last.b[0].lift_int(2);
    Ok(IterationResult {
        integral: limit.clone() * half_pi,
        limit,
        iterations: trajectory.len() - 1,
        trajectory,
        status,
    })
}

/// Arithmetic-geometric mean of `a, b > 0`.
pub fn agm(a: &BigFloat, b: &BigFloat, digits: u32) -> Result<BigFloat> {
    if !a.is_positive_value() || !b.is_positive_value() {
        return Err(Error::NonPositiveParameter(format!("agm({a}, {b})")));
    }
    let prec = digits_to_bits(digits) + 16;
    let (mut x, mut y) = (a.with_prec(prec), b.with_prec(prec));
    let eps = BigFloat::from_rational(&crate::binomial::pow2(-(prec as i64) + 4), prec);
    let two = x.lift_int(2);
    for _ in 0..prec {
        if (x.clone() - y.clone()).abs() <= eps.clone() * x.clone() {
            break;
        }
        let nx = (x.clone() + y.clone()) / two.clone();
        y = (x * y).sqrt();
        x = nx;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrand::even_poly_from_ints;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn point(a: &[f64], b: &[f64]) -> ParameterPoint<f64> {
        ParameterPoint::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn assert_close(x: &ParameterPoint<f64>, y: &ParameterPoint<f64>, tol: f64) {
        for (u, v) in x.a.iter().chain(&x.b).zip(y.a.iter().chain(&y.b)) {
            assert!((u - v).abs() <= tol * v.abs().max(1.0), "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn fixed_points() {
        for l in [1.0, 0.25, 7.0] {
            let x6 = point(&[3.0, 3.0], &[l, 2.0 * l, l]);
            assert_close(&landen_step(&x6).unwrap(), &x6, 1e-14);
            assert_close(&phi6(&x6).unwrap(), &x6, 1e-14);
            let x8 = point(&[4.0, 6.0, 4.0], &[l, 3.0 * l, 3.0 * l, l]);
            assert_close(&landen_step(&x8).unwrap(), &x8, 1e-14);
            assert_close(&phi8(&x8).unwrap(), &x8, 1e-14);
        }
    }

    #[test]
    fn first_row_of_the_degree_six_table() {
        let x = point(&[1.0, 3000.0], &[45.0, 25000.0, 1230.0]);
        let y = landen_step(&x).unwrap();
        let expected = point(&[0.415786, 14.4465], &[126.233, 63.2884, 88.3741]);
        assert_close(&y, &expected, 5e-6);
        // b_1 = 190055/3003 exactly.
        assert!((y.b[1] - 190055.0 / 3003.0).abs() < 1e-10);
    }

    #[test]
    fn exact_step_is_rational_at_the_fixed_point() {
        let r = EvenRationalIntegrand::new(
            even_poly_from_ints(&[1, 2, 1]),
            even_poly_from_ints(&[1, 3, 3, 1]),
            1,
        )
        .unwrap();
        let y = landen_step_exact(&r).unwrap();
        let want: Vec<Expr> = [3, 3].iter().map(|&v| Expr::int(v)).collect();
        assert_eq!(y.a, want);
        assert_eq!(y.b, vec![Expr::int(1), Expr::int(2), Expr::int(1)]);
    }

    #[test]
    fn exact_step_matches_float_step() {
        let r = EvenRationalIntegrand::new(
            even_poly_from_ints(&[1230, 25000, 45]),
            even_poly_from_ints(&[1, 3000, 1, 1]),
            1,
        )
        .unwrap();
        let exact = landen_step_exact(&r).unwrap().evaluate(40).unwrap();
        let x = ParameterPoint::from_integrand(&r).unwrap().to_bigfloat(200);
        let float = landen_step(&x).unwrap();
        for (u, v) in exact
            .a
            .iter()
            .chain(&exact.b)
            .zip(float.a.iter().chain(&float.b))
        {
            assert!(((u.clone() - v.clone()) / v.clone()).abs().to_f64() < 1e-35);
        }
    }

    #[test]
    fn exact_step_rejects_bad_input() {
        let r = EvenRationalIntegrand::new(
            even_poly_from_ints(&[1]),
            even_poly_from_ints(&[2, 1, 1]),
            1,
        )
        .unwrap();
        assert_eq!(landen_step_exact(&r), Err(Error::NotNormalized));
        let r = EvenRationalIntegrand::new(
            even_poly_from_ints(&[1]),
            even_poly_from_ints(&[1, 1, 1]),
            2,
        )
        .unwrap();
        assert_eq!(landen_step_exact(&r), Err(Error::UnsupportedPower(2)));
    }

    #[test]
    fn iterate_degree_six_example() {
        let x0 = ParameterPoint::new(
            vec![rat(1), rat(3000)],
            vec![rat(45), rat(25000), rat(1230)],
        )
        .unwrap();
        let opts = IterateOptions {
            tol: Some(BigFloat::from_f64(1e-4, 64)),
            ..Default::default()
        };
        let res = iterate(&x0, &opts).unwrap();
        assert_eq!(res.status, IterationStatus::Converged);
        assert!(res.iterations <= 8);
        assert!((res.limit.to_f64() - 69.9572).abs() < 5e-5);
        assert!((res.integral.to_f64() - 109.889).abs() < 5e-4);
    }

    #[test]
    fn iterate_at_fixed_point() {
        let x0 = ParameterPoint::new(vec![rat(3), rat(3)], vec![rat(1), rat(2), rat(1)]).unwrap();
        let res = iterate(&x0, &IterateOptions::default()).unwrap();
        assert_eq!(res.status, IterationStatus::Converged);
        assert!(res.iterations <= 1);
        let err = (res.integral - BigFloat::pi(200) / BigFloat::from_i64(2, 64)).abs();
        assert!(err.to_f64() < 1e-45);
    }

    #[test]
    fn iterate_reports_max_iterations() {
        let x0 = ParameterPoint::new(
            vec![rat(1), rat(3000)],
            vec![rat(45), rat(25000), rat(1230)],
        )
        .unwrap();
        let res = iterate(
            &x0,
            &IterateOptions {
                max_iter: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.status, IterationStatus::MaxIterations);
        assert_eq!(res.trajectory.len(), 3);
    }

    #[test]
    fn iterate_rejects_nonpositive_start() {
        let x0 = ParameterPoint::new(vec![rat(-1), rat(3)], vec![rat(1), rat(2), rat(1)]).unwrap();
        assert!(matches!(
            iterate(&x0, &IterateOptions::default()),
            Err(Error::NonPositiveParameter(_))
        ));
    }

    #[test]
    fn agm_basics() {
        let a = BigFloat::from_i64(3, 200);
        assert_eq!(agm(&a, &a, 50).unwrap().to_decimal(40), a.to_decimal(40));
        let b = BigFloat::from_i64(5, 200);
        let m1 = agm(&a, &b, 50).unwrap();
        let two = BigFloat::from_i64(2, 64);
        let m2 = agm(&((a.clone() + b.clone()) / two), &(a * b).sqrt(), 50).unwrap();
        assert_eq!(m1.to_decimal(45), m2.to_decimal(45));
    }

    fn positive() -> impl Strategy<Value = f64> {
        (1u32..2000).prop_map(|k| k as f64 / 100.0)
    }

    proptest! {
        #[test]
        fn phi6_agrees_with_step(a in prop::collection::vec(positive(), 2), b in prop::collection::vec(positive(), 3)) {
            let x = point(&a, &b);
            let (u, v) = (phi6(&x).unwrap(), landen_step(&x).unwrap());
            for (s, t) in u.a.iter().chain(&u.b).zip(v.a.iter().chain(&v.b)) {
                prop_assert!((s - t).abs() <= 1e-10 * t.abs().max(1.0));
            }
        }

        #[test]
        fn phi8_agrees_with_step(a in prop::collection::vec(positive(), 3), b in prop::collection::vec(positive(), 4)) {
            let x = point(&a, &b);
            let (u, v) = (phi8(&x).unwrap(), landen_step(&x).unwrap());
            for (s, t) in u.a.iter().chain(&u.b).zip(v.a.iter().chain(&v.b)) {
                prop_assert!((s - t).abs() <= 1e-10 * t.abs().max(1.0));
            }
        }

        #[test]
        fn steps_stay_positive(a in prop::collection::vec(positive(), 3), b in prop::collection::vec(positive(), 4)) {
            prop_assert!(landen_step(&point(&a, &b)).unwrap().is_positive());
        }

        #[test]
        fn degree_six_contracts(a in prop::collection::vec(positive(), 2)) {
            let x = point(&a, &[1.0, 1.0, 1.0]);
            let y = landen_step(&x).unwrap();
            let d = |p: &ParameterPoint<f64>| (p.a[0] - 3.0).abs().max((p.a[1] - 3.0).abs());
            prop_assert!(d(&y) <= 0.5 * d(&x) + 1e-12);
        }
    }
}
